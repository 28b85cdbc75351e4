/*
   Copyright 2026 The ramlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "ramlab/prime.hpp"

using namespace ramlab;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }

using Shape = std::multiset<std::pair<int, int>>;

Shape shape_of(const std::vector<PrimeIdeal>& primes) {
  Shape s;
  for (const auto& q : primes) s.insert({q.e, q.f});
  return s;
}

NFElement random_integral(const Order& o, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVec c(o.degree());
  for (auto& v : c) v = d(rng);
  return o.element(c);
}

}  // namespace

TEST(Caps, Enforced) {
  EXPECT_THROW(check_caps(25, 3), CapExceeded);
  EXPECT_THROW(check_caps(4, 1009), CapExceeded);
  EXPECT_THROW(check_caps(4, 9), std::invalid_argument);
  EXPECT_NO_THROW(check_caps(24, 997));
  EXPECT_THROW(decompose_prime(NumberField(P("x^2+1")), 1009), CapExceeded);
}

TEST(Dedekind, Examples) {
  auto a = dedekind_criterion(P("x^2+1"), 5);
  EXPECT_TRUE(a.p_maximal);
  EXPECT_EQ(Shape(a.shape.begin(), a.shape.end()), (Shape{{1, 1}, {1, 1}}));
  EXPECT_FALSE(dedekind_criterion(P("x^3-x^2-2*x-8"), 2).p_maximal);
  auto c = dedekind_criterion(P("x^3-2"), 3);
  EXPECT_TRUE(c.p_maximal);
  EXPECT_EQ(Shape(c.shape.begin(), c.shape.end()), (Shape{{3, 1}}));
  EXPECT_FALSE(dedekind_criterion(P("x^2+3"), 2).p_maximal);  // (1+sqrt(-3))/2 is integral
}

TEST(PMaximalOrder, GaussianIntegersAtTwo) {
  NumberField k(P("x^2+1"));
  Order o = p_maximal_order(k, 2);
  EXPECT_TRUE(o.is_p_maximal(2));
  EXPECT_EQ(o.index_over_equation_order(), 1);
}

TEST(PMaximalOrder, DedekindNonMonogenicExample) {
  NumberField k(P("x^3-x^2-2*x-8"));
  Order o = p_maximal_order(k, 2);
  EXPECT_EQ(o.index_over_equation_order(), 2);
  NFElement t = k.generator();
  NFElement w = Rat(1, 2) * (t * t + t);
  ASSERT_TRUE(o.integral_coords(w).has_value());
  EXPECT_TRUE(o.integral_coords(t).has_value());
  // w is an algebraic integer and {1, t, w} is closed under products
  EXPECT_TRUE(min_poly(w).is_integral());
  Order expected(k, {k.one().coords(), t.coords(), w.coords()});
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(expected.integral_coords(o.basis_element(i)).has_value());
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(o.integral_coords(expected.basis_element(i)).has_value());
}

TEST(PMaximalOrder, IndexIsPowerOfP) {
  for (const char* s : {"x^2+3", "x^2-5", "x^3-x^2-2*x-8", "x^4-2*x^2+9", "x^6+243", "x^4+x^3+x^2+x+1", "x^2-12"}) {
    NumberField k(P(s));
    for (std::uint64_t p : {2, 3, 5}) {
      Rat idx = p_maximal_order(k, p).index_over_equation_order();
      ASSERT_TRUE(is_integer(idx));
      Int n = idx.get_num();
      while (n % static_cast<unsigned long>(p) == 0) n /= static_cast<unsigned long>(p);
      EXPECT_EQ(n, 1) << s << " at " << p;
    }
  }
}

TEST(Decompose, GaussianIntegersAgainstQuotientRing) {
  NumberField k(P("x^2+1"));
  for (std::uint64_t p : {2, 3, 5, 13}) {
    auto primes = decompose_prime(k, p);
    EXPECT_EQ(static_cast<int>(primes.size()), oracle::maximal_ideals_quadratic(0, 1, p)) << p;
  }
  EXPECT_EQ(shape_of(decompose_prime(k, 5)), (Shape{{1, 1}, {1, 1}}));
  EXPECT_EQ(shape_of(decompose_prime(k, 2)), (Shape{{2, 1}}));
  EXPECT_EQ(shape_of(decompose_prime(k, 3)), (Shape{{1, 2}}));
}

TEST(Decompose, KnownShapes) {
  struct Case {
    const char* f;
    std::uint64_t p;
    Shape s;
  };
  const std::vector<Case> cases = {
      {"x^3-x^2-2*x-8", 2, {{1, 1}, {1, 1}, {1, 1}}},
      {"x^6+243", 3, {{6, 1}}},
      {"x^4+x^3+x^2+x+1", 5, {{4, 1}}},
      {"x^8-2", 2, {{8, 1}}},
      {"x^4-2*x^2+9", 2, {{4, 1}}},
      {"x^4-2*x^2+9", 3, {{1, 2}, {1, 2}}},
      {"x^3-2", 3, {{3, 1}}},
      {"x^2+x+1", 3, {{2, 1}}},
      {"x^3-3*x^2+3*x+6", 31, {{1, 3}}},
  };
  for (const auto& c : cases)
    EXPECT_EQ(shape_of(decompose_prime(NumberField(P(c.f)), c.p)), c.s) << c.f << " at " << c.p;
}

TEST(Decompose, FundamentalIdentityAndDedekindAgreement) {
  const std::vector<const char*> fields = {"x^2+1", "x^2-2", "x^3-2", "x^3-3", "x^3-x^2-2*x-8", "x^4-2*x^2+9",
                                           "x^4+x^3+x^2+x+1", "x^4-3", "x^6+3", "x^5-x-1", "x^6+x^5+x^4+x^3+x^2+x+1"};
  const long before = decomposition_counter().load();
  int runs = 0;
  for (const char* s : fields) {
    NumberField k(P(s));
    for (std::uint64_t p = 2; p < 60; p = next_prime(p)) {
      auto primes = decompose_prime(k, p);
      int sum = 0;
      for (const auto& q : primes) {
        sum += q.e * q.f;
        EXPECT_GE(q.e, 1);
        EXPECT_GE(q.f, 1);
      }
      EXPECT_EQ(sum, k.degree()) << s << " at " << p;
      auto dk = dedekind_criterion(k.defining_poly(), p);
      if (dk.p_maximal) EXPECT_EQ(shape_of(primes), Shape(dk.shape.begin(), dk.shape.end())) << s << " at " << p;
      ++runs;
    }
  }
  EXPECT_EQ(decomposition_counter().load() - before, runs);
}

TEST(Decompose, RequiresCertifiedOrder) {
  NumberField k(P("x^2+3"));
  EXPECT_THROW(decompose_prime(Order::equation_order(k), 3), std::invalid_argument);
}

TEST(Valuation, DefiningProperties) {
  for (const char* s : {"x^2+1", "x^3-3", "x^4-2*x^2+9", "x^3-x^2-2*x-8", "x^6+243"}) {
    NumberField k(P(s));
    for (std::uint64_t p : {2, 3, 5}) {
      auto primes = decompose_prime(k, p);
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& Q = primes[i];
        EXPECT_EQ(valuation(k.from_rat(static_cast<long>(p)), Q), Q.e);
        EXPECT_EQ(valuation(Q.uniformizer_element(), Q), 1);
        EXPECT_EQ(valuation(k.zero(), Q), kInfinity);
        EXPECT_EQ(valuation(k.from_rat(Rat(1, static_cast<long>(p))), Q), -Q.e);
        // <p, second_gen> has valuation profile 1 at Q, 0 elsewhere
        EXPECT_EQ(valuation(Q.second_gen_element(), Q), 1) << s << " at " << p;
        for (std::size_t j = 0; j < primes.size(); ++j)
          if (j != i) EXPECT_EQ(valuation(Q.second_gen_element(), primes[j]), 0);
      }
    }
  }
  NumberField qi(P("x^2+1"));
  auto Q2 = decompose_prime(qi, 2);
  EXPECT_EQ(valuation(qi.from_rat(2), Q2[0]), 2);
  EXPECT_EQ(valuation(qi.one() + qi.generator(), Q2[0]), 1);
}

TEST(Valuation, AdditivityAndUltrametric) {
  std::mt19937_64 rng(59);
  for (const char* s : {"x^2+1", "x^3-3", "x^4-2*x^2+9", "x^4+x^3+x^2+x+1"}) {
    NumberField k(P(s));
    for (std::uint64_t p : {2, 3, 5}) {
      Order o = p_maximal_order(k, p);
      for (const auto& Q : decompose_prime(o, p)) {
        for (int t = 0; t < 10; ++t) {
          NFElement a = random_integral(o, rng, 30), b = random_integral(o, rng, 30);
          if (a.is_zero() || b.is_zero()) continue;
          EXPECT_EQ(valuation(a * b, Q), valuation(a, Q) + valuation(b, Q));
          EXPECT_EQ(valuation(a / b, Q), valuation(a, Q) - valuation(b, Q));
          if (!(a + b).is_zero()) EXPECT_GE(valuation(a + b, Q), std::min(valuation(a, Q), valuation(b, Q)));
        }
      }
    }
  }
}

TEST(Restrict, TowerMultiplicativityAndValuations) {
  struct Case {
    const char* sub;
    const char* big;
    std::uint64_t p;
  };
  const std::vector<Case> cases = {
      {"x^2+1", "x^4-2*x^2+9", 2}, {"x^2-2", "x^4-2*x^2+9", 2}, {"x^2+1", "x^4-2*x^2+9", 3}, {"x^2+1", "x^4+1", 2},
      {"x^2+x+1", "x^6+3", 3},     {"x^3-3", "x^6+3", 3},       {"x^2+x+1", "x^6+3", 7}};
  std::mt19937_64 rng(61);
  for (const auto& c : cases) {
    NumberField k(P(c.sub)), l(P(c.big));
    auto embs = embed_subfield(k, l);
    ASSERT_FALSE(embs.empty()) << c.sub << " in " << c.big;
    auto lp = decompose_prime(l, c.p);
    auto kp = decompose_prime(k, c.p);
    Order ok = p_maximal_order(k, c.p);
    for (const auto& iota : embs)
      for (const auto& Q : lp) {
        const PrimeIdeal& Pk = restrict_prime(Q, iota, kp);
        const int eqp = relative_ramification(Q, iota, Pk);
        EXPECT_EQ(Q.e, eqp * Pk.e) << c.sub << " in " << c.big << " at " << c.p;
        for (int t = 0; t < 5; ++t) {
          NFElement x = random_integral(ok, rng, 20);
          if (x.is_zero()) continue;
          EXPECT_EQ(valuation(x, Pk) * eqp, valuation(iota.apply(x), Q));
        }
      }
  }
}

TEST(Restrict, CubeRootOfThreeFieldOverCubeRoot) {
  NumberField l(P("x^6+3")), k1(P("x^3-3"));
  auto lp = decompose_prime(l, 3);
  ASSERT_EQ(lp.size(), 1u);
  EXPECT_EQ(lp[0].e, 6);
  auto embs = embed_subfield(k1, l);
  ASSERT_EQ(embs.size(), 3u);
  for (const auto& iota : embs) {
    PrimeIdeal p1 = restrict_prime(lp[0], iota);
    EXPECT_EQ(p1.e, 3);
    EXPECT_EQ(relative_ramification(lp[0], iota, p1), 2);
  }
  // identity embedding restricts Q to itself
  EmbeddingMap id(l, l.generator());
  EXPECT_EQ(restrict_prime(lp[0], id).e, 6);
}
