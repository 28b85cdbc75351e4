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

#include <random>

#include "oracles.hpp"
#include "ramlab/factor.hpp"

using namespace ramlab;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }

oracle::Coeffs coeffs(const RatPoly& f) { return f.coeffs(); }

RatPoly random_poly(std::mt19937_64& rng, int deg, long bound, bool monic) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Rat> c(deg + 1);
  for (auto& v : c) v = d(rng);
  if (monic) c[deg] = 1;
  if (c[deg] == 0) c[deg] = 1;
  return RatPoly(std::move(c));
}

}  // namespace

TEST(Parse, SymbolicAndListAgree) {
  EXPECT_EQ(P("x^3-2"), P("[-2,0,0,1]"));
  EXPECT_EQ(P("x^2+x+1"), P("[1, 1, 1]"));
  EXPECT_EQ(P("3*x^2 - x/2 + 1"), RatPoly(std::vector<Rat>{1, Rat(-1, 2), 3}));
  EXPECT_EQ(P("(x-1)*(x+1)"), P("x^2-1"));
  EXPECT_EQ(P("(x+1)^3"), P("x^3+3*x^2+3*x+1"));
}

TEST(Parse, RejectsGarbage) {
  EXPECT_THROW(P("x^^2"), std::invalid_argument);
  EXPECT_THROW(P("[1,2"), std::invalid_argument);
  EXPECT_THROW(P("y+1"), std::invalid_argument);
  EXPECT_THROW(P(""), std::invalid_argument);
}

TEST(Parse, PrintRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    RatPoly f = random_poly(rng, 1 + i % 7, 20, false);
    EXPECT_EQ(parse_poly(to_string(f)), f);
    EXPECT_EQ(parse_poly(to_coeff_list(f)), f);
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(P("x^2-1"), P("x-1")), P("x-1"));
  EXPECT_EQ(poly_gcd(P("2*x^2+4"), RatPoly()), P("x^2+2"));
  EXPECT_EQ(poly_gcd(P("x^2+1"), P("x^2-1")), P("1"));
  EXPECT_TRUE(poly_gcd(RatPoly(), RatPoly()).is_zero());
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P("x-2"), P("x-3")), -1);
  EXPECT_EQ(resultant(P("x^2+1"), P("x")), 1);
  EXPECT_EQ(resultant(P("x^2-2"), P("x^2-2")), 0);
  EXPECT_THROW(resultant(RatPoly(), P("x")), std::invalid_argument);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    RatPoly a = random_poly(rng, 1 + i % 5, 9, false), b = random_poly(rng, 1 + (i / 5) % 4, 9, false);
    EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(coeffs(a), coeffs(b)))
        << to_string(a) << " | " << to_string(b);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(P("x^2+1")), -4);
  EXPECT_EQ(discriminant(P("x^3-2")), -108);
  EXPECT_EQ(discriminant(P("x^2-x-1")), 5);
  EXPECT_THROW(discriminant(P("7")), std::invalid_argument);
}

TEST(Discriminant, VanishesIffRepeatedFactor) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    RatPoly g = random_poly(rng, 1 + i % 3, 5, true);
    RatPoly h = random_poly(rng, 1 + i % 2, 5, true);
    RatPoly f = (i % 2) ? g * g * h : g * h;
    bool repeated = poly_gcd(f, f.derivative()).degree() > 0;
    EXPECT_EQ(discriminant(f) == 0, repeated) << to_string(f);
  }
}

TEST(FactorModP, Examples) {
  auto a = factor_mod_p(P("x^2+1"), 5);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].first, ModPPoly(5, {2, 1}));
  EXPECT_EQ(a[1].first, ModPPoly(5, {3, 1}));
  auto b = factor_mod_p(P("x^2+1"), 3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].first.degree(), 2);
  auto c = factor_mod_p(P("x^3-2"), 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].first, ModPPoly(3, {1, 1}));
  EXPECT_EQ(c[0].second, 3);
  EXPECT_THROW(factor_mod_p(P("x^2+1"), 4), std::invalid_argument);
  EXPECT_THROW(factor_mod_p(P("3*x^2+3"), 3), std::invalid_argument);
}

TEST(FactorModP, LinearFactorsMatchBruteForceRoots) {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 97}) {
    for (int i = 0; i < 12; ++i) {
      RatPoly f = random_poly(rng, 2 + i % 6, 30, true);
      std::vector<long> fl;
      for (const auto& c : f.coeffs()) fl.push_back(c.get_num().get_si());
      std::vector<std::uint64_t> roots;
      ModPPoly prod = ModPPoly::constant(p, 1);
      for (const auto& [g, m] : factor_mod_p(f, p)) {
        if (g.degree() == 1) roots.push_back((p - g.coeff(0)) % p);
        for (int k = 0; k < m; ++k) prod = prod * g;
        // irreducibility: no roots in F_{p^i} for i < deg
        for (int d = 1; 2 * d <= g.degree(); ++d) {
          ModPPoly xp = modp_powmod(ModPPoly::x(p), detail::pow_int(p, d), g) - ModPPoly::x(p);
          EXPECT_TRUE(modp_gcd(g, xp).is_one());
        }
      }
      std::sort(roots.begin(), roots.end());
      EXPECT_EQ(roots, oracle::roots_mod_p(fl, p)) << to_string(f) << " mod " << p;
      EXPECT_EQ(prod, ModPPoly::reduce(p, f));
    }
  }
}

TEST(HenselLift, Examples) {
  auto lifted = hensel_lift(P("x^2+1"), {ModPPoly(5, {2, 1}), ModPPoly(5, {3, 1})}, 2);
  ASSERT_EQ(lifted.size(), 2u);
  EXPECT_EQ(lifted[0], (ZPoly{7, 1}));
  EXPECT_EQ(lifted[1], (ZPoly{18, 1}));
  // product is x^2+1 mod 25
  RatPoly prod = RatPoly({7, 1}) * RatPoly({18, 1});
  EXPECT_EQ(prod.coeff(0).get_num() % 25, 1);
  EXPECT_EQ(prod.coeff(1).get_num() % 25, 0);

  auto same = hensel_lift(P("x^2+1"), {ModPPoly(5, {2, 1}), ModPPoly(5, {3, 1})}, 1);
  EXPECT_EQ(same[0], (ZPoly{2, 1}));
  auto exact = hensel_lift(P("x^2-1"), {ModPPoly(3, {2, 1}), ModPPoly(3, {1, 1})}, 2);
  EXPECT_EQ(exact[0], (ZPoly{8, 1}));
  EXPECT_EQ(exact[1], (ZPoly{1, 1}));
  EXPECT_THROW(hensel_lift(P("x^2+2*x+1"), {ModPPoly(3, {1, 1}), ModPPoly(3, {1, 1})}, 2), std::invalid_argument);
}

TEST(HenselLift, ReducesToInputAndMultipliesToF) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 15; ++i) {
    RatPoly f = random_poly(rng, 3 + i % 4, 20, true);
    const std::uint64_t p = 7;
    auto fac = factor_mod_p(f, p);
    bool sqf = std::all_of(fac.begin(), fac.end(), [](const auto& x) { return x.second == 1; });
    if (!sqf || fac.size() < 2) continue;
    std::vector<ModPPoly> parts;
    for (const auto& [g, m] : fac) parts.push_back(g);
    const int k = 4;
    auto lifted = hensel_lift(f, parts, k);
    Int pk = 2401;
    std::vector<Int> prod{1};
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      EXPECT_EQ(ModPPoly::reduce(p, RatPoly(std::vector<Rat>(lifted[j].begin(), lifted[j].end()))), parts[j]);
      std::vector<Int> next(prod.size() + lifted[j].size() - 1, 0);
      for (std::size_t a = 0; a < prod.size(); ++a)
        for (std::size_t b = 0; b < lifted[j].size(); ++b) next[a + b] += prod[a] * lifted[j][b];
      prod = next;
    }
    for (int d = 0; d <= f.degree(); ++d) {
      Int diff = prod[d] - f.coeff(d).get_num();
      EXPECT_EQ(Int(diff % pk), 0) << to_string(f);
    }
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(FactorOverQ, Examples) {
  auto a = factor_over_Q(P("x^4-1"));
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], P("x-1"));
  EXPECT_EQ(a[1], P("x+1"));
  EXPECT_EQ(a[2], P("x^2+1"));
  EXPECT_EQ(factor_over_Q(P("x^3-2")).size(), 1u);
  EXPECT_EQ(factor_over_Q(P("x^4+1")).size(), 1u);
  // x^4+1 has no rational root and no integer quadratic factor
  EXPECT_FALSE(oracle::has_quadratic_factor({1, 0, 0, 0, 1}, 4));
  EXPECT_TRUE(oracle::has_quadratic_factor({4, 0, 0, 0, 1}, 4));  // x^4+4 control
  EXPECT_EQ(factor_over_Q(P("x^4+4")).size(), 2u);
}

TEST(FactorOverQ, RecoversKnownFactors) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    RatPoly g = random_poly(rng, 1 + i % 4, 12, true), h = random_poly(rng, 2 + i % 3, 12, true);
    if (!is_irreducible_over_Q(g) || !is_irreducible_over_Q(h) || g == h) continue;
    auto fac = factor_over_Q(g * h);
    ASSERT_EQ(fac.size(), 2u) << to_string(g * h);
    bool match = (fac[0] == g && fac[1] == h) || (fac[0] == h && fac[1] == g);
    EXPECT_TRUE(match);
    RatPoly prod = RatPoly::constant(1);
    for (const auto& q : fac) prod = prod * q;
    EXPECT_EQ(prod, g * h);
  }
}

TEST(FactorOverQ, ProductEqualsInputWithMultiplicity) {
  RatPoly f = P("(x^2-2)^2*(x+3)*(x^3-x-1)");
  RatPoly prod = RatPoly::constant(1);
  for (const auto& q : factor_over_Q(f)) prod = prod * q;
  EXPECT_EQ(prod, f);
  EXPECT_EQ(factor_over_Q(P("6*x^2-6")).size(), 2u);
}
