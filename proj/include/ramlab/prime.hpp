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

// Prime ideals above a rational prime in a p-maximal order: decomposition,
// valuations, two-element generators, uniformizers and restriction along
// field embeddings.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/order.hpp"

namespace ramlab {

constexpr long kInfinity = std::numeric_limits<long>::max();

struct PrimeIdeal {
  std::shared_ptr<const Order> order;
  std::uint64_t p = 0;
  int e = 0;
  int f = 0;
  IntVec second_gen;   ///< P = <p, second_gen>, order coordinates
  IntVec uniformizer;  ///< element of valuation exactly 1
  FpSubspace residue;  ///< P / pO inside O / pO
  IntVec helper;       ///< a in O \ pO with a*P inside pO

  const NumberField& field() const { return order->field(); }
  NFElement second_gen_element() const { return order->element(second_gen); }
  NFElement uniformizer_element() const { return order->element(uniformizer); }
  bool contains(const IntVec& x) const {
    FpVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_u64(x[i], p);
    return residue.contains(r);
  }
};

/// Number of decompositions performed and checked against sum e_i f_i = n.
inline std::atomic<long>& decomposition_counter() {
  static std::atomic<long> count{0};
  return count;
}

namespace detail {

inline bool divisible_by(const IntVec& v, std::uint64_t p) {
  for (const auto& x : v)
    if (mod_u64(x, p) != 0) return false;
  return true;
}

inline bool is_zero_int(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// v_P(x) for x in O, using the helper a: x*a/p stays in O exactly v_P(x) times.
inline long valuation_int(IntVec x, const Order& o, std::uint64_t p, int e, const IntVec& helper) {
  if (is_zero_int(x)) return kInfinity;
  const Int pz = static_cast<unsigned long>(p);
  long v = 0;
  while (divisible_by(x, p)) {
    for (auto& c : x) c /= pz;
    v += e;
  }
  for (;;) {
    IntVec y = o.mul(x, helper);
    if (!divisible_by(y, p)) return v;
    for (auto& c : y) c /= pz;
    x = std::move(y);
    ++v;
  }
}

/// First-dependency minimal polynomial of z in an F_p-algebra with unit u.
template <class Mul>
ModPPoly fp_min_poly(const FpVec& z, const FpVec& u, std::uint64_t p, Mul mul) {
  FpMatrix powers{u};
  for (;;) {
    FpVec next = mul(powers.back(), z);
    powers.push_back(next);
    FpMatrix ker = fp_left_kernel(powers, p);
    if (!ker.empty()) {
      FpVec c = ker[0];
      std::uint64_t inv = invmod_u64(c.back(), p);
      for (auto& x : c) x = x * inv % p;
      return ModPPoly(p, c);
    }
  }
}

/// Semisimple quotient B = A / J with basis the non-pivot coordinates of J.
class SemisimpleQuotient {
 public:
  SemisimpleQuotient(const OrderModP& a, const FpSubspace& j) : a_(a), j_(j) {
    std::vector<bool> piv(a.dim(), false);
    for (int c : j.pivots()) piv[c] = true;
    for (int c = 0; c < a.dim(); ++c)
      if (!piv[c]) free_.push_back(c);
  }
  int dim() const { return static_cast<int>(free_.size()); }
  std::uint64_t p() const { return a_.p(); }

  FpVec lift(const FpVec& b) const {
    FpVec x(a_.dim(), 0);
    for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = b[i];
    return x;
  }
  FpVec project(const FpVec& x) const {
    FpVec r = j_.reduce(x);
    FpVec b(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) b[i] = r[free_[i]];
    return b;
  }
  FpVec mul(const FpVec& x, const FpVec& y) const { return project(a_.mul(lift(x), lift(y))); }
  FpVec one() const { return project(a_.one()); }
  FpVec unit(int i) const {
    FpVec b(dim(), 0);
    b[i] = 1;
    return b;
  }
  FpVec pow(FpVec x, std::uint64_t e) const {
    FpVec r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      e >>= 1;
      if (e) x = mul(x, x);
    }
    return r;
  }

  /// Fixed points of Frobenius: the subalgebra F_p^r, r = number of factors.
  FpMatrix berlekamp() const {
    const std::uint64_t q = p();
    FpMatrix m;
    for (int i = 0; i < dim(); ++i) {
      FpVec row = pow(unit(i), q);
      row[i] = (row[i] + q - 1) % q;
      m.push_back(std::move(row));
    }
    return fp_left_kernel(m, q);
  }

  /// Primitive idempotents, split by the Berlekamp basis.
  std::vector<FpVec> primitive_idempotents() const {
    const std::uint64_t q = p();
    FpMatrix s = berlekamp();
    std::vector<FpVec> idems{one()};
    auto sub = [&](FpVec x, const FpVec& y, std::uint64_t c) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + (q - c % q) * y[i]) % q;
      return x;
    };
    for (const auto& z : s) {
      std::vector<FpVec> next;
      for (const auto& e : idems) {
        FpVec ze = mul(z, e);
        ModPPoly mp = fp_min_poly(ze, e, q, [&](const FpVec& x, const FpVec& y) { return mul(x, y); });
        std::vector<std::uint64_t> roots = modp_roots(mp);
        if (static_cast<int>(roots.size()) != mp.degree()) throw InternalFault("Berlekamp element does not split");
        if (roots.size() == 1) {
          next.push_back(e);
          continue;
        }
        for (std::uint64_t c : roots) {
          FpVec eps = e;
          std::uint64_t denom = 1;
          for (std::uint64_t c2 : roots) {
            if (c2 == c) continue;
            eps = mul(eps, sub(ze, e, c2));
            denom = denom * ((c + q - c2) % q) % q;
          }
          std::uint64_t inv = invmod_u64(denom, q);
          for (auto& x : eps) x = x * inv % q;
          next.push_back(std::move(eps));
        }
      }
      idems = std::move(next);
    }
    if (idems.size() != s.size()) throw InternalFault("idempotent count differs from Berlekamp dimension");
    return idems;
  }

 private:
  const OrderModP& a_;
  const FpSubspace& j_;
  std::vector<int> free_;
};

/// Lifts an idempotent modulo the nilradical to an exact idempotent of A.
inline FpVec lift_idempotent(const OrderModP& a, FpVec e) {
  const std::uint64_t p = a.p();
  for (;;) {
    FpVec e2 = a.mul(e, e);
    if (e2 == e) return e;
    FpVec e3 = a.mul(e2, e);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (3 * e2[i] + (p - 2) * e3[i] % p) % p;
  }
}

inline IntVec to_int(const FpVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<unsigned long>(v[i]);
  return out;
}

inline bool int_vec_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// v_P(x); kInfinity for x = 0. Non-integral x is handled through its
/// rational denominator.
inline long valuation(const NFElement& x, const PrimeIdeal& P) {
  if (x.field() != P.field()) throw std::invalid_argument("valuation: element from another field");
  if (x.is_zero()) return kInfinity;
  RatVec c = P.order->coords(x);
  Int d = 1;
  for (const auto& v : c) d = lcm(d, Int(v.get_den()));
  IntVec y;
  for (const auto& v : c) y.push_back(Int(v.get_num() * (d / v.get_den())));
  return detail::valuation_int(std::move(y), *P.order, P.p, P.e, P.helper) -
         static_cast<long>(P.e) * p_adic_valuation(d, P.p);
}

inline long valuation(const IntVec& x, const PrimeIdeal& P) {
  return detail::valuation_int(x, *P.order, P.p, P.e, P.helper);
}

/// True when v_P(x) >= k.
inline bool valuation_at_least(const NFElement& x, const PrimeIdeal& P, long k) { return valuation(x, P) >= k; }

/// All primes of O above p, sorted by (f, e) then by second generator.
/// Checks the fundamental identity sum e_i f_i = n.
inline std::vector<PrimeIdeal> decompose_prime(const Order& order, std::uint64_t p) {
  if (!order.is_p_maximal(p)) throw std::invalid_argument("decompose_prime: order is not certified p-maximal");
  auto o = std::make_shared<const Order>(order);
  const int n = o->degree();
  OrderModP a(*o, p);
  FpSubspace rad = a.radical();
  detail::SemisimpleQuotient b(a, rad);
  std::vector<FpVec> idems = b.primitive_idempotents();

  std::vector<PrimeIdeal> primes;
  std::vector<FpVec> local_units;
  for (const auto& eps : idems) {
    PrimeIdeal P;
    P.order = o;
    P.p = p;
    FpMatrix gens = rad.basis();
    FpVec comp = b.one();
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = (comp[i] + p - eps[i]) % p;
    for (int j = 0; j < b.dim(); ++j) gens.push_back(b.lift(b.mul(comp, b.unit(j))));
    P.residue = FpSubspace(gens, n, p);
    P.f = n - P.residue.dim();
    FpMatrix stacked(n, FpVec());
    for (const auto& g : P.residue.basis()) {
      FpMatrix m = a.mult_matrix(g);
      for (int i = 0; i < n; ++i) stacked[i].insert(stacked[i].end(), m[i].begin(), m[i].end());
    }
    FpMatrix ker = fp_left_kernel(stacked, p);
    if (ker.empty()) throw InternalFault("no inverse-ideal helper");
    P.helper = detail::to_int(ker[0]);
    IntVec pv = o->one();
    for (auto& c : pv) c *= static_cast<unsigned long>(p);
    // v_P(p) with e unknown: count helper steps on 1 scaled by p
    {
      IntVec x = pv;
      long v = 0;
      for (;;) {
        IntVec y = o->mul(x, P.helper);
        if (!detail::divisible_by(y, p)) break;
        for (auto& c : y) c /= Int(static_cast<unsigned long>(p));
        x = std::move(y);
        ++v;
      }
      P.e = static_cast<int>(v);
    }
    if (P.e < 1) throw InternalFault("prime with ramification index 0");
    local_units.push_back(detail::lift_idempotent(a, b.lift(eps)));
    primes.push_back(std::move(P));
  }

  int total = 0;
  for (const auto& P : primes) total += P.e * P.f;
  if (total != n) throw InternalFault("fundamental identity violated: sum e f = " + std::to_string(total));
  ++decomposition_counter();

  for (std::size_t i = 0; i < primes.size(); ++i) {
    PrimeIdeal& P = primes[i];
    const FpVec& E = local_units[i];
    if (fp_rank(a.mult_matrix(E), p) != P.e * P.f) throw InternalFault("local factor dimension differs from e f");
    FpVec pi0;
    if (P.residue.dim() == 0) pi0.assign(n, 0);  // inert: P = pO
    for (const auto& g : P.residue.basis())
      if (P.e == 1 || valuation(detail::to_int(g), P) == 1) {
        pi0 = g;
        break;
      }
    if (pi0.empty()) throw InternalFault("no element of valuation one in the residue basis");
    FpVec beta = a.mul(E, pi0);
    for (int k = 0; k < n; ++k) beta[k] = (beta[k] + a.one()[k] + p - E[k]) % p;
    P.second_gen = detail::to_int(beta);
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (j != i && primes[j].contains(P.second_gen)) throw InternalFault("second generator lies in another prime");
    for (std::uint64_t c = 0; c < p; ++c) {
      IntVec u = P.second_gen;
      IntVec one = o->one();
      for (int k = 0; k < n; ++k) u[k] += one[k] * static_cast<unsigned long>(c * p);
      if (valuation(u, P) == 1) {
        P.uniformizer = std::move(u);
        break;
      }
    }
    if (P.uniformizer.empty()) throw InternalFault("uniformizer search failed");
    P.second_gen = P.uniformizer;  // v = 1 here, v = 0 at the other primes
  }
  std::sort(primes.begin(), primes.end(), [](const PrimeIdeal& x, const PrimeIdeal& y) {
    if (x.f != y.f) return x.f < y.f;
    if (x.e != y.e) return x.e < y.e;
    return detail::int_vec_less(x.second_gen, y.second_gen);
  });
  return primes;
}

inline std::vector<PrimeIdeal> decompose_prime(const NumberField& k, std::uint64_t p, const Caps& caps = {}) {
  check_caps(k.degree(), p, caps);
  return decompose_prime(p_maximal_order(k, p), p);
}

/// The prime of K below Q along iota, chosen among the given primes of K above p.
inline const PrimeIdeal& restrict_prime(const PrimeIdeal& Q, const EmbeddingMap& iota,
                                        const std::vector<PrimeIdeal>& candidates) {
  if (iota.target() != Q.field()) throw std::invalid_argument("restrict_prime: embedding target differs");
  const PrimeIdeal* hit = nullptr;
  for (const auto& P : candidates) {
    if (P.field() != iota.source() || P.p != Q.p) throw std::invalid_argument("restrict_prime: bad candidate");
    if (valuation(iota.apply(P.second_gen_element()), Q) > 0) {
      if (hit) throw InternalFault("restrict_prime: several primes below Q");
      hit = &P;
    }
  }
  if (!hit) throw InternalFault("restrict_prime: no prime below Q");
  return *hit;
}

inline PrimeIdeal restrict_prime(const PrimeIdeal& Q, const EmbeddingMap& iota) {
  return restrict_prime(Q, iota, decompose_prime(p_maximal_order(iota.source(), Q.p), Q.p));
}

/// e(Q/P) = v_Q(iota(pi_P)).
inline int relative_ramification(const PrimeIdeal& Q, const EmbeddingMap& iota, const PrimeIdeal& P) {
  return static_cast<int>(valuation(iota.apply(P.uniformizer_element()), Q));
}

}  // namespace ramlab
