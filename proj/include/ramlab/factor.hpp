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

// Factorization over the integers: Hensel lifting and Zassenhaus recombination.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/modp.hpp"
#include "ramlab/poly.hpp"

namespace ramlab {

/// Integer polynomial, ascending coefficients, trimmed.
using ZPoly = std::vector<Int>;

namespace detail {

inline void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  ztrim(c);
  return c;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

inline ZPoly zscale(const ZPoly& a, const Int& s) {
  ZPoly c = a;
  for (auto& v : c) v *= s;
  ztrim(c);
  return c;
}

/// Coefficients reduced into [0, m).
inline ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly c = a;
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  ztrim(c);
  return c;
}

/// Coefficients reduced into (-m/2, m/2].
inline ZPoly zsymmod(const ZPoly& a, const Int& m) {
  ZPoly c = zmod(a, m);
  Int half = m / 2;
  for (auto& v : c)
    if (v > half) v -= m;
  ztrim(c);
  return c;
}

inline ZPoly from_ratpoly(const RatPoly& f) {
  ZPoly z;
  for (const auto& c : f.coeffs()) {
    if (!is_integer(c)) throw std::invalid_argument("expected integer coefficients");
    z.push_back(c.get_num());
  }
  return z;
}

inline RatPoly to_ratpoly(const ZPoly& z) {
  std::vector<Rat> c;
  for (const auto& v : z) c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline ZPoly from_modp(const ModPPoly& f) {
  ZPoly z;
  for (auto v : f.coeffs()) z.emplace_back(static_cast<unsigned long>(v));
  return z;
}

inline ModPPoly to_modp(const ZPoly& z, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  for (const auto& v : z) c.push_back(mod_u64(v, p));
  return ModPPoly(p, std::move(c));
}

/// Exact division over Z; nullopt when b does not divide a.
inline std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  const long nb = static_cast<long>(b.size());
  for (long i = static_cast<long>(a.size()) - 1; i >= nb - 1; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int t = r[i] / lb;
    q[i - nb + 1] = t;
    for (long j = 0; j < nb; ++j) r[i - nb + 1 + j] -= t * b[j];
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  ztrim(q);
  return q;
}

inline Int zcontent(const ZPoly& a) {
  Int g = 0;
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

inline ZPoly zprimitive(const ZPoly& a) {
  if (a.empty()) return a;
  Int g = zcontent(a);
  if (a.back() < 0) g = -g;
  ZPoly c = a;
  for (auto& v : c) v /= g;
  return c;
}

/// One linear Hensel lift of f = g*h from modulus m = p^j to p^(j+1), where
/// s*g + t*h = 1 mod p and g is monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ModPPoly& s, const ModPPoly& t, std::uint64_t p,
                        const Int& m) {
  ZPoly err = zsub(f, zmul(g, h));
  for (auto& v : err) {
    if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) throw InternalFault("hensel: residual not divisible");
    v /= m;
  }
  ModPPoly e = to_modp(err, p);
  ModPPoly gm = to_modp(g, p), hm = to_modp(h, p);
  auto [q, dg] = modp_divmod(e * t, gm);
  ModPPoly dh = e * s + q * hm;
  g = zadd(g, zscale(from_modp(dg), m));
  h = zadd(h, zscale(from_modp(dh), m));
}

}  // namespace detail

/// Lifts a factorization of f modulo p to one modulo p^k. The input factors
/// must be monic, pairwise coprime mod p, and multiply to f / lc(f) mod p.
/// Output factors are monic with coefficients in [0, p^k) and satisfy
/// lc(f) * prod(factors) = f mod p^k.
inline std::vector<ZPoly> hensel_lift(const RatPoly& f_in, const std::vector<ModPPoly>& factors, int k) {
  if (factors.empty()) throw std::invalid_argument("hensel_lift: no factors");
  const std::uint64_t p = factors.front().p();
  if (k < 1) throw std::invalid_argument("hensel_lift: exponent must be >= 1");
  ZPoly f = detail::from_ratpoly(f_in);
  if (detail::zcontent({f.back()}) % Int(static_cast<unsigned long>(p)) == 0)
    throw std::invalid_argument("hensel_lift: leading coefficient divisible by p");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].p() != p || factors[i].leading() != 1)
      throw std::invalid_argument("hensel_lift: factors must be monic over one prime");
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (!modp_gcd(factors[i], factors[j]).is_one())
        throw std::invalid_argument("hensel_lift: factors are not pairwise coprime mod p");
  }
  ModPPoly prod = ModPPoly::constant(p, mod_u64(f.back(), p));
  for (const auto& g : factors) prod = prod * g;
  if (prod != detail::to_modp(f, p)) throw std::invalid_argument("hensel_lift: factors do not multiply to f mod p");

  std::vector<ZPoly> out;
  const Int pk = detail::pow_int(p, k);
  // normalize target so the tail carries lc(f)
  ZPoly target = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly g = detail::from_modp(factors[i]);
    ModPPoly rest = ModPPoly::constant(p, mod_u64(target.back(), p));
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    ZPoly h = detail::from_modp(rest);
    auto [one, s, t] = modp_xgcd(factors[i], rest);
    if (!one.is_one()) throw InternalFault("hensel_lift: coprimality lost");
    Int m = Int(static_cast<unsigned long>(p));
    for (int j = 1; j < k; ++j) {
      detail::hensel_step(target, g, h, s, t, p, m);
      m *= static_cast<unsigned long>(p);
    }
    g = detail::zmod(g, pk);
    h = detail::zmod(h, pk);
    out.push_back(g);
    target = h;
  }
  // last factor: remove the leading coefficient
  Int lcinv;
  Int lc = target.back();
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  out.push_back(detail::zmod(detail::zscale(target, lcinv), pk));
  if (k == 1) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::from_modp(factors[i]);
  }
  return out;
}

namespace detail {

/// Bound on the absolute value of coefficients of any integer factor of f.
inline Int mignotte_bound(const ZPoly& f) {
  Int norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, f.size() - 1);
  return two_n * root;
}

struct ModularChoice {
  std::uint64_t p = 0;
  std::vector<ModPPoly> factors;
};

/// Picks, among a handful of good primes, the one giving the fewest modular factors.
inline ModularChoice choose_prime(const ZPoly& f) {
  ModularChoice best;
  int good = 0;
  for (std::uint64_t p = 3; good < 6 && p < 20000; p = next_prime(p)) {
    if (mod_u64(f.back(), p) == 0) continue;
    ModPPoly fm = to_modp(f, p);
    if (!modp_is_squarefree(fm)) continue;
    ++good;
    auto fac = factor_mod_p(fm);
    if (best.p == 0 || fac.size() < best.factors.size()) {
      best.p = p;
      best.factors.clear();
      for (auto& [g, m] : fac) best.factors.push_back(g);
      if (best.factors.size() == 1) break;
    }
  }
  if (best.p == 0) throw InternalFault("no good prime for squarefree polynomial");
  return best;
}

/// Factors a squarefree primitive integer polynomial with positive leading coefficient.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  ModularChoice mc = choose_prime(f);
  if (mc.factors.size() == 1) return {f};
  const std::uint64_t p = mc.p;
  Int bound = 2 * mignotte_bound(f) * abs(f.back()) + 1;
  int k = 1;
  Int pk = Int(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(to_ratpoly(f), mc.factors, k);

  std::vector<ZPoly> found;
  ZPoly g = f;
  std::vector<int> active(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
  int s = 1;
  while (2 * s <= static_cast<int>(active.size())) {
    bool progressed = false;
    const int r = static_cast<int>(active.size());
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    const Int lc = g.back();
    while (true) {
      // constant-term screen before forming the full product
      Int c0 = lc;
      for (int i : idx) c0 = (c0 * lifted[active[i]][0]) % pk;
      if (c0 < 0) c0 += pk;
      if (c0 > pk / 2) c0 -= pk;
      bool plausible = c0 == 0 ? g[0] == 0 : mpz_divisible_p(Int(lc * g[0]).get_mpz_t(), c0.get_mpz_t()) != 0;
      if (plausible) {
        ZPoly cand{lc};
        for (int i : idx) cand = zmod(zmul(cand, lifted[active[i]]), pk);
        cand = zprimitive(zsymmod(cand, pk));
        if (auto q = zdiv_exact(g, cand)) {
          found.push_back(cand);
          g = *q;
          std::vector<int> rest;
          for (int i = 0, j = 0; i < r; ++i) {
            if (j < s && idx[j] == i) {
              ++j;
              continue;
            }
            rest.push_back(active[i]);
          }
          active = std::move(rest);
          progressed = true;
          break;
        }
      }
      // next combination
      int i = s - 1;
      while (i >= 0 && idx[i] == r - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progressed) ++s;
  }
  if (g.size() > 1) found.push_back(zprimitive(g));
  return found;
}

}  // namespace detail

/// Irreducible factors of f over Q as primitive integer polynomials with
/// positive leading coefficient, repeated according to multiplicity. Sorted
/// by degree, then coefficients. The product equals f up to a rational unit.
inline std::vector<RatPoly> factor_over_Q(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
  std::vector<RatPoly> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    RatPoly h = primitive_part(g);
    ZPoly z = detail::from_ratpoly(h);
    std::vector<ZPoly> parts;
    // strip a factor x so the constant-term screen stays informative
    if (z[0] == 0) {
      parts.push_back(ZPoly{0, 1});
      z.erase(z.begin());
    }
    if (z.size() > 1)
      for (auto& q : detail::zassenhaus(z)) parts.push_back(std::move(q));
    for (const auto& q : parts)
      for (int i = 0; i < mult; ++i) out.push_back(detail::to_ratpoly(q));
  }
  std::sort(out.begin(), out.end(), poly_order_less);
  return out;
}

inline bool is_irreducible_over_Q(const RatPoly& f) {
  if (f.degree() < 1) return false;
  return factor_over_Q(f).size() == 1;
}

}  // namespace ramlab
