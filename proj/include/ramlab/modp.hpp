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

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/poly.hpp"
#include "ramlab/rational.hpp"

namespace ramlab {

/// Polynomial over the prime field F_p, p < 2^31, residues in [0, p).
class ModPPoly {
 public:
  ModPPoly() = default;
  ModPPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
  }
  /// Reduction of a rational polynomial whose denominators are units mod p.
  static ModPPoly reduce(std::uint64_t p, const RatPoly& f) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(mod_u64(v, p));
    return ModPPoly(p, std::move(c));
  }

  static ModPPoly constant(std::uint64_t p, std::uint64_t v) { return ModPPoly(p, {v}); }
  static ModPPoly x(std::uint64_t p) { return ModPPoly(p, {0, 1}); }

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  ModPPoly monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = invmod_u64(leading(), p_);
    std::vector<std::uint64_t> c = c_;
    for (auto& v : c) v = v * inv % p_;
    return ModPPoly(p_, std::move(c));
  }

  ModPPoly derivative() const {
    if (c_.size() <= 1) return ModPPoly(p_, {});
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * (i % p_) % p_;
    return ModPPoly(p_, std::move(c));
  }

  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (r * x + *it) % p_;
    return r;
  }

  /// Integer lift with coefficients in [0, p).
  RatPoly lift() const {
    std::vector<Rat> c;
    for (auto v : c_) c.emplace_back(static_cast<unsigned long>(v));
    return RatPoly(std::move(c));
  }

  friend ModPPoly operator+(const ModPPoly& a, const ModPPoly& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % p;
    return ModPPoly(p, std::move(c));
  }
  friend ModPPoly operator-(const ModPPoly& a, const ModPPoly& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + p - b.c_[i]) % p;
    return ModPPoly(p, std::move(c));
  }
  friend ModPPoly operator*(const ModPPoly& a, const ModPPoly& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero()) return ModPPoly(p, {});
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    return ModPPoly(p, std::move(c));
  }
  friend ModPPoly operator*(std::uint64_t s, const ModPPoly& a) {
    std::vector<std::uint64_t> c = a.c_;
    for (auto& v : c) v = v * (s % a.p_) % a.p_;
    return ModPPoly(a.p_, std::move(c));
  }
  friend bool operator==(const ModPPoly& a, const ModPPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const ModPPoly& a, const ModPPoly& b) { return !(a == b); }

  /// Degree first, then ascending coefficients.
  friend bool operator<(const ModPPoly& a, const ModPPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

inline std::pair<ModPPoly, ModPPoly> modp_divmod(const ModPPoly& a, const ModPPoly& b) {
  const std::uint64_t p = a.p();
  if (b.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  if (a.degree() < b.degree()) return {ModPPoly(p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  std::vector<std::uint64_t> q(a.degree() - b.degree() + 1, 0);
  std::uint64_t inv = invmod_u64(b.leading(), p);
  int db = b.degree();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    if (!r[i]) continue;
    std::uint64_t t = r[i] * inv % p;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - t * bc[j] % p) % p;
  }
  r.resize(db);
  return {ModPPoly(p, std::move(q)), ModPPoly(p, std::move(r))};
}

inline ModPPoly operator%(const ModPPoly& a, const ModPPoly& b) { return modp_divmod(a, b).second; }
inline ModPPoly operator/(const ModPPoly& a, const ModPPoly& b) { return modp_divmod(a, b).first; }

inline ModPPoly modp_gcd(ModPPoly a, ModPPoly b) {
  while (!b.is_zero()) {
    ModPPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ModPPoly, ModPPoly, ModPPoly> modp_xgcd(const ModPPoly& a, const ModPPoly& b) {
  const std::uint64_t p = a.p();
  ModPPoly r0 = a, r1 = b, s0 = ModPPoly::constant(p, 1), s1(p, {}), t0(p, {}), t1 = ModPPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = modp_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = invmod_u64(r0.leading(), p);
  return {inv * r0, inv * s0, inv * t0};
}

inline ModPPoly modp_mulmod(const ModPPoly& a, const ModPPoly& b, const ModPPoly& m) { return (a * b) % m; }

/// base^e mod m, exponent given as an arbitrary-precision integer.
inline ModPPoly modp_powmod(ModPPoly base, const Int& e, const ModPPoly& m) {
  ModPPoly r = ModPPoly::constant(m.p(), 1) % m;
  base = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = modp_mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = modp_mulmod(r, base, m);
  }
  return r;
}

namespace detail {

inline Int pow_int(std::uint64_t p, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

/// Monic squarefree f = prod of irreducibles; returns (product of all degree-d factors, d).
inline std::vector<std::pair<ModPPoly, int>> distinct_degree(const ModPPoly& f) {
  std::vector<std::pair<ModPPoly, int>> out;
  const std::uint64_t p = f.p();
  ModPPoly rest = f;
  ModPPoly xp = ModPPoly::x(p);
  ModPPoly h = xp % rest;
  const Int pe(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = modp_powmod(h, pe, rest);
    ModPPoly g = modp_gcd(rest, h - xp);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() >= 1) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

/// Cantor-Zassenhaus split of f (monic, product of distinct degree-d irreducibles).
inline void equal_degree(const ModPPoly& f, int d, std::mt19937_64& rng, std::vector<ModPPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.p();
  const int n = f.degree();
  while (true) {
    std::vector<std::uint64_t> c(n);
    for (auto& v : c) v = rng() % p;
    ModPPoly a(p, c);
    if (a.degree() < 1) continue;
    ModPPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      ModPPoly t = a % f, acc = t;
      for (int i = 1; i < d; ++i) {
        t = modp_mulmod(t, t, f);
        acc = acc + t;
      }
      b = acc;
    } else {
      Int e = (pow_int(p, d) - 1) / 2;
      b = modp_powmod(a, e, f) - ModPPoly::constant(p, 1);
    }
    ModPPoly g = modp_gcd(f, b);
    if (g.degree() >= 1 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

/// p-th root of a polynomial whose derivative vanishes.
inline ModPPoly pth_root(const ModPPoly& f) {
  const std::uint64_t p = f.p();
  std::vector<std::uint64_t> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return ModPPoly(p, std::move(c));  // a^p = a on F_p
}

/// Squarefree decomposition over F_p of a monic polynomial: (g, multiplicity).
inline void squarefree_modp(const ModPPoly& f, int mult, std::vector<std::pair<ModPPoly, int>>& out) {
  if (f.degree() < 1) return;
  const std::uint64_t p = f.p();
  ModPPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_modp(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  ModPPoly c = modp_gcd(f, fp);
  ModPPoly w = f / c;
  int i = 1;
  while (w.degree() >= 1) {
    ModPPoly y = modp_gcd(w, c);
    ModPPoly z = w / y;
    if (z.degree() >= 1) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() >= 1) squarefree_modp(pth_root(c.monic()), mult * static_cast<int>(p), out);
}

}  // namespace detail

inline bool modp_is_squarefree(const ModPPoly& f) {
  if (f.degree() < 1) return true;
  return modp_gcd(f, f.derivative()).degree() == 0;
}

/// Factorization of f mod p into monic irreducibles with multiplicities.
/// The product of the factors times lc(f) is f mod p. Output is sorted by
/// degree, then by coefficients; the equal-degree split draws from a fixed seed.
inline std::vector<std::pair<ModPPoly, int>> factor_mod_p(const ModPPoly& f, std::uint64_t seed = 0x5eed) {
  if (!is_prime(f.p())) throw std::invalid_argument("modulus is not prime");
  if (f.p() >= (1ull << 31)) throw std::invalid_argument("modulus too large");
  if (f.is_zero()) throw std::invalid_argument("polynomial vanishes modulo p");
  std::vector<std::pair<ModPPoly, int>> sqf;
  detail::squarefree_modp(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModPPoly, int>> out;
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : detail::distinct_degree(g)) {
      std::vector<ModPPoly> parts;
      detail::equal_degree(h, d, rng, parts);
      for (auto& q : parts) out.emplace_back(std::move(q), m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // merge identical factors produced by different squarefree strata
  std::vector<std::pair<ModPPoly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(std::move(pr));
  }
  return merged;
}

inline std::vector<std::pair<ModPPoly, int>> factor_mod_p(const RatPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  if (!f.is_integral()) throw std::invalid_argument("factor_mod_p expects integer coefficients");
  return factor_mod_p(ModPPoly::reduce(p, f));
}

/// Distinct roots in F_p of a polynomial; ascending.
inline std::vector<std::uint64_t> modp_roots(const ModPPoly& f) {
  std::vector<std::uint64_t> roots;
  if (f.degree() < 1) return roots;
  const std::uint64_t p = f.p();
  if (p <= 64) {
    for (std::uint64_t a = 0; a < p; ++a)
      if (f.eval(a) == 0) roots.push_back(a);
    return roots;
  }
  ModPPoly xp = modp_powmod(ModPPoly::x(p), Int(static_cast<unsigned long>(p)), f);
  ModPPoly g = modp_gcd(f, xp - ModPPoly::x(p));
  if (g.degree() < 1) return roots;
  std::mt19937_64 rng(0x700f);
  std::vector<ModPPoly> lin;
  detail::equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) roots.push_back((p - l.coeff(0)) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ramlab
