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

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/linalg.hpp"
#include "ramlab/modp.hpp"
#include "ramlab/numberfield.hpp"

namespace ramlab {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

/// Desk-scale limits enforced at the API boundary.
struct Caps {
  int max_degree = 24;
  std::uint64_t prime_bound = 1000;
};

inline void check_caps(int degree, std::uint64_t p, const Caps& caps = {}) {
  if (degree > caps.max_degree)
    throw CapExceeded("field degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(caps.max_degree));
  if (p >= caps.prime_bound)
    throw CapExceeded("prime " + std::to_string(p) + " exceeds the bound " + std::to_string(caps.prime_bound));
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

/// A full-rank Z-lattice in a number field that is a ring containing Z[theta].
/// Elements are addressed by integer coordinates in the basis omega_0..omega_{n-1}.
class Order {
 public:
  /// Builds the order with the given basis rows (power-basis coordinates).
  Order(NumberField field, RatMatrix basis, std::set<std::uint64_t> p_maximal_for = {})
      : field_(std::move(field)), basis_(std::move(basis)), p_maximal_(std::move(p_maximal_for)) {
    const int n = field_.degree();
    if (static_cast<int>(basis_.size()) != n) throw std::invalid_argument("order basis has wrong size");
    auto inv = rat_inverse(basis_);
    if (!inv) throw std::invalid_argument("order basis is not of full rank");
    inv_ = std::move(*inv);
    mult_.assign(n, std::vector<IntVec>(n));
    std::vector<NFElement> elems;
    for (const auto& row : basis_) elems.push_back(field_.from_coords(row));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        auto c = integral_coords(elems[i] * elems[j]);
        if (!c) throw std::invalid_argument("basis does not span a ring");
        mult_[i][j] = *c;
        mult_[j][i] = *c;
      }
  }

  /// The equation order Z[theta].
  static Order equation_order(const NumberField& k) { return Order(k, rat_identity(k.degree())); }

  const NumberField& field() const { return field_; }
  int degree() const { return field_.degree(); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& basis_inverse() const { return inv_; }
  const std::set<std::uint64_t>& p_maximal_for() const { return p_maximal_; }
  bool is_p_maximal(std::uint64_t p) const { return p_maximal_.count(p) != 0; }

  /// omega_i * omega_j = sum_k table[i][j][k] omega_k
  const std::vector<std::vector<IntVec>>& multiplication_table() const { return mult_; }

  NFElement basis_element(int i) const { return field_.from_coords(basis_[i]); }

  RatVec coords(const NFElement& x) const { return vec_mat(x.coords(), inv_); }

  std::optional<IntVec> integral_coords(const NFElement& x) const {
    RatVec c = coords(x);
    IntVec out;
    for (const auto& v : c) {
      if (!is_integer(v)) return std::nullopt;
      out.push_back(v.get_num());
    }
    return out;
  }

  bool contains(const NFElement& x) const { return integral_coords(x).has_value(); }

  NFElement element(const IntVec& c) const {
    RatVec r(c.begin(), c.end());
    return field_.from_coords(vec_mat(r, basis_));
  }

  IntVec mul(const IntVec& a, const IntVec& b) const {
    const int n = degree();
    IntVec out(n, Int(0));
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        Int ab = a[i] * b[j];
        for (int k = 0; k < n; ++k)
          if (mult_[i][j][k] != 0) out[k] += ab * mult_[i][j][k];
      }
    }
    return out;
  }

  /// Matrix of multiplication by a: row i holds the coordinates of omega_i * a.
  IntMatrix mult_matrix(const IntVec& a) const {
    const int n = degree();
    IntMatrix m(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[l] == 0) continue;
        for (int k = 0; k < n; ++k)
          if (mult_[i][l][k] != 0) m[i][k] += a[l] * mult_[i][l][k];
      }
    return m;
  }

  /// Index [O : Z[theta]] as a positive rational (an integer for orders containing Z[theta]).
  Rat index_over_equation_order() const {
    // |det basis|^{-1}
    RatMatrix a = basis_;
    const int n = degree();
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (int r = col + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        Rat f = a[r][col] / a[col][col];
        for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      }
    }
    return abs(1 / det);
  }

  /// Coordinates of 1.
  IntVec one() const { return *integral_coords(field_.one()); }

  /// Copy carrying an additional p-maximality certificate.
  Order certified(std::uint64_t p) const {
    Order c = *this;
    c.p_maximal_.insert(p);
    return c;
  }

 private:
  NumberField field_;
  RatMatrix basis_;
  RatMatrix inv_;
  std::vector<std::vector<IntVec>> mult_;
  std::set<std::uint64_t> p_maximal_;
};

// ---------------------------------------------------------------------------
// Arithmetic in O/pO.

class OrderModP {
 public:
  OrderModP(const Order& o, std::uint64_t p) : p_(p), n_(o.degree()) {
    table_.assign(n_, std::vector<FpVec>(n_, FpVec(n_, 0)));
    const auto& t = o.multiplication_table();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) table_[i][j][k] = mod_u64(t[i][j][k], p);
    one_ = reduce(o.one());
  }

  std::uint64_t p() const { return p_; }
  int dim() const { return n_; }
  const FpVec& one() const { return one_; }

  FpVec reduce(const IntVec& v) const {
    FpVec out(n_);
    for (int i = 0; i < n_; ++i) out[i] = mod_u64(v[i], p_);
    return out;
  }

  FpVec mul(const FpVec& a, const FpVec& b) const {
    FpVec out(n_, 0);
    for (int i = 0; i < n_; ++i) {
      if (!a[i]) continue;
      for (int j = 0; j < n_; ++j) {
        if (!b[j]) continue;
        std::uint64_t ab = a[i] * b[j] % p_;
        const FpVec& t = table_[i][j];
        for (int k = 0; k < n_; ++k)
          if (t[k]) out[k] = (out[k] + ab * t[k]) % p_;
      }
    }
    return out;
  }

  FpVec pow(FpVec a, std::uint64_t e) const {
    FpVec r = one_;
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

  /// Row i = coordinates of omega_i * a.
  FpMatrix mult_matrix(const FpVec& a) const {
    FpMatrix m(n_, FpVec(n_, 0));
    for (int i = 0; i < n_; ++i) {
      FpVec e(n_, 0);
      e[i] = 1;
      m[i] = mul(e, a);
    }
    return m;
  }

  /// Matrix of x -> x^p (F_p-linear): row i = omega_i^p.
  FpMatrix frobenius() const {
    FpMatrix m;
    for (int i = 0; i < n_; ++i) {
      FpVec e(n_, 0);
      e[i] = 1;
      m.push_back(pow(e, p_));
    }
    return m;
  }

  /// The p-radical {x : x^(p^j) = 0} as a subspace, j with p^j >= n.
  FpSubspace radical() const {
    FpMatrix frob = frobenius();
    FpMatrix power = frob;
    std::uint64_t q = p_;
    while (q < static_cast<std::uint64_t>(n_)) {
      FpMatrix next;
      for (const auto& row : power) next.push_back(fp_vec_mat(row, frob, p_));
      power = std::move(next);
      q *= p_;
    }
    return FpSubspace(fp_left_kernel(power, p_), n_, p_);
  }

 private:
  std::uint64_t p_;
  int n_;
  std::vector<std::vector<FpVec>> table_;
  FpVec one_;
};

// ---------------------------------------------------------------------------

struct DedekindResult {
  bool p_maximal = false;
  /// (e, f) per irreducible factor of f mod p, when p-maximal.
  std::vector<std::pair<int, int>> shape;
};

/// Dedekind's criterion: Z[theta] is p-maximal iff gcd(F mod p, g, h) = 1,
/// where f = prod g_i^e_i mod p, g = prod g_i, h = prod g_i^(e_i - 1) and
/// F = (g*h - f)/p.
inline DedekindResult dedekind_criterion(const RatPoly& f, std::uint64_t p) {
  if (!f.is_monic() || !f.is_integral()) throw std::invalid_argument("dedekind_criterion: f must be monic integral");
  if (!is_prime(p)) throw std::invalid_argument("dedekind_criterion: p is not prime");
  auto fac = factor_mod_p(f, p);
  ModPPoly gbar = ModPPoly::constant(p, 1), hbar = ModPPoly::constant(p, 1);
  for (const auto& [g, e] : fac) {
    gbar = gbar * g;
    for (int i = 1; i < e; ++i) hbar = hbar * g;
  }
  RatPoly big = gbar.lift() * hbar.lift() - f;
  RatPoly fq = (Rat(1) / Rat(static_cast<unsigned long>(p))) * big;
  ModPPoly fbar = ModPPoly::reduce(p, fq);
  ModPPoly gcd = modp_gcd(modp_gcd(fbar, gbar), hbar);
  DedekindResult out;
  out.p_maximal = gcd.degree() == 0;
  if (out.p_maximal)
    for (const auto& [g, e] : fac) out.shape.emplace_back(e, g.degree());
  std::sort(out.shape.begin(), out.shape.end(), [](auto a, auto b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  return out;
}

namespace detail {

/// Z-basis (integer rows in O-coordinates) of the lattice pO + lift(S) for a
/// subspace S of O/pO given in reduced echelon form.
inline IntMatrix lattice_from_subspace(const FpSubspace& s, std::uint64_t p) {
  const int n = s.ambient();
  IntMatrix rows;
  std::vector<bool> is_pivot(n, false);
  for (int c : s.pivots()) is_pivot[c] = true;
  for (const auto& r : s.basis()) {
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = static_cast<unsigned long>(r[j]);
    rows.push_back(std::move(v));
  }
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      IntVec v(n, Int(0));
      v[j] = static_cast<unsigned long>(p);
      rows.push_back(std::move(v));
    }
  return rows;
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) r.emplace_back(row.begin(), row.end());
  return r;
}

/// One enlargement step: returns the multiplier ring of the p-radical, or
/// nullopt when O is already p-maximal.
inline std::optional<Order> round2_step(const Order& o, std::uint64_t p) {
  const int n = o.degree();
  OrderModP q(o, p);
  FpSubspace rad = q.radical();
  IntMatrix w = lattice_from_subspace(rad, p);
  auto winv = rat_inverse(to_rat(w));
  if (!winv) throw InternalFault("p-radical lattice singular");
  // alpha -> (alpha * w_k expressed in the radical basis) mod p, stacked over k
  FpMatrix big(n, FpVec());
  for (int k = 0; k < n; ++k) {
    IntMatrix mk = o.mult_matrix(w[k]);
    RatMatrix t = mat_mul(to_rat(mk), *winv);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!is_integer(t[i][j])) throw InternalFault("p-radical is not an ideal");
        big[i].push_back(mod_u64(t[i][j].get_num(), p));
      }
  }
  FpSubspace u(fp_left_kernel(big, p), n, p);
  if (u.dim() == 0) return std::nullopt;
  IntMatrix ubasis = lattice_from_subspace(u, p);
  RatMatrix newbasis = mat_mul(to_rat(ubasis), o.basis());
  Rat inv_p = Rat(1) / Rat(static_cast<unsigned long>(p));
  for (auto& row : newbasis)
    for (auto& v : row) v *= inv_p;
  return Order(o.field(), std::move(newbasis), o.p_maximal_for());
}

}  // namespace detail

/// An order containing Z[theta] that is maximal at p, obtained by iterating
/// the multiplier ring of the p-radical until it stabilizes.
inline Order p_maximal_order(const NumberField& k, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p_maximal_order: p is not prime");
  Order o = Order::equation_order(k);
  if (!dedekind_criterion(k.defining_poly(), p).p_maximal)
    while (auto next = detail::round2_step(o, p)) o = std::move(*next);
  return o.certified(p);
}

}  // namespace ramlab
