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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/factor.hpp"
#include "ramlab/linalg.hpp"
#include "ramlab/modp.hpp"
#include "ramlab/poly.hpp"

namespace ramlab {

class NFElement;

/// Absolute number field Q[x]/(f) with f monic, integral and irreducible.
/// Cheap to copy; copies share the defining data.
class NumberField {
 public:
  /// The rationals, presented as Q[x]/(x).
  NumberField() : NumberField(RatPoly::x(), Trusted{}) {}

  explicit NumberField(const RatPoly& f) : NumberField(f, Trusted{}) {
    if (f.degree() < 1) throw std::invalid_argument("defining polynomial must have degree >= 1");
    if (!f.is_monic() || !f.is_integral())
      throw std::invalid_argument("defining polynomial must be monic with integer coefficients: " + to_string(f));
    if (!is_irreducible_over_Q(f)) throw std::invalid_argument("defining polynomial is reducible: " + to_string(f));
  }

  /// Skips the irreducibility check; for polynomials known irreducible by construction.
  static NumberField trusted(const RatPoly& f) { return NumberField(f, Trusted{}); }

  const RatPoly& defining_poly() const { return d_->poly; }
  int degree() const { return d_->poly.degree(); }
  bool is_rationals() const { return degree() == 1; }
  bool has_integral_model() const { return d_->integral; }
  const std::vector<Int>& integral_coeffs() const { return d_->int_coeffs; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->poly == b.d_->poly;
  }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

  inline NFElement zero() const;
  inline NFElement one() const;
  inline NFElement generator() const;
  inline NFElement from_rat(const Rat& r) const;
  inline NFElement from_coords(RatVec coords) const;
  /// Image of the polynomial g evaluated at the generator.
  inline NFElement from_poly(const RatPoly& g) const;

  /// Coordinates of g(theta) in the power basis (g reduced mod f).
  RatVec reduce(const RatPoly& g) const {
    const int n = degree();
    std::vector<Rat> c = g.coeffs();
    const auto& f = d_->poly.coeffs();
    for (int i = static_cast<int>(c.size()) - 1; i >= n; --i) {
      if (c[i] == 0) continue;
      Rat t = c[i];
      for (int j = 0; j <= n; ++j) c[i - n + j] -= t * f[j];
    }
    c.resize(n, Rat(0));
    return c;
  }

 private:
  struct Trusted {};
  struct Data {
    RatPoly poly;
    bool integral;
    std::vector<Int> int_coeffs;
  };
  static Data make_data(const RatPoly& f) {
    Data d{f, f.is_monic() && f.is_integral(), {}};
    if (d.integral)
      for (const auto& c : f.coeffs()) d.int_coeffs.push_back(c.get_num());
    return d;
  }
  NumberField(const RatPoly& f, Trusted) : d_(std::make_shared<const Data>(make_data(f))) {}
  std::shared_ptr<const Data> d_;
};

/// Element of a number field, stored as power-basis coordinates.
class NFElement {
 public:
  NFElement(NumberField field, RatVec coords) : k_(std::move(field)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != k_.degree())
      throw std::invalid_argument("coordinate vector length does not match field degree");
  }

  const NumberField& field() const { return k_; }
  const RatVec& coords() const { return c_; }
  RatPoly as_poly() const { return RatPoly(c_); }
  bool is_zero() const { return is_zero_vec(c_); }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend NFElement operator+(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    RatVec c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return NFElement(a.k_, std::move(c));
  }
  friend NFElement operator-(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    RatVec c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return NFElement(a.k_, std::move(c));
  }
  NFElement operator-() const {
    RatVec c = c_;
    for (auto& v : c) v = -v;
    return NFElement(k_, std::move(c));
  }
  friend NFElement operator*(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    if (a.k_.has_integral_model()) return mul_integral(a, b);
    const int n = a.k_.degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return NFElement(a.k_, a.k_.reduce(RatPoly(std::move(prod))));
  }
  friend NFElement operator*(const Rat& s, const NFElement& a) {
    RatVec c = a.c_;
    for (auto& v : c) v *= s;
    return NFElement(a.k_, std::move(c));
  }
  NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
  NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
  NFElement& operator*=(const NFElement& o) { return *this = *this * o; }

  NFElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in a number field");
    if (is_rational()) return k_.from_rat(1 / c_[0]);
    PolyXgcd x = poly_xgcd(as_poly(), k_.defining_poly());
    if (x.g.degree() != 0) throw InternalFault("defining polynomial is not irreducible");
    return NFElement(k_, k_.reduce(x.s));
  }
  friend NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

  NFElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement r = k_.one(), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const NFElement& a, const NFElement& b) { return a.k_ == b.k_ && a.c_ == b.c_; }
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

 private:
  // numerators over a common denominator, reduced modulo the monic integral
  // defining polynomial without leaving Z
  static NFElement mul_integral(const NFElement& a, const NFElement& b) {
    const int n = a.k_.degree();
    Int da = 1, db = 1;
    for (const auto& v : a.c_) da = lcm(da, Int(v.get_den()));
    for (const auto& v : b.c_) db = lcm(db, Int(v.get_den()));
    std::vector<Int> an(n), bn(n);
    for (int i = 0; i < n; ++i) {
      an[i] = a.c_[i].get_num() * (da / a.c_[i].get_den());
      bn[i] = b.c_[i].get_num() * (db / b.c_[i].get_den());
    }
    std::vector<Int> prod(2 * n - 1, Int(0));
    for (int i = 0; i < n; ++i) {
      if (an[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (bn[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
    const auto& f = a.k_.integral_coeffs();
    for (int i = 2 * n - 2; i >= n; --i) {
      if (prod[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (f[j] != 0) mpz_submul(prod[i - n + j].get_mpz_t(), prod[i].get_mpz_t(), f[j].get_mpz_t());
    }
    Int d = da * db;
    RatVec c(n);
    for (int i = 0; i < n; ++i) {
      c[i] = Rat(prod[i], d);
      c[i].canonicalize();
    }
    return NFElement(a.k_, std::move(c));
  }

  static void check_same(const NFElement& a, const NFElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("elements belong to different number fields");
  }
  NumberField k_;
  RatVec c_;
};

inline NFElement NumberField::zero() const { return NFElement(*this, RatVec(degree(), Rat(0))); }
inline NFElement NumberField::one() const { return from_rat(1); }
inline NFElement NumberField::from_rat(const Rat& r) const {
  RatVec c(degree(), Rat(0));
  c[0] = r;
  return NFElement(*this, std::move(c));
}
inline NFElement NumberField::generator() const { return from_poly(RatPoly::x()); }
inline NFElement NumberField::from_coords(RatVec coords) const { return NFElement(*this, std::move(coords)); }
inline NFElement NumberField::from_poly(const RatPoly& g) const { return NFElement(*this, reduce(g)); }

/// Evaluates a rational polynomial at a field element.
inline NFElement eval_at(const RatPoly& g, const NFElement& x) {
  NFElement r = x.field().zero();
  for (int i = g.degree(); i >= 0; --i) r = r * x + x.field().from_rat(g.coeff(i));
  return r;
}

/// Monic minimal polynomial over Q.
inline RatPoly min_poly(const NFElement& x) {
  const int n = x.field().degree();
  KrylovBasis kb(n);
  NFElement pw = x.field().one();
  for (int k = 0; k <= n; ++k) {
    if (auto dep = kb.insert(pw.coords())) {
      std::vector<Rat> c(k + 1);
      for (int i = 0; i < k; ++i) c[i] = -(*dep)[i];
      c[k] = 1;
      return RatPoly(std::move(c));
    }
    pw *= x;
  }
  throw InternalFault("min_poly: power sequence never became dependent");
}

/// Field homomorphism source -> target determined by the image of the generator.
class EmbeddingMap {
 public:
  EmbeddingMap(NumberField source, NFElement image) : source_(std::move(source)), image_(std::move(image)) {
    if (!eval_at(source_.defining_poly(), image_).is_zero())
      throw std::invalid_argument("image does not satisfy the source defining polynomial");
  }

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return image_.field(); }
  const NFElement& image_of_generator() const { return image_; }

  NFElement apply(const NFElement& x) const {
    if (x.field() != source_) throw std::invalid_argument("element not in embedding source");
    return eval_at(x.as_poly(), image_);
  }

  /// Composition: (other o this), mapping source -> other.target.
  EmbeddingMap then(const EmbeddingMap& other) const { return EmbeddingMap(source_, other.apply(image_)); }

 private:
  NumberField source_;
  NFElement image_;
};

// ---------------------------------------------------------------------------
// Polynomials over a number field.

class NFPoly {
 public:
  explicit NFPoly(NumberField k) : k_(std::move(k)) {}
  NFPoly(NumberField k, std::vector<NFElement> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) { trim(); }
  /// Rational polynomial viewed over k.
  NFPoly(NumberField k, const RatPoly& f) : k_(std::move(k)) {
    for (const auto& v : f.coeffs()) c_.push_back(k_.from_rat(v));
    trim();
  }

  const NumberField& field() const { return k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElement>& coeffs() const { return c_; }
  NFElement coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : k_.zero(); }
  const NFElement& leading() const { return c_.back(); }

  NFPoly monic() const {
    if (is_zero()) return *this;
    NFElement inv = leading().inverse();
    std::vector<NFElement> c;
    for (const auto& v : c_) c.push_back(v * inv);
    return NFPoly(k_, std::move(c));
  }

  NFPoly derivative() const {
    std::vector<NFElement> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(Rat(static_cast<long>(i)) * c_[i]);
    return NFPoly(k_, std::move(c));
  }

  NFElement eval(const NFElement& x) const {
    NFElement r = k_.zero();
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  friend NFPoly operator+(const NFPoly& a, const NFPoly& b) {
    std::vector<NFElement> c;
    for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return NFPoly(a.k_, std::move(c));
  }
  friend NFPoly operator-(const NFPoly& a, const NFPoly& b) {
    std::vector<NFElement> c;
    for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return NFPoly(a.k_, std::move(c));
  }
  friend NFPoly operator*(const NFPoly& a, const NFPoly& b) {
    if (a.is_zero() || b.is_zero()) return NFPoly(a.k_);
    std::vector<NFElement> c(a.c_.size() + b.c_.size() - 1, a.k_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return NFPoly(a.k_, std::move(c));
  }
  friend NFPoly operator*(const NFElement& s, const NFPoly& a) {
    std::vector<NFElement> c;
    for (const auto& v : a.c_) c.push_back(s * v);
    return NFPoly(a.k_, std::move(c));
  }
  friend bool operator==(const NFPoly& a, const NFPoly& b) { return a.k_ == b.k_ && a.c_ == b.c_; }


 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  NumberField k_;
  std::vector<NFElement> c_;
};

/// Ordering by degree, then coefficient coordinates.
inline bool nfpoly_order_less(const NFPoly& a, const NFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& x = a.coeffs()[i].coords();
    const auto& y = b.coeffs()[i].coords();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

inline std::pair<NFPoly, NFPoly> nfpoly_divmod(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const NumberField& k = a.field();
  if (a.degree() < b.degree()) return {NFPoly(k), a};
  std::vector<NFElement> r = a.coeffs();
  std::vector<NFElement> q(a.degree() - b.degree() + 1, k.zero());
  NFElement inv = b.leading().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    NFElement t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db, k.zero());
  return {NFPoly(k, std::move(q)), NFPoly(k, std::move(r))};
}

namespace detail {

inline NFPoly nfpoly_gcd_euclid(NFPoly a, NFPoly b) {
  while (!b.is_zero()) {
    NFPoly r = nfpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using ModNFPoly = std::vector<ModPPoly>;  // coefficients in F_l[y]/(F)

/// Reduction mod l; empty when a denominator is divisible by l.
inline std::optional<ModNFPoly> reduce_nfpoly(const NFPoly& a, std::uint64_t l) {
  ModNFPoly out;
  for (const auto& c : a.coeffs()) {
    std::vector<std::uint64_t> v;
    for (const auto& q : c.coords()) {
      if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), l)) return std::nullopt;
      v.push_back(mod_u64(q, l));
    }
    out.emplace_back(l, std::move(v));
  }
  return out;
}

/// Monic gcd in (F_l[y]/(F))[x]; empty when a leading coefficient is a zero divisor.
inline std::optional<ModNFPoly> modnf_gcd(ModNFPoly a, ModNFPoly b, const ModPPoly& F) {
  const std::uint64_t l = F.p();
  auto trim = [](ModNFPoly& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  auto inv = [&](const ModPPoly& c) -> std::optional<ModPPoly> {
    auto [g, s, t] = modp_xgcd(c, F);
    if (g.degree() != 0) return std::nullopt;
    return s % F;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto ib = inv(b.back());
    if (!ib) return std::nullopt;
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      if (a[i].is_zero()) continue;
      ModPPoly t = modp_mulmod(a[i], *ib, F);
      for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] - modp_mulmod(t, b[j], F));
    }
    if (static_cast<int>(a.size()) > db) a.resize(db, ModPPoly(l, {}));
    trim(a);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  auto ia = inv(a.back());
  if (!ia) return std::nullopt;
  for (auto& c : a) c = modp_mulmod(c, *ia, F);
  return a;
}

inline bool nfpoly_divides(const NFPoly& g, const NFPoly& a) {
  if (a.is_zero()) return true;
  if (a.degree() < g.degree()) return false;
  return nfpoly_divmod(a, g).second.is_zero();
}

}  // namespace detail

/// Monic gcd. Over a field with a monic integral model the gcd is found
/// modulo word-size primes, lifted by CRT and rational reconstruction, and
/// accepted once it divides both inputs.
inline NFPoly nfpoly_gcd(NFPoly a, NFPoly b) {
  const NumberField& k = a.field();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (k.degree() == 1 || !k.has_integral_model() || std::min(a.degree(), b.degree()) == 0)
    return detail::nfpoly_gcd_euclid(std::move(a), std::move(b));
  const int n = k.degree();
  std::uint64_t l = (1ull << 31) - 1;
  int best = -1;
  Int modulus = 1;
  std::vector<std::vector<Int>> acc;  // CRT images, coefficient-major
  std::optional<NFPoly> last;
  for (int tries = 0; tries < 400; ++tries) {
    do --l; while (!is_prime(l));
    auto ra = detail::reduce_nfpoly(a, l), rb = detail::reduce_nfpoly(b, l);
    if (!ra || !rb || ra->size() != a.coeffs().size() || rb->size() != b.coeffs().size()) continue;
    ModPPoly F = ModPPoly::reduce(l, k.defining_poly());
    auto g = detail::modnf_gcd(std::move(*ra), std::move(*rb), F);
    if (!g) continue;
    const int dg = static_cast<int>(g->size()) - 1;
    if (dg == 0) return NFPoly(k, {k.one()});
    if (best >= 0 && dg > best) continue;
    const Int lz(static_cast<unsigned long>(l));
    if (best < 0 || dg < best) {
      best = dg;
      modulus = lz;
      acc.assign(dg + 1, std::vector<Int>(n, 0));
      for (int i = 0; i <= dg; ++i)
        for (int j = 0; j < n; ++j) acc[i][j] = static_cast<unsigned long>((*g)[i].coeff(j));
      last.reset();
      continue;
    }
    // CRT: x = acc + modulus * ((g - acc) * modulus^{-1} mod l)
    const std::uint64_t minv = invmod_u64(mod_u64(modulus, l), l);
    for (int i = 0; i <= dg; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t cur = mod_u64(acc[i][j], l);
        std::uint64_t t = ((*g)[i].coeff(j) + l - cur) % l * minv % l;
        acc[i][j] += modulus * static_cast<unsigned long>(t);
      }
    modulus *= lz;
    std::vector<NFElement> coeffs;
    bool ok = true;
    for (int i = 0; i <= dg && ok; ++i) {
      RatVec v(n);
      for (int j = 0; j < n && ok; ++j) {
        auto r = rational_reconstruct(acc[i][j], modulus);
        if (!r) ok = false;
        else v[j] = *r;
      }
      if (ok) coeffs.push_back(k.from_coords(std::move(v)));
    }
    if (!ok) continue;
    NFPoly cand(k, std::move(coeffs));
    if (last && *last == cand && detail::nfpoly_divides(cand, a) && detail::nfpoly_divides(cand, b)) return cand;
    last = std::move(cand);
  }
  return detail::nfpoly_gcd_euclid(std::move(a), std::move(b));
}

inline std::string to_string(const NFPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coeff(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(f.coeff(i).as_poly(), 'a') + ")";
    if (i > 0) s += "*x^" + std::to_string(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Norm-based splitting of a squarefree polynomial over a number field.

namespace detail {

/// Arithmetic in K[X]/(h) for monic h over K; elements are coordinate vectors
/// indexed i*n + j for alpha^j X^i.
class RelativeAlgebra {
 public:
  RelativeAlgebra(NumberField k, NFPoly h) : k_(std::move(k)), h_(std::move(h)) {}
  int dim() const { return k_.degree() * h_.degree(); }

  NFPoly from_vec(const RatVec& v) const {
    const int n = k_.degree();
    std::vector<NFElement> c;
    for (int i = 0; i < h_.degree(); ++i)
      c.push_back(k_.from_coords(RatVec(v.begin() + i * n, v.begin() + (i + 1) * n)));
    return NFPoly(k_, std::move(c));
  }
  RatVec to_vec(const NFPoly& a) const {
    RatVec v;
    v.reserve(dim());
    for (int i = 0; i < h_.degree(); ++i) {
      const RatVec c = a.coeff(i).coords();
      v.insert(v.end(), c.begin(), c.end());
    }
    return v;
  }
  NFPoly mul(const NFPoly& a, const NFPoly& b) const { return nfpoly_divmod(a * b, h_).second; }

 private:
  NumberField k_;
  NFPoly h_;
};

}  // namespace detail

/// One irreducible factor of h over K together with the simple extension it defines.
struct NormComponent {
  NFPoly factor;         ///< monic irreducible factor of h over K
  RatPoly norm_factor;   ///< minimal polynomial over Q of X + shift*alpha modulo factor
  RatPoly alpha_in_gamma;  ///< generator of K as a polynomial in gamma (mod norm_factor)
  RatPoly root_in_gamma;   ///< root X of factor as a polynomial in gamma (mod norm_factor)
};

struct NormSplit {
  long shift = 0;
  RatPoly norm;
  std::vector<NormComponent> components;
};

/// Shifts tried for primitive elements: 1, -1, 2, -2, ..., +-bound.
inline std::vector<long> primitive_shifts(int bound) {
  std::vector<long> out;
  for (long c = 1; c <= bound; ++c) {
    out.push_back(c);
    out.push_back(-c);
  }
  return out;
}

/// Splits a monic squarefree h over K by the norm of h(X - s*alpha): picks the
/// first shift s making X + s*alpha primitive in K[X]/(h), factors its
/// minimal polynomial over Q and recovers each factor of h as a gcd.
inline NormSplit norm_split(const NumberField& k, const NFPoly& h_in, int shift_bound = 20) {
  if (h_in.degree() < 1) throw std::invalid_argument("norm_split: constant polynomial");
  NFPoly h = h_in.monic();
  const int n = k.degree();
  const int dim = n * h.degree();
  detail::RelativeAlgebra alg(k, h);
  const NFElement alpha = k.generator();

  std::vector<long> shifts{0};
  if (n > 1) shifts = primitive_shifts(shift_bound);
  for (long s : shifts) {
    // gamma = X + s*alpha
    NFPoly gamma(k, {Rat(s) * alpha, k.one()});
    if (h.degree() == 1) gamma = NFPoly(k, {Rat(s) * alpha - h.coeff(0)});
    KrylovBasis kb(dim);
    NFPoly pw(k, {k.one()});
    std::optional<RatVec> dep;
    int k_deg = 0;
    for (; k_deg <= dim; ++k_deg) {
      dep = kb.insert(alg.to_vec(pw));
      if (dep) break;
      pw = alg.mul(pw, gamma);
    }
    if (k_deg < dim) continue;  // not primitive
    std::vector<Rat> nc(dim + 1);
    for (int i = 0; i < dim; ++i) nc[i] = -(*dep)[i];
    nc[dim] = 1;
    NormSplit out;
    out.shift = s;
    out.norm = RatPoly(std::move(nc));

    auto alpha_c = kb.express(alg.to_vec(NFPoly(k, {alpha})));
    NFPoly xpoly = h.degree() == 1 ? NFPoly(k, {-h.coeff(0)}) : NFPoly(k, {k.zero(), k.one()});
    auto root_c = kb.express(alg.to_vec(xpoly));
    if (!alpha_c || !root_c) throw InternalFault("norm_split: gamma does not generate the algebra");
    RatPoly alpha_g(*alpha_c), root_g(*root_c);

    for (const auto& nj : factor_over_Q(out.norm)) {
      RatPoly njm = nj.monic();
      // N_j(X + s*alpha) mod h, by Horner in K[X]/(h)
      NFPoly acc(k);
      for (int i = njm.degree(); i >= 0; --i)
        acc = nfpoly_divmod(alg.mul(acc, gamma) + NFPoly(k, {k.from_rat(njm.coeff(i))}), h).second;
      NFPoly hj = acc.is_zero() ? h : nfpoly_gcd(h, acc);
      if (hj.degree() < 1) throw InternalFault("norm_split: empty factor");
      out.components.push_back({hj, njm, alpha_g % njm, root_g % njm});
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const NormComponent& a, const NormComponent& b) {
                if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
                return poly_order_less(a.norm_factor, b.norm_factor);
              });
    int total = 0;
    for (const auto& c : out.components) total += c.factor.degree();
    if (total != h.degree()) throw InternalFault("norm_split: factor degrees do not add up");
    return out;
  }
  throw std::runtime_error("primitive element search exhausted (|c| <= " + std::to_string(shift_bound) +
                           "); enlarge the bound");
}

/// Irreducible monic factors of f over K, with multiplicity, sorted.
inline std::vector<NFPoly> factor_over_nf(const NFPoly& f, int shift_bound = 20) {
  if (f.is_zero()) throw std::invalid_argument("factor_over_nf: zero polynomial");
  std::vector<NFPoly> out;
  if (f.degree() < 1) return out;
  const NumberField& k = f.field();
  // squarefree decomposition over K (characteristic zero)
  NFPoly a = f.monic();
  NFPoly b = nfpoly_gcd(a, a.derivative());
  NFPoly c = nfpoly_divmod(a, b).first;
  int mult = 1;
  while (c.degree() >= 1) {
    NFPoly y = nfpoly_gcd(c, b);
    NFPoly z = nfpoly_divmod(c, y).first;
    if (z.degree() >= 1) {
      if (z.degree() == 1) {
        for (int i = 0; i < mult; ++i) out.push_back(z.monic());
      } else {
        for (const auto& comp : norm_split(k, z, shift_bound).components)
          for (int i = 0; i < mult; ++i) out.push_back(comp.factor);
      }
    }
    c = y;
    b = nfpoly_divmod(b, y).first;
    ++mult;
  }
  std::sort(out.begin(), out.end(), nfpoly_order_less);
  return out;
}

inline std::vector<NFPoly> factor_over_nf(const RatPoly& f, const NumberField& k, int shift_bound = 20) {
  return factor_over_nf(NFPoly(k, f), shift_bound);
}

/// Roots of f lying in K, ascending by coordinates, without repetition.
inline std::vector<NFElement> roots_in_field(const RatPoly& f, const NumberField& k) {
  std::vector<NFElement> roots;
  for (const auto& g : factor_over_nf(squarefree_part(f), k))
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  std::sort(roots.begin(), roots.end(), [](const NFElement& a, const NFElement& b) { return a.coords() < b.coords(); });
  return roots;
}

/// All embeddings of K_sub into L (empty when K_sub does not embed).
inline std::vector<EmbeddingMap> embed_subfield(const NumberField& sub, const NumberField& l) {
  std::vector<EmbeddingMap> out;
  if (l.degree() % sub.degree() != 0) return out;
  if (sub.is_rationals()) {
    out.emplace_back(sub, l.from_rat(-sub.defining_poly().coeff(0)));
    return out;
  }
  for (auto& r : roots_in_field(sub.defining_poly(), l)) out.emplace_back(sub, r);
  return out;
}

/// A compositum L of K1 and K2 with the two inclusions.
struct Compositum {
  NumberField field;
  EmbeddingMap iota1;
  EmbeddingMap iota2;
  long shift;  ///< L = Q(theta1 + shift * theta2)
};

/// All composita of K1 and K2 up to isomorphism, one per irreducible factor
/// of K1's defining polynomial over K2. Sorted by degree.
inline std::vector<Compositum> compositum(const NumberField& k1, const NumberField& k2, int shift_bound = 20) {
  std::vector<Compositum> out;
  if (k2.is_rationals() || k1.is_rationals()) {
    const NumberField& big = k2.is_rationals() ? k1 : k2;
    EmbeddingMap id(big, big.generator());
    const NumberField& q = k1.is_rationals() ? k1 : k2;
    EmbeddingMap triv(q, big.from_rat(-q.defining_poly().coeff(0)));
    if (k2.is_rationals())
      out.push_back({big, id, triv, 0});
    else
      out.push_back({big, triv, id, 0});
    return out;
  }
  NormSplit split = norm_split(k2, NFPoly(k2, k1.defining_poly()), shift_bound);
  for (const auto& comp : split.components) {
    NumberField l = NumberField::trusted(comp.norm_factor);
    EmbeddingMap i1(k1, l.from_poly(comp.root_in_gamma));
    EmbeddingMap i2(k2, l.from_poly(comp.alpha_in_gamma));
    out.push_back({l, i1, i2, split.shift});
  }
  return out;
}

}  // namespace ramlab
