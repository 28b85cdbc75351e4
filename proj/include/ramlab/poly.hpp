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
#include <cctype>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramlab/rational.hpp"

namespace ramlab {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
  static RatPoly monomial(const Rat& v, int deg) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = v;
    return RatPoly(std::move(c));
  }
  static RatPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
  const Rat& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return is_integer(r); });
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  RatPoly monic() const {
    if (is_zero()) return *this;
    Rat lc = leading();
    std::vector<Rat> c = c_;
    for (auto& v : c) v /= lc;
    return RatPoly(std::move(c));
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// p(x + shift)
  RatPoly taylor_shift(const Rat& shift) const {
    std::vector<Rat> c = c_;
    int n = degree();
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) c[j] += shift * c[j + 1];
    return RatPoly(std::move(c));
  }

  RatPoly operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return RatPoly(std::move(c));
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> c = a.c_;
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
  }
  RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
  RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
  RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }


 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& v : c_) v.canonicalize();
  }
  std::vector<Rat> c_;
};

/// Ordering by degree, then ascending coefficients lexicographically.
inline bool poly_order_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

inline std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  const Rat& lb = b.leading();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly operator%(const RatPoly& a, const RatPoly& b) { return poly_divmod(a, b).second; }
inline RatPoly operator/(const RatPoly& a, const RatPoly& b) { return poly_divmod(a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct PolyXgcd {
  RatPoly g, s, t;
};
inline PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b, s0 = RatPoly::constant(1), s1, t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
inline Rat resultant(const RatPoly& a0, const RatPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  RatPoly a = a0, b = b0;
  Rat acc = 1;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rat bm = 1;
      for (int i = 0; i < m; ++i) bm *= b.leading();
      return acc * bm;
    }
    RatPoly r = a % b;
    if (r.is_zero()) return 0;
    int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Rat discriminant(const RatPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  int n = f.degree();
  Rat r = resultant(f, f.derivative()) / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

/// gcd of the numerators divided by the lcm of the denominators, made positive.
inline Rat content(const RatPoly& f) {
  if (f.is_zero()) return 0;
  Int num = 0, den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rat(num, den);
}

/// Integer polynomial with coprime coefficients and positive leading coefficient.
inline RatPoly primitive_part(const RatPoly& f) {
  if (f.is_zero()) return f;
  Rat c = content(f);
  if (f.leading() < 0) c = -c;
  return (1 / c) * f;
}

/// p(q(x))
inline RatPoly compose(const RatPoly& p, const RatPoly& q) {
  RatPoly r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + RatPoly::constant(p.coeff(i));
  return r;
}

/// Squarefree part over Q (monic).
inline RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() < 1) return RatPoly::constant(1);
  RatPoly g = poly_gcd(f, f.derivative());
  return (f / g).monic();
}

/// Yun decomposition: returns monic (g_i, i) with f = lc * prod g_i^i, g_i squarefree coprime.
inline std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
  std::vector<std::pair<RatPoly, int>> out;
  if (f.degree() < 1) return out;
  RatPoly a = f.monic();
  RatPoly b = poly_gcd(a, a.derivative());
  RatPoly c = a / b;
  RatPoly d = a.derivative() / b - c.derivative();
  int i = 1;
  while (c.degree() >= 1) {
    RatPoly g = poly_gcd(c, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: "[-2,0,0,1]" (ascending) or symbolic "x^3-2".

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline std::string to_string(const RatPoly& f, char var = 'x') {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) {
      if (is_integer(a))
        os << a.get_str() << '*';
      else
        os << '(' << a.get_str() << ")*";
    }
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

inline std::string to_coeff_list(const RatPoly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += f.coeffs()[i].get_str();
  }
  return s + "]";
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  RatPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    RatPoly r = expr();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("cannot parse polynomial \"" + s_ + "\": " + msg);
  }
  bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  RatPoly expr() {
    RatPoly acc;
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    RatPoly t = term();
    acc = neg ? -t : t;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_++] == '-';
      RatPoly u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  RatPoly term() {
    RatPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        RatPoly d = factor();
        if (d.degree() != 0) fail("division by a non-constant");
        acc = (1 / d.leading()) * acc;
      } else if (peek('x') || peek('(')) {
        acc *= factor();  // implicit multiplication, e.g. 2x or 3(x+1)
      } else {
        return acc;
      }
    }
  }

  RatPoly factor() {
    RatPoly base = primary();
    if (peek('^')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (e > 4096) fail("exponent too large");
      RatPoly r = RatPoly::constant(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  RatPoly primary() {
    if (peek('x')) {
      ++pos_;
      return RatPoly::x();
    }
    if (peek('(')) {
      ++pos_;
      RatPoly r = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return r;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, 'x' or '('");
    return RatPoly::constant(Rat(Int(s_.substr(start, pos_ - start))));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline RatPoly parse_coeff_list(std::string_view s) {
  std::string body(s.substr(1));
  if (body.empty() || body.back() != ']')
    throw std::invalid_argument("coefficient list must end with ']'");
  body.pop_back();
  std::vector<Rat> c;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty coefficient in list");
    Rat r;
    if (r.set_str(t, 10) != 0 || t.find_first_not_of("+-0123456789/") != std::string::npos)
      throw std::invalid_argument("bad coefficient \"" + t + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    c.push_back(r);
  }
  return RatPoly(std::move(c));
}

}  // namespace detail

/// Parses either form; a leading '[' selects the coefficient-list syntax.
inline RatPoly parse_poly(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return detail::parse_coeff_list(text.substr(i));
  return detail::PolyParser(text).parse();
}

}  // namespace ramlab
