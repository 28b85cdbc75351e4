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

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramlab {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an input exceeds one of the desk-scale caps (degree, prime bound).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails. Never expected on valid input.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < (1ull << 20)) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  Int z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

inline std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t q = n + 1;
  while (!is_prime(q)) ++q;
  return q;
}

/// Non-negative residue of an arbitrary integer modulo m.
inline std::uint64_t mod_u64(const Int& a, std::uint64_t m) {
  Int r = a % Int(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

/// Residue of a rational whose denominator is a unit mod m.
inline std::uint64_t mod_u64(const Rat& a, std::uint64_t m) {
  Int den = a.get_den();
  Int inv;
  Int mm(static_cast<unsigned long>(m));
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible modulo " + std::to_string(m));
  return mod_u64(Int(a.get_num() * inv), m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse modulo p");
  return powmod_u64(a, p - 2, p);
}

/// Exponent of the prime p in the integer n (n != 0).
inline int p_adic_valuation(Int n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  Int pp(static_cast<unsigned long>(p));
  while (n % pp == 0) {
    n /= pp;
    ++v;
  }
  return v;
}

inline std::vector<std::uint64_t> prime_divisors(Int n) {
  std::vector<std::uint64_t> out;
  if (n < 0) n = -n;
  if (n == 0) return out;
  for (unsigned long d = 2; Int(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
    if (d > 100000) break;
  }
  if (n > 1 && n.fits_ulong_p() && is_prime(n.get_ui())) out.push_back(n.get_ui());
  return out;
}

/// Rational n/d with |n|, d <= sqrt(m/2) and n = a d mod m, when one exists.
inline std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
  Int bound = sqrt(Int(m / 2));
  Int r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Int g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  return make_rat(t1 < 0 ? Int(-r1) : r1, abs(t1));
}

inline int gcd_int(int a, int b) { return std::gcd(a, b); }
inline int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace ramlab
