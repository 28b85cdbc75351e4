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

// Independent reference computations for the test suites. Nothing here calls
// the library's algorithms; inputs and outputs are plain coefficient vectors.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using Rat = mpq_class;
using Coeffs = std::vector<Rat>;  // ascending

/// Determinant by Gaussian elimination over Q.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Res(a, b) as the determinant of the Sylvester matrix.
inline Rat sylvester_resultant(const Coeffs& a, const Coeffs& b) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int s = m + n;
  std::vector<std::vector<Rat>> M(s, std::vector<Rat>(s, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
  return determinant(M);
}

inline std::vector<std::uint64_t> roots_mod_p(const std::vector<long>& f, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    long long acc = 0;
    const long long m = static_cast<long long>(p);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ((acc * static_cast<long long>(x) + *it) % m + m) % m;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// True when the monic integer f has a monic integer quadratic factor with
/// coefficients bounded by `bound` in absolute value.
inline bool has_quadratic_factor(const std::vector<long>& f, long bound) {
  for (long b = -bound; b <= bound; ++b)
    for (long c = -bound; c <= bound; ++c) {
      if (c == 0) continue;
      std::vector<long> r(f.begin(), f.end());
      for (int i = static_cast<int>(r.size()) - 1; i >= 2; --i) {
        long t = r[i];
        r[i] = 0;
        r[i - 1] -= t * b;
        r[i - 2] -= t * c;
      }
      if (r[0] == 0 && r[1] == 0) return true;
    }
  return false;
}

/// Number of maximal ideals of F_p[x]/(x^2 + b x + c), by brute force over
/// its p^2 elements: principal ideals generated by non-units, kept when not
/// strictly contained in another proper ideal.
inline int maximal_ideals_quadratic(long b, long c, long p) {
  auto mulq = [&](std::pair<long, long> u, std::pair<long, long> v) {
    // (u0 + u1 x)(v0 + v1 x), x^2 = -b x - c
    long x0 = u.first * v.first, x1 = u.first * v.second + u.second * v.first, x2 = u.second * v.second;
    long r0 = ((x0 - c * x2) % p + p) % p, r1 = ((x1 - b * x2) % p + p) % p;
    return std::pair<long, long>{r0, r1};
  };
  std::vector<std::pair<long, long>> elems;
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j) elems.push_back({i, j});
  std::set<std::set<std::pair<long, long>>> ideals;
  for (auto a : elems) {
    std::set<std::pair<long, long>> I;
    for (auto r : elems) I.insert(mulq(a, r));
    if (I.count({1, 0})) continue;
    ideals.insert(I);
  }
  int count = 0;
  for (const auto& I : ideals) {
    bool maximal = true;
    for (const auto& J : ideals)
      if (J != I && J.size() > I.size() &&
          std::includes(J.begin(), J.end(), I.begin(), I.end()))
        maximal = false;
    if (maximal) ++count;
  }
  return count;
}

}  // namespace oracle
