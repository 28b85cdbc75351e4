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

// Exact dense linear algebra over Q and over F_p. Vectors are rows.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/rational.hpp"

namespace ramlab {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

inline RatMatrix rat_identity(int n) {
  RatMatrix m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// v * M (row vector times matrix).
inline RatVec vec_mat(const RatVec& v, const RatMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  RatVec out(cols, Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) out[j] += v[i] * m[i][j];
  }
  return out;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mat(row, b));
  return out;
}

/// Inverse of a square rational matrix; nullopt when singular.
inline std::optional<RatMatrix> rat_inverse(const RatMatrix& m) {
  const int n = static_cast<int>(m.size());
  RatMatrix a = m, inv = rat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat s = 1 / a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= f * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline int rat_rank(RatMatrix a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (int j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Incrementally maintained echelon basis of a subspace of Q^n that also
/// records how each basis row is expressed in the inserted vectors. Used for
/// Krylov sequences: insert 1, g, g^2, ... until a dependency appears.
class KrylovBasis {
 public:
  explicit KrylovBasis(int dim) : dim_(dim) {}

  /// Inserts v (the k-th inserted vector). Returns the dependency
  /// c_0..c_{k-1} with v = sum c_i v_i when v lies in the span, else nullopt.
  std::optional<RatVec> insert(RatVec v) {
    const int k = count_;
    RatVec comb(k + 1, Rat(0));
    comb[k] = 1;
    reduce(v, comb);
    ++count_;
    int piv = first_nonzero(v);
    if (piv < 0) {
      RatVec dep(k);
      for (int i = 0; i < k; ++i) dep[i] = -comb[i];
      return dep;
    }
    Rat s = 1 / v[piv];
    for (auto& x : v) x *= s;
    for (auto& x : comb) x *= s;
    rows_.push_back({piv, std::move(v), std::move(comb)});
    return std::nullopt;
  }

  /// Coordinates of v in the inserted vectors, or nullopt if not in the span.
  std::optional<RatVec> express(RatVec v) const {
    RatVec comb(count_, Rat(0));
    reduce(v, comb);
    if (first_nonzero(v) >= 0) return std::nullopt;
    for (auto& x : comb) x = -x;
    return comb;
  }

  int size() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    int pivot;
    RatVec vec;
    RatVec comb;
  };

  static int first_nonzero(const RatVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return static_cast<int>(i);
    return -1;
  }

  void reduce(RatVec& v, RatVec& comb) const {
    for (const auto& row : rows_) {
      if (v[row.pivot] == 0) continue;
      Rat f = v[row.pivot];
      for (int j = row.pivot; j < dim_; ++j)
        if (row.vec[j] != 0) v[j] -= f * row.vec[j];
      for (std::size_t j = 0; j < row.comb.size(); ++j)
        if (row.comb[j] != 0) comb[j] -= f * row.comb[j];
    }
  }

  int dim_;
  int count_ = 0;
  std::vector<Row> rows_;
};

// ---------------------------------------------------------------------------
// F_p linear algebra.

using FpVec = std::vector<std::uint64_t>;
using FpMatrix = std::vector<FpVec>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> fp_rref(FpMatrix& a, std::uint64_t p) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][col] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = invmod_u64(a[r][col], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = a[i][col] % p;
      if (!f) continue;
      for (int j = col; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  return pivots;
}

inline int fp_rank(FpMatrix a, std::uint64_t p) { return static_cast<int>(fp_rref(a, p).size()); }

/// Basis of the left kernel {v : v * M = 0} of an r x c matrix.
inline FpMatrix fp_left_kernel(const FpMatrix& m, std::uint64_t p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(m[0].size());
  // row-reduce [M | I]; rows whose M-part vanishes give the kernel
  FpMatrix aug(rows, FpVec(cols + rows, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j] % p;
    aug[i][cols + i] = 1;
  }
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[piv], aug[r]);
    std::uint64_t inv = invmod_u64(aug[r][col], p);
    for (auto& x : aug[r]) x = x * inv % p;
    for (int i = r + 1; i < rows; ++i) {
      std::uint64_t f = aug[i][col];
      if (!f) continue;
      for (int j = col; j < cols + rows; ++j) aug[i][j] = (aug[i][j] + (p - f) * aug[r][j]) % p;
    }
    ++r;
  }
  FpMatrix ker;
  for (int i = r; i < rows; ++i) ker.emplace_back(aug[i].begin() + cols, aug[i].end());
  fp_rref(ker, p);
  return ker;
}

inline FpVec fp_vec_mat(const FpVec& v, const FpMatrix& m, std::uint64_t p) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  FpVec out(cols, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] = (out[j] + v[i] * m[i][j]) % p;
  }
  return out;
}

/// Echelonized subspace of F_p^n supporting membership and coordinate lookup.
class FpSubspace {
 public:
  FpSubspace() = default;
  FpSubspace(FpMatrix gens, int dim, std::uint64_t p) : p_(p), dim_(dim), rows_(std::move(gens)) {
    pivots_ = fp_rref(rows_, p_);
  }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return dim_; }
  const FpMatrix& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// v reduced against the basis (zero iff v is in the subspace).
  FpVec reduce(FpVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint64_t f = v[pivots_[i]] % p_;
      if (!f) continue;
      for (int j = 0; j < dim_; ++j) v[j] = (v[j] + (p_ - f) * rows_[i][j]) % p_;
    }
    return v;
  }
  bool contains(const FpVec& v) const {
    FpVec r = reduce(v);
    for (auto x : r)
      if (x % p_) return false;
    return true;
  }

 private:
  std::uint64_t p_ = 2;
  int dim_ = 0;
  FpMatrix rows_;
  std::vector<int> pivots_;
};

}  // namespace ramlab
