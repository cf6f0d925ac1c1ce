// Copyright 2026 The ubraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex tensor algebra and matrix-free application of braid
 * generators to strand-space vectors.
 *
 * Basis convention: an index into V^{(x)m} (dim V = d) is the base-d number
 * whose most significant digit is strand 1. Slots are 1-based.
 */

#pragma once

#include <Eigen/SVD>
#include <cmath>
#include <vector>

#include "ubraid/types.hpp"

namespace ubraid {

template <class Derived>
using PlainOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Kronecker product a (x) b.
template <class DA, class DB>
PlainOf<DA> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  PlainOf<DA> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

/// Tr_2 over the second factor of a (dim1*dim2)-square matrix: out(i,j) = sum_k c(ik, jk).
template <class Derived>
PlainOf<Derived> partial_trace_2(const Eigen::MatrixBase<Derived>& c, Eigen::Index dim1, Eigen::Index dim2) {
  if (dim1 < 1 || dim2 < 1 || c.rows() != dim1 * dim2 || c.cols() != dim1 * dim2)
    throw Error(Errc::shape, "partial_trace_2 expects a square matrix of side dim1*dim2");
  PlainOf<Derived> out = PlainOf<Derived>::Zero(dim1, dim1);
  for (Eigen::Index i = 0; i < dim1; ++i)
    for (Eigen::Index j = 0; j < dim1; ++j)
      for (Eigen::Index k = 0; k < dim2; ++k) out(i, j) += c(i * dim2 + k, j * dim2 + k);
  return out;
}

/// Swap operator on C^d (x) C^d: sum_{a,b} (ab) (x) (ba).
template <class T = double>
Matrix<T> swap_operator(Eigen::Index d) {
  Matrix<T> p = Matrix<T>::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) p(a * d + b, b * d + a) = T(1);
  return p;
}

/// The (2n)^2-square permutation matrix P.
template <class T = double>
Matrix<T> permutation_P(int n) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  return swap_operator<T>(2 * n);
}

/// Stride of a 1-based slot in V^{(x)m}.
constexpr std::int64_t slot_stride(int d, int m, int slot) noexcept { return ipow(d, m - slot); }

/**
 * Applies a two-site operator to every column of `x`, with the operator's
 * first tensor factor on `slot_a` and its second on `slot_b` (any two
 * distinct slots). Only the nonzero entries of `op` are visited, so sparse
 * local operators such as the braid matrices cost O(nnz/col * rows * cols).
 */
template <class DOp, class DX>
PlainOf<DX> apply_two_site(const Eigen::MatrixBase<DOp>& op, int d, int m, int slot_a, int slot_b,
                           const Eigen::MatrixBase<DX>& x) {
  using Scalar = typename DX::Scalar;
  if (slot_a < 1 || slot_a > m || slot_b < 1 || slot_b > m || slot_a == slot_b)
    throw Error(Errc::slot, "two-site slots must be distinct and within 1.." + std::to_string(m));
  if (op.rows() != d * d || op.cols() != d * d)
    throw Error(Errc::shape, "local operator must be (d^2)-square");
  const std::int64_t dim = ipow(d, m);
  if (x.rows() != dim) throw Error(Errc::shape, "operand rows must equal d^m");

  struct Entry {
    int row;
    Scalar value;
  };
  std::vector<std::vector<Entry>> by_col(static_cast<std::size_t>(d * d));
  for (int c = 0; c < d * d; ++c)
    for (int r = 0; r < d * d; ++r)
      if (op(r, c) != Scalar(0)) by_col[static_cast<std::size_t>(c)].push_back({r, Scalar(op(r, c))});

  const std::int64_t sa = slot_stride(d, m, slot_a), sb = slot_stride(d, m, slot_b);
  PlainOf<DX> out = PlainOf<DX>::Zero(x.rows(), x.cols());
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    const std::int64_t da = (idx / sa) % d, db = (idx / sb) % d;
    const std::int64_t base = idx - da * sa - db * sb;
    for (const auto& e : by_col[static_cast<std::size_t>(da * d + db)]) {
      const std::int64_t target = base + (e.row / d) * sa + (e.row % d) * sb;
      out.row(target) += e.value * x.row(idx);
    }
  }
  return out;
}

/// Dense embedding of a two-site operator into V^{(x)m}.
template <class DOp>
PlainOf<DOp> embed_two_site(const Eigen::MatrixBase<DOp>& op, int d, int m, int slot_a, int slot_b) {
  const std::int64_t dim = ipow(d, m);
  if (dim > max_space_dim) throw Error(Errc::too_large, "embedding dimension exceeds guard");
  return apply_two_site(op, d, m, slot_a, slot_b, PlainOf<DOp>::Identity(dim, dim));
}

/// Realignment R[(a,c),(b,e)] = op[(a,b),(c,e)] across a d1 (x) d2 split.
template <class Derived>
PlainOf<Derived> realign(const Eigen::MatrixBase<Derived>& op, Eigen::Index d1, Eigen::Index d2) {
  if (op.rows() != d1 * d2 || op.cols() != d1 * d2) throw Error(Errc::shape, "realign expects (d1*d2)-square input");
  PlainOf<Derived> out(d1 * d1, d2 * d2);
  for (Eigen::Index a = 0; a < d1; ++a)
    for (Eigen::Index b = 0; b < d2; ++b)
      for (Eigen::Index c = 0; c < d1; ++c)
        for (Eigen::Index e = 0; e < d2; ++e) out(a * d1 + c, b * d2 + e) = op(a * d2 + b, c * d2 + e);
  return out;
}

/// Operator Schmidt rank: 1 iff op factorizes as A (x) B.
template <class Derived>
int operator_schmidt_rank(const Eigen::MatrixBase<Derived>& op, Eigen::Index d1, Eigen::Index d2,
                          double tol = 1e-12) {
  const auto r = realign(op, d1, d2);
  Eigen::JacobiSVD<PlainOf<Derived>> svd(r);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++rank;
  return rank;
}

// ---------------------------------------------------------------------------
// Strand space

template <class T = double>
struct StrandVector {
  int n = 1;  ///< half local dimension; each strand carries C^{2n}
  int m = 1;  ///< strand count
  Vector<T> amplitudes;

  int local_dim() const noexcept { return 2 * n; }
  std::int64_t dim() const noexcept { return ipow(2 * n, m); }

  static StrandVector make(int n, int m, Vector<T> amplitudes) {
    check_dims(n, m);
    if (amplitudes.size() != ipow(2 * n, m)) throw Error(Errc::shape, "amplitude count must be (2n)^m");
    return StrandVector{n, m, std::move(amplitudes)};
  }

  static StrandVector basis(int n, int m, std::int64_t index) {
    check_dims(n, m);
    Vector<T> v = Vector<T>::Zero(ipow(2 * n, m));
    if (index < 0 || index >= v.size()) throw Error(Errc::shape, "basis index out of range");
    v(index) = T(1);
    return StrandVector{n, m, std::move(v)};
  }

 private:
  static void check_dims(int n, int m) {
    if (n < 1 || m < 1) throw Error(Errc::shape, "n and m must be positive");
    // Structured application stays O((2n)^m); cap at 2^24 amplitudes.
    if (m * std::log2(2.0 * n) > 24.0) throw Error(Errc::too_large, "strand space exceeds 2^24 amplitudes");
  }
};

/// Matrix-free description of R^{sign}(z) for one class.
template <class T = double>
struct StructuredBraidOp {
  int n = 1;
  int sign = +1;
  T z = T(1);
  BraidClass variant = BraidClass::KJ;
};

namespace detail {

enum class Gen { J, K, L };

/// Entry (i, 2n-1-i) of a generator (0-based i). All three are anti-diagonal.
constexpr int antidiagonal_sign(Gen g, int n, int i) noexcept {
  const int ibar1 = 2 * n - i;  // 1-based conjugate index of the 1-based row i+1
  switch (g) {
    case Gen::K: return 1;
    case Gen::J: return (ibar1 % 2 == 0) ? 1 : -1;
    case Gen::L: return i < n ? 1 : -1;
  }
  return 0;
}

constexpr std::pair<Gen, Gen> factors(BraidClass c) noexcept {
  switch (c) {
    case BraidClass::KJ: return {Gen::K, Gen::J};
    case BraidClass::JK: return {Gen::J, Gen::K};
    case BraidClass::KL: return {Gen::K, Gen::L};
    case BraidClass::LK: return {Gen::L, Gen::K};
  }
  return {Gen::K, Gen::J};
}

}  // namespace detail

/**
 * (I^{slot-1} (x) R^{sign}(z) (x) I^{m-slot-1}) v without materializing any
 * (2n)^m-square matrix. Every amplitude couples to exactly one partner (both
 * adjacent digits reflected), so the cost is one pass over v.
 */
template <class T>
StrandVector<T> apply_generator(const StructuredBraidOp<T>& op, int slot, const StrandVector<T>& v) {
  if (op.n != v.n) throw Error(Errc::shape, "operator and vector disagree on n");
  if (slot < 1 || slot > v.m - 1)
    throw Error(Errc::slot, "slot " + std::to_string(slot) + " outside 1.." + std::to_string(v.m - 1));
  const int d = 2 * v.n;
  const auto [ga, gb] = detail::factors(op.variant);
  std::vector<T> sa(static_cast<std::size_t>(d)), sb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    sa[static_cast<std::size_t>(i)] = T(detail::antidiagonal_sign(ga, v.n, i));
    sb[static_cast<std::size_t>(i)] = T(detail::antidiagonal_sign(gb, v.n, i));
  }
  const T norm = T(1) / std::sqrt(T(1) + op.z * op.z);
  const T zs = T(op.sign) * op.z;

  const std::int64_t lo_span = slot_stride(d, v.m, slot + 1);
  const std::int64_t hi_span = ipow(d, slot - 1);
  const std::int64_t s1 = lo_span * d, s0 = s1 * d;

  StrandVector<T> out{v.n, v.m, Vector<T>(v.amplitudes.size())};
  const auto& in = v.amplitudes;
  for (std::int64_t hi = 0; hi < hi_span; ++hi)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const std::int64_t src = hi * s0 + a * s1 + b * lo_span;
        const std::int64_t partner = hi * s0 + (d - 1 - a) * s1 + (d - 1 - b) * lo_span;
        const T c = zs * sa[static_cast<std::size_t>(a)] * sb[static_cast<std::size_t>(b)];
        for (std::int64_t lo = 0; lo < lo_span; ++lo)
          out.amplitudes(src + lo) = norm * (in(src + lo) + c * in(partner + lo));
      }
  return out;
}

}  // namespace ubraid
