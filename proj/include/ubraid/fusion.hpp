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
 * L(z) = R(z)P and T(z) = PR(z) towers built by the standard coproduct
 *   X^{(r+1)}_{ij} = sum_k X^{(1)}_{ik} (x) X^{(r)}_{kj},   X^{(0)}_{ij} = delta_ij,
 * and the RLL / RTT / FRT exchange relations.
 *
 * Blocks are unnormalized (the overall (1+z^2)^{-r/2} is dropped) and sparse:
 * every block of order r has at most 2^r nonzeros per column, while a dense
 * n = 2, r = 6 tower would need 16 blocks of 4096 x 4096.
 *
 * Exchange relations on V (x) V (x) V use the embedding
 *   R12(z'') L23(z) L13(z') = L23(z') L13(z) R12(z''),    z'' = (z - z') / (1 - z z'),
 *   R12(z'') T13(z) T23(z') = T13(z') T23(z) R12(z''),
 * which is the unique slot assignment that holds for the fundamental blocks.
 */

#pragma once

#include <Eigen/SparseCore>
#include <cmath>
#include <vector>

#include "ubraid/braidgen.hpp"
#include "ubraid/conformance.hpp"
#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

template <class T>
using SparseMatrix = Eigen::SparseMatrix<Complex<T>, Eigen::RowMajor>;

enum class TowerKind { L, T };

template <class T = double>
struct Tower {
  TowerKind kind = TowerKind::L;
  int n = 1;
  T z = T(0);
  int order = 0;
  BraidClass cls = BraidClass::KJ;
  bool normalized = false;
  std::vector<SparseMatrix<T>> blocks;  ///< (2n)^2 blocks, (i, j) at i * 2n + j (0-based)

  int local_dim() const noexcept { return 2 * n; }
  std::int64_t block_dim() const noexcept { return ipow(2 * n, order); }

  /// 1-based block access.
  const SparseMatrix<T>& block(int i, int j) const {
    const int d = local_dim();
    if (i < 1 || i > d || j < 1 || j > d) throw Error(Errc::slot, "block index outside 1.." + std::to_string(d));
    return blocks[static_cast<std::size_t>((i - 1) * d + (j - 1))];
  }

  Matrix<T> dense_block(int i, int j) const {
    if (block_dim() > max_space_dim) throw Error(Errc::too_large, "dense block exceeds guard");
    return Matrix<T>(block(i, j));
  }

  /// The full (2n)^{r+1}-square operator sum_ij (ij) (x) X_ij.
  Matrix<T> assemble() const {
    const int d = local_dim();
    const std::int64_t b = block_dim();
    if (b * d > max_space_dim) throw Error(Errc::too_large, "assembled tower exceeds guard");
    Matrix<T> out = Matrix<T>::Zero(b * d, b * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.block(i * b, j * b, b, b) = Matrix<T>(blocks[static_cast<std::size_t>(i * d + j)]);
    return out;
  }
};

namespace detail {

template <class T>
SparseMatrix<T> sparse_kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  std::vector<Eigen::Triplet<Complex<T>>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Eigen::Index ra = 0; ra < a.outerSize(); ++ra)
    for (typename SparseMatrix<T>::InnerIterator ia(a, ra); ia; ++ia)
      for (Eigen::Index rb = 0; rb < b.outerSize(); ++rb)
        for (typename SparseMatrix<T>::InnerIterator ib(b, rb); ib; ++ib)
          trips.emplace_back(static_cast<int>(ia.row() * b.rows() + ib.row()),
                             static_cast<int>(ia.col() * b.cols() + ib.col()), ia.value() * ib.value());
  SparseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

template <class T>
Tower<T> fundamental(TowerKind kind, int n, T z, BraidClass cls) {
  const int d = 2 * n;
  const Matrix<T> r = build_braid(BraidSpec<T>{n, cls, z, false});
  const Matrix<T> p = permutation_P<T>(n);
  const Matrix<T> full = kind == TowerKind::L ? Matrix<T>(r * p) : Matrix<T>(p * r);
  Tower<T> t{kind, n, z, 1, cls, false, {}};
  t.blocks.reserve(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t.blocks.push_back(Matrix<T>(full.block(i * d, j * d, d, d)).sparseView());
  return t;
}

}  // namespace detail

/// Order-0 seed: X_ij = delta_ij as 1x1 blocks.
template <class T = double>
Tower<T> seed_tower(TowerKind kind, int n, T z, BraidClass cls = BraidClass::KJ) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  const int d = 2 * n;
  Tower<T> t{kind, n, z, 0, cls, false, {}};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseMatrix<T> s(1, 1);
      if (i == j) s.insert(0, 0) = T(1);
      t.blocks.push_back(std::move(s));
    }
  return t;
}

/// Blocks of sqrt(1+z^2) R(z) P.
template <class T = double>
Tower<T> fundamental_L(int n, T z, BraidClass cls = BraidClass::KJ) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  return detail::fundamental(TowerKind::L, n, z, cls);
}

/// Blocks of sqrt(1+z^2) P R(z).
template <class T = double>
Tower<T> fundamental_T(int n, T z, BraidClass cls = BraidClass::KJ) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  return detail::fundamental(TowerKind::T, n, z, cls);
}

template <class T>
Tower<T> coproduct_step(const Tower<T>& t) {
  if (t.normalized) throw Error(Errc::shape, "coproduct_step works on unnormalized towers");
  const int d = t.local_dim();
  if (ipow(d, t.order + 1) > max_space_dim) throw Error(Errc::too_large, "tower order exceeds (2n)^r <= 4096 guard");
  const Tower<T> f = detail::fundamental(t.kind, t.n, t.z, t.cls);
  Tower<T> out{t.kind, t.n, t.z, t.order + 1, t.cls, false, {}};
  out.blocks.reserve(static_cast<std::size_t>(d * d));
  const std::int64_t b = out.block_dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseMatrix<T> acc(b, b);
      for (int k = 0; k < d; ++k) {
        const auto& fik = f.blocks[static_cast<std::size_t>(i * d + k)];
        const auto& tkj = t.blocks[static_cast<std::size_t>(k * d + j)];
        if (fik.nonZeros() == 0 || tkj.nonZeros() == 0) continue;
        acc += detail::sparse_kron(fik, tkj);
      }
      acc.prune(Complex<T>(0));
      out.blocks.push_back(std::move(acc));
    }
  return out;
}

template <class T = double>
Tower<T> build_tower(TowerKind kind, int n, T z, int order, BraidClass cls = BraidClass::KJ) {
  if (order < 0) throw Error(Errc::shape, "order must be >= 0");
  if (ipow(2 * n, order) > max_space_dim) throw Error(Errc::too_large, "tower order exceeds (2n)^r <= 4096 guard");
  Tower<T> t = seed_tower<T>(kind, n, z, cls);
  for (int r = 0; r < order; ++r) t = coproduct_step(t);
  return t;
}

/// (1+z^2)^{-r/2}, the factor dropped from unnormalized towers.
template <class T>
T tower_normalizer(T z, int order) {
  return std::pow(T(1) + z * z, -T(order) / T(2));
}

template <class T>
Tower<T> normalize(Tower<T> t) {
  if (t.normalized) return t;
  const T s = tower_normalizer(t.z, t.order);
  for (auto& b : t.blocks) b *= s;
  t.normalized = true;
  return t;
}

template <class T>
Complex<T> block_trace(const Tower<T>& t, int i, int j) {
  const auto& b = t.block(i, j);
  Complex<T> s(0);
  for (Eigen::Index k = 0; k < b.outerSize(); ++k) s += b.coeff(k, k);
  return s;
}

/// Tr sum_i X_ii.
template <class T>
Complex<T> tower_trace(const Tower<T>& t) {
  if (t.order < 1) throw Error(Errc::shape, "trace needs order >= 1");
  Complex<T> s(0);
  for (int i = 1; i <= t.local_dim(); ++i) s += block_trace(t, i, i);
  return s;
}

/// 2((1+z)^r + (1-z)^r), the n = 2 closed form for both kinds.
template <class T>
T tower_trace_closed_form_n2(T z, int order) {
  return T(2) * (std::pow(T(1) + z, order) + std::pow(T(1) - z, order));
}

// ---------------------------------------------------------------------------
// Exchange relations

/// z'' = (z - z') / (1 - z z'), the rapidity difference.
template <class T>
T rapidity_difference(T z, T zp) {
  const T den = T(1) - z * zp;
  if (std::abs(den) < T(1e-15)) throw Error(Errc::pole, "1 - z z' vanishes");
  return (z - zp) / den;
}

/// RLL, RTT and the diagonal (M-conjugated) RTT at the fundamental level.
template <class T = double>
std::vector<ResidualReport> check_rll(int n, T z, T zp, double tol = default_tolerance) {
  const int d = 2 * n;
  const T zpp = rapidity_difference(z, zp);
  const Matrix<T> p = permutation_P<T>(n);
  const auto R = [&](T s) { return build_braid(BraidSpec<T>{n, BraidClass::KJ, s, true}); };
  const auto E = [&](const Matrix<T>& op, int a, int b) { return embed_two_site(op, d, 3, a, b); };
  const Matrix<T> r12 = E(R(zpp), 1, 2);

  std::vector<ResidualReport> out;
  const Matrix<T> l = R(z) * p, lp = R(zp) * p;
  out.push_back(make_report("RLL", r12 * E(l, 2, 3) * E(lp, 1, 3) - E(lp, 2, 3) * E(l, 1, 3) * r12, tol));

  const Matrix<T> t = p * R(z), tp = p * R(zp);
  const Matrix<T> tt = E(t, 1, 3) * E(tp, 2, 3), ttp = E(tp, 1, 3) * E(t, 2, 3);
  out.push_back(make_report("RTT", r12 * tt - ttp * r12, tol));

  const Matrix<T> m = build_M<T>(n), mi = build_M_inverse<T>(n);
  const Matrix<T> m12 = E(m, 1, 2), mi12 = E(mi, 1, 2);
  const Matrix<T> dg = E(Matrix<T>(m * R(zpp) * mi), 1, 2);
  out.push_back(make_report("diagonal RTT", dg * (m12 * tt * mi12) - (m12 * ttp * mi12) * dg, tol));
  return out;
}

/// Constant FRT relations R L2^e L1^e' = L2^e' L1^e R with R = R(1), L^{+-} = R(+-1)P,
/// for (e, e') = (+,+), (-,-), (+,-).
template <class T = double>
std::vector<ResidualReport> check_frt_constant(int n, double tol = default_tolerance) {
  const int d = 2 * n;
  const Matrix<T> p = permutation_P<T>(n);
  const auto R = [&](T s) { return build_braid(BraidSpec<T>{n, BraidClass::KJ, s, true}); };
  const auto E = [&](const Matrix<T>& op, int a, int b) { return embed_two_site(op, d, 3, a, b); };
  const Matrix<T> r12 = E(R(T(1)), 1, 2);
  const Matrix<T> lplus = R(T(1)) * p, lminus = R(T(-1)) * p;
  struct Case {
    const char* name;
    const Matrix<T>* e;
    const Matrix<T>* ep;
  };
  const Case cases[] = {{"FRT (+,+)", &lplus, &lplus}, {"FRT (-,-)", &lminus, &lminus}, {"FRT (+,-)", &lplus, &lminus}};
  std::vector<ResidualReport> out;
  for (const auto& c : cases)
    out.push_back(make_report(
        c.name, r12 * E(*c.e, 2, 3) * E(*c.ep, 1, 3) - E(*c.ep, 2, 3) * E(*c.e, 1, 3) * r12, tol));
  return out;
}

}  // namespace ubraid
