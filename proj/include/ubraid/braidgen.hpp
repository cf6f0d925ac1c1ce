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
 * Constructors for every braid-matrix family: the (2n)-square generators
 * I, J, K, L; the Baxterized (2n)^2-square braid matrices of all four
 * classes; complex projectors; the diagonalizer M and block diagonalizer V;
 * the 9x9 odd-dimensional complex unitary family; and the phase-gauge
 * canonicalizer for 4x4 matrices.
 *
 * Matrix units (ij) are 1-indexed in the formulas below and stored 0-indexed.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

template <class T = double>
struct GeneratorSet {
  int n = 1;
  Matrix<T> I, J, K, L;
};

namespace detail {
constexpr int parity(int k) noexcept { return (k % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// I, J, K, L with conjugate index ibar = 2n - i + 1:
///   J = sum_i (-1)^{ibar}(i ibar) + (-1)^i (ibar i),  K = sum (i ibar) + (ibar i),
///   L = sum (i ibar) - (ibar i).
template <class T = double>
GeneratorSet<T> build_generators(int n) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  const int d = 2 * n;
  GeneratorSet<T> g{n, Matrix<T>::Identity(d, d), Matrix<T>::Zero(d, d), Matrix<T>::Zero(d, d),
                    Matrix<T>::Zero(d, d)};
  for (int i = 1; i <= n; ++i) {
    const int ib = d - i + 1;
    g.J(i - 1, ib - 1) = T(detail::parity(ib));
    g.J(ib - 1, i - 1) = T(detail::parity(i));
    g.K(i - 1, ib - 1) = T(1);
    g.K(ib - 1, i - 1) = T(1);
    g.L(i - 1, ib - 1) = T(1);
    g.L(ib - 1, i - 1) = T(-1);
  }
  return g;
}

/// The ordered tensor pair (A, B) whose product A (x) B multiplies z.
template <class T>
std::pair<const Matrix<T>&, const Matrix<T>&> class_factors(const GeneratorSet<T>& g, BraidClass c) {
  switch (c) {
    case BraidClass::KJ: return {g.K, g.J};
    case BraidClass::JK: return {g.J, g.K};
    case BraidClass::KL: return {g.K, g.L};
    case BraidClass::LK: return {g.L, g.K};
  }
  return {g.K, g.J};
}

/// Symbolic braid matrix; `z = tanh(theta)`, with z = +-1 the constant limits.
template <class T = double>
struct BraidSpec {
  int n = 1;
  BraidClass cls = BraidClass::KJ;
  T z = T(1);
  bool normalized = true;  ///< apply 1/sqrt(1+z^2)

  static BraidSpec from_rapidity(int n, BraidClass cls, T theta, bool normalized = true) {
    return BraidSpec{n, cls, std::tanh(theta), normalized};
  }
};

/// A (x) B for the class, as a (2n)^2-square matrix.
template <class T = double>
Matrix<T> class_tensor(int n, BraidClass cls) {
  const auto g = build_generators<T>(n);
  const auto [a, b] = class_factors(g, cls);
  return kron(a, b);
}

/// (1/sqrt(1+z^2)) (I (x) I + z A (x) B).
template <class T>
Matrix<T> build_braid(const BraidSpec<T>& spec) {
  const int d = 2 * spec.n;
  Matrix<T> r = Matrix<T>::Identity(d * d, d * d) + spec.z * class_tensor<T>(spec.n, spec.cls);
  if (spec.normalized) r /= std::sqrt(T(1) + spec.z * spec.z);
  return r;
}

/// R(z)^{-1} = R(-z) (normalized form).
template <class T>
Matrix<T> build_braid_inverse(BraidSpec<T> spec) {
  spec.z = -spec.z;
  return build_braid(spec);
}

template <class T = double>
struct Projectors {
  Matrix<T> plus, minus;
};

/// P+- = (1/2)(I (x) I +- i K (x) J).
template <class T = double>
Projectors<T> build_projectors(int n) {
  const int d = 2 * n;
  const Complex<T> half_i(T(0), T(0.5));
  const Matrix<T> kj = class_tensor<T>(n, BraidClass::KJ);
  const Matrix<T> half_id = T(0.5) * Matrix<T>::Identity(d * d, d * d);
  return {half_id + half_i * kj, half_id - half_i * kj};
}

namespace detail {
template <class T>
Matrix<T> m_power(int n, T sign) {
  const int d = 2 * n;
  const auto g = build_generators<T>(n);
  const Complex<T> coeff(T(0), sign);
  return (Matrix<T>::Identity(d * d, d * d) + coeff * kron(g.L, g.J)) / std::sqrt(T(2));
}
}  // namespace detail

/// M = (1/sqrt 2)(I (x) I + i L (x) J); M R(z) M^{-1} is diagonal.
template <class T = double>
Matrix<T> build_M(int n) {
  return detail::m_power<T>(n, T(1));
}

template <class T = double>
Matrix<T> build_M_inverse(int n) {
  return detail::m_power<T>(n, T(-1));
}

/// Entries of the diagonal M R(z) M^{-1}: (1 - iz) on the first 2n^2 indices,
/// (1 + iz) on the rest, scaled by 1/sqrt(1+z^2).
template <class T = double>
Vector<T> diagonal_spectrum(int n, T z) {
  const int d = 2 * n;
  const T norm = T(1) / std::sqrt(T(1) + z * z);
  Vector<T> diag(d * d);
  for (int k = 0; k < d * d; ++k) diag(k) = norm * Complex<T>(T(1), k < 2 * n * n ? -z : z);
  return diag;
}

/// Involutive permutation U of the 2x2 blocks of the diagonal form. The 2n^2
/// blocks split into a (1 - iz) half and a (1 + iz) half; U swaps the k-th
/// even position of the first half with the k-th odd position counted from
/// the end of the second half, so blocks alternate (1 - iz), (1 + iz).
template <class T = double>
Matrix<T> build_block_permutation(int n) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  const int blocks = 2 * n * n, half = n * n;
  std::vector<int> sigma(static_cast<std::size_t>(blocks));
  for (int i = 0; i < blocks; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::vector<int> evens_first, odds_second;
  for (int p = 1; p < half; p += 2) evens_first.push_back(p);            // 1-based even positions
  for (int p = blocks - 2; p >= half; p -= 2) odds_second.push_back(p);  // 1-based odd, from the end
  for (std::size_t k = 0; k < evens_first.size() && k < odds_second.size(); ++k)
    std::swap(sigma[static_cast<std::size_t>(evens_first[k])], sigma[static_cast<std::size_t>(odds_second[k])]);

  Matrix<T> u = Matrix<T>::Zero(2 * blocks, 2 * blocks);
  for (int i = 0; i < blocks; ++i)
    u.block(2 * i, 2 * sigma[static_cast<std::size_t>(i)], 2, 2) = Matrix<T>::Identity(2, 2);
  return u;
}

/// V with V R_(2n)(z) V^{-1} = I_{n^2} (x) R_(2)(z) for every z:
/// diagonalize with M, regroup with U, then undo each 4x4 group with M_(2)^{-1}.
/// V is unitary, so V^{-1} = V^dagger.
template <class T = double>
Matrix<T> build_block_diagonalizer(int n) {
  if (n < 2) throw Error(Errc::trivial, "n = 1 is already a single R_(2) block");
  const Matrix<T> blocks = kron(Matrix<T>::Identity(n * n, n * n), build_M_inverse<T>(1));
  return blocks * build_block_permutation<T>(n) * build_M<T>(n);
}

/// The block-diagonal R' = direct sum of n^2 copies of R_(2)(z).
template <class T = double>
Matrix<T> base_direct_sum(int n, T z) {
  return kron(Matrix<T>::Identity(n * n, n * n), build_braid(BraidSpec<T>{1, BraidClass::KJ, z, true}));
}

// ---------------------------------------------------------------------------
// Odd-dimensional complex unitary family (9x9)

template <class T = double>
struct OddBraidParams {
  T m11p = 0, m11m = 0, m12p = 0, m12m = 0, m21p = 0, m21m = 0;
  T theta = 0;

  OddBraidParams with_theta(T t) const {
    OddBraidParams p = *this;
    p.theta = t;
    return p;
  }
};

template <class T = double>
struct OddCoefficients {
  Complex<T> a_plus, a_minus, b_plus, b_minus, c_plus, c_minus;
};

/// a+- = (exp(i m11+ theta) +- exp(i m11- theta)) / 2, likewise b (m12), c (m21).
template <class T>
OddCoefficients<T> odd_coefficients(const OddBraidParams<T>& p) {
  auto pair = [&](T mp, T mm) {
    const Complex<T> ep = std::polar(T(1), mp * p.theta), em = std::polar(T(1), mm * p.theta);
    return std::pair{(ep + em) / T(2), (ep - em) / T(2)};
  };
  const auto [ap, am] = pair(p.m11p, p.m11m);
  const auto [bp, bm] = pair(p.m12p, p.m12m);
  const auto [cp, cm] = pair(p.m21p, p.m21m);
  return {ap, am, bp, bm, cp, cm};
}

/// The 9x9 R(theta) on C^3 (x) C^3 (basis +,0,- per factor): a couples
/// ++/-- and +-/-+, b couples +0/-0, c couples 0+/0-, and 00 is fixed.
template <class T>
Matrix<T> build_odd_braid(const OddBraidParams<T>& p) {
  const auto c = odd_coefficients(p);
  Matrix<T> r = Matrix<T>::Zero(9, 9);
  auto couple = [&r](int i, int j, Complex<T> diag, Complex<T> off) {
    r(i, i) = diag;
    r(j, j) = diag;
    r(i, j) = off;
    r(j, i) = off;
  };
  couple(0, 8, c.a_plus, c.a_minus);
  couple(1, 7, c.b_plus, c.b_minus);
  couple(2, 6, c.a_plus, c.a_minus);
  couple(3, 5, c.c_plus, c.c_minus);
  r(4, 4) = T(1);
  return r;
}

// ---------------------------------------------------------------------------
// Phase gauge

template <class T = double>
struct GaugeResult {
  Matrix<T> Y;          ///< diag(e^{-i phi/4}, e^{i phi/4})
  Matrix<T> canonical;  ///< (Y (x) Y) r (Y^{-1} (x) Y^{-1})
  T phi = 0;
};

/// sqrt(2) R - I for a phased construction: anti-diagonal (e^{i phi}, 1, -1, -e^{-i phi}).
template <class T = double>
Matrix<T> phased_antidiagonal(T phi) {
  Matrix<T> m = Matrix<T>::Zero(4, 4);
  m(0, 3) = std::polar(T(1), phi);
  m(1, 2) = T(1);
  m(2, 1) = T(-1);
  m(3, 0) = -std::polar(T(1), -phi);
  return m;
}

/**
 * Removes the spurious phase from a 4x4 matrix supported on the diagonal and
 * anti-diagonal. Conjugation by diagonal Y (x) Y rescales only the (1,4) and
 * (4,1) corners, so the anti-diagonal must have one common modulus, the
 * corners must carry conjugate-inverse phases and the inner entries must
 * already be real.
 */
template <class T>
GaugeResult<T> canonicalize_phases(const Matrix<T>& r, T tol = T(1e-12)) {
  if (r.rows() != 4 || r.cols() != 4) throw Error(Errc::shape, "canonicalize_phases handles 4x4 input only");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(r(i, j)) > tol)
        throw Error(Errc::not_gauge_equivalent, "support outside diagonal and anti-diagonal");
  const T scale = std::abs(r(0, 3));
  if (scale <= tol) throw Error(Errc::not_gauge_equivalent, "anti-diagonal corner vanishes");
  for (int i = 0; i < 4; ++i)
    if (std::abs(std::abs(r(i, 3 - i)) - scale) > tol)
      throw Error(Errc::not_gauge_equivalent, "anti-diagonal entries must share one modulus");
  for (int i : {1, 2}) {
    const Complex<T> e = r(i, 3 - i);
    if (std::abs(e.imag()) > tol) throw Error(Errc::not_gauge_equivalent, "inner anti-diagonal phase is not removable");
  }

  const T phi = std::arg(r(0, 3));
  Matrix<T> y = Matrix<T>::Zero(2, 2);
  y(0, 0) = std::polar(T(1), -phi / T(4));
  y(1, 1) = std::polar(T(1), phi / T(4));
  const Matrix<T> yy = kron(y, y);
  const Matrix<T> canonical = yy * r * yy.adjoint();
  if (std::abs(canonical(3, 0).imag()) > tol)
    throw Error(Errc::not_gauge_equivalent, "corner phases are not conjugate-inverse");
  return {y, canonical, phi};
}

}  // namespace ubraid
