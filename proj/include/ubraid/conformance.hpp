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
 * Residual checks for the braid equation and its Baxterized form, unitarity,
 * the quadratic relation, periodicity, the projector and diagonalizer
 * identities, and the failure of the block-diagonal R' to braid.
 *
 * Triple products on V (x) V (x) V are assembled by applying the sparse local
 * matrix column-wise (apply_two_site), never by dense Kronecker products.
 */

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ubraid/braidgen.hpp"
#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

struct ResidualReport {
  std::string check;
  double max_abs_residual = 0;
  double frobenius_residual = 0;
  bool pass = true;
  double tolerance = default_tolerance;
};

template <class Derived>
ResidualReport make_report(std::string check, const Eigen::MatrixBase<Derived>& diff, double tol) {
  ResidualReport r;
  r.check = std::move(check);
  r.max_abs_residual = static_cast<double>(max_abs(diff));
  r.frobenius_residual = static_cast<double>(diff.norm());
  r.tolerance = tol;
  r.pass = r.max_abs_residual <= tol;
  return r;
}

/// Side d of a d^2-square matrix; "shape" if not an exact square of d >= 2.
inline int local_dim_of(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw Error(Errc::shape, "matrix is not square");
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows))));
  if (d < 2 || static_cast<Eigen::Index>(d) * d != rows)
    throw Error(Errc::shape, std::to_string(rows) + " is not d^2 for an integer d >= 2");
  return d;
}

namespace detail {
template <class T>
Matrix<T> on_slots(const Matrix<T>& op, int d, int first, const Matrix<T>& x) {
  return apply_two_site(op, d, 3, first, first + 1, x);
}
}  // namespace detail

/// R12(a) R23(b) R12(c) - R23(c) R12(b) R23(a) on C^d (x) C^d (x) C^d.
/// With a = b = c this is the constant braid equation.
template <class T>
Matrix<T> yang_baxter_difference(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  const int d = local_dim_of(a.rows(), a.cols());
  if (b.rows() != a.rows() || c.rows() != a.rows()) throw Error(Errc::shape, "local matrices differ in size");
  const Matrix<T> id = Matrix<T>::Identity(d * d * d, d * d * d);
  using detail::on_slots;
  const Matrix<T> lhs = on_slots(a, d, 1, on_slots(b, d, 2, on_slots(c, d, 1, id)));
  const Matrix<T> rhs = on_slots(c, d, 2, on_slots(b, d, 1, on_slots(a, d, 2, id)));
  return lhs - rhs;
}

template <class T>
Matrix<T> braid_difference(const Matrix<T>& r) {
  return yang_baxter_difference(r, r, r);
}

template <class T>
ResidualReport check_braid(const Matrix<T>& r, double tol = default_tolerance) {
  return make_report("braid", braid_difference(r), tol);
}

/// z'' = (z + z') / (1 + z z'), the tanh addition law.
template <class T>
T compose_rapidity(T z, T zp) {
  const T den = T(1) + z * zp;
  if (std::abs(den) < T(1e-15)) throw Error(Errc::pole, "1 + z z' vanishes");
  return (z + zp) / den;
}

/// R12(z) R23(z'') R12(z') = R23(z') R12(z'') R23(z).
template <class T>
ResidualReport check_baxterized(int n, BraidClass cls, T z, T zp, double tol = default_tolerance) {
  const T zpp = compose_rapidity(z, zp);
  const auto at = [&](T s) { return build_braid(BraidSpec<T>{n, cls, s, true}); };
  return make_report("baxterized braid", yang_baxter_difference(at(z), at(zpp), at(zp)), tol);
}

template <class T>
ResidualReport check_unitarity(const Matrix<T>& r, double tol = default_tolerance) {
  return make_report("unitarity", r.adjoint() * r - Matrix<T>::Identity(r.rows(), r.cols()), tol);
}

/// R(z) R(-z) = I.
template <class T>
ResidualReport check_inverse(const BraidSpec<T>& spec, double tol = default_tolerance) {
  const Matrix<T> r = build_braid(spec);
  return make_report("inverse", r * build_braid_inverse(spec) - Matrix<T>::Identity(r.rows(), r.cols()), tol);
}

/// R(z) + R(z)^{-1} = (2 / sqrt(1+z^2)) I.
template <class T>
ResidualReport check_quadratic(const BraidSpec<T>& spec, double tol = default_tolerance) {
  const Matrix<T> r = build_braid(spec);
  const T c = T(2) / std::sqrt(T(1) + spec.z * spec.z);
  return make_report("quadratic", r + build_braid_inverse(spec) - c * Matrix<T>::Identity(r.rows(), r.cols()), tol);
}

/// R^2 = sqrt(2) R - I, the z = 1 specialization of the quadratic relation.
template <class T>
ResidualReport check_hecke(const Matrix<T>& r, double tol = default_tolerance) {
  const Matrix<T> id = Matrix<T>::Identity(r.rows(), r.cols());
  return make_report("hecke", r * r - std::sqrt(T(2)) * r + id, tol);
}

/// {R^4 + I, R^8 - I}.
template <class T>
std::pair<ResidualReport, ResidualReport> check_periodicity(const Matrix<T>& r, double tol = default_tolerance) {
  if (r.rows() != r.cols()) throw Error(Errc::shape, "periodicity needs a square matrix");
  const Matrix<T> id = Matrix<T>::Identity(r.rows(), r.cols());
  const Matrix<T> r2 = r * r;
  const Matrix<T> r4 = r2 * r2;
  return {make_report("R^4 = -I", r4 + id, tol), make_report("R^8 = I", r4 * r4 - id, tol)};
}

template <class T>
ResidualReport check_odd_braid(const OddBraidParams<T>& params, T theta, T thetap, double tol = odd_family_tolerance) {
  const auto at = [&](T t) { return build_odd_braid(params.with_theta(t)); };
  return make_report("odd baxterized braid", yang_baxter_difference(at(theta), at(theta + thetap), at(thetap)), tol);
}

template <class T>
ResidualReport check_odd_unitarity(const OddBraidParams<T>& params, double tol = default_tolerance) {
  const Matrix<T> r = build_odd_braid(params);
  ResidualReport u = check_unitarity(r, tol);
  const ResidualReport inv = make_report(
      "", r * build_odd_braid(params.with_theta(-params.theta)) - Matrix<T>::Identity(9, 9), tol);
  u.check = "odd unitarity";
  if (inv.max_abs_residual > u.max_abs_residual) {
    u.max_abs_residual = inv.max_abs_residual;
    u.frobenius_residual = inv.frobenius_residual;
    u.pass = inv.pass;
  }
  return u;
}

/// Idempotence, orthogonality and completeness of P+-, the spectral
/// resolution of R(z), and the diagonalization by M.
template <class T = double>
std::vector<ResidualReport> check_projector_suite(int n, T z, double tol = 1e-13) {
  const int d = 2 * n, dd = d * d;
  const Matrix<T> id = Matrix<T>::Identity(dd, dd);
  const auto p = build_projectors<T>(n);
  const auto g = build_generators<T>(n);
  const Matrix<T> r = build_braid(BraidSpec<T>{n, BraidClass::KJ, z, true});
  const Matrix<T> m = build_M<T>(n), mi = build_M_inverse<T>(n);
  const T norm = T(1) / std::sqrt(T(1) + z * z);
  const Complex<T> one_minus(T(1), -z), one_plus(T(1), z);

  std::vector<ResidualReport> out;
  out.push_back(make_report("P+^2 = P+", p.plus * p.plus - p.plus, tol));
  out.push_back(make_report("P-^2 = P-", p.minus * p.minus - p.minus, tol));
  out.push_back(make_report("P+ P- = 0", p.plus * p.minus, tol));
  out.push_back(make_report("P+ + P- = I", p.plus + p.minus - id, tol));
  out.push_back(make_report("spectral resolution", r - norm * (one_minus * p.plus + one_plus * p.minus), tol));
  out.push_back(make_report("M M^-1 = I", m * mi - id, tol));
  out.push_back(make_report("M unitary", m.adjoint() * m - id, tol));
  const Matrix<T> half_id = T(0.5) * Matrix<T>::Identity(d, d);
  const Matrix<T> lk = g.L * g.K;
  const Matrix<T> id_d = Matrix<T>::Identity(d, d);
  out.push_back(make_report("M P+ M^-1", m * p.plus * mi - kron(Matrix<T>(half_id + T(0.5) * lk), id_d), tol));
  out.push_back(make_report("M P- M^-1", m * p.minus * mi - kron(Matrix<T>(half_id - T(0.5) * lk), id_d), tol));
  const Matrix<T> diag = diagonal_spectrum<T>(n, z).asDiagonal();
  out.push_back(make_report("M R M^-1 diagonal", m * r * mi - diag, tol));
  return out;
}

/// V R(z) V^dagger = I_{n^2} (x) R_(2)(z) and V unitary.
template <class T = double>
std::vector<ResidualReport> check_block_diagonalization(int n, T z, double tol = default_tolerance) {
  const Matrix<T> v = build_block_diagonalizer<T>(n);
  const Matrix<T> r = build_braid(BraidSpec<T>{n, BraidClass::KJ, z, true});
  return {make_report("V unitary", v.adjoint() * v - Matrix<T>::Identity(v.rows(), v.cols()), tol),
          make_report("V R V^-1 block diagonal", v * r * v.adjoint() - base_direct_sum<T>(n, z), tol)};
}

struct NonEquivalenceReport {
  ResidualReport braid;           ///< check_braid on R'; expected to fail
  ResidualReport difference;      ///< LHS - RHS against A - B
  double difference_frobenius = 0;
  int v_schmidt_rank = 0;         ///< operator Schmidt rank of V across 4 (x) 4
};

/// R' = I_4 (x) R_(2)(z) is not a braid matrix: with A = I_4 (x) R_(2) (x) I_4
/// and B = I_4 (x) I_4 (x) R_(2), A B A - B A B = A - B.
template <class T = double>
NonEquivalenceReport check_non_equivalence(T z = T(1), double tol = default_tolerance) {
  const Matrix<T> rp = base_direct_sum<T>(2, z);
  const Matrix<T> r2 = build_braid(BraidSpec<T>{1, BraidClass::KJ, z, true});
  const Matrix<T> i4 = Matrix<T>::Identity(4, 4);
  const Matrix<T> a = kron(kron(i4, r2), i4);
  const Matrix<T> b = kron(kron(i4, i4), r2);
  const Matrix<T> diff = braid_difference(rp);

  NonEquivalenceReport out;
  out.braid = make_report("braid (R')", diff, tol);
  out.difference = make_report("LHS - RHS = A - B", diff - (a - b), tol);
  out.difference_frobenius = static_cast<double>(diff.norm());
  out.v_schmidt_rank = operator_schmidt_rank(build_block_diagonalizer<T>(2), 4, 4);
  return out;
}

}  // namespace ubraid
