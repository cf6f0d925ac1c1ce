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
 * Cyclic chain Hamiltonians, inverse-Cayley potentials of the Yang-Baxter
 * matrix R(z) = P R_hat(z), and the coordinate relations / Q-operator
 * identities of the quantum plane defined by P- (X (x) X) = 0.
 */

#pragma once

#include <Eigen/LU>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "ubraid/braidgen.hpp"
#include "ubraid/conformance.hpp"
#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

// ---------------------------------------------------------------------------
// Hamiltonians

struct ChainSpec {
  int n = 1;
  int r = 2;  ///< sites; boundary is always cyclic
};

/// dR/dtheta at theta = 0, which is A (x) B for the class.
template <class T = double>
Matrix<T> derivative_at_zero(BraidClass cls, int n) {
  return class_tensor<T>(n, cls);
}

/// Central difference (R(tanh h) - R(tanh -h)) / 2h.
template <class T = double>
Matrix<T> derivative_finite_difference(BraidClass cls, int n, T h = T(1e-5)) {
  const auto at = [&](T theta) { return build_braid(BraidSpec<T>::from_rapidity(n, cls, theta)); };
  return (at(h) - at(-h)) / (T(2) * h);
}

/// C (v1 (x) v2 (x) ... (x) vr) = vr (x) v1 (x) ... (x) v_{r-1}.
template <class T = double>
Matrix<T> cyclic_shift(int d, int r) {
  const std::int64_t dim = ipow(d, r);
  if (dim > max_space_dim) throw Error(Errc::too_large, "cyclic shift dimension exceeds guard");
  const std::int64_t top = ipow(d, r - 1);
  Matrix<T> c = Matrix<T>::Zero(dim, dim);
  for (std::int64_t idx = 0; idx < dim; ++idx) c(idx % d * top + idx / d, idx) = T(1);
  return c;
}

/// H = sum_{k=1}^{r} dR_{k,k+1}(0), with site r+1 identified with site 1.
/// The wraparound term is the (1,2) term conjugated by the cyclic shift.
template <class T = double>
Matrix<T> hamiltonian(const ChainSpec& spec, BraidClass cls = BraidClass::KJ) {
  if (spec.n < 1 || spec.r < 2) throw Error(Errc::shape, "chain needs n >= 1 and r >= 2");
  const int d = 2 * spec.n;
  if (ipow(d, spec.r) > max_space_dim) throw Error(Errc::too_large, "(2n)^r exceeds the 4096 guard");
  const Matrix<T> rdot = derivative_at_zero<T>(cls, spec.n);
  Matrix<T> h = Matrix<T>::Zero(ipow(d, spec.r), ipow(d, spec.r));
  for (int k = 1; k < spec.r; ++k) h += embed_two_site(rdot, d, spec.r, k, k + 1);
  const Matrix<T> c = cyclic_shift<T>(d, spec.r);
  h += c.adjoint() * embed_two_site(rdot, d, spec.r, 1, 2) * c;
  return h;
}

// ---------------------------------------------------------------------------
// Potentials

template <class T = double>
struct PotentialParams {
  int n = 1;
  T z = T(0);
  Complex<T> mu = Complex<T>(2);

  /// lambda = mu / sqrt(1+z^2).
  Complex<T> lambda() const { return mu / std::sqrt(T(1) + z * z); }
};

/// sqrt(1+z^2) R(z) = P (I + z K (x) J), class I.
template <class T = double>
Matrix<T> scaled_yang_baxter(int n, T z) {
  return permutation_P<T>(n) * build_braid(BraidSpec<T>{n, BraidClass::KJ, z, false});
}

/// Denominators whose vanishing makes sqrt(1+z^2) R - mu I singular:
/// (1-mu)^2 + z^2, z^2 - mu^2 + 1, and for n >= 2 also (1+mu)^2 + z^2.
template <class T>
void check_shift(const PotentialParams<T>& p, T eps = T(1e-10)) {
  const Complex<T> mu = p.mu, z2(p.z * p.z);
  const Complex<T> one(1);
  if (std::abs((one - mu) * (one - mu) + z2) < eps)
    throw Error(Errc::singular_shift, "(1 - mu)^2 + z^2 vanishes");
  if (std::abs(z2 - mu * mu + one) < eps) throw Error(Errc::singular_shift, "z^2 - mu^2 + 1 vanishes");
  if (p.n >= 2 && std::abs((one + mu) * (one + mu) + z2) < eps)
    throw Error(Errc::singular_shift, "(1 + mu)^2 + z^2 vanishes");
}

/// X(z) = (sqrt(1+z^2) R(z) - mu I)^{-1}.
template <class T>
Matrix<T> cayley_potential(const PotentialParams<T>& p) {
  if (p.n < 1) throw Error(Errc::shape, "n must be >= 1");
  check_shift(p);
  const Matrix<T> a = scaled_yang_baxter<T>(p.n, p.z);
  return (a - p.mu * Matrix<T>::Identity(a.rows(), a.cols())).inverse();
}

/// -iV = I + 2 mu X.
template <class T>
Matrix<T> minus_iV(const PotentialParams<T>& p) {
  const Matrix<T> x = cayley_potential(p);
  return Matrix<T>::Identity(x.rows(), x.cols()) + T(2) * p.mu * x;
}

/// V itself, i (I + 2 mu X).
template <class T>
Matrix<T> potential_V(const PotentialParams<T>& p) {
  return Complex<T>(0, 1) * minus_iV(p);
}

/// V_(ab,cd) in V = sum V_(ab,cd) (ab) (x) (cd); indices 1-based.
template <class T>
Complex<T> potential_element(const Matrix<T>& v, int a, int b, int c, int d) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.rows()))));
  for (int k : {a, b, c, d})
    if (k < 1 || k > side) throw Error(Errc::slot, "potential index outside 1.." + std::to_string(side));
  return v((a - 1) * side + (c - 1), (b - 1) * side + (d - 1));
}

enum class CayleyForm {
  as_published,  ///< the (1j,3k), (2j,4k), (3j,1k), (4j,2k) families carry K1 K2
  corrected,     ///< those families carry K1 K3, K3 = 1 / ((1+mu)^2 + z^2)
};

/**
 * Closed-form X for n = 1 and n = 2. For n = 2 the family X(aj, bk) is the
 * 4x4 array (j, k) placed at row (a, b), column (j, k) of the 16x16 X.
 */
template <class T>
Matrix<T> cayley_closed_form(const PotentialParams<T>& p, CayleyForm form = CayleyForm::as_published) {
  check_shift(p);
  using C = Complex<T>;
  const C mu = p.mu, z(p.z), one(1);
  const C k1 = one / ((one - mu) * (one - mu) + z * z);
  const C k2 = one / (z * z - mu * mu + one);

  if (p.n == 1) {
    Matrix<T> x = Matrix<T>::Zero(4, 4);
    x(0, 0) = k1 * (one - mu);
    x(0, 3) = -k1 * z;
    x(1, 1) = k2 * (z + mu);
    x(1, 2) = k2;
    x(2, 1) = k2;
    x(2, 2) = -k2 * (z - mu);
    x(3, 0) = k1 * z;
    x(3, 3) = k1 * (one - mu);
    return x;
  }
  if (p.n != 2) throw Error(Errc::shape, "closed forms exist for n = 1 and n = 2 only");

  const C k3 = one / ((one + mu) * (one + mu) + z * z);
  const C outer = form == CayleyForm::as_published ? k1 * k2 : k1 * k3;
  Matrix<T> x = Matrix<T>::Zero(16, 16);
  // put(a, b, {{j, k, value}, ...}) fills the family X(aj, bk); indices 1-based.
  struct Term {
    int j, k;
    C v;
  };
  const auto put = [&x](int a, int b, std::initializer_list<Term> terms) {
    for (const auto& t : terms) x((a - 1) * 4 + (b - 1), (t.j - 1) * 4 + (t.k - 1)) += t.v;
  };
  put(1, 1, {{1, 1, k1 * (one - mu)}, {4, 4, -k1 * z}});
  put(4, 4, {{4, 4, k1 * (one - mu)}, {1, 1, k1 * z}});
  put(1, 4, {{1, 4, k2 * (mu + z)}, {4, 1, k2}});
  put(4, 1, {{4, 1, k2 * (mu - z)}, {1, 4, k2}});
  put(2, 2, {{2, 2, k1 * (one - mu)}, {3, 3, k1 * z}});
  put(3, 3, {{3, 3, k1 * (one - mu)}, {2, 2, -k1 * z}});
  put(2, 3, {{2, 3, k2 * (mu - z)}, {3, 2, k2}});
  put(3, 2, {{3, 2, k2 * (mu + z)}, {2, 3, k2}});
  put(1, 2, {{1, 2, k2 * mu}, {2, 1, k2}, {3, 4, k2 * z}});
  put(2, 1, {{1, 2, k2}, {2, 1, k2 * mu}, {4, 3, -k2 * z}});
  put(3, 4, {{1, 2, k2 * z}, {3, 4, k2 * mu}, {4, 3, k2}});
  put(4, 3, {{2, 1, -k2 * z}, {3, 4, k2}, {4, 3, k2 * mu}});

  const C k2inv = one / k2, tmz = C(2) * mu * z;
  // C1..C4 as (j, k, coefficient) triples.
  const Term c1[] = {{1, 3, mu}, {3, 1, one}, {2, 4, -z}};
  const Term c2[] = {{2, 4, mu}, {4, 2, one}, {1, 3, z}};
  const Term c3[] = {{3, 1, mu}, {1, 3, one}, {4, 2, -z}};
  const Term c4[] = {{4, 2, mu}, {2, 4, one}, {3, 1, z}};
  const auto combine = [&](int a, int b, const Term(&first)[3], C s, const Term(&second)[3]) {
    for (const auto& t : first) x((a - 1) * 4 + (b - 1), (t.j - 1) * 4 + (t.k - 1)) += outer * k2inv * t.v;
    for (const auto& t : second) x((a - 1) * 4 + (b - 1), (t.j - 1) * 4 + (t.k - 1)) += outer * s * t.v;
  };
  combine(1, 3, c1, -tmz, c2);
  combine(2, 4, c2, tmz, c1);
  combine(3, 1, c3, -tmz, c4);
  combine(4, 2, c4, tmz, c3);
  return x;
}

// ---------------------------------------------------------------------------
// Noncommutative coordinates

/// X_i X_j = phase * X_ibar X_jbar (1-based indices), phase = i (-1)^{jbar}.
struct NcRelation {
  int i = 0, j = 0;
  std::complex<double> phase;
  int ibar = 0, jbar = 0;
  bool independent = false;  ///< (i, j) precedes its image (ibar, jbar)
  bool consistent = false;   ///< the image relation has the reciprocal phase
};

inline std::vector<NcRelation> nc_relations(int n) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  const int d = 2 * n;
  const auto phase_of = [](int jbar) { return std::complex<double>(0, detail::parity(jbar)); };
  std::vector<NcRelation> out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const int ib = d - i + 1, jb = d - j + 1;
      NcRelation r{i, j, phase_of(jb), ib, jb, false, false};
      r.independent = (i < ib) || (i == ib && j < jb);
      r.consistent = std::abs(r.phase * phase_of(j) - 1.0) < 1e-15;
      out.push_back(r);
    }
  return out;
}

/// Q = nu P+ - I.
template <class T = double>
Matrix<T> nc_Q(int n, Complex<T> nu) {
  const auto p = build_projectors<T>(n);
  return nu * p.plus - Matrix<T>::Identity(p.plus.rows(), p.plus.cols());
}

/// Q^{-1} = (I - nu P-) / (nu - 1).
template <class T = double>
Matrix<T> nc_Q_inverse(int n, Complex<T> nu) {
  const auto p = build_projectors<T>(n);
  return (Matrix<T>::Identity(p.minus.rows(), p.minus.cols()) - nu * p.minus) / (nu - T(1));
}

/**
 * Operator identities at the branch nu = 1 - i (sign = +1) or 1 + i (sign = -1):
 *   Q Q^{-1} = I at a generic nu and at the branch nu,
 *   R^{+-1} = e^{-+i pi/4} (I - (1 -+ i) P-),
 *   Q^{-1} P = e^{-+i pi/4} L^{+-}   (as stated; holds only up to an overall sign),
 *   Q^{-1} P = -e^{-+i pi/4} L^{+-}  (sign-corrected),
 * with L^{+-} = R^{+-1} P.
 */
template <class T = double>
std::vector<ResidualReport> check_nc_operator_identities(int n, int sign, Complex<T> nu_generic = Complex<T>(2),
                                                         double tol = 1e-13) {
  if (sign != 1 && sign != -1) throw Error(Errc::parse, "branch must be +1 or -1");
  const int dd = 4 * n * n;
  const Matrix<T> id = Matrix<T>::Identity(dd, dd);
  const Complex<T> nu(T(1), -T(sign));
  const Complex<T> phase = std::polar(T(1), -T(sign) * std::numbers::pi_v<T> / T(4));
  const Matrix<T> rpm = build_braid(BraidSpec<T>{n, BraidClass::KJ, T(sign), true});
  const Matrix<T> lpm = rpm * permutation_P<T>(n);
  const Matrix<T> qinv_p = nc_Q_inverse<T>(n, nu) * permutation_P<T>(n);
  const auto pm = build_projectors<T>(n).minus;
  const std::string b = sign > 0 ? "+" : "-";

  return {
      make_report("Q Q^-1 = I (generic nu)", nc_Q<T>(n, nu_generic) * nc_Q_inverse<T>(n, nu_generic) - id, tol),
      make_report("Q Q^-1 = I (nu = 1" + std::string(sign > 0 ? "-" : "+") + "i)",
                  nc_Q<T>(n, nu) * nc_Q_inverse<T>(n, nu) - id, tol),
      make_report("R^" + b + "1 via P-", rpm - phase * (id - nu * pm), tol),
      make_report("Q^-1 P = e^(" + std::string(sign > 0 ? "-" : "+") + "i pi/4) L^" + b, qinv_p - phase * lpm, tol),
      make_report("Q^-1 P = -e^(" + std::string(sign > 0 ? "-" : "+") + "i pi/4) L^" + b, qinv_p + phase * lpm, tol),
  };
}

}  // namespace ubraid
