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
 * Turaev enhanced system (F, a, b) for the class I braid matrix and the link
 * invariant
 *   P(beta) = b^{1-m} Tr(rho_m(beta) F^{(x)m}),   a = 1, b = sqrt(2) sum_j d_j.
 *
 * F = sum_j d_j ((jj) + (jbar jbar)) is diagonal, so the trace is evaluated by
 * pushing each weighted basis vector through the word with the matrix-free
 * generator application; no (2n)^m-square matrix is formed.
 *
 * Letters act in reading order: for the word "1,2" sigma_1 is applied first.
 * With a = 1 there is no writhe correction.
 */

#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "ubraid/braidgen.hpp"
#include "ubraid/conformance.hpp"
#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  ///< +i is sigma_i, -i its inverse

  /// "letter" unless every letter is nonzero with |g| <= strands - 1.
  void validate() const;
};

/// Parses "1,2,-1" (whitespace tolerated, empty string = identity braid).
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& w);

template <class T = double>
struct EnhancedSystem {
  int n = 1;
  std::vector<T> d;  ///< n diagonal parameters
  T a = T(1);
  T b = T(0);

  T sum_d() const {
    T s = 0;
    for (T x : d) s += x;
    return s;
  }

  /// Diagonal of F, length 2n (palindromic).
  std::vector<T> f_diagonal() const {
    std::vector<T> f(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(2 * n - 1 - j)] = d[static_cast<std::size_t>(j)];
    return f;
  }

  Matrix<T> F() const {
    Matrix<T> f = Matrix<T>::Zero(2 * n, 2 * n);
    const auto diag = f_diagonal();
    for (int i = 0; i < 2 * n; ++i) f(i, i) = diag[static_cast<std::size_t>(i)];
    return f;
  }

  T trace_F() const { return T(2) * sum_d(); }

  /// b for the Baxterized R(z): Tr_2(R(z)(F (x) F)) = (2 sum d / sqrt(1+z^2)) F; equals b at z = +-1.
  T b_at(T z) const { return T(2) * sum_d() / std::sqrt(T(1) + z * z); }
};

/// R^{+-1}(z)(F (x) F) = (F (x) F) R^{+-1}(z) and Tr_2(R^{+-1}(z)(F (x) F)) = a^{+-1} b(z) F.
template <class T>
std::vector<ResidualReport> check_enhanced(const EnhancedSystem<T>& sys, T z = T(1), double tol = default_tolerance) {
  const int d = 2 * sys.n;
  const Matrix<T> ff = kron(sys.F(), sys.F());
  std::vector<ResidualReport> out;
  for (int sign : {1, -1}) {
    const Matrix<T> r = build_braid(BraidSpec<T>{sys.n, BraidClass::KJ, T(sign) * z, true});
    const std::string s = sign > 0 ? "+" : "-";
    out.push_back(make_report("R^" + s + "1 commutes with F(x)F", r * ff - ff * r, tol));
    const T a_pow = sign > 0 ? sys.a : T(1) / sys.a;
    out.push_back(make_report("Tr2(R^" + s + "1 F(x)F) = a^" + s + "1 b F",
                              partial_trace_2(Matrix<T>(r * ff), d, d) - a_pow * sys.b_at(z) * sys.F(), tol));
  }
  return out;
}

template <class T = double>
EnhancedSystem<T> build_enhanced(int n, std::vector<T> d) {
  if (n < 1 || static_cast<int>(d.size()) != n) throw Error(Errc::shape, "need exactly n diagonal parameters");
  EnhancedSystem<T> sys{n, std::move(d), T(1), T(0)};
  if (sys.sum_d() == T(0)) throw Error(Errc::non_invertible_b, "sum of d_j is zero");
  sys.b = std::sqrt(T(2)) * sys.sum_d();
  for (const auto& rep : check_enhanced(sys))
    if (!rep.pass) throw Error(Errc::shape, "enhanced-system identity failed: " + rep.check);
  return sys;
}

/// rho_m(w) v; letters act in reading order.
template <class T>
StrandVector<T> braid_rep_apply(const EnhancedSystem<T>& sys, const BraidWord& w, T z, StrandVector<T> v) {
  w.validate();
  if (v.n != sys.n || v.m != w.strands) throw Error(Errc::shape, "vector does not live on (2n)^m for this word");
  for (int g : w.letters) v = apply_generator(StructuredBraidOp<T>{sys.n, g > 0 ? 1 : -1, z, BraidClass::KJ}, std::abs(g), v);
  return v;
}

/// Tr(rho_m(w) F^{(x)m}), one basis vector at a time.
template <class T>
Complex<T> weighted_trace(const EnhancedSystem<T>& sys, const BraidWord& w, T z) {
  w.validate();
  const int d = 2 * sys.n;
  const std::int64_t dim = ipow(d, w.strands);
  if (dim > max_space_dim) throw Error(Errc::too_large, "(2n)^m exceeds the 4096 guard");
  const auto f = sys.f_diagonal();
  Complex<T> tr(0);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    T weight = 1;
    for (std::int64_t rest = idx, k = 0; k < w.strands; ++k, rest /= d) weight *= f[static_cast<std::size_t>(rest % d)];
    if (weight == T(0)) continue;
    if (w.letters.empty()) {
      tr += weight;
      continue;
    }
    const auto out = braid_rep_apply(sys, w, z, StrandVector<T>::basis(sys.n, w.strands, idx));
    tr += weight * out.amplitudes(idx);
  }
  return tr;
}

/// b(z)^{1-m} Tr(rho_m(w) F^{(x)m}); z = 1 is the constant system.
template <class T>
Complex<T> invariant(const EnhancedSystem<T>& sys, const BraidWord& w, T z = T(1)) {
  return std::pow(sys.b_at(z), T(1 - w.strands)) * weighted_trace(sys, w, z);
}

}  // namespace ubraid
