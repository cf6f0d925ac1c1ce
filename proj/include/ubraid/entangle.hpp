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
 * Two-party states produced by R(z) acting on product kets, with Schmidt
 * analysis.
 *
 * Spin labels map to 1-based indices in the order n, n-1, ..., 1, -1, ..., -n,
 * so |n - j> is index j + 1 and |-n + j> is its conjugate 2n - j.
 * For the 3-level odd family the per-party order is +, 0, -.
 */

#pragma once

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ubraid/braidgen.hpp"
#include "ubraid/tensorcore.hpp"
#include "ubraid/types.hpp"

namespace ubraid {

template <class T = double>
struct TwoPartyState {
  int local_dim = 2;
  Vector<T> amplitudes;  ///< index (c - 1) * local_dim + (c' - 1)

  Complex<T> at(int c, int cp) const { return amplitudes((c - 1) * local_dim + (cp - 1)); }
};

struct SchmidtProfile {
  std::vector<double> coefficients;  ///< non-increasing
  int rank = 0;
  double entropy_bits = 0;
};

template <class T>
SchmidtProfile schmidt_profile(const TwoPartyState<T>& s) {
  const int d = s.local_dim;
  if (s.amplitudes.size() != d * d) throw Error(Errc::shape, "amplitude count must be local_dim^2");
  const Matrix<T> m = Eigen::Map<const Matrix<T>>(s.amplitudes.data(), d, d);
  Eigen::JacobiSVD<Matrix<T>> svd(m);
  SchmidtProfile p;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double c = static_cast<double>(svd.singularValues()(i));
    p.coefficients.push_back(c);
    if (c > 1e-12) {
      ++p.rank;
      const double prob = c * c;
      p.entropy_bits -= prob * std::log2(prob);
    }
  }
  return p;
}

/// 1-based index of spin label s in {n, ..., 1, -1, ..., -n}.
inline int spin_index(int n, int s) {
  if (s == 0 || std::abs(s) > n) throw Error(Errc::label, "spin label " + std::to_string(s) + " outside +-1..+-n");
  return s > 0 ? n - s + 1 : n - s;
}

template <class T = double>
struct BellState {
  TwoPartyState<T> state;
  int braid_power = 1;  ///< the state is R^{braid_power}(z) |n-j>|n-k>
};

/// (|n-j>|n-k> + sign z |-n+j>|-n+k>) / sqrt(1+z^2). R(z) itself produces the
/// flipped ket with (-1)^{k+1} z, so the matching braid power is reported.
template <class T = double>
BellState<T> bell_generalized(int n, T z, int j, int k, int sign) {
  if (n < 1) throw Error(Errc::shape, "n must be >= 1");
  if (j < 0 || j > n - 1 || k < 0 || k > n - 1)
    throw Error(Errc::label, "j and k must lie in 0.." + std::to_string(n - 1));
  if (sign != 1 && sign != -1) throw Error(Errc::label, "sign must be +1 or -1");
  const int d = 2 * n;
  const T norm = T(1) / std::sqrt(T(1) + z * z);
  BellState<T> out{{d, Vector<T>::Zero(d * d)}, 1};
  out.state.amplitudes(j * d + k) = norm;
  out.state.amplitudes((d - 1 - j) * d + (d - 1 - k)) = T(sign) * z * norm;
  out.braid_power = sign * detail::parity(k + 1);
  return out;
}

template <class T = double>
struct AnalyzedState {
  TwoPartyState<T> state;
  SchmidtProfile profile;
};

/// R(z) e_c (x) e_c' and its Schmidt profile.
template <class T = double>
AnalyzedState<T> act_and_analyze(int n, T z, int c, int cp) {
  const int d = 2 * n;
  if (c < 1 || c > d || cp < 1 || cp > d) throw Error(Errc::label, "basis labels must lie in 1.." + std::to_string(d));
  const auto in = StrandVector<T>::basis(n, 2, (c - 1) * d + (cp - 1));
  const auto out = apply_generator(StructuredBraidOp<T>{n, 1, z, BraidClass::KJ}, 1, in);
  TwoPartyState<T> s{d, out.amplitudes};
  return {s, schmidt_profile(s)};
}

/// Images of the nine product kets |ab> (a, b in +, 0, -) under the 9x9 R(theta),
/// in the order ++, +0, +-, 0+, 00, 0-, -+, -0, --.
template <class T = double>
std::vector<TwoPartyState<T>> odd_superpositions(const OddBraidParams<T>& params) {
  const Matrix<T> r = build_odd_braid(params);
  std::vector<TwoPartyState<T>> out;
  for (int col = 0; col < 9; ++col) out.push_back({3, r.col(col)});
  return out;
}

}  // namespace ubraid
