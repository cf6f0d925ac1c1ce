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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ubraid {

// Row-major to match the documented storage of every matrix document.
template <class T>
using Complex = std::complex<T>;
template <class T>
using Matrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class T>
using Vector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

using MatrixXcd = Matrix<double>;
using VectorXcd = Vector<double>;

/// Largest strand-space dimension any dense or tower construction will build.
inline constexpr std::int64_t max_space_dim = 4096;

/// Default max-abs tolerance for identities with rational entries.
inline constexpr double default_tolerance = 1e-12;
/// Default for the odd-dimensional family (transcendental entries).
inline constexpr double odd_family_tolerance = 1e-10;

enum class Errc {
  shape,
  slot,
  trivial,
  pole,
  singular_shift,
  non_invertible_b,
  letter,
  too_large,
  label,
  not_gauge_equivalent,
  parse,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::shape: return "shape";
    case Errc::slot: return "slot";
    case Errc::trivial: return "trivial";
    case Errc::pole: return "pole";
    case Errc::singular_shift: return "singular shift";
    case Errc::non_invertible_b: return "non-invertible b";
    case Errc::letter: return "letter";
    case Errc::too_large: return "too large";
    case Errc::label: return "label";
    case Errc::not_gauge_equivalent: return "not gauge-equivalent";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library. `what()` starts with the error label.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Which tensor pair multiplies z in the Baxterized matrix:
/// KJ is class I, JK is class II, KL and LK are the J<->L interchanged variants.
enum class BraidClass { KJ, JK, KL, LK };

inline constexpr BraidClass all_braid_classes[] = {BraidClass::KJ, BraidClass::JK, BraidClass::KL,
                                                   BraidClass::LK};

constexpr std::string_view class_name(BraidClass c) noexcept {
  switch (c) {
    case BraidClass::KJ: return "KJ";
    case BraidClass::JK: return "JK";
    case BraidClass::KL: return "KL";
    case BraidClass::LK: return "LK";
  }
  return "?";
}

inline BraidClass parse_braid_class(std::string_view s) {
  if (s == "KJ" || s == "I") return BraidClass::KJ;
  if (s == "JK" || s == "II") return BraidClass::JK;
  if (s == "KL") return BraidClass::KL;
  if (s == "LK") return BraidClass::LK;
  throw Error(Errc::parse, "unknown braid class '" + std::string(s) + "'");
}

/// Identity of size d.
template <class T = double>
Matrix<T> identity(Eigen::Index d) {
  return Matrix<T>::Identity(d, d);
}

template <class Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.size() == 0) return Real(0);
  return m.cwiseAbs().maxCoeff();
}

/// Integer power with overflow-free guard for dimension arithmetic.
constexpr std::int64_t ipow(std::int64_t base, int exp) noexcept {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace ubraid
