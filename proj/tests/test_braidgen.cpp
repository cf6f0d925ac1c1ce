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

#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ubraid/braidgen.hpp"

using namespace ubraid;

TEST_CASE("generators match the entry-wise definition") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_generators(n);
    CHECK(g.J == oracle::generator('J', n));
    CHECK(g.K == oracle::generator('K', n));
    CHECK(g.L == oracle::generator('L', n));
    CHECK(g.I == identity(2 * n));
  }
  const auto g1 = build_generators(1);
  CHECK(g1.J(0, 1) == 1.0);
  CHECK(g1.J(1, 0) == -1.0);
  CHECK_THROWS_AS(build_generators(0), Error);
}

TEST_CASE("generator algebra: squares and anticommutation") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_generators(n);
    const MatrixXcd id = identity(2 * n);
    CHECK(g.K * g.K == id);
    CHECK(g.J * g.J == -id);
    CHECK(g.L * g.L == -id);
    CHECK(g.K * g.J == -(g.J * g.K));
    CHECK(g.K * g.L == -(g.L * g.K));
  }
}

TEST_CASE("braid matrices agree with the oracle for every class") {
  const char* names[] = {"KJ", "JK", "KL", "LK"};
  for (int n = 1; n <= 3; ++n)
    for (int c = 0; c < 4; ++c)
      for (double z : {-1.0, -0.9, 0.0, 0.37, 1.0}) {
        const BraidSpec<double> spec{n, all_braid_classes[c], z, true};
        CHECK(max_abs(build_braid(spec) - oracle::braid(n, names[c], z)) < 1e-15);
        CHECK(max_abs(build_braid(spec) * build_braid_inverse(spec) - identity(4 * n * n)) < 1e-14);
      }
}

TEST_CASE("the 4x4 braid matrix at z = 1") {
  const MatrixXcd r = build_braid(BraidSpec<double>{1, BraidClass::KJ, 1.0, true});
  const double s = 1 / std::sqrt(2.0);
  CHECK(std::abs(r(0, 0) - s) < 1e-16);
  CHECK(std::abs(r(0, 3) - s) < 1e-16);
  CHECK(std::abs(r(1, 2) + s) < 1e-16);
  CHECK(std::abs(r(2, 1) - s) < 1e-16);
  CHECK(std::abs(r(3, 0) + s) < 1e-16);
  CHECK(std::abs(r(0, 1)) == 0.0);
}

TEST_CASE("unnormalized braid omits the 1/sqrt(1+z^2) factor") {
  const BraidSpec<double> spec{2, BraidClass::KL, 0.5, false};
  const MatrixXcd r = build_braid(spec);
  CHECK(max_abs(r - oracle::braid(2, "KL", 0.5) * std::sqrt(1.25)) < 1e-15);
}

TEST_CASE("rapidity parametrization gives z = tanh(theta)") {
  const auto spec = BraidSpec<double>::from_rapidity(2, BraidClass::JK, 0.3);
  CHECK(spec.z == doctest::Approx(std::tanh(0.3)).epsilon(1e-15));
  CHECK(spec.normalized);
}

TEST_CASE("parse_braid_class accepts class names and roman aliases") {
  CHECK(parse_braid_class("I") == BraidClass::KJ);
  CHECK(parse_braid_class("II") == BraidClass::JK);
  CHECK(parse_braid_class("LK") == BraidClass::LK);
  CHECK_THROWS_AS(parse_braid_class("kj"), Error);
}

TEST_CASE("projectors are complementary orthogonal idempotents") {
  for (int n = 1; n <= 3; ++n) {
    const auto p = build_projectors(n);
    const MatrixXcd id = identity(4 * n * n);
    CHECK(max_abs(p.plus * p.plus - p.plus) < 1e-15);
    CHECK(max_abs(p.minus * p.minus - p.minus) < 1e-15);
    CHECK(max_abs(p.plus * p.minus) < 1e-15);
    CHECK(max_abs(p.plus + p.minus - id) < 1e-15);
    CHECK(std::abs(p.plus.trace() - std::complex<double>(2.0 * n * n)) < 1e-14);
  }
}

TEST_CASE("M diagonalizes the braid matrix") {
  for (int n = 1; n <= 3; ++n) {
    const MatrixXcd m = build_M(n), mi = build_M_inverse(n);
    CHECK(max_abs(m * mi - identity(4 * n * n)) < 1e-15);
    CHECK(max_abs(m * m.adjoint() - identity(4 * n * n)) < 1e-15);
    for (double z : {-0.9, 0.37, 1.0}) {
      const MatrixXcd r = build_braid(BraidSpec<double>{n, BraidClass::KJ, z, true});
      const MatrixXcd diag = diagonal_spectrum(n, z).asDiagonal();
      CHECK(max_abs(m * r * mi - diag) < 1e-14);
    }
  }
}

TEST_CASE("block permutation is an involutive permutation") {
  for (int n = 1; n <= 4; ++n) {
    const MatrixXcd u = build_block_permutation(n);
    CHECK(u * u == identity(4 * n * n));
    CHECK(u.transpose() == u);
    for (Eigen::Index i = 0; i < u.rows(); ++i) CHECK(u.row(i).sum() == 1.0);
  }
}

TEST_CASE("V block-diagonalizes the braid matrix into n^2 copies of the 4x4 one") {
  for (int n = 2; n <= 4; ++n) {
    const MatrixXcd v = build_block_diagonalizer(n);
    CHECK(max_abs(v * v.adjoint() - identity(4 * n * n)) < 1e-14);
    for (double z : {-1.0, 0.37, 1.0}) {
      const MatrixXcd r = build_braid(BraidSpec<double>{n, BraidClass::KJ, z, true});
      CHECK(max_abs(v * r * v.adjoint() - base_direct_sum(n, z)) < 1e-14);
    }
  }
  try {
    build_block_diagonalizer(1);
    FAIL("expected trivial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::trivial);
  }
}

TEST_CASE("odd-dimensional family") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  OddBraidParams<double> p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), 0.0};
  CHECK(build_odd_braid(p) == identity(9));

  p.theta = 0.7;
  const MatrixXcd r = build_odd_braid(p);
  CHECK(max_abs(r * r.adjoint() - identity(9)) < 1e-14);
  CHECK(r(4, 4) == 1.0);
  for (int k = 0; k < 9; ++k)
    if (k != 4) CHECK(r(4, k) == 0.0);

  const auto c = odd_coefficients(p);
  const std::complex<double> i(0, 1);
  CHECK(std::abs(c.a_plus - (std::exp(i * p.m11p * 0.7) + std::exp(i * p.m11m * 0.7)) / 2.0) < 1e-15);
  CHECK(std::abs(c.c_minus - (std::exp(i * p.m21p * 0.7) - std::exp(i * p.m21m * 0.7)) / 2.0) < 1e-15);
  CHECK(r(0, 8) == c.a_minus);
  CHECK(r(1, 7) == c.b_minus);
  CHECK(r(3, 5) == c.c_minus);
  CHECK(r(2, 2) == c.a_plus);
}

TEST_CASE("phase gauge removes the spurious phase") {
  const auto g = build_generators(1);
  const MatrixXcd target = (identity(4) + kron(g.L, g.K)) / std::sqrt(2.0);
  for (double phi : {0.0, std::numbers::pi / 3, 1.2, -2.5}) {
    const MatrixXcd r = (identity(4) + phased_antidiagonal(phi)) / std::sqrt(2.0);
    const auto res = canonicalize_phases(r);
    CHECK(max_abs(res.canonical - target) < 1e-15);
    CHECK(res.phi == doctest::Approx(phi));
    CHECK(std::abs(res.Y(0, 0) - std::polar(1.0, -phi / 4)) < 1e-15);
    CHECK(max_abs(canonicalize_phases(MatrixXcd(phased_antidiagonal(phi))).canonical - kron(g.L, g.K)) < 1e-15);
  }
}

TEST_CASE("phase gauge rejects inputs outside its scope") {
  auto code_of = [](const MatrixXcd& m) {
    try {
      canonicalize_phases(m);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse;
  };
  CHECK(code_of(identity(6)) == Errc::shape);

  MatrixXcd off = identity(4) + phased_antidiagonal(0.4);
  off(0, 1) = 0.3;
  CHECK(code_of(off) == Errc::not_gauge_equivalent);

  MatrixXcd scaled = identity(4) + phased_antidiagonal(0.4);
  scaled(1, 2) = 2.0;
  CHECK(code_of(scaled) == Errc::not_gauge_equivalent);
  CHECK(code_of(MatrixXcd(identity(4))) == Errc::not_gauge_equivalent);

  MatrixXcd inner = identity(4) + phased_antidiagonal(0.4);
  inner(1, 2) = std::polar(1.0, 0.5);
  CHECK(code_of(inner) == Errc::not_gauge_equivalent);

  MatrixXcd corners = identity(4) + phased_antidiagonal(0.4);
  corners(3, 0) = -std::polar(1.0, 0.9);
  CHECK(code_of(corners) == Errc::not_gauge_equivalent);
}
