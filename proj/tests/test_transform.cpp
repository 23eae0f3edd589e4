// Copyright 2026 The phasent developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "phasent/transform.hpp"
#include "support.hpp"

using namespace phasent;
using testsupport::state_max_diff;
using namespace std::complex_literals;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("transform");

TEST_CASE("phase profile validation") {
  CHECK_THROWS_AS(PhaseProfile(2, {0.0, 1.0, 2.0}), ShapeError);
  CHECK_THROWS_AS(PhaseProfile(0, {}), InvalidSizeError);
  CHECK_THROWS_AS(PhaseProfile(1, {0.0, std::numeric_limits<double>::infinity()}),
                  InvalidStateError);

  // Phases are stored exactly as given, not reduced mod 2*pi.
  const PhaseProfile p(1, {0.0, 7.5});
  CHECK(p.phase(1) == 7.5);
}

TEST_CASE("dit_apply") {
  SUBCASE("identity kernel") {
    SplitMix64 rng(21);
    const StateVector f = testsupport::random_state(2, rng);
    const StateVector out = dit_apply(Kernel(DenseMatrix::identity(4)), f);
    CHECK(state_max_diff(out, f) == 0.0);
  }
  SUBCASE("selective kernel phi = (0, pi) flips the second component sign") {
    const SelectivePhaseKernel k = make_selective_kernel(PhaseProfile(1, {0.0, kPi}), false);
    const StateVector out = dit_apply(k.to_kernel(), StateVector(1, {0.6, 0.8}));
    CHECK(std::abs(out[0] - Complex(0.6, 0.0)) < 1e-15);
    CHECK(std::abs(out[1] - Complex(-0.8, 0.0)) < 1e-15);
  }
  SUBCASE("uniform half kernel sums every component") {
    DenseMatrix uniform(4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) uniform(r, c) = 0.5;
    }
    const StateVector f = plus_product_state(2, false);
    const StateVector expected = testsupport::direct_transform(uniform, f);
    const StateVector out = dit_apply(Kernel(uniform), f);
    for (std::size_t y = 0; y < 4; ++y) {
      CHECK(out[y] == Complex(2.0, 0.0));
      CHECK(out[y] == expected[y]);
    }
  }
  SUBCASE("kernel is contracted over its row index") {
    // K(0, 1) = 1 and zero elsewhere maps f(0) into component 1; the
    // ordinary matrix-vector product would map f(1) into component 0.
    DenseMatrix k(2);
    k(0, 1) = 1.0;
    const StateVector out = dit_apply(Kernel(k), StateVector(1, {0.25, 0.75}));
    CHECK(out[0] == Complex(0.0, 0.0));
    CHECK(out[1] == Complex(0.25, 0.0));
  }
  SUBCASE("agrees with the direct summation oracle on random kernels") {
    SplitMix64 rng(22);
    for (int round = 0; round < 10; ++round) {
      const DenseMatrix k = testsupport::random_unitary(8, rng);
      const StateVector f = testsupport::random_state(3, rng);
      CHECK(state_max_diff(dit_apply(Kernel(k), f), testsupport::direct_transform(k, f)) <
            1e-13);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(dit_apply(Kernel(DenseMatrix::identity(4)), StateVector(1, {1.0, 0.0})),
                    ShapeError);
  }
}

TEST_CASE("dit_invert") {
  SUBCASE("identity kernel") {
    SplitMix64 rng(23);
    const StateVector g = testsupport::random_state(2, rng);
    CHECK(state_max_diff(dit_invert(Kernel(DenseMatrix::identity(4)), g), g) == 0.0);
  }
  SUBCASE("selective kernel conjugates the phases") {
    const SelectivePhaseKernel k =
        make_selective_kernel(PhaseProfile(1, {0.4, 1.1}), false);
    const StateVector out = dit_invert(k.to_kernel(), StateVector(1, {1.0, 1.0i}));
    CHECK(std::abs(out[0] - std::polar(1.0, -0.4)) < 1e-15);
    CHECK(std::abs(out[1] - 1.0i * std::polar(1.0, -1.1)) < 1e-15);
  }
  SUBCASE("random unitary kernel round trips") {
    SplitMix64 rng(24);
    const DenseMatrix u = testsupport::random_unitary(4, rng);
    const StateVector g = testsupport::random_state(2, rng);
    const StateVector round = dit_apply(Kernel(u), dit_invert(Kernel(u), g));
    CHECK(state_max_diff(round, g) <= 1e-12);
  }
  SUBCASE("non-unitary kernel is rejected") {
    DenseMatrix k(2);
    k(0, 0) = 2.0;
    k(1, 1) = 1.0;
    CHECK_THROWS_AS(dit_invert(Kernel(k), StateVector(1, {1.0, 0.0})),
                    NotInvertibleError);
  }
}

TEST_CASE("make_selective_kernel dense realization") {
  SUBCASE("m=1, no prefactor") {
    const SelectivePhaseKernel k =
        make_selective_kernel(PhaseProfile(1, {0.3, 2.2}), false);
    const DenseMatrix d = k.dense();
    CHECK(d(0, 0) == std::polar(1.0, 0.3));
    CHECK(d(1, 1) == std::polar(1.0, 2.2));
    CHECK(d(0, 1) == Complex(0.0, 0.0));
    CHECK(d(1, 0) == Complex(0.0, 0.0));
  }
  SUBCASE("m=2, zero phases with prefactor is I/2") {
    const SelectivePhaseKernel k =
        make_selective_kernel(PhaseProfile(2, {0.0, 0.0, 0.0, 0.0}), true);
    CHECK(k.prefactor() == 0.5);
    CHECK(max_abs_diff(k.dense(),
                       DenseMatrix(Eigen::MatrixXcd(
                           0.5 * Eigen::MatrixXcd::Identity(4, 4)))) == 0.0);
  }
  SUBCASE("m=3 prefactor is 8^{-1/2} on every diagonal slot") {
    SplitMix64 rng(25);
    const PhaseProfile p = testsupport::random_profile(3, rng);
    const SelectivePhaseKernel k = make_selective_kernel(p, true);
    const DenseMatrix d = k.dense();
    for (std::size_t x = 0; x < 8; ++x) {
      CHECK(std::abs(d(x, x) - std::polar(1.0, p.phase(x)) / std::sqrt(8.0)) < 1e-15);
      CHECK(std::abs(std::abs(d(x, x)) - 1.0 / std::sqrt(8.0)) < 1e-15);
    }
  }
}

TEST_CASE("apply_selective") {
  SUBCASE("phi = (0,0,0,pi) with prefactor 1/2") {
    const SelectivePhaseKernel k =
        make_selective_kernel(PhaseProfile(2, {0.0, 0.0, 0.0, kPi}), true);
    const StateVector out = apply_selective(k, plus_product_state(2, false));
    CHECK(std::abs(out[0] - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(out[1] - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(out[2] - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(out[3] - Complex(-0.5, 0.0)) < 1e-15);
  }
  SUBCASE("all-zero profile with prefactor 1 is the identity") {
    SplitMix64 rng(26);
    const StateVector f = testsupport::random_state(2, rng);
    const SelectivePhaseKernel k =
        make_selective_kernel(PhaseProfile(2, {0.0, 0.0, 0.0, 0.0}), false);
    CHECK(state_max_diff(apply_selective(k, f), f) == 0.0);
  }
  SUBCASE("negated profile undoes the phases") {
    SplitMix64 rng(27);
    const PhaseProfile p = testsupport::random_profile(3, rng);
    std::vector<double> negated(p.phases().begin(), p.phases().end());
    for (double& v : negated) v = -v;
    const StateVector f = testsupport::random_state(3, rng);
    const StateVector round =
        apply_selective(make_selective_kernel(PhaseProfile(3, negated), false),
                        apply_selective(make_selective_kernel(p, false), f));
    CHECK(state_max_diff(round, f) <= 1e-12);
  }
}

TEST_CASE("selective kernels are unitary at prefactor 1") {
  SplitMix64 rng(28);
  for (int m = 1; m <= 6; ++m) {
    const SelectivePhaseKernel k =
        make_selective_kernel(testsupport::random_profile(m, rng), false);
    CHECK(is_unitary(k.dense(), 1e-12));
    CHECK(k.unitary_within(1e-12));
  }
}

TEST_CASE("unitary_within matches the dense check, prefactor on and off") {
  SplitMix64 rng(29);
  for (int m = 1; m <= 5; ++m) {
    for (bool prefactor : {false, true}) {
      const SelectivePhaseKernel k =
          make_selective_kernel(testsupport::random_profile(m, rng), prefactor);
      CHECK(k.unitary_within(1e-10) == is_unitary(k.dense(), 1e-10));
    }
  }
}

TEST_CASE("fast application equals the dense transform") {
  SplitMix64 rng(30);
  for (int m = 1; m <= 6; ++m) {
    for (bool prefactor : {false, true}) {
      const SelectivePhaseKernel k =
          make_selective_kernel(testsupport::random_profile(m, rng), prefactor);
      const StateVector f = testsupport::random_state(m, rng);
      CHECK(state_max_diff(apply_selective(k, f), dit_apply(k.to_kernel(), f)) <= 1e-15);
    }
  }
}

TEST_CASE("round trip through the inverse transform up to m=8") {
  SplitMix64 rng(31);
  for (int m = 1; m <= 8; ++m) {
    const Kernel k = make_selective_kernel(testsupport::random_profile(m, rng), false)
                         .to_kernel();
    const StateVector g = testsupport::random_state(m, rng);
    CHECK(state_max_diff(dit_apply(k, dit_invert(k, g)), g) <= 1e-9);
  }
}

TEST_CASE("profiles compose by adding phases") {
  SplitMix64 rng(32);
  for (int m = 1; m <= 5; ++m) {
    const PhaseProfile a = testsupport::random_profile(m, rng);
    const PhaseProfile b = testsupport::random_profile(m, rng);
    std::vector<double> sum(a.size());
    for (std::size_t x = 0; x < sum.size(); ++x) sum[x] = a.phase(x) + b.phase(x);

    const StateVector f = testsupport::random_state(m, rng);
    const StateVector stepwise =
        apply_selective(make_selective_kernel(b, false),
                        apply_selective(make_selective_kernel(a, false), f));
    const StateVector direct =
        apply_selective(make_selective_kernel(PhaseProfile(m, sum), false), f);
    CHECK(state_max_diff(stepwise, direct) <= 1e-12);
  }
}

TEST_CASE("kernel shape guards") {
  CHECK_THROWS_AS(Kernel(DenseMatrix::identity(3)), ShapeError);
  CHECK_THROWS_AS(Kernel(DenseMatrix::identity(1)), ShapeError);
}

TEST_SUITE_END();
