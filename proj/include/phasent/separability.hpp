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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasent/core.hpp"
#include "phasent/transform.hpp"

namespace phasent {

// A pure m-qubit state is fully product exactly when its amplitudes satisfy
// every quadric alpha_x alpha_y - alpha_x' alpha_y' = 0, where (x', y') is
// (x, y) with bit j exchanged. This module evaluates that family directly
// and cross-checks it with a rank test on the single-qubit flattenings.

/// One quadric, in canonical form: bit j of x is 0, bit j of y is 1, and
/// x, y differ in at least one bit other than j (otherwise the minor is
/// identically zero).
struct QuadricIndex {
  int j = 0;
  std::size_t x = 0;
  std::size_t y = 0;
};

/// All canonical quadrics, deduplicated: for each j, every unordered pair
/// of distinct control contexts appears once. Per j that is
/// 2^{m-1} (2^{m-1} - 1) / 2 entries; m = 1 has none. Deterministic order
/// (j ascending, then x, then y).
std::vector<QuadricIndex> enumerate_quadrics(int num_qubits);

/// alpha_x alpha_y - alpha_{x with bit j from y} alpha_{y with bit j from x}.
Complex segre_minor(const StateVector& s, const QuadricIndex& q);

enum class Verdict { Product, Entangled };

struct QuadricViolation {
  QuadricIndex quadric;
  double residual = 0.0;
};

struct SegreReport {
  Verdict verdict = Verdict::Product;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::vector<QuadricViolation> violations;
};

/// Evaluates every canonical quadric on the unit-normalized amplitudes
/// (the verdict is scale invariant). Product iff no residual exceeds tol.
SegreReport is_fully_product(const StateVector& s, double tol);

struct PhaseConditionResult {
  bool entangling = false;
  std::vector<QuadricViolation> witnesses;
};

/// Phase-sum test on a selective phase kernel: the kernel output on the
/// plus product state is entangling iff some canonical quadric has
/// |e^{i(phi_x + phi_y)} - e^{i(phi_x' + phi_y')}| > tol. Comparing on the
/// unit circle makes the test correct under 2*pi wrap-around.
PhaseConditionResult phase_condition(const PhaseProfile& phases, double tol);

/// Applies the selective kernel to the plus product state and reports
/// whether the output fails the quadric test. Agrees with phase_condition
/// for every profile, and is invariant to the kernel prefactor.
bool entangles(const PhaseProfile& phases, double tol);

/// The 2 x 2^{m-1} reshaping of a state along qubit j: entry (b, r) is the
/// amplitude whose bit j is b and whose remaining bits, in ascending
/// position order, form r.
struct Flattening {
  std::size_t cols = 0;
  std::array<std::vector<Complex>, 2> rows;
};

Flattening flattening(const StateVector& s, int j);

/// Singular values of the flattening, descending, via the 2x2 Gram matrix
/// of the rows (no general SVD involved).
std::array<double, 2> flattening_singular_values(const Flattening& f);

/// Independent ground truth: true iff for every j the second singular
/// value of the flattening is at most tol times the first.
bool oracle_is_product(const StateVector& s, double tol);

struct ExperimentSummary {
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t entangled_count = 0;
};

/// Draws `trials` phase profiles i.i.d. uniform on [0, 2*pi), each from a
/// generator seeded by (seed, trial index), and tallies how often the three
/// verdicts phase_condition / entangles / NOT oracle_is_product coincide.
/// Bit-identical results for identical (num_qubits, trials, seed).
ExperimentSummary consistency_experiment(int num_qubits, std::uint64_t trials,
                                         std::uint64_t seed, double tol = 1e-8);

}  // namespace phasent
