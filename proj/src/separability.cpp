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

#include "phasent/separability.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phasent/random.hpp"

namespace phasent {

namespace {

void check_qubit_index(int j, int num_qubits) {
  if (j < 0 || j >= num_qubits) {
    throw IndexError("qubit index " + std::to_string(j) + " out of range [0, " +
                     std::to_string(num_qubits) + ")");
  }
}

// Re-inserts bit `value` at position j into a reduced (m-1)-bit context.
constexpr std::size_t insert_bit(std::size_t context, int j, bool value) {
  const std::size_t low = context & ((std::size_t{1} << j) - 1);
  const std::size_t high = (context >> j) << (j + 1);
  return high | (static_cast<std::size_t>(value) << j) | low;
}

void check_canonical(const QuadricIndex& q, int num_qubits) {
  check_qubit_index(q.j, num_qubits);
  const std::size_t dim = dimension(num_qubits);
  if (q.x >= dim || q.y >= dim) {
    throw ContractViolationError("quadric indices exceed the basis range");
  }
  if (basis_bit(q.x, q.j) || !basis_bit(q.y, q.j)) {
    throw ContractViolationError(
        "quadric not canonical: bit j of x must be 0 and bit j of y must be 1");
  }
  if (((q.x ^ q.y) & ~(std::size_t{1} << q.j)) == 0) {
    throw ContractViolationError(
        "quadric is trivial: x and y must differ in a bit other than j");
  }
}

StateVector normalized_copy(const StateVector& s) {
  const double n = s.norm();
  if (n == 0.0) {
    throw InvalidStateError("state is the zero vector");
  }
  std::vector<Complex> scaled(s.amplitudes().begin(), s.amplitudes().end());
  for (Complex& a : scaled) a /= n;
  return StateVector(s.num_qubits(), std::move(scaled));
}

}  // namespace

std::vector<QuadricIndex> enumerate_quadrics(int num_qubits) {
  if (num_qubits < 1 || num_qubits > configured_max_qubits()) {
    throw InvalidSizeError("qubit count out of range: " + std::to_string(num_qubits));
  }
  std::vector<QuadricIndex> quadrics;
  if (num_qubits == 1) return quadrics;  // no second differing bit exists
  const std::size_t contexts = dimension(num_qubits - 1);
  quadrics.reserve(static_cast<std::size_t>(num_qubits) * contexts * (contexts - 1) / 2);
  for (int j = 0; j < num_qubits; ++j) {
    for (std::size_t a = 0; a < contexts; ++a) {
      for (std::size_t b = a + 1; b < contexts; ++b) {
        quadrics.push_back(QuadricIndex{j, insert_bit(a, j, false), insert_bit(b, j, true)});
      }
    }
  }
  return quadrics;
}

Complex segre_minor(const StateVector& s, const QuadricIndex& q) {
  check_canonical(q, s.num_qubits());
  const std::size_t x_swapped = with_bit(q.x, q.j, true);
  const std::size_t y_swapped = with_bit(q.y, q.j, false);
  return s[q.x] * s[q.y] - s[x_swapped] * s[y_swapped];
}

SegreReport is_fully_product(const StateVector& s, double tol) {
  const StateVector unit = normalized_copy(s);
  SegreReport report;
  report.tolerance = tol;
  for (const QuadricIndex& q : enumerate_quadrics(s.num_qubits())) {
    const double residual = std::abs(segre_minor(unit, q));
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > tol) {
      report.violations.push_back(QuadricViolation{q, residual});
    }
  }
  report.verdict = report.violations.empty() ? Verdict::Product : Verdict::Entangled;
  return report;
}

PhaseConditionResult phase_condition(const PhaseProfile& phases, double tol) {
  PhaseConditionResult result;
  for (const QuadricIndex& q : enumerate_quadrics(phases.num_qubits())) {
    const std::size_t x_swapped = with_bit(q.x, q.j, true);
    const std::size_t y_swapped = with_bit(q.y, q.j, false);
    const double residual =
        std::abs(std::polar(1.0, phases.phase(q.x) + phases.phase(q.y)) -
                 std::polar(1.0, phases.phase(x_swapped) + phases.phase(y_swapped)));
    if (residual > tol) {
      result.witnesses.push_back(QuadricViolation{q, residual});
    }
  }
  result.entangling = !result.witnesses.empty();
  return result;
}

bool entangles(const PhaseProfile& phases, double tol) {
  const SelectivePhaseKernel kernel = make_selective_kernel(phases, true);
  const StateVector out =
      apply_selective(kernel, plus_product_state(phases.num_qubits(), false));
  return is_fully_product(out, tol).verdict == Verdict::Entangled;
}

Flattening flattening(const StateVector& s, int j) {
  check_qubit_index(j, s.num_qubits());
  const std::size_t cols = dimension(s.num_qubits()) / 2;
  Flattening f;
  f.cols = cols;
  f.rows[0].resize(cols);
  f.rows[1].resize(cols);
  const std::size_t low_mask = (std::size_t{1} << j) - 1;
  for (std::size_t z = 0; z < s.size(); ++z) {
    const std::size_t reduced = (z & low_mask) | ((z >> (j + 1)) << j);
    f.rows[basis_bit(z, j) ? 1 : 0][reduced] = s[z];
  }
  return f;
}

std::array<double, 2> flattening_singular_values(const Flattening& f) {
  // Gram matrix of the two rows; its eigenvalues are the squared singular
  // values, available in closed form for a 2x2 Hermitian matrix.
  double g00 = 0.0;
  double g11 = 0.0;
  Complex g01(0.0, 0.0);
  for (std::size_t r = 0; r < f.cols; ++r) {
    g00 += std::norm(f.rows[0][r]);
    g11 += std::norm(f.rows[1][r]);
    g01 += f.rows[0][r] * std::conj(f.rows[1][r]);
  }
  const double trace = g00 + g11;
  const double det = g00 * g11 - std::norm(g01);
  const double disc = std::sqrt(std::max(trace * trace - 4.0 * det, 0.0));
  const double hi = std::max(0.5 * (trace + disc), 0.0);
  const double lo = std::max(0.5 * (trace - disc), 0.0);
  return {std::sqrt(hi), std::sqrt(lo)};
}

bool oracle_is_product(const StateVector& s, double tol) {
  if (s.norm() == 0.0) {
    throw InvalidStateError("state is the zero vector");
  }
  for (int j = 0; j < s.num_qubits(); ++j) {
    const auto sv = flattening_singular_values(flattening(s, j));
    if (sv[1] > tol * sv[0]) return false;
  }
  return true;
}

ExperimentSummary consistency_experiment(int num_qubits, std::uint64_t trials,
                                         std::uint64_t seed, double tol) {
  if (num_qubits < 1 || num_qubits > 10) {
    throw InvalidSizeError("experiment qubit count out of range [1, 10]: " +
                           std::to_string(num_qubits));
  }
  if (trials < 1) {
    throw InvalidSizeError("experiment needs at least one trial");
  }

  const StateVector plus = plus_product_state(num_qubits, false);
  ExperimentSummary summary;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    std::vector<double> phi(dimension(num_qubits));
    for (double& p : phi) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const PhaseProfile profile(num_qubits, std::move(phi));

    const bool by_phases = phase_condition(profile, tol).entangling;
    const StateVector out =
        apply_selective(make_selective_kernel(profile, true), plus);
    const bool by_quadrics = is_fully_product(out, tol).verdict == Verdict::Entangled;
    const bool by_rank = !oracle_is_product(out, tol);

    if (by_phases == by_quadrics && by_quadrics == by_rank) {
      ++summary.agreements;
    } else {
      ++summary.disagreements;
    }
    if (by_quadrics) ++summary.entangled_count;
  }
  return summary;
}

}  // namespace phasent
