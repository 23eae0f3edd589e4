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

#include <cstddef>
#include <span>
#include <vector>

#include "phasent/core.hpp"

namespace phasent {

/// One real phase phi_x per basis index, radians. Phases are kept exactly
/// as given (never reduced mod 2*pi); codepaths that compare phases do so
/// on the unit circle instead.
class PhaseProfile {
 public:
  PhaseProfile(int num_qubits, std::vector<double> phases);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return phases_.size(); }
  double phase(std::size_t x) const { return phases_[x]; }
  std::span<const double> phases() const { return phases_; }

 private:
  int num_qubits_;
  std::vector<double> phases_;
};

/// General transform kernel: a 2^m x 2^m complex matrix K(x, y).
class Kernel {
 public:
  explicit Kernel(DenseMatrix matrix);

  const DenseMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  int num_qubits() const { return num_qubits_; }

 private:
  DenseMatrix matrix_;
  int num_qubits_;
};

/// Diagonal kernel prefactor * diag(e^{i phi_0}, ..., e^{i phi_{2^m-1}}).
/// With prefactor 1 the kernel is unitary; the 2^{-m/2} prefactor instead
/// normalizes the unnormalized plus product state it is applied to.
class SelectivePhaseKernel {
 public:
  SelectivePhaseKernel(PhaseProfile phases, bool include_prefactor);

  const PhaseProfile& phases() const { return phases_; }
  double prefactor() const { return prefactor_; }
  int num_qubits() const { return phases_.num_qubits(); }
  std::size_t dim() const { return phases_.size(); }

  /// Diagonal entry prefactor * e^{i phi_x}.
  Complex entry(std::size_t x) const;

  /// Dense realization: entry(x) on the diagonal, zero elsewhere.
  DenseMatrix dense() const;

  Kernel to_kernel() const { return Kernel(dense()); }

  /// Same predicate as is_unitary(dense(), tol), evaluated on the diagonal.
  bool unitary_within(double tol) const;

 private:
  PhaseProfile phases_;
  double prefactor_;
};

/// Discrete integral transform g(y) = sum_x K(x, y) f(x).
///
/// The kernel is contracted over its *row* index, exactly as the transform
/// is written; for non-symmetric kernels this differs from the ordinary
/// matrix-vector product K f, and tests pin this orientation.
StateVector dit_apply(const Kernel& k, const StateVector& f);

/// Inverse transform, defined for unitary kernels only (tolerance 1e-10):
/// applies the dagger kernel so that dit_apply(k, dit_invert(k, g)) == g.
StateVector dit_invert(const Kernel& k, const StateVector& ftilde);

SelectivePhaseKernel make_selective_kernel(const PhaseProfile& phases,
                                           bool include_prefactor);

/// Fast diagonal application: component y of the result is
/// prefactor * e^{i phi_y} * f(y). Agrees exactly with dit_apply on the
/// dense realization.
StateVector apply_selective(const SelectivePhaseKernel& k, const StateVector& f);

}  // namespace phasent
