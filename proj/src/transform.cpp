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

#include "phasent/transform.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace phasent {

namespace {

int qubits_for_dim(std::size_t dim, const char* what) {
  int m = 0;
  std::size_t d = dim;
  while (d > 1) {
    d >>= 1;
    ++m;
  }
  if (m < 1 || dimension(m) != dim) {
    throw ShapeError(std::string(what) + " dimension must be a power of two >= 2, got " +
                     std::to_string(dim));
  }
  return m;
}

}  // namespace

PhaseProfile::PhaseProfile(int num_qubits, std::vector<double> phases)
    : num_qubits_(num_qubits), phases_(std::move(phases)) {
  if (num_qubits_ < 1 || num_qubits_ > configured_max_qubits()) {
    throw InvalidSizeError("phase profile qubit count out of range: " +
                           std::to_string(num_qubits_));
  }
  if (phases_.size() != dimension(num_qubits_)) {
    throw ShapeError("phase profile of " + std::to_string(num_qubits_) +
                     " qubits needs " + std::to_string(dimension(num_qubits_)) +
                     " phases, got " + std::to_string(phases_.size()));
  }
  for (double phi : phases_) {
    if (!std::isfinite(phi)) {
      throw InvalidStateError("phase profile entries must be finite");
    }
  }
}

Kernel::Kernel(DenseMatrix matrix)
    : matrix_(std::move(matrix)), num_qubits_(qubits_for_dim(matrix_.dim(), "kernel")) {}

SelectivePhaseKernel::SelectivePhaseKernel(PhaseProfile phases, bool include_prefactor)
    : phases_(std::move(phases)),
      prefactor_(include_prefactor ? std::exp2(-0.5 * phases_.num_qubits()) : 1.0) {}

Complex SelectivePhaseKernel::entry(std::size_t x) const {
  return prefactor_ * std::polar(1.0, phases_.phase(x));
}

DenseMatrix SelectivePhaseKernel::dense() const {
  DenseMatrix m(dim());
  for (std::size_t x = 0; x < dim(); ++x) {
    m(x, x) = entry(x);
  }
  return m;
}

bool SelectivePhaseKernel::unitary_within(double tol) const {
  // The dense realization is exactly diagonal, so K^dagger K - I has
  // |entry(x)|^2 - 1 on the diagonal and exact zeros elsewhere.
  double worst = 0.0;
  for (std::size_t x = 0; x < dim(); ++x) {
    worst = std::max(worst, std::abs(std::norm(entry(x)) - 1.0));
  }
  return worst <= tol;
}

StateVector dit_apply(const Kernel& k, const StateVector& f) {
  if (k.dim() != f.size()) {
    throw ShapeError("kernel dimension " + std::to_string(k.dim()) +
                     " does not match state size " + std::to_string(f.size()));
  }
  const Eigen::Map<const Eigen::VectorXcd> in(f.amplitudes().data(),
                                              static_cast<Eigen::Index>(f.size()));
  const Eigen::VectorXcd out = k.matrix().entries().transpose() * in;
  return StateVector(f.num_qubits(),
                     std::vector<Complex>(out.data(), out.data() + out.size()));
}

StateVector dit_invert(const Kernel& k, const StateVector& ftilde) {
  if (k.dim() != ftilde.size()) {
    throw ShapeError("kernel dimension " + std::to_string(k.dim()) +
                     " does not match state size " + std::to_string(ftilde.size()));
  }
  if (!is_unitary(k.matrix(), 1e-10)) {
    throw NotInvertibleError("kernel is not unitary; inverse transform undefined");
  }
  return dit_apply(Kernel(dagger(k.matrix())), ftilde);
}

SelectivePhaseKernel make_selective_kernel(const PhaseProfile& phases,
                                           bool include_prefactor) {
  return SelectivePhaseKernel(phases, include_prefactor);
}

StateVector apply_selective(const SelectivePhaseKernel& k, const StateVector& f) {
  if (k.dim() != f.size()) {
    throw ShapeError("kernel dimension " + std::to_string(k.dim()) +
                     " does not match state size " + std::to_string(f.size()));
  }
  std::vector<Complex> out(f.size());
  for (std::size_t y = 0; y < f.size(); ++y) {
    out[y] = k.entry(y) * f[y];
  }
  return StateVector(f.num_qubits(), std::move(out));
}

}  // namespace phasent
