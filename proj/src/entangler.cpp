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

#include "phasent/entangler.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace phasent {

namespace {

int qubits_for_length(std::size_t length) {
  int m = 0;
  std::size_t d = length;
  while (d > 1) {
    d >>= 1;
    ++m;
  }
  if (m < 1 || dimension(m) != length) {
    throw ShapeError("coefficient count must be a power of two >= 2, got " +
                     std::to_string(length));
  }
  if (m > configured_max_qubits()) {
    throw InvalidSizeError("coefficient count " + std::to_string(length) +
                           " exceeds the configured qubit maximum");
  }
  return m;
}

}  // namespace

EntanglerR::EntanglerR(std::vector<Complex> alpha)
    : num_qubits_(qubits_for_length(alpha.size())), alpha_(std::move(alpha)) {
  for (const Complex& a : alpha_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidStateError("entangler coefficients must be finite");
    }
  }
}

DenseMatrix EntanglerR::dense() const {
  const std::size_t n = dim();
  DenseMatrix m(n);
  m(0, 0) = alpha_[0];
  m(n - 1, n - 1) = alpha_[n - 1];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    m(k, n - 1 - k) = alpha_[k];
  }
  return m;
}

GeneralizedSwap::GeneralizedSwap(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits_ < 1 || num_qubits_ > configured_max_qubits()) {
    throw InvalidSizeError("swap qubit count out of range: " +
                           std::to_string(num_qubits_));
  }
}

std::size_t GeneralizedSwap::permute(std::size_t k) const {
  const std::size_t n = dim();
  if (k >= n) {
    throw IndexError("basis index " + std::to_string(k) + " out of range [0, " +
                     std::to_string(n) + ")");
  }
  if (k == 0 || k == n - 1) return k;
  return n - 1 - k;
}

DenseMatrix GeneralizedSwap::dense() const {
  const std::size_t n = dim();
  DenseMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, permute(k)) = Complex(1.0, 0.0);
  }
  return m;
}

EntanglerR build_R(std::vector<Complex> alpha) { return EntanglerR(std::move(alpha)); }

GeneralizedSwap build_P(int num_qubits) { return GeneralizedSwap(num_qubits); }

DenseMatrix tau(std::span<const Complex> alpha) {
  const EntanglerR r(std::vector<Complex>(alpha.begin(), alpha.end()));
  const GeneralizedSwap p(r.num_qubits());
  return matrix_product(r.dense(), p.dense());
}

StateVector apply_R_to_plus(const EntanglerR& r) {
  return apply_matrix(r.dense(), plus_product_state(r.num_qubits(), false));
}

bool r_unitarity_check(const EntanglerR& r, double tol) {
  for (const Complex& a : r.alpha()) {
    if (std::abs(std::abs(a) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace phasent
