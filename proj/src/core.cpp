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

#include "phasent/core.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

namespace phasent {

namespace {

constexpr std::size_t kMaxDenseDim = std::size_t{1} << kLibraryMaxQubits;

std::optional<int> max_qubits_override() {
  static const std::optional<int> cached = []() -> std::optional<int> {
    const char* raw = std::getenv("ENTANGLER_MAX_QUBITS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1 || value > kLibraryMaxQubits) {
      return std::nullopt;
    }
    return static_cast<int>(value);
  }();
  return cached;
}

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw InvalidSizeError("qubit count must be at least 1, got " +
                           std::to_string(num_qubits));
  }
  const int max = configured_max_qubits();
  if (num_qubits > max) {
    throw InvalidSizeError("qubit count " + std::to_string(num_qubits) +
                           " exceeds the configured maximum " + std::to_string(max));
  }
}

}  // namespace

int configured_max_qubits(int fallback) {
  const auto override = max_qubits_override();
  return override ? *override : fallback;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits_);
  if (amplitudes_.size() != dimension(num_qubits_)) {
    throw ShapeError("state of " + std::to_string(num_qubits_) + " qubits needs " +
                     std::to_string(dimension(num_qubits_)) + " amplitudes, got " +
                     std::to_string(amplitudes_.size()));
  }
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidStateError("state amplitudes must be finite");
    }
  }
}

double StateVector::norm() const {
  return Eigen::Map<const Eigen::VectorXcd>(amplitudes_.data(),
                                            static_cast<Eigen::Index>(amplitudes_.size()))
      .norm();
}

StateVector plus_product_state(int num_qubits, bool normalized) {
  check_qubit_count(num_qubits);
  const Complex value = normalized ? Complex(std::exp2(-0.5 * num_qubits), 0.0)
                                   : Complex(1.0, 0.0);
  return StateVector(num_qubits, std::vector<Complex>(dimension(num_qubits), value));
}

StateVector kron(const StateVector& a, const StateVector& b) {
  const int combined = a.num_qubits() + b.num_qubits();
  if (combined > configured_max_qubits()) {
    throw InvalidSizeError("tensor product of " + std::to_string(a.num_qubits()) +
                           " and " + std::to_string(b.num_qubits()) +
                           " qubits exceeds the configured maximum");
  }
  std::vector<Complex> out(dimension(combined));
  const std::size_t size_b = b.size();
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < size_b; ++y) {
      out[x * size_b + y] = a[x] * b[y];
    }
  }
  return StateVector(combined, std::move(out));
}

DenseMatrix::DenseMatrix(std::size_t dim) {
  if (dim == 0 || dim > kMaxDenseDim) {
    throw ShapeError("dense matrix dimension " + std::to_string(dim) +
                     " out of range [1, 2^" + std::to_string(kLibraryMaxQubits) + "]");
  }
  entries_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
}

DenseMatrix::DenseMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 ||
      static_cast<std::size_t>(entries_.rows()) > kMaxDenseDim) {
    throw ShapeError("dense matrix must be square with dimension in [1, 2^" +
                     std::to_string(kLibraryMaxQubits) + "], got " +
                     std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  m.entries_.setIdentity();
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> entries) {
  DenseMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(i, i) = entries[i];
  }
  return m;
}

StateVector apply_matrix(const DenseMatrix& m, const StateVector& s) {
  if (m.dim() != s.size()) {
    throw ShapeError("matrix dimension " + std::to_string(m.dim()) +
                     " does not match state size " + std::to_string(s.size()));
  }
  const Eigen::Map<const Eigen::VectorXcd> in(s.amplitudes().data(),
                                              static_cast<Eigen::Index>(s.size()));
  const Eigen::VectorXcd out = m.entries() * in;
  return StateVector(s.num_qubits(),
                     std::vector<Complex>(out.data(), out.data() + out.size()));
}

DenseMatrix matrix_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("matrix product needs matching dimensions, got " +
                     std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  return DenseMatrix(Eigen::MatrixXcd(a.entries() * b.entries()));
}

DenseMatrix dagger(const DenseMatrix& a) {
  return DenseMatrix(Eigen::MatrixXcd(a.entries().adjoint()));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("max_abs_diff needs matching dimensions, got " +
                     std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

bool is_unitary(const DenseMatrix& a, double tol) {
  return max_abs_diff(matrix_product(dagger(a), a), DenseMatrix::identity(a.dim())) <= tol;
}

}  // namespace phasent
