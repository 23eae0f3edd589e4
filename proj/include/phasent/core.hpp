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

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phasent/errors.hpp"

namespace phasent {

using Complex = std::complex<double>;

/// Library-wide default ceiling on qubit counts (2^20 amplitudes).
inline constexpr int kLibraryMaxQubits = 20;

/// Default ceiling applied by the command-line tool.
inline constexpr int kCliMaxQubits = 10;

/// Effective qubit ceiling: the ENTANGLER_MAX_QUBITS environment variable
/// if set to a positive integer, otherwise `fallback`.
int configured_max_qubits(int fallback = kLibraryMaxQubits);

/// Dimension 2^m of the m-qubit basis.
constexpr std::size_t dimension(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

// Basis indices are plain integers x = x_{m-1} 2^{m-1} + ... + x_0 2^0:
// bit j of x is the label of qubit j, qubit m-1 is the most significant.
// Every module in this library shares that convention.

constexpr bool basis_bit(std::size_t x, int j) { return (x >> j) & 1u; }

constexpr std::size_t with_bit(std::size_t x, int j, bool value) {
  const std::size_t mask = std::size_t{1} << j;
  return value ? (x | mask) : (x & ~mask);
}

/// Pure m-qubit state: 2^m complex amplitudes in basis order.
///
/// Amplitudes are stored exactly as given; nothing in the library
/// normalizes implicitly. Instances are immutable values.
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t x) const { return amplitudes_[x]; }

  /// Euclidean norm of the amplitude vector.
  double norm() const;

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |psi>^{x m} with |psi> = |0> + |1>: every amplitude is 1 when
/// `normalized` is false, 2^{-m/2} when true.
StateVector plus_product_state(int num_qubits, bool normalized);

/// Tensor product; `a` supplies the high-order bits of the result index.
StateVector kron(const StateVector& a, const StateVector& b);

/// Square complex matrix, dense storage.
/// Entry access is (row, column); dimensions above 2^20 are rejected.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim);
  explicit DenseMatrix(Eigen::MatrixXcd entries);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const Complex> entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Standard matrix-vector product M s. The input state is untouched.
StateVector apply_matrix(const DenseMatrix& m, const StateVector& s);

DenseMatrix matrix_product(const DenseMatrix& a, const DenseMatrix& b);

/// Conjugate transpose.
DenseMatrix dagger(const DenseMatrix& a);

/// max_{ij} |A_ij - B_ij|.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// True iff max_abs_diff(A^dagger A, I) <= tol.
bool is_unitary(const DenseMatrix& a, double tol);

}  // namespace phasent
