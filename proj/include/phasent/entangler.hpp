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

/// Geometric entangler R, parameterized by 2^m coefficients alpha_x.
///
/// Dense layout (N = 2^m): the diagonal carries only the two corner
/// coefficients, entry (0, 0) = alpha_0 and (N-1, N-1) = alpha_{N-1};
/// every middle row k holds alpha_k on the anti-diagonal, entry
/// (k, N-1-k). One nonzero per row and per column, so R is a generalized
/// permutation with phases, and R applied to the all-ones product state
/// returns exactly the vector alpha.
class EntanglerR {
 public:
  explicit EntanglerR(std::vector<Complex> alpha);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return alpha_.size(); }
  std::span<const Complex> alpha() const { return alpha_; }

  DenseMatrix dense() const;

 private:
  int num_qubits_;
  std::vector<Complex> alpha_;
};

/// Permutation fixing the extreme basis indices and reversing the rest:
/// sigma(0) = 0, sigma(N-1) = N-1, sigma(k) = N-1-k otherwise. Self-inverse;
/// equals the two-qubit SWAP gate at m = 2.
class GeneralizedSwap {
 public:
  explicit GeneralizedSwap(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dimension(num_qubits_); }
  std::size_t permute(std::size_t k) const;

  DenseMatrix dense() const;

 private:
  int num_qubits_;
};

EntanglerR build_R(std::vector<Complex> alpha);
GeneralizedSwap build_P(int num_qubits);

/// Phase gate R * P, computed as the dense matrix product. Equals
/// diag(alpha_0, ..., alpha_{N-1}) by construction of the R and P layouts.
DenseMatrix tau(std::span<const Complex> alpha);

/// Dense application of R to the unnormalized plus product state; the
/// result holds alpha_x at component x.
StateVector apply_R_to_plus(const EntanglerR& r);

/// True iff every |alpha_x| is within tol of 1. For this layout that is
/// equivalent to is_unitary of the dense realization.
bool r_unitarity_check(const EntanglerR& r, double tol);

}  // namespace phasent
