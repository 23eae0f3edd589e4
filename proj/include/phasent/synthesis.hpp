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
#include <string>
#include <string_view>
#include <vector>

#include "phasent/core.hpp"
#include "phasent/transform.hpp"

namespace phasent {

/// One value-controlled single-qubit diagonal gate.
///
/// Control register: qubits m-1..1, read as an (m-1)-bit integer. When it
/// equals block_index the gate applies diag(e^{i a}, e^{i b}) to qubit 0,
/// otherwise it is the identity. Block index 0 therefore fires when every
/// control bit is zero (a fully negated control); for m = 1 the control
/// register is empty and the gate is unconditional.
struct ControlledPhaseBlock {
  std::size_t block_index = 0;
  int num_qubits = 1;
  std::array<double, 2> target_phases{0.0, 0.0};
};

/// Ordered gate list; the product of the block matrices, left to right,
/// is the circuit's matrix.
struct CircuitDescription {
  int num_qubits = 1;
  std::vector<ControlledPhaseBlock> blocks;
};

/// Exact decomposition of the prefactor-1 selective phase kernel into
/// 2^{m-1} controlled blocks; block i carries phases (phi_{2i}, phi_{2i+1}).
CircuitDescription decompose(const PhaseProfile& phases);

/// Dense realization: identity except entries (2i, 2i) = e^{i a} and
/// (2i+1, 2i+1) = e^{i b}. Always diagonal.
DenseMatrix block_matrix(const ControlledPhaseBlock& block);

/// Same predicate as is_unitary(block_matrix(block), tol), evaluated on
/// the two gate phases.
bool block_is_unitary(const ControlledPhaseBlock& block, double tol);

/// Ordered product of the block matrices (empty product = identity).
/// Block matrices are diagonal, so the product is folded slot-wise; the
/// result matches the dense left-to-right product entry for entry.
DenseMatrix compose_circuit(const CircuitDescription& circuit);

/// Circuit JSON:
/// {"num_qubits": m, "blocks": [{"block_index": i, "target_phases": [a, b]}, ...]}
std::string emit_circuit(const CircuitDescription& circuit);

/// Inverse of emit_circuit. Rejects out-of-range and duplicate block
/// indices; error messages name the offending field.
CircuitDescription parse_circuit(std::string_view json_text);

}  // namespace phasent
