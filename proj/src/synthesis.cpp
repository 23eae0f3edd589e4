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

#include "phasent/synthesis.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

namespace phasent {

namespace {

std::size_t block_count(int num_qubits) { return dimension(num_qubits) / 2; }

void check_block(const ControlledPhaseBlock& block) {
  if (block.num_qubits < 1 || block.num_qubits > configured_max_qubits()) {
    throw InvalidSizeError("block qubit count out of range: " +
                           std::to_string(block.num_qubits));
  }
  if (block.block_index >= block_count(block.num_qubits)) {
    throw IndexError("block_index " + std::to_string(block.block_index) +
                     " out of range [0, " +
                     std::to_string(block_count(block.num_qubits)) + ")");
  }
  if (!std::isfinite(block.target_phases[0]) || !std::isfinite(block.target_phases[1])) {
    throw InvalidStateError("block target_phases must be finite");
  }
}

}  // namespace

CircuitDescription decompose(const PhaseProfile& phases) {
  CircuitDescription circuit;
  circuit.num_qubits = phases.num_qubits();
  const std::size_t count = block_count(circuit.num_qubits);
  circuit.blocks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    circuit.blocks.push_back(ControlledPhaseBlock{
        i, circuit.num_qubits, {phases.phase(2 * i), phases.phase(2 * i + 1)}});
  }
  return circuit;
}

DenseMatrix block_matrix(const ControlledPhaseBlock& block) {
  check_block(block);
  DenseMatrix m = DenseMatrix::identity(dimension(block.num_qubits));
  m(2 * block.block_index, 2 * block.block_index) =
      std::polar(1.0, block.target_phases[0]);
  m(2 * block.block_index + 1, 2 * block.block_index + 1) =
      std::polar(1.0, block.target_phases[1]);
  return m;
}

bool block_is_unitary(const ControlledPhaseBlock& block, double tol) {
  check_block(block);
  // block_matrix is diagonal with unit entries away from the gate slots, so
  // B^dagger B - I is | |e^{i phi}|^2 - 1 | at the two slots and zero elsewhere.
  const double a = std::abs(std::norm(std::polar(1.0, block.target_phases[0])) - 1.0);
  const double b = std::abs(std::norm(std::polar(1.0, block.target_phases[1])) - 1.0);
  return std::max(a, b) <= tol;
}

DenseMatrix compose_circuit(const CircuitDescription& circuit) {
  if (circuit.num_qubits < 1 || circuit.num_qubits > configured_max_qubits()) {
    throw InvalidSizeError("circuit qubit count out of range: " +
                           std::to_string(circuit.num_qubits));
  }
  const std::size_t dim = dimension(circuit.num_qubits);
  std::vector<Complex> diag(dim, Complex(1.0, 0.0));
  for (const ControlledPhaseBlock& block : circuit.blocks) {
    if (block.num_qubits != circuit.num_qubits) {
      throw ShapeError("circuit mixes block sizes: expected " +
                       std::to_string(circuit.num_qubits) + " qubits, found " +
                       std::to_string(block.num_qubits));
    }
    check_block(block);
    // Left fold over the diagonal: identical to multiplying the dense
    // matrices in order, since each block is diagonal.
    diag[2 * block.block_index] *= std::polar(1.0, block.target_phases[0]);
    diag[2 * block.block_index + 1] *= std::polar(1.0, block.target_phases[1]);
  }
  return DenseMatrix::diagonal(diag);
}

std::string emit_circuit(const CircuitDescription& circuit) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const ControlledPhaseBlock& block : circuit.blocks) {
    blocks.push_back({{"block_index", block.block_index},
                      {"target_phases", {block.target_phases[0], block.target_phases[1]}}});
  }
  const nlohmann::json doc = {{"num_qubits", circuit.num_qubits}, {"blocks", blocks}};
  return doc.dump(2) + "\n";
}

CircuitDescription parse_circuit(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("circuit: top level must be an object");
  if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer()) {
    throw ParseError("circuit: missing or non-integer field \"num_qubits\"");
  }
  const int num_qubits = doc["num_qubits"].get<int>();
  if (num_qubits < 1 || num_qubits > configured_max_qubits()) {
    throw ParseError("circuit: \"num_qubits\" out of range: " +
                     std::to_string(num_qubits));
  }
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
    throw ParseError("circuit: missing or non-array field \"blocks\"");
  }

  CircuitDescription circuit;
  circuit.num_qubits = num_qubits;
  std::set<std::size_t> seen;
  std::size_t pos = 0;
  for (const nlohmann::json& entry : doc["blocks"]) {
    const std::string where = "circuit: blocks[" + std::to_string(pos) + "]";
    if (!entry.is_object()) throw ParseError(where + " must be an object");
    if (!entry.contains("block_index") || !entry["block_index"].is_number_unsigned()) {
      throw ParseError(where + ": missing or invalid field \"block_index\"");
    }
    const std::size_t index = entry["block_index"].get<std::size_t>();
    if (index >= block_count(num_qubits)) {
      throw ParseError(where + ": \"block_index\" " + std::to_string(index) +
                       " out of range [0, " + std::to_string(block_count(num_qubits)) +
                       ")");
    }
    if (!seen.insert(index).second) {
      throw ParseError(where + ": duplicate \"block_index\" " + std::to_string(index));
    }
    if (!entry.contains("target_phases") || !entry["target_phases"].is_array() ||
        entry["target_phases"].size() != 2) {
      throw ParseError(where + ": field \"target_phases\" must be an array of 2 numbers");
    }
    std::array<double, 2> phases{};
    for (int k = 0; k < 2; ++k) {
      const nlohmann::json& value = entry["target_phases"][k];
      if (!value.is_number()) {
        throw ParseError(where + ": \"target_phases\" entries must be numbers");
      }
      phases[k] = value.get<double>();
      if (!std::isfinite(phases[k])) {
        throw ParseError(where + ": \"target_phases\" entries must be finite");
      }
    }
    circuit.blocks.push_back(ControlledPhaseBlock{index, num_qubits, phases});
    ++pos;
  }
  return circuit;
}

}  // namespace phasent
