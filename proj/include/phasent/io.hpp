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

#include <filesystem>
#include <string>
#include <string_view>

#include "phasent/core.hpp"
#include "phasent/separability.hpp"
#include "phasent/transform.hpp"

namespace phasent {

// Serialized formats shared across the library and the CLI. All numbers are
// emitted with round-trip decimal formatting, so identical values always
// serialize to identical bytes.

/// {"num_qubits": m, "amplitudes": [[re, im], ...]} with 2^m entries in
/// basis order.
std::string emit_state(const StateVector& s);
StateVector parse_state(std::string_view json_text);

/// {"num_qubits": m, "phases": [phi_0, ..., phi_{2^m-1}]}, radians.
std::string emit_phases(const PhaseProfile& p);
PhaseProfile parse_phases(std::string_view json_text);

/// {"verdict": "product"|"entangled", "max_residual": r, "tolerance": t,
///  "violations": [{"j": j, "x": x, "y": y, "residual": v}, ...]}
std::string emit_segre_report(const SegreReport& report);

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and renames into
/// place, so a failed write never leaves partial output behind.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace phasent
