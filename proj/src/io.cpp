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

#include "phasent/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace phasent {

namespace {

nlohmann::json parse_document(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

int parse_num_qubits(const nlohmann::json& doc, const char* what) {
  if (!doc.is_object() || !doc.contains("num_qubits") ||
      !doc["num_qubits"].is_number_integer()) {
    throw ParseError(std::string(what) + ": missing or non-integer field \"num_qubits\"");
  }
  const int m = doc["num_qubits"].get<int>();
  if (m < 1 || m > configured_max_qubits()) {
    throw ParseError(std::string(what) + ": \"num_qubits\" out of range: " +
                     std::to_string(m));
  }
  return m;
}

double parse_finite_number(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number()) {
    throw ParseError(where + " must be a number");
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(where + " must be finite");
  }
  return v;
}

}  // namespace

std::string emit_state(const StateVector& s) {
  nlohmann::json amplitudes = nlohmann::json::array();
  for (const Complex& a : s.amplitudes()) {
    amplitudes.push_back({a.real(), a.imag()});
  }
  const nlohmann::json doc = {{"num_qubits", s.num_qubits()},
                              {"amplitudes", amplitudes}};
  return doc.dump(2) + "\n";
}

StateVector parse_state(std::string_view json_text) {
  const nlohmann::json doc = parse_document(json_text, "state");
  const int m = parse_num_qubits(doc, "state");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw ParseError("state: missing or non-array field \"amplitudes\"");
  }
  const nlohmann::json& amplitudes = doc["amplitudes"];
  if (amplitudes.size() != dimension(m)) {
    throw ParseError("state: \"amplitudes\" needs " + std::to_string(dimension(m)) +
                     " entries for " + std::to_string(m) + " qubits, got " +
                     std::to_string(amplitudes.size()));
  }
  std::vector<Complex> values;
  values.reserve(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const nlohmann::json& entry = amplitudes[i];
    const std::string where = "state: amplitudes[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError(where + " must be a [re, im] pair");
    }
    values.emplace_back(parse_finite_number(entry[0], where + "[0]"),
                        parse_finite_number(entry[1], where + "[1]"));
  }
  return StateVector(m, std::move(values));
}

std::string emit_phases(const PhaseProfile& p) {
  const nlohmann::json doc = {
      {"num_qubits", p.num_qubits()},
      {"phases", std::vector<double>(p.phases().begin(), p.phases().end())}};
  return doc.dump(2) + "\n";
}

PhaseProfile parse_phases(std::string_view json_text) {
  const nlohmann::json doc = parse_document(json_text, "phases");
  const int m = parse_num_qubits(doc, "phases");
  if (!doc.contains("phases") || !doc["phases"].is_array()) {
    throw ParseError("phases: missing or non-array field \"phases\"");
  }
  const nlohmann::json& phases = doc["phases"];
  if (phases.size() != dimension(m)) {
    throw ParseError("phases: \"phases\" needs " + std::to_string(dimension(m)) +
                     " entries for " + std::to_string(m) + " qubits, got " +
                     std::to_string(phases.size()));
  }
  std::vector<double> values;
  values.reserve(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    values.push_back(
        parse_finite_number(phases[i], "phases: phases[" + std::to_string(i) + "]"));
  }
  return PhaseProfile(m, std::move(values));
}

std::string emit_segre_report(const SegreReport& report) {
  // Serialized by hand: entangled reports can carry millions of violations,
  // and building that many json objects dominates the analysis itself.
  // Numbers still go through the json scalar writer, so formatting matches
  // every other emitter.
  const auto number = [](double v) { return nlohmann::json(v).dump(); };
  std::string out;
  out.reserve(128 + report.violations.size() * 64);
  out += "{\n";
  out += "  \"verdict\": ";
  out += report.verdict == Verdict::Product ? "\"product\"" : "\"entangled\"";
  out += ",\n  \"max_residual\": ";
  out += number(report.max_residual);
  out += ",\n  \"tolerance\": ";
  out += number(report.tolerance);
  out += ",\n  \"violations\": [";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const QuadricViolation& v = report.violations[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"j\": " + std::to_string(v.quadric.j);
    out += ", \"x\": " + std::to_string(v.quadric.x);
    out += ", \"y\": " + std::to_string(v.quadric.y);
    out += ", \"residual\": " + number(v.residual) + "}";
  }
  out += report.violations.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw ParseError("failed reading file: " + path.string());
  }
  return std::move(buffer).str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open file for writing: " + tmp.string());
    }
    out << text;
    out.flush();
    if (!out.good()) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("failed writing file: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace phasent
