// Copyright 2026 The daqc-compiler Authors
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

#include "daqc/json_io.hpp"

#include "daqc/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace daqc {
namespace {

using nlohmann::json;

const json& require(const json& object, const char* field) {
  if (!object.is_object()) throw ParseError("expected a JSON object");
  const auto it = object.find(field);
  if (it == object.end()) throw ParseError(std::string("missing field \"") + field + "\"");
  return *it;
}

double require_number(const json& object, const char* field) {
  const json& value = require(object, field);
  if (!value.is_number()) throw ParseError(std::string("field \"") + field + "\" must be a number");
  const double out = value.get<double>();
  if (!std::isfinite(out)) throw ParseError(std::string("field \"") + field + "\" is not finite");
  return out;
}

std::size_t require_index(const json& object, const char* field) {
  const json& value = require(object, field);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + field + "\" must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

TwoBodyHamiltonian hamiltonian_from_json(const json& doc) {
  const std::size_t n_qubits = require_index(doc, "n_qubits");
  if (n_qubits == 0) throw ParseError("n_qubits must be positive");
  const json& terms = require(doc, "terms");
  if (!terms.is_array()) throw ParseError("field \"terms\" must be an array");

  TwoBodyHamiltonian out(n_qubits);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const json& term = terms[t];
    const std::string where = "term " + std::to_string(t) + ": ";
    try {
      const std::size_t i = require_index(term, "i");
      const std::size_t j = require_index(term, "j");
      const json& pauli = require(term, "pauli");
      if (!pauli.is_string() || pauli.get<std::string>().size() != 2) {
        throw ParseError("\"pauli\" must be a two-letter string such as \"xy\"");
      }
      const std::string label = pauli.get<std::string>();
      const auto mu = parse_axis(label[0]);
      const auto nu = parse_axis(label[1]);
      if (!mu || !nu) throw ParseError("unknown Pauli label \"" + label + "\"");
      out.add(i, j, *mu, *nu, require_number(term, "coeff"));
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }
  return out;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void append_hamiltonian(std::string& out, const TwoBodyHamiltonian& h, const std::string& indent) {
  out += "{\"n_qubits\": " + std::to_string(h.n_qubits()) + ", \"terms\": [";
  bool first = true;
  for (const auto& [key, coeff] : h.terms()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += indent + "  {\"i\": " + std::to_string(key.i) + ", \"j\": " + std::to_string(key.j) +
           ", \"pauli\": \"" + to_char(key.mu) + to_char(key.nu) + "\", \"coeff\": " +
           format_double(coeff) + "}";
  }
  if (!first) out += "\n" + indent;
  out += "]}";
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("cannot serialize a non-finite number");
  if (value == 0.0) value = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

TwoBodyHamiltonian parse_hamiltonian(std::string_view text) {
  return hamiltonian_from_json(parse_document(text));
}

std::string serialize_hamiltonian(const TwoBodyHamiltonian& hamiltonian) {
  std::string out;
  append_hamiltonian(out, hamiltonian, "");
  out += "\n";
  return out;
}

Schedule parse_schedule(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n_qubits = require_index(doc, "n_qubits");
  const double sim_time = require_number(doc, "sim_time");
  if (!(sim_time > 0.0)) throw ParseError("sim_time must be positive");

  TwoBodyHamiltonian source = [&] {
    try {
      return hamiltonian_from_json(require(doc, "source"));
    } catch (const ParseError& e) {
      throw ParseError(std::string("source: ") + e.what());
    }
  }();
  if (source.n_qubits() != n_qubits) throw ParseError("source n_qubits disagrees with schedule");

  Schedule schedule(std::move(source), sim_time);
  const json& blocks = require(doc, "blocks");
  if (!blocks.is_array()) throw ParseError("field \"blocks\" must be an array");
  schedule.blocks.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string where = "block " + std::to_string(b) + ": ";
    const json& block_json = blocks[b];
    DigitalAnalogBlock block;
    try {
      block.analog_time = require_number(block_json, "t");
      if (!(block.analog_time > 0.0)) throw ParseError("analog time must be positive");
      const json& rotations = require(block_json, "rotations");
      if (!rotations.is_array() || rotations.size() != n_qubits) {
        throw ParseError("expected " + std::to_string(n_qubits) + " rotations");
      }
      for (const json& rotation : rotations) {
        SQGParams params;
        params.angle = require_number(rotation, "theta");
        const json& axis = require(rotation, "axis");
        if (!axis.is_array() || axis.size() != 3) throw ParseError("axis must have 3 components");
        for (Eigen::Index k = 0; k < 3; ++k) {
          const json& c = axis[static_cast<std::size_t>(k)];
          if (!c.is_number()) throw ParseError("axis components must be numbers");
          params.axis(k) = c.get<double>();
        }
        if (std::abs(params.axis.norm() - 1.0) > 1e-10) throw ParseError("axis is not a unit vector");
        block.rotations.push_back(params);
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    schedule.blocks.push_back(std::move(block));
  }

  const json& metadata = require(doc, "metadata");
  schedule.discarded_weight = require_number(metadata, "discarded_weight");
  const json& generator = require(metadata, "generator");
  if (!generator.is_string()) throw ParseError("metadata.generator must be a string");
  schedule.generator = generator.get<std::string>();
  return schedule;
}

std::string serialize_schedule(const Schedule& schedule) {
  std::string out = "{\n";
  out += "  \"n_qubits\": " + std::to_string(schedule.n_qubits()) + ",\n";
  out += "  \"sim_time\": " + format_double(schedule.sim_time) + ",\n";
  out += "  \"source\": ";
  append_hamiltonian(out, schedule.source, "  ");
  out += ",\n  \"blocks\": [";
  for (std::size_t b = 0; b < schedule.blocks.size(); ++b) {
    const auto& block = schedule.blocks[b];
    out += b == 0 ? "\n" : ",\n";
    out += "    {\"t\": " + format_double(block.analog_time) + ", \"rotations\": [";
    for (std::size_t i = 0; i < block.rotations.size(); ++i) {
      const auto& r = block.rotations[i];
      if (i > 0) out += ", ";
      out += "{\"theta\": " + format_double(r.angle) + ", \"axis\": [" + format_double(r.axis.x()) +
             ", " + format_double(r.axis.y()) + ", " + format_double(r.axis.z()) + "]}";
    }
    out += "]}";
  }
  if (!schedule.blocks.empty()) out += "\n  ";
  out += "],\n";
  out += "  \"metadata\": {\"discarded_weight\": " + format_double(schedule.discarded_weight) +
         ", \"generator\": " + json(schedule.generator).dump() + "}\n";
  out += "}\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("failed writing " + path.string());
}

TwoBodyHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  try {
    return parse_hamiltonian(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Schedule load_schedule(const std::filesystem::path& path) {
  try {
    return parse_schedule(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace daqc
