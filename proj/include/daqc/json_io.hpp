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

#pragma once

#include "daqc/circuit.hpp"
#include "daqc/hamiltonian.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace daqc {

// Hamiltonian files:
//   {"n_qubits": N, "terms": [{"i": 0, "j": 1, "pauli": "xy", "coeff": 0.5}, ...]}
// Schedule files:
//   {"n_qubits": N, "sim_time": T, "source": <Hamiltonian>,
//    "blocks": [{"t": t, "rotations": [{"theta": a, "axis": [x, y, z]}, ...]}, ...],
//    "metadata": {"discarded_weight": w, "generator": "..."}}
// Floats are written with 17 significant digits, so serialize -> parse ->
// serialize is byte-identical.

TwoBodyHamiltonian parse_hamiltonian(std::string_view text);
std::string serialize_hamiltonian(const TwoBodyHamiltonian& hamiltonian);

Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& schedule);

/// Formats a finite double with "%.17g"; negative zero is written as 0.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

TwoBodyHamiltonian load_hamiltonian(const std::filesystem::path& path);
Schedule load_schedule(const std::filesystem::path& path);

}  // namespace daqc
