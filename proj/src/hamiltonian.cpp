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

#include "daqc/hamiltonian.hpp"

#include "daqc/error.hpp"

#include <cmath>
#include <string>

namespace daqc {

std::optional<PauliAxis> parse_axis(char c) {
  switch (c) {
    case 'x':
      return PauliAxis::x;
    case 'y':
      return PauliAxis::y;
    case 'z':
      return PauliAxis::z;
    default:
      return std::nullopt;
  }
}

BlockVector BlockVector::from_flat(const Eigen::VectorXd& flat) {
  if (flat.size() % 3 != 0) {
    throw InvalidArgument("block vector length " + std::to_string(flat.size()) +
                          " is not a multiple of 3");
  }
  BlockVector out;
  out.data_ = flat;
  return out;
}

TwoBodyHamiltonian::TwoBodyHamiltonian(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw InvalidArgument("a Hamiltonian needs at least one qubit");
}

void TwoBodyHamiltonian::add(std::size_t i, std::size_t j, PauliAxis mu, PauliAxis nu,
                             double coeff) {
  if (i >= j) {
    throw InvalidArgument("coupling indices must satisfy i < j, got (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
  }
  if (j >= n_qubits_) {
    throw InvalidArgument("qubit index " + std::to_string(j) + " out of range for " +
                          std::to_string(n_qubits_) + " qubits");
  }
  if (!std::isfinite(coeff)) throw InvalidArgument("coupling coefficient is not finite");

  const CouplingKey key{i, j, mu, nu};
  if (terms_.contains(key)) {
    throw InvalidArgument(std::string("duplicate coupling (") + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + to_char(mu) + to_char(nu) + ")");
  }
  if (coeff != 0.0) terms_.emplace(key, coeff);
}

double TwoBodyHamiltonian::coupling(std::size_t i, std::size_t j, PauliAxis mu,
                                    PauliAxis nu) const {
  const auto it = terms_.find(CouplingKey{i, j, mu, nu});
  return it == terms_.end() ? 0.0 : it->second;
}

bool TwoBodyHamiltonian::is_zz_only() const {
  for (const auto& [key, coeff] : terms_) {
    if (key.mu != PauliAxis::z || key.nu != PauliAxis::z) return false;
  }
  return true;
}

std::set<std::pair<std::size_t, std::size_t>> TwoBodyHamiltonian::coupled_pairs() const {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [key, coeff] : terms_) pairs.emplace(key.i, key.j);
  return pairs;
}

void validate_compatibility(const TwoBodyHamiltonian& problem, const TwoBodyHamiltonian& source) {
  if (problem.n_qubits() != source.n_qubits()) {
    throw SizeMismatch("problem has " + std::to_string(problem.n_qubits()) +
                       " qubits but source has " + std::to_string(source.n_qubits()));
  }
  if (!source.is_zz_only()) throw NonZZSource();
  for (const auto& [i, j] : problem.coupled_pairs()) {
    if (source.coupling(i, j, PauliAxis::z, PauliAxis::z) == 0.0) {
      throw IncompatibleTopology(i, j);
    }
  }
}

}  // namespace daqc
