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

#include "daqc/pauli.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

namespace daqc {

/// Key of a two-body coupling h_ij^{mu nu}; always i < j.
struct CouplingKey {
  std::size_t i;
  std::size_t j;
  PauliAxis mu;
  PauliAxis nu;

  auto operator<=>(const CouplingKey&) const = default;
};

/// Sparse two-body qubit Hamiltonian sum_{i<j} h_ij^{mu nu} s_i^mu s_j^nu.
///
/// Zero coefficients are never stored, so `terms()` lists exactly the
/// nonzero couplings in (i, j, mu, nu) order.
class TwoBodyHamiltonian {
 public:
  explicit TwoBodyHamiltonian(std::size_t n_qubits);

  /// Adds a coupling. Throws InvalidArgument if i >= j, a qubit is out of
  /// range, the coefficient is not finite or the key is already present.
  /// A zero coefficient is accepted and dropped.
  void add(std::size_t i, std::size_t j, PauliAxis mu, PauliAxis nu, double coeff);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::map<CouplingKey, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double coupling(std::size_t i, std::size_t j, PauliAxis mu, PauliAxis nu) const;

  bool is_zz_only() const;

  /// Qubit pairs (i < j) carrying at least one coupling.
  std::set<std::pair<std::size_t, std::size_t>> coupled_pairs() const;

  bool operator==(const TwoBodyHamiltonian&) const = default;

 private:
  std::size_t n_qubits_;
  std::map<CouplingKey, double> terms_;
};

/// Checks that `source` is a ZZ Hamiltonian covering every pair coupled in
/// `problem`. Throws SizeMismatch, NonZZSource or IncompatibleTopology (the
/// first offending pair in lexicographic order), in that priority.
void validate_compatibility(const TwoBodyHamiltonian& problem, const TwoBodyHamiltonian& source);

}  // namespace daqc
