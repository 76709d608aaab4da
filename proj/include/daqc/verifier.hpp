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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace daqc {

/// Largest qubit count accepted by the dense-matrix routines.
inline constexpr std::size_t kMaxDenseQubits = 12;
/// Largest qubit count accepted by Trotter-convergence studies.
inline constexpr std::size_t kMaxVerifyQubits = 8;

/// Dense 2^N x 2^N matrix of the Hamiltonian; qubit 0 is the most
/// significant tensor factor. Throws TooLarge beyond kMaxDenseQubits.
Eigen::MatrixXcd hamiltonian_matrix(const TwoBodyHamiltonian& hamiltonian);

/// exp(-i time H) through a Hermitian eigendecomposition.
Eigen::MatrixXcd exact_unitary(const TwoBodyHamiltonian& hamiltonian, double time);

/// (prod_q U_q exp(-i t_q/n_T H_S) U_q^dag)^{n_T}. Block 0 acts first, i.e.
/// it is the rightmost factor. The source must be ZZ-only.
Eigen::MatrixXcd schedule_unitary(const Schedule& schedule, std::size_t trotter_steps);

/// sqrt(1 - |tr(u^dag v)| / d), in [0, 1] and blind to global phase.
///
/// Evaluated as ||u - e^{i phi} v||_F / sqrt(2d) with the optimal phase phi,
/// which is the same quantity for unitaries but has no sqrt(epsilon) floor.
/// Throws DimensionMismatch.
double phase_invariant_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// ||u - e^{i phi} v||_F after optimal global phase alignment.
double aligned_frobenius_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// True if the effective Hamiltonians of all blocks pairwise commute. Exact
/// Pauli-algebra check; commutator coefficients above `tolerance` (scaled by
/// the largest squared source coupling) count as non-commuting.
bool effective_hamiltonians_commute(const Schedule& schedule, double tolerance = 1e-10);

struct TrotterPoint {
  std::size_t n_t;
  double distance;
  double frobenius;  // phase-aligned Frobenius distance, for verbose output
};

struct TrotterReport {
  std::vector<TrotterPoint> points;  // n_t strictly increasing
  /// p in distance ~ n_T^{-p}, fitted over the largest decade of n_T. Empty
  /// when fewer than two points there exceed 1e-8 (Trotter-exact schedules).
  std::optional<double> decay_exponent;
  bool commuting = false;

  double min_distance() const;
};

/// Compares a compiled schedule against exp(-i T H_P) for each n_T.
/// Throws TooLarge beyond kMaxVerifyQubits, InvalidArgument on a bad step list.
TrotterReport evaluate_schedule(const Schedule& schedule, const TwoBodyHamiltonian& problem,
                                const std::vector<std::size_t>& steps);

/// Compiles once (threshold 0), then runs evaluate_schedule.
TrotterReport trotter_convergence(const TwoBodyHamiltonian& problem,
                                  const TwoBodyHamiltonian& source, double sim_time,
                                  const std::vector<std::size_t>& steps);

/// {"distances": [{"n_t": ..., "distance": ...}], "decay_exponent": x|null, "commuting": b}
std::string report_to_json(const TrotterReport& report);

}  // namespace daqc
