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

#include "daqc/decomposer.hpp"
#include "daqc/hamiltonian.hpp"
#include "daqc/pauli.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace daqc {

inline constexpr const char* kGeneratorVersion = "daqc-compiler 0.1.0";

/// Single-qubit rotation R(theta, n) = exp(-i theta/2 n.sigma) in the n_z = 0
/// gauge, theta in [0, pi].
struct SQGParams {
  double angle = 0.0;
  Vec3 axis = Vec3::UnitX();

  bool operator==(const SQGParams&) const = default;
};

struct DigitalAnalogBlock {
  double analog_time = 0.0;
  std::vector<SQGParams> rotations;  // one per qubit, qubit order

  bool operator==(const DigitalAnalogBlock&) const = default;
};

/// Ordered digital-analog blocks; block 0 is applied first.
struct Schedule {
  explicit Schedule(TwoBodyHamiltonian source_hamiltonian, double time = 1.0)
      : source(std::move(source_hamiltonian)), sim_time(time) {}

  std::size_t n_qubits() const { return source.n_qubits(); }
  double total_analog_time() const;

  TwoBodyHamiltonian source;
  double sim_time;
  std::vector<DigitalAnalogBlock> blocks;
  double discarded_weight = 0.0;
  std::string generator = kGeneratorVersion;

  bool operator==(const Schedule&) const = default;
};

/// gamma = R sigma^z R^dag in Pauli coordinates:
///   (n_x n_z (1 - c) + n_y s, n_y n_z (1 - c) - n_x s, n_z^2 (1 - c) + c).
Vec3 rotation_to_gamma(const SQGParams& params);

/// Inverse of rotation_to_gamma in the n_z = 0 gauge. theta = arccos(gamma_z)
/// (computed as atan2 of the equatorial radius for accuracy near the poles);
/// at the poles the axis is the conventional (1, 0, 0). Throws NotUnit if
/// |gamma| deviates from 1 by more than 1e-10.
SQGParams gamma_to_rotation(const Vec3& gamma);

/// 2x2 unitary exp(-i theta/2 n.sigma).
Eigen::Matrix2cd rotation_matrix(const SQGParams& params);

/// Couplings of U H_S U^dag for U = tensor product of rotations with the given
/// gamma blocks: h_ij^{mu nu} = h_S^{zz}_ij gamma_i^mu gamma_j^nu. Products
/// below 1e-15 in magnitude are dropped. Throws NonZZSource.
TwoBodyHamiltonian effective_couplings(const TwoBodyHamiltonian& source, const BlockVector& gamma);

/// Effective Hamiltonian of one block, from its stored rotations.
TwoBodyHamiltonian block_effective_hamiltonian(const TwoBodyHamiltonian& source,
                                               const DigitalAnalogBlock& block);

/// One block per decomposition term, in decomposition order.
Schedule assemble_schedule(const Decomposition& decomposition, const TwoBodyHamiltonian& source,
                           double sim_time);

struct CompileResult {
  Schedule schedule;
  double lambda_tilde_min;
  double total_analog_time;
  std::size_t retained_eigenpairs;
};

/// Full pipeline: coupling-ratio matrix, gauge fixing, decomposition and
/// schedule assembly.
CompileResult compile_schedule(const TwoBodyHamiltonian& problem, const TwoBodyHamiltonian& source,
                               double sim_time, double discard_threshold = 0.0);

}  // namespace daqc
