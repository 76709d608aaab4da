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

#include "daqc/circuit.hpp"

#include "daqc/coupling_matrix.hpp"
#include "daqc/error.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <string>

namespace daqc {

double Schedule::total_analog_time() const {
  double total = 0.0;
  for (const auto& block : blocks) total += block.analog_time;
  return total;
}

Vec3 rotation_to_gamma(const SQGParams& params) {
  const double c = std::cos(params.angle);
  const double s = std::sin(params.angle);
  const Vec3& n = params.axis;
  return {n.x() * n.z() * (1.0 - c) + n.y() * s, n.y() * n.z() * (1.0 - c) - n.x() * s,
          n.z() * n.z() * (1.0 - c) + c};
}

SQGParams gamma_to_rotation(const Vec3& gamma) {
  if (!gamma.allFinite() || std::abs(gamma.norm() - 1.0) > 1e-10) {
    throw NotUnit("gamma vector is not a unit vector");
  }
  const double radius = std::hypot(gamma.x(), gamma.y());
  SQGParams out;
  out.angle = std::atan2(radius, gamma.z());
  if (radius > 1e-12) {
    out.axis = Vec3(-gamma.y() / radius, gamma.x() / radius, 0.0);
  }
  return out;
}

Eigen::Matrix2cd rotation_matrix(const SQGParams& params) {
  using namespace std::complex_literals;
  const double c = std::cos(0.5 * params.angle);
  const double s = std::sin(0.5 * params.angle);
  const Vec3& n = params.axis;
  Eigen::Matrix2cd r;
  r(0, 0) = c - 1i * s * n.z();
  r(0, 1) = -1i * s * n.x() - s * n.y();
  r(1, 0) = -1i * s * n.x() + s * n.y();
  r(1, 1) = c + 1i * s * n.z();
  return r;
}

TwoBodyHamiltonian effective_couplings(const TwoBodyHamiltonian& source, const BlockVector& gamma) {
  if (!source.is_zz_only()) throw NonZZSource();
  if (gamma.n_qubits() != source.n_qubits()) {
    throw SizeMismatch("gamma has " + std::to_string(gamma.n_qubits()) +
                       " blocks but the source has " + std::to_string(source.n_qubits()) +
                       " qubits");
  }
  TwoBodyHamiltonian out(source.n_qubits());
  for (const auto& [key, coupling] : source.terms()) {
    const Vec3 gi = gamma.block(key.i);
    const Vec3 gj = gamma.block(key.j);
    for (PauliAxis mu : kPauliAxes) {
      for (PauliAxis nu : kPauliAxes) {
        const double value = coupling * gi(index(mu)) * gj(index(nu));
        if (std::abs(value) >= 1e-15) out.add(key.i, key.j, mu, nu, value);
      }
    }
  }
  return out;
}

TwoBodyHamiltonian block_effective_hamiltonian(const TwoBodyHamiltonian& source,
                                               const DigitalAnalogBlock& block) {
  BlockVector gamma(block.rotations.size());
  for (std::size_t i = 0; i < block.rotations.size(); ++i) {
    gamma.set_block(i, rotation_to_gamma(block.rotations[i]));
  }
  return effective_couplings(source, gamma);
}

Schedule assemble_schedule(const Decomposition& decomposition, const TwoBodyHamiltonian& source,
                           double sim_time) {
  if (decomposition.n_qubits != source.n_qubits()) {
    throw SizeMismatch("decomposition and source disagree on the qubit count");
  }
  Schedule schedule(source, sim_time);
  schedule.discarded_weight = decomposition.discarded_weight;
  schedule.blocks.reserve(decomposition.terms.size());
  for (const GammaTerm& term : decomposition.terms) {
    DigitalAnalogBlock block;
    block.analog_time = term.time;
    block.rotations.reserve(decomposition.n_qubits);
    for (std::size_t i = 0; i < decomposition.n_qubits; ++i) {
      block.rotations.push_back(gamma_to_rotation(term.gamma.block(i)));
    }
    schedule.blocks.push_back(std::move(block));
  }
  return schedule;
}

CompileResult compile_schedule(const TwoBodyHamiltonian& problem, const TwoBodyHamiltonian& source,
                               double sim_time, double discard_threshold) {
  const CouplingRatioMatrix fixed =
      gauge_fix_psd(build_coupling_ratio_matrix(problem, source, sim_time));
  const Decomposition decomposition = decompose(fixed, discard_threshold);

  std::set<std::size_t> eigenpairs;
  for (const auto& term : decomposition.terms) eigenpairs.insert(term.eigen_index);

  return CompileResult{assemble_schedule(decomposition, source, sim_time), fixed.lambda_tilde_min(),
                       total_analog_time(decomposition), eigenpairs.size()};
}

}  // namespace daqc
