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

#include "daqc/coupling_matrix.hpp"

#include "daqc/error.hpp"
#include "daqc/random.hpp"
#include "daqc/spectral.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace daqc {
namespace {

constexpr int kMaxResamples = 8;

Eigen::Index flat_index(std::size_t qubit, PauliAxis axis) {
  return static_cast<Eigen::Index>(3 * qubit + index(axis));
}

}  // namespace

CouplingRatioMatrix::CouplingRatioMatrix(Eigen::MatrixXd entries, double sim_time)
    : entries_(std::move(entries)), sim_time_(sim_time) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 || entries_.rows() % 3 != 0) {
    throw InvalidArgument("coupling-ratio matrix must be 3N x 3N, got " +
                          std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
  }
  if (!(sim_time > 0.0) || !std::isfinite(sim_time)) {
    throw InvalidArgument("simulation time must be positive and finite");
  }
  if (!entries_.allFinite()) throw InvalidArgument("coupling-ratio matrix has non-finite entries");
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NotSymmetric("coupling-ratio matrix is not symmetric within 1e-12");
  }
}

CouplingRatioMatrix build_coupling_ratio_matrix(const TwoBodyHamiltonian& problem,
                                                const TwoBodyHamiltonian& source, double sim_time) {
  validate_compatibility(problem, source);
  if (!(sim_time > 0.0) || !std::isfinite(sim_time)) {
    throw InvalidArgument("simulation time must be positive and finite");
  }
  const auto n = static_cast<Eigen::Index>(3 * problem.n_qubits());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, coeff] : problem.terms()) {
    const double ratio =
        sim_time * coeff / source.coupling(key.i, key.j, PauliAxis::z, PauliAxis::z);
    const Eigen::Index row = flat_index(key.i, key.mu);
    const Eigen::Index col = flat_index(key.j, key.nu);
    b(row, col) = ratio;
    b(col, row) = ratio;
  }
  return CouplingRatioMatrix(std::move(b), sim_time);
}

CouplingRatioMatrix gauge_fix_psd(const CouplingRatioMatrix& matrix) {
  Eigen::MatrixXd b = matrix.entries();
  const auto n_qubits = static_cast<Eigen::Index>(matrix.n_qubits());
  for (Eigen::Index q = 0; q < n_qubits; ++q) b.block<3, 3>(3 * q, 3 * q).setZero();

  const double lambda_min = std::min(0.0, min_eigenvalue(b));
  b.diagonal().setConstant(-lambda_min);

  CouplingRatioMatrix out(std::move(b), matrix.sim_time());
  out.lambda_tilde_min_ = lambda_min;
  out.gauge_fixed_ = true;
  return out;
}

CouplingRatioMatrix random_coupling_ratio_matrix(std::size_t n_qubits, std::uint64_t seed) {
  if (n_qubits < 2) throw InvalidArgument("random problems need at least 2 qubits");
  UniformSampler sampler(seed);
  const auto n = static_cast<Eigen::Index>(3 * n_qubits);
  const auto nq = static_cast<Eigen::Index>(n_qubits);

  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < nq; ++i) {
      for (Eigen::Index j = i + 1; j < nq; ++j) {
        for (Eigen::Index mu = 0; mu < 3; ++mu) {
          for (Eigen::Index nu = 0; nu < 3; ++nu) {
            const double value = sampler.uniform(-1.0, 1.0);
            b(3 * i + mu, 3 * j + nu) = value;
            b(3 * j + nu, 3 * i + mu) = value;
          }
        }
      }
    }
    const double peak = b.cwiseAbs().maxCoeff();
    if (peak == 0.0) continue;
    b /= peak;
    return CouplingRatioMatrix(std::move(b), 1.0);
  }
  throw DegenerateSample("random coupling-ratio matrix was all zeros after " +
                         std::to_string(kMaxResamples) + " draws");
}

}  // namespace daqc
