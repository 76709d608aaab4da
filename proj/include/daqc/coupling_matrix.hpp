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

#include "daqc/hamiltonian.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>

namespace daqc {

/// The 3N x 3N coupling-ratio matrix B with B(3i+mu, 3j+nu) =
/// T h_P^{mu nu}_ij / h_S^{zz}_ij for i != j.
///
/// The 3x3 diagonal blocks do not correspond to any two-body term and are a
/// gauge freedom; `gauge_fix_psd` fills them so that B is positive
/// semidefinite.
class CouplingRatioMatrix {
 public:
  /// Wraps an explicit matrix. `entries` must be square with dimension 3N
  /// and symmetric within 1e-12; `sim_time` must be positive.
  CouplingRatioMatrix(Eigen::MatrixXd entries, double sim_time);

  std::size_t n_qubits() const { return static_cast<std::size_t>(entries_.rows()) / 3; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double sim_time() const { return sim_time_; }

  bool gauge_fixed() const { return gauge_fixed_; }
  /// Minimum eigenvalue of the zero-diagonal matrix, clamped to <= 0. Only
  /// meaningful once gauge_fixed() is true; 0 otherwise.
  double lambda_tilde_min() const { return lambda_tilde_min_; }

  double operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  friend CouplingRatioMatrix gauge_fix_psd(const CouplingRatioMatrix& matrix);

  Eigen::MatrixXd entries_;
  double sim_time_;
  double lambda_tilde_min_ = 0.0;
  bool gauge_fixed_ = false;
};

/// Builds B from a problem and a compatible ZZ source; diagonal blocks are
/// zero. Pairs without a problem coupling produce zero blocks.
CouplingRatioMatrix build_coupling_ratio_matrix(const TwoBodyHamiltonian& problem,
                                                const TwoBodyHamiltonian& source, double sim_time);

/// Sets every diagonal entry to |lambda_min| of the zero-diagonal matrix
/// (off-diagonal entries of the diagonal blocks to zero), making B PSD.
/// A numerically positive minimum eigenvalue is clamped to zero.
CouplingRatioMatrix gauge_fix_psd(const CouplingRatioMatrix& matrix);

/// Random problem matrix: off-diagonal blocks i < j drawn i.i.d. uniform on
/// [-1, 1), mirrored, then scaled so max |entry| is exactly 1. Diagonal
/// blocks are zero and do not take part in the normalization. sim_time is 1.
CouplingRatioMatrix random_coupling_ratio_matrix(std::size_t n_qubits, std::uint64_t seed);

}  // namespace daqc
