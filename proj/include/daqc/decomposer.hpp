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

#include "daqc/coupling_matrix.hpp"
#include "daqc/pauli.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <utility>
#include <vector>

namespace daqc {

enum class TermSign { plus, minus };

/// One positively weighted rank-one term t * gamma gamma^T of the
/// decomposition. Every 3-block of `gamma` is a unit vector.
struct GammaTerm {
  double time;
  BlockVector gamma;
  std::size_t eigen_index;  // k, position in the descending spectrum
  std::size_t step;         // l, zero-based in [0, 2N)
  TermSign sign;
};

struct Decomposition {
  std::size_t n_qubits = 0;
  std::vector<GammaTerm> terms;
  /// Sum of eigenvalues that were dropped (below threshold or numerically zero).
  double discarded_weight = 0.0;
};

/// Two vectors of norm `target_norm`, orthogonal to each other and to `v`.
///
/// For v = 0 returns target_norm * (x, y). Otherwise eta is the standard
/// basis vector least aligned with v (lowest index on ties) with v projected
/// out, and xi is the normalized v x eta.
std::pair<Vec3, Vec3> orthonormal_pair(const Vec3& v, double target_norm);

/// Splits lambda v v^T (off-diagonal blocks) into 4N terms of equal time
/// lambda max_i |v_i|^2 / (4N).
///
/// Step l in [0, 2N) uses eps_i = cos(theta) eta_i + sin(theta) xi_i with
/// theta = pi i l / N and |eps_i|^2 = max_i |v_i|^2 - |v_i|^2; the pair of
/// terms is gamma_i = (v_i +- eps_i) / sqrt(|v_i|^2 + |eps_i|^2). The +- pair
/// cancels v-eps cross terms and the angle grid makes sum_l eps_i eps_j^T
/// vanish for i != j. Throws ZeroEigenvector unless |v| = 1 within 1e-10.
std::vector<GammaTerm> decompose_eigenvector(double lambda, const BlockVector& v,
                                             std::size_t eigen_index = 0);

/// Per-term analog time of one eigenpair, lambda max_i |v_i|^2 / (4N).
double eigen_term_time(double lambda, const BlockVector& v);

/// Decomposes a gauge-fixed B into a sum of block-normalized projectors.
///
/// Eigenpairs whose per-term time is not above `discard_threshold`, or whose
/// eigenvalue is numerically zero (|lambda| <= 1e-10 max(1, lambda_max)),
/// are dropped and counted in `discarded_weight`. Terms are ordered by
/// descending eigenvalue, then step, then + before -.
/// Throws NotPositiveSemidefinite if an eigenvalue is below that tolerance.
Decomposition decompose(const CouplingRatioMatrix& matrix, double discard_threshold = 0.0);

/// sum_q t_q gamma_q gamma_q^T with every 3x3 diagonal block zeroed.
Eigen::MatrixXd reconstruct_off_diagonal(const Decomposition& decomposition);

/// Total analog time sum_q t_q.
double total_analog_time(const Decomposition& decomposition);

}  // namespace daqc
