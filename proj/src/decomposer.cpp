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

#include "daqc/decomposer.hpp"

#include "daqc/error.hpp"
#include "daqc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace daqc {
namespace {

// Block norms this close to the maximum differ only by eigensolver rounding.
// Taking the square root of such a residue would turn ~1e-16 into ~1e-8.
constexpr double kEqualNormTolerance = 1e-11;

double max_block_norm2(const BlockVector& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.n_qubits(); ++i) m = std::max(m, v.block(i).squaredNorm());
  return m;
}

}  // namespace

std::pair<Vec3, Vec3> orthonormal_pair(const Vec3& v, double target_norm) {
  if (target_norm < 0.0) throw InvalidArgument("target norm must be non-negative");
  const double norm = v.norm();
  if (norm == 0.0) return {target_norm * Vec3::UnitX(), target_norm * Vec3::UnitY()};

  const Vec3 unit = v / norm;
  Eigen::Index axis = 0;
  for (Eigen::Index k = 1; k < 3; ++k) {
    if (std::abs(unit(k)) < std::abs(unit(axis))) axis = k;
  }
  Vec3 eta = Vec3::Unit(axis) - unit(axis) * unit;
  eta.normalize();
  Vec3 xi = unit.cross(eta);
  xi.normalize();
  return {target_norm * eta, target_norm * xi};
}

double eigen_term_time(double lambda, const BlockVector& v) {
  return lambda * max_block_norm2(v) / (4.0 * static_cast<double>(v.n_qubits()));
}

std::vector<GammaTerm> decompose_eigenvector(double lambda, const BlockVector& v,
                                             std::size_t eigen_index) {
  const std::size_t n = v.n_qubits();
  if (n == 0) throw InvalidArgument("eigenvector has no qubit blocks");
  if (std::abs(v.flat().norm() - 1.0) > 1e-10) {
    throw ZeroEigenvector("eigenvector norm " + std::to_string(v.flat().norm()) +
                          " deviates from 1");
  }

  const double max_norm2 = max_block_norm2(v);
  const double time = lambda * max_norm2 / (4.0 * static_cast<double>(n));

  // eps_i = cos(theta) eta_i + sin(theta) xi_i; max-norm blocks keep eps = 0.
  std::vector<Vec3> eta(n), xi(n);
  std::vector<double> norm2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 block = v.block(i);
    norm2[i] = block.squaredNorm();
    if (max_norm2 - norm2[i] <= kEqualNormTolerance * max_norm2) {
      eta[i].setZero();
      xi[i].setZero();
      continue;
    }
    std::tie(eta[i], xi[i]) = orthonormal_pair(block, std::sqrt(std::max(0.0, max_norm2 - norm2[i])));
  }

  std::vector<GammaTerm> terms;
  terms.reserve(4 * n);
  const double nd = static_cast<double>(n);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    BlockVector plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = std::numbers::pi * static_cast<double>(i) * static_cast<double>(step) / nd;
      const Vec3 eps = std::cos(theta) * eta[i] + std::sin(theta) * xi[i];
      const double denom = std::sqrt(norm2[i] + eps.squaredNorm());
      const Vec3 block = v.block(i);
      plus.set_block(i, (block + eps) / denom);
      minus.set_block(i, (block - eps) / denom);
    }
    terms.push_back({time, std::move(plus), eigen_index, step, TermSign::plus});
    terms.push_back({time, std::move(minus), eigen_index, step, TermSign::minus});
  }
  return terms;
}

Decomposition decompose(const CouplingRatioMatrix& matrix, double discard_threshold) {
  if (!(discard_threshold >= 0.0)) throw InvalidArgument("discard threshold must be non-negative");
  const EigenDecomposition eig = eigendecompose_symmetric(matrix.entries());

  Decomposition out;
  out.n_qubits = matrix.n_qubits();
  const double zero_tol = 1e-10 * std::max(1.0, eig.eigenvalues.front());
  for (std::size_t k = 0; k < eig.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -zero_tol) {
      throw NotPositiveSemidefinite("coupling-ratio matrix has eigenvalue " + std::to_string(lambda) +
                                    "; gauge-fix it first");
    }
    if (lambda <= zero_tol) {
      out.discarded_weight += std::max(0.0, lambda);
      continue;
    }
    const BlockVector v = eig.eigenvector_blocks(k);
    if (eigen_term_time(lambda, v) <= discard_threshold) {
      out.discarded_weight += lambda;
      continue;
    }
    auto terms = decompose_eigenvector(lambda, v, k);
    std::move(terms.begin(), terms.end(), std::back_inserter(out.terms));
  }
  return out;
}

Eigen::MatrixXd reconstruct_off_diagonal(const Decomposition& decomposition) {
  const auto n = static_cast<Eigen::Index>(3 * decomposition.n_qubits);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  // Columns sqrt(t_q) gamma_q, accumulated in chunks through a rank-k update.
  constexpr std::size_t kChunk = 512;
  const auto& terms = decomposition.terms;
  for (std::size_t begin = 0; begin < terms.size(); begin += kChunk) {
    const std::size_t end = std::min(terms.size(), begin + kChunk);
    Eigen::MatrixXd scaled(n, static_cast<Eigen::Index>(end - begin));
    for (std::size_t q = begin; q < end; ++q) {
      scaled.col(static_cast<Eigen::Index>(q - begin)) = std::sqrt(terms[q].time) * terms[q].gamma.flat();
    }
    out.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
  }
  Eigen::MatrixXd full = out.selfadjointView<Eigen::Lower>();
  for (Eigen::Index q = 0; q < n / 3; ++q) full.block<3, 3>(3 * q, 3 * q).setZero();
  return full;
}

double total_analog_time(const Decomposition& decomposition) {
  double total = 0.0;
  for (const GammaTerm& term : decomposition.terms) total += term.time;
  return total;
}

}  // namespace daqc
