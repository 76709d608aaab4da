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

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace daqc {

/// Eigenpairs of a real symmetric matrix, eigenvalues sorted descending.
///
/// Column k of `eigenvectors` pairs with `eigenvalues[k]`. Each column is
/// normalized and its largest-magnitude entry (lowest index on ties) is
/// positive.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd eigenvectors;

  std::size_t size() const { return eigenvalues.size(); }
  Eigen::VectorXd eigenvector(std::size_t k) const {
    return eigenvectors.col(static_cast<Eigen::Index>(k));
  }
  /// Column k viewed as qubit blocks; the dimension must be a multiple of 3.
  BlockVector eigenvector_blocks(std::size_t k) const;
};

struct HermitianEigenDecomposition {
  Eigen::VectorXd eigenvalues;  // descending
  Eigen::MatrixXcd eigenvectors;
};

/// Cyclic Jacobi eigensolver.
///
/// Sweeps visit (p, q) pairs in row-major order and stop once the
/// off-diagonal Frobenius mass falls below 1e-14 ||A||_F. Throws
/// NotSymmetric if |a_ij - a_ji| > 1e-10 max(1, max|a|) and NoConvergence
/// after 100 sweeps. Output is bit-identical across runs.
EigenDecomposition eigendecompose_symmetric(const Eigen::MatrixXd& matrix);

double min_eigenvalue(const Eigen::MatrixXd& matrix);

/// Complex Hermitian variant of the same sweep: each pivot is first made real
/// by a diagonal phase, then annihilated by a real rotation.
HermitianEigenDecomposition eigendecompose_hermitian(const Eigen::MatrixXcd& matrix);

}  // namespace daqc
