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

#include "daqc/spectral.hpp"

#include "daqc/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

namespace daqc {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-14;

// Tangent of the Jacobi angle that zeroes a_pq, choosing the smaller root.
double jacobi_tangent(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  if (std::abs(theta) > 1e150) return 0.5 / theta;
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta < 0.0 ? -t : t;
}

template <typename Matrix>
double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Indices of `values` sorted descending; equal values keep index order.
std::vector<Eigen::Index> descending_order(const Eigen::VectorXd& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });
  return order;
}

void check_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || rows == 0) {
    throw InvalidArgument("eigendecomposition needs a non-empty square matrix, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

BlockVector EigenDecomposition::eigenvector_blocks(std::size_t k) const {
  return BlockVector::from_flat(eigenvector(k));
}

EigenDecomposition eigendecompose_symmetric(const Eigen::MatrixXd& matrix) {
  check_square(matrix.rows(), matrix.cols());
  const Eigen::Index n = matrix.rows();
  if (!matrix.allFinite()) throw NotSymmetric("matrix has non-finite entries");

  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw NotSymmetric("matrix is not symmetric within 1e-10 relative tolerance");
  }

  // Work on the exactly symmetrized copy so both triangles agree.
  Eigen::MatrixXd a = 0.5 * (matrix + matrix.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double frobenius = a.norm();

  bool converged = frobenius == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) < kConvergence * frobenius) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Late sweeps: a pivot below the rounding of both diagonals is noise.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double t = jacobi_tangent(app, aqq, apq);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) >= kConvergence * frobenius) {
    throw NoConvergence("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                        " sweeps");
  }

  const Eigen::VectorXd diagonal = a.diagonal();
  const auto order = descending_order(diagonal);

  EigenDecomposition out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues.push_back(diagonal(src));
    Eigen::VectorXd col = v.col(src);
    col /= col.norm();
    Eigen::Index pivot = 0;
    for (Eigen::Index r = 1; r < n; ++r) {
      if (std::abs(col(r)) > std::abs(col(pivot))) pivot = r;
    }
    if (col(pivot) < 0.0) col = -col;
    out.eigenvectors.col(k) = col;
  }
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& matrix) {
  return eigendecompose_symmetric(matrix).eigenvalues.back();
}

HermitianEigenDecomposition eigendecompose_hermitian(const Eigen::MatrixXcd& matrix) {
  using cplx = std::complex<double>;
  check_square(matrix.rows(), matrix.cols());
  const Eigen::Index n = matrix.rows();
  if (!matrix.allFinite()) throw NotSymmetric("matrix has non-finite entries");

  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw NotSymmetric("matrix is not Hermitian within 1e-10 relative tolerance");
  }

  Eigen::MatrixXcd a = 0.5 * (matrix + matrix.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double frobenius = a.norm();

  bool converged = frobenius == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) < kConvergence * frobenius) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r_pq = std::abs(apq);
        if (r_pq == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double g = 100.0 * r_pq;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase D = diag(1, conj(apq)/|apq|) on column q makes the pivot real.
        const cplx phase = std::conj(apq) / r_pq;
        const double t = jacobi_tangent(app, aqq, r_pq);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const cplx arp = a(r, p);
          const cplx arq = a(r, q) * phase;
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = app - t * r_pq;
        a(q, q) = aqq + t * r_pq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q) * phase;
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) >= kConvergence * frobenius) {
    throw NoConvergence("Hermitian Jacobi eigensolver did not converge in " +
                        std::to_string(kMaxSweeps) + " sweeps");
  }

  const Eigen::VectorXd diagonal = a.diagonal().real();
  const auto order = descending_order(diagonal);
  HermitianEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = diagonal(src);
    out.eigenvectors.col(k) = v.col(src).normalized();
  }
  return out;
}

}  // namespace daqc
