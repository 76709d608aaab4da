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

#include "daqc/verifier.hpp"

#include "daqc/error.hpp"
#include "daqc/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <unordered_map>

namespace daqc {
namespace {

using cplx = std::complex<double>;
using namespace std::complex_literals;

void guard_dense(std::size_t n_qubits, std::size_t limit) {
  if (n_qubits > limit) {
    throw TooLarge(std::to_string(n_qubits) + " qubits exceeds the dense verification limit of " +
                   std::to_string(limit));
  }
}

std::size_t bit_mask(std::size_t n_qubits, std::size_t qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Applies sigma^axis on one qubit to basis state `state`; returns the image
// state and multiplies `phase` accordingly.
std::size_t apply_pauli(std::size_t state, std::size_t mask, PauliAxis axis, cplx& phase) {
  const bool bit = (state & mask) != 0;
  switch (axis) {
    case PauliAxis::x:
      return state ^ mask;
    case PauliAxis::y:
      phase *= bit ? -1i : 1i;
      return state ^ mask;
    case PauliAxis::z:
      if (bit) phase = -phase;
      return state;
  }
  return state;
}

// Left-multiplies `m` by the single-qubit gate `g` acting on `qubit`.
void apply_gate(Eigen::MatrixXcd& m, const Eigen::Matrix2cd& g, std::size_t n_qubits,
                std::size_t qubit) {
  const std::size_t mask = bit_mask(n_qubits, qubit);
  const auto dim = static_cast<std::size_t>(m.rows());
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    cplx* data = m.col(col).data();
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const std::size_t r1 = r0 | mask;
      const cplx a = data[r0];
      const cplx b = data[r1];
      data[r0] = g(0, 0) * a + g(0, 1) * b;
      data[r1] = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

// Diagonal of H_S for a ZZ source: E(x) = sum J_ij z_i z_j with z = 1 - 2 bit.
Eigen::VectorXd zz_energies(const TwoBodyHamiltonian& source) {
  const std::size_t n = source.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXd energies = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [key, coupling] : source.terms()) {
    const std::size_t mi = bit_mask(n, key.i);
    const std::size_t mj = bit_mask(n, key.j);
    for (std::size_t x = 0; x < dim; ++x) {
      const bool parity = ((x & mi) != 0) != ((x & mj) != 0);
      energies(static_cast<Eigen::Index>(x)) += parity ? -coupling : coupling;
    }
  }
  return energies;
}

Eigen::MatrixXcd trotter_step(const Schedule& schedule, const Eigen::VectorXd& energies,
                              std::size_t trotter_steps) {
  const std::size_t n = schedule.n_qubits();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  if (schedule.blocks.empty()) return m;

  // U_q D_q U_q^dag for consecutive blocks share the layer U_q^dag U_{q-1}.
  std::vector<Eigen::Matrix2cd> previous(n, Eigen::Matrix2cd::Identity());
  for (const auto& block : schedule.blocks) {
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::Matrix2cd r = rotation_matrix(block.rotations[i]);
      apply_gate(m, r.adjoint() * previous[i], n, i);
      previous[i] = r;
    }
    const double tau = block.analog_time / static_cast<double>(trotter_steps);
    for (Eigen::Index x = 0; x < dim; ++x) m.row(x) *= std::exp(-1i * tau * energies(x));
  }
  for (std::size_t i = 0; i < n; ++i) apply_gate(m, previous[i], n, i);
  return m;
}

Eigen::MatrixXcd matrix_power(Eigen::MatrixXcd base, std::size_t exponent) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

cplx optimal_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DimensionMismatch("operators have different dimensions");
  }
  const cplx overlap = (u.adjoint() * v).trace();
  const double magnitude = std::abs(overlap);
  return magnitude == 0.0 ? cplx(1.0) : std::conj(overlap) / magnitude;
}

// Pauli string on up to 32 qubits, 2 bits per qubit (0 = I, 1 = x, 2 = y, 3 = z).
using PauliKey = std::uint64_t;

struct PauliTerm {
  PauliKey key;
  double coeff;
};

int pauli_code(PauliAxis axis) { return static_cast<int>(index(axis)) + 1; }

// sigma_a sigma_b = phase * sigma_c for codes in {1,2,3}.
std::pair<int, cplx> single_product(int a, int b) {
  if (a == 0) return {b, 1.0};
  if (b == 0) return {a, 1.0};
  if (a == b) return {0, 1.0};
  const int c = 6 - a - b;
  const bool cyclic = (a % 3) + 1 == b;  // x->y, y->z, z->x
  return {c, cyclic ? cplx(0, 1) : cplx(0, -1)};
}

std::vector<PauliTerm> pauli_terms(const TwoBodyHamiltonian& h) {
  std::vector<PauliTerm> out;
  out.reserve(h.terms().size());
  for (const auto& [key, coeff] : h.terms()) {
    const PauliKey k = (PauliKey(pauli_code(key.mu)) << (2 * key.i)) |
                       (PauliKey(pauli_code(key.nu)) << (2 * key.j));
    out.push_back({k, coeff});
  }
  return out;
}

bool terms_commute(const std::vector<PauliTerm>& a, const std::vector<PauliTerm>& b,
                   std::size_t n_qubits, double tolerance) {
  std::unordered_map<PauliKey, cplx> commutator;
  for (const auto& p : a) {
    for (const auto& q : b) {
      int anticommuting_sites = 0;
      PauliKey product = 0;
      cplx phase = 1.0;
      for (std::size_t site = 0; site < n_qubits; ++site) {
        const int pa = static_cast<int>((p.key >> (2 * site)) & 3U);
        const int qb = static_cast<int>((q.key >> (2 * site)) & 3U);
        if (pa == 0 && qb == 0) continue;
        if (pa != 0 && qb != 0 && pa != qb) ++anticommuting_sites;
        const auto [code, factor] = single_product(pa, qb);
        product |= PauliKey(code) << (2 * site);
        phase *= factor;
      }
      if (anticommuting_sites % 2 == 1) commutator[product] += 2.0 * p.coeff * q.coeff * phase;
    }
  }
  return std::all_of(commutator.begin(), commutator.end(),
                     [&](const auto& entry) { return std::abs(entry.second) <= tolerance; });
}

}  // namespace

Eigen::MatrixXcd hamiltonian_matrix(const TwoBodyHamiltonian& hamiltonian) {
  const std::size_t n = hamiltonian.n_qubits();
  guard_dense(n, kMaxDenseQubits);
  const std::size_t dim = std::size_t{1} << n;
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [key, coeff] : hamiltonian.terms()) {
    const std::size_t mi = bit_mask(n, key.i);
    const std::size_t mj = bit_mask(n, key.j);
    for (std::size_t x = 0; x < dim; ++x) {
      cplx phase = coeff;
      std::size_t y = apply_pauli(x, mj, key.nu, phase);
      y = apply_pauli(y, mi, key.mu, phase);
      h(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += phase;
    }
  }
  return h;
}

Eigen::MatrixXcd exact_unitary(const TwoBodyHamiltonian& hamiltonian, double time) {
  const Eigen::MatrixXcd h = hamiltonian_matrix(hamiltonian);
  const Eigen::Index d = h.rows();
  if (time == 0.0 || hamiltonian.empty()) return Eigen::MatrixXcd::Identity(d, d);
  const HermitianEigenDecomposition eig = eigendecompose_hermitian(h);
  Eigen::VectorXcd phases(d);
  for (Eigen::Index k = 0; k < d; ++k) phases(k) = std::exp(-1i * time * eig.eigenvalues(k));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

Eigen::MatrixXcd schedule_unitary(const Schedule& schedule, std::size_t trotter_steps) {
  guard_dense(schedule.n_qubits(), kMaxDenseQubits);
  if (trotter_steps == 0) throw InvalidArgument("trotter_steps must be positive");
  if (!schedule.source.is_zz_only()) throw NonZZSource();
  for (const auto& block : schedule.blocks) {
    if (block.rotations.size() != schedule.n_qubits()) {
      throw SizeMismatch("schedule block has the wrong number of rotations");
    }
  }
  const Eigen::VectorXd energies = zz_energies(schedule.source);
  return matrix_power(trotter_step(schedule, energies, trotter_steps), trotter_steps);
}

double aligned_frobenius_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const cplx phase = optimal_phase(u, v);
  return (u - phase * v).norm();
}

double phase_invariant_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  const double frobenius = aligned_frobenius_distance(u, v);
  const double dim = static_cast<double>(u.rows());
  return std::min(1.0, frobenius / std::sqrt(2.0 * dim));
}

bool effective_hamiltonians_commute(const Schedule& schedule, double tolerance) {
  const std::size_t n = schedule.n_qubits();
  if (n > 32) throw TooLarge("commutation check supports at most 32 qubits");
  double max_coupling = 0.0;
  for (const auto& [key, coeff] : schedule.source.terms()) {
    max_coupling = std::max(max_coupling, std::abs(coeff));
  }
  const double scaled_tol = tolerance * std::max(1.0, max_coupling * max_coupling);

  std::vector<std::vector<PauliTerm>> blocks;
  blocks.reserve(schedule.blocks.size());
  for (const auto& block : schedule.blocks) {
    blocks.push_back(pauli_terms(block_effective_hamiltonian(schedule.source, block)));
  }
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      if (!terms_commute(blocks[a], blocks[b], n, scaled_tol)) return false;
    }
  }
  return true;
}

double TrotterReport::min_distance() const {
  double best = 1.0;
  for (const auto& point : points) best = std::min(best, point.distance);
  return best;
}

TrotterReport evaluate_schedule(const Schedule& schedule, const TwoBodyHamiltonian& problem,
                                const std::vector<std::size_t>& steps) {
  if (problem.n_qubits() != schedule.n_qubits()) {
    throw SizeMismatch("problem and schedule disagree on the qubit count");
  }
  guard_dense(schedule.n_qubits(), kMaxVerifyQubits);
  if (steps.empty()) throw InvalidArgument("the Trotter step list is empty");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] == 0 || (k > 0 && steps[k] <= steps[k - 1])) {
      throw InvalidArgument("Trotter steps must be positive and strictly increasing");
    }
  }

  const Eigen::MatrixXcd exact = exact_unitary(problem, schedule.sim_time);
  std::vector<std::future<TrotterPoint>> pending;
  pending.reserve(steps.size());
  for (const std::size_t n_t : steps) {
    pending.push_back(std::async(std::launch::async, [&schedule, &exact, n_t] {
      const Eigen::MatrixXcd approx = schedule_unitary(schedule, n_t);
      return TrotterPoint{n_t, phase_invariant_distance(exact, approx),
                          aligned_frobenius_distance(exact, approx)};
    }));
  }

  TrotterReport report;
  for (auto& future : pending) report.points.push_back(future.get());
  report.commuting = effective_hamiltonians_commute(schedule);

  // Least-squares slope of log(distance) against log(n_T) over the last decade.
  const double n_max = static_cast<double>(steps.back());
  std::vector<std::pair<double, double>> fit;
  for (const auto& point : report.points) {
    if (static_cast<double>(point.n_t) >= n_max / 10.0 && point.distance > 1e-8) {
      fit.emplace_back(std::log(static_cast<double>(point.n_t)), std::log(point.distance));
    }
  }
  if (fit.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : fit) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(fit.size());
    my /= static_cast<double>(fit.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : fit) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    report.decay_exponent = -sxy / sxx;
  }
  return report;
}

TrotterReport trotter_convergence(const TwoBodyHamiltonian& problem,
                                  const TwoBodyHamiltonian& source, double sim_time,
                                  const std::vector<std::size_t>& steps) {
  guard_dense(problem.n_qubits(), kMaxVerifyQubits);
  const CompileResult compiled = compile_schedule(problem, source, sim_time, 0.0);
  return evaluate_schedule(compiled.schedule, problem, steps);
}

std::string report_to_json(const TrotterReport& report) {
  nlohmann::ordered_json doc;
  doc["distances"] = nlohmann::ordered_json::array();
  for (const auto& point : report.points) {
    doc["distances"].push_back({{"n_t", point.n_t}, {"distance", point.distance}});
  }
  doc["decay_exponent"] =
      report.decay_exponent ? nlohmann::ordered_json(*report.decay_exponent) : nullptr;
  doc["commuting"] = report.commuting;
  return doc.dump(2) + "\n";
}

}  // namespace daqc
