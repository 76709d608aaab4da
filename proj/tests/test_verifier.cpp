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
#include "daqc/error.hpp"
#include "daqc/verifier.hpp"

#include <doctest.h>
#include <json.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>

#include "test_util.hpp"

using namespace daqc;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Oracle: Pade-based matrix exponential from Eigen's unsupported module.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& h, double time) {
  const Eigen::MatrixXcd generator = cplx(0, -time) * h;
  return generator.exp();
}

// Oracle for one Trotter step: explicit product of dense block unitaries.
Eigen::MatrixXcd dense_schedule_step(const Schedule& schedule, std::size_t trotter_steps) {
  const Eigen::MatrixXcd hs = testing::kron_hamiltonian(schedule.source);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(hs.rows(), hs.cols());
  for (const auto& block : schedule.blocks) {
    std::vector<Eigen::Matrix2cd> gates;
    for (const auto& r : block.rotations) gates.push_back(rotation_matrix(r));
    const Eigen::MatrixXcd u = testing::kron_gates(gates);
    out = u * expm(hs, block.analog_time / static_cast<double>(trotter_steps)) * u.adjoint() * out;
  }
  return out;
}

Eigen::MatrixXcd random_unitary(Eigen::Index dim, UniformSampler& rng) {
  Eigen::MatrixXcd h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = rng.uniform(-1, 1);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      h(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return expm(h, 1.0);
}

Schedule random_schedule(std::size_t n, std::size_t blocks, UniformSampler& rng) {
  Schedule schedule(testing::random_zz(n, rng, -1.0, 1.0), 1.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    DigitalAnalogBlock block;
    block.analog_time = rng.uniform(0.05, 0.5);
    for (std::size_t q = 0; q < n; ++q) block.rotations.push_back({rng.uniform(0, kPi), testing::random_unit(rng)});
    schedule.blocks.push_back(block);
  }
  return schedule;
}

}  // namespace

TEST_CASE("hamiltonian_matrix") {
  SUBCASE("zz on two qubits") {
    const Eigen::MatrixXcd h = hamiltonian_matrix(testing::uniform_zz(2, 1.0));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << 1, -1, -1, 1;
    CHECK(h == expected);
  }
  SUBCASE("xy on two qubits") {
    TwoBodyHamiltonian xy(2);
    xy.add(0, 1, PauliAxis::x, PauliAxis::y, 1.0);
    const Eigen::MatrixXcd h = hamiltonian_matrix(xy);
    CHECK(h(0, 3) == cplx(0, -1));
    CHECK(h(1, 2) == cplx(0, 1));
    CHECK(h(2, 1) == cplx(0, -1));
    CHECK(h(3, 0) == cplx(0, 1));
    CHECK(h.cwiseAbs().sum() == 4.0);
  }
  SUBCASE("matches Kronecker construction") {
    UniformSampler rng(1);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto problem = testing::random_dense_problem(n, rng);
      const Eigen::MatrixXcd h = hamiltonian_matrix(problem);
      CHECK((h - testing::kron_hamiltonian(problem)).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("dense limit") { CHECK_THROWS_AS(hamiltonian_matrix(TwoBodyHamiltonian(13)), TooLarge); }
}

TEST_CASE("exact_unitary") {
  SUBCASE("zz at pi/2") {
    const Eigen::MatrixXcd u = exact_unitary(testing::uniform_zz(2, 1.0), kPi / 2);
    const cplx expected[] = {cplx(0, -1), cplx(0, 1), cplx(0, 1), cplx(0, -1)};
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(std::abs(u(k, k) - expected[k]) <= 1e-14);
    CHECK(u.cwiseAbs().sum() == doctest::Approx(4.0).epsilon(1e-14));
  }
  SUBCASE("trivial cases give identity") {
    CHECK(exact_unitary(TwoBodyHamiltonian(3), 1.0) == Eigen::MatrixXcd::Identity(8, 8));
    CHECK(exact_unitary(testing::uniform_zz(2, 1.0), 0.0) == Eigen::MatrixXcd::Identity(4, 4));
  }
  SUBCASE("unitary and equal to the Pade oracle") {
    UniformSampler rng(2);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto problem = testing::random_dense_problem(n, rng);
      const double t = rng.uniform(0.1, 2.0);
      const Eigen::MatrixXcd u = exact_unitary(problem, t);
      const auto dim = u.rows();
      CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((u - expm(testing::kron_hamiltonian(problem), t)).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("schedule_unitary") {
  SUBCASE("empty schedule is identity") {
    const Schedule empty(testing::uniform_zz(3, 1.0), 1.0);
    CHECK(schedule_unitary(empty, 4) == Eigen::MatrixXcd::Identity(8, 8));
  }
  SUBCASE("identity rotations reproduce the source evolution") {
    Schedule schedule(testing::uniform_zz(2, 0.7), 1.0);
    schedule.blocks.push_back({0.3, {SQGParams{}, SQGParams{}}});
    const Eigen::MatrixXcd expected = expm(testing::kron_hamiltonian(schedule.source), 0.3);
    CHECK((schedule_unitary(schedule, 1) - expected).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((schedule_unitary(schedule, 5) - expected).cwiseAbs().maxCoeff() <= 1e-13);
  }
  SUBCASE("rotated block evolves under the rotated coupling") {
    Schedule schedule(testing::uniform_zz(2, 1.0), 1.0);
    const SQGParams to_x{kPi / 2, Vec3::UnitY()};
    schedule.blocks.push_back({0.4, {to_x, to_x}});
    TwoBodyHamiltonian xx(2);
    xx.add(0, 1, PauliAxis::x, PauliAxis::x, 1.0);
    CHECK((schedule_unitary(schedule, 1) - expm(testing::kron_hamiltonian(xx), 0.4)).cwiseAbs().maxCoeff() <=
          1e-13);
  }
  SUBCASE("matches dense block products") {
    UniformSampler rng(3);
    for (std::size_t n : {2, 3, 4}) {
      const Schedule schedule = random_schedule(n, 6, rng);
      for (std::size_t n_t : {1, 3, 8}) {
        Eigen::MatrixXcd step = dense_schedule_step(schedule, n_t);
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(step.rows(), step.cols());
        for (std::size_t k = 0; k < n_t; ++k) expected = step * expected;
        CHECK((schedule_unitary(schedule, n_t) - expected).cwiseAbs().maxCoeff() <= 1e-11);
      }
    }
  }
  SUBCASE("errors") {
    Schedule schedule(testing::uniform_zz(2, 1.0), 1.0);
    CHECK_THROWS_AS(schedule_unitary(schedule, 0), InvalidArgument);
    schedule.blocks.push_back({0.1, {SQGParams{}}});
    CHECK_THROWS_AS(schedule_unitary(schedule, 1), SizeMismatch);
    TwoBodyHamiltonian xx(2);
    xx.add(0, 1, PauliAxis::x, PauliAxis::x, 1.0);
    CHECK_THROWS_AS(schedule_unitary(Schedule(xx, 1.0), 1), NonZZSource);
  }
}

TEST_CASE("phase_invariant_distance") {
  SUBCASE("identity against a single sign flip") {
    Eigen::MatrixXcd flip = Eigen::MatrixXcd::Identity(4, 4);
    flip(3, 3) = -1.0;
    CHECK(phase_invariant_distance(Eigen::MatrixXcd::Identity(4, 4), flip) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  }
  SUBCASE("global phases are invisible") {
    UniformSampler rng(5);
    const Eigen::MatrixXcd u = random_unitary(8, rng);
    const Eigen::MatrixXcd v = random_unitary(8, rng);
    const double base = phase_invariant_distance(u, v);
    for (int k = 0; k < 100; ++k) {
      const cplx phase = std::polar(1.0, rng.uniform(0, 2 * kPi));
      CHECK(phase_invariant_distance(u, phase * u) <= 1e-14);
      CHECK(std::abs(phase_invariant_distance(u, phase * v) - base) <= 1e-14);
    }
  }
  SUBCASE("agrees with the trace formula") {
    UniformSampler rng(6);
    for (int k = 0; k < 50; ++k) {
      const Eigen::MatrixXcd u = random_unitary(4, rng);
      const Eigen::MatrixXcd v = random_unitary(4, rng);
      const double trace_form = std::sqrt(std::max(0.0, 1.0 - std::abs((u.adjoint() * v).trace()) / 4.0));
      CHECK(std::abs(phase_invariant_distance(u, v) - trace_form) <= 1e-12);
      CHECK(std::abs(phase_invariant_distance(u, v) - phase_invariant_distance(v, u)) <= 1e-14);
    }
  }
  SUBCASE("resolves tiny differences") {
    const Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(4, 4);
    Eigen::MatrixXcd v = u;
    v(0, 0) = std::polar(1.0, 1e-12);
    CHECK(phase_invariant_distance(u, v) > 1e-14);
    CHECK(phase_invariant_distance(u, v) < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(phase_invariant_distance(Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(4, 4)),
                    DimensionMismatch);
  }
}

TEST_CASE("two-qubit compilations are Trotter exact") {
  const std::vector<std::size_t> steps{1, 2, 4, 8};
  SUBCASE("zz problem on zz source") {
    TwoBodyHamiltonian problem(2);
    problem.add(0, 1, PauliAxis::z, PauliAxis::z, 0.5);
    // Degenerate spectrum: the blocks do not commute, yet the product is still exact.
    const auto report = trotter_convergence(problem, testing::uniform_zz(2, 1.0), 1.0, steps);
    CHECK_FALSE(report.commuting);
    for (const auto& point : report.points) CHECK(point.distance <= 1e-10);
    CHECK_FALSE(report.decay_exponent.has_value());
  }
  SUBCASE("generic problems") {
    UniformSampler rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const auto problem = testing::random_dense_problem(2, rng);
      const auto report = trotter_convergence(problem, testing::random_zz(2, rng, 0.5, 1.5), 0.5, steps);
      CHECK(report.commuting);
      for (const auto& point : report.points) CHECK(point.distance <= 1e-10);
    }
  }
}

TEST_CASE("three-qubit compilations converge at first order") {
  UniformSampler rng(8);
  const std::vector<std::size_t> steps{4, 8, 16, 32};
  for (int trial = 0; trial < 5; ++trial) {
    const auto problem = testing::random_dense_problem(3, rng);
    const auto report = trotter_convergence(problem, testing::uniform_zz(3, 1.0), 0.5, steps);
    CHECK_FALSE(report.commuting);
    for (std::size_t k = 1; k < report.points.size(); ++k) {
      const double ratio = report.points[k - 1].distance / report.points[k].distance;
      CHECK(ratio >= 1.5);
      CHECK(ratio <= 2.5);
    }
    REQUIRE(report.decay_exponent.has_value());
    CHECK(*report.decay_exponent >= 0.8);
    CHECK(*report.decay_exponent <= 1.2);
  }
}

TEST_CASE("commuting flag agrees with dense commutators") {
  UniformSampler rng(9);
  auto dense_commute = [](const Schedule& schedule) {
    std::vector<Eigen::MatrixXcd> hs;
    for (const auto& block : schedule.blocks) {
      hs.push_back(testing::kron_hamiltonian(block_effective_hamiltonian(schedule.source, block)));
    }
    for (std::size_t a = 0; a < hs.size(); ++a) {
      for (std::size_t b = a + 1; b < hs.size(); ++b) {
        if ((hs[a] * hs[b] - hs[b] * hs[a]).cwiseAbs().maxCoeff() > 1e-9) return false;
      }
    }
    return true;
  };
  int agreed = 0;
  for (std::size_t n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Schedule schedule = random_schedule(n, 4, rng);
      CHECK(effective_hamiltonians_commute(schedule) == dense_commute(schedule));
      ++agreed;
    }
    const auto compiled = compile_schedule(testing::random_dense_problem(n, rng), testing::uniform_zz(n, 1.0), 1.0);
    CHECK(effective_hamiltonians_commute(compiled.schedule) == dense_commute(compiled.schedule));
    CHECK(effective_hamiltonians_commute(compiled.schedule) == (n == 2));
  }
  CHECK(agreed == 20);

  // Blocks whose rotations differ only by a z rotation share the zz coupling.
  Schedule same(testing::uniform_zz(3, 1.0), 1.0);
  same.blocks.push_back({0.2, {SQGParams{}, SQGParams{}, SQGParams{}}});
  same.blocks.push_back({0.3, {SQGParams{0.7, Vec3::UnitZ()}, SQGParams{}, SQGParams{}}});
  CHECK(effective_hamiltonians_commute(same));
}

TEST_CASE("evaluate_schedule validation and report") {
  const auto problem = testing::uniform_zz(2, 0.5);
  const auto compiled = compile_schedule(problem, testing::uniform_zz(2, 1.0), 1.0);
  CHECK_THROWS_AS(evaluate_schedule(compiled.schedule, problem, {}), InvalidArgument);
  CHECK_THROWS_AS(evaluate_schedule(compiled.schedule, problem, {2, 2}), InvalidArgument);
  CHECK_THROWS_AS(evaluate_schedule(compiled.schedule, problem, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(evaluate_schedule(compiled.schedule, testing::uniform_zz(3, 0.5), {1}), SizeMismatch);

  const Schedule big(testing::uniform_zz(9, 1.0), 1.0);
  CHECK_THROWS_AS(evaluate_schedule(big, testing::uniform_zz(9, 1.0), {1}), TooLarge);

  const auto report = evaluate_schedule(compiled.schedule, problem, {1, 2});
  const auto doc = nlohmann::json::parse(report_to_json(report));
  REQUIRE(doc["distances"].size() == 2);
  CHECK(doc["distances"][0]["n_t"] == 1);
  CHECK(doc["distances"][1]["n_t"] == 2);
  CHECK(doc["distances"][0]["distance"].get<double>() <= 1e-10);
  CHECK(doc["decay_exponent"].is_null());
  CHECK(doc["commuting"] == false);
}
