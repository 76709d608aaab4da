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
#include "daqc/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <string>

#include "test_util.hpp"

using namespace daqc;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_hamiltonian(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_hamiltonian") {
  const auto h = parse_hamiltonian(R"({"n_qubits": 3, "terms": [
      {"i": 0, "j": 1, "pauli": "xy", "coeff": 0.25},
      {"i": 1, "j": 2, "pauli": "zz", "coeff": -1}]})");
  CHECK(h.n_qubits() == 3);
  CHECK(h.terms().size() == 2);
  CHECK(h.coupling(0, 1, PauliAxis::x, PauliAxis::y) == 0.25);
  CHECK(h.coupling(1, 2, PauliAxis::z, PauliAxis::z) == -1.0);

  CHECK(parse_hamiltonian(R"({"n_qubits": 2, "terms": []})").empty());
}

TEST_CASE("parse_hamiltonian errors") {
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 1, "j": 0, "pauli": "zz", "coeff": 1}]})")
            .find("term 0") != std::string::npos);
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 0, "j": 0, "pauli": "zz", "coeff": 1}]})") != "");
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [
            {"i": 0, "j": 1, "pauli": "zz", "coeff": 1},
            {"i": 0, "j": 1, "pauli": "zz", "coeff": 2}]})")
            .find("term 1") != std::string::npos);
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 0, "j": 1, "pauli": "zw", "coeff": 1}]})")
            .find("zw") != std::string::npos);
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 0, "j": 1, "pauli": "xyz", "coeff": 1}]})") != "");
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 0, "j": 2, "pauli": "zz", "coeff": 1}]})") != "");
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": 0, "j": 1, "pauli": "zz"}]})")
            .find("coeff") != std::string::npos);
  CHECK(parse_error_message(R"({"n_qubits": 2, "terms": [{"i": -1, "j": 1, "pauli": "zz", "coeff": 1}]})") != "");
  CHECK(parse_error_message(R"({"n_qubits": 0, "terms": []})") != "");
  CHECK(parse_error_message(R"({"terms": []})").find("n_qubits") != std::string::npos);
  CHECK(parse_error_message("{not json").find("malformed") != std::string::npos);
  CHECK(parse_error_message("[1, 2]") != "");
}

TEST_CASE("hamiltonian round trip") {
  UniformSampler rng(4);
  const auto h = testing::random_dense_problem(4, rng);
  const std::string text = serialize_hamiltonian(h);
  CHECK(parse_hamiltonian(text) == h);
  CHECK(serialize_hamiltonian(parse_hamiltonian(text)) == text);
  CHECK(serialize_hamiltonian(TwoBodyHamiltonian(2)) == "{\"n_qubits\": 2, \"terms\": []}\n");
}

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS_AS(format_double(std::nan("")), InvalidArgument);
}

TEST_CASE("schedule round trip is byte identical") {
  UniformSampler rng(17);
  for (std::size_t n : {2, 3, 5}) {
    const auto problem = testing::random_dense_problem(n, rng);
    const auto source = testing::random_zz(n, rng, 0.5, 1.5);
    const Schedule schedule = compile_schedule(problem, source, 0.7, 1e-3).schedule;
    const std::string text = serialize_schedule(schedule);
    const Schedule parsed = parse_schedule(text);
    CHECK(parsed == schedule);
    CHECK(serialize_schedule(parsed) == text);
  }
  Schedule empty(testing::uniform_zz(2, 1.0), 2.0);
  empty.discarded_weight = 3.5;
  const std::string text = serialize_schedule(empty);
  CHECK(parse_schedule(text) == empty);
  CHECK(serialize_schedule(parse_schedule(text)) == text);
}

TEST_CASE("parse_schedule errors carry block context") {
  const std::string head = R"({"n_qubits": 2, "sim_time": 1, "source": {"n_qubits": 2, "terms": [{"i": 0, "j": 1, "pauli": "zz", "coeff": 1}]}, "blocks": [)";
  const std::string tail = R"(], "metadata": {"discarded_weight": 0, "generator": "x"}})";
  const std::string good = R"({"t": 0.5, "rotations": [{"theta": 0, "axis": [1, 0, 0]}, {"theta": 1, "axis": [0, 1, 0]}]})";
  CHECK(parse_schedule(head + good + tail).blocks.size() == 1);

  auto message = [&](const std::string& block) -> std::string {
    try {
      parse_schedule(head + good + ", " + block + tail);
    } catch (const ParseError& e) {
      return e.what();
    }
    return {};
  };
  CHECK(message(R"({"t": 0.5, "rotations": [{"theta": 0, "axis": [1, 0, 0]}]})").find("block 1") != std::string::npos);
  CHECK(message(R"({"t": -1, "rotations": [{"theta": 0, "axis": [1, 0, 0]}, {"theta": 0, "axis": [1, 0, 0]}]})")
            .find("block 1") != std::string::npos);
  CHECK(message(R"({"t": 1, "rotations": [{"theta": 0, "axis": [1, 1, 0]}, {"theta": 0, "axis": [1, 0, 0]}]})")
            .find("unit") != std::string::npos);
  CHECK_THROWS_AS(parse_schedule(R"({"n_qubits": 2})"), ParseError);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "daqc_json_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "h.json";
  const auto h = testing::uniform_zz(3, 0.5);
  write_text_file(path, serialize_hamiltonian(h));
  CHECK(load_hamiltonian(path) == h);

  write_text_file(path, "{oops");
  try {
    load_hamiltonian(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("h.json") != std::string::npos);
  }
  CHECK_THROWS_AS(read_text_file(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}
