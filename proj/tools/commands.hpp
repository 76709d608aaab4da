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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace daqc::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNumericalError = 2,
  kNotConverged = 3,
};

struct CompileOptions {
  std::string problem_path;
  std::string source_path;
  double sim_time = 1.0;
  double threshold = 0.0;
  std::string out_path;
};

struct VerifyOptions {
  std::string schedule_path;
  std::string problem_path;
  std::vector<std::size_t> steps{1, 2, 4, 8, 16};
  bool verbose = false;
};

struct ExperimentOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 50;
  std::size_t n_step = 4;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  std::string out_path;
};

int cmd_compile(const CompileOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace daqc::cli
