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
#include <filesystem>
#include <functional>
#include <vector>

namespace daqc {

/// Outcome of compiling one random coupling-ratio matrix.
struct SampleResult {
  double analog_time;  // t_A
  double bound;        // 3N |lambda_min|
  std::size_t blocks;
};

/// Aggregates over the samples of one system size.
struct ScalingRow {
  std::size_t n_qubits = 0;
  std::size_t samples = 0;
  double mean_ta = 0.0;
  double min_ta = 0.0;
  double max_ta = 0.0;
  double mean_bound = 0.0;
  double mean_blocks = 0.0;
  /// max over samples of (t_A - 3N|lambda_min|); <= 1e-9 when the bound holds.
  double max_bound_excess = 0.0;
  std::size_t max_blocks = 0;
};

struct ScalingConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 50;
  std::size_t n_step = 4;
  std::size_t samples_per_n = 100;
  std::uint64_t seed = 0;
  double discard_threshold = 0.0;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Generates, gauge-fixes and decomposes the random matrix with this seed.
SampleResult run_sample(std::size_t n_qubits, std::uint64_t sample_seed, double discard_threshold);

/// Scaling study over N = n_min, n_min + n_step, ..., <= n_max. Sample s of
/// size N uses derive_seed(seed, N, s), so results do not depend on thread
/// count or evaluation order. `progress`, if set, is called after each N.
std::vector<ScalingRow> run_scaling_experiment(
    const ScalingConfig& config,
    const std::function<void(const ScalingRow&)>& progress = nullptr);

/// Writes "n,samples,mean_ta,min_ta,max_ta,mean_bound,mean_blocks" and one
/// line per row, floats with 10 significant digits, LF endings.
void emit_csv(const std::vector<ScalingRow>& rows, const std::filesystem::path& path);

}  // namespace daqc
