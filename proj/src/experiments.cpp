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

#include "daqc/experiments.hpp"

#include "daqc/coupling_matrix.hpp"
#include "daqc/decomposer.hpp"
#include "daqc/error.hpp"
#include "daqc/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>

namespace daqc {
namespace {

std::string format_g10(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", value == 0.0 ? 0.0 : value);
  return buffer;
}

std::vector<SampleResult> run_samples(std::size_t n_qubits, const ScalingConfig& config) {
  std::vector<SampleResult> results(config.samples_per_n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < results.size(); s = next++) {
      results[s] = run_sample(n_qubits, derive_seed(config.seed, n_qubits, s),
                              config.discard_threshold);
    }
  };
  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, results.size());
  if (threads == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace

SampleResult run_sample(std::size_t n_qubits, std::uint64_t sample_seed, double discard_threshold) {
  const CouplingRatioMatrix fixed = gauge_fix_psd(random_coupling_ratio_matrix(n_qubits, sample_seed));
  const Decomposition decomposition = decompose(fixed, discard_threshold);
  return SampleResult{total_analog_time(decomposition),
                      3.0 * static_cast<double>(n_qubits) * std::abs(fixed.lambda_tilde_min()),
                      decomposition.terms.size()};
}

std::vector<ScalingRow> run_scaling_experiment(
    const ScalingConfig& config, const std::function<void(const ScalingRow&)>& progress) {
  if (config.n_min < 2 || config.n_min > config.n_max) {
    throw InvalidArgument("need 2 <= n_min <= n_max");
  }
  if (config.n_step == 0) throw InvalidArgument("n_step must be positive");
  if (config.samples_per_n == 0) throw InvalidArgument("samples per N must be positive");

  std::vector<ScalingRow> rows;
  for (std::size_t n = config.n_min; n <= config.n_max; n += config.n_step) {
    const auto samples = run_samples(n, config);

    // Aggregated in sample order so sums are reproducible.
    ScalingRow row;
    row.n_qubits = n;
    row.samples = samples.size();
    row.min_ta = samples.front().analog_time;
    row.max_ta = samples.front().analog_time;
    row.max_bound_excess = samples.front().analog_time - samples.front().bound;
    double sum_ta = 0.0, sum_bound = 0.0, sum_blocks = 0.0;
    for (const auto& s : samples) {
      sum_ta += s.analog_time;
      sum_bound += s.bound;
      sum_blocks += static_cast<double>(s.blocks);
      row.min_ta = std::min(row.min_ta, s.analog_time);
      row.max_ta = std::max(row.max_ta, s.analog_time);
      row.max_bound_excess = std::max(row.max_bound_excess, s.analog_time - s.bound);
      row.max_blocks = std::max(row.max_blocks, s.blocks);
    }
    const double count = static_cast<double>(samples.size());
    row.mean_ta = sum_ta / count;
    row.mean_bound = sum_bound / count;
    row.mean_blocks = sum_blocks / count;
    // Keep min <= mean <= max exact despite rounding in the mean.
    row.mean_ta = std::clamp(row.mean_ta, row.min_ta, row.max_ta);
    rows.push_back(row);
    if (progress) progress(row);
  }
  return rows;
}

void emit_csv(const std::vector<ScalingRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw InvalidArgument("no rows to write");
  std::string out = "n,samples,mean_ta,min_ta,max_ta,mean_bound,mean_blocks\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n_qubits) + "," + std::to_string(row.samples) + "," +
           format_g10(row.mean_ta) + "," + format_g10(row.min_ta) + "," + format_g10(row.max_ta) +
           "," + format_g10(row.mean_bound) + "," + format_g10(row.mean_blocks) + "\n";
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot open " + path.string() + " for writing");
  file << out;
  if (!file) throw InputError("failed writing " + path.string());
}

}  // namespace daqc
