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

#include <cstdint>
#include <random>

namespace daqc {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used to derive
/// independent, well-mixed sub-seeds from small integers.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for one experiment sample:
///   splitmix64(splitmix64(splitmix64(master) ^ n_qubits) ^ sample_index)
/// so every sample can be generated independently of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n_qubits, std::uint64_t sample_index);

/// Portable uniform sampler: MT19937-64 (bit-exact by the C++ standard) plus
/// a fixed 53-bit mantissa conversion, so draws are identical on every
/// platform and standard library.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace daqc
