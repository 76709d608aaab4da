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

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace daqc {

/// Pauli axis of a coupling. The index is the offset inside a qubit's
/// 3-block of every 3N-sized vector or matrix (x -> 0, y -> 1, z -> 2).
enum class PauliAxis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<PauliAxis, 3> kPauliAxes = {PauliAxis::x, PauliAxis::y,
                                                        PauliAxis::z};

constexpr std::size_t index(PauliAxis axis) { return static_cast<std::size_t>(axis); }

constexpr char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::x:
      return 'x';
    case PauliAxis::y:
      return 'y';
    case PauliAxis::z:
      return 'z';
  }
  return '?';
}

std::optional<PauliAxis> parse_axis(char c);

using Vec3 = Eigen::Vector3d;

/// A length-3N real vector viewed as N qubit blocks of Vec3.
class BlockVector {
 public:
  explicit BlockVector(std::size_t n_qubits) : data_(Eigen::VectorXd::Zero(3 * n_qubits)) {}

  /// Wraps a flat vector; its length must be a multiple of three.
  static BlockVector from_flat(const Eigen::VectorXd& flat);

  std::size_t n_qubits() const { return static_cast<std::size_t>(data_.size()) / 3; }

  Vec3 block(std::size_t qubit) const { return data_.segment<3>(3 * static_cast<Eigen::Index>(qubit)); }
  void set_block(std::size_t qubit, const Vec3& value) {
    data_.segment<3>(3 * static_cast<Eigen::Index>(qubit)) = value;
  }

  const Eigen::VectorXd& flat() const { return data_; }

 private:
  BlockVector() = default;
  Eigen::VectorXd data_;
};

}  // namespace daqc
