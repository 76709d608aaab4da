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
#include <stdexcept>
#include <string>

namespace daqc {

/// Base class of every error raised by the library.
///
/// Two families exist: input errors (malformed files, incompatible
/// Hamiltonians, bad arguments) and numerical errors (non-convergence,
/// violated numerical preconditions). The CLI maps them to different exit
/// codes, so every concrete error derives from exactly one of the two.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class SizeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NonZZSource : public InputError {
 public:
  NonZZSource() : InputError("source Hamiltonian contains non-zz couplings") {}
};

class IncompatibleTopology : public InputError {
 public:
  IncompatibleTopology(std::size_t i, std::size_t j)
      : InputError("source Hamiltonian has no zz coupling on qubit pair (" +
                   std::to_string(i) + ", " + std::to_string(j) +
                   ") required by the problem"),
        i_(i),
        j_(j) {}

  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

class TooLarge : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotSymmetric : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPositiveSemidefinite : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ZeroEigenvector : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotUnit : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateSample : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace daqc
