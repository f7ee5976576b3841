// Copyright 2026 The adaptpf Authors
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

namespace adaptpf {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or vector length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position()` is a character index for Pauli strings
/// and a 1-based line number for Hamiltonian files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A documented precondition was violated (bad index, non-finite input, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds what a dense backend can hold.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (time step, thresholds, backend options).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Ansatz growth could not reach its target. Carries the residual error.
class GrowthStallError : public Error {
 public:
  GrowthStallError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Every overlap eigenvalue fell below the Krylov threshold.
class DegenerateSubspaceError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown that should not happen for valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace adaptpf
