// Copyright 2026 The aqcode Authors
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

#include <stdexcept>
#include <string>

namespace aqcode {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands act on different qubit counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter violates an operation precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A Hamiltonian term falls outside the supported interaction set.
class UnsupportedTermError : public Error {
 public:
  using Error::Error;
};

/// Operator passed as a logical does not commute with the stabilizer group.
class NotALogicalError : public Error {
 public:
  using Error::Error;
};

/// Decoupling pulse target fails its commutation precondition.
class InvalidPulseError : public Error {
 public:
  using Error::Error;
};

/// A structural property the code must satisfy does not hold.
class CodeInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Work or memory required exceeds the configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace aqcode
