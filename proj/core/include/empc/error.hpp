// Copyright 2026 The empc Authors
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

namespace empc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invariant-violating input (dimension mismatch, negative
/// cost, duplicate sort keys, unparsable JSON, ...).
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// A solver parameter is out of its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive solver refused to run because the instance exceeds its
/// enumeration guard. Raise the guard explicitly to proceed.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace empc
