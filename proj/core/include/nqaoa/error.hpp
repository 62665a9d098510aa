// Copyright 2026 The noisy-qaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nqaoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested register or matrix is larger than the dense simulator supports.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad indices, non-unitary matrices, invalid graphs, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown during a simulation (degenerate branch weights,
/// non-finite costs or gradients).
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nqaoa
