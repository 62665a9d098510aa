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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nqaoa {

struct DecayPoint {
  double p;           ///< noise strength, < 1
  double gate_count;  ///< N
  double y;           ///< observed ratio, > 0
};

struct DecayFit {
  double constant;    ///< c in y = (1 - p)^(c N)
  double r_squared;   ///< in log space, against the centred total sum of squares
  std::size_t used;
  std::vector<std::string> warnings;  ///< one per dropped point
};

/// Least squares of ln y = c * N * ln(1 - p) through the origin. Points with
/// y <= 0 (or non-finite) are dropped with a warning; SimulationError if
/// fewer than two remain. ValidationError if any p >= 1.
DecayFit fit_decay(std::span<const DecayPoint> points);

/// Same fit with one gate count shared by every (p, y) point.
DecayFit fit_decay(std::span<const double> p, std::span<const double> y, double gate_count);

struct LineFit {
  double slope;
  double intercept;
  double r_squared;
};

/// Ordinary least squares y = slope * x + intercept (>= 2 points).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace nqaoa
