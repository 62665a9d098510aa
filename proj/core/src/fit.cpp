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

#include "nqaoa/fit.hpp"

#include <cmath>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

DecayFit fit_decay(std::span<const DecayPoint> points) {
  DecayFit fit{0.0, 0.0, 0, {}};
  std::vector<double> xs, zs;
  for (const DecayPoint& pt : points) {
    if (!(pt.p < 1.0)) throw ValidationError("decay fit requires p < 1");
    if (!(pt.y > 0.0) || !std::isfinite(pt.y)) {
      std::ostringstream w;
      w << "dropped point p=" << pt.p << " N=" << pt.gate_count << " with y=" << pt.y;
      fit.warnings.push_back(w.str());
      continue;
    }
    xs.push_back(pt.gate_count * std::log1p(-pt.p));
    zs.push_back(std::log(pt.y));
  }
  if (xs.size() < 2) throw SimulationError("decay fit needs at least two positive points");

  double sxx = 0.0, sxz = 0.0, mean_z = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxz += xs[i] * zs[i];
    mean_z += zs[i];
  }
  mean_z /= static_cast<double>(zs.size());
  fit.constant = sxx > 0.0 ? sxz / sxx : 0.0;

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = zs[i] - fit.constant * xs[i];
    ss_res += r * r;
    ss_tot += (zs[i] - mean_z) * (zs[i] - mean_z);
  }
  if (ss_tot > 0.0) {
    fit.r_squared = 1.0 - ss_res / ss_tot;
  } else {
    fit.r_squared = ss_res == 0.0 ? 1.0 : 0.0;
  }
  fit.used = xs.size();
  return fit;
}

DecayFit fit_decay(std::span<const double> p, std::span<const double> y, double gate_count) {
  if (p.size() != y.size()) throw ValidationError("decay fit: p and y lengths differ");
  std::vector<DecayPoint> pts;
  pts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pts.push_back({p[i], gate_count, y[i]});
  return fit_decay(pts);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("line fit needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw SimulationError("line fit: x values are constant");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace nqaoa
