// Copyright 2026 The archgeom Authors.
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

#include <cmath>
#include <string>
#include <vector>

#include "archgeom/errors.hpp"

namespace archgeom {

/// One labeled column of per-scale dimension values.
struct DimSeries {
  std::string label;
  std::vector<double> values;
};

struct SeriesStats {
  double mean = 0.0;
  double sample_std = 0.0;  // n - 1 denominator
  int n = 0;
};

namespace detail {

inline void check_series(const DimSeries& s) {
  if (s.values.size() < 2) throw DomainError("series '" + s.label + "' needs at least 2 values");
  for (const double v : s.values) {
    if (!std::isfinite(v)) throw DomainError("series '" + s.label + "' has a non-finite value");
  }
}

inline bool constant(const std::vector<double>& v) {
  for (const double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

inline double mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (const double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace detail

inline SeriesStats summarize(const DimSeries& s) {
  detail::check_series(s);
  const int n = static_cast<int>(s.values.size());
  if (detail::constant(s.values)) return {s.values.front(), 0.0, n};
  const double m = detail::mean(s.values);
  double ss = 0.0;
  for (const double x : s.values) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / static_cast<double>(n - 1)), n};
}

/// Pearson product-moment correlation.
inline double pearson(const DimSeries& a, const DimSeries& b) {
  detail::check_series(a);
  detail::check_series(b);
  if (a.values.size() != b.values.size()) {
    throw DomainError("series '" + a.label + "' and '" + b.label + "' differ in length");
  }
  if (detail::constant(a.values) || detail::constant(b.values)) {
    throw DomainError("correlation undefined for a constant series");
  }
  const double ma = detail::mean(a.values);
  const double mb = detail::mean(b.values);
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double da = a.values[i] - ma;
    const double db = b.values[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  const double r = sab / std::sqrt(saa * sbb);
  return std::fmax(-1.0, std::fmin(1.0, r));
}

}  // namespace archgeom
