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

// Box-counting dimension of binary rasters.
//
// A square grid of edge delta is laid over the image with its corner at
// `origin`; pixel (x, y) is represented by its center (x + 0.5, y + 0.5) and
// belongs to cell (floor((x + 0.5 - ox) / delta), floor((y + 0.5 - oy) / delta)).
// N(delta) is the number of cells holding at least one ink pixel. Series start
// at the extent L of the ink bounding box and halve delta at each level.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "archgeom/errors.hpp"
#include "archgeom/image.hpp"

namespace archgeom {

struct BoxCountRecord {
  double delta = 0.0;
  long long count = 0;

  friend bool operator==(const BoxCountRecord&, const BoxCountRecord&) = default;
};

struct BoxCountSeries {
  std::string image_id;
  std::vector<BoxCountRecord> records;  // delta strictly decreasing, halving

  friend bool operator==(const BoxCountSeries&, const BoxCountSeries&) = default;
};

struct PairwiseDimension {
  double delta_large = 0.0;
  double delta_small = 0.0;
  double dim = 0.0;

  friend bool operator==(const PairwiseDimension&, const PairwiseDimension&) = default;
};

inline constexpr double kPreferredBandLow = 1.1;
inline constexpr double kPreferredBandHigh = 1.5;
inline constexpr int kDefaultLevels = 4;

struct DimensionReport {
  BoxCountSeries series;
  std::vector<PairwiseDimension> pairwise;
  double average_dim = 0.0;
  double lsq_dim = 0.0;
  bool in_preferred_band = false;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

struct GridOrigin {
  double x = 0.0;
  double y = 0.0;
};

struct BoxCountOptions {
  /// Worker threads for the pixel scan; 0 picks hardware concurrency.
  unsigned threads = 1;
};

namespace detail {

inline std::uint64_t cell_key(long long cx, long long cy) {
  // Cell indices stay well inside +-2^31 for any raster we accept.
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx + (1LL << 31))) << 32) |
         static_cast<std::uint32_t>(cy + (1LL << 31));
}

inline void collect_cells(const BinaryImage& img, double delta, GridOrigin origin, int row_begin,
                          int row_end, std::vector<std::uint64_t>& keys) {
  for (int y = row_begin; y < row_end; ++y) {
    const auto cy = static_cast<long long>(std::floor((y + 0.5 - origin.y) / delta));
    long long last_cx = 0;
    bool have_last = false;
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      const auto cx = static_cast<long long>(std::floor((x + 0.5 - origin.x) / delta));
      if (have_last && cx == last_cx) continue;
      keys.push_back(cell_key(cx, cy));
      last_cx = cx;
      have_last = true;
    }
  }
}

}  // namespace detail

/// Number of grid cells of edge `delta` anchored at `origin` that hold ink.
inline long long count_boxes(const BinaryImage& img, double delta, GridOrigin origin = {},
                             BoxCountOptions opts = {}) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("box size must be positive");
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) throw DomainError("origin must be finite");

  unsigned workers = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(img.height()));

  std::vector<std::uint64_t> keys;
  if (workers <= 1) {
    detail::collect_cells(img, delta, origin, 0, img.height(), keys);
  } else {
    std::vector<std::vector<std::uint64_t>> parts(workers);
    {
      std::vector<std::jthread> pool;
      const int rows = img.height();
      for (unsigned w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(static_cast<long long>(rows) * w / workers);
        const int end = static_cast<int>(static_cast<long long>(rows) * (w + 1) / workers);
        pool.emplace_back([&, w, begin, end] {
          detail::collect_cells(img, delta, origin, begin, end, parts[w]);
        });
      }
    }
    for (auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
  }
  std::sort(keys.begin(), keys.end());
  return static_cast<long long>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

/// Counts at deltas L, L/2, L/4, ... with the grid anchored at the top-left
/// corner of the ink bounding box. L defaults to the larger side of that box.
inline BoxCountSeries box_count_series(const BinaryImage& img, int levels = kDefaultLevels,
                                       std::optional<double> initial_delta = std::nullopt,
                                       BoxCountOptions opts = {}, std::string image_id = {}) {
  if (levels < 2) throw DomainError("box counting needs at least 2 levels");
  const auto box = ink_bounding_box(img);
  if (!box) throw DomainError("no ink");
  double delta = initial_delta.value_or(static_cast<double>(std::max(box->width(), box->height())));
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("initial box size must be positive");

  const GridOrigin origin{static_cast<double>(box->x0), static_cast<double>(box->y0)};
  BoxCountSeries s;
  s.image_id = std::move(image_id);
  for (int k = 0; k < levels; ++k, delta /= 2.0) {
    s.records.push_back({delta, count_boxes(img, delta, origin, opts)});
  }
  return s;
}

/// Number of levels of a series starting at the ink extent L whose finest
/// box is still at least `finest_delta` pixels: 1 + floor(log2(L / finest_delta)).
inline int levels_to_resolution(const BinaryImage& img, double finest_delta = 1.0) {
  if (!(finest_delta > 0.0)) throw DomainError("finest box size must be positive");
  const auto box = ink_bounding_box(img);
  if (!box) throw DomainError("no ink");
  double delta = static_cast<double>(std::max(box->width(), box->height()));
  int levels = 0;
  for (; delta >= finest_delta; delta /= 2.0) ++levels;
  return std::max(levels, 2);
}

/// ln(N_small / N_large) / ln(delta_large / delta_small) for each adjacent pair.
inline std::vector<PairwiseDimension> pairwise_dimensions(const BoxCountSeries& s) {
  if (s.records.size() < 2) throw DomainError("series needs at least 2 records");
  std::vector<PairwiseDimension> out;
  out.reserve(s.records.size() - 1);
  for (std::size_t k = 0; k + 1 < s.records.size(); ++k) {
    const auto& big = s.records[k];
    const auto& small = s.records[k + 1];
    if (big.count <= 0 || small.count <= 0) throw DomainError("zero box count in series");
    if (!(big.delta > small.delta)) throw DomainError("box sizes must strictly decrease");
    const double dim = std::log(static_cast<double>(small.count) / static_cast<double>(big.count)) /
                       std::log(big.delta / small.delta);
    out.push_back({big.delta, small.delta, dim});
  }
  return out;
}

/// Ordinary least-squares slope of ln N against -ln delta.
inline double fit_dimension(const BoxCountSeries& s) {
  const auto n = s.records.size();
  if (n < 2) throw DomainError("series needs at least 2 records");
  double mx = 0.0, my = 0.0;
  for (const auto& r : s.records) {
    if (r.count <= 0 || !(r.delta > 0.0)) throw DomainError("series records must be positive");
    mx += -std::log(r.delta);
    my += std::log(static_cast<double>(r.count));
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : s.records) {
    const double dx = -std::log(r.delta) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(static_cast<double>(r.count)) - my);
  }
  if (!(sxx > 0.0)) throw DomainError("degenerate series: all box sizes equal");
  return sxy / sxx;
}

inline double average_dimension(std::span<const PairwiseDimension> pairwise) {
  if (pairwise.empty()) throw DomainError("no pairwise dimensions");
  double sum = 0.0;
  for (const auto& p : pairwise) sum += p.dim;
  return sum / static_cast<double>(pairwise.size());
}

inline bool in_preferred_band(double dim) {
  return dim >= kPreferredBandLow && dim <= kPreferredBandHigh;
}

inline DimensionReport make_report(BoxCountSeries series) {
  DimensionReport r;
  r.pairwise = pairwise_dimensions(series);
  r.average_dim = average_dimension(r.pairwise);
  r.lsq_dim = fit_dimension(series);
  r.in_preferred_band = in_preferred_band(r.average_dim);
  r.series = std::move(series);
  return r;
}

inline DimensionReport analyze(const BinaryImage& img, int levels = kDefaultLevels,
                               BoxCountOptions opts = {}, std::string image_id = {}) {
  return make_report(box_count_series(img, levels, std::nullopt, opts, std::move(image_id)));
}

}  // namespace archgeom
