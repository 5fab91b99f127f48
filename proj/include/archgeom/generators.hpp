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

// Rasterizers for classical fractals with known dimension.

#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archgeom/errors.hpp"
#include "archgeom/image.hpp"

namespace archgeom {

enum class FractalKind { KochCurve, SierpinskiTriangle, SierpinskiCarpet, CantorDust, Line, FilledSquare };

inline constexpr FractalKind kAllFractalKinds[] = {
    FractalKind::KochCurve,  FractalKind::SierpinskiTriangle, FractalKind::SierpinskiCarpet,
    FractalKind::CantorDust, FractalKind::Line,               FractalKind::FilledSquare};

inline std::string_view to_string(FractalKind k) {
  switch (k) {
    case FractalKind::KochCurve: return "koch_curve";
    case FractalKind::SierpinskiTriangle: return "sierpinski_triangle";
    case FractalKind::SierpinskiCarpet: return "sierpinski_carpet";
    case FractalKind::CantorDust: return "cantor_dust";
    case FractalKind::Line: return "line";
    case FractalKind::FilledSquare: return "filled_square";
  }
  return "?";
}

inline std::optional<FractalKind> parse_fractal_kind(std::string_view name) {
  for (const auto k : kAllFractalKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct GeneratorSpec {
  FractalKind kind = FractalKind::SierpinskiCarpet;
  int level = 0;
  int size = 1;  // canvas edge in pixels
};

/// ln2/ln3, ln4/ln3, ln3/ln2, ln8/ln3, 1, 2.
inline double analytic_dimension(FractalKind k) {
  switch (k) {
    case FractalKind::CantorDust: return std::log(2.0) / std::log(3.0);
    case FractalKind::KochCurve: return std::log(4.0) / std::log(3.0);
    case FractalKind::SierpinskiTriangle: return std::log(3.0) / std::log(2.0);
    case FractalKind::SierpinskiCarpet: return std::log(8.0) / std::log(3.0);
    case FractalKind::Line: return 1.0;
    case FractalKind::FilledSquare: return 2.0;
  }
  return 0.0;
}

namespace detail {

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Subdivision base of the construction, 1 for non-recursive kinds.
inline int generator_base(FractalKind k) {
  switch (k) {
    case FractalKind::SierpinskiTriangle: return 2;
    case FractalKind::Line:
    case FractalKind::FilledSquare: return 1;
    default: return 3;
  }
}

/// Cell index of pixel p when a canvas of `size` pixels is split in `cells`.
inline long long cell_of(int p, int size, long long cells) {
  return static_cast<long long>(p) * cells / size;
}

inline bool cantor_member(long long i, int level) {
  for (int k = 0; k < level; ++k, i /= 3) {
    if (i % 3 == 1) return false;
  }
  return true;
}

inline bool carpet_member(long long i, long long j, int level) {
  for (int k = 0; k < level; ++k, i /= 3, j /= 3) {
    if (i % 3 == 1 && j % 3 == 1) return false;
  }
  return true;
}

inline void draw_line(BinaryImage& img, int x0, int y0, int x1, int y1) {
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    if (img.in_bounds(x0, y0)) img.set(x0, y0);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

}  // namespace detail

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Koch curve vertices (4^level + 1 points) over a base of length size - 1,
/// bumps pointing up (toward y = 0) in image coordinates.
inline std::vector<Vec2> koch_polyline(int level, int size) {
  const double h = (size - 1) * std::numbers::sqrt3 / 6.0;
  const double base_y = std::round(h);
  std::vector<Vec2> pts{{0.0, base_y}, {static_cast<double>(size - 1), base_y}};
  const double c = 0.5, s = -std::numbers::sqrt3 / 2.0;  // rotation by -60 degrees
  for (int k = 0; k < level; ++k) {
    std::vector<Vec2> next;
    next.reserve(pts.size() * 4);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Vec2 a = pts[i], b = pts[i + 1];
      const Vec2 d{(b.x - a.x) / 3.0, (b.y - a.y) / 3.0};
      const Vec2 p1{a.x + d.x, a.y + d.y};
      const Vec2 p3{a.x + 2.0 * d.x, a.y + 2.0 * d.y};
      const Vec2 p2{p1.x + c * d.x - s * d.y, p1.y + s * d.x + c * d.y};
      next.push_back(a);
      next.push_back(p1);
      next.push_back(p2);
      next.push_back(p3);
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  return pts;
}

inline void validate(const GeneratorSpec& spec) {
  if (spec.level < 0) throw DomainError("generator level must be >= 0");
  if (spec.size < 1) throw DomainError("generator size must be >= 1");
  const int base = detail::generator_base(spec.kind);
  if (base > 1) {
    if (spec.level > 19) throw DomainError("generator level too large");
    if (spec.size < detail::ipow(base, spec.level)) {
      throw DomainError("canvas size must be at least " + std::to_string(base) + "^level");
    }
  }
}

/// Deterministic raster of `spec`. Canvas shapes:
///   koch_curve           size x (ceil(size*sqrt(3)/6)+1), 1-px Bresenham strokes
///   sierpinski_triangle  size x size, cell (i, j) inked iff (i & j) == 0
///   sierpinski_carpet    size x size
///   cantor_dust, line    size x 1 strip
///   filled_square        size x size, all ink
/// Recursive kinds split the canvas into base^level cells.
inline BinaryImage generate(const GeneratorSpec& spec) {
  validate(spec);
  const int n = spec.size;
  switch (spec.kind) {
    case FractalKind::FilledSquare: {
      BinaryImage img(n, n);
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) img.set(x, y);
      return img;
    }
    case FractalKind::Line: {
      BinaryImage img(n, 1);
      for (int x = 0; x < n; ++x) img.set(x, 0);
      return img;
    }
    case FractalKind::CantorDust: {
      const long long cells = detail::ipow(3, spec.level);
      BinaryImage img(n, 1);
      for (int x = 0; x < n; ++x) img.set(x, 0, detail::cantor_member(detail::cell_of(x, n, cells), spec.level));
      return img;
    }
    case FractalKind::SierpinskiCarpet: {
      const long long cells = detail::ipow(3, spec.level);
      BinaryImage img(n, n);
      for (int y = 0; y < n; ++y) {
        const long long j = detail::cell_of(y, n, cells);
        for (int x = 0; x < n; ++x) img.set(x, y, detail::carpet_member(detail::cell_of(x, n, cells), j, spec.level));
      }
      return img;
    }
    case FractalKind::SierpinskiTriangle: {
      const long long cells = detail::ipow(2, spec.level);
      BinaryImage img(n, n);
      for (int y = 0; y < n; ++y) {
        const long long j = detail::cell_of(y, n, cells);
        for (int x = 0; x < n; ++x) img.set(x, y, (detail::cell_of(x, n, cells) & j) == 0);
      }
      return img;
    }
    case FractalKind::KochCurve: {
      const auto pts = koch_polyline(spec.level, n);
      const int height = static_cast<int>(pts.front().y) + 1;
      BinaryImage img(n, height);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        detail::draw_line(img, static_cast<int>(std::lround(pts[i].x)), static_cast<int>(std::lround(pts[i].y)),
                          static_cast<int>(std::lround(pts[i + 1].x)),
                          static_cast<int>(std::lround(pts[i + 1].y)));
      }
      return img;
    }
  }
  throw DomainError("unknown fractal kind");
}

/// Block-OR downsampling: output pixel is ink iff any pixel of its fx x fy
/// block is ink. Partial blocks at the border are included.
inline BinaryImage downsample_or(const BinaryImage& img, int fx, int fy) {
  if (fx < 1 || fy < 1) throw DomainError("downsample factors must be >= 1");
  BinaryImage out((img.width() + fx - 1) / fx, (img.height() + fy - 1) / fy);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y)) out.set(x / fx, y / fy);
  return out;
}

}  // namespace archgeom
