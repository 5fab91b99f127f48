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

// Poincare half-plane and disc models of the hyperbolic plane.
//
// Points of the half-plane model are complex numbers with positive imaginary
// part; lines are vertical rays and semicircles centered on the real axis
// (the absolute). The disc model lives in the open unit disc. The two models
// are related by the Cayley map w = (z - i) / (z + i) and its inverse.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <variant>

#include "archgeom/errors.hpp"

namespace archgeom::hyp {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

struct HypConfig {
  double c = 1.0;    // scale of the angle-form distance
  double tol = kDefaultTol;
};

namespace detail {

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace detail

/// Point of the upper half-plane, im > 0.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double re, double im) : HalfPlanePoint(Complex{re, im}) {}

  explicit HalfPlanePoint(Complex z) : z_(z) {
    if (!detail::finite(z)) throw DomainError("half-plane point must be finite");
    if (!(z.imag() > 0.0)) throw DomainError("half-plane point requires im > 0");
  }

  Complex z() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;

 private:
  Complex z_;
};

/// Point of the open unit disc, |z| < 1.
class DiscPoint {
 public:
  DiscPoint(double re, double im) : DiscPoint(Complex{re, im}) {}

  explicit DiscPoint(Complex z) : z_(z) {
    if (!detail::finite(z)) throw DomainError("disc point must be finite");
    if (!(std::abs(z) < 1.0)) throw DomainError("disc point requires |z| < 1");
  }

  Complex z() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }

  friend bool operator==(const DiscPoint&, const DiscPoint&) = default;

 private:
  Complex z_;
};

struct VerticalRay {
  double foot = 0.0;
  friend bool operator==(const VerticalRay&, const VerticalRay&) = default;
};

struct Semicircle {
  double center = 0.0;
  double radius = 1.0;
  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

/// A half-plane line.
using Geodesic = std::variant<VerticalRay, Semicircle>;

inline Geodesic make_semicircle(double center, double radius) {
  if (!std::isfinite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
    throw DomainError("semicircle requires a finite center and radius > 0");
  }
  return Semicircle{center, radius};
}

/// Point of the absolute: a real number or the point at infinity.
struct IdealPoint {
  bool at_infinity = false;
  double x = 0.0;

  static IdealPoint infinity() { return {true, 0.0}; }
  static IdealPoint real(double x) { return {false, x}; }

  bool same_as(const IdealPoint& o, double tol) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return std::abs(x - o.x) < tol * std::max(1.0, std::abs(x));
  }
};

/// Ideal endpoints: {foot, infinity} for a ray, {center - r, center + r} for a
/// semicircle (lower endpoint first).
inline std::array<IdealPoint, 2> ideal_endpoints(const Geodesic& g) {
  if (const auto* ray = std::get_if<VerticalRay>(&g)) {
    return {IdealPoint::real(ray->foot), IdealPoint::infinity()};
  }
  const auto& s = std::get<Semicircle>(g);
  return {IdealPoint::real(s.center - s.radius), IdealPoint::real(s.center + s.radius)};
}

// ---------------------------------------------------------------------------
// Distances and the inter-model maps

/// Half-plane distance, arcosh(1 + |p - q|^2 / (2 p.im q.im)).
/// Evaluated as 2 asinh(|p - q| / (2 sqrt(p.im q.im))) which is the same
/// quantity without the cancellation of arcosh near 1.
inline double dist_half_plane(const HalfPlanePoint& p, const HalfPlanePoint& q) {
  const double chord = std::abs(p.z() - q.z());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.im() * q.im())));
}

/// cosh of the half-plane distance, 1 + |p - q|^2 / (2 p.im q.im).
inline double cosh_dist_half_plane(const HalfPlanePoint& p, const HalfPlanePoint& q) {
  return 1.0 + std::norm(p.z() - q.z()) / (2.0 * p.im() * q.im());
}

/// Disc distance, 2 artanh |(p - q) / (1 - conj(p) q)|.
inline double dist_disc(const DiscPoint& p, const DiscPoint& q) {
  const double num = std::abs(p.z() - q.z());
  const double den = std::abs(1.0 - std::conj(p.z()) * q.z());
  return 2.0 * std::atanh(std::min(num / den, 1.0));
}

inline DiscPoint to_disc(const HalfPlanePoint& p) {
  const Complex i{0.0, 1.0};
  Complex w = (p.z() - i) / (p.z() + i);
  // Rounding can push points very high in the half-plane onto |w| = 1.
  if (std::abs(w) >= 1.0) w *= std::nextafter(1.0, 0.0) / std::abs(w);
  return DiscPoint(w);
}

inline HalfPlanePoint to_half_plane(const DiscPoint& p) {
  const Complex i{0.0, 1.0};
  return HalfPlanePoint(i * (1.0 + p.z()) / (1.0 - p.z()));
}

// ---------------------------------------------------------------------------
// Lines

namespace detail {

inline bool vertically_aligned(double a, double b, double tol) {
  return std::abs(a - b) < tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace detail

/// The unique line through two distinct points. The semicircle center is where
/// the perpendicular bisector of the chord pq meets the absolute.
inline Geodesic geodesic_through(const HalfPlanePoint& p, const HalfPlanePoint& q,
                                 double tol = kDefaultTol) {
  if (std::abs(p.z() - q.z()) < tol) throw DomainError("degenerate pair");
  if (detail::vertically_aligned(p.re(), q.re(), tol)) {
    return VerticalRay{0.5 * (p.re() + q.re())};
  }
  const double center = (std::norm(p.z()) - std::norm(q.z())) / (2.0 * (p.re() - q.re()));
  return Semicircle{center, std::abs(p.z() - center)};
}

inline bool on_geodesic(const HalfPlanePoint& p, const Geodesic& g, double tol = kDefaultTol) {
  if (const auto* ray = std::get_if<VerticalRay>(&g)) return std::abs(p.re() - ray->foot) < tol;
  const auto& s = std::get<Semicircle>(g);
  return std::abs(std::abs(p.z() - s.center) - s.radius) < tol;
}

/// True iff a lies strictly between b and c on their common line. Order along
/// a semicircle follows the projection onto the absolute; along a ray, height.
inline bool between(const HalfPlanePoint& a, const HalfPlanePoint& b, const HalfPlanePoint& c,
                    double tol = kDefaultTol) {
  const Geodesic g = geodesic_through(b, c, tol);
  if (!on_geodesic(a, g, tol)) throw DomainError("points do not lie on one line");
  const bool ray = std::holds_alternative<VerticalRay>(g);
  const double ka = ray ? a.im() : a.re();
  const double kb = ray ? b.im() : b.re();
  const double kc = ray ? c.im() : c.re();
  return std::min(kb, kc) < ka && ka < std::max(kb, kc);
}

/// Angle-form distance c |ln(tan(alpha) / tan(beta))|, alpha and beta being the
/// angles between the absolute and the chords drawn from the lower ideal
/// endpoint of the line pq to p and q. On a vertical ray the chords are
/// parallel and the formula degenerates to c |ln(p.im / q.im)|.
inline double dist_half_plane_angle_form(const HalfPlanePoint& p, const HalfPlanePoint& q,
                                         const HypConfig& cfg = {}) {
  if (p == q) return 0.0;
  const Geodesic g = geodesic_through(p, q, cfg.tol);
  if (std::holds_alternative<VerticalRay>(g)) {
    return cfg.c * std::abs(std::log(p.im() / q.im()));
  }
  const double end = ideal_endpoints(g)[0].x;
  const double tan_alpha = p.im() / (p.re() - end);
  const double tan_beta = q.im() / (q.re() - end);
  return cfg.c * std::abs(std::log(std::abs(tan_alpha) / std::abs(tan_beta)));
}

/// The two limiting parallels to g through p: the lines through p that share
/// exactly one ideal endpoint with g. Returned in the order of
/// ideal_endpoints(g).
inline std::pair<Geodesic, Geodesic> limiting_parallels(const Geodesic& g, const HalfPlanePoint& p,
                                                        double tol = kDefaultTol) {
  if (on_geodesic(p, g, tol)) throw DomainError("point lies on the line");
  auto through_endpoint = [&](const IdealPoint& e) -> Geodesic {
    if (e.at_infinity) return VerticalRay{p.re()};
    if (detail::vertically_aligned(p.re(), e.x, tol)) return VerticalRay{e.x};
    // (p.re - m)^2 + p.im^2 = (e - m)^2
    const double m = (std::norm(p.z()) - e.x * e.x) / (2.0 * (p.re() - e.x));
    return Semicircle{m, std::abs(e.x - m)};
  };
  const auto ends = ideal_endpoints(g);
  return {through_endpoint(ends[0]), through_endpoint(ends[1])};
}

// ---------------------------------------------------------------------------
// Angles and triangles

namespace detail {

/// Unit tangent of g at p with a fixed orientation: upward on a ray, toward
/// decreasing re on a semicircle.
inline Complex tangent(const HalfPlanePoint& p, const Geodesic& g) {
  if (std::holds_alternative<VerticalRay>(g)) return {0.0, 1.0};
  const auto& s = std::get<Semicircle>(g);
  const Complex t{-p.im(), p.re() - s.center};
  return t / std::abs(t);
}

/// Unit tangent at `from` of the line segment running to `to`.
inline Complex tangent_toward(const HalfPlanePoint& from, const HalfPlanePoint& to, double tol) {
  const Geodesic g = geodesic_through(from, to, tol);
  if (std::holds_alternative<VerticalRay>(g)) return {0.0, to.im() > from.im() ? 1.0 : -1.0};
  const Complex t = tangent(from, g);
  return to.re() < from.re() ? t : -t;
}

inline double angle_between(Complex u, Complex v) {
  const double cross = u.real() * v.imag() - u.imag() * v.real();
  const double dot = u.real() * v.real() + u.imag() * v.imag();
  return std::atan2(std::abs(cross), dot);
}

}  // namespace detail

/// Angle at `vertex` between two lines through it, in (0, pi). The model is
/// conformal, so this is the Euclidean angle between the tangents.
inline double angle_at(const HalfPlanePoint& vertex, const Geodesic& g1, const Geodesic& g2,
                       double tol = kDefaultTol) {
  if (!on_geodesic(vertex, g1, tol) || !on_geodesic(vertex, g2, tol)) {
    throw DomainError("vertex is not on both lines");
  }
  const double a = detail::angle_between(detail::tangent(vertex, g1), detail::tangent(vertex, g2));
  if (a < tol || a > std::numbers::pi - tol) throw DomainError("degenerate angle");
  return a;
}

/// Interior angle at `vertex` of the corner formed by the segments to a and b.
inline double interior_angle(const HalfPlanePoint& vertex, const HalfPlanePoint& a,
                             const HalfPlanePoint& b, double tol = kDefaultTol) {
  const double ang = detail::angle_between(detail::tangent_toward(vertex, a, tol),
                                           detail::tangent_toward(vertex, b, tol));
  if (ang < tol) throw DomainError("degenerate angle");
  return ang;
}

class HTriangle {
 public:
  HTriangle(HalfPlanePoint a, HalfPlanePoint b, HalfPlanePoint c, double tol = kDefaultTol)
      : a_(a), b_(b), c_(c), tol_(tol) {
    if (on_geodesic(c, geodesic_through(a, b, tol), tol)) {
      throw DomainError("degenerate triangle: vertices lie on one line");
    }
    if (std::abs(c.z() - a.z()) < tol || std::abs(c.z() - b.z()) < tol) {
      throw DomainError("degenerate triangle: repeated vertex");
    }
  }

  const HalfPlanePoint& a() const { return a_; }
  const HalfPlanePoint& b() const { return b_; }
  const HalfPlanePoint& c() const { return c_; }

  std::array<double, 3> angles() const {
    return {interior_angle(a_, b_, c_, tol_), interior_angle(b_, c_, a_, tol_),
            interior_angle(c_, a_, b_, tol_)};
  }

 private:
  HalfPlanePoint a_, b_, c_;
  double tol_;
};

inline double triangle_angle_sum(const HTriangle& t) {
  const auto a = t.angles();
  return a[0] + a[1] + a[2];
}

/// Point at fraction t of the segment from p to q, measured in hyperbolic
/// length. Moves p to the disc center, scales along the diameter, moves back.
inline HalfPlanePoint interpolate(const HalfPlanePoint& p, const HalfPlanePoint& q, double t) {
  const Complex a = to_disc(p).z();
  const Complex w = to_disc(q).z();
  const Complex moved = (w - a) / (1.0 - std::conj(a) * w);
  const double r = std::abs(moved);
  if (r == 0.0) return p;
  const Complex scaled = moved / r * std::tanh(t * std::atanh(r));
  const Complex back = (scaled + a) / (1.0 + std::conj(a) * scaled);
  return to_half_plane(DiscPoint(back));
}

// ---------------------------------------------------------------------------
// Right triangles

struct PythagorasTerms {
  double cosh_a = 0.0;  // leg A-C
  double cosh_b = 0.0;  // leg B-C
  double cosh_c = 0.0;  // hypotenuse A-B
  double residual = 0.0;  // |cosh c - cosh a cosh b|
};

/// Right triangle with vertices A = r i, B = u + v i, C = i (right angle at C),
/// r > 1, v > 0, u^2 + v^2 = 1. Sides are measured with dist_half_plane.
inline PythagorasTerms pythagoras_terms(double r, double u, double v, double tol = kDefaultTol) {
  if (!(r > 1.0)) throw DomainError("pythagoras requires r > 1");
  if (!(v > 0.0)) throw DomainError("pythagoras requires v > 0");
  if (!(std::abs(u * u + v * v - 1.0) < tol)) throw DomainError("pythagoras requires u^2 + v^2 = 1");
  const HalfPlanePoint A(0.0, r), B(u, v), C(0.0, 1.0);
  PythagorasTerms out;
  out.cosh_a = std::cosh(dist_half_plane(A, C));
  out.cosh_b = std::cosh(dist_half_plane(B, C));
  out.cosh_c = std::cosh(dist_half_plane(A, B));
  out.residual = std::abs(out.cosh_c - out.cosh_a * out.cosh_b);
  return out;
}

inline double pythagoras_residual(double r, double u, double v, double tol = kDefaultTol) {
  return pythagoras_terms(r, u, v, tol).residual;
}

// ---------------------------------------------------------------------------
// Segment / line crossing

/// Side of g containing p: inside the Euclidean disc of a semicircle, left of a ray.
inline bool inside(const HalfPlanePoint& p, const Geodesic& g) {
  if (const auto* ray = std::get_if<VerticalRay>(&g)) return p.re() < ray->foot;
  const auto& s = std::get<Semicircle>(g);
  return std::abs(p.z() - s.center) < s.radius;
}

/// Whether line g crosses the segment ab. Lines split the plane into two
/// convex sides, so this holds iff exactly one endpoint is inside g.
inline bool segment_intersects_geodesic(const HalfPlanePoint& a, const HalfPlanePoint& b,
                                        const Geodesic& g, double tol = kDefaultTol) {
  if (std::abs(a.z() - b.z()) < tol) throw DomainError("degenerate segment");
  if (on_geodesic(a, g, tol) || on_geodesic(b, g, tol)) throw DomainError("endpoint on line");
  return inside(a, g) != inside(b, g);
}

}  // namespace archgeom::hyp
