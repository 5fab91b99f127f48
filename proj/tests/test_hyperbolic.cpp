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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "archgeom/hyperbolic.hpp"
#include "test_support.hpp"

namespace archgeom::hyp {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Cross-ratio distance on the imaginary diameter of the disc: the line through
// i*alpha and i*beta meets the absolute at C = -i and D = i, and along a
// diameter arc lengths are plain differences.
double cross_ratio_distance_on_diameter(double alpha, double beta) {
  const double ca = 1.0 + alpha, cb = 1.0 + beta;
  const double ad = 1.0 - alpha, bd = 1.0 - beta;
  return std::abs(std::log((cb / ca) / (bd / ad)));
}

TEST(HalfPlanePoint, RejectsPointsOffTheModel) {
  EXPECT_THROW(HalfPlanePoint(0.0, 0.0), DomainError);
  EXPECT_THROW(HalfPlanePoint(1.0, -2.0), DomainError);
  EXPECT_THROW(HalfPlanePoint(NAN, 1.0), DomainError);
  EXPECT_THROW(HalfPlanePoint(0.0, INFINITY), DomainError);
  EXPECT_NO_THROW(HalfPlanePoint(-5.0, 1e-12));
}

TEST(DiscPoint, RejectsPointsOffTheModel) {
  EXPECT_THROW(DiscPoint(1.0, 0.0), DomainError);
  EXPECT_THROW(DiscPoint(0.8, 0.8), DomainError);
  EXPECT_THROW(DiscPoint(NAN, 0.0), DomainError);
  EXPECT_NO_THROW(DiscPoint(0.0, -0.999));
}

TEST(DistHalfPlane, ClosedForms) {
  // cosh d = 1 + 1/4 = cosh(ln 2)
  EXPECT_NEAR(dist_half_plane({0, 1}, {0, 2}), std::log(2.0), 1e-15);
  // cosh d = 1/v with v = 1/sqrt 2
  EXPECT_NEAR(dist_half_plane({0, 1}, {kInvSqrt2, kInvSqrt2}), std::acosh(sqrt2), 1e-15);
  EXPECT_EQ(dist_half_plane({3, 4}, {3, 4}), 0.0);
}

TEST(DistHalfPlane, AgreesWithTheCoshForm) {
  test::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = test::random_half_plane_point(rng);
    const auto q = test::random_half_plane_point(rng);
    EXPECT_NEAR(std::cosh(dist_half_plane(p, q)), cosh_dist_half_plane(p, q),
                1e-12 * cosh_dist_half_plane(p, q));
  }
}

TEST(DistHalfPlaneAngleForm, VerticalRayLimitAndScaling) {
  EXPECT_NEAR(dist_half_plane_angle_form({0, 1}, {0, 2}), std::log(2.0), 1e-15);
  EXPECT_NEAR(dist_half_plane_angle_form({0, 1}, {0, 2}, {2.0, kDefaultTol}), 2.0 * std::log(2.0), 1e-15);
  EXPECT_EQ(dist_half_plane_angle_form({1, 1}, {1, 1}), 0.0);
}

TEST(DistHalfPlaneAngleForm, MatchesDistanceOnSemicircles) {
  // i and e^{i pi/4} on the unit semicircle.
  EXPECT_NEAR(dist_half_plane_angle_form({0, 1}, {kInvSqrt2, kInvSqrt2}), std::acosh(sqrt2), 1e-12);

  test::Rng rng(5);
  std::uniform_real_distribution<double> center(-3.0, 3.0), radius(0.2, 4.0), angle(0.05, pi - 0.05);
  for (int i = 0; i < 1000; ++i) {
    const double c = center(rng), r = radius(rng);
    const double t1 = angle(rng), t2 = angle(rng);
    const HalfPlanePoint p(c + r * std::cos(t1), r * std::sin(t1));
    const HalfPlanePoint q(c + r * std::cos(t2), r * std::sin(t2));
    if (std::abs(p.re() - q.re()) < 1e-6) continue;
    const double d = dist_half_plane(p, q);
    EXPECT_NEAR(dist_half_plane_angle_form(p, q), d, 1e-9 * std::max(1.0, d));
  }
}

TEST(DistDisc, ClosedForms) {
  EXPECT_NEAR(dist_disc({0, 0}, {0, 0.5}), std::log(3.0), 1e-15);
  // ln[(1 + b)(1 - a) / ((1 - b)(1 + a))] with a = 0.25, b = 0.75 gives ln 4.2
  EXPECT_NEAR(dist_disc({0, 0.25}, {0, 0.75}), std::log(4.2), 1e-14);
  EXPECT_EQ(dist_disc({0.3, -0.2}, {0.3, -0.2}), 0.0);
}

TEST(DistDisc, MatchesCrossRatioOnDiameters) {
  test::Rng rng(3);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng);
    EXPECT_NEAR(dist_disc({0, a}, {0, b}), cross_ratio_distance_on_diameter(a, b), 1e-9);
  }
}

TEST(Maps, FixedValues) {
  EXPECT_NEAR(std::abs(to_disc({0, 1}).z()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_disc({0, 2}).z() - Complex(1.0 / 3.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_disc({1, 1}).z() - Complex(0.2, -0.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_half_plane({0, 0}).z() - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_half_plane({1.0 / 3.0, 0}).z() - Complex(0, 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_half_plane({-0.5, 0}).z() - Complex(0, 1.0 / 3.0)), 0.0, 1e-15);
}

TEST(Maps, IsometryAndRoundTrip) {
  test::Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto p = test::random_half_plane_point(rng);
    const auto q = test::random_half_plane_point(rng);
    EXPECT_LT(std::abs(to_disc(p).z()), 1.0);
    const double dh = dist_half_plane(p, q);
    EXPECT_NEAR(dist_disc(to_disc(p), to_disc(q)), dh, 1e-9 * std::max(1.0, dh));
    EXPECT_NEAR(std::abs(to_half_plane(to_disc(p)).z() - p.z()), 0.0, 1e-9 * std::max(1.0, std::abs(p.z())));
  }
}

TEST(Metric, AxiomsOnRandomTriples) {
  test::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto a = test::random_half_plane_point(rng);
    const auto b = test::random_half_plane_point(rng);
    const auto c = test::random_half_plane_point(rng);
    const double ab = dist_half_plane(a, b), bc = dist_half_plane(b, c), ac = dist_half_plane(a, c);
    EXPECT_GE(ab, 0.0);
    EXPECT_DOUBLE_EQ(ab, dist_half_plane(b, a));
    EXPECT_LE(ac, ab + bc + 1e-9);

    const auto da = to_disc(a), db = to_disc(b), dc = to_disc(c);
    EXPECT_NEAR(dist_disc(da, db), dist_disc(db, da), 1e-12 * std::max(1.0, ab));
    EXPECT_LE(dist_disc(da, dc), dist_disc(da, db) + dist_disc(db, dc) + 1e-9);
  }
}

TEST(GeodesicThrough, Examples) {
  auto g = geodesic_through({-1, 1}, {1, 1});
  ASSERT_TRUE(std::holds_alternative<Semicircle>(g));
  EXPECT_NEAR(std::get<Semicircle>(g).center, 0.0, 1e-15);
  EXPECT_NEAR(std::get<Semicircle>(g).radius, sqrt2, 1e-15);

  g = geodesic_through({0, 1}, {0, 2});
  ASSERT_TRUE(std::holds_alternative<VerticalRay>(g));
  EXPECT_EQ(std::get<VerticalRay>(g).foot, 0.0);

  g = geodesic_through({1, 1}, {3, 1});
  ASSERT_TRUE(std::holds_alternative<Semicircle>(g));
  EXPECT_NEAR(std::get<Semicircle>(g).center, 2.0, 1e-15);
  EXPECT_NEAR(std::get<Semicircle>(g).radius, sqrt2, 1e-15);

  EXPECT_THROW(geodesic_through({1, 1}, {1, 1}), DomainError);
}

TEST(GeodesicThrough, BothPointsLieOnTheResult) {
  test::Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    const auto p = test::random_half_plane_point(rng);
    const auto q = test::random_half_plane_point(rng);
    const auto g = geodesic_through(p, q);
    EXPECT_TRUE(on_geodesic(p, g, 1e-9));
    EXPECT_TRUE(on_geodesic(q, g, 1e-9));
  }
}

TEST(OnGeodesic, Examples) {
  EXPECT_TRUE(on_geodesic({0, 5}, VerticalRay{0}));
  EXPECT_TRUE(on_geodesic({1, 1}, Semicircle{0, sqrt2}));
  EXPECT_FALSE(on_geodesic({1, 1}, Semicircle{0, 1}));
}

TEST(Between, Examples) {
  EXPECT_TRUE(between({0, sqrt2}, {-1, 1}, {1, 1}));
  EXPECT_TRUE(between({0, 2}, {0, 1}, {0, 3}));
  EXPECT_FALSE(between({-1, 1}, {0, sqrt2}, {1, 1}));
  EXPECT_FALSE(between({0, 1}, {0, 1}, {0, 3}));  // endpoints are not strictly between
  EXPECT_THROW(between({0, 5}, {-1, 1}, {1, 1}), DomainError);
}

TEST(LimitingParallels, VerticalRay) {
  const auto [a, b] = limiting_parallels(VerticalRay{0}, {1, 1});
  ASSERT_TRUE(std::holds_alternative<Semicircle>(a));
  EXPECT_NEAR(std::get<Semicircle>(a).center, 1.0, 1e-12);
  EXPECT_NEAR(std::get<Semicircle>(a).radius, 1.0, 1e-12);
  ASSERT_TRUE(std::holds_alternative<VerticalRay>(b));
  EXPECT_NEAR(std::get<VerticalRay>(b).foot, 1.0, 1e-12);
}

TEST(LimitingParallels, Semicircle) {
  // (0 - m)^2 + 4 = (m - e)^2 for e = -1 and e = +1
  const auto [a, b] = limiting_parallels(Semicircle{0, 1}, {0, 2});
  ASSERT_TRUE(std::holds_alternative<Semicircle>(a));
  ASSERT_TRUE(std::holds_alternative<Semicircle>(b));
  EXPECT_NEAR(std::get<Semicircle>(a).center, 1.5, 1e-12);
  EXPECT_NEAR(std::get<Semicircle>(a).radius, 2.5, 1e-12);
  EXPECT_NEAR(std::get<Semicircle>(b).center, -1.5, 1e-12);
  EXPECT_NEAR(std::get<Semicircle>(b).radius, 2.5, 1e-12);
  EXPECT_THROW(limiting_parallels(Semicircle{0, 2}, {0, 2}), DomainError);
}

TEST(LimitingParallels, ReflectionSwapsThePair) {
  test::Rng rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0), r(0.3, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Semicircle g{u(rng), r(rng)};
    const auto p = test::random_half_plane_point(rng);
    if (on_geodesic(p, g, 1e-6)) continue;
    const auto [a, b] = limiting_parallels(g, p);
    const auto [ra, rb] = limiting_parallels(Semicircle{-g.center, g.radius}, {-p.re(), p.im()});
    auto mirrored = [](const Geodesic& x) -> Geodesic {
      if (const auto* ray = std::get_if<VerticalRay>(&x)) return VerticalRay{-ray->foot};
      const auto& s = std::get<Semicircle>(x);
      return Semicircle{-s.center, s.radius};
    };
    EXPECT_TRUE(test::same_geodesic(mirrored(a), rb, 1e-9));
    EXPECT_TRUE(test::same_geodesic(mirrored(b), ra, 1e-9));
  }
}

TEST(LimitingParallels, ShareExactlyOneEndpointAndPassThroughPoint) {
  test::Rng rng(37);
  std::uniform_real_distribution<double> u(-2.0, 2.0), r(0.3, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), rad = r(rng);
    const Geodesic g = i % 3 == 0 ? make_semicircle(x, rad) : Geodesic{VerticalRay{x}};
    const auto p = test::random_half_plane_point(rng);
    if (on_geodesic(p, g, 1e-6)) continue;
    const auto [a, b] = limiting_parallels(g, p);
    for (const auto& par : {a, b}) {
      EXPECT_TRUE(on_geodesic(p, par, 1e-9));
      EXPECT_EQ(test::shared_endpoints(par, g, 1e-9), 1);
    }
  }
}

TEST(LimitingParallels, NotTransitive) {
  const auto [a, b] = limiting_parallels(VerticalRay{0}, {1, 1});
  // Each parallel meets the line at one ideal point, but the two parallels
  // have no ideal point in common with each other.
  EXPECT_EQ(test::shared_endpoints(a, b, 1e-9), 0);
}

TEST(AngleAt, Examples) {
  EXPECT_NEAR(angle_at({0, 1}, VerticalRay{0}, Semicircle{0, 1}), pi / 2, 1e-15);
  EXPECT_THROW(angle_at({0, 1}, Semicircle{0, 1}, Semicircle{0, 1}), DomainError);
  EXPECT_THROW(angle_at({0, 2}, VerticalRay{0}, Semicircle{0, 1}), DomainError);

  // Semicircles symmetric about the imaginary axis meet on it; the angle with
  // the axis is the same on both sides.
  const Semicircle left{-1.0, std::sqrt(1.0 + 2.0)}, right{1.0, std::sqrt(1.0 + 2.0)};
  const HalfPlanePoint v(0.0, std::sqrt(2.0));
  EXPECT_NEAR(angle_at(v, VerticalRay{0}, left), pi - angle_at(v, VerticalRay{0}, right), 1e-12);
}

TEST(TriangleAngleSum, BelowPiForRandomTriangles) {
  test::Rng rng(41);
  int checked = 0;
  while (checked < 1000) {
    const auto t = test::random_triangle(rng);
    if (!t) continue;
    const double s = triangle_angle_sum(*t);
    EXPECT_GT(s, 0.0);
    EXPECT_LT(s, pi);
    ++checked;
  }
}

TEST(TriangleAngleSum, ApproachesPiWhenShrunk) {
  const HTriangle big({-1, 1}, {1.5, 1.2}, {0.2, 3});
  const HalfPlanePoint centre(0.2, 1.6);
  double previous = triangle_angle_sum(big);
  for (const double f : {0.5, 0.1, 0.01, 0.001}) {
    const HTriangle small(interpolate(centre, big.a(), f), interpolate(centre, big.b(), f),
                          interpolate(centre, big.c(), f));
    const double s = triangle_angle_sum(small);
    EXPECT_GT(s, previous);
    previous = s;
  }
  EXPECT_NEAR(previous, pi, 1e-5);
}

TEST(TriangleAngleSum, CevianIdentity) {
  test::Rng rng(43);
  std::uniform_real_distribution<double> t(0.05, 0.95);
  int checked = 0;
  while (checked < 1000) {
    const auto tri = test::random_triangle(rng);
    if (!tri) continue;
    const auto d = interpolate(tri->b(), tri->c(), t(rng));
    try {
      const double abd = triangle_angle_sum(HTriangle(tri->a(), tri->b(), d));
      const double acd = triangle_angle_sum(HTriangle(tri->a(), tri->c(), d));
      EXPECT_NEAR(abd + acd, triangle_angle_sum(*tri) + pi, 1e-9);
      ++checked;
    } catch (const DomainError&) {
      // sliver sub-triangle; draw again
    }
  }
}

TEST(TriangleAngleSum, DegenerateTriangleRejected) {
  EXPECT_THROW(HTriangle({-1, 1}, {1, 1}, {0, sqrt2}), DomainError);
  EXPECT_THROW(HTriangle({0, 1}, {0, 2}, {0, 3}), DomainError);
}

TEST(Pythagoras, ProofValues) {
  const auto t = pythagoras_terms(2.0, kInvSqrt2, kInvSqrt2);
  EXPECT_NEAR(t.cosh_a, 1.25, 1e-15);
  EXPECT_NEAR(t.cosh_b, sqrt2, 1e-15);
  EXPECT_NEAR(t.cosh_c, 5.0 * sqrt2 / 4.0, 1e-15);
  EXPECT_LT(t.residual, 1e-15);
}

TEST(Pythagoras, RightAngleAtC) {
  const double u = 0.6, v = 0.8;
  const HTriangle t({0, 3}, {u, v}, {0, 1});
  EXPECT_NEAR(t.angles()[2], pi / 2, 1e-12);
}

TEST(Pythagoras, NearlyDegenerate) {
  const double r = 1.0 + 1e-6;
  EXPECT_LT(pythagoras_residual(r, 1e-6, std::sqrt(1.0 - 1e-12)), 1e-12);
}

TEST(Pythagoras, RandomSweep) {
  test::Rng rng(47);
  std::uniform_real_distribution<double> rr(1.0001, 20.0), th(0.01, pi - 0.01);
  for (int i = 0; i < 1000; ++i) {
    const double r = rr(rng), a = th(rng);
    const auto t = pythagoras_terms(r, std::cos(a), std::sin(a));
    EXPECT_LT(t.residual / t.cosh_c, 1e-9);
  }
}

TEST(Pythagoras, ConstraintViolations) {
  EXPECT_THROW(pythagoras_residual(0.5, 0.6, 0.8), DomainError);
  EXPECT_THROW(pythagoras_residual(2.0, 0.6, 0.7), DomainError);
  EXPECT_THROW(pythagoras_residual(2.0, 1.0, 0.0), DomainError);
}

TEST(EuclideanLimit, DefectShrinksQuadratically) {
  double last = 0.0;
  for (const double s : {0.1, 0.05, 0.025, 0.0125}) {
    const double defect = test::euclidean_defect(s);
    if (last > 0.0) {
      EXPECT_NEAR(last / defect, 4.0, 0.5);
    }
    last = defect;
  }
}

TEST(SegmentIntersectsGeodesic, Examples) {
  const Semicircle g{0, sqrt2};
  EXPECT_TRUE(segment_intersects_geodesic({-2, 1}, {0, 1}, g));
  EXPECT_FALSE(segment_intersects_geodesic({0, 1}, {0.5, 0.5}, g));
  EXPECT_FALSE(segment_intersects_geodesic({-3, 1}, {3, 1}, g));
  EXPECT_TRUE(segment_intersects_geodesic({-1, 1}, {1, 1}, VerticalRay{0}));
  EXPECT_THROW(segment_intersects_geodesic({1, 1}, {0, 3}, g), DomainError);
}

TEST(SegmentIntersectsGeodesic, AgreesWithSampledSegment) {
  // Walk along the hyperbolic segment and look for a side change.
  test::Rng rng(53);
  std::uniform_real_distribution<double> u(-2.0, 2.0), r(0.3, 2.5);
  for (int i = 0; i < 300; ++i) {
    const auto a = test::random_half_plane_point(rng);
    const auto b = test::random_half_plane_point(rng);
    const Geodesic g = Semicircle{u(rng), r(rng)};
    if (on_geodesic(a, g, 1e-6) || on_geodesic(b, g, 1e-6)) continue;
    bool crossed = false;
    const bool start = inside(a, g);
    for (int k = 1; k <= 400 && !crossed; ++k) crossed = inside(interpolate(a, b, k / 400.0), g) != start;
    EXPECT_EQ(segment_intersects_geodesic(a, b, g), crossed);
  }
}

TEST(SegmentIntersectsGeodesic, Pasch) {
  test::Rng rng(59);
  std::uniform_real_distribution<double> u(-2.0, 2.0), r(0.3, 2.5);
  int checked = 0;
  while (checked < 1000) {
    const auto t = test::random_triangle(rng);
    if (!t) continue;
    const Geodesic g = checked % 4 == 0 ? Geodesic{VerticalRay{u(rng)}} : Geodesic{Semicircle{u(rng), r(rng)}};
    if (on_geodesic(t->a(), g, 1e-6) || on_geodesic(t->b(), g, 1e-6) || on_geodesic(t->c(), g, 1e-6)) continue;
    if (!segment_intersects_geodesic(t->a(), t->b(), g)) continue;
    const bool ac = segment_intersects_geodesic(t->a(), t->c(), g);
    const bool bc = segment_intersects_geodesic(t->b(), t->c(), g);
    EXPECT_NE(ac, bc);
    ++checked;
  }
}

}  // namespace
}  // namespace archgeom::hyp
