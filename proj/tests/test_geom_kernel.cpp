#include <gmpxx.h>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hullseq/geometry.hpp"

using namespace hullseq;

namespace {

// Rational orientation, independent of the expansion arithmetic.
int rational_orient(const Point& p, const Point& q, const Point& r) {
  const mpq_class px(p.x), py(p.y), qx(q.x), qy(q.y), rx(r.x), ry(r.y);
  const mpq_class det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return sgn(det);
}

int rational_distance_sign(const Point& a, const Point& b, double r) {
  const mpq_class dx = mpq_class(a.x) - mpq_class(b.x), dy = mpq_class(a.y) - mpq_class(b.y), rr(r);
  return sgn(dx * dx + dy * dy - rr * rr);
}

}  // namespace

TEST(Orient, BasicTriangles) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), Orientation::kCounterClockwise);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), Orientation::kCollinear);
  EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), Orientation::kClockwise);
}

TEST(Orient, AntisymmetricAndCyclic) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
    const int a = static_cast<int>(orient(p, q, r));
    EXPECT_EQ(a, -static_cast<int>(orient(p, r, q)));
    EXPECT_EQ(a, static_cast<int>(orient(q, r, p)));
    EXPECT_EQ(a, static_cast<int>(orient(r, p, q)));
  }
}

TEST(Orient, MatchesRationalOracleOnNearDegenerateInputs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> ulp(-4, 4);
  for (int i = 0; i < 20000; ++i) {
    // Points on a line, nudged by a few ulps: the classic failure case.
    const Point p{u(rng) * 1e3, u(rng) * 1e3};
    const Point d{u(rng) - 0.5, u(rng) - 0.5};
    const double s = u(rng) * 10, t = u(rng) * 10;
    Point q = p + d * s, r = p + d * t;
    for (int k = ulp(rng); k != 0; k += k > 0 ? -1 : 1) r.x = std::nextafter(r.x, k > 0 ? INFINITY : -INFINITY);
    ASSERT_EQ(static_cast<int>(orient(p, q, r)), rational_orient(p, q, r));
  }
}

TEST(Orient, ExtremeMagnitudes) {
  const Point p{1e-300, 1e-300}, q{2e-300, 2e-300}, r{3e-300, 3.0000000000000004e-300};
  EXPECT_EQ(static_cast<int>(orient(p, q, r)), rational_orient(p, q, r));
  const Point a{1e150, -1e150}, b{-1e150, 1e150}, c{0.0, 1e-150};
  EXPECT_EQ(static_cast<int>(orient(a, b, c)), rational_orient(a, b, c));
}

TEST(NwDist, Examples) {
  EXPECT_DOUBLE_EQ(nw_dist({1, 0}, {0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(nw_dist({3, 7}, {3, 7}), 0.0);
  EXPECT_DOUBLE_EQ(nw_dist({0, 2}, {1, 0}), -3.0);
  EXPECT_EQ(compare_nw_dist({1, 0}, {0, 0}, 1.0), 0);
  EXPECT_EQ(compare_nw_dist({0, 2}, {1, 0}, -3.0), 0);
  // The doubles nearest 0.1 and 0.2 sum to slightly more than the double 0.3.
  EXPECT_EQ(compare_nw_dist({0.1, 0}, {0, 0.2}, 0.3), 1);
}

TEST(DiskContains, Examples) {
  EXPECT_TRUE(disk_contains({0, {0, 0}, 1}, {0, 1}));
  EXPECT_FALSE(disk_contains({0, {0, 0}, 1}, {1, 1}));
  EXPECT_TRUE(disk_contains({0, {4, 0}, 1}, {4, 0.5}));
}

TEST(DiskContains, MatchesRationalOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20000; ++i) {
    const Disk d{0, {u(rng), u(rng)}, 0.5 + std::fabs(u(rng))};
    const double t = u(rng) * 3.14159;
    Point p = d.center + Point{std::cos(t), std::sin(t)} * d.radius;  // on the circle up to rounding
    ASSERT_EQ(disk_contains(d, p), rational_distance_sign(p, d.center, d.radius) <= 0);
  }
}

TEST(Projection, Examples) {
  EXPECT_DOUBLE_EQ(project_onto_direction({3, 4}, {1, 0}), 3.0);
  EXPECT_DOUBLE_EQ(project_onto_direction({3, 4}, {0, 1}), 4.0);
  EXPECT_NEAR(project_onto_direction({1, 1}, {1, 1}), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(project_onto_direction({1, 1}, {0, 0}), Error);
}

TEST(ConvexRegionTest, TriangleContainment) {
  const auto tri = ConvexRegion::polygon({{-1, -1}, {1, -1}, {0, 1}});
  EXPECT_EQ(point_in_convex_region({0, 0}, tri), Containment::kInside);
  EXPECT_EQ(point_in_convex_region({1, -1}, tri), Containment::kBoundary);
  EXPECT_EQ(point_in_convex_region({0, -1}, tri), Containment::kBoundary);
  EXPECT_EQ(point_in_convex_region({5, 5}, tri), Containment::kOutside);
}

TEST(ConvexRegionTest, DiskRegion) {
  const auto r = ConvexRegion::disk({0, {0, 0}, 1});
  EXPECT_EQ(point_in_convex_region({0.5, 0}, r), Containment::kInside);
  EXPECT_EQ(point_in_convex_region({0, 1}, r), Containment::kBoundary);
  EXPECT_EQ(point_in_convex_region({1, 1}, r), Containment::kOutside);
}

TEST(ConvexRegionTest, RejectsMalformedRegions) {
  EXPECT_THROW(point_in_convex_region({0, 0}, ConvexRegion{}), Error);
  const auto reflex = ConvexRegion::polygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}});
  EXPECT_THROW(point_in_convex_region({1, 1}, reflex), Error);
}

TEST(Reach, SegmentAndRay) {
  EXPECT_TRUE(segment_within({0, 0}, {4, 0}, {2, 1}, 1.0));
  EXPECT_FALSE(segment_within({0, 0}, {4, 0}, {2, 1.0000001}, 1.0));
  EXPECT_TRUE(segment_within({0, 0}, {4, 0}, {5, 0}, 1.0));
  EXPECT_FALSE(segment_within({0, 0}, {4, 0}, {5.5, 0}, 1.0));
  EXPECT_TRUE(ray_within({0, 0}, {1, 0}, {100, 1}, 1.0));
  EXPECT_FALSE(ray_within({0, 0}, {1, 0}, {-1.5, 0}, 1.0));
  EXPECT_TRUE(segment_within({0, 0}, {4, 0}, {2, 3}, 1.0, 2.0));
}

TEST(DisksIntersect, TouchingCounts) {
  EXPECT_TRUE(disks_intersect({0, {0, 0}, 1}, {1, {2, 0}, 1}));
  EXPECT_FALSE(disks_intersect({0, {0, 0}, 1}, {1, {2.0000001, 0}, 1}));
}
