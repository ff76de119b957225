#include <gtest/gtest.h>

#include <vector>

#include "rfvote/geometry.hpp"

namespace rfvote::geometry {
namespace {

TEST(ConvexHull, CounterclockwiseFromLowest) {
  const std::vector<Point> pts{{1, 1}, {0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 0}, {0, 1}, {1, 0}};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 4u);
  EXPECT_EQ(pts[hull[0]].x, 0);
  EXPECT_EQ(pts[hull[0]].y, 0);
  EXPECT_EQ(pts[hull[1]].x, 1);
  EXPECT_EQ(pts[hull[1]].y, 0);
  EXPECT_EQ(pts[hull[2]].x, 1);
  EXPECT_EQ(pts[hull[2]].y, 1);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = pts[hull[i]];
    const auto& b = pts[hull[(i + 1) % hull.size()]];
    const auto& c = pts[hull[(i + 2) % hull.size()]];
    EXPECT_GT(sgn(cross(a, b, c)), 0);
  }
}

TEST(ConvexHull, DropsCollinear) {
  const std::vector<Point> pts{{0, 0}, {Rational(1, 2), 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(convex_hull(pts).size(), 3u);
}

TEST(ConvexHull, Degenerate) {
  const std::vector<Point> one{{1, 2}, {1, 2}};
  EXPECT_EQ(convex_hull(one).size(), 1u);
  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(convex_hull(line).size(), 2u);
}

TEST(PolygonContains, BoundaryInclusive) {
  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(polygon_contains(sq, {Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(polygon_contains(sq, {1, Rational(1, 3)}));
  EXPECT_TRUE(polygon_contains(sq, {0, 0}));
  EXPECT_FALSE(polygon_contains(sq, {Rational(-1, 100), Rational(1, 2)}));
  const std::vector<Point> seg{{0, 0}, {1, 1}};
  EXPECT_TRUE(polygon_contains(seg, {Rational(1, 3), Rational(1, 3)}));
  EXPECT_FALSE(polygon_contains(seg, {Rational(1, 3), Rational(1, 4)}));
  EXPECT_FALSE(polygon_contains(seg, {2, 2}));
}

TEST(Barycentric, ExactWeights) {
  const auto w = barycentric({0, 0}, {1, 0}, {0, 1}, {Rational(1, 4), Rational(1, 2)});
  EXPECT_EQ(w[0], Rational(1, 4));
  EXPECT_EQ(w[1], Rational(1, 4));
  EXPECT_EQ(w[2], Rational(1, 2));
}

TEST(SegmentParameter, OnAndOff) {
  EXPECT_EQ(segment_parameter({0, 0}, {2, 2}, {Rational(1, 2), Rational(1, 2)}), Rational(1, 4));
  EXPECT_FALSE(segment_parameter({0, 0}, {2, 2}, {1, 0}).has_value());
  EXPECT_FALSE(segment_parameter({0, 0}, {2, 2}, {3, 3}).has_value());
}

}  // namespace
}  // namespace rfvote::geometry
