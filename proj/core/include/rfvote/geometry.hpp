#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rfvote/rational.hpp"

namespace rfvote::geometry {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

/// z-component of (b - a) x (c - a); positive for a counterclockwise turn.
Rational cross(const Point& a, const Point& b, const Point& c);

/// Indices of the strictly convex hull of `points`, counterclockwise,
/// starting from the lowest point (smallest y, then smallest x). Duplicate
/// and collinear boundary points are dropped; when several inputs coincide
/// the lowest index is kept. Degenerate inputs yield 1 (a point) or 2
/// (a segment) indices.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

/// Membership in the polygon given by counterclockwise strictly convex
/// vertices (boundary inclusive). Also handles 1- and 2-vertex polygons.
bool polygon_contains(std::span<const Point> polygon, const Point& p);

/// Barycentric weights of p in triangle (a, b, c). Requires a
/// non-degenerate triangle; weights may be negative when p is outside.
std::array<Rational, 3> barycentric(const Point& a, const Point& b, const Point& c, const Point& p);

/// Weight t on `b` such that p = (1 - t) a + t b, if p lies on segment [a, b].
std::optional<Rational> segment_parameter(const Point& a, const Point& b, const Point& p);

}  // namespace rfvote::geometry
