#include "rfvote/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace rfvote::geometry {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  // Stable sort keeps the lowest index first among equal points.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].y != points[b].y) return points[a].y < points[b].y;
    return points[a].x < points[b].x;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() <= 2) return order;

  // Monotone chain sweeping upward; keeping strict left turns walks the
  // right chain first, so the result is counterclockwise from the lowest point.
  std::vector<std::size_t> hull;
  hull.reserve(2 * order.size());
  auto build = [&](auto first, auto last, std::size_t floor) {
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= floor + 2 &&
             sgn(cross(points[hull[hull.size() - 2]], points[hull.back()], points[*it])) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
  };
  build(order.begin(), order.end(), 0);
  const std::size_t lower = hull.size() - 1;
  hull.pop_back();
  build(order.rbegin(), order.rend(), lower);
  hull.pop_back();
  return hull;
}

std::optional<Rational> segment_parameter(const Point& a, const Point& b, const Point& p) {
  if (sgn(cross(a, b, p)) != 0) return std::nullopt;
  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  Rational t = sgn(dx) != 0 ? Rational((p.x - a.x) / dx) : Rational((p.y - a.y) / dy);
  if (sgn(t) < 0 || t > 1) return std::nullopt;
  return t;
}

bool polygon_contains(std::span<const Point> polygon, const Point& p) {
  if (polygon.empty()) return false;
  if (polygon.size() == 1) return polygon[0] == p;
  if (polygon.size() == 2) return segment_parameter(polygon[0], polygon[1], p).has_value();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    if (sgn(cross(a, b, p)) < 0) return false;
  }
  return true;
}

std::array<Rational, 3> barycentric(const Point& a, const Point& b, const Point& c, const Point& p) {
  const Rational area = cross(a, b, c);
  Rational wa = cross(p, b, c) / area;
  Rational wb = cross(a, p, c) / area;
  Rational wc = 1 - wa - wb;
  return {std::move(wa), std::move(wb), std::move(wc)};
}

}  // namespace rfvote::geometry
