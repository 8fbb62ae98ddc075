#include "charvar/newton.hpp"

#include <algorithm>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

bool NewtonPolygon::has_vertex(const LatticePoint& pt) const {
  return std::find(vertices.begin(), vertices.end(), pt) != vertices.end();
}

bool NewtonPolygon::contains(const LatticePoint& pt) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return vertices[0] == pt;
  if (n == 2) {
    const auto& a = vertices[0];
    const auto& b = vertices[1];
    if (cross(a, b, pt) != 0) return false;
    return std::min(a[0], b[0]) <= pt[0] && pt[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= pt[1] && pt[1] <= std::max(a[1], b[1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices[i], vertices[(i + 1) % n], pt) < 0) return false;
  }
  return true;
}

NewtonPolygon convex_hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return {points};

  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return {hull};
}

NewtonPolygon newton_polygon(const MultiPoly& p) {
  if (p.num_vars() != 2) throw UnsupportedInput("newton_polygon: need exactly two variables");
  if (p.is_zero()) throw UndefinedOperation("newton_polygon: zero polynomial has empty support");
  if (p.has_negative_exponents()) throw UnsupportedInput("newton_polygon: Laurent exponents");
  std::vector<LatticePoint> support;
  support.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) support.push_back({e[0], e[1]});
  return convex_hull(std::move(support));
}

}  // namespace charvar
