#pragma once

#include <array>
#include <vector>

#include "charvar/multipoly.hpp"

namespace charvar {

using LatticePoint = std::array<int, 2>;

/// Convex hull of a bivariate support, counterclockwise from the
/// lexicographically smallest vertex, with no three consecutive vertices collinear.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;

  bool has_vertex(const LatticePoint& pt) const;
  /// True when pt lies inside or on the boundary.
  bool contains(const LatticePoint& pt) const;
};

/// Throws UnsupportedInput unless p has exactly two variables and no negative
/// exponents, and UndefinedOperation for the zero polynomial.
NewtonPolygon newton_polygon(const MultiPoly& p);

/// Hull of an arbitrary point set (Andrew's monotone chain).
NewtonPolygon convex_hull(std::vector<LatticePoint> points);

}  // namespace charvar
