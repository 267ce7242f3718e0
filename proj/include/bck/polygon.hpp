#pragma once

#include "bck/rational.hpp"

#include <array>
#include <vector>

namespace bck {

using P2 = std::array<Rational, 2>;
using P3 = std::array<Rational, 3>;

// Convex polygon in canonical form: counterclockwise, starting at the
// lexicographically smallest vertex, no three consecutive vertices
// collinear. A segment has two vertices (min, max), a point one, the empty
// set none.
struct Polygon2 {
    std::vector<P2> vertices;

    bool empty() const { return vertices.empty(); }
    bool operator==(const Polygon2& other) const { return vertices == other.vertices; }
};

Polygon2 convex_hull(std::vector<P2> points);

// Euclidean area (0 for segments and points).
Rational area(const Polygon2& poly);

Polygon2 scale(const Polygon2& poly, const Rational& s);

Polygon2 translate(const Polygon2& poly, const P2& offset);

// Exact Minkowski sum by merging edge sequences ordered by angle.
Polygon2 minkowski_sum(const Polygon2& a, const Polygon2& b);

// max over vertices of <direction, v>; requires a nonempty polygon.
Rational support(const Polygon2& poly, const P2& direction);

// {(y, z) : (xi, y, z) in conv(vertices)}, as the hull of the cuts of all
// vertex-pair segments at first coordinate xi. Empty outside the range.
Polygon2 fiber_slice(const std::vector<P3>& vertices, const Rational& xi);

// Minkowski integral of the fibers of conv(vertices) over the first-axis
// projection: on each cell [x0, x1] between consecutive distinct first
// coordinates the fiber varies Minkowski-linearly, contributing
// ((x1-x0)/2) fiber(x0) + ((x1-x0)/2) fiber(x1).
Polygon2 fiber_polygon(const std::vector<P3>& vertices);

}  // namespace bck
