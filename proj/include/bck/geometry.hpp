#pragma once

#include "bck/linalg.hpp"
#include "bck/rational.hpp"

#include <vector>

namespace bck {

using Point = Vec;
using Index = int;                  // 0-based position in the ground set
using IndexList = std::vector<Index>;

// The ground set {0, ..., m-1} with its map into Q^n.
struct PointConfig {
    int n = 0;
    std::vector<Point> points;

    std::size_t m() const { return points.size(); }
    std::vector<Point> select(const IndexList& idx) const;
};

// All k-subsets of {0, ..., m-1}, ascending, in lexicographic order.
std::vector<IndexList> combinations(int m, int k);

// Throws InputError unless m > 1, every point has n coordinates and, for
// n >= 1, the points are pairwise distinct.
void validate_config(const PointConfig& config);

// det(v1 - v0, ..., vk - v0) for k+1 points in Q^k (k! times Euclidean
// volume, signed). A single point in Q^0 has volume 1.
Rational oriented_volume(const std::vector<Point>& simplex);

int affine_rank(const std::vector<Point>& points);

// Determinant-normalized volume of the convex hull in the points' ambient
// dimension d; 0 when the hull is lower-dimensional, 1 for d = 0.
Rational lattice_volume(const std::vector<Point>& points);

// Affine function x -> <linear, x> + offset.
struct AffineFunction {
    Vec linear;
    Rational offset;
};

// The affine function interpolating `heights` on d+1 affinely independent
// points of Q^d. Throws DomainError when the points are dependent.
AffineFunction affine_fit(const std::vector<Point>& points, const Vec& heights);

// A full-dimensional cell of the upper hull of the lifted points
// (p_i, h_i): the maximizer set of h - <linear, p>.
struct UpperCell {
    IndexList members;  // ascending
    Vec linear;
};

// All upper-hull cells, sorted by member list. Points lifted strictly below
// a cell's hyperplane do not belong to it.
std::vector<UpperCell> upper_hull_cells(const std::vector<Point>& points, const Vec& heights);

// A triangulation of conv(points) into full-dimensional simplices (index
// lists into `points`), obtained as a regular triangulation for
// deterministic pseudo-random heights. Requires full affine rank.
std::vector<IndexList> triangulate(const std::vector<Point>& points);

// The unique affine dependence of n+2 affinely spanning points of Q^n.
struct CircuitData {
    IndexList support;    // J0: positions with nonzero coefficient, ascending
    IndexList positive;   // ascending positions on the positive side
    IndexList negative;   // ascending positions on the negative side
    IndexList zero;       // positions with coefficient 0
    Vec positive_coeffs;  // lambda, aligned with `positive`, all > 0
    Vec negative_coeffs;  // mu, aligned with `negative`, all > 0
    IndexList ordering;   // positive, then negative, then zero

    std::size_t p() const { return positive.size(); }
    std::size_t q() const { return negative.size(); }
};

// Sides are oriented so that the positive side has fewer points (ties: the
// side containing the lowest position); scaled so that the smallest
// positive-side coefficient is 1. Throws InputError on wrong arity or rank.
CircuitData find_circuit(const std::vector<Point>& points);

}  // namespace bck
