#pragma once

#include "bck/geometry.hpp"
#include "bck/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bck {

using Covector = Vec;

// Cells of a regular subdivision as ascending index lists, sorted.
struct Subdivision {
    std::vector<IndexList> cells;

    bool is_triangulation(int n) const;
    // Union of all cells, ascending.
    IndexList vertices() const;
    bool operator==(const Subdivision& other) const { return cells == other.cells; }
    bool operator<(const Subdivision& other) const { return cells < other.cells; }
};

// Upper-hull cells of the lifted points (A(i), gamma(i)).
Subdivision regular_subdivision(const PointConfig& config, const Covector& gamma);

// gamma lies in the interior of a full-dimensional secondary cone and no
// tail ties occur: the induced subdivision is a triangulation and, for every
// cell, the values of gamma - L o A off the cell are pairwise distinct.
bool is_generic_heights(const PointConfig& config, const Covector& gamma);

// One-dimensional triangulation whose vertex set is `vertices`.
Subdivision chain_subdivision(const PointConfig& config, IndexList vertices);

// All 2^(m-2) triangulations of a one-dimensional configuration, ordered by
// vertex count, then lexicographically by vertex set.
std::vector<Subdivision> enumerate_triangulations_1d(const PointConfig& config);

// phi_T(i) = total lattice volume of the cells of t containing i.
Vec gkz_vector(const PointConfig& config, const Subdivision& t);

// Support function of the secondary polytope: sum over the cells of the
// induced subdivision of Vol(simplex) * (sum of heights of its vertices),
// taken over a triangulation refining each cell.
Rational secondary_support(const PointConfig& config, const Covector& gamma);

// Euclidean area of conv({(a, 0)} and {(a, gamma(a))}) for n = 1, gamma >= 0.
Rational area_N(const PointConfig& config, const Covector& gamma);

// A generic covector inducing the one-dimensional triangulation t.
Covector cone_witness(const PointConfig& config, const Subdivision& t);

struct Wall {
    Subdivision left;         // induced by witness + eps * direction
    Subdivision right;        // induced by witness - eps * direction
    Covector witness;         // on the wall: induces the common coarsening
    Covector direction;       // transverse
    IndexList circuit_members;  // ascending ground-set indices of the flip circuit
    CircuitData circuit;      // positions refer to circuit_members
};

// Walls between T and T minus one interior vertex, for every triangulation T.
std::vector<Wall> enumerate_walls_1d(const PointConfig& config);

struct Cone {
    Subdivision subdivision;
    Covector witness;
};

// Uniformly drawn rational heights with |numerator| <= bound and
// 1 <= denominator <= bound.
Covector random_heights(std::size_t m, std::mt19937_64& rng, long bound);

// Distinct triangulations (with generic witnesses) induced by seeded random
// heights, sorted by subdivision.
std::vector<Cone> discover_cones_random(const PointConfig& config, int samples, std::uint64_t seed,
                                        long bound = 10000);

// Witnesses for every full-dimensional secondary cone: exact enumeration for
// n = 1, random discovery otherwise.
std::vector<Cone> secondary_cones(const PointConfig& config, int samples, std::uint64_t seed);

}  // namespace bck
