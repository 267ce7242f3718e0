#pragma once

#include "bck/geometry.hpp"
#include "bck/secondary.hpp"
#include "bck/setfun.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace bck {

// gamma - L o A is maximal exactly on n+1 affinely independent points.
struct SimplicialSupport {
    Vec linear;
    Rational max_value;
    IndexList maximizers;  // ascending
    Vec values;            // gamma - L o A
    bool generic = false;  // values off the maximizers pairwise distinct
};

// gamma - L o A is maximal exactly on n+2 points spanning affinely.
struct CircuitalSupport {
    Vec linear;
    Rational max_value;
    IndexList maximizers;  // ascending
    Vec values;
    CircuitData circuit;   // positions refer to `maximizers`
};

// Arrangement of the ground set: the `head` leading entries are the
// maximizers in their required order, the rest strictly descending by value.
struct OrderedSupport {
    IndexList tuple;
    std::size_t head = 0;
};

std::vector<SimplicialSupport> enumerate_simplicial(const PointConfig& config, const Covector& gamma);

std::vector<CircuitalSupport> enumerate_circuital(const PointConfig& config, const Covector& gamma);

// The induced subdivision is a triangulation and every simplicial support is
// generic (which also rules out circuital supports).
bool is_generic(const PointConfig& config, const Covector& gamma);

// Maximizers first, ascending, with the last two swapped when needed for a
// positive oriented volume; tail descending.
OrderedSupport order_simplicial(const PointConfig& config, const Covector& gamma, const SimplicialSupport& s);

// The two alternating sums of n-dimensional oriented volumes over the first
// n+2 entries of an ordered circuit, next to the volume of its hull.
struct CircuitIdentity {
    Rational volume;
    Rational positive_sum;  // sum_{i <= p} (-1)^i <.. without i ..>
    Rational negative_sum;  // sum_{p < i <= p+q} (-1)^(i+1) <.. without i ..>
    bool holds() const { return positive_sum == volume && negative_sum == volume; }
};

CircuitIdentity circuit_identity(const std::vector<Point>& ordered_points, std::size_t p, std::size_t q);

// Positive side, negative side, zero-coefficient members, then the tail,
// adjusted so that both alternating sums equal the hull volume.
OrderedSupport order_circuital(const PointConfig& config, const Covector& gamma, const CircuitalSupport& c);

// Sum over the cells of the induced subdivision of
// Vol(cell) * sum_{k >= 2} (c_k - c_1) (F({v >= c_k}) - F({v >= c_{k-1}})),
// where v = gamma - L o A on the cell and c_1 > c_2 > ... are its values.
// Valid for every gamma.
Rational eval_basecondary_general(const PointConfig& config, const SetFunction& f, const Covector& gamma);

struct ExpansionTerm {
    IndexList simplex;     // the n+1 head entries followed by the i-th entry
    Subset before = 0;     // first i-1 entries of the ordering
    Subset after = 0;      // first i entries
    Rational f_difference; // F(before) - F(after)
    Rational volume;       // signed (n+1)-volume of the lifted simplex
};

// Nonzero summands of the simplicial expansion (generic gamma only).
std::vector<ExpansionTerm> expansion_terms(const PointConfig& config, const SetFunction& f, const Covector& gamma);

// Sum of the simplicial expansion; requires generic gamma.
Rational eval_basecondary_generic(const PointConfig& config, const SetFunction& f, const Covector& gamma);

using PLFunction = std::function<Rational(const Covector&)>;

// Normalized second difference (h(w + eps u) + h(w - eps u) - 2 h(w)) / eps
// across a wall, with eps halved until both offsets induce the wall's two
// subdivisions and the value is stable over consecutive halvings.
Rational wall_defect(const PointConfig& config, const PLFunction& h, const Wall& wall);

Rational wall_defect_numeric(const PointConfig& config, const SetFunction& f, const Wall& wall);

// (|vol of the lifted circuit at witness + direction|) times
// sum_{k in J0} F(I\k) - (|J0|-1) F(I) - F(ground set), I the circuit.
Rational wall_defect_symbolic(const PointConfig& config, const SetFunction& f, const Wall& wall);

// Walls crossed by the segments between pairs of cone witnesses, located
// exactly (the lifted-point determinants are affine along a segment).
std::vector<Wall> discover_walls(const PointConfig& config, const std::vector<Cone>& cones);

struct ConvexifierResult {
    Rational value;
    bool sampled = false;  // lower bound over discovered walls (n >= 2)
    std::size_t walls = 0;
};

ConvexifierResult min_convexifier(const PointConfig& config, const SetFunction& f, int samples = 2000,
                                  std::uint64_t seed = 1);

// Exact gradient of a positively homogeneous piecewise-linear function at a
// point of linearity: forward and backward difference quotients must agree
// and be stable under halving (steps rejected by `admissible` are skipped);
// Euler's identity is verified afterwards.
Vec pl_gradient(const PLFunction& h, const Covector& at,
                const std::function<bool(const Covector&)>& admissible = {});

Vec gradient_on_cone(const PointConfig& config, const SetFunction& f, const Covector& witness);

struct PLEntry {
    Covector witness;
    Vec gradient;
};

struct PiecewiseLinearRep {
    std::vector<PLEntry> entries;
    bool certified = false;
    // Failing pair: entry `failure_j`'s witness sees a larger value from
    // entry `failure_k`'s gradient than from its own.
    std::optional<std::pair<std::size_t, std::size_t>> failure;

    std::vector<Vec> vertices() const;
};

struct CertificateResult {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> failure;
};

// <g_j, w_j> >= <g_k, w_j> for all pairs (j, k).
CertificateResult convexity_certificate(const PiecewiseLinearRep& rep);

// Gradients of h at the given witnesses, deduplicated, then certified.
PiecewiseLinearRep build_representation(const PLFunction& h, const std::vector<Covector>& witnesses);

PiecewiseLinearRep reconstruct_polytope(const PointConfig& config, const SetFunction& f, const Rational& convexifier,
                                        int samples = 2000, std::uint64_t seed = 1);

}  // namespace bck
