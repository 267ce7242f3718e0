#pragma once

#include "bck/basecondary.hpp"
#include "bck/polygon.hpp"
#include "bck/setfun.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bck {

// A strictly increasing list of nonzero integers whose pairwise differences
// have gcd 1 (so that the points affinely generate the integers).
struct MorseConfig {
    PointConfig config;  // n = 1
    std::vector<mpz_class> labels;

    std::size_t m() const { return labels.size(); }
};

// Throws InputError unless the configuration is admissible.
MorseConfig make_morse_config(const PointConfig& config);
MorseConfig make_morse_config(const std::vector<long>& points);

// Vertex set of a pyramid over the lifted configuration with apex (0,1,0).
struct Pyramid3 {
    std::vector<P3> vertices;
    bool barred = false;  // base row {(a,0,0)} included
};

// {(a,0,0)} + {(a,0,gamma(a))} + {(0,1,0)}, duplicates removed; gamma >= 0.
Pyramid3 build_delta_bar(const MorseConfig& mc, const Covector& gamma);

// {(a,0,gamma(a))} + {(0,1,0)}.
Pyramid3 build_delta(const MorseConfig& mc, const Covector& gamma);

Polygon2 fiber_polygon_of(const Pyramid3& pyramid);

// Euclidean area of the fiber polygon of the barred pyramid; gamma >= 0.
Rational area_P_bar(const MorseConfig& mc, const Covector& gamma);

// Euclidean area of the fiber polygon of the unbarred pyramid; gamma >= 0.
Rational area_P(const MorseConfig& mc, const Covector& gamma);

// area_P_bar(1, ..., 1): the slope of the iterated fiber support along the
// all-ones direction.
Rational homogeneity_level(const MorseConfig& mc);

// area_P_bar on gamma >= 0, extended to all gamma through
// h(gamma + c 1) = h(gamma) + c * homogeneity_level.
Rational iterated_fiber_support(const MorseConfig& mc, const Covector& gamma);

// How the areas enter the Morse and Maxwell support functions.
//  lattice:   Minkowski integrals and areas normalized as lengths of
//             lattice intervals: mu = 8 area_P_bar + B - 6 area_N,
//             2 m = 8 iterated + B - 4 secondary. These are the support
//             functions of the discriminant Newton polytopes.
//  euclidean: plain Euclidean areas: mu = area_P_bar + B - 3 area_N,
//             2 m = iterated + B - 4 secondary (not convex in general).
enum class Normalization { lattice, euclidean };

std::string normalization_name(Normalization n);
Normalization parse_normalization(const std::string& text);

struct SupportSummands {
    Rational fiber;        // scaled fiber-polygon term
    Rational basecondary;  // basecondary function of -gcd
    Rational secondary;    // scaled area_N (Morse) or secondary support (Maxwell) term, signed
    Rational total;        // Morse: sum; Maxwell: sum / 2
};

SupportSummands morse_summands(const MorseConfig& mc, const Covector& gamma,
                               Normalization norm = Normalization::lattice);
Rational morse_support(const MorseConfig& mc, const Covector& gamma, Normalization norm = Normalization::lattice);

SupportSummands maxwell_summands(const MorseConfig& mc, const Covector& gamma,
                                 Normalization norm = Normalization::lattice);
Rational maxwell_support(const MorseConfig& mc, const Covector& gamma, Normalization norm = Normalization::lattice);

enum class MorseVariant { morse, maxwell };

std::string variant_name(MorseVariant v);
MorseVariant parse_variant(const std::string& text);

// Gradients of the Morse (or Maxwell) support function at a nonnegative
// shift of every secondary-cone witness plus `extra_samples` seeded random
// nonnegative covectors, deduplicated, sorted lexicographically, certified.
PiecewiseLinearRep morse_polytope(const MorseConfig& mc, MorseVariant variant,
                                  Normalization norm = Normalization::lattice, int extra_samples = 32,
                                  std::uint64_t seed = 1);

}  // namespace bck
