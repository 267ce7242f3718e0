#pragma once

#include "bck/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bck {

// Max-plus Laurent polynomial x -> max_i (coefficients[i] + support[i] * x).
struct TropicalPolynomial {
    std::vector<long> support;  // strictly increasing
    Vec coefficients;

    std::size_t m() const { return support.size(); }
    Rational term(std::size_t i, const Rational& x) const { return coefficients[i] + support[i] * x; }
    Rational value(const Rational& x) const;
};

// Throws InputError unless m >= 2, sizes agree and the support is strictly
// increasing.
TropicalPolynomial make_tropical(std::vector<long> support, Vec coefficients);

using TermPair = std::pair<int, int>;  // 0-based term positions, first < second

struct CriticalPoint {
    Rational location;
    Rational value;                 // maximum of all terms at the location
    TermPair max_pair;              // the two envelope terms meeting here
    std::vector<TermPair> tie_pairs;  // all pairs of terms with equal values here
    int terms_at_max = 0;
    bool degenerate = false;        // at least two tie pairs
};

// Breakpoints of the upper envelope, ascending.
std::vector<CriticalPoint> critical_points(const TropicalPolynomial& p);

// Some point has three or more terms achieving the maximum.
bool has_degenerate_root(const TropicalPolynomial& p);

constexpr const char* kReasonCoinciding = "coinciding_critical_values";
constexpr const char* kReasonDegenerate = "degenerate_critical_point";

struct MorseWitness {
    std::string reason;
    std::vector<std::size_t> points;  // indices into the critical point list
};

struct MorseReport {
    bool morse = true;
    std::vector<CriticalPoint> points;
    std::vector<MorseWitness> witnesses;  // coinciding values first, then degenerate points
};

MorseReport is_morse(const TropicalPolynomial& p);

struct SampleReport {
    int samples = 0;
    int morse = 0;
    Rational fraction;
    std::vector<std::pair<Vec, std::string>> witnesses;  // first non-Morse draws with their reason
};

// Classifies `samples` seeded random coefficient vectors (numerators in
// [-bound, bound], denominators in [1, bound]).
SampleReport sample_morse_fraction(const std::vector<long>& support, int samples, std::uint64_t seed,
                                   long bound = 1000, std::size_t max_witnesses = 10);

}  // namespace bck
