#pragma once

#include "bck/geometry.hpp"
#include "bck/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bck {

// Subsets of the ground set as bitmasks (bit i <-> element i).
using Subset = std::uint32_t;

constexpr int kMaxGroundSize = 31;
constexpr int kSubmodularityLimit = 16;
constexpr int kBasePolytopeLimit = 8;

int subset_size(Subset s);
Subset full_subset(int m);
Subset subset_of(const IndexList& elements);
IndexList elements_of(Subset s);
// Comma-joined ascending 1-based indices ("" for the empty set).
std::string subset_to_string(Subset s);
// Inverse of subset_to_string; throws InputError on malformed input.
Subset parse_subset(const std::string& text, int m);

enum class SetFunctionKind {
    table,                // explicit values with a default for unlisted subsets
    neg_gcd,              // -gcd of the integer labels, 0 on the empty set
    neg_indicator_full,   // -1 on the full ground set, 0 elsewhere
    neg_point_indicator,  // -1 on subsets containing a fixed element, 0 elsewhere
    matrix_rank,          // rank of the selected columns
    neg_card_ratio,       // -|X| / m
};

std::string kind_name(SetFunctionKind kind);

struct SetFunction {
    SetFunctionKind kind = SetFunctionKind::table;
    int m = 0;
    // Smallest subset size on which F is defined (the empty set is always
    // allowed when min_size is 0).
    int min_size = 0;

    Rational default_value;                 // table
    std::map<Subset, Rational> values;      // table
    std::vector<mpz_class> labels;          // neg_gcd
    std::vector<Vec> columns;               // matrix_rank
    Index point = 0;                        // neg_point_indicator
};

SetFunction make_table(int m, const Rational& default_value, std::map<Subset, Rational> values);
SetFunction make_neg_gcd(std::vector<mpz_class> labels);
SetFunction make_neg_indicator_full(int m);
SetFunction make_neg_point_indicator(int m, Index point);
SetFunction make_matrix_rank(std::vector<Vec> columns);
SetFunction make_neg_card_ratio(int m);

// Labels of a one-dimensional configuration with integer coordinates.
std::vector<mpz_class> integer_labels(const PointConfig& config);

// Throws DomainError for subsets below min_size.
Rational evaluate(const SetFunction& f, Subset s);

struct SubmodularityReport {
    bool holds = true;
    // Violating witness: F(X+x1) + F(X+x2) < F(X) + F(X+x1+x2).
    Subset x = 0;
    Index x1 = 0;
    Index x2 = 0;
    Rational f_x1, f_x2, f_x, f_x12;
};

// Exhaustive element-pair check; requires min_size == 0.
SubmodularityReport is_submodular(const SetFunction& f);

// Same inequality restricted to |X| >= n (equivalently, pairs of sets whose
// intersection has at least n elements).
SubmodularityReport is_submodular_above(const SetFunction& f, int n);

struct CircuitConditionEntry {
    Subset j = 0;
    Subset support = 0;
    Rational value;
};

struct CircuitConditionReport {
    bool pass = true;
    std::vector<CircuitConditionEntry> entries;
};

// For every (n+2)-subset J whose points span affinely, evaluates
// sum_{k in J0} F(J\k) - (|J0|-1) F(J) - F(ground set), with J0 the support
// of the circuit of A(J). Passes iff all values are >= 0.
CircuitConditionReport circuit_condition_check(const SetFunction& f, const PointConfig& config);

Rational lovasz_extension(const SetFunction& f, const Vec& x);

Vec greedy_vertex(const SetFunction& f, const IndexList& order);

// Vertices of the base polytope (deduplicated greedy vertices, sorted).
// Throws DomainError when f is not submodular.
std::vector<Vec> base_polytope(const SetFunction& f);

bool submodular_polyhedron_contains(const SetFunction& f, const Vec& y);

}  // namespace bck
