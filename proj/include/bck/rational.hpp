#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bck {

// Exact rationals are GMP rationals; every value is kept canonical
// (lowest terms, positive denominator).
using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Accepts "p", "-p", "+p", "p/q" (decimal integers, arbitrary size). A
// Unicode minus sign (U+2212) is accepted in place of '-'. Throws InputError.
Rational parse_rational(std::string_view text);

// p / q in canonical form (q != 0).
Rational frac(long p, long q);

// Lowest-terms serialization: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational dot(const Vec& a, const Vec& b);

// a + s * b
Vec axpy(const Vec& a, const Vec& b, const Rational& s);

Vec zeros(std::size_t n);

Vec unit_vector(std::size_t n, std::size_t i);

// Smallest integer >= q.
Rational ceil(const Rational& q);

}  // namespace bck
