#pragma once

#include "bck/basecondary.hpp"
#include "bck/fiber_morse.hpp"
#include "bck/geometry.hpp"
#include "bck/secondary.hpp"
#include "bck/setfun.hpp"
#include "bck/tropical.hpp"

#include <json.hpp>

#include <string>

namespace bck::io {

using json = nlohmann::ordered_json;

// Rationals are written as "p/q" or integer strings; integers and rational
// strings are both accepted on input.
json to_json(const Rational& q);
json to_json(const Vec& v);
Rational rational_from(const json& j, const std::string& what);
Vec vec_from(const json& j, const std::string& what);

// 1-based index lists.
json indices_json(const IndexList& idx);

// Problem-file fields. `A` is a list of points; in dimension 1 a point may
// be written as a bare number. Dimension 0 accepts {"n":0,"m":k}.
PointConfig config_from(const json& problem);
SetFunction setfun_from(const json& spec, int m, const PointConfig* config);
json to_json(const SetFunction& f);
Covector gamma_from(const json& problem, std::size_t m);

json to_json(const Subdivision& s);
json to_json(const CircuitData& c, const IndexList& members);
json to_json(const Wall& w);
json to_json(const PiecewiseLinearRep& rep);

TropicalPolynomial tropical_from(const json& problem);
json to_json(const CriticalPoint& cp);
json to_json(const MorseReport& r);

// Reads a whole JSON file; InputError on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace bck::io
