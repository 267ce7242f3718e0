#include "bck/io.hpp"

#include "bck/errors.hpp"

#include <fstream>
#include <sstream>

namespace bck::io {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Vec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

Rational rational_from(const json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    throw InputError(what + ": expected an integer or a rational string");
}

Vec vec_from(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array");
    Vec out;
    for (const auto& x : j) out.push_back(rational_from(x, what));
    return out;
}

json indices_json(const IndexList& idx) {
    json out = json::array();
    for (Index i : idx) out.push_back(i + 1);
    return out;
}

namespace {

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

int int_from(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
    return j.get<int>();
}

}  // namespace

PointConfig config_from(const json& problem) {
    PointConfig c;
    c.n = int_from(field(problem, "n"), "n");
    if (c.n < 0) throw InputError("n must be >= 0");
    if (c.n == 0 && !problem.contains("A")) {
        int m = int_from(field(problem, "m"), "m");
        if (m < 2) throw InputError("m must be >= 2");
        c.points.assign(static_cast<std::size_t>(m), Point{});
    } else {
        const json& a = field(problem, "A");
        if (!a.is_array()) throw InputError("A: expected a list of points");
        for (const auto& p : a) {
            if (c.n == 1 && !p.is_array())
                c.points.push_back({rational_from(p, "A")});
            else
                c.points.push_back(vec_from(p, "A"));
        }
    }
    validate_config(c);
    if (c.m() > static_cast<std::size_t>(kMaxGroundSize))
        throw InputError("at most " + std::to_string(kMaxGroundSize) + " points are supported");
    return c;
}

SetFunction setfun_from(const json& spec, int m, const PointConfig* config) {
    const std::string kind = field(spec, "kind").get<std::string>();
    SetFunction f;
    if (kind == "table") {
        std::map<Subset, Rational> values;
        if (spec.contains("values")) {
            for (const auto& [key, value] : spec.at("values").items())
                values[parse_subset(key, m)] = rational_from(value, "F.values");
        }
        Rational def = spec.contains("default") ? rational_from(spec.at("default"), "F.default") : Rational(0);
        f = make_table(m, def, std::move(values));
    } else if (kind == "neg_gcd") {
        if (spec.contains("labels")) {
            std::vector<mpz_class> labels;
            for (const auto& q : vec_from(spec.at("labels"), "F.labels")) {
                if (q.get_den() != 1) throw InputError("F.labels must be integers");
                labels.push_back(q.get_num());
            }
            f = make_neg_gcd(std::move(labels));
        } else {
            if (config == nullptr) throw InputError("neg_gcd needs integer labels or a one-dimensional A");
            f = make_neg_gcd(integer_labels(*config));
        }
    } else if (kind == "neg_indicator_full") {
        f = make_neg_indicator_full(m);
    } else if (kind == "neg_point_indicator") {
        int point = spec.contains("point") ? int_from(spec.at("point"), "F.point") : 1;
        f = make_neg_point_indicator(m, point - 1);
    } else if (kind == "matrix_rank") {
        std::vector<Vec> columns;
        for (const auto& col : field(spec, "columns")) columns.push_back(vec_from(col, "F.columns"));
        f = make_matrix_rank(std::move(columns));
    } else if (kind == "neg_card_ratio") {
        f = make_neg_card_ratio(m);
    } else {
        throw InputError("unknown set function kind \"" + kind + "\"");
    }
    if (f.m != m) throw InputError("set function size differs from the ground set");
    if (spec.contains("min_size")) f.min_size = int_from(spec.at("min_size"), "F.min_size");
    return f;
}

json to_json(const SetFunction& f) {
    json out;
    out["kind"] = kind_name(f.kind);
    switch (f.kind) {
        case SetFunctionKind::table: {
            out["default"] = to_json(f.default_value);
            json values = json::object();
            for (const auto& [s, v] : f.values) values[subset_to_string(s)] = to_json(v);
            out["values"] = values;
            break;
        }
        case SetFunctionKind::neg_gcd: {
            json labels = json::array();
            for (const auto& a : f.labels) labels.push_back(a.get_str());
            out["labels"] = labels;
            break;
        }
        case SetFunctionKind::neg_point_indicator: out["point"] = f.point + 1; break;
        case SetFunctionKind::matrix_rank: {
            json cols = json::array();
            for (const auto& c : f.columns) cols.push_back(to_json(c));
            out["columns"] = cols;
            break;
        }
        default: break;
    }
    return out;
}

Covector gamma_from(const json& problem, std::size_t m) {
    Covector g = vec_from(field(problem, "gamma"), "gamma");
    if (g.size() != m)
        throw InputError("gamma has " + std::to_string(g.size()) + " entries, expected " + std::to_string(m));
    return g;
}

json to_json(const Subdivision& s) {
    json cells = json::array();
    for (const auto& c : s.cells) cells.push_back(indices_json(c));
    return json{{"cells", cells}};
}

json to_json(const CircuitData& c, const IndexList& members) {
    auto map_positions = [&](const IndexList& pos) {
        IndexList out;
        for (Index p : pos) out.push_back(members[static_cast<std::size_t>(p)]);
        return indices_json(out);
    };
    return json{{"positive", map_positions(c.positive)},
                {"negative", map_positions(c.negative)},
                {"zero", map_positions(c.zero)},
                {"positive_coeffs", to_json(c.positive_coeffs)},
                {"negative_coeffs", to_json(c.negative_coeffs)}};
}

json to_json(const Wall& w) {
    return json{{"left", to_json(w.left)},
                {"right", to_json(w.right)},
                {"witness", to_json(w.witness)},
                {"direction", to_json(w.direction)},
                {"circuit", indices_json(w.circuit_members)},
                {"circuit_sides", to_json(w.circuit, w.circuit_members)}};
}

json to_json(const PiecewiseLinearRep& rep) {
    json out;
    out["certified"] = rep.certified;
    json vertices = json::array();
    json cones = json::array();
    for (const auto& e : rep.entries) {
        vertices.push_back(to_json(e.gradient));
        cones.push_back(json{{"witness", to_json(e.witness)}, {"gradient", to_json(e.gradient)}});
    }
    out["vertices"] = vertices;
    out["cones"] = cones;
    if (rep.failure) {
        auto [j, k] = *rep.failure;
        out["failure"] = json{{"witness", to_json(rep.entries[j].witness)},
                              {"own_cone", j + 1},
                              {"violating_cone", k + 1}};
    }
    return out;
}

TropicalPolynomial tropical_from(const json& problem) {
    std::vector<long> support;
    const json& s = field(problem, "support");
    if (!s.is_array()) throw InputError("support: expected an array of integers");
    for (const auto& a : s) {
        Rational q = rational_from(a, "support");
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError("support entries must be integers");
        support.push_back(q.get_num().get_si());
    }
    return make_tropical(std::move(support), vec_from(field(problem, "coefficients"), "coefficients"));
}

json to_json(const CriticalPoint& cp) {
    json ties = json::array();
    for (const auto& [a, b] : cp.tie_pairs) ties.push_back(json::array({a + 1, b + 1}));
    return json{{"location", to_json(cp.location)},
                {"value", to_json(cp.value)},
                {"max_pair", json::array({cp.max_pair.first + 1, cp.max_pair.second + 1})},
                {"terms_at_max", cp.terms_at_max},
                {"tie_pairs", ties},
                {"degenerate", cp.degenerate}};
}

json to_json(const MorseReport& r) {
    json out;
    out["morse"] = r.morse;
    if (!r.morse) {
        out["reason"] = r.witnesses.front().reason;
        json reasons = json::array();
        for (const auto& w : r.witnesses) {
            IndexList pts;
            for (auto p : w.points) pts.push_back(static_cast<Index>(p));
            reasons.push_back(json{{"reason", w.reason}, {"critical_points", indices_json(pts)}});
        }
        out["reasons"] = reasons;
    }
    json pts = json::array();
    for (const auto& cp : r.points) pts.push_back(to_json(cp));
    out["critical_points"] = pts;
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON in \"") + path + "\": " + e.what());
    }
}

}  // namespace bck::io
