#include "bck/setfun.hpp"

#include "bck/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace bck {

int subset_size(Subset s) { return std::popcount(s); }

Subset full_subset(int m) { return m >= 32 ? ~Subset(0) : (Subset(1) << m) - 1; }

Subset subset_of(const IndexList& elements) {
    Subset s = 0;
    for (Index i : elements) s |= Subset(1) << i;
    return s;
}

IndexList elements_of(Subset s) {
    IndexList out;
    for (Index i = 0; s != 0; ++i, s >>= 1)
        if (s & 1) out.push_back(i);
    return out;
}

std::string subset_to_string(Subset s) {
    std::string out;
    for (Index i : elements_of(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i + 1);
    }
    return out;
}

Subset parse_subset(const std::string& text, int m) {
    Subset s = 0;
    if (text.empty()) return s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("malformed subset \"" + text + "\"");
        int k = std::stoi(item);
        if (k < 1 || k > m) throw InputError("subset element " + item + " out of range 1.." + std::to_string(m));
        s |= Subset(1) << (k - 1);
    }
    return s;
}

std::string kind_name(SetFunctionKind kind) {
    switch (kind) {
        case SetFunctionKind::table: return "table";
        case SetFunctionKind::neg_gcd: return "neg_gcd";
        case SetFunctionKind::neg_indicator_full: return "neg_indicator_full";
        case SetFunctionKind::neg_point_indicator: return "neg_point_indicator";
        case SetFunctionKind::matrix_rank: return "matrix_rank";
        case SetFunctionKind::neg_card_ratio: return "neg_card_ratio";
    }
    return "unknown";
}

namespace {

void check_ground_size(int m) {
    if (m < 1 || m > kMaxGroundSize)
        throw InputError("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
}

}  // namespace

SetFunction make_table(int m, const Rational& default_value, std::map<Subset, Rational> values) {
    check_ground_size(m);
    SetFunction f;
    f.kind = SetFunctionKind::table;
    f.m = m;
    f.default_value = default_value;
    for (const auto& [s, v] : values)
        if (s & ~full_subset(m)) throw InputError("table subset outside the ground set");
    f.values = std::move(values);
    return f;
}

SetFunction make_neg_gcd(std::vector<mpz_class> labels) {
    check_ground_size(static_cast<int>(labels.size()));
    for (const auto& a : labels)
        if (a == 0) throw InputError("neg_gcd requires nonzero integer points");
    SetFunction f;
    f.kind = SetFunctionKind::neg_gcd;
    f.m = static_cast<int>(labels.size());
    f.labels = std::move(labels);
    return f;
}

SetFunction make_neg_indicator_full(int m) {
    check_ground_size(m);
    SetFunction f;
    f.kind = SetFunctionKind::neg_indicator_full;
    f.m = m;
    return f;
}

SetFunction make_neg_point_indicator(int m, Index point) {
    check_ground_size(m);
    if (point < 0 || point >= m) throw InputError("neg_point_indicator point out of range");
    SetFunction f;
    f.kind = SetFunctionKind::neg_point_indicator;
    f.m = m;
    f.point = point;
    return f;
}

SetFunction make_matrix_rank(std::vector<Vec> columns) {
    check_ground_size(static_cast<int>(columns.size()));
    for (const auto& c : columns)
        if (c.size() != columns[0].size()) throw InputError("matrix_rank columns of unequal length");
    SetFunction f;
    f.kind = SetFunctionKind::matrix_rank;
    f.m = static_cast<int>(columns.size());
    f.columns = std::move(columns);
    return f;
}

SetFunction make_neg_card_ratio(int m) {
    check_ground_size(m);
    SetFunction f;
    f.kind = SetFunctionKind::neg_card_ratio;
    f.m = m;
    return f;
}

std::vector<mpz_class> integer_labels(const PointConfig& config) {
    if (config.n != 1) throw InputError("integer labels need a one-dimensional configuration");
    std::vector<mpz_class> out;
    for (const auto& p : config.points) {
        if (p[0].get_den() != 1) throw InputError("integer labels need integer points");
        out.push_back(p[0].get_num());
    }
    return out;
}

Rational evaluate(const SetFunction& f, Subset s) {
    if (s & ~full_subset(f.m)) throw DomainError("subset outside the ground set");
    const int size = subset_size(s);
    if (size < f.min_size && !(s == 0 && f.min_size == 0))
        throw DomainError("set function evaluated below its minimal size on {" + subset_to_string(s) + "}");
    switch (f.kind) {
        case SetFunctionKind::table: {
            auto it = f.values.find(s);
            return it == f.values.end() ? f.default_value : it->second;
        }
        case SetFunctionKind::neg_gcd: {
            mpz_class g = 0;
            for (Index i : elements_of(s)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.labels[i].get_mpz_t());
            return Rational(-g);
        }
        case SetFunctionKind::neg_indicator_full:
            return s == full_subset(f.m) ? Rational(-1) : Rational(0);
        case SetFunctionKind::neg_point_indicator:
            return (s >> f.point) & 1 ? Rational(-1) : Rational(0);
        case SetFunctionKind::matrix_rank: {
            Mat rows;
            for (Index i : elements_of(s)) rows.push_back(f.columns[static_cast<std::size_t>(i)]);
            return Rational(rank(std::move(rows)));
        }
        case SetFunctionKind::neg_card_ratio:
            return frac(-size, f.m);
    }
    throw InternalError("unknown set function kind");
}

namespace {

SubmodularityReport pair_check(const SetFunction& f, int min_x) {
    if (f.m > kSubmodularityLimit)
        throw ResourceError("exhaustive submodularity check limited to m <= " + std::to_string(kSubmodularityLimit));
    SubmodularityReport report;
    const Subset full = full_subset(f.m);
    for (Subset x = 0; x <= full; ++x) {
        if (subset_size(x) < min_x) continue;
        Rational fx;
        bool have_fx = false;
        for (Index a = 0; a < f.m; ++a) {
            if ((x >> a) & 1) continue;
            for (Index b = a + 1; b < f.m; ++b) {
                if ((x >> b) & 1) continue;
                if (!have_fx) {
                    fx = evaluate(f, x);
                    have_fx = true;
                }
                Subset xa = x | (Subset(1) << a), xb = x | (Subset(1) << b);
                Rational fa = evaluate(f, xa), fb = evaluate(f, xb), fab = evaluate(f, xa | xb);
                if (fa + fb < fx + fab) {
                    report.holds = false;
                    report.x = x;
                    report.x1 = a;
                    report.x2 = b;
                    report.f_x1 = fa;
                    report.f_x2 = fb;
                    report.f_x = fx;
                    report.f_x12 = fab;
                    return report;
                }
            }
        }
        if (x == full) break;
    }
    return report;
}

}  // namespace

SubmodularityReport is_submodular(const SetFunction& f) {
    if (f.min_size != 0) throw DomainError("is_submodular requires a function defined on all subsets");
    return pair_check(f, 0);
}

SubmodularityReport is_submodular_above(const SetFunction& f, int n) {
    return pair_check(f, std::max(n, f.min_size));
}

CircuitConditionReport circuit_condition_check(const SetFunction& f, const PointConfig& config) {
    validate_config(config);
    if (static_cast<int>(config.m()) != f.m) throw InputError("set function and configuration sizes differ");
    CircuitConditionReport report;
    const Rational f_full = evaluate(f, full_subset(f.m));
    for (const IndexList& j : combinations(static_cast<int>(config.m()), config.n + 2)) {
        auto pts = config.select(j);
        if (affine_rank(pts) != config.n) continue;
        CircuitData c = find_circuit(pts);
        Subset js = subset_of(j);
        Subset support = 0;
        Rational value = 0;
        for (Index pos : c.support) {
            Index k = j[static_cast<std::size_t>(pos)];
            support |= Subset(1) << k;
            value += evaluate(f, js & ~(Subset(1) << k));
        }
        value -= Rational(static_cast<long>(c.support.size()) - 1) * evaluate(f, js);
        value -= f_full;
        if (value < 0) report.pass = false;
        report.entries.push_back({js, support, value});
    }
    return report;
}

namespace {

IndexList descending_order(const Vec& x) {
    IndexList order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)];
    });
    return order;
}

}  // namespace

Rational lovasz_extension(const SetFunction& f, const Vec& x) {
    if (static_cast<int>(x.size()) != f.m) throw InputError("vector length differs from ground set size");
    Rational total = 0;
    Subset prefix = 0;
    Rational prev = evaluate(f, 0);
    for (Index i : descending_order(x)) {
        prefix |= Subset(1) << i;
        Rational cur = evaluate(f, prefix);
        total += x[static_cast<std::size_t>(i)] * (cur - prev);
        prev = cur;
    }
    return total;
}

Vec greedy_vertex(const SetFunction& f, const IndexList& order) {
    if (static_cast<int>(order.size()) != f.m) throw InputError("order must be a permutation of the ground set");
    Vec y = zeros(static_cast<std::size_t>(f.m));
    Subset prefix = 0;
    Rational prev = evaluate(f, 0);
    for (Index i : order) {
        if (i < 0 || i >= f.m || ((prefix >> i) & 1)) throw InputError("order must be a permutation of the ground set");
        prefix |= Subset(1) << i;
        Rational cur = evaluate(f, prefix);
        y[static_cast<std::size_t>(i)] = cur - prev;
        prev = cur;
    }
    return y;
}

std::vector<Vec> base_polytope(const SetFunction& f) {
    if (f.m > kBasePolytopeLimit)
        throw ResourceError("base polytope enumeration limited to m <= " + std::to_string(kBasePolytopeLimit));
    auto report = is_submodular(f);
    if (!report.holds)
        throw DomainError("base_polytope of a non-submodular function (witness X={" + subset_to_string(report.x) +
                          "}, x1=" + std::to_string(report.x1 + 1) + ", x2=" + std::to_string(report.x2 + 1) + ")");
    IndexList order(static_cast<std::size_t>(f.m));
    std::iota(order.begin(), order.end(), 0);
    std::set<Vec> vertices;
    do {
        vertices.insert(greedy_vertex(f, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return {vertices.begin(), vertices.end()};
}

bool submodular_polyhedron_contains(const SetFunction& f, const Vec& y) {
    if (static_cast<int>(y.size()) != f.m) throw InputError("vector length differs from ground set size");
    if (f.m > kSubmodularityLimit)
        throw ResourceError("polyhedron membership limited to m <= " + std::to_string(kSubmodularityLimit));
    const Subset full = full_subset(f.m);
    for (Subset x = 0;; ++x) {
        Rational s = 0;
        for (Index i : elements_of(x)) s += y[static_cast<std::size_t>(i)];
        if (s > evaluate(f, x)) return false;
        if (x == full) break;
    }
    return true;
}

}  // namespace bck
