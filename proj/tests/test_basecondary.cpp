#include <doctest.h>

#include "bck/basecondary.hpp"
#include "bck/errors.hpp"
#include "testkit.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace bck;
using namespace bck::testkit;

namespace {

PointConfig a1367() { return line({1, 3, 6, 7}); }
Covector gamma1() { return ints({2, 4, 5, 3}); }

SetFunction neg_gcd_a1367() { return make_neg_gcd(integer_labels(a1367())); }

SetFunction zero(int m) { return make_table(m, 0, {}); }

// Random instance for the evaluator battery: n in {0, 1, 2}, m <= 7.
struct Instance {
    PointConfig config;
    SetFunction f;
    Covector gamma;
};

Instance random_instance(std::mt19937_64& rng) {
    Instance in;
    int n = static_cast<int>(uniform(rng, 0, 2));
    int m = static_cast<int>(uniform(rng, n + 1, n == 2 ? 6 : 7));
    if (m < 2) m = 2;
    in.config = n == 1 ? line(distinct_ints(rng, m, -8, 8, true)) : random_config(rng, n, m, -3, 3);
    if (n == 1 && uniform(rng, 0, 1) == 0)
        in.f = make_neg_gcd(integer_labels(in.config));
    else
        in.f = random_table(rng, m, 9);
    in.f.min_size = n;
    in.gamma = random_generic(rng, in.config, 30);
    return in;
}

// The wall satisfies the hypotheses of the symbolic expression: the circuit
// has full support and no cell at the witness has tied values off the cell
// (a tie there persists along the whole wall and adds its own kink).
bool clean_wall(const PointConfig& config, const Wall& w) {
    if (!w.circuit.zero.empty()) return false;
    for (const auto& cell : upper_hull_cells(config.points, w.witness)) {
        std::set<Rational> seen;
        for (std::size_t i = 0; i < config.m(); ++i) {
            if (std::binary_search(cell.members.begin(), cell.members.end(), static_cast<Index>(i))) continue;
            if (!seen.insert(w.witness[i] - dot(cell.linear, config.points[i])).second) return false;
        }
    }
    return true;
}

Covector scaled(const Covector& g, const Rational& s) {
    Covector out = g;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace

TEST_CASE("simplicial supports of the worked example") {
    auto supports = enumerate_simplicial(a1367(), gamma1());
    REQUIRE(supports.size() == 3);
    std::set<std::pair<IndexList, Rational>> got;
    for (const auto& s : supports) {
        got.insert({s.maximizers, s.linear[0]});
        CHECK(s.generic);
    }
    std::set<std::pair<IndexList, Rational>> want{{{0, 1}, Rational(1)}, {{1, 2}, frac(1, 3)}, {{2, 3}, Rational(-2)}};
    CHECK(got == want);
    for (const auto& s : supports)
        if (s.maximizers == IndexList{0, 1}) CHECK(s.max_value == 1);  // tie value gamma(1) - 1 * 1

    auto ng = enumerate_simplicial(a1367(), ints({1, 3, 3, 1}));
    bool flat = false;
    for (const auto& s : ng)
        if (s.linear[0] == 0) {
            flat = true;
            CHECK(s.maximizers == IndexList{1, 2});
            CHECK_FALSE(s.generic);
        }
    CHECK(flat);

    auto zero_dim = enumerate_simplicial(dim0(3), ints({1, 4, 2}));
    REQUIRE(zero_dim.size() == 1);
    CHECK(zero_dim[0].maximizers == IndexList{1});
    CHECK(zero_dim[0].linear.empty());
    CHECK(enumerate_simplicial(dim0(3), ints({4, 4, 2})).empty());
}

TEST_CASE("genericity") {
    CHECK(is_generic(a1367(), gamma1()));
    CHECK_FALSE(is_generic(a1367(), ints({1, 3, 3, 1})));
    CHECK_FALSE(is_generic(a1367(), ints({5, 11, 20, 23})));
    CHECK_FALSE(is_generic(a1367(), ints({3, 3, 3, 1})));
    CHECK_THROWS_AS(is_generic(a1367(), ints({1, 2})), InputError);
}

TEST_CASE("simplicial orderings of the worked example") {
    std::map<IndexList, IndexList> want{{{0, 1}, {0, 1, 2, 3}}, {{1, 2}, {1, 2, 0, 3}}, {{2, 3}, {2, 3, 1, 0}}};
    for (const auto& s : enumerate_simplicial(a1367(), gamma1())) {
        auto o = order_simplicial(a1367(), gamma1(), s);
        CHECK(o.head == 2);
        CHECK(o.tuple == want[s.maximizers]);
    }
}

TEST_CASE("simplicial orderings are positively oriented with a descending tail") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(uniform(rng, 1, 2));
        auto config = random_config(rng, n, n + static_cast<int>(uniform(rng, 2, 4)), -4, 4);
        auto g = random_generic(rng, config);
        for (const auto& s : enumerate_simplicial(config, g)) {
            auto o = order_simplicial(config, g, s);
            IndexList head(o.tuple.begin(), o.tuple.begin() + n + 1);
            CHECK(oriented_volume(config.select(head)) > 0);
            for (std::size_t i = o.head + 1; i < o.tuple.size(); ++i)
                CHECK(s.values[static_cast<std::size_t>(o.tuple[i - 1])] > s.values[static_cast<std::size_t>(o.tuple[i])]);
        }
    }
}

TEST_CASE("circuital supports") {
    auto c3 = enumerate_circuital(a1367(), ints({3, 3, 3, 1}));
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].maximizers == IndexList{0, 1, 2});
    CHECK(c3[0].linear == ints({0}));
    CHECK(enumerate_circuital(a1367(), gamma1()).empty());
    auto wall = enumerate_circuital(a1367(), Vec{Rational(2), frac(16, 5), Rational(5), Rational(3)});
    REQUIRE(wall.size() == 1);
    CHECK(wall[0].maximizers == IndexList{0, 1, 2});
    CHECK(wall[0].linear == Vec{frac(3, 5)});
    auto o = order_circuital(a1367(), ints({3, 3, 3, 1}), c3[0]);
    CHECK(o.tuple == IndexList{1, 2, 0, 3});
    CHECK(o.head == 3);
    CHECK_THROWS_AS(order_circuital(dim0(3), ints({1, 1, 0}), CircuitalSupport{}), DomainError);
}

TEST_CASE("circuital orderings of the planar circuits") {
    struct Case {
        PointConfig config;
        std::size_t p, q;
        Rational volume;
    };
    std::vector<Case> cases{{plane({{0, 0}, {2, 0}, {1, 2}, {1, 1}}), 1, 3, Rational(4)},
                            {plane({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), 2, 2, Rational(8)},
                            {plane({{0, 0}, {1, 0}, {2, 0}, {1, 2}}), 1, 2, Rational(4)}};
    for (const auto& c : cases) {
        Covector flat = zeros(4);
        auto supports = enumerate_circuital(c.config, flat);
        REQUIRE(supports.size() == 1);
        auto o = order_circuital(c.config, flat, supports[0]);
        CHECK(supports[0].circuit.p() == c.p);
        CHECK(supports[0].circuit.q() == c.q);
        auto id = circuit_identity(c.config.select(o.tuple), c.p, c.q);
        CHECK(id.volume == c.volume);
        CHECK(id.holds());
    }
}

TEST_CASE("circuital orderings satisfy the alternating-sum identity on random circuits") {
    std::mt19937_64 rng(73);
    int checked = 0;
    while (checked < 200) {
        int n = static_cast<int>(uniform(rng, 1, 3));
        auto config = random_config(rng, n, n + 2, -4, 4);
        Covector flat = zeros(config.m());
        auto supports = enumerate_circuital(config, flat);
        REQUIRE(supports.size() == 1);
        const auto& cd = supports[0].circuit;
        auto o = order_circuital(config, flat, supports[0]);
        CHECK(circuit_identity(config.select(o.tuple), cd.p(), cd.q()).holds());
        ++checked;
    }
}

TEST_CASE("general evaluator") {
    for (const auto& g : {gamma1(), ints({1, 3, 3, 1}), ints({0, 0, 0, 0})}) CHECK(eval_basecondary_general(a1367(), zero(4), g) == 0);
    CHECK(eval_basecondary_general(dim0(3), make_neg_card_ratio(3), ints({3, 2, 1})) == 1);
    CHECK(eval_basecondary_general(a1367(), neg_gcd_a1367(), gamma1()) == -8);
    CHECK(eval_basecondary_generic(a1367(), neg_gcd_a1367(), gamma1()) == -8);
}

TEST_CASE("expansion terms of the worked example") {
    std::mt19937_64 rng(79);
    // distinct values on subsets of size >= 2 make every F-difference nonzero
    std::map<Subset, Rational> values;
    Rational next = 1;
    for (Subset s = 0; s < 16; ++s) values[s] = next * next, next += 1;
    auto f = make_table(4, 0, values);
    auto terms = expansion_terms(a1367(), f, gamma1());
    REQUIRE(terms.size() == 6);
    std::set<IndexList> patterns;
    Rational total = 0;
    for (const auto& t : terms) {
        patterns.insert(t.simplex);
        CHECK(t.f_difference == evaluate(f, t.before) - evaluate(f, t.after));
        CHECK(subset_size(t.after) == subset_size(t.before) + 1);
        total += t.volume * t.f_difference;
    }
    std::set<IndexList> want{{0, 1, 2}, {0, 1, 3}, {1, 2, 0}, {1, 2, 3}, {2, 3, 1}, {2, 3, 0}};
    CHECK(patterns == want);
    CHECK(total == eval_basecondary_general(a1367(), f, gamma1()));
    CHECK(expansion_terms(a1367(), zero(4), gamma1()).empty());
    CHECK_THROWS_AS(expansion_terms(a1367(), f, ints({1, 3, 3, 1})), DomainError);
}

TEST_CASE("expansion terms in dimension zero") {
    auto f = make_table(2, 0, {{0b01, Rational(3)}, {0b10, Rational(5)}, {0b11, Rational(7)}});
    auto terms = expansion_terms(dim0(2), f, ints({1, 0}));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].simplex == IndexList{0, 1});
    CHECK(terms[0].before == 0b01);
    CHECK(terms[0].after == 0b11);
    CHECK(terms[0].volume == 1);
    CHECK(terms[0].f_difference == -4);
    // the chain for n = 0: Lovasz extension minus max(gamma) F(ground set)
    auto ratio = make_neg_card_ratio(3);
    Rational chain = 0;
    for (const auto& t : expansion_terms(dim0(3), ratio, ints({3, 2, 1}))) chain += t.volume * t.f_difference;
    CHECK(chain == lovasz_extension(ratio, ints({3, 2, 1})) - 3 * evaluate(ratio, 0b111));
}

TEST_CASE("the two evaluators agree on random generic heights") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        auto in = random_instance(rng);
        CHECK(eval_basecondary_general(in.config, in.f, in.gamma) == eval_basecondary_generic(in.config, in.f, in.gamma));
    }
}

TEST_CASE("both evaluators are positively homogeneous") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        auto in = random_instance(rng);
        Rational lambda = frac(uniform(rng, 1, 9), uniform(rng, 1, 9));
        Covector g = scaled(in.gamma, lambda);
        CHECK(eval_basecondary_general(in.config, in.f, g) == lambda * eval_basecondary_general(in.config, in.f, in.gamma));
        CHECK(eval_basecondary_generic(in.config, in.f, g) == lambda * eval_basecondary_generic(in.config, in.f, in.gamma));
    }
}

TEST_CASE("the basecondary function ignores F on sets of at most n elements") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        auto in = random_instance(rng);
        if (in.f.kind != SetFunctionKind::table) continue;
        SetFunction g = in.f;
        for (Subset s = 0; s <= full_subset(g.m); ++s)
            if (subset_size(s) <= in.config.n) g.values[s] = Rational(uniform(rng, -50, 50));
        Covector any(in.config.m());
        for (auto& x : any) x = Rational(uniform(rng, -3, 3));
        CHECK(eval_basecondary_general(in.config, g, in.gamma) == eval_basecondary_general(in.config, in.f, in.gamma));
        CHECK(eval_basecondary_general(in.config, g, any) == eval_basecondary_general(in.config, in.f, any));
    }
}

TEST_CASE("the basecondary function is continuous") {
    // along a segment, values at t = 1/k converge linearly to the value at 0
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        auto in = random_instance(rng);
        Covector base(in.config.m()), dir(in.config.m());
        for (auto& x : base) x = Rational(uniform(rng, -2, 2));  // often non-generic
        for (auto& x : dir) x = random_rational(rng, 5);
        const Rational h0 = eval_basecondary_general(in.config, in.f, base);
        // piecewise linear: the one-sided quotient stabilizes, so h(t) - h0 = O(t)
        std::optional<Rational> prev;
        bool stable = false;
        for (int k = 0; k < 60 && !stable; ++k) {
            Rational t = Rational(1) / (Rational(mpz_class(1)) << k);
            Rational q = (eval_basecondary_general(in.config, in.f, axpy(base, dir, t)) - h0) / t;
            stable = prev && *prev == q;
            prev = q;
        }
        CHECK(stable);
    }
}

TEST_CASE("dimension zero reduces to the Lovasz extension") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        int m = static_cast<int>(uniform(rng, 2, 6));
        auto f = random_submodular(rng, m);
        auto g = random_generic(rng, dim0(m));
        Rational mx = *std::max_element(g.begin(), g.end());
        CHECK(eval_basecondary_general(dim0(m), f, g) == lovasz_extension(f, g) - mx * evaluate(f, full_subset(m)));
        // gradient: greedy vertex of the descending order minus F(ground) at the argmax
        IndexList order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Index a, Index b) { return g[static_cast<std::size_t>(a)] > g[static_cast<std::size_t>(b)]; });
        Vec expected = greedy_vertex(f, order);
        expected[static_cast<std::size_t>(order[0])] -= evaluate(f, full_subset(m));
        CHECK(gradient_on_cone(dim0(m), f, g) == expected);
    }
}

TEST_CASE("gradients are exact on their linearity domain") {
    CHECK(gradient_on_cone(a1367(), zero(4), gamma1()) == zeros(4));
    std::mt19937_64 rng(107);
    auto config = a1367();
    auto f = neg_gcd_a1367();
    for (const auto& t : enumerate_triangulations_1d(config)) {
        Covector w = cone_witness(config, t);
        Vec g = gradient_on_cone(config, f, w);
        CHECK(dot(g, w) == eval_basecondary_general(config, f, w));
        int tested = 0;
        for (int k = 0; k < 200 && tested < 5; ++k) {
            Covector probe = w;
            for (auto& x : probe) x += frac(uniform(rng, -100, 100), 100000);
            // stay inside the tail-order chamber of the witness as well
            auto sw = enumerate_simplicial(config, w), sp = enumerate_simplicial(config, probe);
            if (regular_subdivision(config, probe) != t || !is_generic(config, probe) || sw.size() != sp.size()) continue;
            bool same = true;
            for (std::size_t i = 0; i < sw.size(); ++i)
                same = same && order_simplicial(config, w, sw[i]).tuple == order_simplicial(config, probe, sp[i]).tuple;
            if (!same) continue;
            CHECK(dot(g, probe) == eval_basecondary_general(config, f, probe));
            ++tested;
        }
        CHECK(tested == 5);
    }
    CHECK_THROWS_AS(gradient_on_cone(config, f, ints({1, 3, 3, 1})), DomainError);
}

TEST_CASE("pl gradients") {
    PLFunction h = [](const Covector& g) -> Rational { return std::max(g[0], g[1]) + 2 * g[2]; };
    CHECK(pl_gradient(h, ints({2, 1, 5})) == ints({1, 0, 2}));
    CHECK_THROWS_AS(pl_gradient(h, ints({1, 1, 0})), InternalError);
}

TEST_CASE("wall defects of the gcd function") {
    auto config = a1367();
    auto f = neg_gcd_a1367();
    std::map<IndexList, Rational> want{{{0, 1, 3}, Rational(0)}, {{0, 2, 3}, Rational(0)}, {{0, 1, 2}, Rational(-10)}, {{1, 2, 3}, Rational(-8)}};
    for (const auto& w : enumerate_walls_1d(config)) {
        Rational numeric = wall_defect_numeric(config, f, w);
        CHECK(numeric == wall_defect_symbolic(config, f, w));
        CHECK(numeric == want[w.circuit_members]);
        CHECK(wall_defect_numeric(config, zero(4), w) == 0);
        CHECK(wall_defect_symbolic(config, zero(4), w) == 0);
    }
}

TEST_CASE("numeric and symbolic wall defects agree") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        auto config = line(distinct_ints(rng, static_cast<int>(uniform(rng, 3, 6)), -8, 8));
        auto f = random_table(rng, static_cast<int>(config.m()), 9);
        f.min_size = 1;
        for (const auto& w : enumerate_walls_1d(config))
            CHECK(wall_defect_numeric(config, f, w) == wall_defect_symbolic(config, f, w));
    }
    for (int trial = 0; trial < 8; ++trial) {
        auto config = random_config(rng, 2, static_cast<int>(uniform(rng, 4, 5)), -3, 3);
        auto f = random_table(rng, static_cast<int>(config.m()), 9);
        f.min_size = 2;
        auto walls = discover_walls(config, discover_cones_random(config, 300, static_cast<std::uint64_t>(trial) + 1));
        CHECK(!walls.empty());
        for (const auto& w : walls)
            if (clean_wall(config, w)) CHECK(wall_defect_numeric(config, f, w) == wall_defect_symbolic(config, f, w));
    }
}

TEST_CASE("the symbolic wall defect needs a generic wall") {
    // (-1,-3) and (0,0) are equidistant from the line through (-1,-1) and
    // (0,2), so the cell {1,2,5} sees a tail tie along the whole wall of the
    // circuit {1,2,3,4}
    auto config = plane({{-1, -1}, {0, 2}, {-1, -3}, {0, 0}, {-2, -1}});
    auto walls = discover_walls(config, discover_cones_random(config, 300, 1));
    auto f = make_table(5, 0, {{0b10011, Rational(1)}});
    f.min_size = 2;
    bool found = false;
    for (const auto& w : walls) {
        if (w.circuit_members != IndexList{0, 1, 2, 3}) continue;
        found = true;
        CHECK_FALSE(clean_wall(config, w));
        CHECK(wall_defect_symbolic(config, f, w) == 0);
        CHECK(wall_defect_numeric(config, f, w) != 0);
    }
    CHECK(found);
}

TEST_CASE("discovered walls in the plane") {
    auto pentagon = plane({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}});
    auto cones = discover_cones_random(pentagon, 2000, 1);
    auto walls = discover_walls(pentagon, cones);
    std::set<std::pair<Subdivision, Subdivision>> flips;
    for (const auto& w : walls) {
        CHECK(w.left != w.right);
        flips.insert(std::minmax(w.left, w.right));
        auto sides = find_circuit(pentagon.select(w.circuit_members));
        CHECK(sides.p() == 2);
    }
    // the flip graph of a pentagon is a 5-cycle
    CHECK(flips.size() == 5);
}

TEST_CASE("minimal convexifier") {
    auto config = a1367();
    CHECK(min_convexifier(config, zero(4)).value == 0);
    CHECK(min_convexifier(config, make_neg_indicator_full(4)).value == 0);
    auto r = min_convexifier(config, neg_gcd_a1367());
    CHECK(r.value == 2);
    CHECK(r.walls == 4);
    CHECK_FALSE(r.sampled);
}

TEST_CASE("polytope reconstruction") {
    auto config = a1367();
    auto trivial = reconstruct_polytope(config, zero(4), 0);
    REQUIRE(trivial.entries.size() == 1);
    CHECK(trivial.entries[0].gradient == zeros(4));
    CHECK(trivial.certified);

    auto full = reconstruct_polytope(config, make_neg_indicator_full(4), 0);
    CHECK(full.entries.size() == 4);
    CHECK(full.certified);

    auto gcd = neg_gcd_a1367();
    auto raw = reconstruct_polytope(config, gcd, 0);
    CHECK_FALSE(raw.certified);
    CHECK(raw.failure.has_value());
    Rational c = min_convexifier(config, gcd).value;
    CHECK(reconstruct_polytope(config, gcd, c).certified);
    CHECK_FALSE(reconstruct_polytope(config, gcd, c * frac(999, 1000)).certified);
}

TEST_CASE("the point indicator reproduces the GKZ vertices up to translation") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        auto config = line(distinct_ints(rng, static_cast<int>(uniform(rng, 3, 6)), -9, 9));
        int m = static_cast<int>(config.m());
        auto f = make_neg_point_indicator(m, static_cast<Index>(uniform(rng, 0, m - 1)));
        auto rep = reconstruct_polytope(config, f, 0);
        CHECK(rep.certified);
        auto ts = enumerate_triangulations_1d(config);
        REQUIRE(rep.entries.size() == ts.size());
        std::optional<Vec> shift;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Vec phi = gkz_vector(config, regular_subdivision(config, rep.entries[i].witness));
            Vec d(phi.size());
            for (std::size_t k = 0; k < d.size(); ++k) d[k] = rep.entries[i].gradient[k] - phi[k];
            if (!shift) shift = d;
            CHECK(d == *shift);
        }
    }
}

TEST_CASE("the full-set indicator is not a translate of the secondary polytope") {
    auto config = a1367();
    auto rep = reconstruct_polytope(config, make_neg_indicator_full(4), 0);
    int parallel_pairs = 0, pairs = 0;
    for (std::size_t i = 0; i < rep.entries.size(); ++i)
        for (std::size_t j = i + 1; j < rep.entries.size(); ++j) {
            Vec dg(4), dp(4);
            Vec pi = gkz_vector(config, regular_subdivision(config, rep.entries[i].witness));
            Vec pj = gkz_vector(config, regular_subdivision(config, rep.entries[j].witness));
            for (std::size_t k = 0; k < 4; ++k) {
                dg[k] = rep.entries[i].gradient[k] - rep.entries[j].gradient[k];
                dp[k] = pi[k] - pj[k];
            }
            parallel_pairs += parallel(dg, dp);
            ++pairs;
        }
    CHECK(pairs == 6);
    CHECK(parallel_pairs == 3);
}

TEST_CASE("convexity certificates") {
    PiecewiseLinearRep single;
    single.entries.push_back(PLEntry{ints({1, 0}), ints({1, 1})});
    CHECK(convexity_certificate(single).holds);

    auto config = a1367();
    auto rep = reconstruct_polytope(config, make_neg_indicator_full(4), 0);
    CHECK(convexity_certificate(rep).holds);
    // negate the gradient on one cone
    auto broken = rep;
    for (auto& x : broken.entries[2].gradient) x = -x;
    auto cert = convexity_certificate(broken);
    CHECK_FALSE(cert.holds);
    REQUIRE(cert.failure);
    CHECK((cert.failure->first == 2 || cert.failure->second == 2));
}

TEST_CASE("submodular functions satisfying the circuit condition give convex functions") {
    std::mt19937_64 rng(127);
    int accepted = 0;
    for (int trial = 0; trial < 4000 && accepted < 25; ++trial) {
        int m = static_cast<int>(uniform(rng, 3, 6));
        auto config = line(distinct_ints(rng, m, -8, 8));
        auto f = random_circuit_friendly(rng, m);
        f.min_size = 1;
        if (!is_submodular_above(f, 1).holds || !circuit_condition_check(f, config).pass) continue;
        ++accepted;
        for (const auto& w : enumerate_walls_1d(config)) CHECK(wall_defect_numeric(config, f, w) >= 0);
        CHECK(reconstruct_polytope(config, f, 0).certified);
        CHECK(min_convexifier(config, f).value == 0);
    }
    CHECK(accepted == 25);
}

TEST_CASE("submodular-above functions become convex after adding the minimal multiple") {
    std::mt19937_64 rng(131);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 25; ++trial) {
        int m = static_cast<int>(uniform(rng, 3, 6));
        auto config = line(distinct_ints(rng, m, -8, 8));
        auto f = random_table(rng, m, 6);
        f.min_size = 1;
        if (!is_submodular_above(f, 1).holds) continue;
        ++checked;
        Rational c = min_convexifier(config, f).value;
        CHECK(reconstruct_polytope(config, f, c).certified);
    }
    CHECK(checked == 25);
}
