#include <doctest.h>

#include "bck/errors.hpp"
#include "bck/tropical.hpp"
#include "testkit.hpp"

#include <algorithm>
#include <random>

using namespace bck;
using namespace bck::testkit;

namespace {

TropicalPolynomial random_polynomial(std::mt19937_64& rng) {
    auto support = distinct_ints(rng, static_cast<int>(uniform(rng, 2, 6)), -5, 5);
    Vec c(support.size());
    for (auto& x : c) x = Rational(uniform(rng, -6, 6));  // small integers: ties are common
    return make_tropical(support, c);
}

std::vector<std::string> reasons(const MorseReport& r) {
    std::vector<std::string> out;
    for (const auto& w : r.witnesses) out.push_back(w.reason);
    return out;
}

// Terms attaining the maximum at x.
std::vector<int> maximizers(const TropicalPolynomial& p, const Rational& x) {
    std::vector<int> out;
    Rational v = p.value(x);
    for (std::size_t i = 0; i < p.m(); ++i)
        if (p.term(i, x) == v) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

TEST_CASE("tropical polynomials validate their input") {
    CHECK_THROWS_AS(make_tropical({0}, ints({0})), InputError);
    CHECK_THROWS_AS(make_tropical({0, 1}, ints({0})), InputError);
    CHECK_THROWS_AS(make_tropical({1, 0}, ints({0, 0})), InputError);
    CHECK(make_tropical({0, 1, 2}, ints({0, 0, -1})).value(Rational(3)) == 5);
}

TEST_CASE("critical points") {
    auto one = critical_points(make_tropical({0, 1}, ints({0, 0})));
    REQUIRE(one.size() == 1);
    CHECK(one[0].location == 0);
    CHECK(one[0].value == 0);
    CHECK_FALSE(one[0].degenerate);

    auto two = critical_points(make_tropical({0, 1, 2}, ints({0, 0, -1})));
    REQUIRE(two.size() == 2);
    CHECK(two[0].location == 0);
    CHECK(two[0].value == 0);
    CHECK(two[1].location == 1);
    CHECK(two[1].value == 1);
    CHECK(two[0].max_pair == TermPair{0, 1});
    CHECK(two[1].max_pair == TermPair{1, 2});
    for (const auto& cp : two) CHECK_FALSE(cp.degenerate);

    auto triple = critical_points(make_tropical({0, 1, 2}, ints({0, 0, 0})));
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].location == 0);
    CHECK(triple[0].terms_at_max == 3);
    CHECK(triple[0].tie_pairs.size() == 3);
    CHECK(triple[0].degenerate);
}

TEST_CASE("degenerate roots") {
    CHECK(has_degenerate_root(make_tropical({0, 1, 2}, ints({0, 0, 0}))));
    CHECK_FALSE(has_degenerate_root(make_tropical({0, 1, 2}, ints({0, 0, -1}))));
    std::mt19937_64 rng(191);
    for (int trial = 0; trial < 100; ++trial) {
        auto support = distinct_ints(rng, 2, -5, 5);
        CHECK_FALSE(has_degenerate_root(make_tropical(support, ints({uniform(rng, -3, 3), uniform(rng, -3, 3)}))));
    }
}

TEST_CASE("Morse classification of the fixtures") {
    auto morse = is_morse(make_tropical({0, 1, 2}, ints({0, 0, -1})));
    CHECK(morse.morse);
    CHECK(morse.witnesses.empty());

    auto w = is_morse(make_tropical({-2, -1, 1, 2}, ints({-2, 0, 0, -2})));
    CHECK_FALSE(w.morse);
    REQUIRE(w.points.size() == 3);
    CHECK(w.points[0].value == 2);
    CHECK(w.points[1].value == 0);
    CHECK(w.points[2].value == 2);
    REQUIRE(!w.witnesses.empty());
    CHECK(w.witnesses[0].reason == kReasonCoinciding);
    CHECK(w.witnesses[0].points == std::vector<std::size_t>{0, 2});

    auto d = is_morse(make_tropical({-1, 1, 2, 3}, ints({0, 0, -1, -1})));
    CHECK_FALSE(d.morse);
    CHECK(reasons(d) == std::vector<std::string>{kReasonDegenerate});
    bool at_zero = false;
    for (const auto& cp : d.points)
        if (cp.location == 0) {
            at_zero = true;
            CHECK(cp.degenerate);
            CHECK(cp.terms_at_max == 2);
            CHECK(std::find(cp.tie_pairs.begin(), cp.tie_pairs.end(), TermPair{2, 3}) != cp.tie_pairs.end());
        }
    CHECK(at_zero);

    auto t = is_morse(make_tropical({0, 1, 2}, ints({0, 0, 0})));
    CHECK_FALSE(t.morse);
    CHECK(reasons(t) == std::vector<std::string>{kReasonDegenerate});
}

TEST_CASE("critical points are exactly the breakpoints of the envelope") {
    std::mt19937_64 rng(193);
    for (int trial = 0; trial < 300; ++trial) {
        auto p = random_polynomial(rng);
        auto cps = critical_points(p);
        for (const auto& cp : cps) {
            CHECK(p.term(static_cast<std::size_t>(cp.max_pair.first), cp.location) == cp.value);
            CHECK(p.term(static_cast<std::size_t>(cp.max_pair.second), cp.location) == cp.value);
            CHECK(p.value(cp.location) == cp.value);
            CHECK(static_cast<int>(maximizers(p, cp.location).size()) == cp.terms_at_max);
            CHECK(cp.terms_at_max >= 2);
            CHECK(cp.degenerate == (cp.tie_pairs.size() >= 2));
        }
        for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i - 1].location < cps[i].location);
        // between and beyond consecutive breakpoints a single term is maximal
        std::vector<Rational> probes;
        if (cps.empty()) {
            probes.push_back(Rational(0));
        } else {
            probes.push_back(cps.front().location - 1);
            probes.push_back(cps.back().location + 1);
            for (std::size_t i = 1; i < cps.size(); ++i) {
                Rational a = cps[i - 1].location, b = cps[i].location;
                probes.push_back((a + b) / 2);
                probes.push_back(a + (b - a) / 7);
            }
        }
        for (const auto& x : probes) CHECK(maximizers(p, x).size() == 1);
    }
}

TEST_CASE("classification is equivariant under constant and linear shifts") {
    std::mt19937_64 rng(197);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = random_polynomial(rng);
        auto base = is_morse(p);
        Rational c = random_rational(rng, 9), t = random_rational(rng, 9);
        Vec shifted = p.coefficients, tilted = p.coefficients;
        for (std::size_t i = 0; i < p.m(); ++i) {
            shifted[i] += c;
            tilted[i] += t * p.support[i];
        }
        auto s = is_morse(make_tropical(p.support, shifted));
        auto l = is_morse(make_tropical(p.support, tilted));
        CHECK(s.morse == base.morse);
        CHECK(l.morse == base.morse);
        CHECK(reasons(s) == reasons(base));
        CHECK(reasons(l) == reasons(base));
        REQUIRE(s.points.size() == base.points.size());
        REQUIRE(l.points.size() == base.points.size());
        for (std::size_t i = 0; i < base.points.size(); ++i) {
            CHECK(s.points[i].location == base.points[i].location);
            CHECK(s.points[i].value == base.points[i].value + c);
            CHECK(l.points[i].location == base.points[i].location - t);
        }
    }
}

TEST_CASE("forcing two critical values to coincide is detected") {
    std::mt19937_64 rng(199);
    int forced = 0;
    for (int trial = 0; trial < 2000 && forced < 100; ++trial) {
        auto support = distinct_ints(rng, static_cast<int>(uniform(rng, 3, 5)), -5, 5);
        Vec c(support.size());
        for (auto& x : c) x = random_rational(rng, 40);
        auto p = make_tropical(support, c);
        auto cps = critical_points(p);
        if (!is_morse(p).morse || cps.size() < 2) continue;
        // the last envelope term appears only in the last breakpoint; moving its
        // coefficient moves that value without changing the others
        int last = cps.back().max_pair.second;
        Rational gap = cps.front().value - cps.back().value;
        // the last breakpoint value (c_a s_b - c_b s_a) / (s_b - s_a) is affine in c_b
        Rational s1 = support[static_cast<std::size_t>(cps.back().max_pair.first)];
        Rational s2 = support[static_cast<std::size_t>(last)];
        if (s1 == 0) continue;
        Rational slope = -s1 / (s2 - s1);
        Vec moved = c;
        moved[static_cast<std::size_t>(last)] += gap / slope;
        auto q = make_tropical(support, moved);
        auto qc = critical_points(q);
        if (qc.size() != cps.size()) continue;  // the move changed the envelope; skip
        bool same = true;
        for (std::size_t i = 0; i < qc.size(); ++i) same = same && qc[i].max_pair == cps[i].max_pair;
        if (!same) continue;
        ++forced;
        CHECK(qc.back().value == qc.front().value);
        auto r = is_morse(q);
        CHECK_FALSE(r.morse);
        CHECK(reasons(r).front() == kReasonCoinciding);
    }
    CHECK(forced >= 50);
}

TEST_CASE("Morse sampling") {
    auto r = sample_morse_fraction({0, 1, 2}, 10000, 7);
    CHECK(r.samples == 10000);
    CHECK(r.fraction >= frac(99, 100));
    CHECK(r.fraction == Rational(r.morse) / r.samples);
    auto again = sample_morse_fraction({0, 1, 2}, 10000, 7);
    CHECK(again.morse == r.morse);
    CHECK(again.witnesses == r.witnesses);
    CHECK(sample_morse_fraction({-3, 4}, 500, 1).fraction == 1);
    // small bounds produce ties; witnesses carry their reason
    auto coarse = sample_morse_fraction({-2, -1, 1, 2}, 2000, 3, 2);
    CHECK(coarse.fraction < 1);
    CHECK(!coarse.witnesses.empty());
    CHECK(coarse.witnesses.size() <= 10);
    for (const auto& [coeffs, reason] : coarse.witnesses) {
        auto rep = is_morse(make_tropical({-2, -1, 1, 2}, coeffs));
        CHECK_FALSE(rep.morse);
        CHECK(reason == rep.witnesses.front().reason);
    }
}
