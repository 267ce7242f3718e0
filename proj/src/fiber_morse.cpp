#include "bck/fiber_morse.hpp"

#include "bck/errors.hpp"
#include "bck/secondary.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bck {

namespace {

void check_gamma(const MorseConfig& mc, const Covector& gamma) {
    if (gamma.size() != mc.m())
        throw InputError("covector length " + std::to_string(gamma.size()) + " differs from m = " +
                         std::to_string(mc.m()));
}

void check_nonnegative(const MorseConfig& mc, const Covector& gamma) {
    check_gamma(mc, gamma);
    for (const auto& g : gamma)
        if (g < 0) throw DomainError("heights must be nonnegative");
}

Rational fiber_scale(Normalization norm) { return norm == Normalization::lattice ? 8 : 1; }
Rational caustic_scale(Normalization norm) { return norm == Normalization::lattice ? 6 : 3; }

}  // namespace

MorseConfig make_morse_config(const PointConfig& config) {
    if (config.n != 1) throw InputError("Morse configurations are one-dimensional");
    validate_config(config);
    MorseConfig mc;
    mc.config = config;
    for (const auto& p : config.points) {
        if (p[0].get_den() != 1) throw InputError("Morse configurations need integer points");
        if (p[0] == 0) throw InputError("Morse configurations exclude the point 0");
        mc.labels.push_back(p[0].get_num());
    }
    mpz_class g = 0;
    for (std::size_t i = 0; i < mc.labels.size(); ++i) {
        if (i > 0 && mc.labels[i] <= mc.labels[i - 1]) throw InputError("Morse points must be strictly increasing");
        if (i > 0) {
            mpz_class d = mc.labels[i] - mc.labels[0];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (g != 1) throw InputError("Morse points must affinely generate the integers (gcd of differences 1)");
    return mc;
}

MorseConfig make_morse_config(const std::vector<long>& points) {
    PointConfig c;
    c.n = 1;
    for (long a : points) c.points.push_back({Rational(a)});
    return make_morse_config(c);
}

Pyramid3 build_delta_bar(const MorseConfig& mc, const Covector& gamma) {
    check_nonnegative(mc, gamma);
    std::set<P3> seen;
    Pyramid3 p;
    p.barred = true;
    auto add = [&](P3 v) {
        if (seen.insert(v).second) p.vertices.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < mc.m(); ++i) add({Rational(mc.labels[i]), Rational(0), Rational(0)});
    for (std::size_t i = 0; i < mc.m(); ++i) add({Rational(mc.labels[i]), Rational(0), gamma[i]});
    add({Rational(0), Rational(1), Rational(0)});
    return p;
}

Pyramid3 build_delta(const MorseConfig& mc, const Covector& gamma) {
    check_nonnegative(mc, gamma);
    Pyramid3 p;
    for (std::size_t i = 0; i < mc.m(); ++i) p.vertices.push_back({Rational(mc.labels[i]), Rational(0), gamma[i]});
    p.vertices.push_back({Rational(0), Rational(1), Rational(0)});
    return p;
}

Polygon2 fiber_polygon_of(const Pyramid3& pyramid) { return fiber_polygon(pyramid.vertices); }

Rational area_P_bar(const MorseConfig& mc, const Covector& gamma) {
    return area(fiber_polygon_of(build_delta_bar(mc, gamma)));
}

Rational area_P(const MorseConfig& mc, const Covector& gamma) { return area(fiber_polygon_of(build_delta(mc, gamma))); }

Rational homogeneity_level(const MorseConfig& mc) { return area_P_bar(mc, Vec(mc.m(), Rational(1))); }

Rational iterated_fiber_support(const MorseConfig& mc, const Covector& gamma) {
    check_gamma(mc, gamma);
    const Rational low = *std::min_element(gamma.begin(), gamma.end());
    if (low >= 0) return area_P_bar(mc, gamma);
    Rational c = ceil(-low);
    Covector shifted = gamma;
    for (auto& g : shifted) g += c;
    return area_P_bar(mc, shifted) - c * homogeneity_level(mc);
}

std::string normalization_name(Normalization n) { return n == Normalization::lattice ? "lattice" : "euclidean"; }

Normalization parse_normalization(const std::string& text) {
    if (text == "lattice") return Normalization::lattice;
    if (text == "euclidean") return Normalization::euclidean;
    throw InputError("unknown normalization \"" + text + "\" (expected lattice|euclidean)");
}

SupportSummands morse_summands(const MorseConfig& mc, const Covector& gamma, Normalization norm) {
    check_nonnegative(mc, gamma);
    SupportSummands s;
    s.fiber = fiber_scale(norm) * area_P_bar(mc, gamma);
    s.basecondary = eval_basecondary_general(mc.config, make_neg_gcd(mc.labels), gamma);
    s.secondary = -caustic_scale(norm) * area_N(mc.config, gamma);
    s.total = s.fiber + s.basecondary + s.secondary;
    return s;
}

Rational morse_support(const MorseConfig& mc, const Covector& gamma, Normalization norm) {
    return morse_summands(mc, gamma, norm).total;
}

SupportSummands maxwell_summands(const MorseConfig& mc, const Covector& gamma, Normalization norm) {
    check_gamma(mc, gamma);
    SupportSummands s;
    s.fiber = fiber_scale(norm) * iterated_fiber_support(mc, gamma);
    s.basecondary = eval_basecondary_general(mc.config, make_neg_gcd(mc.labels), gamma);
    s.secondary = -4 * secondary_support(mc.config, gamma);
    s.total = (s.fiber + s.basecondary + s.secondary) / 2;
    return s;
}

Rational maxwell_support(const MorseConfig& mc, const Covector& gamma, Normalization norm) {
    return maxwell_summands(mc, gamma, norm).total;
}

std::string variant_name(MorseVariant v) { return v == MorseVariant::morse ? "morse" : "maxwell"; }

MorseVariant parse_variant(const std::string& text) {
    if (text == "morse") return MorseVariant::morse;
    if (text == "maxwell") return MorseVariant::maxwell;
    throw InputError("unknown variant \"" + text + "\" (expected morse|maxwell)");
}

PiecewiseLinearRep morse_polytope(const MorseConfig& mc, MorseVariant variant, Normalization norm, int extra_samples,
                                  std::uint64_t seed) {
    if (extra_samples < 0) throw InputError("samples must be >= 0");
    // constants are affine on A: shifting keeps every witness in its cone
    auto shifted = [](Covector g) {
        Rational low = *std::min_element(g.begin(), g.end());
        for (auto& x : g) x += 1 - low;
        return g;
    };
    std::vector<Covector> witnesses;
    for (const auto& cone : secondary_cones(mc.config, 1, seed)) witnesses.push_back(shifted(cone.witness));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < extra_samples; ++s) {
        Covector g = shifted(random_heights(mc.m(), rng, 1000));
        if (is_generic_heights(mc.config, g)) witnesses.push_back(std::move(g));
    }
    PLFunction h = [&](const Covector& g) {
        return variant == MorseVariant::morse ? morse_support(mc, g, norm) : maxwell_support(mc, g, norm);
    };
    PiecewiseLinearRep rep = build_representation(h, witnesses);
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const PLEntry& a, const PLEntry& b) { return a.gradient < b.gradient; });
    CertificateResult cert = convexity_certificate(rep);
    rep.certified = cert.holds;
    rep.failure = cert.failure;
    return rep;
}

}  // namespace bck
