#include "bck/tropical.hpp"

#include "bck/errors.hpp"

#include <algorithm>
#include <random>

namespace bck {

Rational TropicalPolynomial::value(const Rational& x) const {
    Rational best = term(0, x);
    for (std::size_t i = 1; i < m(); ++i) best = std::max(best, term(i, x));
    return best;
}

TropicalPolynomial make_tropical(std::vector<long> support, Vec coefficients) {
    if (support.size() < 2) throw InputError("a tropical polynomial needs at least two terms");
    if (support.size() != coefficients.size()) throw InputError("support and coefficients differ in length");
    for (std::size_t i = 1; i < support.size(); ++i)
        if (support[i] <= support[i - 1]) throw InputError("support must be strictly increasing");
    return TropicalPolynomial{std::move(support), std::move(coefficients)};
}

std::vector<CriticalPoint> critical_points(const TropicalPolynomial& p) {
    // envelope terms are the vertices of the upper hull of (a_i, c_i)
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < p.m(); ++i) {
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull.back();
            Rational cross = (Rational(p.support[b] - p.support[a])) * (p.coefficients[i] - p.coefficients[a]) -
                             (p.coefficients[b] - p.coefficients[a]) * Rational(p.support[i] - p.support[a]);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    // slopes of the envelope decrease along the hull, so locations ascend in reverse
    std::vector<CriticalPoint> out;
    for (std::size_t k = hull.size() - 1; k >= 1; --k) {
        std::size_t i = hull[k - 1], j = hull[k];
        CriticalPoint cp;
        cp.location = -(p.coefficients[j] - p.coefficients[i]) / Rational(p.support[j] - p.support[i]);
        cp.value = p.term(i, cp.location);
        cp.max_pair = {static_cast<int>(i), static_cast<int>(j)};
        Vec values(p.m());
        for (std::size_t t = 0; t < p.m(); ++t) {
            values[t] = p.term(t, cp.location);
            if (values[t] == cp.value) ++cp.terms_at_max;
        }
        for (std::size_t a = 0; a < p.m(); ++a)
            for (std::size_t b = a + 1; b < p.m(); ++b)
                if (values[a] == values[b]) cp.tie_pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
        cp.degenerate = cp.tie_pairs.size() >= 2;
        out.push_back(std::move(cp));
    }
    std::sort(out.begin(), out.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.location < b.location; });
    return out;
}

bool has_degenerate_root(const TropicalPolynomial& p) {
    auto pts = critical_points(p);
    return std::any_of(pts.begin(), pts.end(), [](const CriticalPoint& c) { return c.terms_at_max >= 3; });
}

MorseReport is_morse(const TropicalPolynomial& p) {
    MorseReport r;
    r.points = critical_points(p);
    for (std::size_t a = 0; a < r.points.size(); ++a)
        for (std::size_t b = a + 1; b < r.points.size(); ++b)
            if (r.points[a].value == r.points[b].value) r.witnesses.push_back({kReasonCoinciding, {a, b}});
    for (std::size_t a = 0; a < r.points.size(); ++a)
        if (r.points[a].degenerate) r.witnesses.push_back({kReasonDegenerate, {a}});
    r.morse = r.witnesses.empty();
    return r;
}

SampleReport sample_morse_fraction(const std::vector<long>& support, int samples, std::uint64_t seed, long bound,
                                   std::size_t max_witnesses) {
    if (samples < 1) throw InputError("samples must be >= 1");
    if (bound < 1) throw InputError("bound must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    SampleReport r;
    r.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Vec c(support.size());
        for (auto& x : c) {
            long p = num(rng);
            long q = den(rng);
            x = frac(p, q);
        }
        MorseReport m = is_morse(make_tropical(support, c));
        if (m.morse) {
            ++r.morse;
        } else if (r.witnesses.size() < max_witnesses) {
            r.witnesses.emplace_back(std::move(c), m.witnesses.front().reason);
        }
    }
    r.fraction = frac(r.morse, samples);
    return r;
}

}  // namespace bck
