#include "bck/basecondary.hpp"

#include "bck/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bck {

namespace {

// Orientation of the lifted simplices in the simplicial expansion; pinned by
// agreement with the threshold-form evaluator.
constexpr int kLiftedOrientation = -1;

constexpr int kHalvingLimit = 64;

void check_inputs(const PointConfig& config, const Covector& gamma) {
    validate_config(config);
    if (gamma.size() != config.m())
        throw InputError("covector length " + std::to_string(gamma.size()) + " differs from m = " +
                         std::to_string(config.m()));
}

void check_inputs(const PointConfig& config, const SetFunction& f, const Covector& gamma) {
    check_inputs(config, gamma);
    if (static_cast<std::size_t>(f.m) != config.m()) throw InputError("set function and configuration sizes differ");
}

Vec values_of(const PointConfig& config, const Covector& gamma, const Vec& linear) {
    Vec v(config.m());
    for (std::size_t i = 0; i < config.m(); ++i) v[i] = gamma[i] - dot(linear, config.points[i]);
    return v;
}

IndexList argmax_set(const Vec& v) {
    const Rational& top = *std::max_element(v.begin(), v.end());
    IndexList out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == top) out.push_back(static_cast<Index>(i));
    return out;
}

bool distinct_off(const Vec& v, const IndexList& members) {
    std::vector<Rational> off;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::binary_search(members.begin(), members.end(), static_cast<Index>(i))) off.push_back(v[i]);
    std::sort(off.begin(), off.end());
    return std::adjacent_find(off.begin(), off.end()) == off.end();
}

IndexList tail_descending(const Vec& v, const IndexList& members) {
    IndexList tail;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::binary_search(members.begin(), members.end(), static_cast<Index>(i)))
            tail.push_back(static_cast<Index>(i));
    std::sort(tail.begin(), tail.end(), [&](Index a, Index b) {
        return v[static_cast<std::size_t>(a)] > v[static_cast<std::size_t>(b)];
    });
    return tail;
}

std::vector<Point> lifted(const PointConfig& config, const Covector& gamma, const IndexList& idx) {
    std::vector<Point> out;
    for (Index i : idx) {
        Point p = config.points[static_cast<std::size_t>(i)];
        p.push_back(gamma[static_cast<std::size_t>(i)]);
        out.push_back(std::move(p));
    }
    return out;
}

Rational eval_f(const SetFunction& f, Subset s) { return evaluate(f, s); }

// All summands of the simplicial expansion, zero ones included.
std::vector<ExpansionTerm> all_terms(const PointConfig& config, const SetFunction& f, const Covector& gamma) {
    check_inputs(config, f, gamma);
    if (!is_generic(config, gamma))
        throw DomainError("covector is not generic; use the general evaluator");
    const std::size_t head = static_cast<std::size_t>(config.n) + 1;
    std::vector<ExpansionTerm> terms;
    for (const auto& s : enumerate_simplicial(config, gamma)) {
        OrderedSupport ord = order_simplicial(config, gamma, s);
        IndexList base(ord.tuple.begin(), ord.tuple.begin() + static_cast<long>(head));
        Subset before = subset_of(base);
        Rational f_before = eval_f(f, before);
        for (std::size_t i = head; i < ord.tuple.size(); ++i) {
            ExpansionTerm t;
            t.simplex = base;
            t.simplex.push_back(ord.tuple[i]);
            t.before = before;
            t.after = before | (Subset(1) << ord.tuple[i]);
            Rational f_after = eval_f(f, t.after);
            t.f_difference = f_before - f_after;
            t.volume = kLiftedOrientation * oriented_volume(lifted(config, gamma, t.simplex));
            terms.push_back(std::move(t));
            before = terms.back().after;
            f_before = f_after;
        }
    }
    return terms;
}

}  // namespace

std::vector<SimplicialSupport> enumerate_simplicial(const PointConfig& config, const Covector& gamma) {
    check_inputs(config, gamma);
    std::vector<SimplicialSupport> out;
    for (const IndexList& b : combinations(static_cast<int>(config.m()), config.n + 1)) {
        auto pts = config.select(b);
        if (affine_rank(pts) != config.n) continue;
        Vec h;
        for (Index i : b) h.push_back(gamma[static_cast<std::size_t>(i)]);
        AffineFunction fit = affine_fit(pts, h);
        Vec v = values_of(config, gamma, fit.linear);
        if (argmax_set(v) != b) continue;
        SimplicialSupport s;
        s.linear = fit.linear;
        s.max_value = v[static_cast<std::size_t>(b[0])];
        s.maximizers = b;
        s.generic = distinct_off(v, b);
        s.values = std::move(v);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CircuitalSupport> enumerate_circuital(const PointConfig& config, const Covector& gamma) {
    check_inputs(config, gamma);
    std::vector<CircuitalSupport> out;
    if (config.m() < static_cast<std::size_t>(config.n) + 2) return out;
    for (const IndexList& c : combinations(static_cast<int>(config.m()), config.n + 2)) {
        auto pts = config.select(c);
        if (affine_rank(pts) != config.n) continue;
        // the lifted points must be coplanar: fit on an independent sub-simplex
        AffineFunction fit;
        for (const IndexList& sub : combinations(config.n + 2, config.n + 1)) {
            std::vector<Point> base;
            Vec h;
            for (Index k : sub) {
                base.push_back(pts[static_cast<std::size_t>(k)]);
                h.push_back(gamma[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])]);
            }
            if (affine_rank(base) != config.n) continue;
            fit = affine_fit(base, h);
            break;
        }
        Vec v = values_of(config, gamma, fit.linear);
        if (argmax_set(v) != c) continue;
        CircuitalSupport s;
        s.linear = fit.linear;
        s.max_value = v[static_cast<std::size_t>(c[0])];
        s.maximizers = c;
        s.values = std::move(v);
        s.circuit = find_circuit(pts);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_generic(const PointConfig& config, const Covector& gamma) {
    check_inputs(config, gamma);
    return is_generic_heights(config, gamma);
}

OrderedSupport order_simplicial(const PointConfig& config, const Covector& gamma, const SimplicialSupport& s) {
    check_inputs(config, gamma);
    if (!s.generic) throw DomainError("order_simplicial requires a generic simplicial support");
    OrderedSupport out;
    out.tuple = s.maximizers;
    if (config.n >= 1 && oriented_volume(config.select(out.tuple)) < 0)
        std::swap(out.tuple[out.tuple.size() - 1], out.tuple[out.tuple.size() - 2]);
    out.head = out.tuple.size();
    for (Index i : tail_descending(s.values, s.maximizers)) out.tuple.push_back(i);
    return out;
}

CircuitIdentity circuit_identity(const std::vector<Point>& ordered_points, std::size_t p, std::size_t q) {
    if (ordered_points.size() < 2 || p + q > ordered_points.size())
        throw InputError("circuit_identity: inconsistent sizes");
    CircuitIdentity id;
    id.volume = lattice_volume(ordered_points);
    auto without = [&](std::size_t skip) {
        std::vector<Point> pts;
        for (std::size_t k = 0; k < ordered_points.size(); ++k)
            if (k != skip) pts.push_back(ordered_points[k]);
        return oriented_volume(pts);
    };
    for (std::size_t i = 1; i <= p; ++i) id.positive_sum += (i % 2 == 0 ? 1 : -1) * without(i - 1);
    for (std::size_t i = p + 1; i <= p + q; ++i) id.negative_sum += (i % 2 == 0 ? -1 : 1) * without(i - 1);
    return id;
}

OrderedSupport order_circuital(const PointConfig& config, const Covector& gamma, const CircuitalSupport& c) {
    check_inputs(config, gamma);
    if (config.n == 0) throw DomainError("circuital orderings need n >= 1");
    if (!distinct_off(c.values, c.maximizers))
        throw DomainError("order_circuital requires distinct values off the maximizers");
    const CircuitData& cd = c.circuit;
    IndexList head;
    for (Index pos : cd.ordering) head.push_back(c.maximizers[static_cast<std::size_t>(pos)]);
    const std::size_t p = cd.p(), q = cd.q(), z = cd.zero.size();
    CircuitIdentity id = circuit_identity(config.select(head), p, q);
    if (id.positive_sum != id.volume) {
        // an odd swap inside one side flips the orientation of the terms
        std::size_t end = 0;
        if (z >= 2)
            end = p + q + z;
        else if (q >= 2)
            end = p + q;
        else if (p >= 2)
            end = p;
        else
            throw InternalError("order_circuital: no side admits an orientation swap");
        std::swap(head[end - 1], head[end - 2]);
        id = circuit_identity(config.select(head), p, q);
    }
    if (!id.holds())
        throw InternalError("order_circuital: alternating-sum identity fails (vol " + to_string(id.volume) +
                            ", sums " + to_string(id.positive_sum) + ", " + to_string(id.negative_sum) + ")");
    OrderedSupport out;
    out.tuple = head;
    out.head = head.size();
    for (Index i : tail_descending(c.values, c.maximizers)) out.tuple.push_back(i);
    return out;
}

Rational eval_basecondary_general(const PointConfig& config, const SetFunction& f, const Covector& gamma) {
    check_inputs(config, f, gamma);
    Rational total = 0;
    for (const auto& cell : upper_hull_cells(config.points, gamma)) {
        Vec v = values_of(config, gamma, cell.linear);
        std::vector<Rational> levels(v.begin(), v.end());
        std::sort(levels.begin(), levels.end(), std::greater<>());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        const Rational& top = levels.front();
        Rational sum = 0;
        Subset prev = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == top) prev |= Subset(1) << i;
        Rational f_prev = eval_f(f, prev);
        for (std::size_t k = 1; k < levels.size(); ++k) {
            Subset cur = prev;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] == levels[k]) cur |= Subset(1) << i;
            Rational f_cur = eval_f(f, cur);
            sum += (levels[k] - top) * (f_cur - f_prev);
            prev = cur;
            f_prev = f_cur;
        }
        if (sum != 0) total += lattice_volume(config.select(cell.members)) * sum;
    }
    return total;
}

std::vector<ExpansionTerm> expansion_terms(const PointConfig& config, const SetFunction& f, const Covector& gamma) {
    std::vector<ExpansionTerm> out;
    for (auto& t : all_terms(config, f, gamma))
        if (t.volume != 0 && t.f_difference != 0) out.push_back(std::move(t));
    return out;
}

Rational eval_basecondary_generic(const PointConfig& config, const SetFunction& f, const Covector& gamma) {
    Rational total = 0;
    for (const auto& t : all_terms(config, f, gamma)) total += t.volume * t.f_difference;
    return total;
}

Rational wall_defect(const PointConfig& config, const PLFunction& h, const Wall& wall) {
    const Rational h0 = h(wall.witness);
    Rational eps = 1;
    std::optional<Rational> prev;
    for (int k = 0; k < kHalvingLimit; ++k, eps /= 2) {
        Covector plus = axpy(wall.witness, wall.direction, eps);
        Covector minus = axpy(wall.witness, wall.direction, -eps);
        if (regular_subdivision(config, plus) != wall.left || regular_subdivision(config, minus) != wall.right)
            continue;
        Rational d = (h(plus) + h(minus) - 2 * h0) / eps;
        if (prev && *prev == d) return d;
        prev = d;
    }
    throw InternalError("wall defect: step search exhausted (malformed wall)");
}

Rational wall_defect_numeric(const PointConfig& config, const SetFunction& f, const Wall& wall) {
    check_inputs(config, f, wall.witness);
    return wall_defect(config, [&](const Covector& g) { return eval_basecondary_general(config, f, g); }, wall);
}

Rational wall_defect_symbolic(const PointConfig& config, const SetFunction& f, const Wall& wall) {
    check_inputs(config, f, wall.witness);
    const IndexList& members = wall.circuit_members;
    if (members.size() != static_cast<std::size_t>(config.n) + 2)
        throw InputError("wall circuit must have n+2 members");
    Covector probe = axpy(wall.witness, wall.direction, Rational(1));
    // the lifted circuit is flat at the witness, so its volume is linear in the step
    Rational vol = abs(oriented_volume(lifted(config, probe, members)));
    Subset whole = subset_of(members);
    Rational e = 0;
    for (Index pos : wall.circuit.support) e += eval_f(f, whole & ~(Subset(1) << members[static_cast<std::size_t>(pos)]));
    e -= Rational(static_cast<long>(wall.circuit.support.size()) - 1) * eval_f(f, whole);
    e -= eval_f(f, full_subset(f.m));
    return vol * e;
}

std::vector<Wall> discover_walls(const PointConfig& config, const std::vector<Cone>& cones) {
    validate_config(config);
    constexpr std::size_t kPairLimit = 400;
    std::vector<IndexList> candidates;
    for (const IndexList& s : combinations(static_cast<int>(config.m()), config.n + 2))
        if (affine_rank(config.select(s)) == config.n) candidates.push_back(s);
    std::vector<Wall> walls;
    std::set<std::pair<Subdivision, Subdivision>> seen;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < cones.size() && pairs < kPairLimit; ++a) {
        for (std::size_t b = a + 1; b < cones.size() && pairs < kPairLimit; ++b, ++pairs) {
            const Covector& ga = cones[a].witness;
            Covector dir = axpy(cones[b].witness, ga, Rational(-1));
            // each lifted determinant is affine along the segment: locate its root
            std::map<Rational, std::vector<IndexList>> roots;
            for (const auto& s : candidates) {
                Rational d0 = oriented_volume(lifted(config, ga, s));
                Rational d1 = oriented_volume(lifted(config, cones[b].witness, s));
                if (d0 == d1) continue;
                Rational t = d0 / (d0 - d1);
                if (t > 0 && t < 1) roots[t].push_back(s);
            }
            std::vector<Rational> ts;
            for (const auto& entry : roots) ts.push_back(entry.first);
            for (std::size_t k = 0; k < ts.size(); ++k) {
                Rational lo = k == 0 ? Rational(0) : ts[k - 1];
                Rational hi = k + 1 == ts.size() ? Rational(1) : ts[k + 1];
                Subdivision before = regular_subdivision(config, axpy(ga, dir, (lo + ts[k]) / 2));
                Subdivision after = regular_subdivision(config, axpy(ga, dir, (ts[k] + hi) / 2));
                if (before == after) continue;
                auto key = before < after ? std::make_pair(before, after) : std::make_pair(after, before);
                if (!seen.insert(key).second) continue;
                Wall w;
                w.witness = axpy(ga, dir, ts[k]);
                w.direction = dir;
                w.left = after;
                w.right = before;
                Subdivision at = regular_subdivision(config, w.witness);
                for (const auto& s : roots[ts[k]]) {
                    bool inside = std::any_of(at.cells.begin(), at.cells.end(), [&](const IndexList& cell) {
                        return std::includes(cell.begin(), cell.end(), s.begin(), s.end());
                    });
                    if (inside) {
                        w.circuit_members = s;
                        break;
                    }
                }
                if (w.circuit_members.empty()) continue;  // several walls crossed at once
                w.circuit = find_circuit(config.select(w.circuit_members));
                walls.push_back(std::move(w));
            }
        }
    }
    return walls;
}

ConvexifierResult min_convexifier(const PointConfig& config, const SetFunction& f, int samples, std::uint64_t seed) {
    validate_config(config);
    if (static_cast<std::size_t>(f.m) != config.m()) throw InputError("set function and configuration sizes differ");
    std::vector<Wall> walls = config.n == 1 ? enumerate_walls_1d(config)
                                            : discover_walls(config, secondary_cones(config, samples, seed));
    PLFunction hf = [&](const Covector& g) { return eval_basecondary_general(config, f, g); };
    PLFunction hs = [&](const Covector& g) { return secondary_support(config, g); };
    ConvexifierResult out;
    out.value = 0;
    out.sampled = config.n != 1;
    out.walls = walls.size();
    for (const auto& w : walls) {
        Rational df = wall_defect(config, hf, w);
        if (df >= 0) continue;
        Rational ds = wall_defect(config, hs, w);
        if (ds <= 0) throw InternalError("secondary support is not strictly convex across a wall");
        out.value = std::max(out.value, Rational(-df / ds));
    }
    return out;
}

Vec pl_gradient(const PLFunction& h, const Covector& at, const std::function<bool(const Covector&)>& admissible) {
    const Rational h0 = h(at);
    Vec g(at.size());
    for (std::size_t i = 0; i < at.size(); ++i) {
        Vec e = unit_vector(at.size(), i);
        Rational delta = 1;
        std::optional<Rational> prev;
        bool done = false;
        for (int k = 0; k < kHalvingLimit && !done; ++k, delta /= 2) {
            Covector plus = axpy(at, e, delta), minus = axpy(at, e, -delta);
            if (admissible && (!admissible(plus) || !admissible(minus))) continue;
            Rational forward = (h(plus) - h0) / delta;
            Rational backward = (h0 - h(minus)) / delta;
            if (forward != backward) {
                prev.reset();
                continue;
            }
            if (prev && *prev == forward) {
                g[i] = forward;
                done = true;
            }
            prev = forward;
        }
        if (!done) throw InternalError("gradient: no stable difference quotient (not a point of linearity)");
    }
    if (dot(g, at) != h0) throw InternalError("gradient: Euler identity fails");
    return g;
}

Vec gradient_on_cone(const PointConfig& config, const SetFunction& f, const Covector& witness) {
    check_inputs(config, f, witness);
    if (!is_generic(config, witness)) throw DomainError("gradient_on_cone requires a generic witness");
    const Subdivision t = regular_subdivision(config, witness);
    return pl_gradient([&](const Covector& g) { return eval_basecondary_general(config, f, g); }, witness,
                       [&](const Covector& g) { return regular_subdivision(config, g) == t; });
}

std::vector<Vec> PiecewiseLinearRep::vertices() const {
    std::vector<Vec> out;
    for (const auto& e : entries) out.push_back(e.gradient);
    return out;
}

CertificateResult convexity_certificate(const PiecewiseLinearRep& rep) {
    CertificateResult out;
    for (std::size_t j = 0; j < rep.entries.size(); ++j) {
        const Covector& w = rep.entries[j].witness;
        Rational own = dot(rep.entries[j].gradient, w);
        for (std::size_t k = 0; k < rep.entries.size(); ++k) {
            if (dot(rep.entries[k].gradient, w) > own) {
                out.holds = false;
                out.failure = std::make_pair(j, k);
                return out;
            }
        }
    }
    return out;
}

PiecewiseLinearRep build_representation(const PLFunction& h, const std::vector<Covector>& witnesses) {
    if (witnesses.empty()) throw InputError("polytope reconstruction needs at least one cone witness");
    PiecewiseLinearRep rep;
    for (const auto& w : witnesses) {
        Vec g = pl_gradient(h, w);
        bool seen = std::any_of(rep.entries.begin(), rep.entries.end(),
                                [&](const PLEntry& e) { return e.gradient == g; });
        if (!seen) rep.entries.push_back(PLEntry{w, std::move(g)});
    }
    CertificateResult cert = convexity_certificate(rep);
    rep.certified = cert.holds;
    rep.failure = cert.failure;
    return rep;
}

PiecewiseLinearRep reconstruct_polytope(const PointConfig& config, const SetFunction& f, const Rational& convexifier,
                                        int samples, std::uint64_t seed) {
    validate_config(config);
    if (static_cast<std::size_t>(f.m) != config.m()) throw InputError("set function and configuration sizes differ");
    std::vector<Covector> witnesses;
    for (const auto& cone : secondary_cones(config, samples, seed)) witnesses.push_back(cone.witness);
    PLFunction h = [&](const Covector& g) {
        Rational value = eval_basecondary_general(config, f, g);
        if (convexifier != 0) value += convexifier * secondary_support(config, g);
        return value;
    };
    return build_representation(h, witnesses);
}

}  // namespace bck
