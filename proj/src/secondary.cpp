#include "bck/secondary.hpp"

#include "bck/errors.hpp"
#include "bck/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bck {

bool Subdivision::is_triangulation(int n) const {
    return std::all_of(cells.begin(), cells.end(),
                       [n](const IndexList& c) { return c.size() == static_cast<std::size_t>(n + 1); });
}

IndexList Subdivision::vertices() const {
    std::set<Index> all;
    for (const auto& c : cells) all.insert(c.begin(), c.end());
    return {all.begin(), all.end()};
}

namespace {

void check_heights(const PointConfig& config, const Covector& gamma) {
    if (gamma.size() != config.m())
        throw InputError("covector length " + std::to_string(gamma.size()) + " differs from m = " +
                         std::to_string(config.m()));
}

void check_one_dimensional(const PointConfig& config, const char* what) {
    if (config.n != 1) throw DomainError(std::string(what) + " requires a one-dimensional configuration");
}

IndexList sorted_by_coordinate(const PointConfig& config, IndexList idx) {
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) {
        return config.points[static_cast<std::size_t>(a)][0] < config.points[static_cast<std::size_t>(b)][0];
    });
    return idx;
}

Rational chord_value(const PointConfig& config, const Covector& g, Index u, Index w, const Rational& x) {
    const Rational& xu = config.points[static_cast<std::size_t>(u)][0];
    const Rational& xw = config.points[static_cast<std::size_t>(w)][0];
    return g[static_cast<std::size_t>(u)] +
           (g[static_cast<std::size_t>(w)] - g[static_cast<std::size_t>(u)]) * (x - xu) / (xw - xu);
}

}  // namespace

Subdivision regular_subdivision(const PointConfig& config, const Covector& gamma) {
    check_heights(config, gamma);
    Subdivision s;
    for (auto& cell : upper_hull_cells(config.points, gamma)) s.cells.push_back(std::move(cell.members));
    return s;
}

bool is_generic_heights(const PointConfig& config, const Covector& gamma) {
    check_heights(config, gamma);
    for (const auto& cell : upper_hull_cells(config.points, gamma)) {
        if (cell.members.size() != static_cast<std::size_t>(config.n + 1)) return false;
        std::vector<Rational> off;
        for (std::size_t i = 0; i < config.m(); ++i) {
            if (std::binary_search(cell.members.begin(), cell.members.end(), static_cast<Index>(i))) continue;
            off.push_back(gamma[i] - dot(cell.linear, config.points[i]));
        }
        std::sort(off.begin(), off.end());
        if (std::adjacent_find(off.begin(), off.end()) != off.end()) return false;
    }
    return true;
}

Subdivision chain_subdivision(const PointConfig& config, IndexList vertices) {
    check_one_dimensional(config, "chain_subdivision");
    vertices = sorted_by_coordinate(config, std::move(vertices));
    Subdivision s;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        IndexList cell{vertices[k], vertices[k + 1]};
        std::sort(cell.begin(), cell.end());
        s.cells.push_back(cell);
    }
    std::sort(s.cells.begin(), s.cells.end());
    return s;
}

std::vector<Subdivision> enumerate_triangulations_1d(const PointConfig& config) {
    check_one_dimensional(config, "enumerate_triangulations_1d");
    validate_config(config);
    IndexList all(config.m());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
    IndexList by_x = sorted_by_coordinate(config, all);
    Index lo = by_x.front(), hi = by_x.back();
    IndexList inner;
    for (Index i : all)
        if (i != lo && i != hi) inner.push_back(i);
    std::vector<Subdivision> out;
    for (int r = 0; r <= static_cast<int>(inner.size()); ++r) {
        for (const auto& pick : combinations(static_cast<int>(inner.size()), r)) {
            IndexList v{lo, hi};
            for (Index k : pick) v.push_back(inner[static_cast<std::size_t>(k)]);
            std::sort(v.begin(), v.end());
            out.push_back(chain_subdivision(config, v));
        }
    }
    return out;
}

Vec gkz_vector(const PointConfig& config, const Subdivision& t) {
    if (!t.is_triangulation(config.n)) throw DomainError("gkz_vector requires a triangulation");
    Vec phi = zeros(config.m());
    for (const auto& cell : t.cells) {
        Rational vol = lattice_volume(config.select(cell));
        for (Index i : cell) phi[static_cast<std::size_t>(i)] += vol;
    }
    return phi;
}

Rational secondary_support(const PointConfig& config, const Covector& gamma) {
    check_heights(config, gamma);
    Rational total = 0;
    for (const auto& cell : upper_hull_cells(config.points, gamma)) {
        if (config.n == 0) {
            total += gamma[static_cast<std::size_t>(cell.members.front())];
            continue;
        }
        if (config.n == 1) {
            IndexList ends = sorted_by_coordinate(config, cell.members);
            auto u = static_cast<std::size_t>(ends.front()), w = static_cast<std::size_t>(ends.back());
            total += (config.points[w][0] - config.points[u][0]) * (gamma[u] + gamma[w]);
            continue;
        }
        // gamma is affine on the cell, so any triangulation of it gives the same value
        auto pts = config.select(cell.members);
        for (const auto& simplex : triangulate(pts)) {
            std::vector<Point> s;
            Rational heights = 0;
            for (Index k : simplex) {
                s.push_back(pts[static_cast<std::size_t>(k)]);
                heights += gamma[static_cast<std::size_t>(cell.members[static_cast<std::size_t>(k)])];
            }
            total += abs(oriented_volume(s)) * heights;
        }
    }
    return total;
}

Rational area_N(const PointConfig& config, const Covector& gamma) {
    check_one_dimensional(config, "area_N");
    check_heights(config, gamma);
    std::vector<P2> pts;
    for (std::size_t i = 0; i < config.m(); ++i) {
        if (gamma[i] < 0) throw DomainError("area_N requires nonnegative heights");
        pts.push_back({config.points[i][0], Rational(0)});
        pts.push_back({config.points[i][0], gamma[i]});
    }
    return area(convex_hull(std::move(pts)));
}

Covector cone_witness(const PointConfig& config, const Subdivision& t) {
    check_one_dimensional(config, "cone_witness");
    if (!t.is_triangulation(1)) throw DomainError("cone_witness requires a triangulation");
    const std::size_t m = config.m();
    IndexList verts = sorted_by_coordinate(config, t.vertices());
    std::vector<bool> is_vertex(m, false);
    for (Index v : verts) is_vertex[static_cast<std::size_t>(v)] = true;
    // strict concavity of -a^2 leaves a gap of at least the squared minimal
    // spacing; perturbations stay well inside it
    Rational spacing = -1;
    for (std::size_t k = 1; k < verts.size(); ++k) {
        Rational d = config.points[static_cast<std::size_t>(verts[k])][0] -
                     config.points[static_cast<std::size_t>(verts[k - 1])][0];
        if (spacing < 0 || d < spacing) spacing = d;
    }
    if (spacing < 0) spacing = 1;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> jitter(0, 1000);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rational eps = frac(1, 7 + attempt) * spacing * spacing / 4;
        Covector g(m);
        // vertices on a strictly concave parabola, with a fresh pseudo-random
        // perturbation per attempt (a fixed pattern could keep a tie forever)
        for (Index v : verts) {
            const Rational& a = config.points[static_cast<std::size_t>(v)][0];
            g[static_cast<std::size_t>(v)] = -a * a + eps * frac(jitter(rng), 1000);
        }
        // non-vertices strictly below the chord of their enclosing cell, at distinct depths
        for (std::size_t i = 0; i < m; ++i) {
            if (is_vertex[i]) continue;
            const Rational& x = config.points[i][0];
            Index u = -1, w = -1;
            for (Index v : verts) {
                if (config.points[static_cast<std::size_t>(v)][0] < x) u = v;
                if (config.points[static_cast<std::size_t>(v)][0] > x && w < 0) w = v;
            }
            if (u < 0 || w < 0) throw DomainError("cone_witness: triangulation misses an extreme point");
            Rational depth = (1 + frac(static_cast<long>(i) + 1, static_cast<long>(m) + 1)) * (1 + eps) +
                             eps * frac(jitter(rng), 1000);
            g[i] = chord_value(config, g, u, w, x) - depth;
        }
        if (regular_subdivision(config, g) == t && is_generic_heights(config, g)) return g;
    }
    throw InternalError("cone_witness: no generic witness within the perturbation budget");
}

std::vector<Wall> enumerate_walls_1d(const PointConfig& config) {
    std::vector<Wall> walls;
    for (const auto& t : enumerate_triangulations_1d(config)) {
        IndexList verts = sorted_by_coordinate(config, t.vertices());
        for (std::size_t k = 1; k + 1 < verts.size(); ++k) {
            Index j = verts[k], u = verts[k - 1], w = verts[k + 1];
            IndexList coarse;
            for (Index v : verts)
                if (v != j) coarse.push_back(v);
            Wall wall;
            wall.left = t;
            wall.right = chain_subdivision(config, coarse);
            // start inside the coarser cone and raise j onto the chord of its neighbours
            wall.witness = cone_witness(config, wall.right);
            wall.witness[static_cast<std::size_t>(j)] =
                chord_value(config, wall.witness, u, w, config.points[static_cast<std::size_t>(j)][0]);
            wall.direction = unit_vector(config.m(), static_cast<std::size_t>(j));
            wall.circuit_members = {u, j, w};
            std::sort(wall.circuit_members.begin(), wall.circuit_members.end());
            wall.circuit = find_circuit(config.select(wall.circuit_members));
            walls.push_back(std::move(wall));
        }
    }
    return walls;
}

Covector random_heights(std::size_t m, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Covector g(m);
    for (auto& x : g) {
        long p = num(rng);
        long q = den(rng);
        x = frac(p, q);
    }
    return g;
}

std::vector<Cone> discover_cones_random(const PointConfig& config, int samples, std::uint64_t seed, long bound) {
    validate_config(config);
    if (samples < 1) throw InputError("samples must be >= 1");
    std::mt19937_64 rng(seed);
    std::map<Subdivision, Covector> found;
    for (int s = 0; s < samples; ++s) {
        Covector g = random_heights(config.m(), rng, bound);
        if (!is_generic_heights(config, g)) continue;
        found.emplace(regular_subdivision(config, g), g);
    }
    std::vector<Cone> out;
    for (auto& [sub, wit] : found) out.push_back(Cone{sub, wit});
    return out;
}

std::vector<Cone> secondary_cones(const PointConfig& config, int samples, std::uint64_t seed) {
    if (config.n != 1) return discover_cones_random(config, samples, seed);
    std::vector<Cone> out;
    for (const auto& t : enumerate_triangulations_1d(config)) out.push_back(Cone{t, cone_witness(config, t)});
    return out;
}

}  // namespace bck
