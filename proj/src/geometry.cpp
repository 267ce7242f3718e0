#include "bck/geometry.hpp"

#include "bck/errors.hpp"
#include "bck/polygon.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace bck {

std::vector<IndexList> combinations(int m, int k) {
    std::vector<IndexList> out;
    if (k < 0 || k > m) return out;
    IndexList c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int pos = k;
        while (pos > 0 && c[static_cast<std::size_t>(pos - 1)] == m - k + pos - 1) --pos;
        if (pos == 0) break;
        ++c[static_cast<std::size_t>(pos - 1)];
        for (int i = pos; i < k; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

std::vector<Point> PointConfig::select(const IndexList& idx) const {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (Index i : idx) out.push_back(points.at(static_cast<std::size_t>(i)));
    return out;
}

void validate_config(const PointConfig& config) {
    if (config.n < 0) throw InputError("dimension n must be >= 0");
    if (config.m() < 2) throw InputError("a configuration needs at least two points");
    for (const auto& p : config.points)
        if (p.size() != static_cast<std::size_t>(config.n))
            throw InputError("point with " + std::to_string(p.size()) + " coordinates in dimension " +
                             std::to_string(config.n));
    if (config.n >= 1) {
        auto sorted = config.points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("points must be pairwise distinct");
    }
}

Rational oriented_volume(const std::vector<Point>& simplex) {
    if (simplex.empty()) throw InputError("oriented_volume of an empty simplex");
    const std::size_t k = simplex.size() - 1;
    Mat rows;
    for (std::size_t i = 1; i <= k; ++i) {
        if (simplex[i].size() != k) throw InputError("simplex dimension mismatch");
        Vec r(k);
        for (std::size_t c = 0; c < k; ++c) r[c] = simplex[i][c] - simplex[0][c];
        rows.push_back(std::move(r));
    }
    if (simplex[0].size() != k) throw InputError("simplex dimension mismatch");
    return determinant(std::move(rows));
}

int affine_rank(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("affine_rank of an empty point list");
    Mat rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vec r(points[i].size());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = points[i][c] - points[0][c];
        rows.push_back(std::move(r));
    }
    return rank(std::move(rows));
}

Rational lattice_volume(const std::vector<Point>& points) {
    if (points.empty()) return 0;
    const std::size_t d = points[0].size();
    if (d == 0) return 1;
    if (affine_rank(points) < static_cast<int>(d)) return 0;
    if (d == 1) {
        auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const Point& a, const Point& b) { return a[0] < b[0]; });
        return (*hi)[0] - (*lo)[0];
    }
    if (d == 2) {
        std::vector<P2> pts;
        for (const auto& p : points) pts.push_back({p[0], p[1]});
        return 2 * area(convex_hull(std::move(pts)));
    }
    Rational total = 0;
    for (const auto& simplex : triangulate(points)) total += abs(oriented_volume([&] {
        std::vector<Point> s;
        for (Index i : simplex) s.push_back(points[static_cast<std::size_t>(i)]);
        return s;
    }()));
    return total;
}

AffineFunction affine_fit(const std::vector<Point>& points, const Vec& heights) {
    const std::size_t d = points.empty() ? 0 : points[0].size();
    if (points.size() != d + 1) throw InputError("affine_fit needs d+1 points");
    Mat a;
    for (const auto& p : points) {
        Vec row = p;
        row.push_back(1);
        a.push_back(std::move(row));
    }
    auto sol = solve(std::move(a), heights);
    if (!sol) throw DomainError("affine_fit on affinely dependent points");
    AffineFunction f;
    f.linear.assign(sol->begin(), sol->begin() + static_cast<long>(d));
    f.offset = (*sol)[d];
    return f;
}

std::vector<UpperCell> upper_hull_cells(const std::vector<Point>& points, const Vec& heights) {
    const std::size_t m = points.size();
    if (m == 0) return {};
    const std::size_t d = points[0].size();
    std::map<IndexList, Vec> cells;
    if (m < d + 1) return {};
    for (const IndexList& subset : combinations(static_cast<int>(m), static_cast<int>(d + 1))) {
        std::vector<Point> base;
        Vec h;
        for (Index i : subset) {
            base.push_back(points[static_cast<std::size_t>(i)]);
            h.push_back(heights[static_cast<std::size_t>(i)]);
        }
        bool covered = false;
        for (const auto& entry : cells) {
            const IndexList& members = entry.first;
            if (std::includes(members.begin(), members.end(), subset.begin(), subset.end())) {
                covered = true;
                break;
            }
        }
        if (covered || affine_rank(base) != static_cast<int>(d)) continue;
        AffineFunction f = affine_fit(base, h);
        Vec v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = heights[i] - dot(f.linear, points[i]);
        Rational top = *std::max_element(v.begin(), v.end());
        if (v[static_cast<std::size_t>(subset[0])] != top) continue;
        IndexList members;
        for (std::size_t i = 0; i < m; ++i)
            if (v[i] == top) members.push_back(static_cast<Index>(i));
        std::vector<Point> mp;
        for (Index i : members) mp.push_back(points[static_cast<std::size_t>(i)]);
        if (affine_rank(mp) == static_cast<int>(d)) cells.emplace(members, f.linear);
    }
    std::vector<UpperCell> out;
    for (auto& [members, lin] : cells) out.push_back(UpperCell{members, lin});
    return out;
}

std::vector<IndexList> triangulate(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("triangulate of an empty point set");
    const std::size_t d = points[0].size();
    if (affine_rank(points) != static_cast<int>(d)) throw DomainError("triangulate needs full affine rank");
    for (unsigned seed = 1; seed <= 64; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> num(-1000000, 1000000);
        std::uniform_int_distribution<long> den(1, 1000);
        Vec heights;
        for (std::size_t i = 0; i < points.size(); ++i) {
            long p = num(rng);
            long q = den(rng);
            heights.push_back(frac(p, q));
        }
        auto cells = upper_hull_cells(points, heights);
        bool simplicial = std::all_of(cells.begin(), cells.end(),
                                      [&](const UpperCell& c) { return c.members.size() == d + 1; });
        if (simplicial) {
            std::vector<IndexList> out;
            for (auto& c : cells) out.push_back(c.members);
            return out;
        }
    }
    throw InternalError("triangulate: no generic lifting found");
}

CircuitData find_circuit(const std::vector<Point>& points) {
    if (points.empty()) throw InputError("find_circuit of an empty point list");
    const std::size_t n = points[0].size();
    if (points.size() != n + 2) throw InputError("find_circuit needs exactly n+2 points");
    if (affine_rank(points) != static_cast<int>(n))
        throw InputError("find_circuit: points lie in an affine hyperplane");
    Mat a(n + 1, Vec(n + 2));
    for (std::size_t j = 0; j < n + 2; ++j) {
        for (std::size_t r = 0; r < n; ++r) a[r][j] = points[j][r];
        a[n][j] = 1;
    }
    auto kernel = null_space(std::move(a), n + 2);
    if (kernel.size() != 1) throw InternalError("find_circuit: kernel is not one-dimensional");
    Vec lambda = kernel[0];
    IndexList pos, neg;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] > 0) pos.push_back(static_cast<Index>(j));
        if (lambda[j] < 0) neg.push_back(static_cast<Index>(j));
    }
    bool flip = neg.size() < pos.size() || (neg.size() == pos.size() && neg.front() < pos.front());
    if (flip) {
        for (auto& x : lambda) x = -x;
        std::swap(pos, neg);
    }
    Rational smallest = lambda[static_cast<std::size_t>(pos.front())];
    for (Index j : pos) smallest = std::min(smallest, lambda[static_cast<std::size_t>(j)]);
    CircuitData c;
    c.positive = pos;
    c.negative = neg;
    for (Index j : pos) c.positive_coeffs.push_back(lambda[static_cast<std::size_t>(j)] / smallest);
    for (Index j : neg) c.negative_coeffs.push_back(-lambda[static_cast<std::size_t>(j)] / smallest);
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] != 0)
            c.support.push_back(static_cast<Index>(j));
        else
            c.zero.push_back(static_cast<Index>(j));
    }
    c.ordering = pos;
    c.ordering.insert(c.ordering.end(), neg.begin(), neg.end());
    c.ordering.insert(c.ordering.end(), c.zero.begin(), c.zero.end());
    return c;
}

}  // namespace bck
