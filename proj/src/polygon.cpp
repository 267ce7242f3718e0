#include "bck/polygon.hpp"

#include "bck/errors.hpp"

#include <algorithm>

namespace bck {

namespace {

Rational cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational cross(const P2& u, const P2& v) { return u[0] * v[1] - u[1] * v[0]; }

// Half-plane class of a nonzero edge vector for angular sorting from the
// direction (1, 0): 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half(const P2& e) { return (e[1] > 0 || (e[1] == 0 && e[0] > 0)) ? 0 : 1; }

bool angle_less(const P2& u, const P2& v) {
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}

}  // namespace

Polygon2 convex_hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return Polygon2{pts};
    std::vector<P2> hull;
    hull.reserve(2 * pts.size());
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() == 2 || (hull.size() > 2 && area(Polygon2{hull}) == 0)) {
        // collinear input: keep the two extremes
        return Polygon2{{pts.front(), pts.back()}};
    }
    return Polygon2{hull};
}

Rational area(const Polygon2& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3) return 0;
    Rational twice = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[0], v[i], v[i + 1]);
    return twice / 2;
}

Polygon2 scale(const Polygon2& poly, const Rational& s) {
    if (s == 0 && !poly.empty()) return Polygon2{{P2{Rational(0), Rational(0)}}};
    std::vector<P2> out;
    out.reserve(poly.vertices.size());
    for (const auto& v : poly.vertices) out.push_back({v[0] * s, v[1] * s});
    if (s < 0) return convex_hull(out);
    return Polygon2{out};
}

Polygon2 translate(const Polygon2& poly, const P2& offset) {
    Polygon2 out = poly;
    for (auto& v : out.vertices) {
        v[0] += offset[0];
        v[1] += offset[1];
    }
    return out;
}

Polygon2 minkowski_sum(const Polygon2& a, const Polygon2& b) {
    if (a.empty() || b.empty()) return Polygon2{};
    if (a.vertices.size() == 1) return translate(b, a.vertices[0]);
    if (b.vertices.size() == 1) return translate(a, b.vertices[0]);

    // Edge vectors of a closed CCW polygon in angular order starting from
    // the bottom-most (then left-most) vertex.
    auto edges_from_bottom = [](const Polygon2& p, P2& start) {
        const auto& v = p.vertices;
        std::size_t s = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i][1] < v[s][1] || (v[i][1] == v[s][1] && v[i][0] < v[s][0])) s = i;
        start = v[s];
        std::vector<P2> e;
        for (std::size_t k = 0; k < v.size(); ++k) {
            const auto& p0 = v[(s + k) % v.size()];
            const auto& p1 = v[(s + k + 1) % v.size()];
            e.push_back({p1[0] - p0[0], p1[1] - p0[1]});
        }
        return e;
    };
    P2 sa, sb;
    auto ea = edges_from_bottom(a, sa);
    auto eb = edges_from_bottom(b, sb);
    std::vector<P2> pts;
    P2 cur{sa[0] + sb[0], sa[1] + sb[1]};
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        pts.push_back(cur);
        const P2* step;
        if (j == eb.size() || (i < ea.size() && angle_less(ea[i], eb[j])))
            step = &ea[i++];
        else
            step = &eb[j++];
        cur[0] += (*step)[0];
        cur[1] += (*step)[1];
    }
    return convex_hull(pts);
}

Rational support(const Polygon2& poly, const P2& d) {
    if (poly.empty()) throw DomainError("support of an empty polygon");
    Rational best = poly.vertices[0][0] * d[0] + poly.vertices[0][1] * d[1];
    for (const auto& v : poly.vertices) {
        Rational s = v[0] * d[0] + v[1] * d[1];
        if (s > best) best = s;
    }
    return best;
}

Polygon2 fiber_slice(const std::vector<P3>& vertices, const Rational& xi) {
    std::vector<P2> cuts;
    for (const auto& a : vertices) {
        for (const auto& b : vertices) {
            if (!(a[0] <= xi && xi <= b[0])) continue;
            if (a[0] == b[0]) {
                cuts.push_back({a[1], a[2]});
                cuts.push_back({b[1], b[2]});
            } else {
                Rational t = (xi - a[0]) / (b[0] - a[0]);
                cuts.push_back({a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])});
            }
        }
    }
    return convex_hull(std::move(cuts));
}

Polygon2 fiber_polygon(const std::vector<P3>& vertices) {
    if (vertices.empty()) throw InputError("fiber_polygon of an empty vertex set");
    std::vector<Rational> xs;
    for (const auto& v : vertices) xs.push_back(v[0]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Polygon2 acc{{P2{Rational(0), Rational(0)}}};
    std::vector<Polygon2> slices;
    for (const auto& x : xs) slices.push_back(fiber_slice(vertices, x));
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        Rational h = (xs[k + 1] - xs[k]) / 2;
        acc = minkowski_sum(acc, minkowski_sum(scale(slices[k], h), scale(slices[k + 1], h)));
    }
    return acc;
}

}  // namespace bck
