#include "kepoly/polytope.hpp"

#include <algorithm>
#include <optional>

namespace kepoly {

namespace {

bool lex_less(const Vec2& a, const Vec2& b) {
    int cx = (a.x - b.x).sign();
    if (cx != 0)
        return cx < 0;
    return (a.y - b.y).sign() < 0;
}

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

// Andrew's monotone chain keeping only strict turns, so the hull is
// strictly convex.  Input must be deduplicated.  Output is CCW.
std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    if (pts.size() < 3)
        return pts;
    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 && orient(chain[chain.size() - 2], chain.back(), *it) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(pts.begin(), pts.end());
    std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

bool satisfies_all(const std::vector<HalfPlane>& hps, const Vec2& p) {
    for (const HalfPlane& h : hps)
        if ((pairing(h.normal, p) - h.offset).sign() < 0)
            return false;
    return true;
}

// Nonzero direction d with <n, d> >= 0 for every normal n, if one exists.
// Any such direction can be taken perpendicular to some normal, since the
// recession cone's boundary rays are tight on at least one constraint.
std::optional<Vec2> recession_direction(const std::vector<HalfPlane>& hps) {
    for (const HalfPlane& h : hps) {
        Vec2 perp{-h.normal.y, h.normal.x};
        for (const Vec2& d : {perp, -perp}) {
            bool ok = true;
            for (const HalfPlane& g : hps)
                if (pairing(g.normal, d).sign() < 0) {
                    ok = false;
                    break;
                }
            if (ok)
                return d;
        }
    }
    return std::nullopt;
}

// All normals parallel: the problem is one-dimensional along the first
// normal.  Classifies the region as empty, a line, or an unbounded slab.
[[noreturn]] void classify_parallel(const std::vector<HalfPlane>& hps) {
    const Vec2& axis = hps.front().normal;
    std::optional<QuadNum> lo, hi;
    for (const HalfPlane& h : hps) {
        QuadNum t = axis.x.sign() != 0 ? h.normal.x / axis.x : h.normal.y / axis.y;
        QuadNum bound = h.offset / t;
        if (t.sign() > 0) {
            if (!lo || bound > *lo)
                lo = bound;
        } else {
            if (!hi || bound < *hi)
                hi = bound;
        }
    }
    if (lo && hi) {
        int c = (*lo - *hi).sign();
        if (c > 0)
            throw EmptyRegion("contradictory parallel half-planes");
        if (c == 0)
            throw LowerDimensional("feasible set is a line");
    }
    throw UnboundedRegion("parallel half-plane normals do not positively span the plane");
}

} // namespace

Polygon::Polygon(std::vector<Vec2> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3)
        throw DegenerateInput("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        const Vec2& c = vertices_[(i + 2) % n];
        if (orient(a, b, c) <= 0)
            throw DegenerateInput("polygon vertices must be strictly convex in CCW order");
    }
}

QuadNum signed_area(const Polygon& poly) {
    QuadNum twice(0);
    for (std::size_t i = 0; i < poly.size(); ++i)
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    return twice / QuadNum(2);
}

std::vector<HalfPlane> halfplanes_from_case(const CaseRecord& rec) {
    std::vector<HalfPlane> hps;
    auto add = [&](const Vec2& v) { hps.push_back({v, pairing(v, rec.two_rho_theta) - QuadNum(1)}); };
    for (std::size_t i = 0; i < rec.color_normals.size(); ++i) {
        QuadNum inv_m(Rat(1, rec.color_coefficients[i]));
        add(inv_m * rec.color_normals[i]);
    }
    for (const Vec2& v : rec.gstable_normals)
        add(v);
    return hps;
}

Polygon intersect(const std::vector<HalfPlane>& halfplanes) {
    if (halfplanes.empty())
        throw UnboundedRegion("no half-planes given");
    for (const HalfPlane& h : halfplanes)
        if (h.normal.is_zero())
            throw DegenerateInput("half-plane normal must be nonzero");

    std::vector<Vec2> candidates;
    bool any_nonparallel = false;
    for (std::size_t i = 0; i < halfplanes.size(); ++i) {
        for (std::size_t j = i + 1; j < halfplanes.size(); ++j) {
            const HalfPlane& a = halfplanes[i];
            const HalfPlane& b = halfplanes[j];
            if (cross(a.normal, b.normal).sign() == 0)
                continue;
            any_nonparallel = true;
            Vec2 p = solve2(a.normal, b.normal, a.offset, b.offset);
            if (satisfies_all(halfplanes, p))
                candidates.push_back(p);
        }
    }

    if (candidates.empty()) {
        if (!any_nonparallel)
            classify_parallel(halfplanes);
        // Some pair of constraints is non-parallel, so a nonempty region
        // would have a vertex, and that vertex would be a candidate.
        throw EmptyRegion("half-planes have no common point");
    }

    if (auto d = recession_direction(halfplanes))
        throw UnboundedRegion("feasible region recedes along " + d->str());

    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Vec2> hull = convex_hull_ccw(std::move(candidates));
    if (hull.size() < 3)
        throw LowerDimensional("feasible region has empty interior");
    return Polygon(std::move(hull));
}

bool contains(const Polygon& poly, const Vec2& p, bool strict) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        int side = orient(poly[i], poly[(i + 1) % poly.size()], p);
        if (side < 0 || (strict && side == 0))
            return false;
    }
    return true;
}

std::vector<Triangle> triangulate(const Polygon& poly) {
    std::vector<Triangle> tris;
    tris.reserve(poly.size() - 2);
    for (std::size_t i = 1; i + 1 < poly.size(); ++i)
        tris.push_back(Triangle{{poly[0], poly[i], poly[i + 1]}});
    return tris;
}

} // namespace kepoly
