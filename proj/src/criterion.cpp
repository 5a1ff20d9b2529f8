#include "kepoly/criterion.hpp"

namespace kepoly {

std::array<Vec2, 2> cone_generators(const CaseRecord& rec) {
    const RootSystem& rs = realize(rec.restricted_type);
    if (rec.restricted_type == RootLabel::A2) {
        // Restricted roots are the doubles of the realization roots.
        return {QuadNum(2) * rs.simple_roots[0], QuadNum(2) * rs.simple_roots[1]};
    }
    // G2: (1, 0) and (-3, sqrt(3)) = 2 a2.
    return {rs.simple_roots[0], QuadNum(2) * rs.simple_roots[1]};
}

ConeCoordinates in_relative_interior(const Vec2& point, const Vec2& apex,
                                     const std::array<Vec2, 2>& gens) {
    if (cross(gens[0], gens[1]).sign() == 0)
        throw DegenerateInput("cone generators must be linearly independent");
    Vec2 d = point - apex;
    // Columns g1, g2: rows of the system are the coordinate equations.
    Vec2 st = solve2(Vec2{gens[0].x, gens[1].x}, Vec2{gens[0].y, gens[1].y}, d.x, d.y);
    ConeCoordinates out;
    out.s = st.x;
    out.t = st.y;
    out.inside = out.s.sign() > 0 && out.t.sign() > 0;
    return out;
}

namespace {

std::optional<QuadNum> proportionality_coefficient(const Vec2& barycenter, const Vec2& axis) {
    QuadNum c;
    if (axis.x.sign() != 0)
        c = barycenter.x / axis.x;
    else if (axis.y.sign() != 0)
        c = barycenter.y / axis.y;
    else
        return std::nullopt;
    if (barycenter.x == c * axis.x && barycenter.y == c * axis.y)
        return c;
    return std::nullopt;
}

} // namespace

Verdict verdict(const CaseRecord& rec) {
    DhSummary dh = dh_summary(rec);
    Verdict v;
    v.case_id = rec.id;
    v.polytope_vertices = dh.polytope.vertices();
    v.volume = dh.volume;
    v.barycenter = dh.barycenter;
    v.two_rho_theta = rec.two_rho_theta;
    v.cone_generators = cone_generators(rec);
    ConeCoordinates cc = in_relative_interior(v.barycenter, v.two_rho_theta, v.cone_generators);
    v.cone_s = cc.s;
    v.cone_t = cc.t;
    v.ke_exists = cc.inside;
    v.proportionality = proportionality_coefficient(v.barycenter, v.two_rho_theta);
    return v;
}

} // namespace kepoly
