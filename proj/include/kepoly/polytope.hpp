#pragma once

#include <array>
#include <vector>

#include "kepoly/casedb.hpp"
#include "kepoly/rootdata.hpp"

namespace kepoly {

// Closed half-plane {p : <normal, p> >= offset}.
struct HalfPlane {
    Vec2 normal;
    QuadNum offset;
};

struct Triangle {
    std::array<Vec2, 3> v;
};

// Bounded convex polygon with exact counter-clockwise vertices; strictly
// convex (no three collinear vertices retained).  The constructor checks
// the invariant and throws DegenerateInput on violation.
class Polygon {
public:
    explicit Polygon(std::vector<Vec2> ccw_vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Vec2& operator[](std::size_t i) const { return vertices_[i]; }

private:
    std::vector<Vec2> vertices_;
};

QuadNum signed_area(const Polygon& poly);

// One half-plane per generator of Q_X, i.e. per rho(D_i)/m_i and per
// rho^(E_j):  <v, p - two_rho_theta> >= -1, stored as
// normal = v, offset = <v, two_rho_theta> - 1.
std::vector<HalfPlane> halfplanes_from_case(const CaseRecord& rec);

// Exact bounded intersection of half-planes as a CCW polygon: enumerates
// pairwise boundary intersections, keeps points feasible under every
// constraint, deduplicates exactly, and hulls.  Throws EmptyRegion,
// UnboundedRegion (a recession direction exists, i.e. the normals do not
// positively span the plane) or LowerDimensional (nonempty but without
// interior).
Polygon intersect(const std::vector<HalfPlane>& halfplanes);

// Exact membership; strict = true requires the interior.
bool contains(const Polygon& poly, const Vec2& p, bool strict);

// Fan triangulation from vertices[0]; triangles are CCW and their areas
// sum to the polygon area.
std::vector<Triangle> triangulate(const Polygon& poly);

} // namespace kepoly
