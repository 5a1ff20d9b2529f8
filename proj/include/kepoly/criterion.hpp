#pragma once

#include <optional>

#include "kepoly/dhmeasure.hpp"

namespace kepoly {

// Full per-case result of the Kahler-Einstein test.
struct Verdict {
    int case_id = 0;
    std::vector<Vec2> polytope_vertices;
    QuadNum volume;
    Vec2 barycenter;
    Vec2 two_rho_theta;
    std::array<Vec2, 2> cone_generators;
    QuadNum cone_s, cone_t; // barycenter - 2rho = s g1 + t g2
    bool ke_exists = false; // iff sign(s) = sign(t) = +1
    std::optional<QuadNum> proportionality; // c with barycenter = c * two_rho_theta, when it exists
};

// Generators of the cone spanned by the positive restricted roots, in the
// convention the case computations use: the doubled simple roots (2, 0),
// (-1, sqrt(3)) for the A2-restricted cases, and (1, 0), (-3, sqrt(3)) for
// the G2 cases.  Verdicts are invariant under positive rescaling of either
// generator.
std::array<Vec2, 2> cone_generators(const CaseRecord& rec);

struct ConeCoordinates {
    bool inside = false; // relative interior of apex + cone(g1, g2)
    QuadNum s, t;
};

// Solves point - apex = s g1 + t g2 exactly; inside iff both coefficients
// are strictly positive (the cones here are full-dimensional, so relative
// interior = interior).  Throws DegenerateInput on dependent generators.
ConeCoordinates in_relative_interior(const Vec2& point, const Vec2& apex,
                                     const std::array<Vec2, 2>& gens);

// Half-planes -> polygon -> density -> volume/barycenter -> cone test.
Verdict verdict(const CaseRecord& rec);

} // namespace kepoly
