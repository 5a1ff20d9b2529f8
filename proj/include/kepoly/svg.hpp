#pragma once

#include <string>

#include "kepoly/criterion.hpp"

namespace kepoly {

// Figure of one case: the moment polytope as a single path, the simple
// roots and fundamental weights as arrows from the origin, a marker at
// 2rho_theta, two dashed cone rays from there, and the barycenter dot.
// The viewport is the polytope bounding box plus a 10% margin, so output
// is stable for golden tests.
std::string render_figure(const CaseRecord& rec, const Verdict& verdict);

} // namespace kepoly
