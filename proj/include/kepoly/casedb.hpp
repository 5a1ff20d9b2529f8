#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kepoly/rootdata.hpp"

namespace kepoly {

// Known-correct results stored alongside a case, so acceptance checks are
// data rather than code.
struct ExpectedResults {
    std::vector<Vec2> polytope_vertices;
    QuadNum volume;
    Vec2 barycenter;
    std::optional<Rat> proportionality; // barycenter = c * two_rho_theta, when proportional

    friend bool operator==(const ExpectedResults&, const ExpectedResults&) = default;
};

// One symmetric variety: restricted root data, divisor images realized in
// N (x) R, anticanonical coefficients, and the translation vector 2rho.
struct CaseRecord {
    int id = 0; // 1..6 built-in, 0 for user-defined cases
    std::string name;
    std::string description;
    int dimension = 0;
    int fano_index = 0;
    RootLabel restricted_type = RootLabel::A2;
    int multiplicity = 1;
    std::vector<Vec2> color_normals;      // images of colors, already divided by nothing (raw rho(D_i))
    std::vector<int> color_coefficients;  // m_i in -K_X = sum m_i D_i + sum E_j
    std::vector<Vec2> gstable_normals;    // images of G-stable divisors
    Vec2 two_rho_theta;
    int weight_lattice_scale = 1; // informational: 1 if M is the weight lattice, 2 if its double
    std::optional<ExpectedResults> expected;

    friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

// The six built-in cases, ordered by id.
const std::vector<CaseRecord>& builtin_cases();

// Lookup by 1-based id; throws ValidationError when out of range.
const CaseRecord& builtin_case(int id);

// Checks the record invariants (coefficient counts and positivity, strict
// dominance of two_rho_theta); throws ValidationError naming the violated
// clause.
void validate(const CaseRecord& rec);

// Case file I/O.  Files carry colors in coroot-basis coordinates and
// G-stable images either as coweight combinations or realized points; both
// are converted to realized vectors on load.  load_case validates.
CaseRecord case_from_json(const nlohmann::json& j);
nlohmann::json case_to_json(const CaseRecord& rec);
CaseRecord load_case(const std::filesystem::path& path);
void save_case(const CaseRecord& rec, const std::filesystem::path& path);

} // namespace kepoly
