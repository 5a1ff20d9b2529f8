#include "kepoly/casedb.hpp"

#include <fstream>

#include "kepoly/json.hpp"

namespace kepoly {

namespace {

QuadNum q(long num, long den = 1) { return QuadNum(Rat(num, den)); }
QuadNum rt3(long num, long den = 1) { return QuadNum::sqrt3(Rat(num, den)); }

std::vector<CaseRecord> build_builtins() {
    std::vector<CaseRecord> cases;

    // A2 realization: (1/2)a1^ = (1, 0), (1/2)a2^ = (-1/2, sqrt(3)/2)
    const Vec2 a2_half_cr1{q(1), q(0)};
    const Vec2 a2_half_cr2{q(-1, 2), rt3(1, 2)};
    // G2 realization: a1^ = (2, 0), a2^ = (-1, sqrt(3)/3), w2^ = (0, 2 sqrt(3)/3)
    const Vec2 g2_cr1{q(2), q(0)};
    const Vec2 g2_cr2{q(-1), rt3(1, 3)};
    const Vec2 g2_cow2{q(0), rt3(2, 3)};

    {
        CaseRecord c;
        c.id = 1;
        c.name = "SL(3,C)/SO(3,C)";
        c.description = "hyperplane section of LGr(3,6)";
        c.dimension = 5;
        c.fano_index = 3;
        c.restricted_type = RootLabel::A2;
        c.multiplicity = 1;
        c.color_normals = {a2_half_cr1, a2_half_cr2};
        c.color_coefficients = {1, 1};
        c.gstable_normals = {-(a2_half_cr1 + a2_half_cr2)};
        c.two_rho_theta = {q(1), rt3(1)};
        c.weight_lattice_scale = 2;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(3), rt3(1)}, {q(0), rt3(2)}},
            rt3(27, 5),
            {q(5, 4), rt3(5, 4)},
            Rat(5, 4),
        };
        cases.push_back(std::move(c));
    }
    {
        CaseRecord c;
        c.id = 2;
        c.name = "(SL(3,C) x SL(3,C))/SL(3,C)";
        c.description = "hyperplane section of Gr(3,6)";
        c.dimension = 8;
        c.fano_index = 5;
        c.restricted_type = RootLabel::A2;
        c.multiplicity = 2;
        c.color_normals = {QuadNum(2) * a2_half_cr1, QuadNum(2) * a2_half_cr2};
        c.color_coefficients = {2, 2};
        c.gstable_normals = {QuadNum(-2) * (a2_half_cr1 + a2_half_cr2)};
        c.two_rho_theta = {q(1), rt3(1)};
        c.weight_lattice_scale = 1;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(5, 2), rt3(5, 6)}, {q(0), rt3(5, 3)}},
            rt3(78125, 18432),
            {q(10, 9), rt3(10, 9)},
            Rat(10, 9),
        };
        cases.push_back(std::move(c));
    }
    {
        CaseRecord c;
        c.id = 3;
        c.name = "SL(6,C)/Sp(6,C)";
        c.description = "hyperplane section of S6";
        c.dimension = 14;
        c.fano_index = 9;
        c.restricted_type = RootLabel::A2;
        c.multiplicity = 4;
        c.color_normals = {a2_half_cr1, a2_half_cr2};
        c.color_coefficients = {4, 4};
        c.gstable_normals = {-(a2_half_cr1 + a2_half_cr2)};
        c.two_rho_theta = {q(4), rt3(4)};
        c.weight_lattice_scale = 2;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(9), rt3(3)}, {q(0), rt3(6)}},
            QuadNum(Rat(0), Rat::from_string("847288609443/490")),
            {q(21, 5), rt3(21, 5)},
            Rat(21, 20),
        };
        cases.push_back(std::move(c));
    }
    {
        CaseRecord c;
        c.id = 4;
        c.name = "E6/F4";
        c.description = "hyperplane section of E7/P7";
        c.dimension = 26;
        c.fano_index = 17;
        c.restricted_type = RootLabel::A2;
        c.multiplicity = 8;
        c.color_normals = {a2_half_cr1, a2_half_cr2};
        c.color_coefficients = {8, 8};
        c.gstable_normals = {-(a2_half_cr1 + a2_half_cr2)};
        c.two_rho_theta = {q(8), rt3(8)};
        c.weight_lattice_scale = 2;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(17), rt3(17, 3)}, {q(0), rt3(34, 3)}},
            QuadNum(Rat(0), Rat::from_string("5770627412348402378939569991057/501930")),
            {q(221, 27), rt3(221, 27)},
            Rat(221, 216),
        };
        cases.push_back(std::move(c));
    }
    {
        CaseRecord c;
        c.id = 5;
        c.name = "G2/(SL(2,C) x SL(2,C))";
        c.description = "Cayley Grassmannian";
        c.dimension = 8;
        c.fano_index = 4;
        c.restricted_type = RootLabel::G2;
        c.multiplicity = 1;
        c.color_normals = {QuadNum(Rat(1, 2)) * g2_cr1, QuadNum(Rat(1, 2)) * g2_cr2};
        c.color_coefficients = {1, 1};
        c.gstable_normals = {QuadNum(Rat(-1, 2)) * g2_cow2};
        c.two_rho_theta = {q(1), rt3(3)};
        c.weight_lattice_scale = 2;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(4), rt3(4)}, {q(0), rt3(4)}},
            rt3(29952),
            {q(512, 273), rt3(32, 9)},
            std::nullopt,
        };
        cases.push_back(std::move(c));
    }
    {
        CaseRecord c;
        c.id = 6;
        c.name = "(G2 x G2)/G2";
        c.description = "double Cayley Grassmannian";
        c.dimension = 14;
        c.fano_index = 7;
        c.restricted_type = RootLabel::G2;
        c.multiplicity = 2;
        c.color_normals = {g2_cr1, g2_cr2};
        c.color_coefficients = {2, 2};
        c.gstable_normals = {-g2_cow2};
        c.two_rho_theta = {q(1), rt3(3)};
        c.weight_lattice_scale = 1;
        c.expected = ExpectedResults{
            {{q(0), q(0)}, {q(7, 2), rt3(7, 2)}, {q(0), rt3(7, 2)}},
            QuadNum(Rat(0), Rat::from_string("34755472161711/720896")),
            {q(139601, 79360), rt3(49, 15)},
            std::nullopt,
        };
        cases.push_back(std::move(c));
    }
    for (const auto& c : cases)
        validate(c);
    return cases;
}

} // namespace

const std::vector<CaseRecord>& builtin_cases() {
    static const std::vector<CaseRecord> cases = build_builtins();
    return cases;
}

const CaseRecord& builtin_case(int id) {
    if (id < 1 || id > 6)
        throw ValidationError("case id must be in 1..6, got " + std::to_string(id));
    return builtin_cases()[static_cast<std::size_t>(id - 1)];
}

void validate(const CaseRecord& rec) {
    if (rec.multiplicity < 1)
        throw ValidationError("multiplicity must be >= 1");
    if (rec.color_normals.size() != rec.color_coefficients.size())
        throw ValidationError("color_normals and color_coefficients must have equal length");
    for (int m : rec.color_coefficients)
        if (m < 1)
            throw ValidationError("color_coefficients must be >= 1");
    for (const Vec2& v : rec.color_normals)
        if (v.is_zero())
            throw ValidationError("color normal must be nonzero");
    for (const Vec2& v : rec.gstable_normals)
        if (v.is_zero())
            throw ValidationError("gstable normal must be nonzero");
    if (rec.weight_lattice_scale != 1 && rec.weight_lattice_scale != 2)
        throw ValidationError("weight_lattice_scale must be 1 or 2");
    const RootSystem& rs = realize(rec.restricted_type);
    for (const Vec2& alpha : rs.simple_roots)
        if (pairing(coroot(alpha), rec.two_rho_theta).sign() <= 0)
            throw ValidationError("two_rho_theta not strictly dominant");
}

namespace {

ExpectedResults expected_from_json(const nlohmann::json& j) {
    ExpectedResults e;
    e.polytope_vertices = j.at("polytope_vertices").get<std::vector<Vec2>>();
    e.volume = j.at("volume").get<QuadNum>();
    e.barycenter = j.at("barycenter").get<Vec2>();
    if (j.contains("proportionality"))
        e.proportionality = j.at("proportionality").get<Rat>();
    return e;
}

nlohmann::json expected_to_json(const ExpectedResults& e) {
    nlohmann::json j{
        {"polytope_vertices", e.polytope_vertices},
        {"volume", e.volume},
        {"barycenter", e.barycenter},
    };
    if (e.proportionality)
        j["proportionality"] = *e.proportionality;
    return j;
}

// Coordinates of v in the basis {coroot(a1), coroot(a2)}; must be rational.
std::array<Rat, 2> coroot_coordinates(const Vec2& v, const RootSystem& rs) {
    Vec2 c1 = coroot(rs.simple_roots[0]);
    Vec2 c2 = coroot(rs.simple_roots[1]);
    Vec2 coeffs = solve2(Vec2{c1.x, c2.x}, Vec2{c1.y, c2.y}, v.x, v.y);
    if (!coeffs.x.is_rational() || !coeffs.y.is_rational())
        throw ValidationError("color normal " + v.str() + " is not a rational combination of coroots");
    return {coeffs.x.rat_part(), coeffs.y.rat_part()};
}

std::array<Rat, 2> rat_pair(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + " must be an array of two rationals");
    return {j.at(0).get<Rat>(), j.at(1).get<Rat>()};
}

} // namespace

CaseRecord case_from_json(const nlohmann::json& j) {
    CaseRecord rec;
    try {
        rec.name = j.at("name").get<std::string>();
        rec.restricted_type = root_label_from_string(j.at("restricted_type").get<std::string>());
        rec.multiplicity = j.at("multiplicity").get<int>();
        const RootSystem& rs = realize(rec.restricted_type);
        const Vec2 cr1 = coroot(rs.simple_roots[0]);
        const Vec2 cr2 = coroot(rs.simple_roots[1]);

        for (const auto& entry : j.at("colors")) {
            auto c = rat_pair(entry.at("normal_coroot_basis"), "normal_coroot_basis");
            rec.color_normals.push_back(QuadNum(c[0]) * cr1 + QuadNum(c[1]) * cr2);
            rec.color_coefficients.push_back(entry.at("anticanonical_coefficient").get<int>());
        }
        for (const auto& entry : j.at("gstable")) {
            if (entry.is_object() && entry.contains("normal_coweight_combination")) {
                auto c = rat_pair(entry.at("normal_coweight_combination"), "normal_coweight_combination");
                rec.gstable_normals.push_back(QuadNum(c[0]) * rs.fundamental_coweights[0] +
                                              QuadNum(c[1]) * rs.fundamental_coweights[1]);
            } else {
                rec.gstable_normals.push_back(entry.get<Vec2>());
            }
        }
        rec.two_rho_theta = j.at("two_rho_theta").get<Vec2>();

        rec.id = j.value("id", 0);
        rec.description = j.value("description", std::string{});
        rec.dimension = j.value("dimension", 0);
        rec.fano_index = j.value("fano_index", 0);
        rec.weight_lattice_scale = j.value("weight_lattice_scale", 1);
        if (j.contains("expected"))
            rec.expected = expected_from_json(j.at("expected"));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed case record: ") + e.what());
    }
    return rec;
}

nlohmann::json case_to_json(const CaseRecord& rec) {
    const RootSystem& rs = realize(rec.restricted_type);
    nlohmann::json colors = nlohmann::json::array();
    for (std::size_t i = 0; i < rec.color_normals.size(); ++i) {
        auto c = coroot_coordinates(rec.color_normals[i], rs);
        colors.push_back({
            {"normal_coroot_basis", {c[0], c[1]}},
            {"anticanonical_coefficient", rec.color_coefficients[i]},
        });
    }
    nlohmann::json j{
        {"id", rec.id},
        {"name", rec.name},
        {"description", rec.description},
        {"dimension", rec.dimension},
        {"fano_index", rec.fano_index},
        {"restricted_type", std::string(to_string(rec.restricted_type))},
        {"multiplicity", rec.multiplicity},
        {"colors", colors},
        {"gstable", rec.gstable_normals},
        {"two_rho_theta", rec.two_rho_theta},
        {"weight_lattice_scale", rec.weight_lattice_scale},
    };
    if (rec.expected)
        j["expected"] = expected_to_json(*rec.expected);
    return j;
}

CaseRecord load_case(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read case file: " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed case file " + path.string() + ": " + e.what());
    }
    CaseRecord rec = case_from_json(j);
    validate(rec);
    return rec;
}

void save_case(const CaseRecord& rec, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write case file: " + path.string());
    out << case_to_json(rec).dump(2) << '\n';
    if (!out)
        throw IoError("error writing case file: " + path.string());
}

} // namespace kepoly
