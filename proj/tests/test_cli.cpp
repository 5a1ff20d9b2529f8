#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <regex>

#include "kepoly/casedb.hpp"
#include "kepoly/json.hpp"
#include "subprocess.hpp"

using testutil::run_tool;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

// Minimal XML well-formedness scan: prolog, balanced tags, one root.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    while ((i = text.find('<', i)) != std::string::npos) {
        std::size_t close = text.find('>', i);
        if (close == std::string::npos)
            return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty())
            return false;
        if (tag.front() == '?') {
            if (tag.back() != '?')
                return false;
            continue;
        }
        if (tag.front() == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name)
                return false;
            stack.pop_back();
            if (stack.empty())
                ++roots;
            continue;
        }
        std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
        if (tag.back() == '/')
            continue; // self-closing
        stack.push_back(name);
    }
    return stack.empty() && roots == 1;
}

double attr_value(const std::string& text, const std::string& elem_id, const std::string& attr) {
    std::regex elem_re("<[^>]*id=\"" + elem_id + "\"[^>]*>");
    std::smatch m;
    REQUIRE(std::regex_search(text, m, elem_re));
    std::string elem = m.str();
    std::regex attr_re(attr + "=\"([-0-9.]+)\"");
    REQUIRE(std::regex_search(elem, m, attr_re));
    return std::stod(m.str(1));
}

} // namespace

TEST_CASE("list prints the six cases") {
    auto r = run_tool("list");
    CHECK(r.code == 0);
    CHECK(r.out.find("Cayley Grassmannian") != std::string::npos);
    CHECK(r.out.find("SL(3,C)/SO(3,C)") != std::string::npos);
    CHECK(r.out.find("E6/F4") != std::string::npos);

    auto j = run_tool("list --format json");
    CHECK(j.code == 0);
    auto arr = nlohmann::json::parse(j.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 6);
    CHECK(arr[4]["description"] == "Cayley Grassmannian");
    CHECK(arr[2]["dimension"] == 14);
    CHECK(arr[2]["fano_index"] == 9);

    auto c = run_tool("list --format csv");
    CHECK(c.code == 0);
    CHECK(c.out.find("id,name,dimension") == 0);
}

TEST_CASE("check a single case") {
    auto r = run_tool("check 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("(5/4, 5/4·√3)") != std::string::npos);
    CHECK(r.out.find("27/5·√3") != std::string::npos);
    CHECK(r.out.find("KE") != std::string::npos);
}

TEST_CASE("check --all succeeds and its json is byte-stable") {
    auto a = run_tool("check --all --format json");
    auto b = run_tool("check --all --format json");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);

    auto j = nlohmann::json::parse(a.out);
    CHECK(j["all_ke"] == true);
    REQUIRE(j["cases"].size() == 6);
    CHECK(j["version"] == "1.0.0");
    for (int i = 0; i < 6; ++i) {
        const auto& jc = j["cases"][i];
        CHECK(jc["id"] == i + 1);
        CHECK(jc["ke_exists"] == true);
        CHECK(jc.contains("vertices"));
        CHECK(jc.contains("volume"));
        CHECK(jc.contains("barycenter"));
        CHECK(jc.contains("two_rho_theta"));
        CHECK(jc.contains("cone_coefficients"));
        CHECK((i < 4) == jc.contains("proportionality"));
    }
    // the exact strings are the contract
    CHECK(j["cases"][0]["volume"]["sqrt3"] == "27/5");
    CHECK(j["cases"][0]["volume"]["rat"] == "0");
    CHECK(j["cases"][3]["proportionality"]["rat"] == "221/216");
}

TEST_CASE("check usage and failure exit codes") {
    CHECK(run_tool("check 9").code == 64);
    CHECK(run_tool("check").code == 64);
    CHECK(run_tool("check 1 --all").code == 64);
    CHECK(run_tool("bogus-subcommand").code == 64);

    auto bad = temp_file("kepoly_cli_bad_case.json");
    nlohmann::json j = kepoly::case_to_json(kepoly::builtin_case(2));
    j["colors"][0]["anticanonical_coefficient"] = 0;
    std::ofstream(bad) << j.dump();
    auto r = run_tool("check --case-file " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("color_coefficients") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("a failing case exits with code 2") {
    nlohmann::json j = kepoly::case_to_json(kepoly::builtin_case(1));
    j.erase("expected");
    j["name"] = "capped wedge";
    j["colors"][0]["anticanonical_coefficient"] = 9;
    j["gstable"] = nlohmann::json::array(
        {{{"x", {{"rat", "0"}, {"sqrt3", "0"}}}, {"y", {{"rat", "0"}, {"sqrt3", "-1"}}}}});
    j["two_rho_theta"]["x"] = {{"rat", "10"}, {"sqrt3", "0"}};
    j["two_rho_theta"]["y"] = {{"rat", "0"}, {"sqrt3", "4"}};
    auto path = temp_file("kepoly_cli_negative_case.json");
    std::ofstream(path) << j.dump();
    auto r = run_tool("check --case-file " + path.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("not KE") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("figure output is well-formed and structurally right") {
    auto svg_path = temp_file("kepoly_cli_delta1.svg");
    auto r = run_tool("figure 1 --out " + svg_path.string());
    CHECK(r.code == 0);
    std::string svg = testutil::slurp(svg_path);
    CHECK(xml_well_formed(svg));

    // exactly three vertices in the polytope path: one M and two L commands
    std::regex d_re("<path id=\"polytope\"[^>]*d=\"([^\"]*)\"");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, d_re));
    std::string d = m.str(1);
    auto count = [&](const std::string& tok) {
        std::size_t n = 0, pos = 0;
        while ((pos = d.find(tok, pos)) != std::string::npos) {
            ++n;
            ++pos;
        }
        return n;
    };
    CHECK(count("M ") == 1);
    CHECK(count("L ") == 2);
    CHECK(d.find('Z') != std::string::npos);

    CHECK(svg.find("id=\"barycenter\"") != std::string::npos);
    CHECK(svg.find("id=\"two-rho\"") != std::string::npos);
    CHECK(svg.find("class=\"cone-ray\"") != std::string::npos);
    CHECK(svg.find("class=\"simple-root\"") != std::string::npos);
    CHECK(svg.find("class=\"fundamental-weight\"") != std::string::npos);
    std::filesystem::remove(svg_path);
}

TEST_CASE("figure 5 barycenter marker sits inside the cone wedge") {
    auto svg_path = temp_file("kepoly_cli_delta5.svg");
    CHECK(run_tool("figure 5 --out " + svg_path.string()).code == 0);
    std::string svg = testutil::slurp(svg_path);

    double bx = attr_value(svg, "barycenter", "cx");
    double by = attr_value(svg, "barycenter", "cy");
    double ax = attr_value(svg, "two-rho", "cx");
    double ay = attr_value(svg, "two-rho", "cy");
    // cone generators of the G2 cases: (1, 0) and (-3, sqrt(3))
    double t = (by - ay) / std::sqrt(3.0);
    double s = (bx - ax) + 3.0 * t;
    CHECK(s > 0.0);
    CHECK(t > 0.0);
    std::filesystem::remove(svg_path);
}

TEST_CASE("figure rejects an out-of-range case") {
    CHECK(run_tool("figure 9").code == 64);
    CHECK(run_tool("figure").code == 64);
}

TEST_CASE("verify gates on the statistical agreement and is deterministic") {
    auto a = run_tool("verify --samples 40000 --seed 42");
    CHECK(a.code == 0);
    auto b = run_tool("verify --samples 40000 --seed 42");
    CHECK(a.out == b.out);
    CHECK(run_tool("verify --samples 10").code == 64);
}

TEST_CASE("export round-trips through load_case") {
    auto path = temp_file("kepoly_cli_case2.json");
    CHECK(run_tool("export 2 --out " + path.string()).code == 0);
    CHECK(kepoly::load_case(path) == kepoly::builtin_case(2));
    // the exported file feeds straight back into check
    auto r = run_tool("check --case-file " + path.string());
    CHECK(r.code == 0);
    std::filesystem::remove(path);
}
