#include "kepoly/report.hpp"

#include <cstdio>
#include <sstream>

#include "kepoly/json.hpp"

namespace kepoly {

namespace {

std::string approx(double d) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", d);
    return buf;
}

nlohmann::json exact_json(const QuadNum& q) {
    return nlohmann::json{{"approx", q.to_double()}, {"rat", q.rat_part()}, {"sqrt3", q.sqrt3_part()}};
}

nlohmann::json exact_json(const Vec2& v) {
    return nlohmann::json{{"x", exact_json(v.x)}, {"y", exact_json(v.y)}};
}

std::string pretty_vec(const Vec2& v) {
    return "(" + v.x.str() + ", " + v.y.str() + ")";
}

std::string pretty_vec_approx(const Vec2& v) {
    return "(" + approx(v.x.to_double()) + ", " + approx(v.y.to_double()) + ")";
}

} // namespace

Report make_report(const std::vector<CaseRecord>& records) {
    Report report;
    for (const CaseRecord& rec : records) {
        Verdict v = verdict(rec);
        report.all_ke = report.all_ke && v.ke_exists;
        report.cases.push_back(CaseResult{rec, std::move(v)});
    }
    return report;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseResult& cr : report.cases) {
        nlohmann::json vertices = nlohmann::json::array();
        for (const Vec2& v : cr.verdict.polytope_vertices)
            vertices.push_back(exact_json(v));
        nlohmann::json jc{
            {"id", cr.record.id},
            {"name", cr.record.name},
            {"vertices", vertices},
            {"volume", exact_json(cr.verdict.volume)},
            {"barycenter", exact_json(cr.verdict.barycenter)},
            {"two_rho_theta", exact_json(cr.verdict.two_rho_theta)},
            {"cone_coefficients",
             {{"s", exact_json(cr.verdict.cone_s)}, {"t", exact_json(cr.verdict.cone_t)}}},
            {"ke_exists", cr.verdict.ke_exists},
        };
        if (cr.verdict.proportionality)
            jc["proportionality"] = exact_json(*cr.verdict.proportionality);
        cases.push_back(std::move(jc));
    }
    return nlohmann::json{{"version", report.version}, {"cases", cases}, {"all_ke", report.all_ke}};
}

std::string format_report_table(const Report& report) {
    std::ostringstream out;
    for (const CaseResult& cr : report.cases) {
        const Verdict& v = cr.verdict;
        out << "case " << cr.record.id << "  " << cr.record.name << "\n";
        out << "  vertices:     ";
        for (std::size_t i = 0; i < v.polytope_vertices.size(); ++i)
            out << (i ? ", " : "") << pretty_vec(v.polytope_vertices[i]);
        out << "\n";
        out << "  volume:       " << v.volume.str() << "  ≈ " << approx(v.volume.to_double()) << "\n";
        out << "  barycenter:   (" << v.barycenter.x.str() << ", " << v.barycenter.y.str() << ")  ≈ "
            << pretty_vec_approx(v.barycenter) << "\n";
        out << "  2rho_theta:   " << pretty_vec(v.two_rho_theta) << "\n";
        out << "  cone coeffs:  s = " << v.cone_s.str() << ", t = " << v.cone_t.str() << "\n";
        out << "  verdict:      " << (v.ke_exists ? "KE (barycenter in relative interior of translated cone)"
                                                  : "not KE (barycenter outside translated cone)");
        if (v.proportionality)
            out << "  [barycenter = " << v.proportionality->str() << " * 2rho_theta]";
        out << "\n";
    }
    out << (report.all_ke ? "all cases admit Kahler-Einstein metrics\n"
                          : "some case fails the Kahler-Einstein criterion\n");
    return out.str();
}

std::string format_report_csv(const Report& report) {
    std::ostringstream out;
    out << "id,name,volume,barycenter_x,barycenter_y,cone_s,cone_t,ke_exists,proportionality\n";
    for (const CaseResult& cr : report.cases) {
        const Verdict& v = cr.verdict;
        out << cr.record.id << ",\"" << cr.record.name << "\"," << v.volume.str() << ","
            << v.barycenter.x.str() << "," << v.barycenter.y.str() << "," << v.cone_s.str() << ","
            << v.cone_t.str() << "," << (v.ke_exists ? "true" : "false") << ","
            << (v.proportionality ? v.proportionality->str() : "") << "\n";
    }
    return out.str();
}

nlohmann::json case_list_json(const std::vector<CaseRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CaseRecord& rec : records) {
        arr.push_back({
            {"id", rec.id},
            {"name", rec.name},
            {"dimension", rec.dimension},
            {"fano_index", rec.fano_index},
            {"restricted_type", std::string(to_string(rec.restricted_type))},
            {"multiplicity", rec.multiplicity},
            {"description", rec.description},
        });
    }
    return arr;
}

std::string format_case_list_table(const std::vector<CaseRecord>& records) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%3s  %-28s %4s %6s %5s %5s  %s\n", "id", "name", "dim",
                  "index", "type", "mult", "description");
    out << line;
    for (const CaseRecord& rec : records) {
        std::snprintf(line, sizeof line, "%3d  %-28s %4d %6d %5s %5d  %s\n", rec.id,
                      rec.name.c_str(), rec.dimension, rec.fano_index,
                      std::string(to_string(rec.restricted_type)).c_str(), rec.multiplicity,
                      rec.description.c_str());
        out << line;
    }
    return out.str();
}

std::string format_case_list_csv(const std::vector<CaseRecord>& records) {
    std::ostringstream out;
    out << "id,name,dimension,fano_index,restricted_type,multiplicity,description\n";
    for (const CaseRecord& rec : records)
        out << rec.id << ",\"" << rec.name << "\"," << rec.dimension << "," << rec.fano_index << ","
            << to_string(rec.restricted_type) << "," << rec.multiplicity << ",\"" << rec.description
            << "\"\n";
    return out.str();
}

} // namespace kepoly
