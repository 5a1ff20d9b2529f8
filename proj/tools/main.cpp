#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include "kepoly/oracle.hpp"
#include "kepoly/report.hpp"
#include "kepoly/svg.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitNegative = 2; // a selected case fails the KE criterion
constexpr int kExitUsage = 64;

std::vector<kepoly::CaseRecord> select_cases(int id, bool all, const std::string& case_file) {
    if (all)
        return kepoly::builtin_cases();
    if (!case_file.empty())
        return {kepoly::load_case(case_file)};
    return {kepoly::builtin_case(id)};
}

int run_list(const std::string& format) {
    const auto& cases = kepoly::builtin_cases();
    if (format == "json")
        std::cout << kepoly::case_list_json(cases).dump(2) << '\n';
    else if (format == "csv")
        std::cout << kepoly::format_case_list_csv(cases);
    else
        std::cout << kepoly::format_case_list_table(cases);
    return 0;
}

int run_check(int id, bool all, const std::string& case_file, const std::string& format) {
    kepoly::Report report = kepoly::make_report(select_cases(id, all, case_file));
    if (format == "json")
        std::cout << kepoly::report_to_json(report).dump(2) << '\n';
    else if (format == "csv")
        std::cout << kepoly::format_report_csv(report);
    else
        std::cout << kepoly::format_report_table(report);
    return report.all_ke ? 0 : kExitNegative;
}

int run_figure(int id, std::string out_path) {
    const kepoly::CaseRecord& rec = kepoly::builtin_case(id);
    if (out_path.empty())
        out_path = "delta" + std::to_string(id) + ".svg";
    std::ofstream out(out_path);
    if (!out)
        throw kepoly::IoError("cannot write figure: " + out_path);
    out << kepoly::render_figure(rec, kepoly::verdict(rec));
    if (!out)
        throw kepoly::IoError("error writing figure: " + out_path);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int run_verify(std::int64_t samples, std::uint64_t seed) {
    bool all_ok = true;
    std::printf("%-4s %-12s %-22s %-22s %-12s %-9s %s\n", "case", "quantity", "exact", "monte-carlo",
                "stderr", "rel.err", "within 3*stderr");
    for (const kepoly::CaseRecord& rec : kepoly::builtin_cases()) {
        kepoly::DhSummary dh = kepoly::dh_summary(rec);
        kepoly::McEstimate mcv = kepoly::mc_volume(rec, samples, seed);
        auto [mbx, mby] = kepoly::mc_barycenter(rec, samples, seed);
        struct Row {
            const char* label;
            double exact;
            kepoly::McEstimate mc;
        } rows[] = {
            {"volume", dh.volume.to_double(), mcv},
            {"barycenter.x", dh.barycenter.x.to_double(), mbx},
            {"barycenter.y", dh.barycenter.y.to_double(), mby},
        };
        for (const Row& row : rows) {
            double dev = std::abs(row.mc.value - row.exact);
            bool ok = dev <= 3.0 * row.mc.stderr_value;
            all_ok = all_ok && ok;
            std::printf("%-4d %-12s %-22.15g %-22.15g %-12.5g %-9.3g %s\n", rec.id, row.label,
                        row.exact, row.mc.value, row.mc.stderr_value, dev / std::abs(row.exact),
                        ok ? "yes" : "NO");
        }
    }
    std::printf("samples=%lld seed=%llu: %s\n", static_cast<long long>(samples),
                static_cast<unsigned long long>(seed),
                all_ok ? "all estimates within 3*stderr" : "some estimate outside 3*stderr");
    return all_ok ? 0 : kExitNegative;
}

int run_export(int id, bool all, std::string out_path) {
    if (all) {
        if (out_path.empty())
            out_path = ".";
        for (const kepoly::CaseRecord& rec : kepoly::builtin_cases()) {
            auto file = std::filesystem::path(out_path) / ("case" + std::to_string(rec.id) + ".json");
            kepoly::save_case(rec, file);
            std::cout << "wrote " << file.string() << '\n';
        }
        return 0;
    }
    const kepoly::CaseRecord& rec = kepoly::builtin_case(id);
    if (out_path.empty())
        out_path = "case" + std::to_string(id) + ".json";
    kepoly::save_case(rec, out_path);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment polytopes, Duistermaat-Heckman barycenters, and the Kahler-Einstein "
                 "criterion for the six smooth Fano symmetric varieties with Picard number one"};
    app.set_version_flag("--version", std::string(kepoly::kToolVersion));
    app.require_subcommand(1);

    int rc = 0;
    std::string format = "table";
    int case_id = 0;
    bool all = false;
    std::string case_file;
    std::string out_path;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 42;

    auto* list = app.add_subcommand("list", "List the built-in cases");
    list->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
    list->callback([&] { rc = run_list(format); });

    auto* check = app.add_subcommand("check", "Run the pipeline and decide KE existence");
    auto* check_id = check->add_option("case", case_id, "built-in case id")->check(CLI::Range(1, 6));
    auto* check_all = check->add_flag("--all", all, "all built-in cases");
    auto* check_file = check->add_option("--case-file", case_file, "user-defined case file");
    check->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
    check_id->excludes(check_all)->excludes(check_file);
    check_all->excludes(check_file);
    check->callback([&] {
        if (!all && case_file.empty() && check_id->count() == 0)
            throw CLI::ValidationError("check", "give a case id, --all, or --case-file PATH");
        rc = run_check(case_id, all, case_file, format);
    });

    auto* figure = app.add_subcommand("figure", "Render one case as an SVG figure");
    figure->add_option("case", case_id, "built-in case id")->required()->check(CLI::Range(1, 6));
    figure->add_option("--out", out_path, "output path (default delta<id>.svg)");
    figure->callback([&] { rc = run_figure(case_id, out_path); });

    auto* verify = app.add_subcommand("verify", "Cross-check exact values with the Monte-Carlo oracle");
    verify->add_option("--samples", samples)
        ->check(CLI::Range(static_cast<std::int64_t>(1000), std::numeric_limits<std::int64_t>::max()));
    verify->add_option("--seed", seed);
    verify->callback([&] { rc = run_verify(samples, seed); });

    auto* exp = app.add_subcommand("export", "Write built-in cases as case files");
    auto* exp_id = exp->add_option("case", case_id, "built-in case id")->check(CLI::Range(1, 6));
    auto* exp_all = exp->add_flag("--all", all, "export all built-in cases");
    exp->add_option("--out", out_path, "output file (or directory with --all)");
    exp_id->excludes(exp_all);
    exp->callback([&] {
        if (!all && exp_id->count() == 0)
            throw CLI::ValidationError("export", "give a case id or --all");
        rc = run_export(case_id, all, out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return rc;
}
