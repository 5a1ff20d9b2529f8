#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "kepoly/criterion.hpp"

namespace kepoly {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct CaseResult {
    CaseRecord record;
    Verdict verdict;
};

struct Report {
    std::string version{kToolVersion};
    std::vector<CaseResult> cases;
    bool all_ke = true; // conjunction of per-case ke_exists
};

Report make_report(const std::vector<CaseRecord>& records);

// Exact values serialize as {"approx", "rat", "sqrt3"}; the exact fields
// are the contract, approx is for human scanning.  Keys are emitted
// sorted, so the dump is byte-stable.
nlohmann::json report_to_json(const Report& report);
std::string format_report_table(const Report& report);
std::string format_report_csv(const Report& report);

nlohmann::json case_list_json(const std::vector<CaseRecord>& records);
std::string format_case_list_table(const std::vector<CaseRecord>& records);
std::string format_case_list_csv(const std::vector<CaseRecord>& records);

} // namespace kepoly
