// Claim registry: every check the toolkit makes, keyed by a stable claim id
// and the location of the statement it verifies, with exact computed and
// expected values. The CLI renders these as text or JSON; the acceptance
// suite groups them into numbered criteria.
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace prym::verify {

struct ClaimResult {
    std::string claim_id;
    std::string location;
    std::string computed;
    std::string expected;
    bool pass;
    double ms;
};

struct Report {
    std::vector<ClaimResult> items;
    bool overall_pass;
};

// Runs every claim whose id contains `filter` (empty = all). With
// `parallel`, independent claims run concurrently; results keep the
// registry order either way.
Report run_claims(const std::string& filter = "", bool parallel = false);

std::vector<std::string> claim_ids();

nlohmann::ordered_json report_json(const Report& report, bool include_timing);

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claim_prefixes;
};

// The numbered acceptance criteria, each a set of claim-id prefixes.
const std::vector<Criterion>& acceptance_criteria();

}  // namespace prym::verify
