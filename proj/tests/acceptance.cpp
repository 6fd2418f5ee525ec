// Acceptance suite: runs the full claim registry once and reports one
// pass/fail line per numbered criterion. Exits nonzero if any criterion
// fails.

#include <prym/verification.hpp>

#include <chrono>
#include <cstdio>
#include <string>

int main() {
    using namespace prym::verify;

    auto start = std::chrono::steady_clock::now();
    Report report = run_claims();
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

    bool all_pass = true;
    for (const Criterion& criterion : acceptance_criteria()) {
        int claims = 0;
        std::string failures;
        for (const ClaimResult& item : report.items) {
            bool in_criterion = false;
            for (const std::string& prefix : criterion.claim_prefixes)
                if (item.claim_id.rfind(prefix, 0) == 0) in_criterion = true;
            if (!in_criterion) continue;
            ++claims;
            if (!item.pass) failures += " " + item.claim_id + " (got " + item.computed +
                                        ", expected " + item.expected + ")";
        }
        bool pass = claims > 0 && failures.empty();
        all_pass = all_pass && pass;
        std::printf("[%s] criterion %d: %s (%d claims)%s\n", pass ? "PASS" : "FAIL",
                    criterion.number, criterion.title.c_str(), claims,
                    failures.c_str());
    }

    std::printf("%s: %zu claims in %.2fs\n", all_pass ? "ACCEPTED" : "REJECTED",
                report.items.size(), elapsed.count());
    return all_pass ? 0 : 1;
}
