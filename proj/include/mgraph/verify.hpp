#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mgraph {

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    unsigned t_max = 6;
    std::vector<std::uint64_t> primes{1000000007ULL, 998244353ULL, 1000000009ULL};
    unsigned exact_kirchhoff_max = 7;
    unsigned modular_kirchhoff_max = 10;
    unsigned two_forest_max = 6;
    unsigned structure_max = 12;
    unsigned assortativity_max = 10;
    // Test hook: every graph handed to a graph-based check has its first
    // edge removed.
    bool inject_fault = false;
};

// Runs every cross-check up to t_max (further capped per check by the
// limits above). Checks never throw; exceptions become failures.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

std::string verification_json(const VerifyOptions& options, const std::vector<CheckResult>& results);

}  // namespace mgraph
