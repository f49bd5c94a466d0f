#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace negacode {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyConfig {
    std::uint64_t q = 3;
    std::uint32_t max_m = 3;
    std::uint64_t seed = 0;
    std::uint64_t cap = 1ULL << 16;
};

// The full structural-check suite: coset laws, order formulas, the star
// automorphism, factorization and idempotent identities, self-duality
// criterion, counting formulas, witnesses, existence, sampling, support and
// balanced bounds, entropy, and the finite-length asymptotic bound.
std::vector<CheckResult> run_lemma_checks(const VerifyConfig& cfg);

// Deterministic plain-text report, one line per check plus a summary.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace negacode
