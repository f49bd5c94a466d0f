#pragma once

#include <cstdint>
#include <vector>

#include "negacode/selfdual.hpp"
#include "negacode/util.hpp"

namespace negacode {

struct ExperimentRow {
    std::uint32_t m = 0;
    bool exhaustive = true;
    std::uint64_t population = 0;  // |D| when exhaustive, sample count otherwise
    std::uint64_t low_weight = 0;  // generators with Delta(C_{1,g}) <= delta
    double fraction = 0.0;
    double bound_ratio = 0.0;      // 2^t_hat * q^2 * q^(4*2^r*(h_q(delta) - 1/4))
    bool within_bound = true;
};

struct ExperimentConfig {
    std::uint64_t q = 3;
    std::vector<std::uint32_t> m_list;
    Rational delta;
    std::uint64_t sample_budget = 1000;   // g samples per non-exhaustive row
    std::uint64_t enum_cap = 1 << 16;     // |D| cap for the exhaustive mode
    std::uint64_t weight_budget = 1 << 20;  // message-space cap for exact min weight
    std::uint64_t seed = 0;
};

// Fraction of g in D with small relative minimum weight, against the
// closed-form upper-bound ratio; requires h_q(delta) < 1/4 and each
// m >= mu_q. Exhaustive rows assert fraction <= bound.
std::vector<ExperimentRow> asymptotic_experiment(const ExperimentConfig& cfg);

double experiment_bound_ratio(std::uint64_t q, std::uint32_t m, const Rational& delta);

}  // namespace negacode
