#include "negacode/experiment.hpp"

#include <cmath>

#include "negacode/cosets.hpp"

namespace negacode {

double experiment_bound_ratio(std::uint64_t q, std::uint32_t m, const Rational& delta) {
    double h = entropy_hq(delta, q);
    require(h < 0.25, Errc::DeltaTooLarge, "needs h_q(delta) < 1/4");
    std::uint32_t mu = mu_q(q);
    require(m >= mu, Errc::BadShape, "needs m >= mu_q");
    double t_hat = std::ldexp(1.0, static_cast<int>(mu) - 2);  // 2^(mu-2)
    double two_r = std::ldexp(1.0, static_cast<int>(m - mu + 1));
    double lq = std::log(static_cast<double>(q));
    return std::exp(t_hat * std::log(2.0) + 2.0 * lq + 4.0 * two_r * (h - 0.25) * lq);
}

std::vector<ExperimentRow> asymptotic_experiment(const ExperimentConfig& cfg) {
    require(cfg.q % 2 == 1 && cfg.q >= 3, Errc::BadShape, "experiment needs odd q >= 3");
    double h = entropy_hq(cfg.delta, cfg.q);
    require(h < 0.25, Errc::DeltaTooLarge,
            "h_q(delta) = " + std::to_string(h) + " is not below 1/4");

    std::vector<ExperimentRow> rows;
    for (std::uint32_t m : cfg.m_list) {
        std::uint32_t n = 1u << m;
        ExperimentRow row;
        row.m = m;
        row.bound_ratio = experiment_bound_ratio(cfg.q, m, cfg.delta);

        auto [p, k] = [&] {
            std::uint64_t pp = cfg.q;
            for (std::uint64_t d = 2; d * d <= cfg.q; ++d)
                if (cfg.q % d == 0) {
                    pp = d;
                    break;
                }
            std::uint32_t kk = 0;
            std::uint64_t v = cfg.q;
            while (v % pp == 0) {
                v /= pp;
                ++kk;
            }
            require(v == 1, Errc::CompositeCharacteristic, "q is not a prime power");
            return std::make_pair(pp, kk);
        }();
        FieldCtxPtr f = FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, cfg.q));
        RingCtxPtr ring = RingCtx::make(f, n, -1);
        SpectralData sd = spectral_decomposition(ring);

        std::uint64_t d_size = count_selfdual(cfg.q, n);
        // Exact threshold: wt <= delta * 2n.
        std::int64_t two_n = 2LL * n;
        auto below = [&](std::size_t w) {
            return rat_le(static_cast<std::int64_t>(w), two_n, cfg.delta.num, cfg.delta.den);
        };
        std::uint64_t w_max_ld =
            static_cast<std::uint64_t>((static_cast<__int128>(cfg.delta.num) * two_n) /
                                       cfg.delta.den);

        bool messages_fit = true;
        {
            std::uint64_t msgs = 1;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (msgs > cfg.weight_budget / cfg.q) {
                    messages_fit = false;
                    break;
                }
                msgs *= cfg.q;
            }
        }

        if (d_size <= cfg.enum_cap && messages_fit) {
            row.exhaustive = true;
            auto d_set = enumerate_selfdual(sd, cfg.enum_cap);
            internal_check(d_set.size() == d_size, "closed-form count matches enumeration");
            row.population = d_set.size();
            for (const auto& g : d_set) {
                auto rep = min_weight(code_from_pair(RingElem::one(ring.get()), g),
                                      cfg.weight_budget, true);
                if (below(rep.min_weight)) ++row.low_weight;
            }
        } else {
            row.exhaustive = false;
            row.population = cfg.sample_budget;
            Rng rng(cfg.seed ^ (0x9e3779b9ULL * m));
            for (std::uint64_t s = 0; s < cfg.sample_budget; ++s) {
                SelfDualWitness w = sample_selfdual(sd, rng, cfg.enum_cap);
                if (pair_code_has_low_weight(w.g, static_cast<std::size_t>(w_max_ld)))
                    ++row.low_weight;
            }
        }
        row.fraction = row.population == 0
                           ? 0.0
                           : static_cast<double>(row.low_weight) /
                                 static_cast<double>(row.population);
        row.within_bound = row.fraction <= row.bound_ratio + 1e-12;
        if (row.exhaustive)
            internal_check(row.within_bound, "exhaustive fraction within the bound ratio");
        rows.push_back(row);
    }
    return rows;
}

}  // namespace negacode
