// Acceptance suite: twelve integration criteria, one pass/fail line each.
// Every expected value is either a worked constant cross-checked in the unit
// tests or recomputed here by an independent brute-force route. Exit code 0
// only when all criteria hold within their stated time limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negacode/codes.hpp"
#include "negacode/cosets.hpp"
#include "negacode/experiment.hpp"
#include "negacode/selfdual.hpp"
#include "negacode/spectral.hpp"
#include "negacode/verify.hpp"

using namespace negacode;

namespace {

struct Criterion {
    int id;
    std::string label;
    double limit_seconds;
    std::function<std::string()> body;  // returns detail, throws on failure
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw Error(Errc::Internal, msg);
}

FieldCtxPtr field_for(std::uint64_t q) {
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t k = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
}

RingCtxPtr nega_ring(std::uint64_t q, std::uint32_t n) {
    return RingCtx::make(field_for(q), n, -1);
}

std::string g_cli_path;  // optional: path to the CLI binary for criterion 12

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    std::vector<Criterion> criteria;

    criteria.push_back({1, "counting, q = -1 mod 2^(m+1): |D| = (q+1)^(2^(m-1))", 1.0, [] {
        std::ostringstream os;
        for (auto [q, m, want] : std::vector<std::array<std::uint64_t, 3>>{
                 {3, 1, 4}, {7, 1, 8}, {11, 1, 12}}) {
            std::uint32_t n = 1u << m;
            expect(q % (2ULL * n) == 2ULL * n - 1, "case applies: q = -1 mod 2^(m+1)");
            auto scan = scan_selfdual(nega_ring(q, n), 1 << 20);
            expect(scan.size() == want, "scan matches the expected count");
            expect(count_selfdual(q, n) == want, "closed form matches");
            os << "(" << q << ",m=" << m << ")=" << want << " ";
        }
        return os.str();
    }});

    criteria.push_back({2, "counting, q != -1 mod 2^(m+1): |D| = (q^(2^r)-1)^t_hat", 10.0, [] {
        std::ostringstream os;
        // The (5, m=2) entry resolves to 24 via r = m - mu + 1 = 1, t_hat = 1;
        // the exhaustive scan of all 5^4 = 625 ring elements is the ground truth.
        for (auto [q, m, want] : std::vector<std::array<std::uint64_t, 3>>{
                 {3, 2, 8}, {3, 3, 80}, {5, 1, 4}, {5, 2, 24}}) {
            std::uint32_t n = 1u << m;
            expect(q % (2ULL * n) != 2ULL * n - 1, "case applies: q != -1 mod 2^(m+1)");
            auto scan = scan_selfdual(nega_ring(q, n), 1 << 20);
            expect(scan.size() == want, "scan matches the expected count");
            expect(count_selfdual(q, n) == want, "closed form matches the scan");
            os << "(" << q << ",m=" << m << ")=" << want << " ";
        }
        return os.str();
    }});

    criteria.push_back({3, "self-duality criterion: C_{1,g} self-dual iff g g* = -1", 30.0, [] {
        std::uint64_t units = 0, all = 0;
        for (std::uint32_t n : {2u, 4u}) {
            auto ring = nega_ring(3, n);
            RingElem one = RingElem::one(ring.get());
            std::uint64_t size = 1;
            for (std::uint32_t i = 0; i < n; ++i) size *= 3;
            for (std::uint64_t rank = 0; rank < size; ++rank) {
                RingElem g = RingElem::from_rank(ring.get(), rank);
                bool crit = is_selfdual_generator(g);
                bool dual = is_self_dual(code_from_pair(one, g));
                expect(crit == dual, "criterion equals matrix self-duality");
                ++all;
                if (invert(g)) ++units;
            }
        }
        return "q=3, n in {2,4}: " + std::to_string(all) + " generators (" +
               std::to_string(units) + " units), zero exceptions";
    }});

    criteria.push_back({4, "existence theorem grid + independent subspace oracle", 300.0, [] {
        for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 9ULL, 13ULL})
            for (std::uint32_t n = 2; n <= 8; ++n) {
                bool want = (n % 2 == 0) ? true : (q % 4 != 3);  // re-derived inline
                expect(existence_predicate(q, n) == want, "table matches the theorem");
            }
        expect(!exhaustive_selfdual_search(3, 3, 100000).has_value(),
               "oracle negative at (q=3, n=3), gcd(2n, q) = 3");
        auto c32 = exhaustive_selfdual_search(3, 2, 100000);
        expect(c32.has_value() && is_self_dual(*c32), "oracle positive at (q=3, n=2)");
        auto c23 = exhaustive_selfdual_search(2, 3, 100000);
        expect(c23.has_value() && is_self_dual(*c23), "oracle positive at (q=2, n=3)");
        return "36 cells match; oracle confirms (3,3) negative, (3,2) and (2,3) positive";
    }});

    criteria.push_back({5, "witness validity: all even n <= 20, q in {3,5,7,9,11,13}", 60.0, [] {
        int count = 0;
        for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 9ULL, 11ULL, 13ULL})
            for (std::uint32_t n = 2; n <= 20; n += 2) {
                auto w = construct_witness(q, n);
                expect(w.has_value(), "witness exists for even n");
                expect(is_selfdual_generator(w->g), "g g* = -1");
                QuasiCode c = code_from_pair(RingElem::one(w->g.ctx()), w->g);
                expect(c.dim() == n, "dimension n");
                expect(is_self_dual(c), "G G^T = 0 at dimension n");
                ++count;
            }
        return std::to_string(count) + " witnesses, all verified";
    }});

    criteria.push_back({6, "two-adic order formula and the mu table", 1.0, [] {
        for (std::uint64_t q = 3; q <= 31; q += 2) {
            std::uint32_t mu = mu_q(q);
            for (std::uint32_t ell = mu + 1; ell <= mu + 8; ++ell)
                expect(ord_two_power(q, ell) == (1ULL << (ell - mu)),
                       "direct order equals 2^(ell-mu)");
        }
        // Worked table row. The printed source row lists mu_27 = 4, but the
        // defining congruences (27 = 3 mod 8) and the order formula verified
        // above force mu_27 = 2; the row is asserted with that correction.
        std::map<std::uint64_t, std::uint32_t> table = {
            {3, 2}, {7, 3}, {9, 3}, {17, 4}, {27, 2}, {31, 5}};
        for (auto [q, mu] : table)
            expect(mu_q(q) == mu, "mu_" + std::to_string(q) + " = " + std::to_string(mu));
        expect(27 % 8 == 3, "27 is neither +1 nor -1 mod 8");
        expect(unit_order(32, 27) == 8, "ord(27) mod 32 is 8 = 2^(5-2), so mu_27 = 2");
        return "orders match 2^(ell-mu) for odd q in [3,31]; table row verified "
               "(mu_27 = 2 by the defining congruences)";
    }});

    criteria.push_back({7, "idempotent/star coherence on the semisimple grid", 30.0, [] {
        int done = 0;
        for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 9ULL})
            for (std::uint32_t n : {2u, 4u, 8u, 10u}) {
                if (gcd_u64(2ULL * n, q) != 1) continue;
                SpectralData sd = spectral_decomposition(nega_ring(q, n));
                expect(sd.star_perm == sd.orbits.pairing,
                       "star permutation equals the negation pairing");
                RingElem sum = RingElem::zero(sd.ring.get());
                for (std::size_t i = 0; i < sd.t(); ++i) {
                    sum += sd.idem[i];
                    for (std::size_t j = i; j < sd.t(); ++j) {
                        RingElem prod = sd.idem[i] * sd.idem[j];
                        expect(i == j ? prod == sd.idem[i] : prod.is_zero(),
                               "orthogonal idempotents");
                    }
                }
                expect(sum == RingElem::one(sd.ring.get()), "idempotents sum to 1");
                ++done;
            }
        return std::to_string(done) + " semisimple (q, n) pairs, identities exact";
    }});

    criteria.push_back({8, "balanced low-weight bound over minimal-ideal squares", 60.0, [] {
        int done = 0;
        for (std::uint64_t q : {3ULL, 5ULL})
            for (std::uint32_t n = 2; n <= 10; ++n) {
                if (gcd_u64(2ULL * n, q) != 1) continue;
                SpectralData sd = spectral_decomposition(nega_ring(q, n));
                for (std::size_t i = 0; i < sd.idem.size(); ++i) {
                    std::uint64_t sq = 1;
                    bool fits = true;
                    for (std::size_t d = 0; d < 2 * sd.orbits.orbits[i].size(); ++d) {
                        sq *= q;
                        if (sq > 6561) {
                            fits = false;
                            break;
                        }
                    }
                    if (!fits) continue;
                    for (const Rational& delta :
                         {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
                        auto rep = balanced_bound_check(sd, {i}, delta, 6561);
                        expect(rep.ok, "|(A x A)^{<=delta}| <= q^(k h_q(delta))");
                        ++done;
                    }
                }
            }
        return std::to_string(done) + " (ideal, delta) cases, no violation";
    }});

    criteria.push_back({9, "support bound for membership sets", 120.0, [] {
        std::uint64_t checked = 0;
        for (std::uint32_t m : {2u, 3u}) {
            std::uint32_t n = 1u << m;
            auto sd = spectral_decomposition(nega_ring(3, n));
            auto d_set = enumerate_selfdual(sd, 1 << 20);
            std::uint64_t ring_size = 1;
            for (std::uint32_t i = 0; i < n; ++i) ring_size *= 3;
            std::uint64_t ord = sd.orbits.ord_q;
            std::size_t t_hat = sd.blocks.size();

            // All (a, b) for a in {0, 1, e_hat components}: histogram a*g over D.
            std::vector<RingElem> special = {RingElem::zero(sd.ring.get()),
                                             RingElem::one(sd.ring.get())};
            for (const auto& blk : sd.blocks) special.push_back(blk.e_hat);
            for (const auto& a : special) {
                std::size_t s_a = block_support(a, sd).size();
                std::uint64_t bound = 1;
                for (std::uint64_t i = 0; i < ord * (t_hat - s_a); ++i) bound *= 3;
                std::map<std::vector<std::uint64_t>, std::uint64_t> hist;
                for (const auto& g : d_set) ++hist[(a * g).to_indices()];
                for (const auto& [b_idx, count] : hist) {
                    expect(count <= bound, "count within q^(2^r (t_hat - s_a))");
                    RingElem b = RingElem::from_indices(sd.ring.get(), b_idx);
                    expect(block_support(b, sd).size() == s_a,
                           "achieved b has matching support");
                    ++checked;
                }
                // b outside the histogram has count 0 <= bound trivially.
            }

            // 10^3 random (a, b) pairs through the public op.
            Rng rng(2026);
            for (int t = 0; t < 1000; ++t) {
                RingElem a = RingElem::from_rank(sd.ring.get(), rng.below(ring_size));
                RingElem b = RingElem::from_rank(sd.ring.get(), rng.below(ring_size));
                auto rep = membership_count_bound_check(sd, a, b, 1 << 20);
                expect(rep.ok, "random pair within bound with matching supports");
                ++checked;
            }
        }
        return std::to_string(checked) + " membership sets within the bound";
    }});

    criteria.push_back({10, "low-weight fraction vs the falling bound ratio", 600.0, [] {
        std::ostringstream os;
        for (const Rational& delta : {Rational(1, 20), Rational(1, 40)}) {
            double h = entropy_hq(delta, 3);
            expect(h < 0.25, "delta within the required entropy regime");
            ExperimentConfig ec;
            ec.q = 3;
            ec.m_list = {2, 3, 4, 5};
            ec.delta = delta;
            ec.sample_budget = 1000;
            ec.enum_cap = 1 << 16;
            ec.weight_budget = 1 << 20;
            ec.seed = 7;
            auto rows = asymptotic_experiment(ec);
            expect(rows.size() == 4, "four lengths");
            expect(rows[0].exhaustive && rows[1].exhaustive, "m = 2, 3 exhaustive");
            expect(!rows[2].exhaustive && !rows[3].exhaustive, "m = 4, 5 sampled");
            expect(rows[2].population == 1000 && rows[3].population == 1000,
                   "10^3 samples per sampled row");
            double prev = 1e300;
            for (const auto& r : rows) {
                expect(r.within_bound, "fraction <= bound ratio");
                expect(r.bound_ratio < prev, "bound ratio strictly decreasing in m");
                prev = r.bound_ratio;
            }
            os << "delta=" << delta.str() << ": fractions";
            for (const auto& r : rows) os << " " << r.fraction;
            os << "; ";
        }
        return os.str();
    }});

    criteria.push_back({11, "worked code: C_{1,1+x} over GF(3), n=2", 1.0, [] {
        auto ring = nega_ring(3, 2);
        QuasiCode c = code_from_pair(RingElem::one(ring.get()),
                                     RingElem::from_indices(ring.get(), {1, 1}));
        expect(is_self_dual(c), "self-dual");
        WeightReport rep = min_weight(c, 1 << 20, true);
        expect(rep.enumerated == 9, "full 9-codeword enumeration");
        expect(rep.min_weight == 3, "minimum weight 3");
        expect(rep.relative == Rational(3, 4), "relative weight 3/4");
        return "self-dual, w = 3, Delta = 3/4 by full enumeration";
    }});

    criteria.push_back({12, "determinism of the verify report", 600.0, [] {
        VerifyConfig cfg;
        cfg.q = 3;
        cfg.max_m = 2;
        std::string r1 = format_report(run_lemma_checks(cfg));
        std::string r2 = format_report(run_lemma_checks(cfg));
        expect(!r1.empty() && r1 == r2, "library reports byte-identical");
        if (!g_cli_path.empty()) {
            auto capture = [&](const std::string& cmd) {
                std::string out;
                FILE* pipe = popen(cmd.c_str(), "r");
                expect(pipe != nullptr, "spawn CLI");
                char buf[4096];
                std::size_t got;
                while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
                int rc = pclose(pipe);
                expect(rc == 0, "CLI verify exits 0");
                return out;
            };
            std::string cmd = "'" + g_cli_path + "' verify --q 3 --max-m 2 2>/dev/null";
            std::string o1 = capture(cmd);
            std::string o2 = capture(cmd);
            expect(!o1.empty() && o1 == o2, "CLI reports byte-identical");
            return std::string("library and CLI reports byte-identical across reruns");
        }
        return std::string("library reports byte-identical across reruns");
    }});

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass && secs > c.limit_seconds) {
            pass = false;
            detail = "exceeded time limit of " + std::to_string(c.limit_seconds) + " s";
        }
        std::printf("[%s] criterion %2d: %s — %s (%.2fs, limit %.0fs)\n",
                    pass ? "PASS" : "FAIL", c.id, c.label.c_str(), detail.c_str(), secs,
                    c.limit_seconds);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 12 criteria passed\n");
    return 0;
}
