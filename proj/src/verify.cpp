#include "negacode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "negacode/codes.hpp"
#include "negacode/cosets.hpp"
#include "negacode/experiment.hpp"
#include "negacode/selfdual.hpp"
#include "negacode/spectral.hpp"
#include "negacode/util.hpp"

namespace negacode {

namespace {

struct Harness {
    std::vector<CheckResult> results;

    void run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
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
    require(v == 1, Errc::CompositeCharacteristic, "q is not a prime power");
    return FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
}

std::map<std::size_t, std::uint64_t> weight_distribution(const std::vector<Word>& words) {
    std::map<std::size_t, std::uint64_t> dist;
    for (const auto& w : words) ++dist[word_weight(w)];
    return dist;
}

}  // namespace

std::vector<CheckResult> run_lemma_checks(const VerifyConfig& cfg) {
    Harness h;
    const std::uint64_t q = cfg.q;

    h.run("unit-group-two-power-structure", [] {
        for (std::uint32_t ell = 3; ell <= 10; ++ell) {
            std::uint64_t mod = 1ULL << ell;
            expect(unit_order(mod, 5) == (mod >> 2), "ord(5) = 2^(ell-2)");
            std::set<std::uint64_t> units;
            std::uint64_t p5 = 1;
            for (std::uint64_t i = 0; i < (mod >> 2); ++i) {
                units.insert(p5);
                units.insert(mod - p5);
                p5 = p5 * 5 % mod;
            }
            expect(units.size() == mod / 2, "<-1> x <5> covers all units");
        }
        return "Z_{2^ell}^x = <-1> x <5> for ell in [3,10]";
    });

    h.run("two-adic-order-formula", [] {
        for (std::uint64_t a = 3; a <= 31; a += 2) {
            std::uint32_t mu = mu_q(a);
            for (std::uint32_t ell = 2; ell <= mu; ++ell) {
                std::uint64_t mod = 1ULL << ell;
                std::uint64_t r = a % mod;
                expect(r == 1 || r == mod - 1, "a = +-1 mod 2^ell for ell <= mu");
            }
            for (std::uint32_t ell = mu + 1; ell <= mu + 8; ++ell)
                expect(ord_two_power(a, ell) == (1ULL << (ell - mu)),
                       "ord = 2^(ell-mu) above the threshold");
        }
        return "ord in Z_{2^ell}^x matches 2^(ell-mu) for odd a in [3,31], 8 levels";
    });

    h.run("minus-one-membership", [] {
        for (std::uint64_t a = 3; a <= 31; a += 2)
            for (std::uint32_t ell = 1; ell <= 10; ++ell) {
                std::uint64_t mod = 1ULL << ell;
                bool expected = (mod == 2) || (a % mod == mod - 1);
                expect(minus_one_in_q_subgroup(a, ell) == expected,
                       "-1 in <a> iff a = -1 mod 2^ell");
            }
        return "membership criterion for -1 over odd a in [3,31], ell in [1,10]";
    });

    h.run("orbit-partition-and-pairing", [q] {
        int tables = 0;
        for (std::uint32_t n = 2; n <= 12; ++n) {
            if (gcd_u64(2ULL * n, q) != 1) continue;
            OrbitTable t = q_orbits(n, q);  // internal structural asserts fire here
            std::size_t total = 0;
            for (const auto& o : t.orbits) total += o.size();
            expect(total == n, "orbits partition the odd residues");
            ++tables;
        }
        expect(tables > 0, "at least one semisimple n in range");
        return std::to_string(tables) + " orbit tables verified (partition, pairing, sizes)";
    });

    h.run("star-involution-and-x-order", [q] {
        FieldCtxPtr f = field_for(q);
        Rng rng(7);
        for (std::uint32_t n : {2u, 4u, 6u, 8u}) {
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            std::uint64_t size = 1;
            for (std::uint32_t i = 0; i < n; ++i) size = checked_mul(size, q, "ring size");
            for (int trial = 0; trial < 40; ++trial) {
                RingElem a = RingElem::from_rank(ring.get(), rng.below(size));
                RingElem b = RingElem::from_rank(ring.get(), rng.below(size));
                expect(star(star(a)) == a, "star has order dividing 2");
                expect(star(a * b) == star(a) * star(b), "star is multiplicative");
                expect(star(a + b) == star(a) + star(b), "star is additive");
            }
            expect(!(star(RingElem::x_power(ring.get(), 1)) ==
                     RingElem::x_power(ring.get(), 1)),
                   "star is not the identity (n > 1)");
            RingElem one = RingElem::one(ring.get());
            RingElem cur = one;
            std::uint32_t ord = 0;
            do {
                cur = mul_x(cur);
                ++ord;
            } while (!(cur == one));
            expect(ord == 2 * n, "x has multiplicative order 2n");
        }
        return "order-2 algebra automorphism and ord(x) = 2n on four ring sizes";
    });

    h.run("cyclic-negacyclic-transport-map", [q] {
        FieldCtxPtr f = field_for(q);
        Rng rng(11);
        for (std::uint32_t n : {3u, 5u, 7u}) {
            RingCtxPtr cyc = RingCtx::make(f, n, 1);
            std::uint64_t size = 1;
            for (std::uint32_t i = 0; i < n; ++i) size = checked_mul(size, q, "ring size");
            bool exhaustive = size <= 2187;
            std::uint64_t trials = exhaustive ? size : 100;
            std::set<std::vector<std::uint64_t>> images;
            for (std::uint64_t t = 0; t < trials; ++t) {
                std::uint64_t ra = exhaustive ? t : rng.below(size);
                RingElem a = RingElem::from_rank(cyc.get(), ra);
                RingElem b = RingElem::from_rank(cyc.get(), rng.below(size));
                RingElem ea = eta(a), eb = eta(b);
                expect(ea.weight() == a.weight(), "eta preserves weight");
                expect(inner_product(ea, eb) == inner_product(a, b),
                       "eta preserves inner products");
                expect(eta(a * b) == ea * eb, "eta is multiplicative");
                if (exhaustive) images.insert(ea.to_indices());
            }
            if (exhaustive) expect(images.size() == size, "eta is bijective");
        }
        return "a(X) -> a(-X) is a weight- and product-preserving isomorphism (odd n)";
    });

    h.run("factorization-and-idempotent-identities", [q] {
        int done = 0;
        for (std::uint32_t n : {2u, 4u, 8u, 10u}) {
            if (gcd_u64(2ULL * n, q) != 1) continue;
            FieldCtxPtr f = field_for(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            // Construction asserts: product = X^n + 1, irreducibility,
            // orthogonal idempotents summing to 1, dimension counts, the
            // star permutation matching the orbit pairing, block shapes.
            SpectralData sd = spectral_decomposition(ring);
            expect(sd.t() == sd.orbits.size(), "one factor per orbit");
            ++done;
        }
        expect(done > 0, "at least one semisimple decomposition");
        return std::to_string(done) + " spectra with exact structural identities";
    });

    h.run("star-maps-cofactor-ideals", [q] {
        for (std::uint32_t n : {4u, 8u}) {
            if (gcd_u64(2ULL * n, q) != 1) continue;
            FieldCtxPtr f = field_for(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            SpectralData sd = spectral_decomposition(ring);
            for (std::size_t i = 0; i < sd.t(); ++i) {
                RingElem gen = RingElem::zero(ring.get());
                {
                    std::vector<FieldElem> c(ring->n(), f->zero());
                    for (int d = 0; d <= sd.psi_hat[i].degree(); ++d) c[d] = sd.psi_hat[i][d];
                    gen = RingElem(ring.get(), std::move(c));
                }
                Matrix target = ideal_basis(RingElem(ring.get(), [&] {
                    std::vector<FieldElem> c(ring->n(), f->zero());
                    std::size_t j = sd.star_perm[i];
                    for (int d = 0; d <= sd.psi_hat[j].degree(); ++d) c[d] = sd.psi_hat[j][d];
                    return c;
                }()));
                Matrix source = ideal_basis(gen);
                expect(source.size() == target.size(), "paired ideals have equal dimension");
                for (const auto& row : source) {
                    RingElem elem(ring.get(), row);
                    expect(in_rowspace(target, star(elem).coeffs()),
                           "star of the ideal lands in the paired ideal");
                }
            }
        }
        return "(R psi_hat_i)* = R psi_hat_{i*} checked basis-wise";
    });

    h.run("selfdual-generator-criterion", [q] {
        FieldCtxPtr f = field_for(q);
        std::uint64_t checked = 0;
        for (std::uint32_t n : {2u, 4u}) {
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            std::uint64_t size = 1;
            for (std::uint32_t i = 0; i < n; ++i) size = checked_mul(size, q, "ring size");
            if (size > 10000) break;
            for (std::uint64_t rank = 0; rank < size; ++rank) {
                RingElem g = RingElem::from_rank(ring.get(), rank);
                bool via_ring = is_selfdual_generator(g);
                bool via_code =
                    is_self_dual(code_from_pair(RingElem::one(ring.get()), g));
                expect(via_ring == via_code, "g g* = -1 iff C_{1,g} is self-dual");
                ++checked;
            }
        }
        return std::to_string(checked) + " generators: criterion matches matrix duality";
    });

    h.run("count-formula-vs-exhaustive-scan", [&cfg] {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> cases = {
            {3, 1}, {3, 2}, {5, 1}, {7, 1}, {9, 1}, {11, 1}, {3, 3}, {5, 2}};
        int done = 0;
        for (auto [qq, m] : cases) {
            std::uint32_t n = 1u << m;
            std::uint64_t ring_size = 1;
            bool fits = true;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (ring_size > cfg.cap / qq) {
                    fits = false;
                    break;
                }
                ring_size *= qq;
            }
            if (!fits) continue;
            FieldCtxPtr f = field_for(qq);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            auto scan = scan_selfdual(ring, cfg.cap);
            expect(scan.size() == count_selfdual(qq, n), "closed form equals brute scan");
            ++done;
        }
        expect(done >= 6, "enough count cases in cap");
        return std::to_string(done) + " (q, m) cases: both count branches match the scan";
    });

    h.run("block-product-law-and-unit-map", [&cfg] {
        for (auto [qq, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}, {5, 1}}) {
            std::uint32_t n = 1u << m;
            FieldCtxPtr f = field_for(qq);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            SpectralData sd = spectral_decomposition(ring);
            std::uint64_t product = 1;
            for (std::size_t b = 0; b < sd.blocks.size(); ++b) {
                auto sols = enumerate_block(sd, b, cfg.cap);
                product *= sols.count;
                // Independent scan of the block for the same equation.
                std::set<std::vector<std::uint64_t>> expected;
                BlockSolutionSet brute;
                {
                    Matrix basis = ideal_basis(sd.blocks[b].e_hat);
                    std::uint64_t size = 1;
                    for (std::size_t i = 0; i < basis.size(); ++i) size *= qq;
                    RingElem target = -sd.blocks[b].e_hat;
                    for (std::uint64_t rank = 0; rank < size; ++rank) {
                        RingElem s = RingElem::zero(ring.get());
                        std::uint64_t v = rank;
                        for (std::size_t i = 0; i < basis.size(); ++i) {
                            std::uint64_t d = v % qq;
                            v /= qq;
                            if (d)
                                s += scalar_mul(f->from_index(d),
                                                RingElem(ring.get(), basis[i]));
                        }
                        if (s * star(s) == target) expected.insert(s.to_indices());
                    }
                }
                std::set<std::vector<std::uint64_t>> got;
                for (const auto& s : sols.solutions) got.insert(s.to_indices());
                expect(got == expected, "block solutions match the brute block scan");
            }
            auto scan = scan_selfdual(ring, cfg.cap);
            expect(product == scan.size(), "product over blocks equals |D|");
        }
        return "per-block solution sets and the product law at (3,m=2), (5,m=1)";
    });

    h.run("witness-grid-and-existence", [] {
        int built = 0, absent = 0;
        for (std::uint64_t qq : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 11ULL, 13ULL}) {
            for (std::uint32_t n = 2; n <= 12; ++n) {
                auto w = construct_witness(qq, n);
                expect(w.has_value() == existence_predicate(qq, n),
                       "constructive witness iff the predicate allows one");
                if (w) {
                    FieldCtxPtr f = field_for(qq);
                    RingCtxPtr ring = RingCtx::make(f, n, -1);
                    QuasiCode c = code_from_pair(RingElem::one(ring.get()), w->g);
                    expect(c.dim() == n, "C_{1,g} has dimension n");
                    expect(is_self_dual(c), "witness code is self-dual");
                    ++built;
                } else {
                    ++absent;
                }
            }
        }
        return std::to_string(built) + " witnesses verified, " + std::to_string(absent) +
               " correctly absent";
    });

    h.run("subspace-oracle-agreement", [] {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> cells = {
            {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}};
        for (auto [qq, n] : cells) {
            auto found = exhaustive_selfdual_search(qq, n, 200000);
            expect(found.has_value() == existence_predicate(qq, n),
                   "oracle agrees with the existence predicate at q=" + std::to_string(qq) +
                       ", n=" + std::to_string(n));
            if (found) expect(is_self_dual(*found), "oracle output is self-dual");
        }
        return "reduced-echelon subspace oracle agrees on 6 cells (incl. non-semisimple)";
    });

    h.run("sampling-uniformity", [&cfg] {
        FieldCtxPtr f = field_for(3);
        RingCtxPtr ring = RingCtx::make(f, 4, -1);
        SpectralData sd = spectral_decomposition(ring);
        auto d_set = enumerate_selfdual(sd, cfg.cap);
        expect(d_set.size() == 8, "|D| = 8 at q=3, m=2");
        std::map<std::vector<std::uint64_t>, std::uint64_t> freq;
        Rng rng(cfg.seed + 17);
        const std::uint64_t samples = 10000;
        for (std::uint64_t s = 0; s < samples; ++s)
            ++freq[sample_selfdual(sd, rng, cfg.cap).g.to_indices()];
        double expct = static_cast<double>(samples) / 8.0;
        double sigma = std::sqrt(samples * (1.0 / 8) * (7.0 / 8));
        for (const auto& g : d_set) {
            double got = static_cast<double>(freq[g.to_indices()]);
            expect(std::abs(got - expct) <= 5 * sigma, "per-element frequency within 5 sigma");
        }
        return "10^4 draws over |D| = 8: all frequencies within 5 sigma of uniform";
    });

    h.run("membership-support-bound", [&cfg] {
        FieldCtxPtr f = field_for(3);
        RingCtxPtr ring = RingCtx::make(f, 4, -1);
        SpectralData sd = spectral_decomposition(ring);
        auto d_set = enumerate_selfdual(sd, cfg.cap);
        std::vector<RingElem> as = {RingElem::zero(ring.get()), RingElem::one(ring.get())};
        for (const auto& b : sd.blocks) as.push_back(b.e_hat);
        Rng rng(cfg.seed + 23);
        int cases = 0;
        for (const auto& a : as) {
            auto rep0 = membership_count_bound_check(sd, a, a * d_set[0], cfg.cap);
            expect(rep0.ok, "achieved pair satisfies bound and support law");
            ++cases;
        }
        for (int t = 0; t < 200; ++t) {
            RingElem a = RingElem::from_rank(ring.get(), rng.below(81));
            RingElem b = RingElem::from_rank(ring.get(), rng.below(81));
            auto rep = membership_count_bound_check(sd, a, b, cfg.cap);
            expect(rep.ok, "random pair satisfies bound and support law");
            ++cases;
        }
        return std::to_string(cases) + " membership counts within q^(2^r (t_hat - s_a))";
    });

    h.run("balanced-low-weight-bound", [&cfg] {
        int done = 0;
        for (std::uint64_t qq : {3ULL, 5ULL}) {
            for (std::uint32_t n : {2u, 4u}) {
                if (gcd_u64(2ULL * n, qq) != 1) continue;
                FieldCtxPtr f = field_for(qq);
                RingCtxPtr ring = RingCtx::make(f, n, -1);
                SpectralData sd = spectral_decomposition(ring);
                for (std::size_t i = 0; i < sd.idem.size(); ++i) {
                    for (const Rational& delta :
                         {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
                        auto rep = balanced_bound_check(sd, {i}, delta, cfg.cap);
                        expect(rep.ok, "|(A x A)^{<=delta}| <= q^(k h_q(delta))");
                        ++done;
                    }
                }
            }
        }
        return std::to_string(done) + " minimal-ideal balanced bounds hold exactly";
    });

    h.run("entropy-function", [] {
        expect(std::abs(entropy_hq(Rational(1, 2), 2) - 1.0) < 1e-12, "h_2(1/2) = 1");
        for (std::uint64_t qq : {2ULL, 3ULL, 5ULL, 9ULL}) {
            expect(entropy_hq(Rational(0, 1), qq) == 0.0, "h_q(0) = 0");
            expect(std::abs(entropy_hq(Rational(static_cast<std::int64_t>(qq - 1),
                                                static_cast<std::int64_t>(qq)),
                                       qq) -
                            1.0) < 1e-12,
                   "h_q(1 - 1/q) = 1");
            double prev = 0.0;
            for (int i = 1; i <= 1000; ++i) {
                Rational d(static_cast<std::int64_t>(i) * (qq - 1),
                           1000LL * static_cast<std::int64_t>(qq));
                double val = entropy_hq(d, qq);
                expect(val > prev, "h_q strictly increases on its domain");
                prev = val;
            }
        }
        bool threw = false;
        try {
            entropy_hq(Rational(9, 10), 2);
        } catch (const Error& e) {
            threw = e.code() == Errc::DomainError;
        }
        expect(threw, "out-of-domain delta rejected");
        return "endpoints, monotone 10^3-point grids for q in {2,3,5,9}, domain errors";
    });

    h.run("low-weight-fraction-bound", [&cfg, q] {
        std::uint64_t qq = (q % 2 == 1 && q >= 3) ? q : 3;
        ExperimentConfig ec;
        ec.q = qq;
        std::uint32_t mu = mu_q(qq);
        for (std::uint32_t m = mu; m <= std::max(cfg.max_m, mu); ++m) ec.m_list.push_back(m);
        ec.delta = Rational(1, 20);
        ec.sample_budget = 200;
        ec.enum_cap = cfg.cap;
        ec.seed = cfg.seed;
        if (entropy_hq(ec.delta, qq) >= 0.25) ec.delta = Rational(1, 40);
        auto rows = asymptotic_experiment(ec);
        double prev = 1e300;
        for (const auto& r : rows) {
            expect(r.within_bound, "fraction within the bound ratio");
            expect(r.bound_ratio < prev, "bound ratio strictly decreasing in m");
            prev = r.bound_ratio;
        }
        return std::to_string(rows.size()) + " lengths: fractions under a strictly falling bound";
    });

    h.run("transport-preserves-selfduality", [] {
        // Map a self-dual 2-quasi negacyclic code at odd n back to the cyclic
        // side coefficient-wise and compare full weight distributions.
        FieldCtxPtr f = field_for(5);
        RingCtxPtr nega = RingCtx::make(f, 3, -1);
        RingCtxPtr cyc = RingCtx::make(f, 3, 1);
        auto w = construct_witness(5, 3);
        expect(w.has_value(), "witness exists at q=5, n=3");
        QuasiCode cn = code_from_pair(RingElem::one(nega.get()), w->g);
        expect(is_self_dual(cn), "negacyclic code self-dual");
        // eta^{-1} flips signs on odd positions of each half.
        Matrix back;
        for (const auto& row : cn.rows) {
            Word v = row;
            for (std::size_t i = 0; i < v.size(); ++i)
                if ((i % 3) % 2 == 1) v[i] = -v[i];
            back.push_back(std::move(v));
        }
        QuasiCode cc = code_from_rows(cyc, back);  // validates 2-quasi cyclic stability
        expect(is_self_dual(cc), "preimage is a self-dual 2-quasi cyclic code");
        auto dist_n = weight_distribution(enumerate_codewords(cn, 1 << 20));
        auto dist_c = weight_distribution(enumerate_codewords(cc, 1 << 20));
        expect(dist_n == dist_c, "weight distributions agree under the transport map");
        return "self-dual transport at q=5, n=3 with identical weight distribution";
    });

    h.run("count-lower-bound-and-product-inequality", [] {
        // (q^k1 - 1)...(q^kv - 1) >= q^(k1+...+kv-2) on enumerable instances,
        // and |D| >= q^(2^(m-1) - 2) for m >= 2 mu_q.
        for (std::uint64_t qq : {3ULL, 5ULL}) {
            std::uint32_t mu = mu_q(qq);
            for (std::uint32_t m = 2 * mu; m <= 2 * mu + 1; ++m) {
                std::uint32_t n = 1u << m;
                std::uint64_t d = count_selfdual(qq, n);
                std::uint64_t floor_bound =
                    checked_pow(qq, (n / 2) - 2, "lower bound");
                expect(d >= floor_bound, "|D| >= q^(2^(m-1) - 2)");
                std::uint64_t ord = unit_order(2ULL * n, qq % (2 * n));
                std::uint64_t t_hat = (n / ord) / 2;
                std::uint64_t lhs = 1, ks = 0;
                for (std::uint64_t i = 0; i < t_hat; ++i) {
                    lhs = checked_mul(lhs, checked_pow(qq, ord, "q^k") - 1, "product");
                    ks += ord;
                }
                expect(lhs >= checked_pow(qq, ks - 2, "rhs"),
                       "product inequality over the block sizes");
            }
        }
        return "closed-form |D| above its floor at m in {2mu, 2mu+1}, q in {3,5}";
    });

    return h.results;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << " — " << r.detail;
        os << "\n";
        passed += r.pass;
    }
    os << (passed == results.size() ? "OK" : "FAILED") << "  " << passed << "/"
       << results.size() << " checks passed\n";
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace negacode
