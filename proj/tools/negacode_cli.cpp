// Command-line front end: cosets, spectrum, selfdual, code, balanced-check,
// experiment, existence-table, verify. JSON/CSV/pretty output, deterministic
// for fixed flags (including --seed). Exit codes: 0 ok, 1 failed verify,
// 2 usage or precondition error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "negacode/codes.hpp"
#include "negacode/cosets.hpp"
#include "negacode/experiment.hpp"
#include "negacode/selfdual.hpp"
#include "negacode/spectral.hpp"
#include "negacode/verify.hpp"

using nlohmann::json;
using namespace negacode;

namespace {

struct Output {
    std::string format = "json";
    std::string path;  // empty: stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::fputs(text.c_str(), stdout);
        } else {
            std::ofstream os(path, std::ios::binary);
            if (!os) fail(Errc::UsageError, "cannot open output file " + path);
            os << text;
        }
    }
    void emit_json(const json& j) const { emit(j.dump(2) + "\n"); }
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

FieldCtxPtr field_for_q(std::uint64_t q) {
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
    require(v == 1, Errc::CompositeCharacteristic,
            std::to_string(q) + " is not a prime power");
    return FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
}

RingElem parse_ring_elem(const RingCtx* ctx, const std::string& text) {
    std::vector<std::uint64_t> idx;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            idx.push_back(std::stoull(tok));
        } catch (const std::logic_error&) {
            fail(Errc::UsageError, "bad coefficient '" + tok + "'");
        }
    }
    return RingElem::from_indices(ctx, idx);
}

json code_to_json(const QuasiCode& c) {
    json rows = json::array();
    for (const auto& row : c.rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(c.ctx->field()->to_index(e));
        rows.push_back(std::move(r));
    }
    json j;
    j["schema"] = 1;
    j["q"] = c.ctx->q();
    j["n"] = c.ctx->n();
    j["dimension"] = c.dim();
    j["length"] = c.length();
    j["gen_rows"] = std::move(rows);
    if (c.gen_pair) {
        j["provenance"] = {{"a", c.gen_pair->first.to_string()},
                           {"b", c.gen_pair->second.to_string()}};
    }
    return j;
}

std::string code_to_text(const QuasiCode& c) {
    std::ostringstream os;
    for (const auto& row : c.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << c.ctx->field()->to_index(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

int run_verify(const VerifyConfig& cfg, const Output& out) {
    auto results = run_lemma_checks(cfg);
    if (out.format == "json") {
        json j;
        j["schema"] = 1;
        j["q"] = cfg.q;
        j["max_m"] = cfg.max_m;
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        j["checks"] = std::move(arr);
        j["all_passed"] = all_passed(results);
        out.emit_json(j);
    } else {
        out.emit(format_report(results));
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negacode — self-dual 2-quasi negacyclic code laboratory"};
    app.require_subcommand(1);

    std::uint64_t q = 3;
    std::uint32_t n = 2;
    std::uint32_t m = 0, max_m = 3;
    std::string delta_text = "1/20";
    std::uint64_t seed = 0;
    std::uint64_t cap = 1ULL << 20;
    std::uint64_t budget = 1ULL << 20;
    Output out;

    auto add_common = [&](CLI::App* cmd, bool with_n) {
        cmd->add_option("--q", q, "field cardinality (prime power)");
        if (with_n) cmd->add_option("--n", n, "half code length n");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--cap", cap, "enumeration cap");
        cmd->add_option("--budget", budget, "search/sampling budget");
        cmd->add_option("--format", out.format, "json|csv|pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        cmd->add_option("--out", out.path, "output path (default stdout)");
    };

    auto* cosets_cmd = app.add_subcommand("cosets", "q-orbits on the odd residues of Z_2n");
    add_common(cosets_cmd, true);

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "factors, idempotents and star blocks of X^n + 1");
    add_common(spectrum_cmd, true);

    auto* selfdual_cmd = app.add_subcommand("selfdual", "the set D = { g : g g* = -1 }");
    selfdual_cmd->require_subcommand(1);
    auto* sd_count = selfdual_cmd->add_subcommand("count", "closed-form |D| for n = 2^m");
    auto* sd_enum = selfdual_cmd->add_subcommand("enumerate", "list D (cap-guarded)");
    auto* sd_witness = selfdual_cmd->add_subcommand("witness", "construct one generator");
    auto* sd_sample = selfdual_cmd->add_subcommand("sample", "uniform draws from D");
    for (auto* c : {sd_count, sd_enum, sd_witness, sd_sample}) add_common(c, true);

    std::string a_text, b_text;
    auto* code_cmd = app.add_subcommand("code", "2-quasi negacyclic codes C_{a,b}");
    code_cmd->require_subcommand(1);
    auto* code_build = code_cmd->add_subcommand("build", "generator matrix of C_{a,b}");
    auto* code_dual = code_cmd->add_subcommand("dual", "dual code");
    auto* code_check = code_cmd->add_subcommand("check", "self-duality check");
    auto* code_dist = code_cmd->add_subcommand("distance", "minimum weight");
    for (auto* c : {code_build, code_dual, code_check, code_dist}) {
        add_common(c, true);
        c->add_option("--a", a_text, "left generator, comma-separated coefficients")
            ->required();
        c->add_option("--b", b_text, "right generator, comma-separated coefficients")
            ->required();
    }

    std::vector<std::size_t> block_list;
    auto* balanced_cmd =
        app.add_subcommand("balanced-check", "low-weight bound for minimal-ideal squares");
    add_common(balanced_cmd, true);
    balanced_cmd->add_option("--delta", delta_text, "relative weight threshold p/r");
    balanced_cmd->add_option("--blocks", block_list,
                             "idempotent indices forming the ideal (default 0)");

    auto* experiment_cmd =
        app.add_subcommand("experiment", "low-weight fraction of D across lengths 2^m");
    add_common(experiment_cmd, false);
    experiment_cmd->add_option("--m", m, "first m (default mu_q)");
    experiment_cmd->add_option("--max-m", max_m, "last m");
    experiment_cmd->add_option("--delta", delta_text, "relative weight threshold p/r");

    std::uint64_t q_max = 13;
    std::uint32_t n_max = 12;
    auto* table_cmd = app.add_subcommand("existence-table",
                                         "existence grid with the subspace oracle");
    add_common(table_cmd, false);
    table_cmd->add_option("--q-max", q_max, "largest q in the default grid");
    table_cmd->add_option("--n-max", n_max, "largest n");

    auto* verify_cmd = app.add_subcommand("verify", "run the full structural check suite");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--max-m", max_m, "largest 2-power exponent in the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cosets_cmd->parsed()) {
            OrbitTable t = q_orbits(n, q);
            if (out.format == "pretty") {
                std::ostringstream os;
                os << "q=" << q << " n=" << n << " ord_q=" << t.ord_q << " t=" << t.size()
                   << "\n";
                for (std::size_t i = 0; i < t.size(); ++i) {
                    os << "Q" << i << " = {";
                    for (std::size_t j = 0; j < t.orbits[i].size(); ++j)
                        os << (j ? "," : "") << t.orbits[i][j];
                    os << "}  pairs with Q" << t.pairing[i] << "\n";
                }
                out.emit(os.str());
            } else {
                json j;
                j["schema"] = 1;
                j["q"] = q;
                j["n"] = n;
                j["ord_q"] = t.ord_q;
                j["t"] = t.size();
                j["orbits"] = t.orbits;
                j["pairing"] = t.pairing;
                out.emit_json(j);
            }
        } else if (spectrum_cmd->parsed()) {
            FieldCtxPtr f = field_for_q(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            SpectralData sd = spectral_decomposition(ring);
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            j["field"] = f->to_string();
            json factors = json::array(), hats = json::array(), idems = json::array();
            for (std::size_t i = 0; i < sd.t(); ++i) {
                json fc = json::array(), hc = json::array();
                for (int d = 0; d <= sd.psi[i].degree(); ++d)
                    fc.push_back(f->to_index(sd.psi[i][d]));
                for (int d = 0; d <= sd.psi_hat[i].degree(); ++d)
                    hc.push_back(f->to_index(sd.psi_hat[i][d]));
                factors.push_back(std::move(fc));
                hats.push_back(std::move(hc));
                idems.push_back(sd.idem[i].to_indices());
            }
            j["factors"] = std::move(factors);
            j["cofactors"] = std::move(hats);
            j["idempotents"] = std::move(idems);
            j["star_perm"] = sd.star_perm;
            json blocks = json::array();
            for (const auto& b : sd.blocks)
                blocks.push_back({{"members", b.members},
                                  {"dim", b.dim},
                                  {"kind", b.paired ? "paired" : "fixed"}});
            j["blocks"] = std::move(blocks);
            j["orbits"] = sd.orbits.orbits;
            j["pairing"] = sd.orbits.pairing;
            out.emit_json(j);
        } else if (sd_count->parsed()) {
            std::uint64_t count = 0;
            try {
                count = count_selfdual(q, n);
            } catch (const Error& e) {
                if (e.code() == Errc::BadShape) {
                    std::string msg = e.what();
                    std::string prefix = std::string(errc_name(e.code())) + ": ";
                    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
                    fail(Errc::BadShape, msg);
                }
                throw;
            }
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            j["count"] = count;
            j["method"] = "closed-form";
            out.emit_json(j);
        } else if (sd_enum->parsed()) {
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            std::vector<RingElem> d_set;
            try {
                FieldCtxPtr f = field_for_q(q);
                RingCtxPtr ring = RingCtx::make(f, n, -1);
                SpectralData sd = spectral_decomposition(ring);
                d_set = enumerate_selfdual(sd, cap);
                j["provenance"] = provenance_name(WitnessProvenance::BlockEnumeration);
            } catch (const Error& e) {
                if (e.code() != Errc::NotSemisimple) throw;
                FieldCtxPtr f = field_for_q(q);
                RingCtxPtr ring = RingCtx::make(f, n, -1);
                d_set = scan_selfdual(ring, cap);
                j["provenance"] = provenance_name(WitnessProvenance::ExhaustiveSearch);
            }
            j["count"] = d_set.size();
            json ws = json::array();
            for (const auto& g : d_set) ws.push_back(g.to_indices());
            j["witnesses"] = std::move(ws);
            out.emit_json(j);
        } else if (sd_witness->parsed()) {
            auto w = construct_witness(q, n, cap);
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            j["found"] = w.has_value();
            if (w) {
                j["witness"] = w->g.to_indices();
                j["provenance"] = provenance_name(w->provenance);
            }
            out.emit_json(j);
        } else if (sd_sample->parsed()) {
            FieldCtxPtr f = field_for_q(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            SpectralData sd = spectral_decomposition(ring);
            Rng rng(seed);
            std::uint64_t count = std::max<std::uint64_t>(1, budget == (1ULL << 20) ? 1 : budget);
            json ws = json::array();
            for (std::uint64_t i = 0; i < count; ++i)
                ws.push_back(sample_selfdual(sd, rng, cap).g.to_indices());
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            j["seed"] = seed;
            j["count"] = count;
            j["witnesses"] = std::move(ws);
            j["provenance"] = provenance_name(WitnessProvenance::BlockEnumeration);
            out.emit_json(j);
        } else if (code_build->parsed() || code_dual->parsed() || code_check->parsed() ||
                   code_dist->parsed()) {
            FieldCtxPtr f = field_for_q(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            RingElem a = parse_ring_elem(ring.get(), a_text);
            RingElem b = parse_ring_elem(ring.get(), b_text);
            QuasiCode c = code_from_pair(a, b);
            if (code_build->parsed()) {
                if (out.format == "pretty")
                    out.emit(code_to_text(c));
                else
                    out.emit_json(code_to_json(c));
            } else if (code_dual->parsed()) {
                QuasiCode d = dual_code(c);
                if (out.format == "pretty")
                    out.emit(code_to_text(d));
                else
                    out.emit_json(code_to_json(d));
            } else if (code_check->parsed()) {
                json j = code_to_json(c);
                j.erase("gen_rows");
                j["self_dual"] = is_self_dual(c);
                // When a is invertible, C_{a,b} = C_{1,g} with g = a^{-1} b.
                if (auto ia = invert(a))
                    j["criterion_gg_star"] = is_selfdual_generator(*ia * b);
                else
                    j["criterion_gg_star"] = nullptr;
                out.emit_json(j);
            } else {
                WeightReport rep = min_weight(c, budget, false, seed);
                json j;
                j["schema"] = 1;
                j["q"] = q;
                j["n"] = n;
                j["dimension"] = c.dim();
                j["min_weight"] = rep.min_weight;
                j["relative"] = rep.relative.str();
                j["rate"] = rep.rate.str();
                j["method"] = rep.exhaustive ? "exhaustive" : "sampled-upper-bound";
                j["enumerated"] = rep.enumerated;
                out.emit_json(j);
            }
        } else if (balanced_cmd->parsed()) {
            FieldCtxPtr f = field_for_q(q);
            RingCtxPtr ring = RingCtx::make(f, n, -1);
            SpectralData sd = spectral_decomposition(ring);
            if (block_list.empty()) block_list = {0};
            auto rep = balanced_bound_check(sd, block_list, parse_rational(delta_text), cap);
            json j;
            j["schema"] = 1;
            j["q"] = q;
            j["n"] = n;
            j["delta"] = delta_text;
            j["ideal_dim"] = rep.ideal_dim;
            j["k"] = rep.k;
            j["low_weight_count"] = rep.low_count;
            j["bound"] = rep.bound;
            j["ok"] = rep.ok;
            out.emit_json(j);
        } else if (experiment_cmd->parsed()) {
            ExperimentConfig ec;
            ec.q = q;
            std::uint32_t first = m ? m : mu_q(q);
            require(first <= max_m, Errc::UsageError, "--m must be <= --max-m");
            for (std::uint32_t mm = first; mm <= max_m; ++mm) ec.m_list.push_back(mm);
            ec.delta = parse_rational(delta_text);
            ec.sample_budget = budget == (1ULL << 20) ? 1000 : budget;
            ec.enum_cap = cap;
            ec.seed = seed;
            auto rows = asymptotic_experiment(ec);
            if (out.format == "json") {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"m", r.m},
                                   {"mode", r.exhaustive ? "exhaustive" : "sampled"},
                                   {"size", r.population},
                                   {"low_weight", r.low_weight},
                                   {"fraction", r.fraction},
                                   {"bound", r.bound_ratio},
                                   {"within_bound", r.within_bound}});
                json j;
                j["schema"] = 1;
                j["q"] = q;
                j["delta"] = delta_text;
                j["rows"] = std::move(arr);
                out.emit_json(j);
            } else {
                std::ostringstream os;
                os << "m,size,fraction,bound,mode\n";
                for (const auto& r : rows)
                    os << r.m << ',' << r.population << ',' << fmt_double(r.fraction) << ','
                       << fmt_double(r.bound_ratio) << ','
                       << (r.exhaustive ? "exhaustive" : "sampled") << "\n";
                out.emit(os.str());
            }
        } else if (table_cmd->parsed()) {
            std::vector<std::uint64_t> qs;
            for (std::uint64_t qq : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 9ULL, 11ULL, 13ULL})
                if (qq <= q_max) qs.push_back(qq);
            struct Cell {
                std::uint64_t q;
                std::uint32_t n;
                bool exists;
                std::string oracle = "skipped";
                std::string agree = "-";
            };
            std::vector<Cell> cells;
            for (auto qq : qs)
                for (std::uint32_t nn = 2; nn <= n_max; ++nn)
                    cells.push_back({qq, nn, existence_predicate(qq, nn)});
            std::uint64_t oracle_cap = cap == (1ULL << 20) ? 1000000 : cap;
            parallel_chunks(cells.size(), [&](unsigned, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    Cell& c = cells[i];
                    std::uint64_t spaces;
                    try {
                        spaces = subspace_count(c.q, c.n);
                    } catch (const Error&) {
                        continue;  // count overflow: leave as skipped
                    }
                    if (spaces > oracle_cap) continue;
                    auto found = exhaustive_selfdual_search(c.q, c.n, oracle_cap);
                    c.oracle = found ? "found" : "none";
                    c.agree = (found.has_value() == c.exists) ? "yes" : "no";
                }
            });
            if (out.format == "json") {
                json arr = json::array();
                for (const auto& c : cells)
                    arr.push_back({{"q", c.q},
                                   {"n", c.n},
                                   {"exists", c.exists},
                                   {"oracle", c.oracle},
                                   {"agree", c.agree}});
                json j;
                j["schema"] = 1;
                j["cells"] = std::move(arr);
                out.emit_json(j);
            } else {
                std::ostringstream os;
                os << "q,n,exists,oracle,agree\n";
                for (const auto& c : cells)
                    os << c.q << ',' << c.n << ',' << (c.exists ? "yes" : "no") << ','
                       << c.oracle << ',' << c.agree << "\n";
                out.emit(os.str());
            }
        } else if (verify_cmd->parsed()) {
            VerifyConfig cfg;
            cfg.q = q;
            cfg.max_m = max_m;
            cfg.seed = seed;
            cfg.cap = cap == (1ULL << 20) ? (1ULL << 16) : cap;
            // Plain text unless --format json was given explicitly.
            if (verify_cmd->get_option("--format")->count() == 0) out.format = "pretty";
            return run_verify(cfg, out);
        }
    } catch (const Error& e) {
        json err;
        err["schema"] = 1;
        err["error"] = std::string(errc_name(e.code()));
        err["message"] = e.what();
        std::fputs((err.dump() + "\n").c_str(), stderr);
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["schema"] = 1;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::fputs((err.dump() + "\n").c_str(), stderr);
        return 2;
    }
    return 0;
}
