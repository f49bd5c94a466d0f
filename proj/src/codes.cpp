#include "negacode/codes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "negacode/error.hpp"

namespace negacode {

Word double_shift(const RingCtx* ctx, const Word& w) {
    std::uint32_t n = ctx->n();
    require(w.size() == 2 * n, Errc::LengthMismatch, "word length != 2n");
    FieldElem lam = ctx->lambda_elem();
    Word out(w.size(), ctx->field()->zero());
    out[0] = lam * w[n - 1];
    for (std::uint32_t i = 1; i < n; ++i) out[i] = w[i - 1];
    out[n] = lam * w[2 * n - 1];
    for (std::uint32_t i = 1; i < n; ++i) out[n + i] = w[n + i - 1];
    return out;
}

bool is_shift_stable(const RingCtx* ctx, const Matrix& rref_rows) {
    for (const auto& row : rref_rows)
        if (!in_rowspace(rref_rows, double_shift(ctx, row))) return false;
    return true;
}

QuasiCode code_from_pair(const RingElem& a, const RingElem& b) {
    require(a.ctx() == b.ctx(), Errc::ContextMismatch, "pair halves from different rings");
    const RingCtx* ctx = a.ctx();
    Matrix rows;
    RingElem ca = a, cb = b;
    for (std::uint32_t i = 0; i < ctx->n(); ++i) {
        Word w = ca.coeffs();
        w.insert(w.end(), cb.coeffs().begin(), cb.coeffs().end());
        rows.push_back(std::move(w));
        ca = mul_x(ca);
        cb = mul_x(cb);
    }
    rref(rows);
    QuasiCode c;
    c.ctx = RingCtx::make(ctx->field(), ctx->n(), ctx->lambda());
    c.rows = std::move(rows);
    c.gen_pair = std::make_pair(a, b);
    internal_check(is_shift_stable(ctx, c.rows), "generated code is shift-stable");
    return c;
}

QuasiCode code_from_rows(RingCtxPtr ctx, Matrix rows) {
    rref(rows);
    require(is_shift_stable(ctx.get(), rows), Errc::DomainError,
            "rows do not span a shift-stable subspace");
    QuasiCode c;
    c.ctx = std::move(ctx);
    c.rows = std::move(rows);
    return c;
}

QuasiCode dual_code(const QuasiCode& c) {
    const FieldCtx* f = c.ctx->field().get();
    Matrix basis = c.rows.empty()
                       ? [&] {
                             Matrix id;
                             for (std::size_t i = 0; i < c.length(); ++i) {
                                 Word w(c.length(), f->zero());
                                 w[i] = f->one();
                                 id.push_back(std::move(w));
                             }
                             return id;
                         }()
                       : nullspace(c.rows, c.length(), f);
    QuasiCode d;
    d.ctx = c.ctx;
    d.rows = std::move(basis);
    internal_check(d.dim() + c.dim() == c.length(), "dim C + dim C-perp = 2n");
    internal_check(is_shift_stable(c.ctx.get(), d.rows), "dual is shift-stable");
    return d;
}

bool is_self_dual(const QuasiCode& c) {
    if (c.dim() != c.ctx->n()) return false;
    for (std::size_t i = 0; i < c.rows.size(); ++i)
        for (std::size_t j = i; j < c.rows.size(); ++j)
            if (!dot(c.rows[i], c.rows[j]).is_zero()) return false;
    return true;
}

namespace {

// Loopless reflected mixed-radix Gray walk over [0,q)^dim; each step changes
// one digit by +-1 and updates the running codeword and its weight in place.
struct GrayScan {
    std::uint64_t q;
    std::size_t dim;
    std::vector<std::uint64_t> digit;
    std::vector<int> dir;
    std::vector<std::size_t> focus;

    explicit GrayScan(std::uint64_t q_, std::size_t dim_)
        : q(q_), dim(dim_), digit(dim_, 0), dir(dim_, 1), focus(dim_ + 1) {
        for (std::size_t j = 0; j <= dim; ++j) focus[j] = j;
    }

    // Returns the digit index changed, or dim when exhausted.
    std::size_t step(std::uint64_t& old_value, std::uint64_t& new_value) {
        std::size_t j = focus[0];
        focus[0] = 0;
        if (j == dim) return dim;
        old_value = digit[j];
        digit[j] = old_value + dir[j];
        new_value = digit[j];
        if (new_value == 0 || new_value == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        return j;
    }
};

std::size_t exhaustive_scan_range(const QuasiCode& c, std::uint64_t first_digit_begin,
                                  std::uint64_t first_digit_end) {
    const FieldCtx* f = c.ctx->field().get();
    std::uint64_t q = f->q();
    std::size_t dim = c.dim();
    std::size_t len = c.length();
    std::size_t best = len + 1;
    for (std::uint64_t v0 = first_digit_begin; v0 < first_digit_end; ++v0) {
        Word cur(len, f->zero());
        if (v0 != 0) {
            FieldElem s = f->from_index(v0);
            for (std::size_t c2 = 0; c2 < len; ++c2) cur[c2] = s * c.rows[0][c2];
        }
        std::size_t w = word_weight(cur);
        std::size_t msg_nonzero = v0 != 0;
        if (msg_nonzero && w < best) best = w;
        if (dim == 1) continue;
        GrayScan gray(q, dim - 1);
        std::uint64_t old_v, new_v;
        std::size_t j;
        while ((j = gray.step(old_v, new_v)) != dim - 1) {
            std::size_t row = j + 1;
            FieldElem diff = f->from_index(new_v) - f->from_index(old_v);
            for (std::size_t c2 = 0; c2 < len; ++c2) {
                const FieldElem& rc = c.rows[row][c2];
                if (rc.is_zero()) continue;
                bool was = !cur[c2].is_zero();
                cur[c2] += diff * rc;
                bool now = !cur[c2].is_zero();
                w += static_cast<std::size_t>(now) - static_cast<std::size_t>(was);
            }
            msg_nonzero += static_cast<std::size_t>(new_v != 0) -
                           static_cast<std::size_t>(old_v != 0);
            if (msg_nonzero && w < best) best = w;
        }
    }
    return best;
}

}  // namespace

WeightReport min_weight(const QuasiCode& c, std::uint64_t budget, bool require_exhaustive,
                        std::uint64_t seed) {
    require(c.dim() > 0, Errc::EmptyCode, "the zero code has no minimum weight");
    const FieldCtx* f = c.ctx->field().get();
    std::uint64_t q = f->q();
    bool fits = true;
    std::uint64_t messages = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        if (messages > budget / q) {
            fits = false;
            break;
        }
        messages *= q;
    }
    WeightReport rep;
    rep.rate = c.rate();
    if (fits) {
        std::size_t best = c.length() + 1;
        std::vector<std::size_t> partial(worker_count(), c.length() + 1);
        parallel_chunks(q, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
            std::size_t r = exhaustive_scan_range(c, b, e);
            partial[w] = std::min(partial[w], r);
        });
        for (auto v : partial) best = std::min(best, v);
        internal_check(best <= c.length(), "nonzero codeword found in exhaustive scan");
        rep.min_weight = best;
        rep.exhaustive = true;
        rep.enumerated = messages;
    } else {
        require(!require_exhaustive, Errc::BudgetExceeded,
                "message space exceeds the exhaustive budget");
        Rng rng(seed);
        std::size_t best = c.length() + 1;
        std::uint64_t samples = std::max<std::uint64_t>(budget, 1);
        for (std::uint64_t s = 0; s < samples; ++s) {
            Word cur(c.length(), f->zero());
            bool nonzero = false;
            for (std::size_t r = 0; r < c.dim(); ++r) {
                std::uint64_t v = rng.below(q);
                if (v == 0) continue;
                nonzero = true;
                FieldElem scale = f->from_index(v);
                for (std::size_t c2 = 0; c2 < c.length(); ++c2)
                    cur[c2] += scale * c.rows[r][c2];
            }
            if (!nonzero) continue;
            best = std::min(best, word_weight(cur));
        }
        require(best <= c.length(), Errc::BudgetExceeded, "sampling found no nonzero codeword");
        rep.min_weight = best;
        rep.exhaustive = false;
        rep.enumerated = samples;
    }
    rep.relative = Rational(static_cast<std::int64_t>(rep.min_weight),
                            static_cast<std::int64_t>(c.length()));
    return rep;
}

bool pair_code_has_low_weight(const RingElem& g, std::size_t w_max, std::uint64_t budget) {
    const RingCtx* ctx = g.ctx();
    const FieldCtx* f = ctx->field().get();
    std::uint32_t n = ctx->n();
    if (w_max < 2) return false;  // (f, fg) with f != 0 and g a unit has weight >= 2
    std::size_t j_max = std::min<std::size_t>(w_max - 1, n);

    // Precompute the shifted generators x^i * g once.
    std::vector<RingElem> xg;
    xg.reserve(n);
    RingElem cur = g;
    for (std::uint32_t i = 0; i < n; ++i) {
        xg.push_back(cur);
        cur = mul_x(cur);
    }

    std::uint64_t cost = 0;
    std::uint64_t nz = f->q() - 1;
    for (std::size_t j = 1; j <= j_max; ++j) {
        // Candidate messages f of weight j: positions ascending, values nonzero.
        std::vector<std::uint32_t> pos(j);
        for (std::size_t i = 0; i < j; ++i) pos[i] = static_cast<std::uint32_t>(i);
        while (true) {
            std::vector<std::uint64_t> val(j, 1);
            while (true) {
                if (++cost > budget)
                    fail(Errc::BudgetExceeded, "low-weight search exceeded its budget");
                RingElem fg = RingElem::zero(ctx);
                for (std::size_t i = 0; i < j; ++i)
                    fg += scalar_mul(f->from_index(val[i]), xg[pos[i]]);
                if (j + fg.weight() <= w_max) return true;
                std::size_t carry = 0;
                while (carry < j && ++val[carry] > nz) {
                    val[carry] = 1;
                    ++carry;
                }
                if (carry == j) break;
            }
            std::size_t i = j;
            while (i > 0 && pos[i - 1] == n - j + i - 1) --i;
            if (i == 0) break;
            ++pos[i - 1];
            for (std::size_t t = i; t < j; ++t) pos[t] = pos[t - 1] + 1;
        }
    }
    return false;
}

std::vector<Word> enumerate_codewords(const QuasiCode& c, std::uint64_t cap) {
    const FieldCtx* f = c.ctx->field().get();
    std::uint64_t q = f->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        require(total <= cap / q, Errc::CapExceeded, "codeword count exceeds cap");
        total *= q;
    }
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        Word w(c.length(), f->zero());
        std::uint64_t v = rank;
        for (std::size_t r = 0; r < c.dim(); ++r) {
            std::uint64_t d = v % q;
            v /= q;
            if (d == 0) continue;
            FieldElem s = f->from_index(d);
            for (std::size_t col = 0; col < c.length(); ++col) w[col] += s * c.rows[r][col];
        }
        out.push_back(std::move(w));
    }
    return out;
}

double entropy_hq(const Rational& delta, std::uint64_t q) {
    require(q >= 2, Errc::DomainError, "entropy base must be >= 2");
    require(delta.num >= 0, Errc::DomainError, "delta must be >= 0");
    // delta <= 1 - 1/q  <=>  q*num <= (q-1)*den, checked exactly.
    require(static_cast<__int128>(delta.num) * q <=
                static_cast<__int128>(delta.den) * (q - 1),
            Errc::DomainError, "delta above 1 - 1/q");
    if (delta.num == 0) return 0.0;
    if (static_cast<__int128>(delta.num) * q == static_cast<__int128>(delta.den) * (q - 1))
        return 1.0;
    double d = delta.to_double();
    double lq = std::log(static_cast<double>(q));
    return d * std::log(static_cast<double>(q - 1)) / lq - d * std::log(d) / lq -
           (1.0 - d) * std::log(1.0 - d) / lq;
}

BalancedBoundReport balanced_bound_check(const SpectralData& sd,
                                         const std::vector<std::size_t>& idem_indices,
                                         const Rational& delta, std::uint64_t cap) {
    const RingCtx* ctx = sd.ring.get();
    const FieldCtx* f = ctx->field().get();
    RingElem gen = RingElem::zero(ctx);
    for (auto i : idem_indices) {
        require(i < sd.idem.size(), Errc::DomainError, "idempotent index out of range");
        gen += sd.idem[i];
    }
    Matrix basis = ideal_basis(gen);
    std::size_t dim_a = basis.size();

    BalancedBoundReport rep;
    rep.ideal_dim = dim_a;
    rep.k = 2 * dim_a;
    double h = entropy_hq(delta, f->q());
    rep.bound = std::pow(static_cast<double>(f->q()), static_cast<double>(rep.k) * h);

    std::uint64_t q = f->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rep.k; ++i) {
        require(total <= cap / q, Errc::CapExceeded, "|A x A| exceeds the enumeration cap");
        total *= q;
    }
    require(total <= cap, Errc::CapExceeded, "|A x A| exceeds the enumeration cap");

    std::int64_t len = static_cast<std::int64_t>(2 * ctx->n());
    std::uint64_t count = 0;
    // Enumerate A as messages over the basis; weights of the two halves add.
    std::uint64_t size_a = checked_pow(q, dim_a, "|A|");
    std::vector<std::size_t> weights(size_a);
    for (std::uint64_t r = 0; r < size_a; ++r) {
        Word w(ctx->n(), f->zero());
        std::uint64_t v = r;
        for (std::size_t i = 0; i < dim_a; ++i) {
            std::uint64_t d = v % q;
            v /= q;
            if (d == 0) continue;
            FieldElem s = f->from_index(d);
            for (std::uint32_t c = 0; c < ctx->n(); ++c) w[c] += s * basis[i][c];
        }
        weights[r] = word_weight(w);
    }
    for (std::uint64_t r1 = 0; r1 < size_a; ++r1)
        for (std::uint64_t r2 = 0; r2 < size_a; ++r2) {
            std::size_t w = weights[r1] + weights[r2];
            // w / 2n <= delta, exactly
            if (rat_le(static_cast<std::int64_t>(w), len, delta.num, delta.den)) ++count;
        }
    rep.low_count = count;
    rep.ok = static_cast<double>(count) <= rep.bound * (1 + 1e-12);
    return rep;
}

}  // namespace negacode
