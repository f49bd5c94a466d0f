#include "negacode/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "negacode/cosets.hpp"
#include "negacode/poly.hpp"
#include "negacode/util.hpp"

namespace negacode {

namespace {

// Contexts are interned and pinned for the process lifetime; elements hold
// plain pointers and pointer equality doubles as context identity.
std::mutex g_intern_mutex;
std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>, FieldCtxPtr>& intern_map() {
    static std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>, FieldCtxPtr> m;
    return m;
}

void check_same_ctx(const FieldElem& a, const FieldElem& b) {
    require(a.ctx() == b.ctx() && a.ctx() != nullptr, Errc::ContextMismatch,
            "field elements from different contexts");
}

}  // namespace

FieldElem::FieldElem(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    require(ctx_ != nullptr && c_.size() == ctx_->k(), Errc::LengthMismatch,
            "field element has wrong coefficient count");
    for (auto v : c_)
        require(v < ctx_->p(), Errc::DomainError, "field coordinate out of range");
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElem& FieldElem::operator+=(const FieldElem& o) { return *this = ctx_->add(*this, o); }
FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this = ctx_->sub(*this, o); }
FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = ctx_->mul(*this, o); }
FieldElem FieldElem::operator-() const { return ctx_->neg(*this); }

FieldCtxPtr FieldCtx::make(std::uint64_t p, std::uint32_t k, std::uint64_t seed,
                           std::uint64_t bound) {
    require(k >= 1, Errc::DomainError, "extension degree must be >= 1");
    require(is_prime_u64(p), Errc::CompositeCharacteristic,
            std::to_string(p) + " is not prime");
    require(p < (1ULL << 31), Errc::SizeExceeded, "characteristic too large");
    std::uint64_t q = checked_pow(p, k, "field cardinality");
    require(q <= std::min(bound, kMaxCardinality), Errc::SizeExceeded,
            "field cardinality " + std::to_string(q) + " exceeds bound " +
                std::to_string(std::min(bound, kMaxCardinality)));
    std::uint64_t effective_seed = (k == 1) ? 0 : seed;

    std::lock_guard<std::mutex> lock(g_intern_mutex);
    auto key = std::make_tuple(p, k, effective_seed);
    auto it = intern_map().find(key);
    if (it != intern_map().end()) return it->second;

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->k_ = k;
    ctx->q_ = q;
    if (k > 1) {
        // Bootstrap through the prime field to search for a modulus.
        auto prime_key = std::make_tuple(p, 1u, std::uint64_t{0});
        FieldCtxPtr prime;
        auto pit = intern_map().find(prime_key);
        if (pit != intern_map().end()) {
            prime = pit->second;
        } else {
            auto pc = std::shared_ptr<FieldCtx>(new FieldCtx());
            pc->p_ = p;
            pc->k_ = 1;
            pc->q_ = p;
            intern_map()[prime_key] = pc;
            prime = pc;
        }
        Poly m = find_irreducible(prime.get(), k, seed);
        ctx->modulus_.resize(k + 1);
        for (std::uint32_t i = 0; i <= k; ++i)
            ctx->modulus_[i] = m.coeff_or_zero(i).coeffs()[0];
    }
    intern_map()[key] = ctx;
    return ctx;
}

FieldElem FieldCtx::zero() const { return FieldElem(this, std::vector<std::uint32_t>(k_, 0)); }

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::minus_one() const { return from_int(p_ - 1); }

FieldElem FieldCtx::from_int(std::uint64_t v) const {
    std::vector<std::uint32_t> c(k_, 0);
    c[0] = static_cast<std::uint32_t>(v % p_);
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_index(std::uint64_t idx) const {
    require(idx < q_, Errc::DomainError, "element index out of range");
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return FieldElem(this, std::move(c));
}

std::uint64_t FieldCtx::to_index(const FieldElem& a) const {
    require(a.ctx() == this, Errc::ContextMismatch, "element from another field");
    std::uint64_t idx = 0;
    for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.coeffs()[i];
    return idx;
}

std::string FieldCtx::to_string() const {
    std::string s = std::to_string(p_) + "^" + std::to_string(k_);
    if (k_ > 1) {
        s += "/";
        for (std::uint32_t i = 0; i <= k_; ++i) {
            if (i) s += ",";
            s += std::to_string(modulus_[i]);
        }
    }
    return s;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check_same_ctx(a, b);
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a.coeffs()[i]) + b.coeffs()[i];
        if (v >= p_) v -= p_;
        c[i] = static_cast<std::uint32_t>(v);
    }
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    check_same_ctx(a, b);
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a.coeffs()[i]) + p_ - b.coeffs()[i];
        if (v >= p_) v -= p_;
        c[i] = static_cast<std::uint32_t>(v);
    }
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i)
        c[i] = a.coeffs()[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - a.coeffs()[i]);
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check_same_ctx(a, b);
    if (k_ == 1) {
        std::uint64_t v = static_cast<std::uint64_t>(a.coeffs()[0]) * b.coeffs()[0] % p_;
        return FieldElem(this, {static_cast<std::uint32_t>(v)});
    }
    // Schoolbook product then monic-modulus reduction; k stays small here.
    std::vector<std::uint64_t> t(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a.coeffs()[i]) * b.coeffs()[j]) % p_;
    }
    for (std::uint32_t i = 2 * k_ - 2; i >= k_; --i) {
        std::uint64_t v = t[i] % p_;
        if (v == 0) continue;
        t[i] = 0;
        for (std::uint32_t j = 0; j < k_; ++j) {
            std::uint64_t sub = v * modulus_[j] % p_;
            t[i - k_ + j] = (t[i - k_ + j] + p_ - sub) % p_;
        }
    }
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = static_cast<std::uint32_t>(t[i] % p_);
    return FieldElem(this, std::move(c));
}

FieldElem pow(const FieldElem& a, std::uint64_t e) {
    const FieldCtx* ctx = a.ctx();
    FieldElem r = ctx->one();
    FieldElem b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

FieldElem inv(const FieldElem& a) {
    require(!a.is_zero(), Errc::DivisionByZero, "inverse of zero");
    return pow(a, a.ctx()->q() - 2);
}

std::uint64_t multiplicative_order(const FieldElem& a) {
    require(!a.is_zero(), Errc::DivisionByZero, "order of zero");
    const FieldCtx* ctx = a.ctx();
    std::uint64_t d = ctx->q() - 1;
    auto factors = prime_factors(d);
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (std::uint64_t f : factors) {
        while (d % f == 0 && pow(a, d / f) == ctx->one()) d /= f;
    }
    return d;
}

std::optional<FieldElem> sqrt_minus_one(const FieldCtx& ctx) {
    if (ctx.p() == 2) return ctx.one();
    if (ctx.q() % 4 == 3) return std::nullopt;
    // b non-square  =>  b^((q-1)/4) squares to -1; non-squares are dense.
    std::uint64_t e = (ctx.q() - 1) / 4;
    FieldElem m1 = ctx.minus_one();
    for (std::uint64_t idx = 2; idx < ctx.q(); ++idx) {
        FieldElem t = pow(ctx.from_index(idx), e);
        if (t * t == m1) return t;
    }
    fail(Errc::Internal, "no square root of -1 found although q = 1 mod 4");
}

FieldElem SplittingField::embed(const FieldElem& a) const {
    require(a.ctx() == base.get(), Errc::ContextMismatch, "embed expects a base-field element");
    if (ext == base) return a;
    FieldElem acc = ext->zero();
    for (std::uint32_t i = 0; i < base->k(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        acc += ext->from_int(a.coeffs()[i]) * gen_image_pows[i];
    }
    return acc;
}

std::optional<FieldElem> SplittingField::descend(const FieldElem& c) const {
    require(c.ctx() == ext.get(), Errc::ContextMismatch, "descend expects an extension element");
    if (ext == base) return c;
    // Solve sum_j a_j * gen_image_pows[j] = c over GF(p).
    std::uint64_t p = base->p();
    std::uint32_t rows = ext->k(), cols = base->k();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols + 1, 0));
    for (std::uint32_t j = 0; j < cols; ++j)
        for (std::uint32_t i = 0; i < rows; ++i) m[i][j] = gen_image_pows[j].coeffs()[i];
    for (std::uint32_t i = 0; i < rows; ++i) m[i][cols] = c.coeffs()[i];

    auto powm = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::uint32_t rank = 0;
    std::vector<std::int64_t> pivot_col(cols, -1);
    for (std::uint32_t col = 0; col < cols && rank < rows; ++col) {
        std::uint32_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        std::uint64_t piv_inv = powm(m[rank][col], p - 2);
        for (auto& v : m[rank]) v = v * piv_inv % p;
        for (std::uint32_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            std::uint64_t f = m[r][col];
            for (std::uint32_t cc = 0; cc <= cols; ++cc)
                m[r][cc] = (m[r][cc] + (p - f) * m[rank][cc]) % p;
        }
        pivot_col[col] = rank;
        ++rank;
    }
    for (std::uint32_t r = rank; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;  // inconsistent: not in the base image
    std::vector<std::uint32_t> sol(cols, 0);
    for (std::uint32_t col = 0; col < cols; ++col) {
        require(pivot_col[col] >= 0, Errc::Internal, "embedding matrix lost rank");
        sol[col] = static_cast<std::uint32_t>(m[pivot_col[col]][cols]);
    }
    FieldElem out(base.get(), std::move(sol));
    internal_check(embed(out) == c, "descend/embed round trip");
    return out;
}

namespace {

// Root of the (completely splitting) base modulus inside ext, found by scan
// for small fields and by deterministic equal-degree splitting otherwise.
FieldElem find_base_root(const FieldCtxPtr& base, const FieldCtxPtr& ext) {
    std::vector<FieldElem> lifted;
    for (std::uint32_t i = 0; i <= base->k(); ++i)
        lifted.push_back(ext->from_int(base->modulus()[i]));
    Poly f(ext.get(), std::move(lifted));
    if (ext->q() <= (1ULL << 20)) {
        for (std::uint64_t idx = 0; idx < ext->q(); ++idx) {
            FieldElem cand = ext->from_index(idx);
            if (eval(f, cand).is_zero()) return cand;
        }
        fail(Errc::Internal, "base modulus has no root in the splitting field");
    }
    // deterministic Cantor-Zassenhaus walk (odd characteristic only)
    Poly g = f.monic();
    std::uint64_t counter = 1;
    while (g.degree() > 1) {
        FieldElem shift = ext->from_index(counter++ % ext->q());
        Poly base_poly = Poly::x(ext.get()) + Poly::constant(shift);
        Poly h = powmod(base_poly, (ext->q() - 1) / 2, g) - Poly::constant(ext->one());
        Poly d = poly_gcd(h, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            auto [quo, rem] = divmod(g, d);
            internal_check(rem.is_zero(), "splitting factor divides");
            g = (d.degree() <= quo.degree()) ? d : quo;
        }
    }
    internal_check(g.degree() == 1, "root extraction terminated");
    return -(g[0] * inv(g[1]));
}

}  // namespace

SplittingField splitting_field_with_root(const FieldCtxPtr& base, std::uint64_t n,
                                         std::uint64_t bound) {
    require(n >= 1, Errc::DomainError, "n must be >= 1");
    std::uint64_t two_n = 2 * n;
    require(gcd_u64(two_n, base->q()) == 1, Errc::NotSemisimple,
            "gcd(2n, q) != 1: X^n + 1 is not squarefree over this field");
    std::uint64_t s = unit_order(two_n, base->q() % two_n);

    SplittingField sf;
    sf.base = base;
    sf.degree = static_cast<std::uint32_t>(s);
    if (s == 1) {
        sf.ext = base;
    } else {
        std::uint64_t ext_deg = checked_mul(base->k(), s, "splitting field degree");
        require(ext_deg < (1ULL << 20), Errc::SizeExceeded, "splitting degree too large");
        sf.ext = FieldCtx::make(base->p(), static_cast<std::uint32_t>(ext_deg), 0, bound);
    }

    sf.gen_image_pows.assign(base->k(), sf.ext->one());
    if (base->k() > 1) {
        // Image of the base generator: itself when E = base, else a root of
        // the base modulus inside E.
        FieldElem rho = (sf.ext == base) ? base->from_index(base->p())
                                         : find_base_root(base, sf.ext);
        FieldElem acc = sf.ext->one();
        for (std::uint32_t i = 0; i < base->k(); ++i) {
            sf.gen_image_pows[i] = acc;
            acc *= rho;
        }
    }

    // xi = h^((|E|-1)/2n) has order exactly 2n for generator-ish h; verify
    // by the prime divisors of 2n. xi^n = -1 follows (odd characteristic).
    std::uint64_t group = sf.ext->q() - 1;
    internal_check(group % two_n == 0, "2n divides |E^x|");
    auto rad = prime_factors(two_n);
    rad.erase(std::unique(rad.begin(), rad.end()), rad.end());
    FieldElem one = sf.ext->one();
    bool found = false;
    for (std::uint64_t idx = 2; idx < sf.ext->q(); ++idx) {
        FieldElem xi = pow(sf.ext->from_index(idx), group / two_n);
        bool full = !(xi == one);
        for (std::uint64_t r : rad)
            if (full && pow(xi, two_n / r) == one) full = false;
        if (full) {
            sf.xi = xi;
            found = true;
            break;
        }
    }
    internal_check(found, "found a primitive 2n-th root of unity");
    internal_check(pow(sf.xi, n) == sf.ext->minus_one(), "xi^n = -1");
    return sf;
}

}  // namespace negacode
