#include "negacode/poly.hpp"

#include <algorithm>

#include "negacode/util.hpp"

namespace negacode {

Poly::Poly(const FieldCtx* ctx, std::vector<FieldElem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const FieldCtx* ctx, std::uint32_t deg, const FieldElem& c) {
    std::vector<FieldElem> v(deg + 1, ctx->zero());
    v[deg] = c;
    return Poly(ctx, std::move(v));
}

Poly Poly::x(const FieldCtx* ctx) { return monomial(ctx, 1, ctx->one()); }

Poly Poly::constant(const FieldElem& c) { return Poly(c.ctx(), {c}); }

FieldElem Poly::coeff_or_zero(std::size_t i) const {
    return i < c_.size() ? c_[i] : ctx_->zero();
}

Poly& Poly::operator+=(const Poly& o) {
    if (ctx_ == nullptr) ctx_ = o.ctx_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (ctx_ == nullptr) ctx_ = o.ctx_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_ ? a.ctx_ : b.ctx_);
    const FieldCtx* ctx = a.ctx_;
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, ctx->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(ctx, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (lead() == ctx_->one()) return *this;
    FieldElem s = inv(lead());
    std::vector<FieldElem> out(c_);
    for (auto& c : out) c *= s;
    return Poly(ctx_, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    const FieldCtx* ctx = b.ctx();
    if (a.degree() < b.degree()) return {Poly(ctx), a};
    FieldElem lead_inv = inv(b.lead());
    std::vector<FieldElem> rem(a.coeffs());
    std::vector<FieldElem> quo(a.degree() - b.degree() + 1, ctx->zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElem f = rem[i] * lead_inv;
        if (f.is_zero()) continue;
        quo[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b[j];
    }
    return {Poly(ctx, std::move(quo)), Poly(ctx, std::move(rem))};
}

Poly pmod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    const FieldCtx* ctx = a.ctx() ? a.ctx() : b.ctx();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(ctx->one()), u1 = Poly(ctx);
    Poly v0 = Poly(ctx), v1 = Poly::constant(ctx->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Poly v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero() && r0.lead() != ctx->one()) {
        FieldElem s = inv(r0.lead());
        Poly sc = Poly::constant(s);
        r0 = sc * r0;
        u0 = sc * u0;
        v0 = sc * v0;
    }
    return {r0, u0, v0};
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(mod.ctx()->one());
    base = pmod(base, mod);
    while (e) {
        if (e & 1) r = pmod(r * base, mod);
        e >>= 1;
        if (e) base = pmod(base * base, mod);
    }
    return r;
}

FieldElem eval(const Poly& f, const FieldElem& at) {
    FieldElem acc = at.ctx()->zero();
    for (int i = f.degree(); i >= 0; --i) acc = acc * at + f[i];
    return acc;
}

bool is_irreducible(const Poly& f) {
    const FieldCtx* ctx = f.ctx();
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0].is_zero()) return false;  // divisible by x
    std::uint64_t Q = ctx->q();
    Poly fm = f.monic();
    // frob[e] = x^(Q^e) mod f
    std::vector<Poly> frob(d + 1);
    frob[0] = Poly::x(ctx);
    for (int e = 1; e <= d; ++e) frob[e] = powmod(frob[e - 1], Q, fm);
    if (frob[d] != pmod(Poly::x(ctx), fm)) return false;
    auto factors = prime_factors(static_cast<std::uint64_t>(d));
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (std::uint64_t r : factors) {
        Poly diff = frob[d / r] - Poly::x(ctx);
        if (poly_gcd(diff, fm).degree() != 0) return false;
    }
    return true;
}

Poly find_irreducible(const FieldCtx* ctx, std::uint32_t degree, std::uint64_t seed) {
    require(degree >= 1, Errc::DomainError, "degree must be >= 1");
    std::uint64_t q = ctx->q();
    std::uint64_t space = checked_pow(q, degree, "irreducible search space");
    std::uint64_t idx = seed % space;
    for (std::uint64_t tries = 0; tries < space; ++tries, idx = (idx + 1) % space) {
        std::vector<FieldElem> c(degree + 1, ctx->zero());
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < degree; ++i) {
            c[i] = ctx->from_index(v % q);
            v /= q;
        }
        c[degree] = ctx->one();
        Poly cand(ctx, std::move(c));
        if (is_irreducible(cand)) return cand;
    }
    fail(Errc::Internal, "no irreducible polynomial found (unreachable)");
}

}  // namespace negacode
