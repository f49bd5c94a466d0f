#include "negacode/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "negacode/poly.hpp"
#include "negacode/util.hpp"

namespace negacode {

namespace {

std::mutex g_ring_mutex;
std::map<std::tuple<const FieldCtx*, std::uint32_t, int>, RingCtxPtr>& ring_map() {
    static std::map<std::tuple<const FieldCtx*, std::uint32_t, int>, RingCtxPtr> m;
    return m;
}

void check_same_ctx(const RingElem& a, const RingElem& b) {
    require(a.ctx() == b.ctx() && a.ctx() != nullptr, Errc::ContextMismatch,
            "ring elements from different contexts");
}

}  // namespace

RingCtxPtr RingCtx::make(FieldCtxPtr field, std::uint32_t n, int lambda) {
    require(n >= 2, Errc::DomainError, "ring length must be >= 2");
    require(lambda == 1 || lambda == -1, Errc::DomainError, "lambda must be +1 or -1");
    std::lock_guard<std::mutex> lock(g_ring_mutex);
    auto key = std::make_tuple(field.get(), n, lambda);
    auto it = ring_map().find(key);
    if (it != ring_map().end()) return it->second;
    auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
    ctx->field_ = std::move(field);
    ctx->n_ = n;
    ctx->lambda_ = lambda;
    ring_map()[key] = ctx;
    return ctx;
}

FieldElem RingCtx::lambda_elem() const {
    return lambda_ == 1 ? field_->one() : field_->minus_one();
}

RingElem::RingElem(const RingCtx* ctx, std::vector<FieldElem> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    require(ctx_ != nullptr && c_.size() == ctx_->n(), Errc::LengthMismatch,
            "ring element has wrong coefficient count");
    for (const auto& c : c_)
        require(c.ctx() == ctx_->field().get(), Errc::ContextMismatch,
                "ring coefficients must live in the ring's field");
}

RingElem RingElem::zero(const RingCtx* ctx) {
    return RingElem(ctx, std::vector<FieldElem>(ctx->n(), ctx->field()->zero()));
}

RingElem RingElem::one(const RingCtx* ctx) { return from_scalar(ctx, ctx->field()->one()); }

RingElem RingElem::from_scalar(const RingCtx* ctx, const FieldElem& c) {
    std::vector<FieldElem> v(ctx->n(), ctx->field()->zero());
    v[0] = c;
    return RingElem(ctx, std::move(v));
}

RingElem RingElem::x_power(const RingCtx* ctx, std::uint32_t i) {
    std::vector<FieldElem> v(ctx->n(), ctx->field()->zero());
    std::uint32_t r = i % (2 * ctx->n());
    FieldElem c = ctx->field()->one();
    if (r >= ctx->n()) {
        r -= ctx->n();
        c = ctx->lambda_elem();
    }
    v[r] = c;
    return RingElem(ctx, std::move(v));
}

RingElem RingElem::from_indices(const RingCtx* ctx, const std::vector<std::uint64_t>& idx) {
    require(idx.size() == ctx->n(), Errc::LengthMismatch,
            "expected " + std::to_string(ctx->n()) + " coefficients, got " +
                std::to_string(idx.size()));
    std::vector<FieldElem> v;
    v.reserve(idx.size());
    for (auto i : idx) v.push_back(ctx->field()->from_index(i));
    return RingElem(ctx, std::move(v));
}

RingElem RingElem::from_rank(const RingCtx* ctx, std::uint64_t rank) {
    std::uint64_t q = ctx->q();
    std::vector<FieldElem> v;
    v.reserve(ctx->n());
    for (std::uint32_t i = 0; i < ctx->n(); ++i) {
        v.push_back(ctx->field()->from_index(rank % q));
        rank /= q;
    }
    require(rank == 0, Errc::DomainError, "rank out of range for this ring");
    return RingElem(ctx, std::move(v));
}

bool RingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

std::size_t RingElem::weight() const {
    std::size_t w = 0;
    for (const auto& c : c_) w += !c.is_zero();
    return w;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    check_same_ctx(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    check_same_ctx(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    check_same_ctx(a, b);
    const RingCtx* ctx = a.ctx();
    std::uint32_t n = ctx->n();
    const FieldElem lam = ctx->lambda_elem();
    std::vector<FieldElem> out(n, ctx->field()->zero());
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            std::uint32_t k = i + j;
            FieldElem t = a[i] * b[j];
            if (k >= n) {
                k -= n;
                t *= lam;
            }
            out[k] += t;
        }
    }
    return RingElem(ctx, std::move(out));
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem RingElem::operator-() const {
    std::vector<FieldElem> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return RingElem(ctx_, std::move(out));
}

std::vector<std::uint64_t> RingElem::to_indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(ctx_->field()->to_index(c));
    return out;
}

std::string RingElem::to_string() const {
    std::ostringstream os;
    auto idx = to_indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << idx[i];
    }
    return os.str();
}

RingElem scalar_mul(const FieldElem& s, const RingElem& a) {
    std::vector<FieldElem> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(s * c);
    return RingElem(a.ctx(), std::move(out));
}

RingElem mul_x(const RingElem& a) {
    const RingCtx* ctx = a.ctx();
    std::uint32_t n = ctx->n();
    std::vector<FieldElem> out(n, ctx->field()->zero());
    out[0] = ctx->lambda_elem() * a[n - 1];
    for (std::uint32_t i = 1; i < n; ++i) out[i] = a[i - 1];
    return RingElem(ctx, std::move(out));
}

RingElem star(const RingElem& a) {
    const RingCtx* ctx = a.ctx();
    require(ctx->lambda() == -1, Errc::WrongSign, "star is defined on the negacyclic ring only");
    std::uint32_t n = ctx->n();
    std::vector<FieldElem> out(n, ctx->field()->zero());
    out[0] = a[0];
    // x^{-i} = -x^{n-i}, so the X^i coefficient of a* is -a_{n-i}.
    for (std::uint32_t i = 1; i < n; ++i) out[i] = -a[n - i];
    return RingElem(ctx, std::move(out));
}

std::optional<RingElem> invert(const RingElem& a) {
    const RingCtx* ctx = a.ctx();
    const FieldCtx* f = ctx->field().get();
    Poly ap(f, a.coeffs());
    std::vector<FieldElem> mod_c(ctx->n() + 1, f->zero());
    mod_c[0] = -ctx->lambda_elem();
    mod_c[ctx->n()] = f->one();
    Poly modulus(f, std::move(mod_c));
    auto eg = poly_ext_gcd(ap, modulus);
    if (eg.g.degree() != 0) return std::nullopt;
    Poly u = pmod(eg.u, modulus);  // already scaled so that g = 1
    std::vector<FieldElem> out(ctx->n(), f->zero());
    for (int i = 0; i <= u.degree(); ++i) out[i] = u[i];
    RingElem r(ctx, std::move(out));
    internal_check(r * a == RingElem::one(ctx), "inverse verifies");
    return r;
}

PairElem::PairElem(RingElem l, RingElem r) : left(std::move(l)), right(std::move(r)) {
    require(left.ctx() == right.ctx(), Errc::ContextMismatch,
            "pair halves from different rings");
}

FieldElem inner_product(const RingElem& a, const RingElem& b) {
    check_same_ctx(a, b);
    FieldElem acc = a.ctx()->field()->zero();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) acc += a[i] * b[i];
    return acc;
}

FieldElem inner_product(const PairElem& u, const PairElem& v) {
    require(u.left.ctx() == v.left.ctx(), Errc::ContextMismatch, "pairs from different rings");
    return inner_product(u.left, v.left) + inner_product(u.right, v.right);
}

RingElem eta(const RingElem& a) {
    const RingCtx* ctx = a.ctx();
    require(ctx->n() % 2 == 1, Errc::EvenLength, "eta needs odd length");
    require(ctx->lambda() == 1, Errc::WrongSign, "eta maps the cyclic ring to the negacyclic one");
    RingCtxPtr target = RingCtx::make(ctx->field(), ctx->n(), -1);
    std::vector<FieldElem> out;
    out.reserve(ctx->n());
    for (std::uint32_t i = 0; i < ctx->n(); ++i) out.push_back(i % 2 ? -a[i] : a[i]);
    return RingElem(target.get(), std::move(out));
}

PairElem eta_pair(const PairElem& u) { return PairElem(eta(u.left), eta(u.right)); }

std::vector<FieldElem> to_word(const RingElem& a) { return a.coeffs(); }

RingElem from_word(const RingCtx* ctx, const std::vector<FieldElem>& w) {
    require(w.size() == ctx->n(), Errc::LengthMismatch,
            "word length " + std::to_string(w.size()) + " != n = " + std::to_string(ctx->n()));
    return RingElem(ctx, w);
}

}  // namespace negacode
