#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

class RingCtx;
using RingCtxPtr = std::shared_ptr<const RingCtx>;

/// F[X]/(X^n - lambda) for lambda in {+1, -1}. Interned like FieldCtx.
class RingCtx {
public:
    static RingCtxPtr make(FieldCtxPtr field, std::uint32_t n, int lambda);

    const FieldCtxPtr& field() const { return field_; }
    std::uint32_t n() const { return n_; }
    int lambda() const { return lambda_; }
    FieldElem lambda_elem() const;

    std::uint64_t q() const { return field_->q(); }

private:
    RingCtx() = default;
    FieldCtxPtr field_;
    std::uint32_t n_ = 0;
    int lambda_ = -1;
};

/// Residue class modulo X^n - lambda as its length-n coefficient vector.
class RingElem {
public:
    RingElem() : ctx_(nullptr) {}
    RingElem(const RingCtx* ctx, std::vector<FieldElem> coeffs);

    static RingElem zero(const RingCtx* ctx);
    static RingElem one(const RingCtx* ctx);
    static RingElem from_scalar(const RingCtx* ctx, const FieldElem& c);
    static RingElem x_power(const RingCtx* ctx, std::uint32_t i);
    // Coefficients given as field-element indices, constant term first.
    static RingElem from_indices(const RingCtx* ctx, const std::vector<std::uint64_t>& idx);
    // Element number in [0, q^n): base-q digits are the coefficient indices.
    static RingElem from_rank(const RingCtx* ctx, std::uint64_t rank);

    const RingCtx* ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    const FieldElem& operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;
    std::size_t weight() const;

    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem operator-() const;

    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
    friend bool operator<(const RingElem& a, const RingElem& b) { return a.c_ < b.c_; }

    std::vector<std::uint64_t> to_indices() const;
    std::string to_string() const;  // comma-separated indices, constant first

private:
    const RingCtx* ctx_;
    std::vector<FieldElem> c_;
};

RingElem scalar_mul(const FieldElem& s, const RingElem& a);
// Multiplication by the class x: the (nega)cyclic coordinate shift.
RingElem mul_x(const RingElem& a);

// The reciprocal automorphism a(x) -> a(x^{-1}) of F[X]/(X^n + 1).
RingElem star(const RingElem& a);

std::optional<RingElem> invert(const RingElem& a);

struct PairElem {
    RingElem left, right;
    PairElem(RingElem l, RingElem r);
};

FieldElem inner_product(const PairElem& u, const PairElem& v);
FieldElem inner_product(const RingElem& a, const RingElem& b);

// Cyclic-to-negacyclic isomorphism a(X) -> a(-X) for odd n; weight- and
// inner-product-preserving.
RingElem eta(const RingElem& a);
PairElem eta_pair(const PairElem& u);

std::vector<FieldElem> to_word(const RingElem& a);
RingElem from_word(const RingCtx* ctx, const std::vector<FieldElem>& w);

}  // namespace negacode
