#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

/// Dense univariate polynomial over one FieldCtx, normalized (no trailing
/// zeros; the zero polynomial has an empty coefficient vector).
class Poly {
public:
    Poly() : ctx_(nullptr) {}
    explicit Poly(const FieldCtx* ctx) : ctx_(ctx) {}
    Poly(const FieldCtx* ctx, std::vector<FieldElem> coeffs);

    static Poly monomial(const FieldCtx* ctx, std::uint32_t deg, const FieldElem& c);
    static Poly x(const FieldCtx* ctx);
    static Poly constant(const FieldElem& c);

    const FieldCtx* ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const FieldElem& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff_or_zero(std::size_t i) const;
    const FieldElem& lead() const { return c_.back(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;

private:
    void normalize();
    const FieldCtx* ctx_;
    std::vector<FieldElem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly pmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic

struct PolyExtGcd {
    Poly g, u, v;  // g = u*a + v*b, g monic
};
PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
FieldElem eval(const Poly& f, const FieldElem& at);

// Rabin test: x^(Q^d) == x mod f and gcd(x^(Q^(d/r)) - x, f) = 1 for prime r | d.
bool is_irreducible(const Poly& f);

// Deterministic seeded search over monic polynomials of the given degree,
// low coefficients enumerated as base-q digits of (seed + j).
Poly find_irreducible(const FieldCtx* ctx, std::uint32_t degree, std::uint64_t seed);

}  // namespace negacode
