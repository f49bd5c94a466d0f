#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "negacode/error.hpp"

namespace negacode {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Default cardinality cap for user-constructed fields. Derived splitting
// fields get a larger cap (kDerivedFieldBound); nothing may exceed
// kMaxCardinality so that |F| and |F|-1 stay exact in 64 bits.
inline constexpr std::uint64_t kDefaultFieldBound = 1ULL << 20;
inline constexpr std::uint64_t kDerivedFieldBound = 1ULL << 48;
inline constexpr std::uint64_t kMaxCardinality = 1ULL << 62;

/// Element of GF(p^k), stored on the polynomial basis of its context.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr) {}
    FieldElem(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem operator-() const;

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Lexicographic on coefficient vectors (constant coordinate first).
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.c_ < b.c_; }

private:
    friend class FieldCtx;
    const FieldCtx* ctx_;
    std::vector<std::uint32_t> c_;  // length k, entries in [0, p)
};

/// Immutable descriptor of GF(p^k). Contexts are interned and pinned for the
/// lifetime of the process, so elements can carry plain pointers.
class FieldCtx {
public:
    // Deterministic: the same (p, k, seed) always yields the same modulus.
    static FieldCtxPtr make(std::uint64_t p, std::uint32_t k, std::uint64_t seed = 0,
                            std::uint64_t bound = kDefaultFieldBound);

    std::uint64_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    // Monic irreducible modulus, length k+1, constant term first. Empty for k = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem minus_one() const;
    // Scalar v mod p as a constant element.
    FieldElem from_int(std::uint64_t v) const;
    // Canonical index encoding: idx = sum c_i p^i, 0 <= idx < q.
    FieldElem from_index(std::uint64_t idx) const;
    std::uint64_t to_index(const FieldElem& a) const;

    // Text form "p^k" or "p^k/c0,c1,...,ck".
    std::string to_string() const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;

private:
    FieldCtx() = default;
    std::uint64_t p_ = 0;
    std::uint32_t k_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

FieldElem inv(const FieldElem& a);
FieldElem pow(const FieldElem& a, std::uint64_t e);
std::uint64_t multiplicative_order(const FieldElem& a);

// A root of X^2 = -1 when one exists: always for even q, exactly when
// 4 | q-1 for odd q.
std::optional<FieldElem> sqrt_minus_one(const FieldCtx& ctx);

/// Extension E of a base field containing a primitive 2n-th root of unity xi
/// with xi^n = -1, together with the base embedding and its partial inverse.
struct SplittingField {
    FieldCtxPtr base;
    FieldCtxPtr ext;
    std::uint32_t degree = 1;  // [E : base]
    FieldElem xi;
    std::vector<FieldElem> gen_image_pows;  // images in E of y^0..y^{k-1}, y = base generator

    FieldElem embed(const FieldElem& a) const;
    // Defined exactly on the image of the base field.
    std::optional<FieldElem> descend(const FieldElem& c) const;
};

SplittingField splitting_field_with_root(const FieldCtxPtr& base, std::uint64_t n,
                                         std::uint64_t bound = kDerivedFieldBound);

}  // namespace negacode
