#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "negacode/error.hpp"

namespace negacode {

// Exact rational with small components; used wherever a threshold must not
// pick up floating-point fuzz (weight fractions, entropy domain checks).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// a/b <= c/d with positive denominators, no overflow for desk-scale values.
bool rat_le(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

Rational parse_rational(const std::string& text);

// Deterministic RNG with portable bounded sampling (uniform via rejection).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

// Worker count: NEGACODE_THREADS if set, else 1.
unsigned worker_count();

// Splits [0, total) into contiguous chunks; fn(chunk_index, begin, end).
// Runs inline when a single worker is configured.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// a*b, a+b with overflow guard; throws SizeExceeded when the result does not fit.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what);

// Prime factorization by trial division then Pollard rho; exact for all u64.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

}  // namespace negacode
