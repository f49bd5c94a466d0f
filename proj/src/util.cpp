#include "negacode/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace negacode {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    require(d != 0, Errc::DomainError, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool rat_le(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    require(b > 0 && d > 0, Errc::DomainError, "rat_le needs positive denominators");
    return static_cast<__int128>(a) * d <= static_cast<__int128>(c) * b;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        fail(Errc::UsageError, "cannot parse rational '" + text + "' (expected p/r)");
    }
}

// xoshiro256** — fixed algorithm so seeded runs are reproducible everywhere.
static inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

Rng::Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed
    std::uint64_t z = seed;
    for (auto& w : s_) {
        z += 0x9e3779b97f4a7c15ULL;
        std::uint64_t t = z;
        t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
        t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
        w = t ^ (t >> 31);
    }
}

std::uint64_t Rng::next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    require(bound > 0, Errc::DomainError, "Rng::below(0)");
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t v;
    do {
        v = next() & mask;
    } while (v >= bound);
    return v;
}

unsigned worker_count() {
    if (const char* env = std::getenv("NEGACODE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return 1;
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || total < 2 * workers) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = w * chunk;
        std::uint64_t e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        fail(Errc::SizeExceeded, std::string(what) + " overflows 64 bits");
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = checked_mul(r, base, what);
        exp >>= 1;
        if (exp) base = checked_mul(base, base, what);
    }
    return r;
}

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    // Trial division below 2^10 settles everything under 2^20 outright.
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 11; d < 1024 && d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    if (n < 1024 * 1024) return true;
    // Deterministic strong-probable-prime battery, valid below 2^64.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

static std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = gcd_u64(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

static void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d < 4096 && d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
        case Errc::SizeExceeded: return "SizeExceeded";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::NotSemisimple: return "NotSemisimple";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::EvenInput: return "EvenInput";
        case Errc::WrongSign: return "WrongSign";
        case Errc::EvenLength: return "EvenLength";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::WrongKind: return "WrongKind";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::BadShape: return "BadShape";
        case Errc::DomainError: return "DomainError";
        case Errc::DeltaTooLarge: return "DeltaTooLarge";
        case Errc::InternalCoefficientLeak: return "InternalCoefficientLeak";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::EmptyCode: return "EmptyCode";
        case Errc::UsageError: return "UsageError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace negacode
