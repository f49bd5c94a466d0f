#include "negacode/selfdual.hpp"

#include <algorithm>
#include <bit>

#include "negacode/cosets.hpp"
#include "negacode/error.hpp"

namespace negacode {

bool is_selfdual_generator(const RingElem& g) {
    require(g.ctx()->lambda() == -1, Errc::WrongSign, "needs the negacyclic ring");
    const RingCtx* ctx = g.ctx();
    RingElem minus_one = -RingElem::one(ctx);
    return g * star(g) == minus_one;
}

const char* provenance_name(WitnessProvenance p) {
    switch (p) {
        case WitnessProvenance::ConstantRoot: return "constant-root";
        case WitnessProvenance::TwoPowerSubalgebra: return "two-power-subalgebra";
        case WitnessProvenance::BlockEnumeration: return "block-enumeration";
        case WitnessProvenance::ExhaustiveSearch: return "exhaustive-search";
    }
    return "unknown";
}

SelfDualWitness::SelfDualWitness(RingElem gen, WitnessProvenance prov)
    : g(std::move(gen)), provenance(prov) {
    internal_check(is_selfdual_generator(g), "witness satisfies g g* = -1");
}

namespace {

// Basis of the half ideal R e_i and iteration over its elements by rank.
struct BlockField {
    const RingCtx* ring;
    RingElem identity;  // the block's idempotent
    Matrix basis;       // RREF rows (length n) spanning the ideal
    std::uint64_t size; // q^dim

    BlockField(const SpectralData& sd, const RingElem& idem)
        : ring(sd.ring.get()), identity(idem), basis(ideal_basis(idem)) {
        size = 1;
        std::uint64_t q = ring->q();
        for (std::size_t i = 0; i < basis.size(); ++i)
            size = checked_mul(size, q, "block field size");
    }

    RingElem element(std::uint64_t rank) const {
        const FieldCtx* f = ring->field().get();
        std::uint64_t q = f->q();
        RingElem acc = RingElem::zero(ring);
        for (std::size_t i = 0; i < basis.size() && rank; ++i) {
            std::uint64_t d = rank % q;
            rank /= q;
            if (d == 0) continue;
            acc += scalar_mul(f->from_index(d), RingElem(ring, basis[i]));
        }
        return acc;
    }
};

RingElem pow_in_block(const RingElem& base, std::uint64_t e, const RingElem& identity) {
    RingElem r = identity;
    RingElem b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

// Inverse within the block field with the given identity: u^(|block|-2).
RingElem block_inverse(const RingElem& u, const RingElem& identity, std::uint64_t block_size) {
    RingElem v = pow_in_block(u, block_size - 2, identity);
    internal_check(u * v == identity, "block inverse verifies");
    return v;
}

void verify_block_solution(const RingElem& s, const RingElem& e_hat) {
    internal_check(s * star(s) == -e_hat, "block solution satisfies s s* = -e_hat");
}

// Element of full multiplicative order in a block field, by deterministic scan.
RingElem block_generator(const BlockField& bf) {
    std::uint64_t group = bf.size - 1;
    auto rad = prime_factors(group);
    rad.erase(std::unique(rad.begin(), rad.end()), rad.end());
    for (std::uint64_t rank = 1; rank < bf.size; ++rank) {
        RingElem cand = bf.element(rank);
        bool full = true;
        for (std::uint64_t r : rad) {
            if (pow_in_block(cand, group / r, bf.identity) == bf.identity) {
                full = false;
                break;
            }
        }
        if (full) return cand;
    }
    fail(Errc::Internal, "block field has no generator (unreachable)");
}

}  // namespace

BlockSolutionSet enumerate_paired_block(const SpectralData& sd, std::size_t block,
                                        std::uint64_t cap) {
    require(block < sd.blocks.size(), Errc::DomainError, "block index out of range");
    const SpectralBlock& b = sd.blocks[block];
    require(b.paired, Errc::WrongKind, "block is not a swapped pair");

    std::size_t i = b.members[0], i_star = b.members[1];
    BlockField half(sd, sd.idem[i]);
    require(half.size <= cap, Errc::CapExceeded,
            "half-block field size " + std::to_string(half.size) + " exceeds cap");
    std::uint64_t half_star_size = half.size;  // same degree on both sides

    BlockSolutionSet out;
    out.block = block;
    out.paired = true;
    for (std::uint64_t rank = 1; rank < half.size; ++rank) {
        RingElem u = half.element(rank);
        RingElem v = block_inverse(star(u), sd.idem[i_star], half_star_size);
        RingElem s = u - v;
        verify_block_solution(s, b.e_hat);
        out.solutions.push_back(std::move(s));
    }
    out.count = half.size - 1;
    internal_check(out.solutions.size() == out.count, "unit parametrization is a bijection");
    return out;
}

BlockSolutionSet enumerate_fixed_block(const SpectralData& sd, std::size_t block,
                                       std::uint64_t cap) {
    require(block < sd.blocks.size(), Errc::DomainError, "block index out of range");
    const SpectralBlock& b = sd.blocks[block];
    require(!b.paired, Errc::WrongKind, "block is not star-fixed");

    BlockField field(sd, b.e_hat);
    require(field.size <= cap, Errc::CapExceeded,
            "block field size " + std::to_string(field.size) + " exceeds cap");

    BlockSolutionSet out;
    out.block = block;
    out.paired = false;
    RingElem target = -b.e_hat;
    for (std::uint64_t rank = 0; rank < field.size; ++rank) {
        RingElem s = field.element(rank);
        if (s * star(s) == target) out.solutions.push_back(std::move(s));
    }
    out.count = out.solutions.size();
    if (b.dim == 2)
        internal_check(out.count == sd.ring->q() + 1, "quadratic fixed block has q+1 solutions");
    return out;
}

BlockSolutionSet enumerate_block(const SpectralData& sd, std::size_t block, std::uint64_t cap) {
    return sd.blocks[block].paired ? enumerate_paired_block(sd, block, cap)
                                   : enumerate_fixed_block(sd, block, cap);
}

std::vector<RingElem> enumerate_selfdual(const SpectralData& sd, std::uint64_t cap) {
    std::vector<BlockSolutionSet> sets;
    std::uint64_t total = 1;
    for (std::size_t b = 0; b < sd.blocks.size(); ++b) {
        sets.push_back(enumerate_block(sd, b, cap));
        require(sets.back().count > 0, Errc::Internal, "every block has solutions");
        total = checked_mul(total, sets.back().count, "|D|");
        require(total <= cap, Errc::CapExceeded, "|D| exceeds the enumeration cap");
    }
    std::vector<RingElem> out;
    out.reserve(total);
    std::vector<std::size_t> pick(sets.size(), 0);
    while (true) {
        RingElem g = RingElem::zero(sd.ring.get());
        for (std::size_t b = 0; b < sets.size(); ++b) g += sets[b].solutions[pick[b]];
        out.push_back(std::move(g));
        std::size_t b = 0;
        while (b < sets.size() && ++pick[b] == sets[b].solutions.size()) {
            pick[b] = 0;
            ++b;
        }
        if (b == sets.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RingElem> scan_selfdual(const RingCtxPtr& ring, std::uint64_t cap) {
    std::uint64_t q = ring->q();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < ring->n(); ++i) {
        require(total <= cap / q, Errc::CapExceeded, "ring size exceeds the scan cap");
        total *= q;
    }
    std::vector<RingElem> out;
    RingElem minus_one = -RingElem::one(ring.get());
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        RingElem g = RingElem::from_rank(ring.get(), rank);
        if (g * star(g) == minus_one) out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t count_selfdual(std::uint64_t q, std::uint64_t n) {
    require(q >= 3 && q % 2 == 1, Errc::BadShape, "closed-form count needs odd q >= 3");
    require(n >= 2 && (n & (n - 1)) == 0, Errc::BadShape,
            "closed-form count needs n = 2^m (use enumerate for other lengths)");
    std::uint64_t two_n = 2 * n;
    if (q % two_n == two_n - 1) {
        // q = -1 mod 2^(m+1): 2^(m-1) quadratic blocks, q+1 solutions each.
        return checked_pow(q + 1, n / 2, "|D|");
    }
    std::uint64_t ord = unit_order(two_n, q % two_n);
    internal_check((ord & (ord - 1)) == 0, "ord(q) is a 2-power");
    std::uint64_t t_hat = (n / ord) / 2;
    internal_check(t_hat >= 1, "at least one paired block");
    std::uint64_t base = checked_pow(q, ord, "q^(2^r)") - 1;
    return checked_pow(base, t_hat, "|D|");
}

bool existence_predicate(std::uint64_t q, std::uint32_t n) {
    require(q >= 2, Errc::DomainError, "q must be >= 2");
    if (n % 2 == 0) return true;
    return q % 4 != 3;
}

namespace {

// q = p^k for prime p, or CompositeCharacteristic.
std::pair<std::uint64_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    require(q >= 2, Errc::DomainError, "q must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    require(v == 1, Errc::CompositeCharacteristic,
            std::to_string(q) + " is not a prime power");
    return {p, k};
}

}  // namespace

std::optional<SelfDualWitness> construct_witness(std::uint64_t q, std::uint32_t n,
                                                 std::uint64_t cap) {
    require(n >= 2, Errc::DomainError, "n must be >= 2");
    auto [p, k] = split_prime_power(q);
    FieldCtxPtr f = FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
    RingCtxPtr ring = RingCtx::make(f, n, -1);

    if (q % 4 != 3) {
        // q even or 4 | q-1: a scalar square root of -1 works for every n.
        auto alpha = sqrt_minus_one(*f);
        internal_check(alpha.has_value(), "sqrt(-1) exists when q != -1 mod 4");
        return SelfDualWitness(RingElem::from_scalar(ring.get(), *alpha),
                               WitnessProvenance::ConstantRoot);
    }
    if (n % 2 == 1) return std::nullopt;  // no self-dual code exists at odd n, q = -1 mod 4

    // Solve inside the star-stable subalgebra generated by y = x^(n'), which
    // is the negacyclic ring of 2-power length 2^m; this stays semisimple
    // even when gcd(2n, q) > 1.
    std::uint32_t m = static_cast<std::uint32_t>(std::countr_zero(n));
    std::uint32_t n_prime = n >> m;
    std::uint32_t n0 = 1u << m;
    RingCtxPtr sub = RingCtx::make(f, n0, -1);
    SpectralData sd = spectral_decomposition(sub);

    RingElem g0 = RingElem::zero(sub.get());
    for (std::size_t bi = 0; bi < sd.blocks.size(); ++bi) {
        const SpectralBlock& b = sd.blocks[bi];
        std::uint64_t block_size = 1;
        bool small = true;
        for (std::size_t i = 0; i < (b.paired ? b.dim / 2 : b.dim); ++i) {
            if (block_size > cap / q) {
                small = false;
                break;
            }
            block_size *= q;
        }
        if (small && block_size <= cap) {
            auto sols = enumerate_block(sd, bi, cap);
            RingElem best = *std::min_element(sols.solutions.begin(), sols.solutions.end());
            g0 += best;
        } else if (b.paired) {
            // Canonical solution e_i - e_{i*}: (e_i - e_{i*})(e_{i*} - e_i) = -e_hat.
            RingElem s = sd.idem[b.members[0]] - sd.idem[b.members[1]];
            verify_block_solution(s, b.e_hat);
            g0 += s;
        } else {
            // Fixed quadratic block too large to scan: gamma^((q-1)/2) for a
            // block-field generator gamma has norm -1 under the order-2
            // restriction of star.
            internal_check(b.dim == 2, "oversized fixed blocks are quadratic here");
            BlockField bf(sd, b.e_hat);
            RingElem gamma = block_generator(bf);
            RingElem s = pow_in_block(gamma, (q - 1) / 2, bf.identity);
            verify_block_solution(s, b.e_hat);
            g0 += s;
        }
    }
    internal_check(g0 * star(g0) == -RingElem::one(sub.get()), "subalgebra witness verifies");

    // Lift through y = x^(n'): coefficient j of g0 lands at position j*n'.
    std::vector<FieldElem> lifted(n, f->zero());
    for (std::uint32_t j = 0; j < n0; ++j) lifted[j * n_prime] = g0[j];
    return SelfDualWitness(RingElem(ring.get(), std::move(lifted)),
                           WitnessProvenance::TwoPowerSubalgebra);
}

SelfDualWitness sample_selfdual(const SpectralData& sd, Rng& rng, std::uint64_t cap) {
    RingElem g = RingElem::zero(sd.ring.get());
    for (std::size_t bi = 0; bi < sd.blocks.size(); ++bi) {
        const SpectralBlock& b = sd.blocks[bi];
        if (b.paired) {
            BlockField half(sd, sd.idem[b.members[0]]);
            std::uint64_t rank = 1 + rng.below(half.size - 1);
            RingElem u = half.element(rank);
            RingElem v = block_inverse(star(u), sd.idem[b.members[1]], half.size);
            RingElem s = u - v;
            verify_block_solution(s, b.e_hat);
            g += s;
        } else {
            auto sols = enumerate_fixed_block(sd, bi, cap);
            g += sols.solutions[rng.below(sols.count)];
        }
    }
    return SelfDualWitness(std::move(g), WitnessProvenance::BlockEnumeration);
}

MembershipReport membership_count_bound_check(const SpectralData& sd, const RingElem& a,
                                              const RingElem& b, std::uint64_t cap) {
    require(a.ctx() == sd.ring.get() && b.ctx() == sd.ring.get(), Errc::ContextMismatch,
            "pair elements from another ring");
    std::uint32_t n = sd.ring->n();
    require((n & (n - 1)) == 0, Errc::BadShape, "support bound needs n = 2^m");
    for (const auto& blk : sd.blocks)
        require(blk.paired, Errc::BadShape, "support bound needs all blocks paired (m >= mu_q)");

    std::uint64_t q = sd.ring->q();
    std::uint64_t ord = sd.orbits.ord_q;  // 2^r
    std::size_t t_hat = sd.blocks.size();
    auto supp_a = block_support(a, sd);

    MembershipReport rep;
    rep.bound = checked_pow(q, ord * (t_hat - supp_a.size()), "support bound");

    // (a,b) in C_{1,g}  <=>  b = a g.
    auto d_set = enumerate_selfdual(sd, cap);
    for (const auto& g : d_set)
        if (a * g == b) ++rep.count;

    if (rep.count > 0) {
        rep.supports_match = (supp_a == block_support(b, sd));
        internal_check(rep.supports_match, "nonempty membership set forces equal supports");
    }
    rep.ok = rep.count <= rep.bound && rep.supports_match;
    internal_check(rep.count <= rep.bound, "membership count within the support bound");
    return rep;
}

std::uint64_t subspace_count(std::uint64_t q, std::uint32_t n) {
    // Gaussian binomial [2n, n]_q via integer prefix products.
    unsigned __int128 res = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 127;
    for (std::uint32_t i = 1; i <= n; ++i) {
        unsigned __int128 num = 1;
        for (std::uint32_t j = 0; j < n + i; ++j) {
            num *= q;
            require(num < limit / (q + 1), Errc::SizeExceeded, "subspace count overflow");
        }
        unsigned __int128 den = 1;
        for (std::uint32_t j = 0; j < i; ++j) den *= q;
        res = res * (num - 1) / (den - 1);
        require(res < limit / 2, Errc::SizeExceeded, "subspace count overflow");
    }
    require(res <= ~0ULL, Errc::SizeExceeded, "subspace count exceeds 64 bits");
    return static_cast<std::uint64_t>(res);
}

std::optional<QuasiCode> exhaustive_selfdual_search(std::uint64_t q, std::uint32_t n,
                                                    std::uint64_t cap) {
    require(n >= 2, Errc::DomainError, "n must be >= 2");
    std::uint64_t total = subspace_count(q, n);
    require(total <= cap, Errc::CapExceeded,
            std::to_string(total) + " subspaces exceed cap " + std::to_string(cap));
    auto [p, k] = split_prime_power(q);
    FieldCtxPtr f = FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
    RingCtxPtr ring = RingCtx::make(f, n, -1);
    std::size_t width = 2 * n;

    // Pivot-column subsets in lexicographic order.
    std::vector<std::uint32_t> pivots(n);
    for (std::uint32_t i = 0; i < n; ++i) pivots[i] = i;
    while (true) {
        std::vector<char> is_pivot(width, 0);
        for (auto pcol : pivots) is_pivot[pcol] = 1;
        // Free positions of the canonical reduced echelon form, row-major.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t r = 0; r < n; ++r)
            for (std::uint32_t c = pivots[r] + 1; c < width; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        Matrix mat(n, Word(width, f->zero()));
        for (std::uint32_t r = 0; r < n; ++r) mat[r][pivots[r]] = f->one();

        std::vector<std::uint64_t> digits(free_pos.size(), 0);
        while (true) {
            bool self_dual = true;
            for (std::size_t i = 0; i < n && self_dual; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (!dot(mat[i], mat[j]).is_zero()) {
                        self_dual = false;
                        break;
                    }
            if (self_dual && is_shift_stable(ring.get(), mat)) {
                QuasiCode c;
                c.ctx = ring;
                c.rows = mat;
                return c;
            }
            // odometer over free entries
            std::size_t pos = 0;
            while (pos < digits.size()) {
                if (++digits[pos] < q) {
                    auto [r, col] = free_pos[pos];
                    mat[r][col] = f->from_index(digits[pos]);
                    break;
                }
                digits[pos] = 0;
                auto [r, col] = free_pos[pos];
                mat[r][col] = f->zero();
                ++pos;
            }
            if (pos == digits.size()) break;
        }

        // next pivot subset (lexicographic)
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && pivots[i] == width - n + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (std::size_t t = i + 1; t < n; ++t) pivots[t] = pivots[t - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace negacode
