#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negacode/codes.hpp"
#include "negacode/ring.hpp"
#include "negacode/spectral.hpp"
#include "negacode/util.hpp"

namespace negacode {

// Every g with g g* = -1 generates a self-dual 2-quasi negacyclic code C_{1,g}.
bool is_selfdual_generator(const RingElem& g);

enum class WitnessProvenance {
    ConstantRoot,
    TwoPowerSubalgebra,
    BlockEnumeration,
    ExhaustiveSearch,
};

const char* provenance_name(WitnessProvenance p);

struct SelfDualWitness {
    RingElem g;
    WitnessProvenance provenance;

    SelfDualWitness(RingElem gen, WitnessProvenance prov);
};

struct BlockSolutionSet {
    std::size_t block = 0;
    bool paired = false;
    std::uint64_t count = 0;
    std::vector<RingElem> solutions;  // each s satisfies s s* = -e_hat
};

// Paired block {i, i*}: solutions are u - (u*)^{-1} over units u of the half
// field R e_i; exactly q^{d_i} - 1 of them.
BlockSolutionSet enumerate_paired_block(const SpectralData& sd, std::size_t block,
                                        std::uint64_t cap);

// Fixed block: brute-force scan of the block field; when d_i = 2 the count
// must equal q + 1.
BlockSolutionSet enumerate_fixed_block(const SpectralData& sd, std::size_t block,
                                       std::uint64_t cap);

BlockSolutionSet enumerate_block(const SpectralData& sd, std::size_t block, std::uint64_t cap);

// All of D(R,*) as block-wise sums (cap on the total count).
std::vector<RingElem> enumerate_selfdual(const SpectralData& sd, std::uint64_t cap);

// Independent oracle: scan every ring element (works without semisimplicity).
std::vector<RingElem> scan_selfdual(const RingCtxPtr& ring, std::uint64_t cap);

// Closed-form |D(A,*)| for A = F[X]/(X^{2^m} + 1):
//   (q+1)^{2^{m-1}}        if q = -1 mod 2^{m+1},
//   (q^{2^r} - 1)^{t_hat}  otherwise.
std::uint64_t count_selfdual(std::uint64_t q, std::uint64_t n);

// Existence of self-dual 2-quasi negacyclic codes of length 2n over GF(q):
// odd n iff q != -1 mod 4; even n always.
bool existence_predicate(std::uint64_t q, std::uint32_t n);

// Constructive counterpart: a verified generator, or empty exactly when the
// predicate is false.
std::optional<SelfDualWitness> construct_witness(std::uint64_t q, std::uint32_t n,
                                                 std::uint64_t cap = 1ULL << 20);

// Uniform sample from D(R,*): independent per-block draws (paired blocks via
// the unit parametrization, fixed blocks from their enumerated lists).
SelfDualWitness sample_selfdual(const SpectralData& sd, Rng& rng, std::uint64_t cap);

struct MembershipReport {
    std::uint64_t count = 0;       // |{ g in D : (a,b) in C_{1,g} }|
    std::uint64_t bound = 0;       // q^(2^r (t_hat - s_a))
    bool supports_match = true;    // supp(a) = supp(b) whenever count > 0
    bool ok = false;
};

MembershipReport membership_count_bound_check(const SpectralData& sd, const RingElem& a,
                                              const RingElem& b, std::uint64_t cap);

// Desk-scale oracle over all shift-stable dimension-n subspaces of F^{2n},
// valid also when gcd(2n, q) > 1. Returns the first self-dual code in
// canonical reduced-echelon enumeration order.
std::optional<QuasiCode> exhaustive_selfdual_search(std::uint64_t q, std::uint32_t n,
                                                    std::uint64_t cap);

// Number of dimension-n subspaces of F^{2n} (the enumeration cost of the
// oracle above); SizeExceeded if it does not fit in 64 bits.
std::uint64_t subspace_count(std::uint64_t q, std::uint32_t n);

}  // namespace negacode
