#pragma once

#include <cstdint>
#include <vector>

#include "negacode/cosets.hpp"
#include "negacode/linalg.hpp"
#include "negacode/poly.hpp"
#include "negacode/ring.hpp"

namespace negacode {

/// One minimal star-stable ideal: a single self-paired primitive idempotent,
/// or a swapped pair merged into e_hat = e_i + e_{i*}.
struct SpectralBlock {
    std::vector<std::size_t> members;  // one or two orbit indices, ascending
    RingElem e_hat;
    bool paired = false;
    std::size_t dim = 0;  // dim of R*e_hat over F
};

/// Semisimple structure of F[X]/(X^n + 1): irreducible factors from the
/// q-orbits, primitive idempotents, and the star action on them.
struct SpectralData {
    RingCtxPtr ring;
    OrbitTable orbits;
    SplittingField splitting;
    std::vector<Poly> psi;       // irreducible factors, orbit order
    std::vector<Poly> psi_hat;   // cofactors (X^n+1)/psi_i
    std::vector<RingElem> idem;  // primitive idempotents e_i
    std::vector<std::size_t> star_perm;  // star(e_i) = e_{star_perm[i]}
    std::vector<SpectralBlock> blocks;

    std::size_t t() const { return psi.size(); }
    std::size_t block_of(std::size_t orbit_index) const;
};

// Stage 1: orbits, splitting field, factors (verified to multiply back to
// X^n + 1 and to be irreducible over the base field).
SpectralData factor_modulus(const RingCtxPtr& ring);

// Stage 2: primitive idempotents via cofactor inverses; all orthogonality,
// sum and dimension identities asserted before returning.
void primitive_idempotents(SpectralData& sd);

// Stage 3: star permutation of the idempotents (computed by evaluation, then
// checked against the orbit-negation pairing) and the star-stable blocks.
void star_stable_blocks(SpectralData& sd);

SpectralData spectral_decomposition(const RingCtxPtr& ring);

// Components a * e_hat_i across blocks; their sum is a.
std::vector<RingElem> block_components(const RingElem& a, const SpectralData& sd);

// Indices of blocks where a has a nonzero component.
std::vector<std::size_t> block_support(const RingElem& a, const SpectralData& sd);

// Basis (RREF words of length n) of the ideal generated by g.
Matrix ideal_basis(const RingElem& g);

}  // namespace negacode
