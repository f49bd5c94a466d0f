#pragma once

#include <cstdint>
#include <vector>

#include "negacode/error.hpp"

namespace negacode {

/// Orbits of multiplication by q on the odd residues {1, 3, ..., 2n-1} of
/// Z_2n, with the negation pairing between orbits.
struct OrbitTable {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t ord_q = 0;  // order of q in Z_2n^x
    // Each orbit sorted ascending; orbits ordered by minimal element.
    std::vector<std::vector<std::uint32_t>> orbits;
    // pairing[i] = index of the orbit equal to -orbits[i]; an involution.
    std::vector<std::size_t> pairing;

    std::size_t size() const { return orbits.size(); }
    std::size_t orbit_of(std::uint32_t residue) const;
};

// Least d >= 1 with a^d = 1 mod modulus; NotAUnit when gcd(a, modulus) > 1.
std::uint64_t unit_order(std::uint64_t modulus, std::uint64_t a);

OrbitTable q_orbits(std::uint32_t n, std::uint64_t q);

// Largest l >= 2 with q = +-1 mod 2^l (q odd, q >= 3). Controls orders in
// the 2-power unit groups: ord_{Z_{2^l}^x}(q) = 2^(l - mu) for l > mu.
std::uint32_t mu_q(std::uint64_t q);

// Order of q in Z_{2^ell}^x, cross-checked against the closed form above.
std::uint64_t ord_two_power(std::uint64_t q, std::uint32_t ell);

// Whether -1 lies in <q> inside Z_{2^ell}^x (iff q = -1 mod 2^ell).
bool minus_one_in_q_subgroup(std::uint64_t q, std::uint32_t ell);

}  // namespace negacode
