#include "negacode/cosets.hpp"

#include <algorithm>

#include "negacode/util.hpp"

namespace negacode {

std::size_t OrbitTable::orbit_of(std::uint32_t residue) const {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (std::binary_search(orbits[i].begin(), orbits[i].end(), residue)) return i;
    }
    fail(Errc::DomainError, "residue " + std::to_string(residue) + " not an odd residue mod 2n");
}

std::uint64_t unit_order(std::uint64_t modulus, std::uint64_t a) {
    require(modulus >= 2, Errc::DomainError, "modulus must be >= 2");
    a %= modulus;
    require(gcd_u64(a, modulus) == 1, Errc::NotAUnit,
            std::to_string(a) + " is not a unit mod " + std::to_string(modulus));
    std::uint64_t d = 1;
    unsigned __int128 v = a;
    while (v != 1) {
        v = v * a % modulus;
        ++d;
    }
    return d;
}

OrbitTable q_orbits(std::uint32_t n, std::uint64_t q) {
    require(n >= 1, Errc::DomainError, "n must be >= 1");
    std::uint64_t two_n = 2ULL * n;
    require(gcd_u64(two_n, q) == 1, Errc::NotSemisimple,
            "gcd(2n, q) != 1 for n=" + std::to_string(n) + ", q=" + std::to_string(q));
    OrbitTable t;
    t.n = n;
    t.q = q;
    t.ord_q = unit_order(two_n, q % two_n);

    std::vector<char> seen(two_n, 0);
    for (std::uint32_t v = 1; v < two_n; v += 2) {
        if (seen[v]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint64_t w = v;
        do {
            orbit.push_back(static_cast<std::uint32_t>(w));
            seen[w] = 1;
            w = w * (q % two_n) % two_n;
        } while (w != v);
        std::sort(orbit.begin(), orbit.end());
        t.orbits.push_back(std::move(orbit));
    }
    // Already ordered by minimal element: the scan visits minima ascending.

    t.pairing.resize(t.orbits.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < t.orbits.size(); ++i) {
        total += t.orbits[i].size();
        internal_check(t.ord_q % t.orbits[i].size() == 0, "orbit size divides ord(q)");
        std::uint32_t negated = static_cast<std::uint32_t>(two_n - t.orbits[i][0]);
        t.pairing[i] = t.orbit_of(negated);
    }
    internal_check(total == n, "orbits partition the odd residues");
    for (std::size_t i = 0; i < t.pairing.size(); ++i)
        internal_check(t.pairing[t.pairing[i]] == i, "negation pairing is an involution");

    // Structural laws for the pairing, cheap enough to keep always on:
    // -1 in <q> mod 2n forces every orbit self-paired; for n a power of two
    // the converse dichotomy holds (no fixed point at all).
    bool minus_one_in_q = false;
    {
        unsigned __int128 w = 1;
        for (std::uint64_t d = 0; d < t.ord_q; ++d) {
            if (w == two_n - 1) minus_one_in_q = true;
            w = w * (q % two_n) % two_n;
        }
    }
    if (minus_one_in_q) {
        for (std::size_t i = 0; i < t.pairing.size(); ++i)
            internal_check(t.pairing[i] == i, "-1 in <q> forces self-paired orbits");
    }
    if ((n & (n - 1)) == 0 && n >= 2) {
        for (const auto& orbit : t.orbits)
            internal_check(orbit.size() == t.ord_q, "2-power case: all orbits have size ord(q)");
        if (!minus_one_in_q) {
            for (std::size_t i = 0; i < t.pairing.size(); ++i)
                internal_check(t.pairing[i] != i, "2-power case: pairing is fixed-point free");
        }
    }
    return t;
}

std::uint32_t mu_q(std::uint64_t q) {
    require(q % 2 == 1, Errc::EvenInput, "mu_q needs odd q");
    require(q >= 3, Errc::DomainError, "mu_q needs q >= 3");
    std::uint32_t mu = 2;
    while (mu + 1 < 63) {
        std::uint64_t mod = 1ULL << (mu + 1);
        std::uint64_t r = q % mod;
        if (r != 1 && r != mod - 1) break;
        ++mu;
    }
    return mu;
}

std::uint64_t ord_two_power(std::uint64_t q, std::uint32_t ell) {
    require(q % 2 == 1, Errc::EvenInput, "ord_two_power needs odd q");
    require(ell >= 1 && ell < 63, Errc::DomainError, "ell out of range");
    std::uint64_t mod = 1ULL << ell;
    std::uint64_t d = unit_order(mod, q % mod);
    if (q >= 3) {
        std::uint32_t mu = mu_q(q);
        if (ell > mu)
            internal_check(d == (1ULL << (ell - mu)), "order formula 2^(ell-mu) in Z_{2^ell}^x");
    }
    return d;
}

bool minus_one_in_q_subgroup(std::uint64_t q, std::uint32_t ell) {
    require(q % 2 == 1, Errc::EvenInput, "needs odd q");
    require(ell >= 1 && ell < 63, Errc::DomainError, "ell out of range");
    std::uint64_t mod = 1ULL << ell;
    if (mod == 2) return true;  // -1 = 1 mod 2
    std::uint64_t target = mod - 1;
    std::uint64_t w = 1, qm = q % mod;
    bool found = false;
    std::uint64_t d = unit_order(mod, qm);
    for (std::uint64_t i = 0; i < d; ++i) {
        if (w == target) found = true;
        w = static_cast<std::uint64_t>(static_cast<unsigned __int128>(w) * qm % mod);
    }
    // Membership is equivalent to q itself being -1 mod 2^ell.
    internal_check(found == (qm == target), "-1 in <q> iff q = -1 mod 2^ell");
    return found;
}

}  // namespace negacode
