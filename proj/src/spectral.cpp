#include "negacode/spectral.hpp"

#include <algorithm>

#include "negacode/util.hpp"

namespace negacode {

std::size_t SpectralData::block_of(std::size_t orbit_index) const {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& m = blocks[b].members;
        if (std::find(m.begin(), m.end(), orbit_index) != m.end()) return b;
    }
    fail(Errc::DomainError, "orbit index out of range");
}

SpectralData factor_modulus(const RingCtxPtr& ring) {
    require(ring->lambda() == -1, Errc::WrongSign, "spectral decomposition is for X^n + 1");
    const FieldCtxPtr& base = ring->field();
    std::uint32_t n = ring->n();
    require(gcd_u64(2ULL * n, base->q()) == 1, Errc::NotSemisimple,
            "X^n + 1 has repeated roots when gcd(2n, q) > 1");

    SpectralData sd;
    sd.ring = ring;
    sd.orbits = q_orbits(n, base->q());
    sd.splitting = splitting_field_with_root(base, n);

    const FieldCtx* ext = sd.splitting.ext.get();
    const FieldCtx* bf = base.get();
    std::vector<FieldElem> xi_pow(2 * n, ext->one());
    for (std::uint32_t j = 1; j < 2 * n; ++j) xi_pow[j] = xi_pow[j - 1] * sd.splitting.xi;

    for (const auto& orbit : sd.orbits.orbits) {
        Poly f = Poly::constant(ext->one());
        for (std::uint32_t j : orbit) {
            Poly lin(ext, {-xi_pow[j], ext->one()});
            f = f * lin;
        }
        // Coefficients must be Frobenius-fixed, then descend to the base field.
        std::vector<FieldElem> down(f.degree() + 1, bf->zero());
        for (int i = 0; i <= f.degree(); ++i) {
            FieldElem c = f[i];
            require(pow(c, bf->q()) == c, Errc::InternalCoefficientLeak,
                    "factor coefficient is not fixed by the base Frobenius");
            auto dc = sd.splitting.descend(c);
            require(dc.has_value(), Errc::InternalCoefficientLeak,
                    "factor coefficient does not descend to the base field");
            down[i] = *dc;
        }
        Poly psi(bf, std::move(down));
        internal_check(psi.degree() == static_cast<int>(orbit.size()),
                       "deg psi_i equals the orbit size");
        internal_check(is_irreducible(psi), "psi_i irreducible over the base field");
        sd.psi.push_back(std::move(psi));
    }

    // Product check against X^n + 1.
    Poly prod = Poly::constant(bf->one());
    for (const auto& f : sd.psi) prod = prod * f;
    std::vector<FieldElem> mod_c(n + 1, bf->zero());
    mod_c[0] = bf->one();
    mod_c[n] = bf->one();
    internal_check(prod == Poly(bf, std::move(mod_c)), "product of factors equals X^n + 1");
    return sd;
}

namespace {

RingElem poly_to_ring(const RingCtx* ctx, const Poly& f) {
    std::vector<FieldElem> c(ctx->n(), ctx->field()->zero());
    internal_check(f.degree() < static_cast<int>(ctx->n()), "polynomial already reduced");
    for (int i = 0; i <= f.degree(); ++i) c[i] = f[i];
    return RingElem(ctx, std::move(c));
}

}  // namespace

void primitive_idempotents(SpectralData& sd) {
    internal_check(!sd.psi.empty(), "factors computed first");
    const RingCtx* ring = sd.ring.get();
    const FieldCtx* bf = ring->field().get();
    std::uint32_t n = ring->n();
    std::vector<FieldElem> mod_c(n + 1, bf->zero());
    mod_c[0] = bf->one();
    mod_c[n] = bf->one();
    Poly modulus(bf, std::move(mod_c));

    sd.psi_hat.clear();
    sd.idem.clear();
    for (const auto& psi : sd.psi) {
        auto [hat, rem] = divmod(modulus, psi);
        internal_check(rem.is_zero(), "psi_i divides X^n + 1");
        // e_i = u * psi_hat with u = psi_hat^{-1} mod psi_i.
        auto eg = poly_ext_gcd(pmod(hat, psi), psi);
        internal_check(eg.g.degree() == 0, "cofactor invertible modulo its factor");
        Poly e = pmod(eg.u * hat, modulus);
        sd.psi_hat.push_back(hat);
        sd.idem.push_back(poly_to_ring(ring, e));
    }

    RingElem sum = RingElem::zero(ring);
    for (std::size_t i = 0; i < sd.idem.size(); ++i) {
        sum += sd.idem[i];
        for (std::size_t j = i; j < sd.idem.size(); ++j) {
            RingElem prod = sd.idem[i] * sd.idem[j];
            if (i == j)
                internal_check(prod == sd.idem[i], "e_i^2 = e_i");
            else
                internal_check(prod.is_zero(), "e_i e_j = 0 for i != j");
        }
        internal_check(rank_of(ideal_basis(sd.idem[i])) == sd.orbits.orbits[i].size(),
                       "dim R e_i equals deg psi_i");
    }
    internal_check(sum == RingElem::one(ring), "sum of primitive idempotents is 1");
}

void star_stable_blocks(SpectralData& sd) {
    internal_check(!sd.idem.empty(), "idempotents computed first");
    std::size_t t = sd.idem.size();
    sd.star_perm.assign(t, t);
    for (std::size_t i = 0; i < t; ++i) {
        RingElem si = star(sd.idem[i]);
        for (std::size_t j = 0; j < t; ++j) {
            if (si == sd.idem[j]) {
                sd.star_perm[i] = j;
                break;
            }
        }
        internal_check(sd.star_perm[i] < t, "star permutes the primitive idempotents");
    }
    // Independent route: the star permutation must be the negation pairing.
    internal_check(sd.star_perm == sd.orbits.pairing,
                   "star permutation matches the orbit-negation pairing");

    sd.blocks.clear();
    std::vector<char> used(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        if (used[i]) continue;
        SpectralBlock b;
        std::size_t j = sd.star_perm[i];
        if (j == i) {
            b.members = {i};
            b.e_hat = sd.idem[i];
            b.paired = false;
            b.dim = sd.orbits.orbits[i].size();
            used[i] = 1;
        } else {
            b.members = {std::min(i, j), std::max(i, j)};
            b.e_hat = sd.idem[i] + sd.idem[j];
            b.paired = true;
            b.dim = sd.orbits.orbits[i].size() + sd.orbits.orbits[j].size();
            used[i] = used[j] = 1;
            internal_check(star(b.e_hat) == b.e_hat, "paired block idempotent is star-stable");
        }
        sd.blocks.push_back(std::move(b));
    }

    // Structural counts in the 2-power case.
    std::uint32_t n = sd.ring->n();
    if ((n & (n - 1)) == 0) {
        std::uint32_t m = 0;
        while ((1u << m) < n) ++m;
        std::uint64_t q = sd.ring->q();
        bool q_is_minus_one = (q % (2ULL * n)) == 2ULL * n - 1;
        if (!q_is_minus_one) {
            std::uint64_t ord = sd.orbits.ord_q;
            internal_check((ord & (ord - 1)) == 0, "ord(q) is a 2-power");
            std::uint32_t r = 0;
            while ((1ULL << r) < ord) ++r;
            internal_check(m >= r + 1, "ord(q) divides 2^m");
            internal_check(sd.blocks.size() == (1ULL << (m - r - 1)),
                           "t_hat = 2^(m-r-1) star-stable blocks");
            for (const auto& b : sd.blocks) {
                internal_check(b.paired, "all blocks paired when q != -1 mod 2^(m+1)");
                internal_check(b.dim == (1ULL << (r + 1)), "block dimension 2^(r+1)");
            }
            if (q >= 3 && m >= mu_q(q)) {
                std::uint32_t mu = mu_q(q);
                internal_check(r == m - mu + 1, "r = m - mu + 1 for m >= mu");
                internal_check(sd.blocks.size() == (1ULL << (mu - 2)), "t_hat = 2^(mu-2)");
            }
        } else {
            for (const auto& b : sd.blocks)
                internal_check(!b.paired, "all blocks fixed when q = -1 mod 2^(m+1)");
        }
    }
}

SpectralData spectral_decomposition(const RingCtxPtr& ring) {
    SpectralData sd = factor_modulus(ring);
    primitive_idempotents(sd);
    star_stable_blocks(sd);
    return sd;
}

std::vector<RingElem> block_components(const RingElem& a, const SpectralData& sd) {
    require(a.ctx() == sd.ring.get(), Errc::ContextMismatch, "element from another ring");
    std::vector<RingElem> out;
    out.reserve(sd.blocks.size());
    RingElem sum = RingElem::zero(sd.ring.get());
    for (const auto& b : sd.blocks) {
        out.push_back(a * b.e_hat);
        sum += out.back();
    }
    internal_check(sum == a, "block components sum to the element");
    return out;
}

std::vector<std::size_t> block_support(const RingElem& a, const SpectralData& sd) {
    auto comps = block_components(a, sd);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!comps[i].is_zero()) s.push_back(i);
    return s;
}

Matrix ideal_basis(const RingElem& g) {
    const RingCtx* ctx = g.ctx();
    Matrix rows;
    RingElem cur = g;
    for (std::uint32_t i = 0; i < ctx->n(); ++i) {
        rows.push_back(cur.coeffs());
        cur = mul_x(cur);
    }
    rref(rows);
    return rows;
}

}  // namespace negacode
