#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "negacode/ring.hpp"
#include "negacode/util.hpp"

using namespace negacode;

namespace {

RingCtxPtr ring3_2() { return RingCtx::make(FieldCtx::make(3, 1, 0), 2, -1); }

// Oracle for star: substitute X -> X^(2n-1) and reduce with x^n = -1.
RingElem star_by_substitution(const RingElem& a) {
    const RingCtx* ctx = a.ctx();
    std::uint32_t n = ctx->n();
    RingElem acc = RingElem::zero(ctx);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        std::uint64_t e = static_cast<std::uint64_t>(i) * (2 * n - 1);
        std::uint64_t r = e % n;
        bool flip = (e / n) % 2 == 1;
        std::vector<FieldElem> c(n, ctx->field()->zero());
        c[r] = flip ? -a[i] : a[i];
        acc += RingElem(ctx, std::move(c));
    }
    return acc;
}

}  // namespace

TEST_CASE("negacyclic multiplication on worked values") {
    auto r = ring3_2();
    RingElem x = RingElem::x_power(r.get(), 1);
    CHECK((x * x).to_indices() == std::vector<std::uint64_t>{2, 0});  // x^2 = -1
    RingElem one_plus_x = RingElem::from_indices(r.get(), {1, 1});
    RingElem one_minus_x = RingElem::from_indices(r.get(), {1, 2});
    CHECK((one_plus_x * one_minus_x).to_indices() == std::vector<std::uint64_t>{2, 0});

    auto rc = RingCtx::make(FieldCtx::make(5, 1, 0), 3, 1);  // cyclic comparison ring
    RingElem xc = RingElem::x_power(rc.get(), 1);
    CHECK((xc * (xc * xc)).to_indices() == std::vector<std::uint64_t>{1, 0, 0});  // x^3 = 1
}

TEST_CASE("multiplication by x is the negacyclic shift") {
    auto f = FieldCtx::make(5, 1, 0);
    auto r = RingCtx::make(f, 4, -1);
    RingElem a = RingElem::from_indices(r.get(), {1, 2, 3, 4});
    // (c0,c1,c2,c3) -> (-c3, c0, c1, c2)
    CHECK(mul_x(a).to_indices() == std::vector<std::uint64_t>{1, 1, 2, 3});
    CHECK(mul_x(a) == RingElem::x_power(r.get(), 1) * a);
}

TEST_CASE("star: worked values, closed form matches the substitution oracle") {
    auto r = ring3_2();
    RingElem a = RingElem::from_indices(r.get(), {1, 1});  // 1 + x
    CHECK(star(a).to_indices() == std::vector<std::uint64_t>{1, 2});  // 1 - x
    CHECK(star(RingElem::one(r.get())) == RingElem::one(r.get()));

    auto r6 = RingCtx::make(FieldCtx::make(3, 1, 0), 6, -1);
    RingElem b = RingElem::from_indices(r6.get(), {1, 0, 0, 1, 0, 0});  // 1 + x^3
    CHECK(star(b).to_indices() == std::vector<std::uint64_t>{1, 0, 0, 2, 0, 0});

    Rng rng(5);
    for (auto n : {2u, 3u, 5u, 6u, 8u}) {
        auto rn = RingCtx::make(FieldCtx::make(3, 1, 0), n, -1);
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < n; ++i) size *= 3;
        for (int t = 0; t < 50; ++t) {
            RingElem v = RingElem::from_rank(rn.get(), rng.below(size));
            CHECK(star(v) == star_by_substitution(v));
            CHECK(star(star(v)) == v);
        }
    }

    auto cyc = RingCtx::make(FieldCtx::make(3, 1, 0), 2, 1);
    CHECK_THROWS_AS(star(RingElem::one(cyc.get())), Error);
}

TEST_CASE("star is an algebra automorphism (random products)") {
    auto r8 = RingCtx::make(FieldCtx::make(5, 1, 0), 8, -1);
    Rng rng(9);
    std::uint64_t size = 1;
    for (int i = 0; i < 8; ++i) size *= 5;
    for (int t = 0; t < 60; ++t) {
        RingElem a = RingElem::from_rank(r8.get(), rng.below(size));
        RingElem b = RingElem::from_rank(r8.get(), rng.below(size));
        CHECK(star(a * b) == star(a) * star(b));
        CHECK(star(a + b) == star(a) + star(b));
    }
}

TEST_CASE("the class x is a unit of order 2n") {
    for (auto n : {2u, 4u, 6u, 10u}) {
        auto r = RingCtx::make(FieldCtx::make(3, 1, 0), n, -1);
        RingElem one = RingElem::one(r.get());
        RingElem cur = one;
        std::uint32_t steps = 0;
        do {
            cur = mul_x(cur);
            ++steps;
        } while (!(cur == one));
        CHECK(steps == 2 * n);
    }
}

TEST_CASE("ring inverses via extended Euclid") {
    auto r = ring3_2();
    RingElem x = RingElem::x_power(r.get(), 1);
    auto ix = invert(x);
    REQUIRE(ix.has_value());
    CHECK(ix->to_indices() == std::vector<std::uint64_t>{0, 2});  // -x
    CHECK(!invert(RingElem::zero(r.get())).has_value());

    auto r5 = RingCtx::make(FieldCtx::make(5, 1, 0), 2, -1);
    // 1 + 2x vanishes at the root 2 of X^2 + 1 over GF(5), so it is a zero
    // divisor; 1 + x avoids both roots and is a unit.
    CHECK(!invert(RingElem::from_indices(r5.get(), {1, 2})).has_value());
    RingElem g = RingElem::from_indices(r5.get(), {1, 1});
    auto ig = invert(g);
    REQUIRE(ig.has_value());
    CHECK(*ig * g == RingElem::one(r5.get()));
    // oracle: invertibility decided by scanning all products, both rings
    for (std::uint64_t rank = 0; rank < 9; ++rank) {
        RingElem a = RingElem::from_rank(r.get(), rank);
        auto ia = invert(a);
        bool brute_invertible = false;
        for (std::uint64_t s = 0; s < 9; ++s)
            if (RingElem::from_rank(r.get(), s) * a == RingElem::one(r.get()))
                brute_invertible = true;
        CHECK(ia.has_value() == brute_invertible);
    }
    for (std::uint64_t rank = 0; rank < 25; ++rank) {
        RingElem a = RingElem::from_rank(r5.get(), rank);
        auto ia = invert(a);
        bool brute_invertible = false;
        for (std::uint64_t s = 0; s < 25; ++s)
            if (RingElem::from_rank(r5.get(), s) * a == RingElem::one(r5.get()))
                brute_invertible = true;
        CHECK(ia.has_value() == brute_invertible);
    }
}

TEST_CASE("pair inner products") {
    auto r = ring3_2();
    RingElem one = RingElem::one(r.get());
    RingElem x = RingElem::x_power(r.get(), 1);
    PairElem u(one, x);
    CHECK(r->field()->to_index(inner_product(u, u)) == 2);  // 1+0+0+1
    PairElem zero(RingElem::zero(r.get()), RingElem::zero(r.get()));
    CHECK(inner_product(u, zero).is_zero());
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        PairElem a(RingElem::from_rank(r.get(), rng.below(9)),
                   RingElem::from_rank(r.get(), rng.below(9)));
        PairElem b(RingElem::from_rank(r.get(), rng.below(9)),
                   RingElem::from_rank(r.get(), rng.below(9)));
        CHECK(inner_product(a, b) == inner_product(b, a));
    }
}

TEST_CASE("eta: worked value, exhaustive weight preservation, errors") {
    auto cyc5 = RingCtx::make(FieldCtx::make(5, 1, 0), 3, 1);
    RingElem a = RingElem::from_indices(cyc5.get(), {1, 1, 1});
    CHECK(eta(a).to_indices() == std::vector<std::uint64_t>{1, 4, 1});  // 1 - X + X^2
    auto nega5 = RingCtx::make(cyc5->field(), 3, -1);
    CHECK(eta(RingElem::one(cyc5.get())) == RingElem::one(nega5.get()));

    auto cyc3 = RingCtx::make(FieldCtx::make(3, 1, 0), 3, 1);
    for (std::uint64_t rank = 0; rank < 27; ++rank) {
        RingElem v = RingElem::from_rank(cyc3.get(), rank);
        CHECK(eta(v).weight() == v.weight());
    }

    auto cyc4 = RingCtx::make(FieldCtx::make(3, 1, 0), 4, 1);
    CHECK_THROWS_AS(eta(RingElem::one(cyc4.get())), Error);
    try {
        eta(RingElem::one(cyc4.get()));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EvenLength);
    }
}

TEST_CASE("word identification round-trips and weight") {
    auto r = ring3_2();
    RingElem a = RingElem::from_indices(r.get(), {1, 2});
    auto w = to_word(a);
    CHECK(w.size() == 2);
    CHECK(from_word(r.get(), w) == a);
    CHECK(a.weight() == 2);
    CHECK(RingElem::zero(r.get()).weight() == 0);
    CHECK_THROWS_AS(from_word(r.get(), std::vector<FieldElem>{r->field()->one()}), Error);

    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        RingElem v = RingElem::from_rank(r.get(), rng.below(9));
        CHECK(from_word(r.get(), to_word(v)) == v);
    }
}
