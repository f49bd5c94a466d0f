#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "negacode/field.hpp"
#include "negacode/poly.hpp"
#include "negacode/util.hpp"

using namespace negacode;

TEST_CASE("prime fields and rejection of composite characteristic") {
    auto f5 = FieldCtx::make(5, 1, 0);
    CHECK(f5->q() == 5);
    CHECK(f5->modulus().empty());
    CHECK_THROWS_AS(FieldCtx::make(4, 1, 0), Error);
    try {
        FieldCtx::make(4, 1, 0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CompositeCharacteristic);
    }
    CHECK_THROWS_AS(FieldCtx::make(2, 40, 0), Error);  // over the default bound
}

TEST_CASE("GF(9) modulus is irreducible (exhaustive root check over GF(3))") {
    auto f9 = FieldCtx::make(3, 2, 0);
    REQUIRE(f9->modulus().size() == 3);
    const auto& m = f9->modulus();
    CHECK(m[2] == 1);
    // Degree-2 polynomial over GF(3) is irreducible iff it has no root.
    for (std::uint32_t r = 0; r < 3; ++r) {
        std::uint32_t val = (m[0] + m[1] * r + m[2] * r * r) % 3;
        CHECK(val != 0);
    }
    // Determinism: same (p, k, seed) gives the same modulus.
    auto again = FieldCtx::make(3, 2, 0);
    CHECK(again->modulus() == m);
}

TEST_CASE("basic arithmetic in GF(5) and GF(3)") {
    auto f5 = FieldCtx::make(5, 1, 0);
    CHECK(f5->to_index(inv(f5->from_int(2))) == 3);  // 2*3 = 6 = 1
    auto f3 = FieldCtx::make(3, 1, 0);
    CHECK(f3->to_index(-f3->from_int(1))== 2);
    CHECK_THROWS_AS(inv(f5->zero()), Error);
    CHECK_THROWS_AS((void)(f5->one() + f3->one()), Error);  // context mismatch
}

TEST_CASE("every nonzero element of GF(9) has a working inverse") {
    auto f9 = FieldCtx::make(3, 2, 0);
    for (std::uint64_t i = 1; i < 9; ++i) {
        FieldElem a = f9->from_index(i);
        CHECK(a * inv(a) == f9->one());
    }
}

TEST_CASE("fermat: a^(q-1) = 1 exhaustively on small fields") {
    for (auto [p, k] : {std::pair<std::uint64_t, std::uint32_t>{5, 1}, {3, 2}, {2, 4}, {7, 2}}) {
        auto f = FieldCtx::make(p, k, 0);
        for (std::uint64_t i = 1; i < f->q(); ++i)
            CHECK(pow(f->from_index(i), f->q() - 1) == f->one());
    }
}

TEST_CASE("multiplicative orders match brute-force power walks") {
    auto f5 = FieldCtx::make(5, 1, 0);
    CHECK(multiplicative_order(f5->from_int(2)) == 4);  // 2,4,3,1
    CHECK(multiplicative_order(f5->from_int(4)) == 2);
    CHECK_THROWS_AS(multiplicative_order(f5->zero()), Error);

    auto f9 = FieldCtx::make(3, 2, 0);
    bool found_generator = false;
    for (std::uint64_t i = 1; i < 9; ++i) {
        FieldElem a = f9->from_index(i);
        std::uint64_t d = multiplicative_order(a);
        // oracle: first return to 1 under repeated multiplication
        FieldElem cur = a;
        std::uint64_t steps = 1;
        while (!(cur == f9->one())) {
            cur *= a;
            ++steps;
        }
        CHECK(d == steps);
        if (d == 8) found_generator = true;
    }
    CHECK(found_generator);
}

TEST_CASE("square roots of -1 exist exactly when q != -1 mod 4") {
    auto f5 = FieldCtx::make(5, 1, 0);
    auto r5 = sqrt_minus_one(*f5);
    REQUIRE(r5.has_value());
    CHECK((*r5) * (*r5) == f5->minus_one());
    CHECK((f5->to_index(*r5) == 2 || f5->to_index(*r5) == 3));

    auto f7 = FieldCtx::make(7, 1, 0);
    CHECK(!sqrt_minus_one(*f7).has_value());
    // oracle: squares mod 7 are {1, 2, 4}
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(a * a % 7 != 6);

    auto f2 = FieldCtx::make(2, 1, 0);
    auto r2 = sqrt_minus_one(*f2);
    REQUIRE(r2.has_value());
    CHECK(*r2 == f2->one());

    for (std::uint64_t q : {9ULL, 13ULL, 25ULL, 29ULL}) {
        std::uint64_t p = q, k = 1;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                k = 0;
                std::uint64_t v = q;
                while (v % p == 0) {
                    v /= p;
                    ++k;
                }
                break;
            }
        auto f = FieldCtx::make(p, static_cast<std::uint32_t>(k), 0);
        auto r = sqrt_minus_one(*f);
        if (q % 4 == 1) {
            REQUIRE(r.has_value());
            CHECK((*r) * (*r) == f->minus_one());
        } else {
            CHECK(!r.has_value());
        }
    }
}

TEST_CASE("splitting field: degree, root order, xi^n = -1, embedding") {
    auto f3 = FieldCtx::make(3, 1, 0);
    auto sf = splitting_field_with_root(f3, 2);
    // oracle: order of 3 in Z_4^x is 2 (3 != 1, 3^2 = 9 = 1 mod 4)
    CHECK(sf.degree == 2);
    CHECK(pow(sf.xi, 4) == sf.ext->one());
    CHECK(pow(sf.xi, 2) == sf.ext->minus_one());
    for (std::uint32_t j = 1; j < 4; ++j) CHECK(!(pow(sf.xi, j) == sf.ext->one()));

    auto f5 = FieldCtx::make(5, 1, 0);
    auto sf5 = splitting_field_with_root(f5, 2);
    CHECK(sf5.ext == f5);
    CHECK(sf5.ext->to_index(sf5.xi) == 2);  // 2 has order 4, 2^2 = -1

    CHECK_THROWS_AS(splitting_field_with_root(f3, 3), Error);
    try {
        splitting_field_with_root(f3, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSemisimple);
    }

    // Embedding of GF(9) into the splitting field of X^4 + 1 over GF(9).
    auto f9 = FieldCtx::make(3, 2, 0);
    auto sf9 = splitting_field_with_root(f9, 4);
    for (std::uint64_t i = 0; i < 9; ++i)
        for (std::uint64_t j = 0; j < 9; ++j) {
            FieldElem a = f9->from_index(i), b = f9->from_index(j);
            CHECK(sf9.embed(a * b) == sf9.embed(a) * sf9.embed(b));
            CHECK(sf9.embed(a + b) == sf9.embed(a) + sf9.embed(b));
            auto back = sf9.descend(sf9.embed(a));
            REQUIRE(back.has_value());
            CHECK(*back == a);
        }
}

TEST_CASE("find_irreducible is deterministic and certified by root exclusion") {
    auto f3 = FieldCtx::make(3, 1, 0);
    Poly f = find_irreducible(f3.get(), 3, 0);
    CHECK(f.degree() == 3);
    // oracle: no linear factor and not a product of deg-1 * deg-2 => check all roots
    for (std::uint64_t r = 0; r < 3; ++r) CHECK(!eval(f, f3->from_index(r)).is_zero());
    CHECK(is_irreducible(f));
    CHECK(find_irreducible(f3.get(), 3, 0) == f);
}
