#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rhoslice/covers.hpp"

using namespace rhoslice;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.set_coeff(e, Int(c));
    return p;
}

AlexanderPresentation single(const LaurentPoly& p) { return AlexanderPresentation{1, {p}}; }

}  // namespace

TEST_SUITE_BEGIN("covers");

TEST_CASE("fox orders of pinned presentations") {
    const LaurentPoly trefoil = parse_terms({{2, 1}, {1, -1}, {0, 1}});
    // Oracle for r = 2: |delta(1) * delta(-1)| by direct evaluation.
    CHECK(abs_int(trefoil.eval_at_one() * trefoil.eval_at_minus_one()) == 3);
    const auto r2 = fox_order(single(trefoil), 2);
    REQUIRE(!r2.infinite());
    CHECK(*r2.order == 3);

    // Oracle for r = 3: the block-circulant integer determinant.
    const auto r3 = fox_order(single(trefoil), 3);
    const auto r3_alt = block_circulant_order(single(trefoil), 3);
    REQUIRE(!r3.infinite());
    REQUIRE(!r3_alt.infinite());
    CHECK(*r3.order == 4);
    CHECK(*r3_alt.order == 4);

    CHECK(fox_order(single(parse_terms({{1, 1}, {0, -1}})), 2).infinite());
}

TEST_CASE("block circulant orders of pinned presentations") {
    const auto tre = block_circulant_order(single(parse_terms({{2, 1}, {1, -1}, {0, 1}})), 2);
    REQUIRE(!tre.infinite());
    CHECK(*tre.order == 3);

    const LaurentPoly fig8 = parse_terms({{2, 1}, {1, -3}, {0, 1}});
    CHECK(abs_int(fig8.eval_at_one() * fig8.eval_at_minus_one()) == 5);
    const auto f8 = block_circulant_order(single(fig8), 2);
    REQUIRE(!f8.infinite());
    CHECK(*f8.order == 5);

    CHECK(block_circulant_order(single(parse_terms({{1, 1}, {0, -1}})), 3).infinite());

    CHECK_THROWS_AS(block_circulant_order(single(fig8), 500), std::invalid_argument);
}

TEST_CASE("single-fold cover is the augmentation") {
    oracles::Rng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPoly d = rng.laurent(-2, 2, 4, false);
        const auto r1 = fox_order(single(d), 1);
        const Int expected = abs_int(d.eval_at_one());
        if (expected == 0) {
            CHECK(r1.infinite());
        } else {
            REQUIRE(!r1.infinite());
            CHECK(*r1.order == expected);
        }
    }
}

TEST_CASE("multiplicativity in the presented polynomial") {
    oracles::Rng rng(92);
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPoly f = rng.laurent(0, 2, 3, false);
        const LaurentPoly g = rng.laurent(0, 2, 3, false);
        const unsigned long r = static_cast<unsigned long>(rng.pick(1, 5));
        const auto of = fox_order(single(f), r);
        const auto og = fox_order(single(g), r);
        const auto ofg = fox_order(single(f * g), r);
        if (of.infinite() || og.infinite()) {
            CHECK(ofg.infinite());
        } else {
            REQUIRE(!ofg.infinite());
            CHECK(*ofg.order == *of.order * *og.order);
        }
    }
}

TEST_CASE("resultant route equals block circulant route") {
    oracles::Rng rng(93);
    int done = 0;
    while (done < 200) {
        const std::size_t k = static_cast<std::size_t>(rng.pick(1, 3));
        AlexanderPresentation a;
        a.size = k;
        a.entries.resize(k * k);
        for (auto& p : a.entries) p = rng.laurent(-2, 2, 5);
        if (a.determinant().is_zero()) continue;
        const unsigned long r = static_cast<unsigned long>(rng.pick(1, 6));
        const auto fox = fox_order(a, r);
        const auto blk = block_circulant_order(a, r);
        CHECK(fox.infinite() == blk.infinite());
        if (!fox.infinite()) CHECK(*fox.order == *blk.order);
        ++done;
    }
}

TEST_CASE("livingston criterion") {
    SUBCASE("product of three primes applies and vanishes") {
        const auto report = livingston_check(cyclotomic_poly(30), {2, 3, 4, 5, 7, 8, 9});
        CHECK(report.criterion_applies);
        for (const auto& row : report.rows) {
            CHECK(row.prime_power);
            CHECK(row.vanishes);
        }
    }
    SUBCASE("two prime divisors do not qualify") {
        const auto report = livingston_check(cyclotomic_poly(6), {2});
        CHECK(!report.criterion_applies);
        CHECK(report.remainder_is_unit);
        CHECK(!report.all_factors_three_primes);
    }
    SUBCASE("non-cyclotomic remainder reports orders anyway") {
        const auto report = livingston_check(parse_terms({{2, 1}, {1, -3}, {0, 1}}), {2});
        CHECK(!report.criterion_applies);
        CHECK(!report.remainder_is_unit);
        REQUIRE(report.rows.size() == 1);
        REQUIRE(!report.rows[0].order.infinite());
        CHECK(*report.rows[0].order.order == 5);
    }
    SUBCASE("non-prime-power covers are flagged") {
        const auto report = livingston_check(cyclotomic_poly(30), {6});
        REQUIRE(report.rows.size() == 1);
        CHECK(!report.rows[0].prime_power);
    }
}

TEST_CASE("casson-gordon-type input sweep") {
    CHECK(ruberman_inapplicability(cyclotomic_poly(30), 9).inapplicable);

    const auto phi6 = ruberman_inapplicability(cyclotomic_poly(6), 3);
    CHECK(!phi6.inapplicable);
    CHECK(std::find(phi6.failing_rs.begin(), phi6.failing_rs.end(), 2UL) != phi6.failing_rs.end());

    CHECK(ruberman_inapplicability(LaurentPoly::one(), 25).inapplicable);
}

TEST_SUITE_END();
