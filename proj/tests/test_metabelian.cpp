#include <doctest.h>

#include "oracles.hpp"
#include "rhoslice/metabelian.hpp"

using namespace rhoslice;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.set_coeff(e, Int(c));
    return p;
}

std::vector<Int> int_vec(std::initializer_list<long> vs) {
    std::vector<Int> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

MetabelianElement elem(long n, std::vector<Int> v) { return MetabelianElement{n, std::move(v)}; }

const std::vector<LaurentPoly>& contexts_pool() {
    static const std::vector<LaurentPoly> pool = {
        cyclotomic_poly(6),
        cyclotomic_poly(10),
        cyclotomic_poly(12),
        cyclotomic_poly(30),
        parse_terms({{2, 1}, {1, -3}, {0, 1}}),
    };
    return pool;
}

}  // namespace

TEST_SUITE_BEGIN("metabelian");

TEST_CASE("context validation") {
    CHECK_NOTHROW(MetabelianGroupCtx(cyclotomic_poly(6)));
    CHECK_THROWS_AS(MetabelianGroupCtx(parse_terms({{1, 1}, {0, -2}})), std::invalid_argument);
    CHECK_THROWS_AS(MetabelianGroupCtx(parse_terms({{1, 2}, {0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(MetabelianGroupCtx(LaurentPoly::zero()), std::invalid_argument);
    CHECK_THROWS_AS(MetabelianGroupCtx(LaurentPoly::one()), std::invalid_argument);
}

TEST_CASE("companion action is invertible") {
    for (const auto& p : contexts_pool()) {
        const MetabelianGroupCtx ctx(p);
        CHECK(ctx.companion() * ctx.companion_inverse() ==
              IntMatrix::identity(ctx.degree()));
        const Int det = det_bareiss(ctx.companion());
        CHECK(abs_int(det) == 1);
    }
}

TEST_CASE("the defining conjugation identity") {
    const MetabelianGroupCtx ctx(cyclotomic_poly(6));
    const auto h = int_vec({1, 0});
    auto minus_h = h;
    for (auto& x : minus_h) x = -x;

    const auto lhs = mg_mul(ctx, mg_mul(ctx, elem(0, minus_h), elem(1, int_vec({0, 0}))),
                            elem(0, h));
    const auto c_minus_i = ctx.companion() - IntMatrix::identity(2);
    CHECK(lhs == elem(1, c_minus_i.apply(h)));
}

TEST_CASE("identity and inverses") {
    const MetabelianGroupCtx ctx(cyclotomic_poly(6));
    const auto a = elem(3, int_vec({2, -1}));
    CHECK(mg_mul(ctx, a, mg_identity(ctx)) == a);
    CHECK(mg_mul(ctx, mg_identity(ctx), a) == a);
    CHECK(mg_mul(ctx, elem(1, int_vec({0, 0})), elem(-1, int_vec({0, 0}))) == mg_identity(ctx));

    const auto b = elem(2, int_vec({1, 0}));
    CHECK(mg_mul(ctx, b, mg_inv(ctx, b)) == mg_identity(ctx));
    CHECK(mg_mul(ctx, mg_inv(ctx, b), b) == mg_identity(ctx));
    CHECK(mg_inv(ctx, elem(0, int_vec({1, 2}))) == elem(0, int_vec({-1, -2})));
    CHECK(mg_inv(ctx, elem(1, int_vec({0, 0}))) == elem(-1, int_vec({0, 0})));
}

TEST_CASE("group axioms on random triples") {
    oracles::Rng rng(4242);
    int count = 0;
    while (count < 1000) {
        for (const auto& p : contexts_pool()) {
            const MetabelianGroupCtx ctx(p);
            const auto rand_elem = [&]() {
                MetabelianElement e;
                e.n = rng.pick(-3, 3);
                e.v.resize(ctx.degree());
                for (auto& x : e.v) x = rng.pick(-4, 4);
                return e;
            };
            const auto a = rand_elem();
            const auto b = rand_elem();
            const auto c = rand_elem();
            CHECK(mg_mul(ctx, mg_mul(ctx, a, b), c) == mg_mul(ctx, a, mg_mul(ctx, b, c)));
            CHECK(mg_mul(ctx, a, mg_inv(ctx, a)) == mg_identity(ctx));
            CHECK(mg_mul(ctx, a, mg_identity(ctx)) == a);
            ++count;
        }
    }
}

TEST_CASE("conjugation identity on random h in five contexts") {
    oracles::Rng rng(4243);
    for (const auto& p : contexts_pool()) {
        const MetabelianGroupCtx ctx(p);
        const auto c_minus_i = ctx.companion() - IntMatrix::identity(ctx.degree());
        for (int i = 0; i < 100; ++i) {
            std::vector<Int> h(ctx.degree());
            for (auto& x : h) x = rng.pick(-5, 5);
            auto minus_h = h;
            for (auto& x : minus_h) x = -x;
            const auto lhs = mg_mul(
                ctx, mg_mul(ctx, elem(0, minus_h), elem(1, std::vector<Int>(ctx.degree(), Int(0)))),
                elem(0, h));
            CHECK(lhs == elem(1, c_minus_i.apply(h)));
        }
    }
}

TEST_CASE("alexander condition") {
    CHECK(is_alexander(cyclotomic_poly(30)));
    CHECK(is_alexander(parse_terms({{2, 1}, {1, -1}, {0, 1}})));
    CHECK(!is_alexander(parse_terms({{1, 1}, {0, 1}})));  // p(1) = 2
    CHECK(!is_alexander(LaurentPoly::zero()));
}

TEST_CASE("normal generation witness") {
    const MetabelianGroupCtx ctx(cyclotomic_poly(6));
    const auto c_minus_i = ctx.companion() - IntMatrix::identity(2);

    SUBCASE("target built from e1") {
        const auto target = elem(1, c_minus_i.apply(int_vec({1, 0})));
        const auto w = normal_generation_witness(ctx, target);
        CHECK(w.conjugator == int_vec({1, 0}));
        MetabelianElement acc = mg_identity(ctx);
        for (const auto& letter : w.word) acc = mg_mul(ctx, acc, letter);
        CHECK(acc == target);
    }
    SUBCASE("trivial coefficient part") {
        const auto w = normal_generation_witness(ctx, elem(1, int_vec({0, 0})));
        CHECK(w.conjugator == int_vec({0, 0}));
    }
    SUBCASE("length-four word hits (3, e2)") {
        const auto target = elem(3, int_vec({0, 1}));
        const auto w = normal_generation_witness(ctx, target);
        CHECK(w.word.size() == 4);
        MetabelianElement acc = mg_identity(ctx);
        for (const auto& letter : w.word) acc = mg_mul(ctx, acc, letter);
        CHECK(acc == target);
    }
    SUBCASE("rejected outside the alexander class") {
        const MetabelianGroupCtx bad(parse_terms({{1, 1}, {0, 1}}));  // p(1) = 2
        CHECK(!bad.is_alexander());
        CHECK_THROWS_AS(normal_generation_witness(bad, elem(1, int_vec({0}))),
                        std::invalid_argument);
    }
}

TEST_CASE("orders in coefficient-changed quotients") {
    const MetabelianGroupCtx ctx(cyclotomic_poly(6));
    const auto inf = order_in_quotient(ctx, int_vec({1, 0}), CoefficientField::rationals);
    CHECK(inf.infinite);

    const auto two = order_in_quotient(ctx, int_vec({1, 0}), CoefficientField::prime_field, 2);
    CHECK(!two.infinite);
    CHECK(two.finite_order == 2);

    const auto one = order_in_quotient(ctx, int_vec({5, 0}), CoefficientField::prime_field, 5);
    CHECK(one.finite_order == 1);

    const auto trivial = order_in_quotient(ctx, int_vec({0, 0}), CoefficientField::rationals);
    CHECK(!trivial.infinite);
    CHECK(trivial.finite_order == 1);

    CHECK_THROWS_AS(order_in_quotient(ctx, int_vec({1, 0}), CoefficientField::prime_field, 6),
                    std::invalid_argument);
}

TEST_SUITE_END();
