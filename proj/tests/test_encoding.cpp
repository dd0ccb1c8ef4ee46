#include <doctest.h>

#include "oracles.hpp"
#include "rhoslice/encoding.hpp"

using namespace rhoslice;

TEST_SUITE_BEGIN("encoding");

TEST_CASE("laurent interchange format") {
    const json j = json::parse(R"([[-1,"1"],[0,"-2"],[1,"1"]])");
    const LaurentPoly p = laurent_from_json(j);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == -2);
    CHECK(p.coeff(1) == 1);
    CHECK(laurent_from_json(laurent_to_json(p)) == p);

    // Arbitrary-precision coefficients survive the string encoding.
    LaurentPoly big;
    big.set_coeff(3, Int("123456789012345678901234567890"));
    CHECK(laurent_from_json(laurent_to_json(big)) == big);

    CHECK_THROWS_AS(laurent_from_json(json::parse(R"([[0, 1.5]])")), std::invalid_argument);
    CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"not": "array"})")), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
    const HermMatrix u = model_matrix();
    const json j = herm_matrix_to_json(u);
    const HermMatrix back = herm_matrix_from_json(j);
    CHECK(back.size() == u.size());
    for (std::size_t i = 0; i < 4; ++i) CHECK(back.entries()[i] == u.entries()[i]);
    CHECK(!back.context().order.has_value());
    CHECK(back.context().abelianization_image == 0);
    CHECK(herm_matrix_to_json(back) == j);

    json finite = j;
    finite["generator"]["order"] = 3;
    CHECK(herm_matrix_from_json(finite).context().order == 3UL);

    // A matrix file violating Hermitian symmetry is rejected on load.
    json bad = j;
    bad["entries"][1] = json::parse(R"([[1,"1"]])");
    CHECK_THROWS_AS(herm_matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("presentation and form round trips") {
    AlexanderPresentation a;
    a.size = 2;
    oracles::Rng rng(17);
    a.entries = {rng.laurent(-1, 2, 3), rng.laurent(-1, 2, 3), rng.laurent(-1, 2, 3),
                 rng.laurent(-1, 2, 3)};
    const json ja = presentation_to_json(a);
    const AlexanderPresentation a2 = presentation_from_json(ja);
    CHECK(a2.entries == a.entries);

    const BlanchfieldForm form = BlanchfieldForm::hyperbolic(cyclotomic_poly(6));
    const json jf = form_to_json(form);
    const BlanchfieldForm form2 = form_from_json(jf);
    CHECK(form2.summand_count() == 2);
    CHECK(form_to_json(form2) == jf);
}

TEST_CASE("report serialization is deterministic") {
    // Two independent computations serialize byte-identically.
    const json j1 =
        obstruction_report_to_json(doubly_slice_report(model_matrix(), cyclotomic_poly(30), {3}));
    const json j2 =
        obstruction_report_to_json(doubly_slice_report(model_matrix(), cyclotomic_poly(30), {3}));
    CHECK(j1.dump() == j2.dump());

    // Round trip through text parses to the identical document.
    const json reparsed = json::parse(j1.dump());
    CHECK(reparsed == j1);
    CHECK(reparsed.dump() == j1.dump());

    CHECK(j1.at("verdict") == "NOT_DOUBLY_SLICE");
    CHECK(j1.at("rho_values")[0].at("rho").at("value") == "-4/3");
}

TEST_CASE("rho result encodings") {
    const auto exact = rho_finite(model_matrix(), 3);
    const json je = rho_result_to_json(exact);
    CHECK(je.at("kind") == "exact");
    CHECK(je.at("value") == "-4/3");

    const auto numeric = rho_integral(model_matrix(), 1, RhoMode::numeric, Rat(1, 1000));
    const json jn = rho_result_to_json(numeric);
    CHECK(jn.at("kind") == "certified");
    const Rat lo = parse_rational(jn.at("lo").get<std::string>());
    const Rat hi = parse_rational(jn.at("hi").get<std::string>());
    CHECK(lo <= Rat(-4, 3));
    CHECK(Rat(-4, 3) <= hi);
}

TEST_CASE("structured reports reparse identically") {
    const auto liv = livingston_check(cyclotomic_poly(30), {2, 3, 4, 5, 6});
    const json jl = livingston_report_to_json(liv);
    CHECK(json::parse(jl.dump()) == jl);

    const auto rub = ruberman_inapplicability(cyclotomic_poly(42), 9);
    const json jr = ruberman_report_to_json(rub);
    CHECK(json::parse(jr.dump()) == jr);

    const json js = signature_function_to_json(signature_function(model_matrix()));
    CHECK(json::parse(js.dump()) == js);
    CHECK(js.at("arc_values") == json::array({0, -2}));
}

TEST_CASE("metabelian encodings") {
    const json jc = json::parse(R"({"p": [[0,"1"],[1,"-1"],[2,"1"]]})");
    const MetabelianGroupCtx ctx = metabelian_ctx_from_json(jc);
    CHECK(ctx.degree() == 2);
    CHECK(metabelian_ctx_to_json(ctx) == json{{"p", laurent_to_json(cyclotomic_poly(6))}});

    const json je = json::parse(R"({"n": 2, "v": [1, -3]})");
    const MetabelianElement e = metabelian_element_from_json(je);
    CHECK(e.n == 2);
    CHECK(e.v == std::vector<Int>{Int(1), Int(-3)});
    CHECK(metabelian_element_from_json(metabelian_element_to_json(e)) == e);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == Rat(1, 3));
    CHECK(parse_rational("-4/3") == Rat(-4, 3));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("1e-9") == Rat(1, 1000000000));
    CHECK(parse_rational("2.5e2") == Rat(250));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_SUITE_END();
