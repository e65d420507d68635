#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/parser.hpp"
#include "support.hpp"

using namespace asreg;
using namespace ts;

TEST_CASE("parsing a one-relation file") {
    PresentationFile f = parse_presentation("generators: x1 x2 x3 x4\nrelation: x1*x2 - x2*x1\n");
    CHECK(f.generators.size() == 4);
    REQUIRE(f.relation_tensors.size() == 1);
    CHECK(f.relation_tensors[0] == commutator2(4, 0, 1));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_presentation("relation: x1*x2*x3\n"),
                         doctest::Contains("non-quadratic"), parse_error);
    CHECK_THROWS_WITH_AS(parse_presentation("relation: x1*x9\n"),
                         doctest::Contains("unknown generator"), parse_error);
    CHECK_THROWS_WITH_AS(parse_presentation("relation: x1*x2 - x1*x2\n"),
                         doctest::Contains("zero relation"), parse_error);
    CHECK_THROWS_AS(parse_presentation("relation x1*x2\n"), parse_error);
    CHECK_THROWS_AS(parse_presentation("relation: 3/0*x1*x2\n"), parse_error);
    try {
        parse_presentation("# comment\nrelation: x1*x2 +\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("coefficients, whitespace and comments") {
    PresentationFile f = parse_presentation(
        "generators: x1 x2 x3 x4  # four generators\n"
        "relation:3/2*x1*x2-x2*x1+ 2*x3*x4\n");
    const auto& t = f.relation_tensors[0];
    CHECK(t[0 * 4 + 1] == rat(3, 2));
    CHECK(t[1 * 4 + 0] == rat(-1));
    CHECK(t[2 * 4 + 3] == rat(2));
}

TEST_CASE("quadric and tau lines") {
    PresentationFile f = parse_presentation(
        "generators: x1 x2 x3 x4\n"
        "relation: x1*x2 - x2*x1\n"
        "quadric: (x1 - x2, x3)\n"
        "tau: 1,0,0,0;0,2,0,0;0,0,1,0;0,0,0,1\n");
    REQUIRE(f.quadric);
    CHECK(f.quadric->l1 == LinearForm(rat(1), rat(-1), rat(0), rat(0)));
    CHECK(f.quadric->l2 == LinearForm::unit(2));
    REQUIRE(f.tau);
    CHECK(f.tau->at(1, 1) == 2);
    CHECK_THROWS_AS(parse_presentation("quadric: (x1, x1)\n"), parse_error);
    CHECK_THROWS_AS(parse_presentation("tau: 1,0;0,1\n"), parse_error);
}

TEST_CASE("the full quadric-exact example matches the catalog") {
    const char* text =
        "generators: x1 x2 x3 x4\n"
        "relation: x1*x2 - x2*x1\n"
        "relation: x2*x3 + x3*x2\n"
        "relation: x1*x3 - x3*x1\n"
        "relation: x2*x4 + x4*x2\n"
        "relation: x1*x4 - x4*x1\n"
        "relation: x3*x4 - x4*x3 + x1*x2\n";
    PresentationFile f = parse_presentation(text);
    CHECK(f.presentation().relations == cat("ex_hung").relations);
}

TEST_CASE("print/parse round trip on canonical presentations") {
    for (const char* id : {"poly4", "ex_hung", "plalg_b", "pltwist_d", "s_q", "prop1_a_tw"}) {
        QuadraticPresentation p = cat(id);
        PresentationFile f = parse_presentation(print_presentation(p));
        CHECK(f.presentation() == p);
        // canonical text is a fixed point of print∘parse
        CHECK(print_presentation(f.presentation()) == print_presentation(p));
    }
}

TEST_CASE("catalog constraints cite the admissible range") {
    CHECK_THROWS_WITH_AS(catalog_build("plalg_b", {{"alpha", Rational(1)}}),
                         doctest::Contains("{1,2}"), constraint_error);
    CHECK_THROWS_AS(catalog_build("plalg_b", {{"alpha", Rational(2)}}), constraint_error);
    CHECK_THROWS_WITH_AS(catalog_build("prop1_a", {{"alpha", Rational(1)}, {"beta", Rational(1)}}),
                         doctest::Contains("alpha != 1"), constraint_error);
    CHECK_THROWS_AS(catalog_build("prop1_b", {{"alpha", Rational(0)}}), constraint_error);
    CHECK_THROWS_AS(catalog_build("prop1_a_tw", {{"q", Rational(0)}}), constraint_error);
    CHECK_THROWS_AS(catalog_build("nope"), error);
    CHECK_THROWS_AS(catalog_build("poly4", {{"alpha", Rational(1)}}), error);
}

TEST_CASE("catalog example relations match the displayed forms") {
    auto b = catalog_build("plalg_b", {{"alpha", Rational(3)}});
    // x2x1 = (α−1)x1x2 with α = 3: tensor x2⊗x1 − 2·x1⊗x2
    auto t = tensor2(4, 1, 0);
    auto u = tensor2(4, 0, 1);
    for (size_t i = 0; i < 16; ++i) t[i] -= 2 * u[i];
    CHECK(b.presentation.relations.contains(t));
}

TEST_CASE("relation span dimensions across the catalog") {
    for (const auto& inst : catalog_default_instances()) {
        if (inst.id == "s_q") CHECK(inst.presentation.relations.dim() == 7);
        else CHECK(inst.presentation.relations.dim() == 6);
    }
}

TEST_CASE("catalog metadata consistency") {
    for (const auto& inst : catalog_default_instances()) {
        GradedAlgebra alg(inst.presentation);
        Subspace central = central_space(alg);
        for (const auto& v : inst.central_decl) CHECK(central.contains(v));
        if (inst.presentation.relations.dim() != 6) continue;
        MinorIdeal ideal = compute_minors(multilinearize(inst.presentation));
        for (const auto& cl : inst.candidate_lines)
            CHECK(contains_component(ideal, cl.line) == cl.expected_component);
    }
}

TEST_CASE("declared graph data passes the surjection test") {
    for (const auto& inst : catalog_default_instances()) {
        if (!inst.quadric || !inst.tau) continue;
        if (inst.id == "s_q") continue; // equal span, not strict containment
        CHECK(check_surjection(inst.presentation, *inst.quadric, *inst.tau));
    }
}
