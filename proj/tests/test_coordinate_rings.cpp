#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/sampling.hpp"
#include "support.hpp"

using namespace asreg;
using namespace ts;

TEST_CASE("graph relation space for the identity") {
    GraphRelationSpace s = thcr_relation_space(xy_quadric(), QMatrix::identity(4));
    CHECK(s.space.dim() == 7);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) CHECK(s.space.contains(commutator2(4, i, j)));
    CHECK(s.space.contains(tensor2(4, 0, 1)));
    CHECK(s.space.contains(tensor2(4, 1, 0))); // Y2·Y1 is also a multiple of the quadric
    CHECK_FALSE(s.space.contains(tensor2(4, 0, 0)));
}

TEST_CASE("graph relation space for a diagonal automorphism") {
    GraphRelationSpace s = thcr_relation_space(xy_quadric(), diag4(rat(1), rat(2), rat(1), rat(1)));
    CHECK(s.space.dim() == 7);
    std::vector<Rational> t = tensor2(4, 0, 1);
    auto u = tensor2(4, 1, 0);
    for (size_t i = 0; i < 16; ++i) t[i] -= 2 * u[i]; // x1⊗x2 − 2·x2⊗x1
    CHECK(s.space.contains(t));
    CHECK(s.space.contains(tensor2(4, 0, 1)));
}

TEST_CASE("graph relation space is 7-dimensional for random automorphisms") {
    auto rng = protocol_rng(41);
    for (int t = 0; t < 20; ++t) {
        LinMapV tau = sample_invertible(rng, 4);
        CHECK(thcr_relation_space(xy_quadric(), tau).space.dim() == 7);
    }
    CHECK_THROWS_AS(thcr_relation_space(xy_quadric(), QMatrix(4, 4)), precondition_error);
}

TEST_CASE("graph antisymmetry invariant") {
    auto rng = protocol_rng(42);
    for (int t = 0; t < 10; ++t) {
        LinMapV tau = sample_invertible(rng, 4);
        GraphRelationSpace s = thcr_relation_space(xy_quadric(), tau);
        for (int k = 0; k < 5; ++k) {
            std::vector<Rational> u(4), v(4);
            for (auto& x : u) x = sample_rational(rng);
            for (auto& x : v) x = sample_rational(rng);
            auto ut = apply_form(tau, u);
            auto vt = apply_form(tau, v);
            auto tens = tensor2_of_forms(4, ut, v);
            auto sub = tensor2_of_forms(4, vt, u);
            for (size_t i = 0; i < 16; ++i) tens[i] -= sub[i];
            CHECK(s.space.contains(tens));
        }
    }
}

TEST_CASE("graph-space quotient has square dimensions") {
    GraphRelationSpace s = thcr_relation_space(xy_quadric(), QMatrix::identity(4));
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < s.space.dim(); ++r) rows.push_back(s.space.basis.row(r));
    GradedAlgebra alg(QuadraticPresentation::from_tensors(4, rows));
    const size_t want[] = {1, 4, 9, 16, 25};
    for (size_t d = 0; d <= 4; ++d) CHECK(alg.dim(d) == want[d]);
}

TEST_CASE("surjection checks") {
    LinMapV id = QMatrix::identity(4);
    CHECK(check_surjection(cat("plalg_d"), xy_quadric(), id));
    CHECK(check_surjection(cat("poly4"), xy_quadric(), id));
    QuadricSpec x1x3(LinearForm::unit(0), LinearForm::unit(2));
    CHECK_FALSE(check_surjection(cat("plalg_d"), x1x3, id));
}

TEST_CASE("quadric lift extraction") {
    LinMapV id = QMatrix::identity(4);
    GradedAlgebra d_alg(cat("plalg_d"));
    AClass omega = extract_omega(d_alg, xy_quadric(), id);
    CHECK(omega == d_alg.class_of_word({0, 1}));

    GradedAlgebra nn(cat("ex_notnormal"));
    CHECK_THROWS_AS(extract_omega(nn, xy_quadric(), id), precondition_error);

    GradedAlgebra pa(cat("prop1_a"));
    CHECK_FALSE(extract_omega(pa, xy_quadric(), id).is_zero());
}

TEST_CASE("gap between the relation span and the graph space is the lift") {
    for (const char* id : {"plalg_b", "plalg_d", "ex_hung", "prop1_a_tw"}) {
        auto inst = catalog_build(id, catalog_default_params(id));
        GraphRelationSpace s = thcr_relation_space(*inst.quadric, *inst.tau);
        std::vector<Rational> u(inst.quadric->l1.c.begin(), inst.quadric->l1.c.end());
        std::vector<Rational> v(inst.quadric->l2.c.begin(), inst.quadric->l2.c.end());
        Subspace lift = Subspace::from_rows(16, {tensor2_of_forms(4, u, v)});
        CHECK(span_compare(inst.presentation.relations.sum(lift), s.space) == SpanOrder::equal);
    }
}

TEST_CASE("lift multiples") {
    LinMapV id = QMatrix::identity(4);
    GradedAlgebra d_alg(cat("plalg_d"));
    AClass omega = extract_omega(d_alg, xy_quadric(), id);
    CHECK(omega_multiple_check(d_alg, id, omega));

    GradedAlgebra poly(cat("poly4"));
    AClass omega_p = extract_omega(poly, xy_quadric(), id);
    CHECK(omega_multiple_check(poly, id, omega_p)); // all scalars vanish

    auto tw = catalog_build("pltwist_d");
    GradedAlgebra twa(tw.presentation);
    AClass omega_t = extract_omega(twa, *tw.quadric, *tw.tau);
    CHECK(omega_multiple_check(twa, *tw.tau, omega_t));
}

TEST_CASE("quadric factors must be independent") {
    CHECK_THROWS_AS(QuadricSpec(LinearForm::unit(0), LinearForm::unit(0)), precondition_error);
    CHECK_THROWS_AS(check_surjection(cat("poly4"), xy_quadric(), QMatrix(4, 4)), precondition_error);
}
