#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/point_scheme.hpp"
#include "asreg/sampling.hpp"
#include "support.hpp"

using namespace asreg;
using namespace ts;

TEST_CASE("multilinearization of commutators") {
    MultilinearMatrix m = multilinearize(cat("poly4"));
    // first canonical row is x1⊗x2 − x2⊗x1: column 2 carries Y1, column 1 carries −Y2
    CHECK(m.entry[0][1] == LinearForm(rat(1), rat(0), rat(0), rat(0)));
    CHECK(m.entry[0][0] == LinearForm(rat(0), rat(-1), rat(0), rat(0)));
    CHECK_THROWS_AS(multilinearize(cat("s_q")), precondition_error); // 7 relations
}

TEST_CASE("multilinearization round-trips the relation span") {
    for (const char* id : {"poly4", "plalg_b", "plalg_d", "ex_hung", "prop1_b0"}) {
        QuadraticPresentation p = cat(id);
        MultilinearMatrix m = multilinearize(p);
        std::vector<std::vector<Rational>> rows;
        for (size_t r = 0; r < 6; ++r) rows.push_back(m.row_tensor(r));
        CHECK(Subspace::from_rows(16, rows) == p.relations);
    }
}

TEST_CASE("minor counts and degenerate cases") {
    MinorIdeal poly_minors = compute_minors(multilinearize(cat("poly4")));
    CHECK(poly_minors.minors.size() == 15);
    CHECK(poly_minors.all_zero());

    MinorIdeal eh = compute_minors(multilinearize(cat("ex_hung")));
    CHECK_FALSE(eh.all_zero());
    for (const auto& mm : eh.minors) {
        if (mm.is_zero()) continue;
        CHECK(poly_divisible(mm, {LinearForm::unit(0), LinearForm::unit(1)}).first);
    }
}

TEST_CASE("component containment") {
    MinorIdeal eh = compute_minors(multilinearize(cat("ex_hung")));
    CHECK(contains_component(eh, PlanePairSpec{LinearForm::unit(0), LinearForm::unit(1)}));
    CHECK_FALSE(contains_component(eh, LineSpec{LinearForm::unit(2), LinearForm::unit(3)}));

    MinorIdeal b = compute_minors(multilinearize(cat("plalg_b")));
    CHECK(contains_component(b, PlanePairSpec{LinearForm::unit(0), LinearForm::unit(1)}));
    CHECK(contains_component(b, LineSpec{LinearForm::unit(2), LinearForm::unit(3)}));
}

TEST_CASE("rank and minors agree at sample points") {
    QuadraticPresentation p = cat("plalg_b");
    MultilinearMatrix m = multilinearize(p);
    MinorIdeal ideal = compute_minors(m);
    size_t checked = 0;
    for (const auto& plane : {LinearForm::unit(0), LinearForm::unit(1)}) {
        for (const auto& pt : plane_grid_points(plane, 100)) {
            bool vanish = true;
            for (const auto& mm : ideal.minors)
                if (mm.evaluate(pt) != 0) {
                    vanish = false;
                    break;
                }
            auto [r, rank] = rref_rank(m.evaluate(pt));
            CHECK(vanish == (rank <= 3));
            ++checked;
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("graph consistency of the automorphism") {
    for (const char* id : {"plalg_b", "plalg_c", "plalg_d", "plalg_e", "ex_hung"}) {
        QuadraticPresentation p = cat(id);
        MultilinearMatrix m = multilinearize(p);
        size_t tested = 0;
        for (const auto& plane : {LinearForm::unit(0), LinearForm::unit(1)}) {
            for (const auto& pt : plane_grid_points(plane, 40)) {
                std::vector<Rational> image;
                try {
                    image = sigma_at(m, pt);
                } catch (const precondition_error&) {
                    continue; // off P or undetermined
                }
                for (size_t r = 0; r < 6; ++r) {
                    auto c = m.row_tensor(r);
                    Rational acc = 0;
                    for (size_t i = 0; i < 4; ++i)
                        for (size_t j = 0; j < 4; ++j) acc += c[i * 4 + j] * pt[i] * image[j];
                    CHECK(acc == 0);
                }
                ++tested;
            }
        }
        CHECK(tested > 10);
    }
}

TEST_CASE("quadric is contained in the point scheme of every graph member") {
    for (const char* id :
         {"plalg_b", "plalg_c", "plalg_d", "plalg_e", "pltwist_a", "pltwist_b", "pltwist_c",
          "pltwist_d", "pltwist_e", "ex_hung", "prop1_a", "prop1_a_tw", "prop1_b", "prop1_b0"}) {
        MinorIdeal ideal = compute_minors(multilinearize(cat(id)));
        CHECK(contains_component(ideal, PlanePairSpec{LinearForm::unit(0), LinearForm::unit(1)}));
    }
}

TEST_CASE("sigma at points") {
    MultilinearMatrix b = multilinearize(cat("plalg_b"));
    CHECK(proj_equal(sigma_at(b, v4(1, 1, 0, 0)), v4(2, 1, 0, 0)));
    CHECK_THROWS_AS(sigma_at(b, v4(1, 1, 1, 1)), sigma_off_scheme);

    MultilinearMatrix c = multilinearize(cat("plalg_c"));
    CHECK(proj_equal(sigma_at(c, v4(1, 1, 0, 1)), v4(1, 1, 0, 2)));

    MultilinearMatrix poly = multilinearize(cat("poly4"));
    CHECK(proj_equal(sigma_at(poly, v4(1, 2, 3, 4)), v4(1, 2, 3, 4)));

    // at reduced points of the doubled line the kernel direction is the
    // point itself (the nonreduced structure is invisible to point evaluation)
    MultilinearMatrix d = multilinearize(cat("plalg_d"));
    CHECK(proj_equal(sigma_at(d, v4(0, 0, 1, 1)), v4(0, 0, 1, 1)));

    // a span annihilating a point doubly leaves the automorphism undetermined
    std::vector<std::vector<Rational>> degenerate;
    for (size_t j = 0; j < 4; ++j) degenerate.push_back(tensor2(4, 0, j));
    degenerate.push_back(tensor2(4, 1, 0));
    degenerate.push_back(tensor2(4, 1, 1));
    QuadraticPresentation degen = QuadraticPresentation::from_tensors(4, degenerate);
    CHECK_THROWS_AS(sigma_at(multilinearize(degen), v4(0, 0, 1, 0)), sigma_undetermined);
}

TEST_CASE("chart formulas from the catalog verify exactly") {
    for (const char* id : {"plalg_b", "plalg_c", "plalg_d", "plalg_e"}) {
        auto inst = catalog_build(id, catalog_default_params(id));
        MultilinearMatrix m = multilinearize(inst.presentation);
        for (const auto& sc : inst.sigma_checks)
            CHECK(verify_sigma_formula(m, sc.chart, sc.formula, sc.samples));
    }
}

TEST_CASE("a wrong chart formula is rejected") {
    auto inst = catalog_build("plalg_b");
    MultilinearMatrix m = multilinearize(inst.presentation);
    std::array<CommPoly, 4> wrong = {CommPoly::variable(0), CommPoly::variable(1), CommPoly(),
                                     CommPoly()}; // identity instead of ((α−1)Y1, Y2, 0, 0)
    CHECK_FALSE(verify_sigma_formula(m, 0, wrong, inst.sigma_checks[0].samples));
    CHECK_THROWS_AS(verify_sigma_formula(m, 2, wrong, inst.sigma_checks[0].samples),
                    precondition_error); // zero chart coordinate
}

TEST_CASE("automorphism commutes with the declared graph map on reduced points") {
    for (const char* id : {"pltwist_b", "pltwist_c", "pltwist_d", "pltwist_e"}) {
        auto inst = catalog_build(id, catalog_default_params(id));
        MultilinearMatrix m = multilinearize(inst.presentation);
        size_t tested = 0;
        for (const auto& plane : {LinearForm::unit(0), LinearForm::unit(1)}) {
            if (tested >= 20) break;
            for (const auto& pt : plane_grid_points(plane, 120)) {
                if (tested >= 20) break;
                std::vector<Rational> tau_p = apply_point(*inst.tau, pt);
                std::vector<Rational> s_p, s_tau_p;
                try {
                    s_p = sigma_at(m, pt);
                    s_tau_p = sigma_at(m, tau_p);
                } catch (const precondition_error&) {
                    continue;
                }
                CHECK(proj_equal(s_tau_p, apply_point(*inst.tau, s_p)));
                ++tested;
            }
        }
        CHECK(tested >= 20);
    }
}

TEST_CASE("residual polynomials") {
    MinorIdeal poly = compute_minors(multilinearize(cat("poly4")));
    CHECK_THROWS_AS(residual_polynomials(poly, xy_quadric()), precondition_error);

    MinorIdeal b = compute_minors(multilinearize(cat("plalg_b")));
    auto res = residual_polynomials(b, xy_quadric());
    REQUIRE(res.size() == 15);
    LineParam l34 = line_from_planes(LinearForm::unit(2), LinearForm::unit(3));
    for (const auto& r : res) {
        CHECK(r.total_degree() <= 2);
        auto coeffs = restrict_to_line_binary(r, l34.base, l34.dir);
        for (const auto& c : coeffs) CHECK(c == 0); // residuals vanish on V(Y3,Y4)
    }
}

TEST_CASE("scheme reports match catalog declarations") {
    for (const char* id : {"plalg_b", "plalg_c", "plalg_d", "plalg_e", "ex_hung", "prop1_a",
                           "prop1_a_tw", "prop1_b", "prop1_b0"}) {
        auto inst = catalog_build(id, catalog_default_params(id));
        std::vector<std::pair<std::string, LineSpec>> cands;
        for (const auto& cl : inst.candidate_lines) cands.emplace_back(cl.name, cl.line);
        SchemeReport rep = scheme_report(inst.presentation, *inst.quadric, cands);
        CHECK(rep.classification == SchemeClass::contains_quadric);
        for (size_t i = 0; i < cands.size(); ++i) {
            CHECK(rep.candidates[i].minors_vanish == inst.candidate_lines[i].expected_component);
            CHECK(rep.candidates[i].accepted == inst.candidate_lines[i].expected_extra);
        }
    }
    SchemeReport poly_rep = scheme_report(cat("poly4"), xy_quadric(), {});
    CHECK(poly_rep.classification == SchemeClass::all_minors_zero);
}

TEST_CASE("S(P)-style bilinear presentations match the relation span") {
    // plalg_d: the displayed eight-variable relations, read as Y_i Z_j tensors
    std::vector<std::vector<Rational>> d_rows = {
        commutator2(4, 0, 1), commutator2(4, 0, 2), commutator2(4, 0, 3),
        commutator2(4, 1, 2), commutator2(4, 1, 3),
        [] {
            auto t = tensor2(4, 2, 3);
            auto u = tensor2(4, 3, 2);
            auto w = tensor2(4, 0, 1);
            for (size_t i = 0; i < 16; ++i) t[i] = t[i] - u[i] - w[i];
            return t;
        }(),
    };
    CHECK(Subspace::from_rows(16, d_rows) == cat("plalg_d").relations);

    // plalg_e: Y1Z2=Y2Z1, Y1Z3=Y3Z1, Y2Z3=Y3Z2, Y3Z4=Y4Z3, Y1Z4=Y4Z1, Y2Z4−Y4Z2=Y2Z1
    std::vector<std::vector<Rational>> e_rows = {
        commutator2(4, 0, 1), commutator2(4, 0, 2), commutator2(4, 1, 2),
        commutator2(4, 2, 3), commutator2(4, 0, 3),
        [] {
            auto t = tensor2(4, 1, 3);
            auto u = tensor2(4, 3, 1);
            auto w = tensor2(4, 1, 0);
            for (size_t i = 0; i < 16; ++i) t[i] = t[i] - u[i] - w[i];
            return t;
        }(),
    };
    CHECK(Subspace::from_rows(16, e_rows) == cat("plalg_e").relations);
}
