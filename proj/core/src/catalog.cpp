#include "asreg/catalog.hpp"

#include <algorithm>

namespace asreg {

namespace {

constexpr size_t N = 4;

std::vector<Rational> vec4(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

LinearForm form(long a, long b, long c, long d) {
    return LinearForm(Rational(a), Rational(b), Rational(c), Rational(d));
}

// coef·Y1^e1·Y2^e2·Y3^e3·Y4^e4
CommPoly mono(const Rational& coef, unsigned e1, unsigned e2, unsigned e3, unsigned e4) {
    CommPoly p;
    p.add_term({e1, e2, e3, e4}, coef);
    return p;
}

QuadricSpec std_quadric() { return QuadricSpec(LinearForm::unit(0), LinearForm::unit(1)); }

std::vector<Rational> rel(std::initializer_list<std::pair<std::pair<int, int>, Rational>> terms) {
    std::vector<Rational> t(N * N);
    for (const auto& [ij, c] : terms) t[static_cast<size_t>(ij.first) * N + ij.second] += c;
    return t;
}

Rational get_param(const std::map<std::string, Rational>& params, const std::string& name,
                   const Rational& dflt) {
    auto it = params.find(name);
    return it == params.end() ? dflt : it->second;
}

void reject_unknown(const std::string& id, const std::map<std::string, Rational>& params,
                    std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* s) { return k == s; }) == known.end())
            throw error(id + ": unknown parameter '" + k + "'");
    }
}

QuadraticPresentation poly4_presentation() {
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) rows.push_back(commutator2(N, i, j));
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation plalg_b_presentation(const Rational& alpha) {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 2, 0), commutator2(N, 2, 1), commutator2(N, 2, 3),
        commutator2(N, 3, 1), commutator2(N, 3, 0),
        rel({{{1, 0}, 1}, {{0, 1}, -(alpha - 1)}}), // x2x1 = (α−1)x1x2
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation plalg_c_presentation() {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 2, 0), commutator2(N, 1, 0), commutator2(N, 2, 1), commutator2(N, 2, 3),
        rel({{{1, 3}, 1}, {{3, 1}, -1}, {{0, 1}, -1}}), // x2x4 − x4x2 = x1x2
        rel({{{0, 3}, 1}, {{3, 0}, -1}, {{0, 1}, -1}}), // x1x4 − x4x1 = x1x2
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation plalg_d_presentation() {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 0, 1), commutator2(N, 0, 2), commutator2(N, 1, 2),
        commutator2(N, 0, 3), commutator2(N, 1, 3),
        rel({{{2, 3}, 1}, {{3, 2}, -1}, {{0, 1}, -1}}), // x3x4 − x4x3 = x1x2
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation plalg_e_presentation() {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 0, 1), commutator2(N, 0, 2), commutator2(N, 1, 2),
        commutator2(N, 2, 3), commutator2(N, 0, 3),
        rel({{{1, 3}, 1}, {{3, 1}, -1}, {{1, 0}, -1}}), // x2x4 − x4x2 = x2x1
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation ex_hung_presentation() {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 0, 1), commutator2(N, 0, 2), commutator2(N, 0, 3),
        rel({{{1, 2}, 1}, {{2, 1}, 1}}), // x2x3 + x3x2
        rel({{{1, 3}, 1}, {{3, 1}, 1}}), // x2x4 + x4x2
        rel({{{2, 3}, 1}, {{3, 2}, -1}, {{0, 1}, 1}}), // x3x4 − x4x3 + x1x2
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation ex_notnormal_presentation() {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 0, 1), commutator2(N, 0, 2), commutator2(N, 0, 3),
        commutator2(N, 1, 3), commutator2(N, 2, 3),
        rel({{{0, 1}, 1}}), // x1x2
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation prop1_b_presentation(const Rational& alpha, const Rational& beta) {
    std::vector<std::vector<Rational>> rows = {
        commutator2(N, 0, 1), commutator2(N, 0, 2),
        rel({{{1, 2}, 1}, {{2, 1}, -1}, {{0, 1}, -alpha}}), // x2x3 − x3x2 = αx1x2
        rel({{{0, 3}, 1}, {{3, 0}, -1}, {{0, 1}, -beta}}),  // x1x4 − x4x1 = βx1x2
        commutator2(N, 1, 3), commutator2(N, 2, 3),
    };
    return QuadraticPresentation::from_tensors(N, rows);
}

QuadraticPresentation s_q_presentation() {
    GraphRelationSpace s = thcr_relation_space(std_quadric(), QMatrix::identity(N));
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < s.space.dim(); ++r) rows.push_back(s.space.basis.row(r));
    return QuadraticPresentation::from_tensors(N, rows);
}

OreData poly3_ore(const LinMapV& sigma, std::vector<TensorElement> delta, std::string adjoint) {
    std::vector<std::vector<Rational>> rows = {commutator2(3, 0, 1), commutator2(3, 0, 2),
                                               commutator2(3, 1, 2)};
    OreData o;
    o.base = QuadraticPresentation::from_tensors(3, rows, {"y1", "y2", "y3"});
    o.sigma_map = sigma;
    o.delta = std::move(delta);
    o.adjoint_name = std::move(adjoint);
    return o;
}

TensorElement zero2(size_t n) { return TensorElement(2, std::vector<Rational>(n * n)); }

TensorElement neg_prod(size_t n, size_t i, size_t j) {
    TensorElement t(2, std::vector<Rational>(n * n));
    t.coords[i * n + j] = -1;
    return t;
}

LineSpec coord_line(size_t i, size_t j) { return LineSpec{LinearForm::unit(i), LinearForm::unit(j)}; }

std::vector<CandidateLine> decoy_lines() {
    // lines contained in neither plane of V(Y1·Y2)
    return {
        {"decoy V(Y1-Y3,Y2-Y4)", LineSpec{form(1, 0, -1, 0), form(0, 1, 0, -1)}, false},
        {"decoy V(Y1-Y2,Y3-Y4)", LineSpec{form(1, -1, 0, 0), form(0, 0, 1, -1)}, false},
        {"decoy V(Y1+Y2,Y3+Y4)", LineSpec{form(1, 1, 0, 0), form(0, 0, 1, 1)}, false},
        {"decoy V(Y1-Y4,Y2-Y3)", LineSpec{form(1, 0, 0, -1), form(0, 1, -1, 0)}, false},
        {"decoy V(Y1+Y3,Y2+Y4)", LineSpec{form(1, 0, 1, 0), form(0, 1, 0, 1)}, false},
    };
}

std::vector<std::vector<Rational>> pts(std::initializer_list<std::array<long, 4>> list) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : list) out.push_back(vec4(p[0], p[1], p[2], p[3]));
    return out;
}

} // namespace

std::vector<std::string> catalog_ids() {
    return {"poly4",     "s_q",     "ex_notnormal", "ex_hung",  "plalg_b",    "plalg_c",
            "plalg_d",   "plalg_e", "pltwist_a",    "pltwist_b", "pltwist_c", "pltwist_d",
            "pltwist_e", "prop1_a", "prop1_a_tw",   "prop1_b",   "prop1_b0"};
}

bool catalog_has(const std::string& id) {
    auto ids = catalog_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::map<std::string, Rational> catalog_default_params(const std::string& id) {
    if (id == "plalg_b" || id == "pltwist_b") return {{"alpha", Rational(3)}};
    if (id == "prop1_a") return {{"alpha", Rational(2)}, {"beta", Rational(1)}};
    if (id == "prop1_a_tw") return {{"beta", Rational(-1)}, {"q", Rational(1)}};
    if (id == "prop1_b") return {{"alpha", Rational(1)}, {"beta", Rational(1)}};
    if (id == "prop1_b0") return {{"alpha", Rational(1)}};
    return {};
}

CatalogInstance catalog_build(const std::string& id, const std::map<std::string, Rational>& params) {
    CatalogInstance inst;
    inst.id = id;
    inst.params = params;
    QuadricSpec q = std_quadric();

    if (id == "poly4") {
        reject_unknown(id, params, {});
        inst.description = "commutative polynomial ring on four generators";
        inst.presentation = poly4_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        for (size_t i = 0; i < N; ++i) {
            inst.central_decl.push_back(vec4(i == 0, i == 1, i == 2, i == 3));
            inst.normal_phi_decl.push_back(inst.central_decl.back());
        }
        inst.untwisted_central = {vec4(1, 0, 0, 0), vec4(0, 1, 0, 0)};
    } else if (id == "s_q") {
        reject_unknown(id, params, {});
        inst.description = "coordinate ring of the rank-two quadric (identity automorphism)";
        inst.presentation = s_q_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
    } else if (id == "ex_notnormal") {
        reject_unknown(id, params, {});
        inst.description = "non-noetherian example: quadric lift lies among the relations";
        inst.presentation = ex_notnormal_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.central_decl = {vec4(1, 0, 0, 0), vec4(0, 0, 0, 1)};
    } else if (id == "ex_hung") {
        reject_unknown(id, params, {});
        inst.description = "regular algebra whose point scheme is exactly the quadric";
        inst.presentation = ex_hung_presentation();
        inst.quadric = q;
        LinMapV tau = QMatrix::identity(N);
        tau.at(1, 1) = -1;
        inst.tau = tau;
        inst.central_decl = {vec4(1, 0, 0, 0)};
        inst.candidate_lines = {
            {"V(Y3,Y4)", coord_line(2, 3), false, false},
            {"V(Y1-Y2,Y3)", LineSpec{form(1, -1, 0, 0), LinearForm::unit(2)}, false, false},
            {"V(Y1,Y2)", coord_line(0, 1), true, false},
            {"V(Y1,Y3)", coord_line(0, 2), true, false},
        };
        inst.slice_candidates = {
            SliceFamily{coord_line(0, 3), vec4(1, 0, 0, 1)},
            SliceFamily{coord_line(0, 2), vec4(1, 0, 0, 1)},
        };
    } else if (id == "plalg_b" || id == "pltwist_b") {
        reject_unknown(id, params, {"alpha"});
        Rational alpha = get_param(params, "alpha", Rational(3));
        if (alpha == 0 || alpha == 1 || alpha == 2)
            throw constraint_error(id, "requires alpha in k^x \\ {1,2}");
        inst.params["alpha"] = alpha;
        inst.presentation = plalg_b_presentation(alpha);
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.central_decl = {vec4(0, 0, 1, 0), vec4(0, 0, 0, 1)};
        inst.normal_phi_decl = inst.central_decl;
        inst.untwisted_central = inst.central_decl;
        inst.candidate_lines = {{"V(Y3,Y4)", coord_line(2, 3), true, true}};
        for (auto& d : decoy_lines()) inst.candidate_lines.push_back(d);
        {
            SigmaCheck sc;
            sc.chart = 0;
            sc.formula = {mono(alpha - 1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), CommPoly(), CommPoly()};
            sc.samples = pts({{1, 1, 0, 0}, {1, 2, 0, 0}, {2, 1, 0, 0}, {1, -1, 0, 0}, {3, 1, 0, 0}});
            inst.sigma_checks.push_back(std::move(sc));
        }
        {
            LinMapV sigma = QMatrix::identity(3);
            sigma.at(0, 0) = alpha - 1; // base (x1, x3, x4), adjoining x2
            inst.ore = poly3_ore(sigma, {zero2(3), zero2(3), zero2(3)}, "x2");
        }
        inst.description = "point scheme is the quadric plus a transversal line";
        if (id == "pltwist_b") {
            LinMapV tau(4, 4);
            tau.at(0, 0) = 1;
            tau.at(1, 1) = 2;
            tau.at(2, 2) = 3;
            tau.at(2, 3) = 1;
            tau.at(3, 3) = 5;
            inst.presentation = zhang_twist(inst.presentation, tau);
            inst.tau = tau;
            inst.description = "twist of plalg_b by its declared graph automorphism";
            inst.normal_phi_decl = {vec4(0, 0, 0, 1)}; // x3 is not normal once t34 ≠ 0
            inst.central_decl.clear();
            inst.sigma_checks.clear();
            inst.ore.reset();
            inst.candidate_lines = {{"V(Y3,Y4)", coord_line(2, 3), true, true}};
        }
    } else if (id == "plalg_c" || id == "pltwist_c") {
        reject_unknown(id, params, {});
        inst.presentation = plalg_c_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.central_decl = {vec4(1, -1, 0, 0), vec4(0, 0, 1, 0)};
        inst.normal_phi_decl = inst.central_decl;
        inst.untwisted_central = inst.central_decl;
        inst.candidate_lines = {{"V(Y1-Y2,Y3)", LineSpec{form(1, -1, 0, 0), LinearForm::unit(2)}, true, true},
                                {"V(Y3,Y4)", coord_line(2, 3), false, false}};
        {
            SigmaCheck sc;
            sc.chart = 0;
            sc.formula = {mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), mono(1, 0, 0, 1, 0),
                          mono(1, 1, 0, 0, 0) + mono(1, 0, 0, 0, 1)};
            sc.samples = pts({{1, 1, 0, 0}, {1, 1, 0, 1}, {1, 1, 0, 2}, {1, 1, 0, -1}, {1, 1, 0, 3}});
            inst.sigma_checks.push_back(std::move(sc));
        }
        inst.ore = poly3_ore(QMatrix::identity(3), {neg_prod(3, 0, 1), neg_prod(3, 0, 1), zero2(3)},
                             "x4"); // base (x1, x2, x3)
        inst.description = "point scheme is the quadric plus a tangent line";
        if (id == "pltwist_c") {
            LinMapV tau = QMatrix::identity(4);
            tau.at(2, 0) = 2;
            tau.at(2, 1) = -2;
            tau.at(2, 2) = 3;
            tau.at(3, 0) = 1;
            tau.at(3, 1) = 4;
            tau.at(3, 2) = 5;
            inst.presentation = zhang_twist(inst.presentation, tau);
            inst.tau = tau;
            inst.description = "twist of plalg_c by its declared graph automorphism";
            inst.normal_phi_decl = {vec4(1, -1, 0, 0)};
            inst.central_decl.clear();
            inst.sigma_checks.clear();
            inst.ore.reset();
            inst.candidate_lines = {{"V(Y1-Y2,Y3)", LineSpec{form(1, -1, 0, 0), LinearForm::unit(2)}, true, true}};
        }
    } else if (id == "plalg_d" || id == "pltwist_d") {
        reject_unknown(id, params, {});
        inst.presentation = plalg_d_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.central_decl = {vec4(1, 0, 0, 0), vec4(0, 1, 0, 0)};
        inst.normal_phi_decl = inst.central_decl;
        inst.untwisted_central = inst.central_decl;
        inst.candidate_lines = {{"V(Y1,Y2)", coord_line(0, 1), true, true},
                                {"V(Y3,Y4)", coord_line(2, 3), false, false}};
        {
            const std::array<CommPoly, 4> identity_formula = {
                mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), mono(1, 0, 0, 1, 0),
                mono(1, 0, 0, 0, 1)};
            SigmaCheck id_chart1;
            id_chart1.chart = 0;
            id_chart1.formula = identity_formula;
            id_chart1.samples =
                pts({{1, 0, 1, 1}, {2, 0, 1, -1}, {1, 0, 2, 3}, {1, 0, -1, 1}, {3, 0, 1, 2}});
            inst.sigma_checks.push_back(std::move(id_chart1));

            SigmaCheck id_chart2;
            id_chart2.chart = 1;
            id_chart2.formula = identity_formula;
            id_chart2.samples =
                pts({{0, 1, 1, 1}, {0, 2, 1, -1}, {0, 1, 2, 3}, {0, 1, -1, 1}, {0, 3, 1, 2}});
            inst.sigma_checks.push_back(std::move(id_chart2));

            SigmaCheck c3;
            c3.chart = 2;
            c3.formula = {mono(1, 1, 0, 1, 0), mono(1, 0, 1, 1, 0), mono(1, 0, 0, 2, 0),
                          mono(1, 0, 0, 1, 1) - mono(1, 1, 1, 0, 0)};
            c3.samples = pts({{0, 1, 1, 0},
                              {0, 2, 1, 1},
                              {0, 1, 1, 2},
                              {0, -1, 1, 1},
                              {0, 3, 1, -1},
                              {1, 0, 1, 0},
                              {2, 0, 1, 1},
                              {1, 0, 1, 2},
                              {-1, 0, 1, 1},
                              {3, 0, 1, -1}});
            inst.sigma_checks.push_back(std::move(c3));

            SigmaCheck c4;
            c4.chart = 3;
            c4.formula = {mono(1, 1, 0, 0, 1), mono(1, 0, 1, 0, 1),
                          mono(1, 0, 0, 1, 1) + mono(1, 1, 1, 0, 0), mono(1, 0, 0, 0, 2)};
            c4.samples = pts({{0, 1, 0, 1},
                              {0, 2, 1, 1},
                              {0, 1, 2, 1},
                              {0, -1, 1, 1},
                              {0, 3, -1, 1},
                              {1, 0, 0, 1},
                              {2, 0, 1, 1},
                              {1, 0, 2, 1},
                              {-1, 0, 1, 1},
                              {3, 0, -1, 1}});
            inst.sigma_checks.push_back(std::move(c4));
        }
        inst.ore = poly3_ore(QMatrix::identity(3), {zero2(3), zero2(3), neg_prod(3, 0, 1)}, "x4");
        inst.description = "point scheme is the quadric with a doubled intersection line";
        if (id == "pltwist_d") {
            LinMapV tau(4, 4);
            tau.at(0, 0) = 2;
            tau.at(1, 1) = 3;
            tau.at(2, 0) = 1;
            tau.at(2, 1) = 2;
            tau.at(2, 2) = 1;
            tau.at(3, 0) = 3;
            tau.at(3, 1) = 1;
            tau.at(3, 3) = 6; // t11·t22 = 6 = t33·t44 − t34·t43
            inst.presentation = zhang_twist(inst.presentation, tau);
            inst.tau = tau;
            inst.description = "twist of plalg_d by its declared graph automorphism";
            inst.normal_phi_decl = {vec4(1, 0, 0, 0), vec4(0, 1, 0, 0)};
            inst.central_decl.clear();
            inst.sigma_checks.clear();
            inst.ore.reset();
            inst.candidate_lines = {{"V(Y1,Y2)", coord_line(0, 1), true, true}};
        }
    } else if (id == "plalg_e" || id == "pltwist_e") {
        reject_unknown(id, params, {});
        inst.presentation = plalg_e_presentation();
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.central_decl = {vec4(1, 0, 0, 0), vec4(0, 0, 1, 0)};
        inst.normal_phi_decl = inst.central_decl;
        inst.untwisted_central = inst.central_decl;
        inst.candidate_lines = {{"V(Y1,Y3)", coord_line(0, 2), true, true},
                                {"V(Y3,Y4)", coord_line(2, 3), false, false}};
        {
            SigmaCheck c2;
            c2.chart = 1;
            c2.formula = {mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), mono(1, 0, 0, 1, 0),
                          mono(1, 1, 0, 0, 0) + mono(1, 0, 0, 0, 1)};
            c2.samples = pts({{0, 1, 1, 0},
                              {0, 2, 1, 1},
                              {0, 1, 2, -1},
                              {0, 1, -1, 2},
                              {0, 3, 1, 1},
                              {0, 1, 3, 2},
                              {0, 2, -1, 1},
                              {0, 1, 1, 3},
                              {0, 2, 3, -1},
                              {0, 1, 2, 5}});
            inst.sigma_checks.push_back(std::move(c2));

            SigmaCheck c4;
            c4.chart = 3;
            c4.formula = {mono(1, 1, 0, 0, 1), mono(1, 0, 1, 0, 1) - mono(1, 1, 1, 0, 0),
                          mono(1, 0, 0, 1, 1), mono(1, 0, 0, 0, 2)};
            c4.samples = pts({{0, 1, 1, 1},
                              {0, 2, 1, 1},
                              {0, 1, 2, 1},
                              {0, -1, 1, 1},
                              {0, 1, -2, 1},
                              {1, 0, 1, 1},
                              {2, 0, 1, 1},
                              {1, 0, 2, 1},
                              {-1, 0, 1, 1},
                              {3, 0, 1, 1}});
            inst.sigma_checks.push_back(std::move(c4));

            const std::array<CommPoly, 4> identity_formula = {
                mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), mono(1, 0, 0, 1, 0),
                mono(1, 0, 0, 0, 1)};
            SigmaCheck id1;
            id1.chart = 0;
            id1.formula = identity_formula;
            id1.samples = pts({{1, 0, 1, 1}, {2, 0, 1, -1}, {1, 0, 2, 3}, {1, 0, -1, 1}, {3, 0, 1, 2}});
            inst.sigma_checks.push_back(std::move(id1));

            SigmaCheck id3;
            id3.chart = 2;
            id3.formula = identity_formula;
            id3.samples = pts({{0, 1, 1, 1}, {0, 2, 1, -1}, {0, 1, 2, 3}, {0, -1, 1, 1}, {1, 0, 3, 2}});
            inst.sigma_checks.push_back(std::move(id3));
        }
        inst.ore = poly3_ore(QMatrix::identity(3), {zero2(3), neg_prod(3, 1, 0), zero2(3)}, "x4");
        inst.description = "point scheme is the quadric with a doubled line inside one plane";
        if (id == "pltwist_e") {
            LinMapV tau = QMatrix::identity(4);
            tau.at(1, 1) = 2;
            tau.at(2, 0) = 1;
            tau.at(2, 2) = 3;
            tau.at(3, 0) = 4;
            tau.at(3, 1) = 5;
            tau.at(3, 2) = 6;
            inst.presentation = zhang_twist(inst.presentation, tau);
            inst.tau = tau;
            inst.description = "twist of plalg_e by its declared graph automorphism";
            inst.normal_phi_decl = {vec4(1, 0, 0, 0)};
            inst.central_decl.clear();
            inst.sigma_checks.clear();
            inst.ore.reset();
            inst.candidate_lines = {{"V(Y1,Y3)", coord_line(0, 2), true, true}};
        }
    } else if (id == "pltwist_a") {
        reject_unknown(id, params, {});
        LinMapV tau(4, 4);
        tau.at(0, 0) = 2;
        tau.at(1, 1) = 3;
        tau.at(2, 2) = 1;
        tau.at(3, 2) = 4;
        tau.at(3, 3) = 5;
        inst.presentation = zhang_twist(poly4_presentation(), tau);
        inst.quadric = q;
        inst.tau = tau;
        inst.description = "twist of the polynomial ring by a linear automorphism";
        inst.normal_phi_decl = {vec4(1, 0, 0, 0), vec4(0, 0, 1, 0)}; // eigenvectors of τ
        inst.untwisted_central = {vec4(1, 0, 0, 0), vec4(0, 1, 0, 0)};
    } else if (id == "prop1_a") {
        reject_unknown(id, params, {"alpha", "beta"});
        Rational alpha = get_param(params, "alpha", Rational(2));
        Rational beta = get_param(params, "beta", Rational(1));
        if (alpha == 0 || beta == 0 || alpha == 1)
            throw constraint_error(id, "requires alpha, beta in k^x with alpha != 1");
        inst.params = {{"alpha", alpha}, {"beta", beta}};
        inst.presentation = family_two_param(alpha, beta, QMatrix::identity(N));
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.candidate_lines = {{"V(Y3,Y4)", coord_line(2, 3), false, false},
                                {"V(Y1-Y2,Y3)", LineSpec{form(1, -1, 0, 0), LinearForm::unit(2)}, false, false},
                                {"V(Y1,Y2)", coord_line(0, 1), true, false},
                                {"V(Y1,Y3)", coord_line(0, 2), true, false}};
        inst.slice_candidates = {SliceFamily{coord_line(0, 3), vec4(1, 0, 0, 1)}};
        inst.description = "two-parameter family with point scheme exactly the quadric";
    } else if (id == "prop1_a_tw") {
        // Regular member of the first family: the displayed relations are
        // flat exactly when the twist satisfies τ1τ2 = −τ3τ4 with α = −1;
        // τ = diag(−q, −1/q, −1, 1) realizes this for every q ≠ 0.
        reject_unknown(id, params, {"beta", "q"});
        Rational beta = get_param(params, "beta", Rational(-1));
        Rational qq = get_param(params, "q", Rational(1));
        if (beta == 0 || qq == 0) throw constraint_error(id, "requires beta, q in k^x");
        inst.params = {{"beta", beta}, {"q", qq}};
        LinMapV tau(4, 4);
        tau.at(0, 0) = -qq;
        tau.at(1, 1) = -1 / qq;
        tau.at(2, 2) = -1;
        tau.at(3, 3) = 1;
        inst.presentation = family_two_param(Rational(-1), beta, tau);
        inst.quadric = q;
        inst.tau = tau;
        inst.candidate_lines = {{"V(Y3,Y4)", coord_line(2, 3), false, false},
                                {"V(Y1-Y2,Y3)", LineSpec{form(1, -1, 0, 0), LinearForm::unit(2)}, false, false},
                                {"V(Y1,Y2)", coord_line(0, 1), true, false},
                                {"V(Y1,Y3)", coord_line(0, 2), true, false}};
        inst.slice_candidates = {SliceFamily{coord_line(0, 3), vec4(1, 0, 0, 1)}};
        inst.description = "regular two-parameter family member carrying its graph automorphism";
    } else if (id == "prop1_b" || id == "prop1_b0") {
        bool variant0 = id == "prop1_b0";
        reject_unknown(id, params, variant0 ? std::initializer_list<const char*>{"alpha"}
                                            : std::initializer_list<const char*>{"alpha", "beta"});
        Rational alpha = get_param(params, "alpha", Rational(1));
        Rational beta = variant0 ? Rational(0) : get_param(params, "beta", Rational(1));
        if (alpha == 0 || (!variant0 && beta == 0))
            throw constraint_error(id, variant0 ? "requires alpha in k^x"
                                                : "requires alpha, beta in k^x");
        inst.params = variant0 ? std::map<std::string, Rational>{{"alpha", alpha}}
                               : std::map<std::string, Rational>{{"alpha", alpha}, {"beta", beta}};
        inst.presentation = prop1_b_presentation(alpha, beta);
        inst.quadric = q;
        inst.tau = QMatrix::identity(N);
        inst.candidate_lines = {{"V(Y3,Y4)", coord_line(2, 3), false, false},
                                {"V(Y1,Y2)", coord_line(0, 1), true, false}};
        inst.slice_candidates = {SliceFamily{coord_line(0, 3), vec4(1, 0, 0, 1)}};
        inst.description = variant0
                               ? "degenerate family member carrying an embedded line"
                               : "second family with point scheme exactly the quadric";
        if (variant0) inst.candidate_lines.push_back({"V(Y1,Y4)", coord_line(0, 3), true, true});
    } else {
        throw error("unknown catalog id: " + id);
    }
    return inst;
}

std::vector<CatalogInstance> catalog_default_instances() {
    std::vector<CatalogInstance> out;
    for (const auto& id : catalog_ids()) out.push_back(catalog_build(id, catalog_default_params(id)));
    return out;
}

} // namespace asreg
