#include "asreg/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "asreg/catalog.hpp"
#include "asreg/rewriting.hpp"
#include "asreg/sampling.hpp"
#include "asreg/structure.hpp"

namespace asreg {

namespace {

const std::vector<size_t> kPolyDims = {1, 4, 10, 20, 35, 56};

std::vector<std::string> omega_instance_ids() {
    return {"poly4",     "ex_hung",   "plalg_b",    "plalg_c",  "plalg_d",   "plalg_e",
            "pltwist_a", "pltwist_b", "pltwist_c",  "pltwist_d", "pltwist_e", "prop1_a",
            "prop1_a_tw", "prop1_b",  "prop1_b0"};
}

bool dims_match(GradedAlgebra& alg, const std::vector<size_t>& expected) {
    for (size_t d = 0; d < expected.size(); ++d)
        if (alg.dim(d) != expected[d]) return false;
    return true;
}

std::string fail(const std::string& msg) { return msg; }

struct Ctx {
    std::ostringstream ev;
    bool ok = true;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            if (ev.tellp() > 0) ev << "; ";
            ev << msg;
        }
    }
    void note(const std::string& msg) {
        if (ev.tellp() > 0) ev << "; ";
        ev << msg;
    }
};

// ---- individual checks ----------------------------------------------------

CheckResult check_hilbert_poly4() {
    Ctx c;
    GradedAlgebra alg(catalog_build("poly4").presentation);
    c.require(dims_match(alg, kPolyDims), fail("dimension sequence differs"));
    if (c.ok) c.note("dims 1,4,10,20,35,56");
    return {"hilbert_poly4", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_hilbert_catalog() {
    Ctx c;
    // the ten fixed parameter choices, plus the two other flat catalog members
    const std::vector<std::string> ids = {"plalg_b",   "plalg_c",   "plalg_d",    "plalg_e",
                                          "pltwist_a", "pltwist_b", "pltwist_c",  "pltwist_d",
                                          "pltwist_e", "prop1_a_tw", "ex_hung",   "prop1_b0"};
    for (const auto& id : ids) {
        GradedAlgebra alg(catalog_build(id, catalog_default_params(id)).presentation);
        c.require(dims_match(alg, kPolyDims), fail(id + ": dimension sequence differs"));
    }
    if (c.ok) c.note(std::to_string(ids.size()) + " instances match 1,4,10,20,35,56");
    return {"hilbert_catalog", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_hilbert_displayed_families() {
    // The tau = id normal forms of the two quadric-exact families are kept
    // verbatim for the degree-2 and point-scheme machinery, but they are not
    // flat: the x4·x3·x1 overlap forces x1²x2 = 0 for generic parameters.
    // Their honest dimension data is recorded here rather than asserted.
    std::ostringstream ev;
    for (const auto& id : {"prop1_a", "prop1_b"}) {
        GradedAlgebra alg(catalog_build(id, catalog_default_params(id)).presentation);
        ev << id << " dims:";
        for (size_t d = 0; d <= 5; ++d) ev << " " << alg.dim(d);
        ev << "; ";
    }
    ev << "flat members carry the compatible graph automorphism (see prop1_a_tw)";
    return {"hilbert_displayed_families", "abstain", ev.str(), 0};
}

CheckResult check_hilbert_sq() {
    Ctx c;
    GradedAlgebra alg(catalog_build("s_q").presentation);
    c.require(dims_match(alg, {1, 4, 9, 16, 25}), fail("dimension sequence differs"));
    if (c.ok) c.note("dims 1,4,9,16,25");
    return {"hilbert_sq", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_omega_machinery() {
    Ctx c;
    for (const auto& id : omega_instance_ids()) {
        CatalogInstance inst = catalog_build(id, catalog_default_params(id));
        GradedAlgebra alg(inst.presentation);
        if (!check_surjection(inst.presentation, *inst.quadric, *inst.tau)) {
            c.require(false, fail(id + ": surjection fails"));
            continue;
        }
        try {
            AClass omega = extract_omega(alg, *inst.quadric, *inst.tau);
            c.require(!omega.is_zero(), fail(id + ": zero quadric lift"));
            c.require(omega_multiple_check(alg, *inst.tau, omega),
                      fail(id + ": twisted commutator not a multiple of the lift"));
        } catch (const error& e) {
            c.require(false, fail(id + ": " + e.what()));
        }
    }
    if (c.ok) c.note(std::to_string(omega_instance_ids().size()) + " instances");
    return {"omega_machinery", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_omega_notnormal_error() {
    Ctx c;
    CatalogInstance inst = catalog_build("ex_notnormal");
    GradedAlgebra alg(inst.presentation);
    c.require(check_surjection(inst.presentation, *inst.quadric, *inst.tau),
              fail("surjection should hold"));
    bool threw = false;
    try {
        extract_omega(alg, *inst.quadric, *inst.tau);
    } catch (const precondition_error&) {
        threw = true;
    }
    c.require(threw, fail("zero-class error not raised"));
    if (c.ok) c.note("quadric lift correctly reported as zero class");
    return {"omega_notnormal_error", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_normality_deg2() {
    Ctx c;
    {
        CatalogInstance inst = catalog_build("ex_notnormal");
        GradedAlgebra alg(inst.presentation);
        std::vector<Rational> t = tensor2(4, 1, 2);
        auto s = tensor2(4, 2, 1);
        for (size_t i = 0; i < 16; ++i) t[i] -= s[i];
        AClass omega = alg.nf_class(TensorElement(2, t));
        c.require(!omega.is_zero(), fail("ex_notnormal candidate lift is zero"));
        c.require(!is_normal_deg2(alg, omega).is_normal,
                  fail("ex_notnormal lift should not be normal"));
    }
    for (const auto& id : omega_instance_ids()) {
        CatalogInstance inst = catalog_build(id, catalog_default_params(id));
        GradedAlgebra alg(inst.presentation);
        AClass omega = extract_omega(alg, *inst.quadric, *inst.tau);
        c.require(is_normal_deg2(alg, omega).is_normal, fail(id + ": quadric lift not normal"));
    }
    if (c.ok) c.note("negative example plus " + std::to_string(omega_instance_ids().size()) + " normal lifts");
    return {"normality_deg2", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_adapted_generators() {
    Ctx c;
    struct Input {
        std::string label;
        QuadraticPresentation pres;
    };
    std::vector<Input> inputs;
    inputs.push_back({"poly4", catalog_build("poly4").presentation});
    inputs.push_back({"plalg_b(3)", catalog_build("plalg_b").presentation});
    inputs.push_back(
        {"plalg_b(-1)", catalog_build("plalg_b", {{"alpha", Rational(-1)}}).presentation});
    inputs.push_back(
        {"plalg_b(5)", catalog_build("plalg_b", {{"alpha", Rational(5)}}).presentation});
    inputs.push_back({"plalg_c", catalog_build("plalg_c").presentation});
    inputs.push_back({"plalg_d", catalog_build("plalg_d").presentation});
    inputs.push_back({"plalg_e", catalog_build("plalg_e").presentation});
    inputs.push_back({"prop1_b0(1)", catalog_build("prop1_b0").presentation});
    inputs.push_back(
        {"prop1_b0(2)", catalog_build("prop1_b0", {{"alpha", Rational(2)}}).presentation});
    inputs.push_back(
        {"prop1_b0(-1)", catalog_build("prop1_b0", {{"alpha", Rational(-1)}}).presentation});

    QuadricSpec q(LinearForm::unit(0), LinearForm::unit(1));
    bool saw_two_lines = false, saw_plane = false;
    for (auto& in : inputs) {
        try {
            GradedAlgebra alg(in.pres);
            AdaptedBasis ab = adapted_generators(alg, q);
            GradedAlgebra talg(ab.transformed);
            AClass omega = talg.nf_class(TensorElement(2, tensor2(4, 0, 1)));
            c.require(is_normal_deg2(talg, omega).is_normal,
                      fail(in.label + ": output lift not normal"));
            if (ab.branch == AdaptedBranch::plane) saw_plane = true;
            else saw_two_lines = true;
        } catch (const error& e) {
            c.require(false, fail(in.label + ": " + e.what()));
        }
    }
    c.require(saw_two_lines && saw_plane, fail("both proof branches must occur"));

    // The τ ≠ id example rejects with the offending pair; its id-twisted twin succeeds.
    {
        CatalogInstance eh = catalog_build("ex_hung");
        GradedAlgebra alg(eh.presentation);
        bool threw = false;
        try {
            adapted_generators(alg, q);
        } catch (const precondition_error& e) {
            threw = std::string(e.what()).find("(2,3)") != std::string::npos;
        }
        c.require(threw, fail("ex_hung should reject with pair (2,3)"));
    }
    if (c.ok) c.note("10 domain inputs across both branches; non-identity case rejected as documented");
    return {"adapted_generators", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

void check_candidates(Ctx& c, const CatalogInstance& inst) {
    SchemeReport rep = [&] {
        std::vector<std::pair<std::string, LineSpec>> cands;
        for (const auto& cl : inst.candidate_lines) cands.emplace_back(cl.name, cl.line);
        return scheme_report(inst.presentation, *inst.quadric, cands);
    }();
    c.require(rep.classification == SchemeClass::contains_quadric,
              fail(inst.id + ": quadric not contained"));
    for (size_t i = 0; i < inst.candidate_lines.size(); ++i) {
        const auto& want = inst.candidate_lines[i];
        const auto& got = rep.candidates[i];
        c.require(got.minors_vanish == want.expected_component,
                  fail(inst.id + " " + want.name + ": containment " +
                       (got.minors_vanish ? "true" : "false") + ", expected " +
                       (want.expected_component ? "true" : "false")));
        c.require(got.accepted == want.expected_extra,
                  fail(inst.id + " " + want.name + ": extra-structure " +
                       (got.accepted ? "true" : "false") + ", expected " +
                       (want.expected_extra ? "true" : "false")));
    }
}

CheckResult check_pointscheme_plalg_b() {
    Ctx c;
    check_candidates(c, catalog_build("plalg_b"));
    if (c.ok) c.note("quadric + V(Y3,Y4); 5 decoy lines rejected");
    return {"pointscheme_plalg_b", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_pointscheme_exact_quadric() {
    Ctx c;
    for (const auto& id : {"ex_hung", "prop1_a", "prop1_a_tw", "prop1_b", "prop1_b0"})
        check_candidates(c, catalog_build(id, catalog_default_params(id)));
    if (c.ok) c.note("divisible by Y1*Y2 with candidate lines classified as declared");
    return {"pointscheme_exact_quadric", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_sigma_direction() {
    Ctx c;
    CatalogInstance inst = catalog_build("plalg_b"); // alpha = 3
    MultilinearMatrix m = multilinearize(inst.presentation);
    std::vector<Rational> p{Rational(1), Rational(1), Rational(0), Rational(0)};
    std::vector<Rational> image = sigma_at(m, p);
    std::vector<Rational> want{Rational(2), Rational(1), Rational(0), Rational(0)};
    c.require(proj_equal(image, want), fail("kernel direction is not (2,1,0,0)"));

    // Negative control: the transposed reading of the rows picks the wrong
    // direction, so the convention really is pinned by this value.
    MultilinearMatrix flipped;
    for (size_t r = 0; r < 6; ++r)
        for (size_t j = 0; j < 4; ++j) {
            LinearForm f;
            for (size_t i = 0; i < 4; ++i) f.c[i] = inst.presentation.relations.basis.at(r, j * 4 + i);
            flipped.entry[r][j] = f;
        }
    std::vector<Rational> other = sigma_at(flipped, p);
    c.require(!proj_equal(other, want), fail("transposed convention unexpectedly matches"));
    if (c.ok) c.note("sigma(1,1,0,0) = (2,1,0,0); transposed convention rejected");
    return {"sigma_direction", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_sigma_charts() {
    Ctx c;
    size_t formulas = 0;
    for (const auto& id : {"plalg_b", "plalg_c", "plalg_d", "plalg_e"}) {
        CatalogInstance inst = catalog_build(id, catalog_default_params(id));
        MultilinearMatrix m = multilinearize(inst.presentation);
        for (size_t k = 0; k < inst.sigma_checks.size(); ++k) {
            const auto& sc = inst.sigma_checks[k];
            try {
                c.require(verify_sigma_formula(m, sc.chart, sc.formula, sc.samples),
                          fail(std::string(id) + " formula " + std::to_string(k) + " mismatch"));
            } catch (const error& e) {
                c.require(false, fail(std::string(id) + " formula " + std::to_string(k) + ": " + e.what()));
            }
            ++formulas;
        }
    }
    if (c.ok) c.note(std::to_string(formulas) + " chart/line formulas verified exactly");
    return {"sigma_charts", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_stabilizers() {
    Ctx c;
    std::map<char, QuadraticPresentation> base = {
        {'a', catalog_build("poly4").presentation},
        {'b', catalog_build("plalg_b").presentation},
        {'c', catalog_build("plalg_c").presentation},
        {'d', catalog_build("plalg_d").presentation},
        {'e', catalog_build("plalg_e").presentation},
    };
    for (char fam : {'a', 'b', 'c', 'd', 'e'}) {
        auto rng = protocol_rng(static_cast<uint64_t>(fam));
        for (int i = 0; i < 20; ++i) {
            LinMapV tau = sample_stabilizer_tau(fam, rng);
            c.require(stabilizes(base.at(fam), tau),
                      fail(std::string("family ") + fam + ": satisfying sample " +
                           std::to_string(i) + " fails"));
        }
        if (fam == 'a') continue; // no violations exist: see report note
        for (int i = 0; i < 20; ++i) {
            LinMapV tau = sample_stabilizer_violation(fam, rng);
            c.require(!stabilizes(base.at(fam), tau),
                      fail(std::string("family ") + fam + ": violation " + std::to_string(i) +
                           " unexpectedly stabilizes"));
        }
    }
    if (c.ok)
        c.note("20 satisfying samples per family pass; 20 violations per family (b)-(e) fail; "
               "family (a) has no violations (every invertible map preserves commutators)");
    return {"stabilizers", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_prop25_roundtrip() {
    Ctx c;
    for (const auto& id : {"pltwist_a", "pltwist_b", "pltwist_c", "pltwist_d", "pltwist_e"}) {
        CatalogInstance inst = catalog_build(id, catalog_default_params(id));
        QuadraticPresentation untwisted = zhang_twist(inst.presentation, inst.tau->inverse());
        GradedAlgebra ualg(untwisted);
        Subspace central = central_space(ualg);
        for (const auto& v : inst.untwisted_central)
            c.require(central.contains(v), fail(std::string(id) + ": declared central element missing"));
        GradedAlgebra talg(inst.presentation);
        for (size_t d = 0; d <= 5; ++d)
            c.require(talg.dim(d) == ualg.dim(d) && talg.dim(d) == kPolyDims[d],
                      fail(std::string(id) + ": dimension drift at degree " + std::to_string(d)));
    }
    if (c.ok) c.note("untwisting recovers the declared central pair; dimensions invariant to degree 5");
    return {"prop25_roundtrip", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_phi_proportional() {
    Ctx c;
    size_t count = 0;
    for (const auto& inst : catalog_default_instances()) {
        if (inst.normal_phi_decl.empty()) continue;
        GradedAlgebra alg(inst.presentation);
        for (const auto& v : inst.normal_phi_decl) {
            NormalityCertificate cert = is_normal_deg1(alg, v);
            if (!cert.is_normal || !cert.phi) {
                c.require(false, fail(inst.id + ": declared element not normal"));
                continue;
            }
            c.require(proportionality_scalar(cert.phi->a, inst.tau->a).has_value(),
                      fail(inst.id + ": normalizing map not proportional to the declared automorphism"));
            ++count;
        }
    }
    if (c.ok) c.note(std::to_string(count) + " normalizing maps proportional to declared automorphisms");
    return {"phi_proportional", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_multiplicity_quadric() {
    Ctx c;
    CommPoly quad = QuadricSpec(LinearForm::unit(0), LinearForm::unit(1)).product_poly();
    std::vector<CommPoly> polys{quad};
    for (int n = 0; n <= 3; ++n) {
        std::vector<Rational> base =
            n < 3 ? std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(n)}
                  : std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)};
        LineMult lm = line_multiplicity(polys, ProjLine(base, {Rational(1), Rational(1), Rational(0), Rational(0)}),
                                        Rational(0));
        c.require(!lm.line_contained && lm.value == 2,
                  fail("slice n=" + std::to_string(n) + " multiplicity " + std::to_string(lm.value)));
    }
    // Infinity chart and reparametrization sanity on one slice.
    LineMult inf = line_multiplicity(
        polys, ProjLine({Rational(0), Rational(0), Rational(1), Rational(0)},
                        {Rational(1), Rational(1), Rational(0), Rational(0)}),
        std::nullopt);
    c.require(!inf.line_contained && inf.value == 0, fail("infinity point wrongly on the quadric"));
    if (c.ok) c.note("multiplicity 2 at every slice parameter, 0 off the scheme");
    return {"multiplicity_quadric", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_multiplicity_beta0() {
    Ctx c;
    CatalogInstance inst = catalog_build("prop1_b0");
    MinorIdeal ideal = compute_minors(multilinearize(inst.presentation));
    LineMult triple = line_multiplicity(
        ideal.minors, ProjLine({Rational(0), Rational(0), Rational(1), Rational(0)},
                               {Rational(1), Rational(1), Rational(0), Rational(0)}),
        Rational(0));
    c.require(!triple.line_contained && triple.value == 3,
              fail("expected multiplicity 3 at (0,0,1,0), got " + std::to_string(triple.value)));
    for (int n = 0; n <= 2; ++n) {
        LineMult lm = line_multiplicity(
            ideal.minors, ProjLine({Rational(0), Rational(1), Rational(n), Rational(0)},
                                   {Rational(1), Rational(0), Rational(0), Rational(1)}),
            Rational(0));
        c.require(!lm.line_contained && lm.value == 2,
                  fail("expected multiplicity 2 at (0,1," + std::to_string(n) + ",0), got " +
                       std::to_string(lm.value)));
    }
    if (c.ok) c.note("triple point at (0,0,1,0); double points along V(Y1,Y4)");
    return {"multiplicity_beta0", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_multiplicity_reports() {
    Ctx c;
    {
        CatalogInstance inst = catalog_build("prop1_b");
        MultiplicityReport rep =
            multiplicity_report(inst.presentation, *inst.quadric, *inst.tau, inst.slice_candidates);
        c.require(rep.classification == MultClass::consistent_with_quadric,
                  fail(std::string("prop1_b: ") + to_string(rep.classification)));
    }
    {
        CatalogInstance inst = catalog_build("prop1_b0");
        MultiplicityReport rep =
            multiplicity_report(inst.presentation, *inst.quadric, *inst.tau, inst.slice_candidates);
        c.require(rep.classification == MultClass::quadric_with_embedded_line &&
                      rep.detail.find("Y4") != std::string::npos,
                  fail(std::string("prop1_b0: ") + to_string(rep.classification) + " " + rep.detail));
    }
    {
        CatalogInstance inst = catalog_build("ex_hung");
        MultiplicityReport rep =
            multiplicity_report(inst.presentation, *inst.quadric, *inst.tau, inst.slice_candidates);
        c.require(rep.classification == MultClass::consistent_with_quadric,
                  fail(std::string("ex_hung: ") + to_string(rep.classification)));
    }
    if (c.ok) c.note("classifications: consistent, embedded V(Y1,Y4), consistent");
    return {"multiplicity_reports", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_hv_search() {
    Ctx c;
    CatalogInstance target = catalog_build("ex_hung");
    auto match = hv_match_search(target.presentation, HvGrid::small_grid());
    if (match) {
        std::ostringstream os;
        os << "match at a=" << match->params.a << " q=" << match->params.q
           << " alpha=" << match->params.alpha << " beta=" << match->params.beta
           << " n=" << match->params.n;
        c.note(os.str());
    } else {
        c.require(false,
                  fail("no grid point matches; the diagonal twisting data forces equal factor maps, "
                       "which cannot produce this sign pattern over the rationals (see the companion "
                       "zhang-twist regression check for the relationship that does hold)"));
    }
    return {"hv_search", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_hv_zhang_regression() {
    Ctx c;
    // Pinned by search: the quadric-exact example is a Zhang twist of the
    // regular family member (β = −1, q = 1) by diag(−1,1,−1,1). Both sides
    // are flat with the same Hilbert function, so this is a genuine
    // dimension-preserving twist, unlike any t_n-formula image.
    CatalogInstance fam = catalog_build("prop1_a_tw");
    LinMapV tw(4, 4);
    tw.at(0, 0) = -1;
    tw.at(1, 1) = 1;
    tw.at(2, 2) = -1;
    tw.at(3, 3) = 1;
    QuadraticPresentation twisted = zhang_twist(fam.presentation, tw);
    CatalogInstance target = catalog_build("ex_hung");
    c.require(twisted.relations == target.presentation.relations,
              fail("pinned twist does not reproduce the target span"));
    GradedAlgebra a(fam.presentation), b(target.presentation);
    for (size_t d = 0; d <= 5; ++d)
        c.require(a.dim(d) == b.dim(d), fail("dimension drift at degree " + std::to_string(d)));
    if (c.ok)
        c.note("ex_hung = zhang_twist(prop1_a_tw(beta=-1,q=1), diag(-1,1,-1,1)); dimensions agree");
    return {"hv_zhang_regression", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_oracle_equivalence() {
    Ctx c;
    size_t confluent = 0, total = 0;
    for (const auto& inst : catalog_default_instances()) {
        ++total;
        RewriteSystem rw = RewriteSystem::orient(inst.presentation);
        if (!rw.confluent()) continue;
        ++confluent;
        GradedAlgebra alg(inst.presentation);
        for (size_t d = 3; d <= 5; ++d)
            c.require(rw.irreducible_count(d) == alg.dim(d),
                      fail(inst.id + ": oracle count differs at degree " + std::to_string(d)));
    }
    c.require(confluent > 0, fail("no confluent orientation in the catalog"));
    if (c.ok)
        c.note(std::to_string(confluent) + "/" + std::to_string(total) +
               " catalog orientations confluent; counts match at degrees 3-5");
    return {"oracle_equivalence", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_right_ideal_chain() {
    Ctx c;
    CatalogInstance inst = catalog_build("ex_notnormal");
    GradedAlgebra alg(inst.presentation);
    // The graded-lex orientation of this algebra is not confluent (the
    // overlap x3·x1·x2 resolves two ways), so the oracle abstains and
    // linear algebra is sole authority here.
    RewriteSystem rw = RewriteSystem::orient(inst.presentation);

    // chain generators x2, x3·x2, x3²·x2, ... (degree i+1)
    auto gen = [&](size_t i) {
        Word w(i + 1, 2);
        w[i] = 1;
        return TensorElement::from_word(w, 4);
    };
    for (size_t d = 2; d <= 6; ++d) {
        std::vector<TensorElement> gens;
        size_t prev = 0;
        for (size_t nidx = 0; nidx + 1 <= d; ++nidx) {
            gens.push_back(gen(nidx));
            size_t dim = alg.right_ideal_dim(gens, d);
            c.require(dim > prev || nidx == 0, fail("chain stalls at degree " + std::to_string(d) +
                                                    ", step " + std::to_string(nidx)));
            if (nidx > 0 && dim <= prev) break;
            if (rw.confluent())
                c.require(rw.right_ideal_dim(gens, d) == dim,
                          fail("oracle disagrees at degree " + std::to_string(d)));
            prev = dim;
        }
    }
    if (c.ok)
        c.note(rw.confluent()
                   ? "right-ideal chain strictly increases through degree 6 (oracle agrees)"
                   : "right-ideal chain strictly increases through degree 6 (orientation not "
                     "confluent; oracle abstains, linear algebra is sole authority)");
    return {"right_ideal_chain", c.ok ? "pass" : "fail", c.ev.str(), 0};
}

CheckResult check_series_notation() {
    CheckResult r;
    r.id = "series_notation_note";
    r.status = "abstain";
    r.evidence = "the source preliminaries display two inconsistent series normalizations for the "
                 "ambient algebra; this workbench adopts (1-t)^-4, which matches every computed "
                 "dimension sequence";
    return r;
}

using CheckFn = std::function<CheckResult()>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"hilbert_poly4", check_hilbert_poly4},
        {"hilbert_catalog", check_hilbert_catalog},
        {"hilbert_displayed_families", check_hilbert_displayed_families},
        {"hilbert_sq", check_hilbert_sq},
        {"omega_machinery", check_omega_machinery},
        {"omega_notnormal_error", check_omega_notnormal_error},
        {"normality_deg2", check_normality_deg2},
        {"adapted_generators", check_adapted_generators},
        {"pointscheme_plalg_b", check_pointscheme_plalg_b},
        {"pointscheme_exact_quadric", check_pointscheme_exact_quadric},
        {"sigma_direction", check_sigma_direction},
        {"sigma_charts", check_sigma_charts},
        {"stabilizers", check_stabilizers},
        {"prop25_roundtrip", check_prop25_roundtrip},
        {"phi_proportional", check_phi_proportional},
        {"multiplicity_quadric", check_multiplicity_quadric},
        {"multiplicity_beta0", check_multiplicity_beta0},
        {"multiplicity_reports", check_multiplicity_reports},
        {"hv_search", check_hv_search},
        {"hv_zhang_regression", check_hv_zhang_regression},
        {"oracle_equivalence", check_oracle_equivalence},
        {"right_ideal_chain", check_right_ideal_chain},
        {"series_notation_note", check_series_notation},
    };
    return reg;
}

} // namespace

std::vector<std::string> verify_check_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

VerificationReport verify_paper(const std::vector<std::string>& selection) {
    VerificationReport rep;
    for (const auto& [id, fn] : registry()) {
        if (!selection.empty() &&
            std::find(selection.begin(), selection.end(), id) == selection.end())
            continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = CheckResult{id, "fail", std::string("unhandled error: ") + e.what(), 0};
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
        rep.checks.push_back(std::move(r));
    }
    rep.notes.push_back(
        "sampling seeds, grids and sample points are fixed; reports are reproducible bit-for-bit");
    rep.notes.push_back(
        "the singular-locus computations distinguish the quadric V(Y1*Y2) from the plane "
        "intersection line V(Y1,Y2); source texts overload the same symbol for both, and the "
        "slice checks verify each reading separately");
    return rep;
}

LinMapV sample_stabilizer_tau(char family, std::mt19937_64& rng) {
    auto nz = [&]() { return sample_rational(rng, true); };
    auto any = [&]() { return sample_rational(rng); };
    if (family == 'a') return sample_invertible(rng, 4);
    if (family == 'b') {
        while (true) {
            LinMapV t(4, 4);
            t.at(0, 0) = 1;
            t.at(1, 1) = nz();
            t.at(2, 2) = any();
            t.at(2, 3) = any();
            t.at(3, 2) = any();
            t.at(3, 3) = any();
            Rational det = t.at(2, 2) * t.at(3, 3) - t.at(2, 3) * t.at(3, 2);
            if (det == 0) continue;
            return t.scaled(nz());
        }
    }
    if (family == 'c') {
        // both displayed forms: diagonal upper block, or the plane swap
        bool swap = rng() % 2 == 1;
        LinMapV t(4, 4);
        if (swap) {
            t.at(0, 1) = 1;
            t.at(1, 0) = 1;
        } else {
            t.at(0, 0) = 1;
            t.at(1, 1) = 1;
        }
        Rational t31 = any();
        t.at(2, 0) = t31;
        t.at(2, 1) = -t31;
        t.at(2, 2) = nz();
        t.at(3, 0) = any();
        t.at(3, 1) = any();
        t.at(3, 2) = any();
        t.at(3, 3) = 1;
        return t.scaled(nz());
    }
    if (family == 'd') {
        while (true) {
            // displayed identity: t12·t21 + t11·t22 + t34·t43 − t33·t44 = 0,
            // on either the diagonal or the plane-swap upper block
            bool swap = rng() % 2 == 1;
            LinMapV t(4, 4);
            Rational upper;
            if (swap) {
                t.at(0, 1) = nz();
                t.at(1, 0) = nz();
                upper = t.at(0, 1) * t.at(1, 0);
            } else {
                t.at(0, 0) = nz();
                t.at(1, 1) = nz();
                upper = t.at(0, 0) * t.at(1, 1);
            }
            t.at(2, 0) = any();
            t.at(2, 1) = any();
            t.at(2, 2) = nz();
            t.at(2, 3) = any();
            t.at(3, 0) = any();
            t.at(3, 1) = any();
            t.at(3, 2) = any();
            t.at(3, 3) = (upper + t.at(2, 3) * t.at(3, 2)) / t.at(2, 2);
            if (!t.invertible()) continue;
            return t.scaled(nz());
        }
    }
    if (family == 'e') {
        LinMapV t(4, 4);
        t.at(0, 0) = 1;
        t.at(1, 1) = nz();
        t.at(2, 0) = any();
        t.at(2, 2) = nz();
        t.at(3, 0) = any();
        t.at(3, 1) = any();
        t.at(3, 2) = any();
        t.at(3, 3) = 1; // displayed identity: t11·t22 = t22·t44
        return t.scaled(nz());
    }
    throw error("unknown stabilizer family");
}

LinMapV sample_stabilizer_violation(char family, std::mt19937_64& rng) {
    auto nz = [&]() { return sample_rational(rng, true); };
    if (family == 'b') {
        // corrupt one structural zero of the block shape
        static const std::pair<size_t, size_t> spots[] = {
            {0, 1}, {1, 0}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}, {3, 1}};
        while (true) {
            LinMapV t = sample_stabilizer_tau('b', rng);
            auto [i, j] = spots[rng() % 10];
            t.at(i, j) = nz();
            if (t.invertible()) return t;
        }
    }
    if (family == 'c') {
        auto diag_base = [&]() {
            LinMapV t = QMatrix::identity(4);
            Rational t31 = sample_rational(rng);
            t.at(2, 0) = t31;
            t.at(2, 1) = -t31;
            t.at(2, 2) = nz();
            t.at(3, 0) = sample_rational(rng);
            t.at(3, 1) = sample_rational(rng);
            t.at(3, 2) = sample_rational(rng);
            return t.scaled(nz());
        };
        while (true) {
            LinMapV t = diag_base();
            switch (rng() % 3) {
                case 0: t.at(2, 1) = t.at(2, 1) + nz(); break; // breaks t32 = −t31
                case 1: t.at(1, 1) = t.at(1, 1) * (1 + abs(nz())); break; // breaks t11 = t22
                case 2: t.at(2, 3) = nz(); break; // breaks the zero at (3,4)
            }
            if (t.invertible()) return t;
        }
    }
    if (family == 'd') {
        auto diag_base = [&]() {
            while (true) {
                LinMapV t(4, 4);
                t.at(0, 0) = nz();
                t.at(1, 1) = nz();
                t.at(2, 0) = sample_rational(rng);
                t.at(2, 1) = sample_rational(rng);
                t.at(2, 2) = nz();
                t.at(2, 3) = sample_rational(rng);
                t.at(3, 0) = sample_rational(rng);
                t.at(3, 1) = sample_rational(rng);
                t.at(3, 2) = sample_rational(rng);
                t.at(3, 3) = (t.at(0, 0) * t.at(1, 1) + t.at(2, 3) * t.at(3, 2)) / t.at(2, 2);
                if (t.invertible()) return t;
            }
        };
        while (true) {
            LinMapV t = diag_base();
            if (rng() % 2 == 0) {
                t.at(3, 3) = t.at(3, 3) + nz(); // breaks the displayed identity
            } else {
                t.at(0, 1) = nz(); // leaves the block shape
            }
            if (t.invertible()) return t;
        }
    }
    if (family == 'e') {
        while (true) {
            LinMapV t = sample_stabilizer_tau('e', rng);
            switch (rng() % 3) {
                case 0: t.at(3, 3) = t.at(3, 3) * (1 + abs(nz())); break; // t44 ≠ t11
                case 1: t.at(0, 1) = nz(); break;
                case 2: t.at(2, 1) = nz(); break;
            }
            if (t.invertible()) return t;
        }
    }
    throw error("no violation sampler for this family");
}

} // namespace asreg
