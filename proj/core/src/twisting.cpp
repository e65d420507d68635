#include "asreg/twisting.hpp"

#include "asreg/error.hpp"

namespace asreg {

QuadraticPresentation zhang_twist(const QuadraticPresentation& p, const LinMapV& tau) {
    if (!tau.invertible()) throw precondition_error("twist by a singular map");
    size_t n = p.gen_count;
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < p.relations.dim(); ++r)
        rows.push_back(act_first(tau, p.relations.basis.row(r), n));
    return QuadraticPresentation::from_tensors(n, rows, p.gen_names);
}

bool stabilizes(const QuadraticPresentation& p, const LinMapV& tau) {
    if (!tau.invertible()) throw precondition_error("stabilizer test with a singular map");
    size_t n = p.gen_count;
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < p.relations.dim(); ++r)
        rows.push_back(act_pair(tau, tau, p.relations.basis.row(r), n));
    Subspace image = Subspace::from_rows(n * n, rows);
    return span_compare(image, p.relations) == SpanOrder::equal;
}

QuadraticPresentation pair_twist(const QuadraticPresentation& p, const TwistMap& m) {
    if (!m.f.invertible() || !m.g.invertible()) throw precondition_error("twist by a singular map");
    size_t n = p.gen_count;
    std::vector<std::vector<Rational>> rows;
    for (size_t r = 0; r < p.relations.dim(); ++r)
        rows.push_back(act_pair(m.f, m.g, p.relations.basis.row(r), n));
    return QuadraticPresentation::from_tensors(n, rows, p.gen_names);
}

TwistMap hv_twist_map(const LinMapV& t, const LinMapV& tau, long n) {
    if (!t.invertible() || !tau.invertible())
        throw precondition_error("twisting-system data must be invertible");
    LinMapV tn = t.power(n);
    TwistMap m;
    m.f = tau.power(-n) * tn;
    m.g = tau.power(-1 - n) * tn * tau;
    return m;
}

const char* to_string(OreCheck c) {
    switch (c) {
        case OreCheck::ok: return "ok";
        case OreCheck::sigma_not_automorphism: return "sigma_not_automorphism";
        default: return "leibniz_fails";
    }
}

OreCheck sigma_derivation_check(const OreData& o) {
    const size_t n = o.base.gen_count;
    if (!o.sigma_map.invertible()) throw precondition_error("sigma must be invertible");
    if (o.delta.size() != n) throw error("delta must assign a value to every base generator");

    {
        std::vector<std::vector<Rational>> rows;
        for (size_t r = 0; r < o.base.relations.dim(); ++r)
            rows.push_back(act_pair(o.sigma_map, o.sigma_map, o.base.relations.basis.row(r), n));
        Subspace image = Subspace::from_rows(n * n, rows);
        if (span_compare(image, o.base.relations) != SpanOrder::equal)
            return OreCheck::sigma_not_automorphism;
    }

    GradedAlgebra alg(o.base);
    for (size_t r = 0; r < o.base.relations.dim(); ++r) {
        std::vector<Rational> acc(pow_sz(n, 3));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const Rational& c = o.base.relations.basis.at(r, i * n + j);
                if (c == 0) continue;
                std::vector<Rational> ei(n), ej(n);
                ei[i] = 1;
                ej[j] = 1;
                TensorElement sig_i(1, apply_form(o.sigma_map, ei));
                TensorElement xj(1, ej);
                TensorElement t1 = TensorElement::concat(sig_i, o.delta[j], n);
                TensorElement t2 = TensorElement::concat(o.delta[i], xj, n);
                for (size_t k = 0; k < acc.size(); ++k)
                    acc[k] += c * (t1.coords[k] + t2.coords[k]);
            }
        auto nf = alg.normal_form(TensorElement(3, std::move(acc)));
        for (const auto& x : nf)
            if (x != 0) return OreCheck::leibniz_fails;
    }
    return OreCheck::ok;
}

QuadraticPresentation family_two_param(const Rational& alpha, const Rational& beta,
                                       const LinMapV& tau) {
    const size_t n = 4;
    auto tw = [&](size_t i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        return apply_form(tau, e);
    };
    auto unit = [&](size_t i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        return e;
    };
    auto minus = [](std::vector<Rational> a, const std::vector<Rational>& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    };
    auto scale = [](std::vector<Rational> a, const Rational& s) {
        for (auto& x : a) x *= s;
        return a;
    };
    std::vector<std::vector<Rational>> rows;
    // α·x1^τ⊗x2 − x2^τ⊗x1
    rows.push_back(minus(scale(tensor2_of_forms(n, tw(0), unit(1)), alpha),
                         tensor2_of_forms(n, tw(1), unit(0))));
    rows.push_back(minus(tensor2_of_forms(n, tw(0), unit(2)), tensor2_of_forms(n, tw(2), unit(0))));
    rows.push_back(minus(tensor2_of_forms(n, tw(0), unit(3)), tensor2_of_forms(n, tw(3), unit(0))));
    rows.push_back(minus(tensor2_of_forms(n, tw(1), unit(2)), tensor2_of_forms(n, tw(2), unit(1))));
    rows.push_back(minus(tensor2_of_forms(n, tw(1), unit(3)), tensor2_of_forms(n, tw(3), unit(1))));
    // x3^τ⊗x4 − x4^τ⊗x3 − β·x1^τ⊗x2
    rows.push_back(minus(minus(tensor2_of_forms(n, tw(2), unit(3)), tensor2_of_forms(n, tw(3), unit(2))),
                         scale(tensor2_of_forms(n, tw(0), unit(1)), beta)));
    return QuadraticPresentation::from_tensors(n, rows);
}

HvGrid HvGrid::small_grid() {
    HvGrid g;
    g.a_range = {rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(-1, 2)};
    g.q_range = g.a_range;
    g.alpha_range = {rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(-1, 2)};
    g.beta_range = g.alpha_range;
    g.n_range = {0, 1, 2};
    return g;
}

HvGrid HvGrid::wide_grid() {
    HvGrid g = small_grid();
    for (long v : {3L, -3L}) {
        g.a_range.push_back(rat(v));
        g.q_range.push_back(rat(v));
        g.alpha_range.push_back(rat(v));
        g.beta_range.push_back(rat(v));
        g.alpha_range.push_back(rat(1, v));
        g.beta_range.push_back(rat(1, v));
    }
    g.n_range = {0, 1, 2, 3};
    return g;
}

std::optional<HvMatch> hv_match_search(const QuadraticPresentation& target, const HvGrid& grid) {
    for (const auto& a : grid.a_range)
        for (const auto& q : grid.q_range)
            for (const auto& alpha : grid.alpha_range)
                for (const auto& beta : grid.beta_range)
                    for (long n : grid.n_range) {
                        if (a == 0 || q == 0) continue;
                        LinMapV t = QMatrix::identity(4);
                        t.at(0, 0) = a;
                        LinMapV tau_inv = QMatrix::identity(4);
                        tau_inv.at(0, 0) = -1 / q;
                        tau_inv.at(1, 1) = -q;
                        tau_inv.at(2, 2) = -1;
                        LinMapV tau = tau_inv.inverse();
                        TwistMap map = hv_twist_map(t, tau, n);
                        QuadraticPresentation inst = family_two_param(alpha, beta, tau);
                        QuadraticPresentation twisted = pair_twist(inst, map);
                        if (twisted.relations == target.relations)
                            return HvMatch{HvParams{a, q, alpha, beta, n}, map};
                    }
    return std::nullopt;
}

} // namespace asreg
