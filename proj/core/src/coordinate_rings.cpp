#include "asreg/coordinate_rings.hpp"

#include "asreg/error.hpp"

namespace asreg {

QuadricSpec::QuadricSpec(LinearForm a, LinearForm b) : l1(std::move(a)), l2(std::move(b)) {
    QMatrix m(2, 4);
    for (size_t j = 0; j < 4; ++j) {
        m.at(0, j) = l1.c[j];
        m.at(1, j) = l2.c[j];
    }
    if (rref_rank(m).second != 2)
        throw precondition_error("quadric factors must be independent linear forms");
}

GraphRelationSpace thcr_relation_space(const QuadricSpec& q, const LinMapV& tau) {
    if (tau.rows != 4 || tau.cols != 4 || !tau.invertible())
        throw precondition_error("graph automorphism must be an invertible 4x4 map");

    // Unknowns: 16 tensor coefficients c_ij plus the multiple λ of ℓ1ℓ2.
    // Equation: Σ c_ij Y_i (τY)_j − λ·ℓ1ℓ2 = 0 as a symmetric quadratic,
    // i.e. 10 linear conditions on (c, λ).
    auto sym_index = [](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        // (a,b) with a<=b over 4 vars -> 0..9
        static const size_t base[4] = {0, 4, 7, 9};
        return base[a] + (b - a);
    };
    QMatrix sys(10, 17);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            // Y_i·(τY)_j = Σ_k τ_jk Y_i Y_k
            for (size_t k = 0; k < 4; ++k) {
                if (tau.at(j, k) == 0) continue;
                sys.at(sym_index(i, k), i * 4 + j) += tau.at(j, k);
            }
        }
    CommPoly quad = q.product_poly();
    for (const auto& [e, c] : quad.terms()) {
        size_t a = 0, b = 0;
        size_t seen = 0;
        for (size_t v = 0; v < 4; ++v)
            for (unsigned rep = 0; rep < e[v]; ++rep) {
                (seen++ == 0 ? a : b) = v;
            }
        sys.at(sym_index(a, b), 16) -= c;
    }
    auto kern = kernel_basis(sys);
    std::vector<std::vector<Rational>> projected;
    for (const auto& v : kern)
        projected.emplace_back(v.begin(), v.begin() + 16);
    GraphRelationSpace g;
    g.tau = tau;
    g.space = Subspace::from_rows(16, projected);
    if (g.space.dim() != 7)
        throw error("graph relation space has unexpected dimension " + std::to_string(g.space.dim()));
    return g;
}

bool check_surjection(const QuadraticPresentation& p, const QuadricSpec& q, const LinMapV& tau) {
    if (p.gen_count != 4) throw precondition_error("surjection check expects 4 generators");
    GraphRelationSpace s = thcr_relation_space(q, tau);
    return span_compare(p.relations, s.space) == SpanOrder::a_subset_b;
}

AClass extract_omega(GradedAlgebra& alg, const QuadricSpec& q, const LinMapV& tau) {
    if (!check_surjection(alg.presentation(), q, tau))
        throw precondition_error("presentation does not map onto the twisted coordinate ring");
    std::vector<Rational> u(q.l1.c.begin(), q.l1.c.end());
    std::vector<Rational> v(q.l2.c.begin(), q.l2.c.end());
    TensorElement t(2, tensor2_of_forms(4, u, v));
    AClass omega = alg.nf_class(t);
    if (omega.is_zero())
        throw precondition_error("quadric lift is zero in degree 2 (degenerate presentation)");
    return omega;
}

bool proportional_or_zero(const std::vector<Rational>& v, const std::vector<Rational>& w) {
    if (v.size() != w.size()) throw error("proportionality: length mismatch");
    size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return true;
    if (w[p] == 0) return false;
    Rational f = v[p] / w[p];
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != f * w[i]) return false;
    return true;
}

bool omega_multiple_check(GradedAlgebra& alg, const LinMapV& tau, const AClass& omega) {
    if (omega.is_zero()) throw precondition_error("omega must be nonzero");
    const size_t n = 4;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> ei(n), ej(n);
            ei[i] = 1;
            ej[j] = 1;
            std::vector<Rational> ti = apply_form(tau, ei);
            std::vector<Rational> tj = apply_form(tau, ej);
            std::vector<Rational> tens = tensor2_of_forms(n, ti, ej);
            std::vector<Rational> sub = tensor2_of_forms(n, tj, ei);
            for (size_t k = 0; k < tens.size(); ++k) tens[k] -= sub[k];
            AClass cls = alg.nf_class(TensorElement(2, std::move(tens)));
            if (!proportional_or_zero(cls.coords, omega.coords)) return false;
        }
    return true;
}

} // namespace asreg
