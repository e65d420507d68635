#include "asreg/structure.hpp"

#include <algorithm>

#include "asreg/error.hpp"

namespace asreg {

std::optional<Rational> proportionality_scalar(const std::vector<Rational>& v,
                                               const std::vector<Rational>& w) {
    if (v.size() != w.size()) throw error("proportionality: length mismatch");
    size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return Rational(0);
    if (w[p] == 0) return std::nullopt;
    Rational f = v[p] / w[p];
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != f * w[i]) return std::nullopt;
    return f;
}

Subspace central_space(GradedAlgebra& alg) {
    const size_t n = alg.gen_count();
    size_t a2 = alg.dim(2);
    QMatrix sys(n * a2, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            auto nf = alg.normal_form(TensorElement(2, commutator2(n, i, j)));
            for (size_t c = 0; c < a2; ++c) sys.at(j * a2 + c, i) = nf[c];
        }
    auto kern = kernel_basis(sys);
    return Subspace::from_rows(n, kern);
}

namespace {

std::vector<Rational> unit_vec(size_t n, size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

} // namespace

NormalityCertificate is_normal_deg1(GradedAlgebra& alg, const std::vector<Rational>& v) {
    const size_t n = alg.gen_count();
    if (v.size() != n) throw error("element has wrong arity");
    if (all_zero(v)) throw precondition_error("normality of the zero element is undefined");

    NormalityCertificate cert;
    cert.element = TensorElement(1, v);

    size_t a2 = alg.dim(2);
    std::vector<std::vector<Rational>> left(n), right(n);
    for (size_t j = 0; j < n; ++j) {
        auto ej = unit_vec(n, j);
        left[j] = alg.normal_form(TensorElement(2, tensor2_of_forms(n, v, ej)));
        right[j] = alg.normal_form(TensorElement(2, tensor2_of_forms(n, ej, v)));
    }
    Subspace lspan = Subspace::from_rows(a2, left);
    Subspace rspan = Subspace::from_rows(a2, right);
    if (span_compare(lspan, rspan) != SpanOrder::equal) {
        cert.is_normal = false;
        for (size_t j = 0; j < n; ++j) {
            if (!lspan.contains(right[j])) {
                cert.witness = AClass{2, right[j]};
                cert.witness_side = "right";
                return cert;
            }
            if (!rspan.contains(left[j])) {
                cert.witness = AClass{2, left[j]};
                cert.witness_side = "left";
                return cert;
            }
        }
        return cert;
    }
    cert.is_normal = true;

    // Solve v·x_j = Σ_k φ_jk x_k·v for each j.
    QMatrix rmat(a2, n);
    for (size_t k = 0; k < n; ++k)
        for (size_t c = 0; c < a2; ++c) rmat.at(c, k) = right[k][c];
    LinMapV phi(n, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> sol;
        if (!solve_linear(rmat, left[j], sol))
            throw error("normalizing map solve failed despite span equality");
        for (size_t k = 0; k < n; ++k) phi.at(j, k) = sol[k];
    }
    cert.phi = std::move(phi);
    return cert;
}

NormalityCertificate is_normal_deg2(GradedAlgebra& alg, const AClass& omega) {
    const size_t n = alg.gen_count();
    if (omega.degree != 2) throw error("expected a degree-2 class");
    if (omega.is_zero()) throw precondition_error("normality of the zero class is undefined");

    NormalityCertificate cert;
    cert.element = alg.lift(omega);

    size_t a3 = alg.dim(3);
    std::vector<std::vector<Rational>> left(n), right(n);
    for (size_t j = 0; j < n; ++j) {
        left[j] = alg.multiply(omega, alg.generator_class(j)).coords;
        right[j] = alg.multiply(alg.generator_class(j), omega).coords;
    }
    Subspace lspan = Subspace::from_rows(a3, left);
    Subspace rspan = Subspace::from_rows(a3, right);
    cert.is_normal = span_compare(lspan, rspan) == SpanOrder::equal;
    if (!cert.is_normal) {
        for (size_t j = 0; j < n; ++j) {
            if (!lspan.contains(right[j])) {
                cert.witness = AClass{3, right[j]};
                cert.witness_side = "right";
                break;
            }
            if (!rspan.contains(left[j])) {
                cert.witness = AClass{3, left[j]};
                cert.witness_side = "left";
                break;
            }
        }
    }
    return cert;
}

Rational normal_pair_scalar(GradedAlgebra& alg, const std::vector<Rational>& v,
                            const std::vector<Rational>& w) {
    const size_t n = alg.gen_count();
    auto vw = alg.normal_form(TensorElement(2, tensor2_of_forms(n, v, w)));
    if (all_zero(vw))
        throw precondition_error("product of the pair vanishes (domain hypothesis violated)");
    if (!is_normal_deg1(alg, v).is_normal) throw precondition_error("first element is not normal");
    if (!is_normal_deg1(alg, w).is_normal) throw precondition_error("second element is not normal");
    auto wv = alg.normal_form(TensorElement(2, tensor2_of_forms(n, w, v)));
    auto f = proportionality_scalar(vw, wv);
    if (!f) throw error("normal pair classes are not proportional");
    return *f;
}

const char* to_string(AdaptedBranch b) {
    switch (b) {
        case AdaptedBranch::two_lines_commutative: return "two_lines_commutative";
        case AdaptedBranch::two_lines_noncommutative: return "two_lines_noncommutative";
        default: return "plane";
    }
}

namespace {

std::vector<Rational> lin_comb(const Rational& a, const std::vector<Rational>& u,
                               const Rational& b, const std::vector<Rational>& v) {
    std::vector<Rational> r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = a * u[i] + b * v[i];
    return r;
}

} // namespace

AdaptedBasis adapted_generators(GradedAlgebra& alg, const QuadricSpec& q) {
    const size_t n = alg.gen_count();
    if (n != 4) throw precondition_error("adapted generators expect 4 generators");

    std::vector<Rational> X1(q.l1.c.begin(), q.l1.c.end());
    std::vector<Rational> X2(q.l2.c.begin(), q.l2.c.end());

    auto omega = alg.normal_form(TensorElement(2, tensor2_of_forms(n, X1, X2)));
    if (all_zero(omega))
        throw precondition_error("quadric lift is zero in degree 2 (degenerate presentation)");

    auto comm_scalar = [&](const std::vector<Rational>& u, const std::vector<Rational>& v,
                           const char* pair) {
        auto t = tensor2_of_forms(n, u, v);
        auto s = tensor2_of_forms(n, v, u);
        for (size_t i = 0; i < t.size(); ++i) t[i] -= s[i];
        auto cls = alg.normal_form(TensorElement(2, std::move(t)));
        auto f = proportionality_scalar(cls, omega);
        if (!f)
            throw precondition_error(std::string("commutation scalar not extractable for pair ") + pair);
        return *f;
    };

    auto in_span = [&](const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v) {
        return Subspace::from_rows(n, rows).contains(v);
    };
    auto first_outside = [&](const std::vector<std::vector<Rational>>& rows) {
        Subspace s = Subspace::from_rows(n, rows);
        for (size_t k = 0; k < n; ++k) {
            auto e = unit_vec(n, k);
            if (!s.contains(e)) return e;
        }
        throw error("no basis vector outside the span");
    };

    std::vector<Rational> X3 = first_outside({X1, X2});
    Rational a12 = comm_scalar(X1, X2, "(1,2)");
    Rational a13 = comm_scalar(X1, X3, "(1,3)");
    Rational a23 = comm_scalar(X2, X3, "(2,3)");

    std::vector<Rational> y(n);
    for (size_t i = 0; i < n; ++i) y[i] = a23 * X1[i] - a13 * X2[i] + a12 * X3[i];

    AdaptedBranch branch;
    std::vector<std::vector<Rational>> basis;

    bool y_zero = all_zero(y);
    bool y_on_x1 = !y_zero && proportionality_scalar(y, X1).has_value();
    bool y_on_x2 = !y_zero && proportionality_scalar(y, X2).has_value();

    if (y_zero || (a12 == 0 && !y_on_x1 && !y_on_x2)) {
        // X1, X2 commute and Ω = class(X1X2) already commutes with the trio;
        // any completion of the basis works.
        branch = AdaptedBranch::two_lines_commutative;
        basis = {X1, X2, X3, first_outside({X1, X2, X3})};
    } else if (y_on_x1 || y_on_x2) {
        branch = AdaptedBranch::plane;
        if (y_on_x2) std::swap(X1, X2); // relabel the planes of the quadric
        Rational b23 = comm_scalar(X2, X3, "(2,3)");
        std::vector<Rational> w = first_outside({X1, X2, X3});
        Rational c3 = comm_scalar(X3, w, "(3,w)");
        std::vector<Rational> z = c3 == 0 ? w : lin_comb(b23, w, c3, X2);
        Rational c2 = comm_scalar(X2, z, "(2,z)");
        std::vector<Rational> X4 = c2 == 0 ? z : lin_comb(b23, z, -c2, X3);
        basis = {X1, X2, X3, X4};
    } else {
        branch = AdaptedBranch::two_lines_noncommutative;
        std::vector<Rational> w = first_outside({X1, X2, y});
        Rational c1 = comm_scalar(X1, w, "(1,w)");
        std::vector<Rational> z = c1 == 0 ? w : lin_comb(a12, w, -c1, X2);
        Rational c2 = comm_scalar(X2, z, "(2,z)");
        std::vector<Rational> X4 = c2 == 0 ? z : lin_comb(a12, z, c2, X1);
        basis = {X1, X2, y, X4};
    }

    LinMapV cob(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cob.at(i, j) = basis[i][j];
    if (!cob.invertible()) throw error("adapted basis is degenerate");
    LinMapV d = cob.inverse();

    std::vector<std::vector<Rational>> new_rows;
    const QMatrix& rel = alg.presentation().relations.basis;
    for (size_t r = 0; r < rel.rows; ++r) new_rows.push_back(act_pair(d, d, rel.row(r), n));
    QuadraticPresentation transformed =
        QuadraticPresentation::from_tensors(n, new_rows, alg.presentation().gen_names);

    // The construction promises a normal Ω in the new coordinates.
    GradedAlgebra talg(transformed);
    AClass new_omega = talg.nf_class(TensorElement(2, tensor2(n, 0, 1)));
    if (new_omega.is_zero() || !is_normal_deg2(talg, new_omega).is_normal)
        throw error("adapted basis failed to normalize the quadric lift");

    return AdaptedBasis{std::move(cob), std::move(transformed), branch};
}

QuadraticPresentation quotient_by_deg1(const QuadraticPresentation& p, const std::vector<Rational>& v) {
    const size_t n = p.gen_count;
    if (v.size() != n) throw error("element has wrong arity");
    size_t piv = 0;
    while (piv < n && v[piv] == 0) ++piv;
    if (piv == n) throw precondition_error("cannot quotient by the zero element");

    // π kills v and keeps the coordinates other than the pivot.
    QMatrix proj(n - 1, n);
    size_t row = 0;
    std::vector<std::string> names;
    for (size_t k = 0; k < n; ++k) {
        if (k == piv) continue;
        proj.at(row, k) = 1;
        proj.at(row, piv) = -v[k] / v[piv];
        names.push_back(p.gen_names[k]);
        ++row;
    }

    std::vector<std::vector<Rational>> rows;
    const QMatrix& rel = p.relations.basis;
    for (size_t r = 0; r < rel.rows; ++r) {
        QMatrix c(n, n, rel.row(r));
        QMatrix image = proj * c * proj.transpose();
        if (!image.is_zero()) rows.push_back(image.a);
    }
    return QuadraticPresentation::from_tensors(n - 1, rows, names);
}

bool normalizing_sequence_check(GradedAlgebra& alg, const std::vector<Rational>& v1,
                                const std::vector<Rational>& v2) {
    const size_t n = alg.gen_count();
    QMatrix pair(2, n);
    for (size_t j = 0; j < n; ++j) {
        pair.at(0, j) = v1[j];
        pair.at(1, j) = v2[j];
    }
    if (rref_rank(pair).second != 2) throw precondition_error("sequence elements must be independent");

    if (!is_normal_deg1(alg, v1).is_normal) return false;

    QuadraticPresentation quo = quotient_by_deg1(alg.presentation(), v1);
    size_t piv = 0;
    while (v1[piv] == 0) ++piv;
    std::vector<Rational> v2_img;
    for (size_t k = 0; k < n; ++k) {
        if (k == piv) continue;
        v2_img.push_back(v2[k] - v1[k] * v2[piv] / v1[piv]);
    }
    GradedAlgebra qalg(quo);
    if (!is_normal_deg1(qalg, v2_img).is_normal) return false;

    // Regularity evidence: left multiplication by v1 injective up to degree 4.
    AClass v1c = alg.nf_class(TensorElement(1, v1));
    for (size_t d = 0; d <= 4; ++d) {
        size_t ad = alg.dim(d);
        Echelon span(alg.dim(d + 1));
        size_t rank_in = 0;
        for (size_t j = 0; j < ad; ++j) {
            AClass unit{d, std::vector<Rational>(ad)};
            unit.coords[j] = 1;
            if (span.insert(alg.multiply(v1c, unit).coords)) ++rank_in;
        }
        if (rank_in != ad) return false;
    }
    return true;
}

} // namespace asreg
