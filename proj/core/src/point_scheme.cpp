#include "asreg/point_scheme.hpp"

#include <algorithm>

namespace asreg {

QMatrix MultilinearMatrix::evaluate(const std::vector<Rational>& p) const {
    QMatrix m(6, 4);
    for (size_t r = 0; r < 6; ++r)
        for (size_t j = 0; j < 4; ++j) m.at(r, j) = entry[r][j].evaluate(p);
    return m;
}

std::vector<Rational> MultilinearMatrix::row_tensor(size_t r) const {
    std::vector<Rational> t(16);
    for (size_t j = 0; j < 4; ++j)
        for (size_t i = 0; i < 4; ++i) t[i * 4 + j] = entry[r][j].c[i];
    return t;
}

MultilinearMatrix multilinearize(const QuadraticPresentation& p) {
    if (p.gen_count != 4) throw precondition_error("multilinearization expects 4 generators");
    if (p.relations.dim() != 6)
        throw precondition_error("multilinearization expects a 6-dimensional relation span");
    MultilinearMatrix m;
    for (size_t r = 0; r < 6; ++r)
        for (size_t j = 0; j < 4; ++j) {
            LinearForm f;
            for (size_t i = 0; i < 4; ++i) f.c[i] = p.relations.basis.at(r, i * 4 + j);
            m.entry[r][j] = f;
        }
    return m;
}

bool MinorIdeal::all_zero() const {
    return std::all_of(minors.begin(), minors.end(), [](const CommPoly& p) { return p.is_zero(); });
}

namespace {

CommPoly det_poly(const std::vector<std::vector<CommPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    CommPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<CommPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<CommPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        CommPoly term = m[0][j] * det_poly(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

MinorIdeal compute_minors(const MultilinearMatrix& m) {
    MinorIdeal ideal;
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = a + 1; b < 6; ++b)
            for (size_t c = b + 1; c < 6; ++c)
                for (size_t d = c + 1; d < 6; ++d) {
                    std::vector<std::vector<CommPoly>> mat(4, std::vector<CommPoly>(4));
                    size_t rows[4] = {a, b, c, d};
                    for (size_t i = 0; i < 4; ++i)
                        for (size_t j = 0; j < 4; ++j) mat[i][j] = m.entry[rows[i]][j].to_poly();
                    ideal.minors.push_back(det_poly(mat));
                }
    return ideal;
}

LineParam line_from_planes(const LinearForm& m1, const LinearForm& m2) {
    QMatrix planes(2, 4);
    for (size_t j = 0; j < 4; ++j) {
        planes.at(0, j) = m1.c[j];
        planes.at(1, j) = m2.c[j];
    }
    auto kern = kernel_basis(planes);
    if (kern.size() != 2) throw precondition_error("the two forms do not cut out a line");
    return LineParam{kern[0], kern[1]};
}

namespace {

bool vanishes_on_line(const CommPoly& p, const LineParam& line) {
    auto coeffs = restrict_to_line_binary(p, line.base, line.dir);
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

} // namespace

bool contains_component(const MinorIdeal& ideal, const ComponentSpec& spec) {
    if (std::holds_alternative<PlanePairSpec>(spec)) {
        const auto& pp = std::get<PlanePairSpec>(spec);
        if (pp.l1.is_zero() || pp.l2.is_zero()) throw precondition_error("malformed plane pair");
        for (const auto& m : ideal.minors)
            if (!poly_divisible(m, {pp.l1, pp.l2}).first) return false;
        return true;
    }
    const auto& ln = std::get<LineSpec>(spec);
    LineParam param = line_from_planes(ln.m1, ln.m2);
    for (const auto& m : ideal.minors)
        if (!vanishes_on_line(m, param)) return false;
    return true;
}

std::vector<Rational> sigma_at(const MultilinearMatrix& m, const std::vector<Rational>& p) {
    QMatrix mp = m.evaluate(p);
    auto kern = kernel_basis(mp);
    if (kern.empty()) throw sigma_off_scheme("point is not on the point scheme (full rank)");
    if (kern.size() > 1)
        throw sigma_undetermined("automorphism is not determined at this point (rank <= 2)");
    return kern[0];
}

bool proj_equal(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    if (p.size() != q.size()) throw error("projective comparison: arity mismatch");
    bool pz = std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
    bool qz = std::all_of(q.begin(), q.end(), [](const Rational& c) { return c == 0; });
    if (pz || qz) return false;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] * q[j] - p[j] * q[i] != 0) return false;
    return true;
}

bool verify_sigma_formula(const MultilinearMatrix& m, size_t chart,
                          const std::array<CommPoly, 4>& formula,
                          const std::vector<std::vector<Rational>>& samples) {
    for (const auto& p : samples) {
        if (p.at(chart) == 0) throw precondition_error("sample has zero chart coordinate");
        std::vector<Rational> s = sigma_at(m, p); // throws if the sample is off P
        std::vector<Rational> f(4);
        for (size_t i = 0; i < 4; ++i) f[i] = formula[i].evaluate(p);
        if (!proj_equal(s, f)) return false;
    }
    return true;
}

std::vector<CommPoly> residual_polynomials(const MinorIdeal& ideal, const QuadricSpec& q) {
    if (ideal.all_zero())
        throw precondition_error("all minors vanish identically (whole-space point scheme)");
    std::vector<CommPoly> out;
    for (const auto& m : ideal.minors) {
        auto [ok, quot] = poly_divisible(m, {q.l1, q.l2});
        if (!ok) throw precondition_error("minor not divisible by the quadric");
        out.push_back(quot);
    }
    return out;
}

std::vector<std::vector<Rational>> plane_grid_points(const LinearForm& l, size_t count) {
    if (l.is_zero()) throw precondition_error("zero form does not define a plane");
    size_t piv = 0;
    while (l.c[piv] == 0) ++piv;
    static const long values[6] = {0, 1, -1, 2, -2, 3};
    std::vector<std::vector<Rational>> pts;
    for (size_t i0 = 0; i0 < 6 && pts.size() < count; ++i0)
        for (size_t i1 = 0; i1 < 6 && pts.size() < count; ++i1)
            for (size_t i2 = 0; i2 < 6 && pts.size() < count; ++i2) {
                std::vector<Rational> p(4);
                size_t slot = 0;
                long free_vals[3] = {values[i0], values[i1], values[i2]};
                for (size_t k = 0; k < 4; ++k)
                    if (k != piv) p[k] = free_vals[slot++];
                Rational acc = 0;
                for (size_t k = 0; k < 4; ++k)
                    if (k != piv) acc += l.c[k] * p[k];
                p[piv] = -acc / l.c[piv];
                if (std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; })) continue;
                pts.push_back(std::move(p));
            }
    if (pts.size() < count) throw error("plane grid exhausted");
    return pts;
}

SchemeReport scheme_report(const QuadraticPresentation& p, const QuadricSpec& q,
                           const std::vector<std::pair<std::string, LineSpec>>& candidates) {
    SchemeReport rep;
    MultilinearMatrix m = multilinearize(p);
    MinorIdeal ideal = compute_minors(m);

    if (ideal.all_zero()) {
        rep.classification = SchemeClass::all_minors_zero;
        return rep;
    }
    bool quad = contains_component(ideal, PlanePairSpec{q.l1, q.l2});
    if (!quad) {
        rep.classification = SchemeClass::other;
        return rep;
    }
    rep.classification = SchemeClass::contains_quadric;
    rep.residuals = residual_polynomials(ideal, q);

    for (const auto& [name, line] : candidates) {
        CandidateResult res;
        res.name = name;
        res.line = line;
        LineParam param = line_from_planes(line.m1, line.m2);
        bool on_l1 = vanishes_on_line(q.l1.to_poly(), param);
        bool on_l2 = vanishes_on_line(q.l2.to_poly(), param);
        res.on_quadric = on_l1 || on_l2;
        res.minors_vanish = contains_component(ideal, line);
        res.residuals_vanish = std::all_of(rep.residuals.begin(), rep.residuals.end(),
                                           [&](const CommPoly& r) { return vanishes_on_line(r, param); });
        res.accepted = res.on_quadric ? res.residuals_vanish : res.minors_vanish;
        rep.candidates.push_back(std::move(res));
    }
    return rep;
}

const char* to_string(SchemeClass c) {
    switch (c) {
        case SchemeClass::all_minors_zero: return "all_minors_zero";
        case SchemeClass::contains_quadric: return "contains_quadric";
        default: return "other";
    }
}

} // namespace asreg
