#include "asreg/multiplicity.hpp"

#include <algorithm>

namespace asreg {

namespace {

bool proportional_rows(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] - a[j] * b[i] != 0) return false;
    return true;
}

} // namespace

ProjLine::ProjLine(std::vector<Rational> b, std::vector<Rational> d)
    : base(std::move(b)), dir(std::move(d)) {
    if (base.size() != 4 || dir.size() != 4) throw error("projective line expects 4 coordinates");
    if (proportional_rows(base, dir))
        throw precondition_error("line base and direction are proportional");
}

std::vector<std::array<CommPoly, 4>> jacobian_partials(const MinorIdeal& ideal) {
    std::vector<std::array<CommPoly, 4>> out;
    for (const auto& m : ideal.minors) {
        std::array<CommPoly, 4> row;
        for (size_t j = 0; j < 4; ++j) row[j] = poly_partial(m, j);
        out.push_back(std::move(row));
    }
    return out;
}

bool vanishing_at(const std::vector<CommPoly>& polys, const std::vector<Rational>& p) {
    if (std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; }))
        throw precondition_error("zero vector is not a projective point");
    return std::all_of(polys.begin(), polys.end(),
                       [&](const CommPoly& q) { return q.evaluate(p) == 0; });
}

LineMult line_multiplicity(const std::vector<CommPoly>& polys, const ProjLine& line,
                           const std::optional<Rational>& at) {
    bool any_nonzero = false;
    size_t best = poly_npos;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto bin = restrict_to_line_binary(p, line.base, line.dir);
        bool zero = std::all_of(bin.begin(), bin.end(), [](const Rational& c) { return c == 0; });
        if (zero) continue;
        any_nonzero = true;
        size_t ord;
        if (at.has_value()) {
            ord = univariate_order_at(bin, *at);
        } else {
            size_t last = bin.size();
            while (last > 0 && bin[last - 1] == 0) --last;
            ord = bin.size() - last; // multiplicity of the s factor at t = ∞
        }
        best = std::min(best, ord);
        if (best == 0) break;
    }
    if (!any_nonzero) return LineMult{true, 0};
    return LineMult{false, best};
}

const char* to_string(MultClass c) {
    switch (c) {
        case MultClass::consistent_with_quadric: return "consistent_with_quadric";
        case MultClass::quadric_with_embedded_line: return "quadric_with_embedded_line";
        default: return "inconsistent";
    }
}

namespace {

bool partials_vanish_on_line(const std::vector<std::array<CommPoly, 4>>& partials,
                             const LineParam& param) {
    for (const auto& row : partials)
        for (const auto& p : row) {
            if (p.is_zero()) continue;
            auto bin = restrict_to_line_binary(p, param.base, param.dir);
            if (!std::all_of(bin.begin(), bin.end(), [](const Rational& c) { return c == 0; }))
                return false;
        }
    return true;
}

std::vector<Rational> combine(const std::vector<Rational>& a, const Rational& t,
                              const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * b[i];
    return r;
}

} // namespace

MultiplicityReport multiplicity_report(const QuadraticPresentation& p, const QuadricSpec& q,
                                       const LinMapV& declared_tau,
                                       const std::vector<SliceFamily>& candidates) {
    if (!check_surjection(p, q, declared_tau))
        throw precondition_error("presentation does not map onto the twisted coordinate ring");

    MultiplicityReport rep;
    MultilinearMatrix m = multilinearize(p);
    MinorIdeal ideal = compute_minors(m);
    if (ideal.all_zero()) {
        rep.classification = MultClass::inconsistent;
        rep.detail = "all minors vanish identically";
        return rep;
    }
    if (!contains_component(ideal, PlanePairSpec{q.l1, q.l2})) {
        rep.classification = MultClass::inconsistent;
        rep.detail = "minors are not divisible by the quadric";
        return rep;
    }

    auto partials = jacobian_partials(ideal);

    // Candidate multiple loci: the six coordinate lines plus the supplied
    // candidates, filtered by identical vanishing of every partial.
    std::vector<std::pair<std::string, LineSpec>> loci;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            loci.emplace_back("V(Y" + std::to_string(i + 1) + ",Y" + std::to_string(j + 1) + ")",
                              LineSpec{LinearForm::unit(i), LinearForm::unit(j)});
    for (const auto& c : candidates) {
        std::string name = "candidate " + c.line.m1.print() + ", " + c.line.m2.print();
        loci.emplace_back(name, c.line);
    }
    for (const auto& [name, line] : loci) {
        LineParam param = line_from_planes(line.m1, line.m2);
        if (partials_vanish_on_line(partials, param)) {
            if (std::find(rep.multiple_loci.begin(), rep.multiple_loci.end(), name) ==
                rep.multiple_loci.end())
                rep.multiple_loci.push_back(name);
        }
    }

    // Transversal slices through the intersection line of the quadric.
    LineParam axis = line_from_planes(q.l1, q.l2);
    QMatrix sys(2, 4);
    for (size_t j = 0; j < 4; ++j) {
        sys.at(0, j) = q.l1.c[j];
        sys.at(1, j) = q.l2.c[j];
    }
    std::vector<Rational> wl;
    if (!solve_linear(sys, {Rational(1), Rational(1)}, wl))
        throw error("no transversal direction for the quadric");

    bool all_two = true;
    size_t max_mult = 0;
    for (int n = 0; n <= 3; ++n) {
        std::vector<Rational> pt = n < 3 ? combine(axis.base, Rational(n), axis.dir) : axis.dir;
        std::string label = n < 3 ? "axis slice n=" + std::to_string(n) : "axis slice n=inf";
        LineMult lm = line_multiplicity(ideal.minors, ProjLine(pt, wl), Rational(0));
        rep.slices.push_back(SliceResult{label, pt, lm.line_contained, lm.value});
        if (lm.line_contained) {
            all_two = false;
            continue;
        }
        max_mult = std::max(max_mult, lm.value);
        if (lm.value != 2) all_two = false;
    }

    // Embedded-line candidates: all partials vanish along the line and the
    // transversal slices show double points.
    std::string embedded;
    for (const auto& c : candidates) {
        LineParam param = line_from_planes(c.line.m1, c.line.m2);
        if (!partials_vanish_on_line(partials, param)) continue;
        bool doubled = true;
        for (int n = 0; n <= 2; ++n) {
            std::vector<Rational> pt = combine(param.base, Rational(n), param.dir);
            if (q.l1.evaluate(pt) == 0 && q.l2.evaluate(pt) == 0) continue; // on the axis
            LineMult lm = line_multiplicity(ideal.minors, ProjLine(pt, c.transversal), Rational(0));
            rep.slices.push_back(SliceResult{"candidate slice n=" + std::to_string(n), pt,
                                             lm.line_contained, lm.value});
            if (lm.line_contained || lm.value < 2) doubled = false;
        }
        if (doubled) {
            embedded = c.line.m1.print() + ", " + c.line.m2.print();
            break;
        }
    }

    if (!embedded.empty()) {
        rep.classification = MultClass::quadric_with_embedded_line;
        rep.detail = "V(" + embedded + ")";
    } else if (all_two) {
        rep.classification = MultClass::consistent_with_quadric;
        rep.detail = "double points only along the plane intersection";
    } else {
        rep.classification = MultClass::inconsistent;
        rep.detail = "multiplicity pattern unexplained (max " + std::to_string(max_mult) + ")";
    }
    return rep;
}

} // namespace asreg
