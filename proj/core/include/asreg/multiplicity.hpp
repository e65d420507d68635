#pragma once

#include <optional>

#include "asreg/point_scheme.hpp"

namespace asreg {

// Parametrized projective line {base + t·dir} ∪ {dir at t = ∞}.
struct ProjLine {
    std::vector<Rational> base, dir;

    ProjLine(std::vector<Rational> b, std::vector<Rational> d);
};

// Entry (r, j) = ∂(minor_r)/∂Y_j.
std::vector<std::array<CommPoly, 4>> jacobian_partials(const MinorIdeal& ideal);

bool vanishing_at(const std::vector<CommPoly>& polys, const std::vector<Rational>& p);

// min over the nonzero restricted polynomials of the order of vanishing at
// the parameter; t = ∞ handled on the (s, t) chart swap. A line contained
// in the scheme is a distinct state, never a number.
struct LineMult {
    bool line_contained = false;
    size_t value = 0;
};

// `at` = nullopt means the point at infinity (direction point).
LineMult line_multiplicity(const std::vector<CommPoly>& polys, const ProjLine& line,
                           const std::optional<Rational>& at);

// Slice data for one embedded-line candidate: points base_for(n) with a
// fixed transversal direction, probed at n ∈ {0, 1, 2}.
struct SliceFamily {
    LineSpec line;
    std::vector<Rational> transversal; // direction leaving the plane that carries the line
};

enum class MultClass { consistent_with_quadric, quadric_with_embedded_line, inconsistent };

struct SliceResult {
    std::string label;
    std::vector<Rational> point;
    bool line_contained = false;
    size_t multiplicity = 0;
};

struct MultiplicityReport {
    MultClass classification = MultClass::inconsistent;
    std::string detail;                 // named embedded line or failure reason
    std::vector<SliceResult> slices;
    std::vector<std::string> multiple_loci; // candidate lines where all partials vanish
};

// Reproduces the Jacobian/slice argument: minors, partials, candidate
// multiple loci (coordinate lines plus catalog candidates), transversal
// slices through the quadric's intersection line at n ∈ {0,1,2,∞} and
// through each embedded-line candidate at n ∈ {0,1,2}.
MultiplicityReport multiplicity_report(const QuadraticPresentation& p, const QuadricSpec& q,
                                       const LinMapV& declared_tau,
                                       const std::vector<SliceFamily>& candidates);

const char* to_string(MultClass c);

} // namespace asreg
