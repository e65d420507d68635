#pragma once

#include <array>
#include <variant>

#include "asreg/coordinate_rings.hpp"
#include "asreg/poly.hpp"
#include "asreg/presentation.hpp"

namespace asreg {

// The 6×4 matrix M(Y) of linear forms with entry (r, j) = Σ_i c^r_ij Y_i,
// so that M(p)·z = 0 exactly when (p, z) annihilates every relation with
// the first factor evaluated at p. The kernel direction at a rank-3 point
// is σ(p).
struct MultilinearMatrix {
    std::array<std::array<LinearForm, 4>, 6> entry;

    QMatrix evaluate(const std::vector<Rational>& p) const;
    std::vector<Rational> row_tensor(size_t r) const; // reconstruct the 16-tensor
};

MultilinearMatrix multilinearize(const QuadraticPresentation& p);

// All fifteen 4×4 minors, row subsets in lexicographic order; identically
// zero minors are kept so positions are stable.
struct MinorIdeal {
    std::vector<CommPoly> minors;
    bool all_zero() const;
};

MinorIdeal compute_minors(const MultilinearMatrix& m);

struct PlanePairSpec {
    LinearForm l1, l2;
};
struct LineSpec {
    LinearForm m1, m2; // the line V(m1, m2)
};
using ComponentSpec = std::variant<PlanePairSpec, LineSpec>;

// Plane pair: every minor divisible by ℓ1·ℓ2. Line: every minor vanishes
// identically on a parametrization of the line (including at infinity).
bool contains_component(const MinorIdeal& ideal, const ComponentSpec& spec);

// Parametrize V(m1, m2) as {s·base + t·dir}.
struct LineParam {
    std::vector<Rational> base, dir;
};
LineParam line_from_planes(const LinearForm& m1, const LinearForm& m2);

struct sigma_off_scheme : precondition_error {
    explicit sigma_off_scheme(const std::string& m) : precondition_error(m) {}
};
struct sigma_undetermined : precondition_error {
    explicit sigma_undetermined(const std::string& m) : precondition_error(m) {}
};

// Unique projective kernel direction of M(p); throws sigma_off_scheme at
// rank 4 and sigma_undetermined at rank ≤ 2 (never guesses).
std::vector<Rational> sigma_at(const MultilinearMatrix& m, const std::vector<Rational>& p);

bool proj_equal(const std::vector<Rational>& p, const std::vector<Rational>& q);

// Check σ against a chart formula given as four denominator-cleared
// homogeneous polynomials. Samples must lie on P with the chart
// coordinate nonzero.
bool verify_sigma_formula(const MultilinearMatrix& m, size_t chart,
                          const std::array<CommPoly, 4>& formula,
                          const std::vector<std::vector<Rational>>& samples);

// Quotients minor/(ℓ1·ℓ2); zero minors stay zero, positions stable.
std::vector<CommPoly> residual_polynomials(const MinorIdeal& ideal, const QuadricSpec& q);

// Deterministic rational points on the plane V(l): free coordinates run
// over {0, 1, −1, 2, −2, 3} in odometer order.
std::vector<std::vector<Rational>> plane_grid_points(const LinearForm& l, size_t count);

enum class SchemeClass { all_minors_zero, contains_quadric, other };

struct CandidateResult {
    std::string name;
    LineSpec line;
    bool on_quadric = false;
    bool minors_vanish = false;
    bool residuals_vanish = false;
    bool accepted = false; // evidence of an actual component beyond the quadric
};

struct SchemeReport {
    SchemeClass classification = SchemeClass::other;
    std::vector<CommPoly> residuals;
    std::vector<CandidateResult> candidates;
};

SchemeReport scheme_report(const QuadraticPresentation& p, const QuadricSpec& q,
                           const std::vector<std::pair<std::string, LineSpec>>& candidates);

const char* to_string(SchemeClass c);

} // namespace asreg
