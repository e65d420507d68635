#pragma once

#include "asreg/graded.hpp"
#include "asreg/linmap.hpp"
#include "asreg/poly.hpp"

namespace asreg {

// Rank-two quadric V(ℓ1·ℓ2), kept in factored form.
struct QuadricSpec {
    LinearForm l1, l2;

    QuadricSpec() = default;
    QuadricSpec(LinearForm a, LinearForm b);

    CommPoly product_poly() const { return l1.to_poly() * l2.to_poly(); }
};

// Degree-2 tensors vanishing on the graph {(p, τp) : p ∈ Q}; always
// 7-dimensional for an invertible τ and independent ℓ1, ℓ2.
struct GraphRelationSpace {
    LinMapV tau;
    Subspace space; // ambient 16
};

// A tensor u⊗v evaluates at a point pair (p, p') as u(p)·v(p'); the space
// is cut out symbolically by coefficient matching against ℚ·ℓ1ℓ2.
GraphRelationSpace thcr_relation_space(const QuadricSpec& q, const LinMapV& tau);

// True iff the relation span sits strictly inside the graph relation space.
bool check_surjection(const QuadraticPresentation& p, const QuadricSpec& q, const LinMapV& tau);

// nf(ℓ1⊗ℓ2): the class spanning the one-dimensional gap between the
// presentation's relations and the graph space. Throws when the surjection
// fails or when the class is zero (degenerate presentation).
AClass extract_omega(GradedAlgebra& alg, const QuadricSpec& q, const LinMapV& tau);

// For all 16 generator pairs: nf(u^τ⊗v − v^τ⊗u) ∈ ℚ·omega.
bool omega_multiple_check(GradedAlgebra& alg, const LinMapV& tau, const AClass& omega);

// v ∈ ℚ·w or v = 0 (helper shared by several modules).
bool proportional_or_zero(const std::vector<Rational>& v, const std::vector<Rational>& w);

} // namespace asreg
