#pragma once

#include <optional>

#include "asreg/coordinate_rings.hpp"
#include "asreg/graded.hpp"
#include "asreg/linmap.hpp"

namespace asreg {

struct NormalityCertificate {
    TensorElement element;
    bool is_normal = false;
    std::optional<LinMapV> phi;       // degree-1 case: v·x = φ(x)·v, rows are images
    std::optional<AClass> witness;    // failing product class when not normal
    std::string witness_side;         // "left" or "right"
};

// v = λ·w (componentwise); nullopt when no such scalar exists.
std::optional<Rational> proportionality_scalar(const std::vector<Rational>& v,
                                               const std::vector<Rational>& w);

// All v with v⊗x − x⊗v ∈ W for every generator x.
Subspace central_space(GradedAlgebra& alg);

// Degree-1 normality decided in degree 2: v·A_n = A_1·(v·A_{n-1})
// inductively, so span equality of nf(v⊗V) and nf(V⊗v) inside A_2 settles
// every degree. (Degree-4 spot checks in the test suite double-check the
// reduction on catalog algebras.)
NormalityCertificate is_normal_deg1(GradedAlgebra& alg, const std::vector<Rational>& v);

// Degree-2 normality decided in degree 3 by the same induction.
NormalityCertificate is_normal_deg2(GradedAlgebra& alg, const AClass& omega);

// For v, w both normal with nf(v⊗w) ≠ 0: the unique α with
// nf(v⊗w) = α·nf(w⊗v).
Rational normal_pair_scalar(GradedAlgebra& alg, const std::vector<Rational>& v,
                            const std::vector<Rational>& w);

enum class AdaptedBranch { two_lines_commutative, two_lines_noncommutative, plane };

struct AdaptedBasis {
    LinMapV change_of_basis; // row i = new generator i in old coordinates
    QuadraticPresentation transformed;
    AdaptedBranch branch;
};

const char* to_string(AdaptedBranch b);

// Generator change making the quadric lift Ω = class(ℓ1⊗ℓ2) visibly
// normal: commutation scalars α_ij against Ω pick an element y commuting
// with X1, X2, X3, the branch follows from how V(y) meets the quadric, and
// the fourth generator is corrected until it commutes with X1 and X2 (or
// X2 and X3 on the plane branch). Requires the identity graph automorphism
// case; scalars must be extractable or the offending pair is reported.
AdaptedBasis adapted_generators(GradedAlgebra& alg, const QuadricSpec& q);

// Presentation of A/⟨v⟩ on a complement of v (image of W; the v⊗V and V⊗v
// slices die under the projection).
QuadraticPresentation quotient_by_deg1(const QuadraticPresentation& p, const std::vector<Rational>& v);

// v1 normal in A, v2 normal in A/⟨v1⟩, with injectivity of left
// multiplication by v1 on A_d for d ≤ 4 as regularity evidence.
bool normalizing_sequence_check(GradedAlgebra& alg, const std::vector<Rational>& v1,
                                const std::vector<Rational>& v2);

} // namespace asreg
