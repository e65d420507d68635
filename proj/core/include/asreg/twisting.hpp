#pragma once

#include <optional>

#include "asreg/graded.hpp"
#include "asreg/linmap.hpp"

namespace asreg {

// Maps applied to the first and second tensor factors of every relation.
struct TwistMap {
    LinMapV f, g;
};

// Relation span (τ̂⊗id)W, matching relations written with a twisted first
// factor. Note the composition order under this convention:
// zhang_twist(P, τ1·τ2) = zhang_twist(zhang_twist(P, τ1), τ2).
QuadraticPresentation zhang_twist(const QuadraticPresentation& p, const LinMapV& tau);

// (τ̂⊗τ̂)W = W.
bool stabilizes(const QuadraticPresentation& p, const LinMapV& tau);

QuadraticPresentation pair_twist(const QuadraticPresentation& p, const TwistMap& m);

// Degree-2 specialization of the word-length-indexed twisting system
// Π_j τ^(1−j−n) t^n τ^(j−1): letter 1 gets τ^(−n)·tⁿ, letter 2 gets
// τ^(−1−n)·tⁿ·τ.
TwistMap hv_twist_map(const LinMapV& t, const LinMapV& tau, long n);

// Skew extension data over a (usually 3-generator) base.
struct OreData {
    QuadraticPresentation base;
    LinMapV sigma_map;                 // on base generators
    std::vector<TensorElement> delta;  // degree-2 value per base generator
    std::string adjoint_name = "z";
};

enum class OreCheck { ok, sigma_not_automorphism, leibniz_fails };

// σ must send the base relation span to itself, and δ must satisfy
// Σ c_ij (σ(x_i)·δ(x_j) + δ(x_i)·x_j) = 0 in base degree 3 for every
// relation Σ c_ij x_i⊗x_j.
OreCheck sigma_derivation_check(const OreData& o);

const char* to_string(OreCheck c);

struct HvParams {
    Rational a, q, alpha, beta;
    long n = 0;
};

struct HvMatch {
    HvParams params;
    TwistMap map;
};

struct HvGrid {
    std::vector<Rational> a_range, q_range, alpha_range, beta_range;
    std::vector<long> n_range;

    static HvGrid small_grid();
    static HvGrid wide_grid();
};

// Exhaustive lexicographic search: first grid point whose twisted
// two-parameter-family instance has relation span equal to the target's.
std::optional<HvMatch> hv_match_search(const QuadraticPresentation& target, const HvGrid& grid);

// The two-parameter family instance used by the search (relations carry a
// twisted first factor by `tau`).
QuadraticPresentation family_two_param(const Rational& alpha, const Rational& beta,
                                       const LinMapV& tau);

} // namespace asreg
