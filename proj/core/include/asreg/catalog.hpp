#pragma once

#include <map>
#include <optional>

#include "asreg/coordinate_rings.hpp"
#include "asreg/multiplicity.hpp"
#include "asreg/point_scheme.hpp"
#include "asreg/twisting.hpp"

namespace asreg {

// A σ-formula check: denominator-cleared projective formula, valid on the
// chart where `chart` is nonzero, probed at the pinned sample points.
struct SigmaCheck {
    size_t chart = 0;
    std::array<CommPoly, 4> formula;
    std::vector<std::vector<Rational>> samples;
};

struct CandidateLine {
    std::string name;
    LineSpec line;
    bool expected_component = false; // contains_component(minors, line)
    bool expected_extra = false;     // scheme_report "accepted" evidence of extra structure
};

// One algebra from the built-in catalog, with the metadata the verification
// checks need. Parameters have already been validated.
struct CatalogInstance {
    std::string id;
    std::string description;
    QuadraticPresentation presentation;
    std::map<std::string, Rational> params;

    std::optional<QuadricSpec> quadric;
    std::optional<LinMapV> tau; // declared graph automorphism

    std::vector<std::vector<Rational>> central_decl;     // declared central elements
    std::vector<std::vector<Rational>> normal_phi_decl;  // normal elements whose φ must be ∝ τ
    std::vector<std::vector<Rational>> untwisted_central; // central pair after twisting by τ⁻¹
    std::vector<CandidateLine> candidate_lines;
    std::vector<SigmaCheck> sigma_checks;
    std::vector<SliceFamily> slice_candidates;
    std::optional<OreData> ore;
};

std::vector<std::string> catalog_ids();
bool catalog_has(const std::string& id);
std::map<std::string, Rational> catalog_default_params(const std::string& id);

// Throws constraint_error (with the violated constraint text) on bad
// parameters, error on unknown ids or parameters.
CatalogInstance catalog_build(const std::string& id,
                              const std::map<std::string, Rational>& params = {});

// Every catalog entry at its default parameters.
std::vector<CatalogInstance> catalog_default_instances();

} // namespace asreg
