#pragma once

#include <random>
#include <string>
#include <vector>

#include "asreg/linmap.hpp"
#include "asreg/report.hpp"

namespace asreg {

std::vector<std::string> verify_check_ids();

// Runs the verification battery (all checks, or the named subset).
// Deterministic: fixed grids, fixed sampling seeds, order-stable output.
VerificationReport verify_paper(const std::vector<std::string>& selection = {});

// Stabilizer family samplers shared by verify-paper and the test suites.
// Families are keyed 'a'..'e'; violations exist for 'b'..'e' only (every
// invertible map preserves the commutator span of the polynomial ring).
LinMapV sample_stabilizer_tau(char family, std::mt19937_64& rng);
LinMapV sample_stabilizer_violation(char family, std::mt19937_64& rng);

} // namespace asreg
