#pragma once

#include <optional>
#include <string>

#include "asreg/coordinate_rings.hpp"
#include "asreg/presentation.hpp"

namespace asreg {

// Parsed presentation file. Grammar (whitespace-insensitive, '#' comments):
//   file     = line*
//   line     = "generators:" name+ | "relation:" expr
//            | "quadric:" "(" form "," form ")" | "tau:" matrix
//   expr     = term (("+"|"-") term)*
//   term     = [rational "*"] name "*" name
//   form     = [rational "*"] name (("+"|"-") [rational "*"] name)*
//   rational = int ["/" posint]
struct PresentationFile {
    std::vector<std::string> generators;
    std::vector<std::vector<Rational>> relation_tensors;
    std::optional<QuadricSpec> quadric;
    std::optional<LinMapV> tau;

    QuadraticPresentation presentation() const;
};

PresentationFile parse_presentation(const std::string& text);

// Canonical printer; parse(print(p)) reproduces p exactly.
std::string print_presentation(const QuadraticPresentation& p);

} // namespace asreg
