#pragma once

#include <stdexcept>
#include <string>

namespace asreg {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition (degenerate input, failed hypothesis).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Text input rejected by the relation-expression grammar.
struct parse_error : error {
    int line;
    int column;
    parse_error(int ln, int col, const std::string& msg)
        : error("line " + std::to_string(ln) + ", col " + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

// Catalog parameter outside the family's admissible range; carries the
// constraint text shown to the user.
struct constraint_error : error {
    std::string constraint;
    constraint_error(const std::string& family, const std::string& what)
        : error(family + ": " + what), constraint(what) {}
};

} // namespace asreg
