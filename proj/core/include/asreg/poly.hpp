#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asreg/rational.hpp"

namespace asreg {

// Graded-lexicographic, larger terms first (canonical print/storage order).
struct GrlexDesc {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Multivariate commutative polynomial over ℚ in a fixed variable list
// (default Y1..Y4). No zero coefficients are stored.
class CommPoly {
public:
    using TermMap = std::map<std::vector<unsigned>, Rational, GrlexDesc>;

    CommPoly() : vars_(default_vars(4)) {}
    explicit CommPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static std::vector<std::string> default_vars(size_t n);
    static CommPoly constant(const Rational& c, size_t nvars = 4);
    static CommPoly variable(size_t index, size_t nvars = 4);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t total_degree() const; // 0 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const std::vector<unsigned>& expo, const Rational& c);

    CommPoly operator+(const CommPoly& o) const;
    CommPoly operator-(const CommPoly& o) const;
    CommPoly operator*(const CommPoly& o) const;
    CommPoly operator-() const;
    CommPoly scaled(const Rational& s) const;
    bool operator==(const CommPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& point) const;
    std::string print() const; // "3/2*Y1*Y2 - Y3^2"

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Formal partial derivative; `var` must name one of p's variables.
CommPoly poly_partial(const CommPoly& p, const std::string& var);
CommPoly poly_partial(const CommPoly& p, size_t var_index);

// Linear form in the four point-scheme coordinates.
struct LinearForm {
    std::array<Rational, 4> c{};

    LinearForm() = default;
    LinearForm(Rational c1, Rational c2, Rational c3, Rational c4)
        : c{std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {}
    static LinearForm unit(size_t i);

    bool is_zero() const;
    Rational evaluate(const std::vector<Rational>& p) const;
    CommPoly to_poly() const;
    bool operator==(const LinearForm& o) const { return c == o.c; }
    std::string print() const;
};

// Exact division by each form in sequence; {true, quotient} when every
// stage divides, {false, 0} otherwise. Zero is divisible by everything.
std::pair<bool, CommPoly> poly_divisible(const CommPoly& p, const std::vector<LinearForm>& forms);

// p(base + t·dir) expanded in t, constant term first, trailing zeros
// trimmed. Throws when base and dir are projectively equal.
std::vector<Rational> restrict_to_line(const CommPoly& p, const std::vector<Rational>& base,
                                       const std::vector<Rational>& dir);

// For homogeneous p: the binary form p(s·base + t·dir) as coefficients of
// t^k s^(d−k), k = 0..d. Degree-0 p is accepted as degree-0 form.
std::vector<Rational> restrict_to_line_binary(const CommPoly& p, const std::vector<Rational>& base,
                                              const std::vector<Rational>& dir);

// Order of vanishing of a univariate polynomial (coeff list, constant
// first) at a point; the zero polynomial has no finite order (returns npos).
size_t univariate_order_at(const std::vector<Rational>& coeffs, const Rational& at);
inline constexpr size_t poly_npos = static_cast<size_t>(-1);

} // namespace asreg
