#pragma once

#include <gmpxx.h>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "asreg/error.hpp"

namespace asreg {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator); every entry point that builds one from raw
// numerator/denominator must canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw error("empty rational literal");
    std::string body(text.substr(a, b - a + 1));
    for (char c : body)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw error("bad rational literal: " + body);
    try {
        Rational r(body);
        if (r.get_den() == 0) throw error("rational with zero denominator: " + body);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw error("bad rational literal: " + body);
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const std::vector<Rational>& v, char sep = ',') {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace asreg
