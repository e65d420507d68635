#pragma once

#include "asreg/catalog.hpp"
#include "asreg/graded.hpp"
#include "asreg/structure.hpp"

namespace ts {

using namespace asreg;

inline std::vector<Rational> v4(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

inline std::vector<Rational> vn(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline QuadricSpec xy_quadric() { return QuadricSpec(LinearForm::unit(0), LinearForm::unit(1)); }

inline QuadraticPresentation cat(const std::string& id) {
    return catalog_build(id, catalog_default_params(id)).presentation;
}

inline LinMapV diag4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    LinMapV m(4, 4);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
}

} // namespace ts
