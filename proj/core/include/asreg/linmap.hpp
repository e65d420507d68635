#pragma once

#include "asreg/presentation.hpp"
#include "asreg/qmatrix.hpp"

namespace asreg {

// Invertible map on the generator space. One global convention, pinned by
// the σ-direction acceptance check:
//   · on generators (and any linear form written in generator
//     coordinates):  x_i^M = Σ_j M_ij x_j, i.e. coefficient vectors map by
//     Mᵀ (apply_form);
//   · on points of ℙ³ (dual side): p ↦ M·p (apply_point).
// The matrices displayed for the catalog automorphisms are stored verbatim
// in this convention.
using LinMapV = QMatrix;

inline std::vector<Rational> apply_form(const LinMapV& m, const std::vector<Rational>& u) {
    return m.apply_transposed(u);
}

inline std::vector<Rational> apply_point(const LinMapV& m, const std::vector<Rational>& p) {
    return m.apply(p);
}

// Image of a degree-2 tensor under f on the first factor and g on the
// second: Σ c_ij x_i^f ⊗ x_j^g has coefficient matrix fᵀ·c·g.
inline std::vector<Rational> act_pair(const LinMapV& f, const LinMapV& g,
                                      const std::vector<Rational>& tensor, size_t n) {
    QMatrix c(n, n, tensor);
    QMatrix out = f.transpose() * c * g;
    return out.a;
}

inline std::vector<Rational> act_first(const LinMapV& f, const std::vector<Rational>& tensor, size_t n) {
    return act_pair(f, QMatrix::identity(n), tensor, n);
}

} // namespace asreg
