#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asreg/subspace.hpp"

namespace asreg {

// Word in the free monoid on the generators, letters 0-based.
using Word = std::vector<uint8_t>;

// Row-major offset of x_{i1}⊗…⊗x_{id}: Σ i_k·n^(d−k). This order is part
// of the on-disk report format.
size_t word_offset(const Word& w, size_t n);
Word word_from_offset(size_t offset, size_t degree, size_t n);
size_t pow_sz(size_t base, size_t exp);
std::string word_name(const Word& w, const std::vector<std::string>& names);

// Quadratic presentation T(V)/⟨W⟩: generators plus the span of the
// defining relations inside the n²-dimensional space of degree-2 tensors.
struct QuadraticPresentation {
    size_t gen_count = 4;
    std::vector<std::string> gen_names;
    Subspace relations; // ambient gen_count², canonical rref basis

    QuadraticPresentation() = default;
    QuadraticPresentation(size_t n, std::vector<std::string> names, Subspace rels);

    static std::vector<std::string> default_names(size_t n);
    static QuadraticPresentation from_tensors(size_t n, const std::vector<std::vector<Rational>>& relation_tensors,
                                              std::vector<std::string> names = {});

    bool operator==(const QuadraticPresentation& o) const {
        return gen_count == o.gen_count && relations == o.relations;
    }
};

// Degree-homogeneous element of the tensor algebra, dense coordinates in
// the row-major word basis.
struct TensorElement {
    size_t degree = 0;
    std::vector<Rational> coords;

    TensorElement() = default;
    TensorElement(size_t d, std::vector<Rational> c) : degree(d), coords(std::move(c)) {}

    static TensorElement from_word(const Word& w, size_t n);
    static TensorElement generator(size_t i, size_t n); // degree 1
    // u⊗v concatenation on coordinates
    static TensorElement concat(const TensorElement& u, const TensorElement& v, size_t n);
    bool is_zero() const;
};

// Degree-2 tensor helpers (16-dim for n = 4).
std::vector<Rational> tensor2(size_t n, size_t i, size_t j);                       // x_i⊗x_j
std::vector<Rational> commutator2(size_t n, size_t i, size_t j);                   // x_i⊗x_j − x_j⊗x_i
std::vector<Rational> tensor2_of_forms(size_t n, const std::vector<Rational>& u,
                                       const std::vector<Rational>& v);            // u⊗v

} // namespace asreg
