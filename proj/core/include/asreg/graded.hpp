#pragma once

#include <unordered_map>
#include <vector>

#include "asreg/presentation.hpp"

namespace asreg {

// Class in A_d, coordinates over the degree-d complement basis.
struct AClass {
    size_t degree = 0;
    std::vector<Rational> coords;

    bool is_zero() const;
    bool operator==(const AClass& o) const { return degree == o.degree && coords == o.coords; }
};

// Degree-d slice of the quotient algebra T(V)/⟨W⟩. The complement basis is
// the lexicographically first set of monomials completing I_d, so normal
// forms are canonical and reports are stable across runs.
struct GradedComponent {
    size_t degree = 0;
    Subspace ideal_span;                 // ambient gen_count^degree
    std::vector<size_t> complement_basis; // word offsets, ascending
};

// Graded quotient of the tensor algebra by a quadratic relation span.
// Degrees are built incrementally: A_d is computed inside A_{d-1}⊗V, which
// keeps every elimination at size (4·dim A_{d-1}) instead of 4^d. Not
// thread-safe (per-instance caches); distinct instances are independent.
class GradedAlgebra {
public:
    explicit GradedAlgebra(QuadraticPresentation p);

    const QuadraticPresentation& presentation() const { return pres_; }
    size_t gen_count() const { return pres_.gen_count; }

    size_t dim(size_t d);
    const std::vector<size_t>& basis_words(size_t d);

    // nf(e) over the complement basis; zero vector iff e ∈ I_d.
    std::vector<Rational> normal_form(const TensorElement& e);
    AClass nf_class(const TensorElement& e);

    AClass class_of_word(const Word& w);
    AClass generator_class(size_t i);

    // nf(lift(a)⊗lift(b)); independent of the lifts because I is an ideal.
    AClass multiply(const AClass& a, const AClass& b);
    TensorElement lift(const AClass& a);

    // dim of Σ gᵢ·A_{d−deg gᵢ} inside A_d.
    size_t right_ideal_dim(const std::vector<TensorElement>& gens, size_t d);

private:
    struct Level {
        std::vector<size_t> words;                        // B_d offsets, ascending
        std::vector<std::vector<Rational>> cand_nf;       // (dim A_{d-1}·n) rows over B_d
        std::unordered_map<size_t, std::vector<Rational>> word_cache;
    };

    void ensure(size_t d);
    const std::vector<Rational>& word_nf(size_t d, size_t offset);
    std::vector<Rational> extend(size_t target_degree, const std::vector<Rational>& prev_coords,
                                 uint8_t letter);

    QuadraticPresentation pres_;
    std::vector<Level> levels_; // levels_[d] valid for d ≤ built_
    size_t built_ = 1;
};

// Degree-d component of the two-sided ideal, materialized in the full
// 4^d-dimensional ambient space. Exact but only meant for small d.
Subspace ideal_component(const QuadraticPresentation& p, size_t d);

GradedComponent graded_component(GradedAlgebra& a, size_t d);

size_t graded_dim(GradedAlgebra& a, size_t d);

} // namespace asreg
