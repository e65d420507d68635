#pragma once

#include <vector>

#include "asreg/qmatrix.hpp"

namespace asreg {

enum class SpanOrder { equal, a_subset_b, b_subset_a, incomparable };

// Linear subspace of ℚ^ambient in canonical form: basis rows are the
// reduced row echelon form with strictly increasing pivot columns and no
// zero rows, so equality of subspaces is entry-wise equality of bases.
struct Subspace {
    size_t ambient = 0;
    QMatrix basis; // rref, no zero rows

    Subspace() = default;
    explicit Subspace(size_t ambient_dim) : ambient(ambient_dim), basis(0, ambient_dim) {}

    static Subspace from_rows(size_t ambient_dim, const std::vector<std::vector<Rational>>& rows);
    static Subspace full(size_t ambient_dim);

    size_t dim() const { return basis.rows; }
    bool contains(const std::vector<Rational>& v) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }

    Subspace sum(const Subspace& o) const;
    std::vector<Rational> row(size_t i) const { return basis.row(i); }
};

// Exact comparison via ranks of stacked bases. Throws on ambient mismatch.
SpanOrder span_compare(const Subspace& a, const Subspace& b);

const char* to_string(SpanOrder s);

} // namespace asreg
