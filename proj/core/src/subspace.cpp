#include "asreg/subspace.hpp"

namespace asreg {

Subspace Subspace::from_rows(size_t ambient_dim, const std::vector<std::vector<Rational>>& rows) {
    QMatrix m(rows.size(), ambient_dim);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ambient_dim) throw error("subspace row has wrong length");
        for (size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = rows[i][j];
    }
    auto [r, rank] = rref_rank(m);
    Subspace s(ambient_dim);
    s.basis = QMatrix(rank, ambient_dim);
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < ambient_dim; ++j) s.basis.at(i, j) = r.at(i, j);
    return s;
}

Subspace Subspace::full(size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis = QMatrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient) throw error("contains: dimension mismatch");
    std::vector<Rational> w = v;
    for (size_t i = 0; i < basis.rows; ++i) {
        size_t p = 0;
        while (p < ambient && basis.at(i, p) == 0) ++p;
        if (p == ambient) continue;
        if (w[p] == 0) continue;
        Rational f = w[p] / basis.at(i, p);
        for (size_t j = p; j < ambient; ++j) w[j] -= f * basis.at(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient != o.ambient) throw error("subspace sum: ambient mismatch");
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < basis.rows; ++i) rows.push_back(basis.row(i));
    for (size_t i = 0; i < o.basis.rows; ++i) rows.push_back(o.basis.row(i));
    return from_rows(ambient, rows);
}

SpanOrder span_compare(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw error("span_compare: ambient dimension mismatch");
    if (a == b) return SpanOrder::equal;
    size_t joint = a.sum(b).dim();
    bool a_in_b = joint == b.dim();
    bool b_in_a = joint == a.dim();
    if (a_in_b && b_in_a) return SpanOrder::equal;
    if (a_in_b) return SpanOrder::a_subset_b;
    if (b_in_a) return SpanOrder::b_subset_a;
    return SpanOrder::incomparable;
}

const char* to_string(SpanOrder s) {
    switch (s) {
        case SpanOrder::equal: return "equal";
        case SpanOrder::a_subset_b: return "a_subset_b";
        case SpanOrder::b_subset_a: return "b_subset_a";
        default: return "incomparable";
    }
}

} // namespace asreg
