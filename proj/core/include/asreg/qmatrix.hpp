#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "asreg/rational.hpp"

namespace asreg {

// Dense exact-rational matrix, row-major.
struct QMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    QMatrix(size_t r, size_t c, std::vector<Rational> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols) throw error("entry count does not match shape");
    }

    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const QMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static QMatrix identity(size_t n);
    static QMatrix zero(size_t r, size_t c) { return QMatrix(r, c); }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& s) const;

    std::vector<Rational> row(size_t i) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;      // M·v
    std::vector<Rational> apply_transposed(const std::vector<Rational>& v) const; // Mᵀ·v

    bool is_zero() const;
    bool is_square() const { return rows == cols; }

    Rational det() const;                       // square only
    QMatrix inverse() const;                    // throws if singular
    bool invertible() const;
    QMatrix power(long n) const;                // negative n via inverse

    // "1,0;0,1" — rows joined by ';', entries by ','.
    static QMatrix parse(std::string_view text);
    std::string print() const;
};

// Reduced row echelon form and rank. Pivoting takes the first nonzero
// entry in column order, so the output is the canonical rref.
std::pair<QMatrix, size_t> rref_rank(const QMatrix& m);

// Canonical (rref) basis of the right null space; empty iff full column rank.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Solve M·x = b exactly; nullopt-like behavior via bool flag.
bool solve_linear(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>& out);

// Incrementally maintained echelon basis (forward-reduced rows sorted by
// pivot column). Backbone of the degree-by-degree ideal computations.
class Echelon {
public:
    explicit Echelon(size_t width) : width_(width) {}

    // Reduces v in place against the basis; returns the pivot column of the
    // residue or npos when v reduces to zero. `coeffs`, when non-null,
    // receives the coefficient used on each existing row (by row index).
    size_t reduce(std::vector<Rational>& v, std::vector<std::pair<size_t, Rational>>* coeffs = nullptr) const;

    // Insert v (reducing first); returns true if the rank grew.
    bool insert(std::vector<Rational> v);

    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }
    const std::vector<Rational>& row(size_t i) const { return rows_[i]; }
    size_t pivot(size_t i) const { return pivots_[i]; }

    static constexpr size_t npos = static_cast<size_t>(-1);

private:
    size_t width_;
    std::vector<std::vector<Rational>> rows_;  // pivot-normalized, ordered by pivot col
    std::vector<size_t> pivots_;
};

} // namespace asreg
