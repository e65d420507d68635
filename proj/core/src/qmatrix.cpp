#include "asreg/qmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace asreg {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols != o.rows) throw error("matrix product shape mismatch");
    QMatrix p(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0) p.at(i, j) += x * o.at(k, j);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw error("matrix sum shape mismatch");
    QMatrix s(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) s.a[i] = a[i] + o.a[i];
    return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw error("matrix difference shape mismatch");
    QMatrix s(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) s.a[i] = a[i] - o.a[i];
    return s;
}

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
    return m;
}

std::vector<Rational> QMatrix::row(size_t i) const {
    return std::vector<Rational>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols) throw error("apply: dimension mismatch");
    std::vector<Rational> out(rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Rational> QMatrix::apply_transposed(const std::vector<Rational>& v) const {
    if (v.size() != rows) throw error("apply_transposed: dimension mismatch");
    std::vector<Rational> out(cols);
    for (size_t i = 0; i < rows; ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) out[j] += v[i] * at(i, j);
    }
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

std::pair<QMatrix, size_t> rref_rank(const QMatrix& m) {
    QMatrix r = m;
    size_t rank = 0;
    for (size_t col = 0; col < r.cols && rank < r.rows; ++col) {
        size_t piv = rank;
        while (piv < r.rows && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(rank, j));
        Rational inv = 1 / r.at(rank, col);
        for (size_t j = col; j < r.cols; ++j) r.at(rank, j) *= inv;
        for (size_t i = 0; i < r.rows; ++i) {
            if (i == rank || r.at(i, col) == 0) continue;
            Rational f = r.at(i, col);
            for (size_t j = col; j < r.cols; ++j) r.at(i, j) -= f * r.at(rank, j);
        }
        ++rank;
    }
    return {std::move(r), rank};
}

Rational QMatrix::det() const {
    if (!is_square()) throw error("determinant of non-square matrix");
    QMatrix r = *this;
    Rational d = 1;
    size_t n = rows;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && r.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            d = -d;
        }
        d *= r.at(col, col);
        Rational inv = 1 / r.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (r.at(i, col) == 0) continue;
            Rational f = r.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) r.at(i, j) -= f * r.at(col, j);
        }
    }
    return d;
}

bool QMatrix::invertible() const { return is_square() && det() != 0; }

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw error("inverse of non-square matrix");
    size_t n = rows;
    QMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [r, rank] = rref_rank(aug);
    (void)rank; // [A|I] always has full row rank; invertibility shows in the left block
    for (size_t i = 0; i < n; ++i)
        if (r.at(i, i) != 1) throw error("matrix is singular");
    QMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

QMatrix QMatrix::power(long n) const {
    if (!is_square()) throw error("power of non-square matrix");
    QMatrix base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    QMatrix acc = identity(rows);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    if (m.rows == 0) {
        // kernel of the 0×n map is everything
        std::vector<std::vector<Rational>> basis;
        for (size_t j = 0; j < m.cols; ++j) {
            std::vector<Rational> e(m.cols);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    auto [r, rank] = rref_rank(m);
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t i = 0; i < rank; ++i) {
        size_t j = 0;
        while (j < m.cols && r.at(i, j) == 0) ++j;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(m.cols);
        v[j] = 1;
        for (size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    QMatrix stack(basis.size(), m.cols);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < m.cols; ++j) stack.at(i, j) = basis[i][j];
    auto [rr, rk] = rref_rank(stack);
    std::vector<std::vector<Rational>> canon;
    for (size_t i = 0; i < rk; ++i) canon.push_back(rr.row(i));
    return canon;
}

bool solve_linear(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>& out) {
    if (b.size() != m.rows) throw error("solve_linear: dimension mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto [r, rank] = rref_rank(aug);
    out.assign(m.cols, Rational(0));
    for (size_t i = 0; i < rank; ++i) {
        size_t j = 0;
        while (j <= m.cols && r.at(i, j) == 0) ++j;
        if (j == m.cols) return false; // row 0 ... 0 | c with c != 0
        out[j] = r.at(i, m.cols);
    }
    return true;
}

QMatrix QMatrix::parse(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    size_t start = 0;
    std::string s(text);
    while (start <= s.size()) {
        size_t end = s.find(';', start);
        std::string rowtext = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::vector<Rational> row;
        size_t p = 0;
        while (p <= rowtext.size()) {
            size_t q = rowtext.find(',', p);
            std::string cell = rowtext.substr(p, q == std::string::npos ? std::string::npos : q - p);
            row.push_back(parse_rational(cell));
            if (q == std::string::npos) break;
            p = q + 1;
        }
        rows.push_back(std::move(row));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (rows.empty()) throw error("empty matrix literal");
    size_t cols = rows[0].size();
    QMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw error("ragged matrix literal");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string QMatrix::print() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows; ++i) {
        if (i) os << ';';
        for (size_t j = 0; j < cols; ++j) {
            if (j) os << ',';
            os << at(i, j);
        }
    }
    return os.str();
}

size_t Echelon::reduce(std::vector<Rational>& v, std::vector<std::pair<size_t, Rational>>* coeffs) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c == 0) continue;
        Rational f = c; // rows are pivot-normalized
        const auto& r = rows_[i];
        for (size_t j = pivots_[i]; j < width_; ++j)
            if (r[j] != 0) v[j] -= f * r[j];
        if (coeffs) coeffs->emplace_back(i, f);
    }
    for (size_t j = 0; j < width_; ++j)
        if (v[j] != 0) return j;
    return npos;
}

bool Echelon::insert(std::vector<Rational> v) {
    size_t p = reduce(v);
    if (p == npos) return false;
    Rational inv = 1 / v[p];
    for (size_t j = p; j < width_; ++j)
        if (v[j] != 0) v[j] *= inv;
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

} // namespace asreg
