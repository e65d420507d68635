#include "asreg/graded.hpp"

#include <algorithm>

#include "asreg/error.hpp"

namespace asreg {

bool AClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

GradedAlgebra::GradedAlgebra(QuadraticPresentation p) : pres_(std::move(p)) {
    levels_.resize(2);
    levels_[0].words = {0};
    for (size_t i = 0; i < pres_.gen_count; ++i) levels_[1].words.push_back(i);
}

namespace {

// Echelon rows carrying their expression over the quotient basis chosen so
// far. Used to read normal forms straight off the greedy complement pass.
struct TrackedEchelon {
    size_t width;
    std::vector<std::vector<Rational>> rows; // pivot-normalized
    std::vector<size_t> pivots;
    std::vector<std::vector<Rational>> exprs; // ragged; index = class id

    explicit TrackedEchelon(size_t w) : width(w) {}

    // v -= matched rows; expr_acc += matched coefficients times row exprs.
    size_t reduce(std::vector<Rational>& v, std::vector<Rational>& expr_acc) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Rational& c = v[pivots[i]];
            if (c == 0) continue;
            Rational f = c;
            const auto& r = rows[i];
            for (size_t j = pivots[i]; j < width; ++j)
                if (r[j] != 0) v[j] -= f * r[j];
            const auto& ex = exprs[i];
            if (expr_acc.size() < ex.size()) expr_acc.resize(ex.size());
            for (size_t j = 0; j < ex.size(); ++j)
                if (ex[j] != 0) expr_acc[j] += f * ex[j];
        }
        for (size_t j = 0; j < width; ++j)
            if (v[j] != 0) return j;
        return Echelon::npos;
    }

    void insert_reduced(std::vector<Rational> v, size_t pivot, std::vector<Rational> expr) {
        Rational inv = 1 / v[pivot];
        for (size_t j = pivot; j < width; ++j)
            if (v[j] != 0) v[j] *= inv;
        for (auto& c : expr) c *= inv;
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < pivot) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, pivot);
        exprs.insert(exprs.begin() + pos, std::move(expr));
    }
};

} // namespace

void GradedAlgebra::ensure(size_t d) {
    const size_t n = pres_.gen_count;
    while (built_ < d) {
        size_t t = built_ + 1; // building level t >= 2
        Level& prev = levels_[built_];
        size_t n_prev = prev.words.size();
        size_t n_c = n_prev * n;

        // Ideal slice inside A_{t-1}⊗V: images of V^(t-2)⊗W under nf⊗id.
        Echelon ideal(n_c);
        const QMatrix& rel = pres_.relations.basis;
        size_t words_below = pow_sz(n, t - 2);
        for (size_t m = 0; m < words_below; ++m) {
            std::vector<const std::vector<Rational>*> nf_ma(n);
            for (size_t aa = 0; aa < n; ++aa) nf_ma[aa] = &word_nf(t - 1, m * n + aa);
            for (size_t r = 0; r < rel.rows; ++r) {
                std::vector<Rational> img(n_c);
                bool nonzero = false;
                for (size_t aa = 0; aa < n; ++aa) {
                    for (size_t bb = 0; bb < n; ++bb) {
                        const Rational& w = rel.at(r, aa * n + bb);
                        if (w == 0) continue;
                        const auto& base = *nf_ma[aa];
                        for (size_t k = 0; k < n_prev; ++k) {
                            if (base[k] == 0) continue;
                            img[k * n + bb] += w * base[k];
                            nonzero = true;
                        }
                    }
                }
                if (nonzero) ideal.insert(std::move(img));
            }
        }

        // Greedy lex-first complement with normal-form tracking. A candidate
        // (k, letter) is the word B_{t-1}[k]·x_letter; candidate order equals
        // lexicographic order of the underlying degree-t words.
        Level next;
        TrackedEchelon span(n_c);
        next.cand_nf.resize(n_c);
        for (size_t j = 0; j < n_c; ++j) {
            std::vector<Rational> v(n_c);
            v[j] = 1;
            size_t p = ideal.reduce(v);
            if (p == Echelon::npos) {
                next.cand_nf[j] = {}; // candidate lies in the ideal slice
                continue;
            }
            std::vector<Rational> expr;
            p = span.reduce(v, expr);
            if (p == Echelon::npos) {
                next.cand_nf[j] = std::move(expr);
            } else {
                size_t cls = next.words.size();
                next.words.push_back(prev.words[j / n] * n + (j % n));
                std::vector<Rational> unit(cls + 1);
                unit[cls] = 1;
                std::vector<Rational> res_expr = unit;
                if (res_expr.size() < expr.size()) res_expr.resize(expr.size());
                for (size_t q = 0; q < expr.size(); ++q) res_expr[q] -= expr[q];
                span.insert_reduced(std::move(v), p, std::move(res_expr));
                next.cand_nf[j] = std::move(unit);
            }
        }
        size_t a_t = next.words.size();
        for (auto& row : next.cand_nf) row.resize(a_t);

        levels_.push_back(std::move(next));
        ++built_;
    }
}

const std::vector<Rational>& GradedAlgebra::word_nf(size_t d, size_t offset) {
    const size_t n = pres_.gen_count;
    ensure(d);
    if (d == 0) {
        Level& lvl = levels_[0];
        auto it = lvl.word_cache.find(0);
        if (it != lvl.word_cache.end()) return it->second;
        return lvl.word_cache.emplace(0, std::vector<Rational>{Rational(1)}).first->second;
    }
    if (d == 1) {
        Level& lvl = levels_[1];
        auto it = lvl.word_cache.find(offset);
        if (it != lvl.word_cache.end()) return it->second;
        std::vector<Rational> unit(n);
        unit[offset] = 1;
        return lvl.word_cache.emplace(offset, std::move(unit)).first->second;
    }
    Level& lvl = levels_[d];
    auto it = lvl.word_cache.find(offset);
    if (it != lvl.word_cache.end()) return it->second;
    const auto& prev_row = word_nf(d - 1, offset / n);
    std::vector<Rational> row = extend(d, prev_row, static_cast<uint8_t>(offset % n));
    return levels_[d].word_cache.emplace(offset, std::move(row)).first->second;
}

std::vector<Rational> GradedAlgebra::extend(size_t target_degree, const std::vector<Rational>& prev_coords,
                                            uint8_t letter) {
    const size_t n = pres_.gen_count;
    ensure(target_degree);
    const Level& lvl = levels_[target_degree];
    std::vector<Rational> out(lvl.words.size());
    for (size_t k = 0; k < prev_coords.size(); ++k) {
        if (prev_coords[k] == 0) continue;
        const auto& row = lvl.cand_nf[k * n + letter];
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) out[c] += prev_coords[k] * row[c];
    }
    return out;
}

size_t GradedAlgebra::dim(size_t d) {
    ensure(d);
    return levels_[d].words.size();
}

const std::vector<size_t>& GradedAlgebra::basis_words(size_t d) {
    ensure(d);
    return levels_[d].words;
}

std::vector<Rational> GradedAlgebra::normal_form(const TensorElement& e) {
    const size_t n = pres_.gen_count;
    if (e.coords.size() != pow_sz(n, e.degree)) throw error("tensor coordinates have wrong length");
    ensure(e.degree);
    std::vector<Rational> acc(dim(e.degree));
    for (size_t off = 0; off < e.coords.size(); ++off) {
        if (e.coords[off] == 0) continue;
        const auto& row = word_nf(e.degree, off);
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) acc[c] += e.coords[off] * row[c];
    }
    return acc;
}

AClass GradedAlgebra::nf_class(const TensorElement& e) { return AClass{e.degree, normal_form(e)}; }

AClass GradedAlgebra::class_of_word(const Word& w) {
    return nf_class(TensorElement::from_word(w, pres_.gen_count));
}

AClass GradedAlgebra::generator_class(size_t i) {
    return class_of_word(Word{static_cast<uint8_t>(i)});
}

AClass GradedAlgebra::multiply(const AClass& a, const AClass& b) {
    const size_t n = pres_.gen_count;
    if (b.degree == 0) {
        Rational s = b.coords.empty() ? Rational(0) : b.coords[0];
        AClass r = a;
        for (auto& c : r.coords) c *= s;
        return r;
    }
    if (a.degree == 0) {
        Rational s = a.coords.empty() ? Rational(0) : a.coords[0];
        AClass r = b;
        for (auto& c : r.coords) c *= s;
        return r;
    }
    size_t d = a.degree + b.degree;
    ensure(d);
    const auto& bwords = basis_words(b.degree);
    AClass out{d, std::vector<Rational>(dim(d))};
    for (size_t j = 0; j < b.coords.size(); ++j) {
        if (b.coords[j] == 0) continue;
        Word w = word_from_offset(bwords[j], b.degree, n);
        std::vector<Rational> state = a.coords;
        size_t deg = a.degree;
        for (uint8_t letter : w) state = extend(++deg, state, letter);
        for (size_t c = 0; c < state.size(); ++c)
            if (state[c] != 0) out.coords[c] += b.coords[j] * state[c];
    }
    return out;
}

TensorElement GradedAlgebra::lift(const AClass& a) {
    const size_t n = pres_.gen_count;
    TensorElement e(a.degree, std::vector<Rational>(pow_sz(n, a.degree)));
    const auto& words = basis_words(a.degree);
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != 0) e.coords[words[i]] = a.coords[i];
    return e;
}

size_t GradedAlgebra::right_ideal_dim(const std::vector<TensorElement>& gens, size_t d) {
    ensure(d);
    Echelon span(dim(d));
    for (const auto& g : gens) {
        if (g.degree > d) throw precondition_error("generator degree exceeds target degree");
        AClass gc = nf_class(g);
        if (gc.is_zero()) continue;
        size_t rest = d - g.degree;
        for (size_t j = 0; j < dim(rest); ++j) {
            AClass unit{rest, std::vector<Rational>(dim(rest))};
            unit.coords[j] = 1;
            span.insert(multiply(gc, unit).coords);
        }
    }
    return span.rank();
}

Subspace ideal_component(const QuadraticPresentation& p, size_t d) {
    if (d < 2) throw precondition_error("ideal components start at degree 2");
    const size_t n = p.gen_count;
    size_t amb = pow_sz(n, d);
    Echelon span(amb);
    const QMatrix& rel = p.relations.basis;
    for (size_t i = 0; i + 2 <= d; ++i) {
        size_t pre = pow_sz(n, i);
        size_t suf = pow_sz(n, d - 2 - i);
        for (size_t pu = 0; pu < pre; ++pu)
            for (size_t sv = 0; sv < suf; ++sv)
                for (size_t r = 0; r < rel.rows; ++r) {
                    std::vector<Rational> v(amb);
                    for (size_t ab = 0; ab < n * n; ++ab) {
                        const Rational& c = rel.at(r, ab);
                        if (c == 0) continue;
                        size_t off = (pu * n * n + ab) * suf + sv;
                        v[off] = c;
                    }
                    span.insert(std::move(v));
                }
    }
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < span.rank(); ++i) rows.push_back(span.row(i));
    return Subspace::from_rows(amb, rows);
}

GradedComponent graded_component(GradedAlgebra& a, size_t d) {
    GradedComponent g;
    g.degree = d;
    g.ideal_span = ideal_component(a.presentation(), d);
    g.complement_basis = a.basis_words(d);
    return g;
}

size_t graded_dim(GradedAlgebra& a, size_t d) { return a.dim(d); }

} // namespace asreg
