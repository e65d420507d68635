#include "asreg/rewriting.hpp"

#include "asreg/error.hpp"
#include "asreg/qmatrix.hpp"

namespace asreg {

RewriteSystem RewriteSystem::orient(const QuadraticPresentation& p) {
    RewriteSystem sys;
    size_t n = p.gen_count;
    sys.n_ = n;
    sys.rule_of_.assign(n * n, -1);

    // rref with column order reversed so pivots sit on the largest words
    const QMatrix& rel = p.relations.basis;
    size_t amb = n * n;
    QMatrix rev(rel.rows, amb);
    for (size_t i = 0; i < rel.rows; ++i)
        for (size_t j = 0; j < amb; ++j) rev.at(i, j) = rel.at(i, amb - 1 - j);
    auto [r, rank] = rref_rank(rev);
    for (size_t i = 0; i < rank; ++i) {
        size_t pj = 0;
        while (pj < amb && r.at(i, pj) == 0) ++pj;
        size_t lead = amb - 1 - pj;
        std::vector<std::pair<size_t, Rational>> tail;
        for (size_t j = pj + 1; j < amb; ++j)
            if (r.at(i, j) != 0) tail.emplace_back(amb - 1 - j, -r.at(i, j));
        sys.rule_of_[lead] = static_cast<int>(sys.tails_.size());
        sys.tails_.push_back(std::move(tail));
    }

    // Degree-3 overlap resolution. For quadratic leading words this is the
    // whole local-confluence condition (overlaps ab·c vs a·bc).
    sys.confluent_ = true;
    for (size_t a = 0; a < n && sys.confluent_; ++a)
        for (size_t b = 0; b < n && sys.confluent_; ++b) {
            if (!sys.is_lead(a, b)) continue;
            for (size_t c = 0; c < n && sys.confluent_; ++c) {
                if (!sys.is_lead(b, c)) continue;
                Word abc{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c)};
                // left-first and right-first single steps, then full reduction
                std::map<size_t, Rational> left, right;
                for (const auto& [w, coef] : sys.tails_[sys.rule_of_[a * n + b]]) {
                    Word t{static_cast<uint8_t>(w / n), static_cast<uint8_t>(w % n),
                           static_cast<uint8_t>(c)};
                    for (const auto& [off, cf] : sys.reduce_word(t)) {
                        left[off] += coef * cf;
                        if (left[off] == 0) left.erase(off);
                    }
                }
                for (const auto& [w, coef] : sys.tails_[sys.rule_of_[b * n + c]]) {
                    Word t{static_cast<uint8_t>(a), static_cast<uint8_t>(w / n),
                           static_cast<uint8_t>(w % n)};
                    for (const auto& [off, cf] : sys.reduce_word(t)) {
                        right[off] += coef * cf;
                        if (right[off] == 0) right.erase(off);
                    }
                }
                if (left != right) sys.confluent_ = false;
                (void)abc;
            }
        }
    return sys;
}

std::map<size_t, Rational> RewriteSystem::reduce_word(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        int r = rule_of_[w[i] * n_ + w[i + 1]];
        if (r < 0) continue;
        std::map<size_t, Rational> acc;
        for (const auto& [sub, coef] : tails_[static_cast<size_t>(r)]) {
            Word t = w;
            t[i] = static_cast<uint8_t>(sub / n_);
            t[i + 1] = static_cast<uint8_t>(sub % n_);
            for (const auto& [off, cf] : reduce_word(t)) {
                acc[off] += coef * cf;
                if (acc[off] == 0) acc.erase(off);
            }
        }
        return acc;
    }
    return {{word_offset(w, n_), Rational(1)}};
}

std::map<size_t, Rational> RewriteSystem::reduce(const TensorElement& e) const {
    std::map<size_t, Rational> acc;
    for (size_t off = 0; off < e.coords.size(); ++off) {
        if (e.coords[off] == 0) continue;
        Word w = word_from_offset(off, e.degree, n_);
        for (const auto& [o, cf] : reduce_word(w)) {
            acc[o] += e.coords[off] * cf;
            if (acc[o] == 0) acc.erase(o);
        }
    }
    return acc;
}

std::vector<Word> RewriteSystem::irreducible_words(size_t d) const {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (size_t c = 0; c < n_; ++c) {
            if (!cur.empty() && is_lead(cur.back(), c)) continue;
            cur.push_back(static_cast<uint8_t>(c));
            self(self);
            cur.pop_back();
        }
    };
    if (d == 0) return {Word{}};
    rec(rec);
    return out;
}

size_t RewriteSystem::irreducible_count(size_t d) const {
    if (d == 0) return 1;
    std::vector<size_t> v(n_, 1);
    for (size_t k = 1; k < d; ++k) {
        std::vector<size_t> w(n_, 0);
        for (size_t c = 0; c < n_; ++c)
            for (size_t j = 0; j < n_; ++j)
                if (!is_lead(j, c)) w[c] += v[j];
        v = std::move(w);
    }
    size_t total = 0;
    for (size_t c = 0; c < n_; ++c) total += v[c];
    return total;
}

size_t RewriteSystem::right_ideal_dim(const std::vector<TensorElement>& gens, size_t d) const {
    std::vector<Word> basis = irreducible_words(d);
    std::map<size_t, size_t> col;
    for (size_t i = 0; i < basis.size(); ++i) col[word_offset(basis[i], n_)] = i;
    Echelon span(basis.size());
    for (const auto& g : gens) {
        if (g.degree > d) throw precondition_error("generator degree exceeds target degree");
        for (const auto& m : irreducible_words(d - g.degree)) {
            std::vector<Rational> vec(basis.size());
            bool nonzero = false;
            for (size_t off = 0; off < g.coords.size(); ++off) {
                if (g.coords[off] == 0) continue;
                Word w = word_from_offset(off, g.degree, n_);
                w.insert(w.end(), m.begin(), m.end());
                for (const auto& [o, cf] : reduce_word(w)) {
                    vec[col.at(o)] += g.coords[off] * cf;
                    nonzero = true;
                }
            }
            if (nonzero) span.insert(std::move(vec));
        }
    }
    return span.rank();
}

} // namespace asreg
