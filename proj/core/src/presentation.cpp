#include "asreg/presentation.hpp"

#include "asreg/error.hpp"

namespace asreg {

size_t pow_sz(size_t base, size_t exp) {
    size_t r = 1;
    while (exp--) r *= base;
    return r;
}

size_t word_offset(const Word& w, size_t n) {
    size_t off = 0;
    for (uint8_t letter : w) off = off * n + letter;
    return off;
}

Word word_from_offset(size_t offset, size_t degree, size_t n) {
    Word w(degree);
    for (size_t k = degree; k-- > 0;) {
        w[k] = static_cast<uint8_t>(offset % n);
        offset /= n;
    }
    return w;
}

std::string word_name(const Word& w, const std::vector<std::string>& names) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += names.at(w[k]);
    }
    return s;
}

std::vector<std::string> QuadraticPresentation::default_names(size_t n) {
    std::vector<std::string> v;
    for (size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

QuadraticPresentation::QuadraticPresentation(size_t n, std::vector<std::string> names, Subspace rels)
    : gen_count(n), gen_names(std::move(names)), relations(std::move(rels)) {
    if (gen_names.empty()) gen_names = default_names(n);
    if (relations.ambient != n * n) throw error("relation span has wrong ambient dimension");
}

QuadraticPresentation QuadraticPresentation::from_tensors(
    size_t n, const std::vector<std::vector<Rational>>& relation_tensors, std::vector<std::string> names) {
    Subspace w = Subspace::from_rows(n * n, relation_tensors);
    return QuadraticPresentation(n, std::move(names), std::move(w));
}

TensorElement TensorElement::from_word(const Word& w, size_t n) {
    TensorElement e(w.size(), std::vector<Rational>(pow_sz(n, w.size())));
    e.coords[word_offset(w, n)] = 1;
    return e;
}

TensorElement TensorElement::generator(size_t i, size_t n) {
    return from_word(Word{static_cast<uint8_t>(i)}, n);
}

TensorElement TensorElement::concat(const TensorElement& u, const TensorElement& v, size_t n) {
    size_t dv = pow_sz(n, v.degree);
    TensorElement r(u.degree + v.degree, std::vector<Rational>(u.coords.size() * v.coords.size()));
    for (size_t i = 0; i < u.coords.size(); ++i) {
        if (u.coords[i] == 0) continue;
        for (size_t j = 0; j < v.coords.size(); ++j)
            if (v.coords[j] != 0) r.coords[i * dv + j] = u.coords[i] * v.coords[j];
    }
    return r;
}

bool TensorElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

std::vector<Rational> tensor2(size_t n, size_t i, size_t j) {
    std::vector<Rational> v(n * n);
    v[i * n + j] = 1;
    return v;
}

std::vector<Rational> commutator2(size_t n, size_t i, size_t j) {
    std::vector<Rational> v(n * n);
    v[i * n + j] = 1;
    v[j * n + i] -= 1;
    return v;
}

std::vector<Rational> tensor2_of_forms(size_t n, const std::vector<Rational>& u,
                                       const std::vector<Rational>& v) {
    std::vector<Rational> t(n * n);
    for (size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (v[j] != 0) t[i * n + j] = u[i] * v[j];
    }
    return t;
}

} // namespace asreg
