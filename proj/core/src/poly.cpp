#include "asreg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asreg/error.hpp"
#include "asreg/qmatrix.hpp"

namespace asreg {

bool GrlexDesc::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b; // lexicographic on exponent vectors, descending
}

std::vector<std::string> CommPoly::default_vars(size_t n) {
    std::vector<std::string> v;
    for (size_t i = 1; i <= n; ++i) v.push_back("Y" + std::to_string(i));
    return v;
}

CommPoly CommPoly::constant(const Rational& c, size_t nvars) {
    CommPoly p(default_vars(nvars));
    p.add_term(std::vector<unsigned>(nvars, 0), c);
    return p;
}

CommPoly CommPoly::variable(size_t index, size_t nvars) {
    CommPoly p(default_vars(nvars));
    std::vector<unsigned> e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

size_t CommPoly::total_degree() const {
    size_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<size_t>(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

bool CommPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
    return true;
}

void CommPoly::add_term(const std::vector<unsigned>& expo, const Rational& c) {
    if (expo.size() != vars_.size()) throw error("term exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable lists differ");
    CommPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable lists differ");
    CommPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

CommPoly CommPoly::operator-() const {
    CommPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CommPoly CommPoly::scaled(const Rational& s) const {
    CommPoly r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
    if (vars_ != o.vars_) throw error("polynomial variable lists differ");
    CommPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<unsigned> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Rational CommPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw error("evaluate: wrong point arity");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string CommPoly::print() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool unit = mag == 1;
        if (!unit || !has_var) os << mag;
        bool lead = unit && has_var;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

CommPoly poly_partial(const CommPoly& p, size_t var_index) {
    if (var_index >= p.nvars()) throw error("unknown variable index");
    CommPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var_index] == 0) continue;
        std::vector<unsigned> d = e;
        d[var_index] -= 1;
        r.add_term(d, c * static_cast<long>(e[var_index]));
    }
    return r;
}

CommPoly poly_partial(const CommPoly& p, const std::string& var) {
    for (size_t i = 0; i < p.nvars(); ++i)
        if (p.vars()[i] == var) return poly_partial(p, i);
    throw error("unknown variable: " + var);
}

LinearForm LinearForm::unit(size_t i) {
    LinearForm f;
    f.c.at(i) = 1;
    return f;
}

bool LinearForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

Rational LinearForm::evaluate(const std::vector<Rational>& p) const {
    if (p.size() != 4) throw error("linear form expects 4 coordinates");
    Rational acc = 0;
    for (size_t i = 0; i < 4; ++i) acc += c[i] * p[i];
    return acc;
}

CommPoly LinearForm::to_poly() const {
    CommPoly p;
    for (size_t i = 0; i < 4; ++i) {
        std::vector<unsigned> e(4, 0);
        e[i] = 1;
        p.add_term(e, c[i]);
    }
    return p;
}

std::string LinearForm::print() const { return to_poly().print(); }

namespace {

// Single-divisor multivariate division: remainder 0 iff ℓ divides p.
std::optional<CommPoly> divide_by_form(const CommPoly& p, const LinearForm& form) {
    CommPoly lead_poly = form.to_poly();
    if (lead_poly.is_zero()) throw precondition_error("division by the zero form");
    auto lt = lead_poly.terms().begin(); // grlex-largest term of the form
    const std::vector<unsigned>& le = lt->first;
    const Rational& lc = lt->second;
    size_t lv = 0;
    while (le[lv] == 0) ++lv;

    CommPoly q(p.vars());
    CommPoly r = p;
    while (!r.is_zero()) {
        auto t = r.terms().begin();
        if (t->first[lv] == 0) return std::nullopt; // leading monomial not divisible
        std::vector<unsigned> qe = t->first;
        qe[lv] -= 1;
        Rational qc = t->second / lc;
        CommPoly mono(p.vars());
        mono.add_term(qe, qc);
        q = q + mono;
        r = r - mono * lead_poly;
    }
    return q;
}

} // namespace

std::pair<bool, CommPoly> poly_divisible(const CommPoly& p, const std::vector<LinearForm>& forms) {
    CommPoly q = p;
    for (const auto& f : forms) {
        if (f.is_zero()) throw precondition_error("division by the zero form");
        if (q.is_zero()) continue; // zero stays divisible with zero quotient
        auto next = divide_by_form(q, f);
        if (!next) return {false, CommPoly(p.vars())};
        q = *next;
    }
    return {true, q};
}

namespace {

bool projectively_dependent(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw error("line endpoints have different arity");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] - a[j] * b[i] != 0) return false;
    return true;
}

std::vector<Rational> poly_mul_uni(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

void trim_uni(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

std::vector<Rational> restrict_to_line(const CommPoly& p, const std::vector<Rational>& base,
                                       const std::vector<Rational>& dir) {
    if (projectively_dependent(base, dir))
        throw precondition_error("line base and direction are proportional");
    std::vector<Rational> acc;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Rational> term{c};
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<Rational> lin{base[i], dir[i]};
            trim_uni(lin);
            for (unsigned k = 0; k < e[i]; ++k) term = poly_mul_uni(term, lin);
        }
        if (term.size() > acc.size()) acc.resize(term.size());
        for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    trim_uni(acc);
    return acc;
}

std::vector<Rational> restrict_to_line_binary(const CommPoly& p, const std::vector<Rational>& base,
                                              const std::vector<Rational>& dir) {
    if (projectively_dependent(base, dir))
        throw precondition_error("line base and direction are proportional");
    if (!p.is_homogeneous()) throw precondition_error("binary restriction needs a homogeneous polynomial");
    size_t d = p.total_degree();
    std::vector<Rational> acc(d + 1); // coeff of t^k s^(d-k)
    for (const auto& [e, c] : p.terms()) {
        std::vector<Rational> term{c}; // binary form coefficients by t-power
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = poly_mul_uni(term, {base[i], dir[i]});
        for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    return acc;
}

size_t univariate_order_at(const std::vector<Rational>& coeffs, const Rational& at) {
    std::vector<Rational> v = coeffs;
    trim_uni(v);
    if (v.empty()) return poly_npos;
    size_t order = 0;
    while (true) {
        Rational val = 0;
        for (size_t i = v.size(); i-- > 0;) val = val * at + v[i];
        if (val != 0) return order;
        // synthetic division by (t - at)
        std::vector<Rational> q(v.size() - 1);
        Rational carry = 0;
        for (size_t i = v.size(); i-- > 1;) {
            carry = v[i] + carry * at;
            q[i - 1] = carry;
        }
        v = std::move(q);
        ++order;
        if (v.empty()) return order; // divided a constant away completely
    }
}

} // namespace asreg
