#include "asreg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asreg {

namespace {

struct Cursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw parse_error(line, col(), std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (start == pos) throw parse_error(line, col(), "expected a name");
        return s.substr(start, pos - start);
    }
    bool at_number() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    Rational number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error(line, col(), "expected a number");
        std::string num = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) throw parse_error(line, col(), "expected a denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        try {
            return parse_rational(num);
        } catch (const error& e) {
            throw parse_error(line, col(), e.what());
        }
    }
};

size_t gen_index(const std::vector<std::string>& gens, const std::string& name, int line, int col) {
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw parse_error(line, col, "unknown generator: " + name);
    return static_cast<size_t>(it - gens.begin());
}

// [rational "*"] name ("*" name)* — returns (coefficient, generator list)
std::pair<Rational, std::vector<size_t>> parse_term(Cursor& c, const std::vector<std::string>& gens) {
    Rational coef = 1;
    if (c.at_number()) {
        coef = c.number();
        c.expect('*');
    }
    std::vector<size_t> names;
    int col0 = c.col();
    names.push_back(gen_index(gens, c.ident(), c.line, col0));
    while (c.accept('*')) {
        col0 = c.col();
        names.push_back(gen_index(gens, c.ident(), c.line, col0));
    }
    return {coef, names};
}

std::vector<Rational> parse_relation_expr(Cursor& c, const std::vector<std::string>& gens) {
    size_t n = gens.size();
    std::vector<Rational> tensor(n * n);
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    while (true) {
        int col0 = c.col();
        auto [coef, names] = parse_term(c, gens);
        if (names.size() != 2)
            throw parse_error(c.line, col0, "non-quadratic term (expected name*name)");
        tensor[names[0] * n + names[1]] += sign * coef;
        if (c.done()) break;
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else throw parse_error(c.line, c.col(), "expected '+' or '-'");
    }
    return tensor;
}

LinearForm parse_form(Cursor& c, const std::vector<std::string>& gens, char stop) {
    if (gens.size() != 4) throw parse_error(c.line, c.col(), "quadric forms need 4 generators");
    LinearForm f;
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    while (true) {
        Rational coef = 1;
        if (c.at_number()) {
            coef = c.number();
            if (!c.accept('*')) {
                // a bare rational is not a linear term
                throw parse_error(c.line, c.col(), "expected '*' after coefficient");
            }
        }
        int col0 = c.col();
        size_t g = gen_index(gens, c.ident(), c.line, col0);
        f.c[g] += sign * coef;
        char p = c.peek();
        if (p == stop || p == '\0') break;
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else throw parse_error(c.line, c.col(), "expected '+', '-' or end of form");
    }
    return f;
}

} // namespace

QuadraticPresentation PresentationFile::presentation() const {
    return QuadraticPresentation::from_tensors(generators.size(), relation_tensors, generators);
}

PresentationFile parse_presentation(const std::string& text) {
    PresentationFile file;
    file.generators = QuadraticPresentation::default_names(4);
    bool generators_explicit = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string body = raw.substr(0, raw.find('#'));
        if (std::all_of(body.begin(), body.end(),
                        [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }))
            continue;
        size_t colon = body.find(':');
        if (colon == std::string::npos)
            throw parse_error(lineno, 1, "expected 'keyword:' at line start");
        std::string keyword = body.substr(0, colon);
        keyword.erase(std::remove_if(keyword.begin(), keyword.end(),
                                     [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                      keyword.end());
        std::string rest = body.substr(colon + 1);
        Cursor c{rest, lineno};

        if (keyword == "generators") {
            if (!file.relation_tensors.empty())
                throw parse_error(lineno, 1, "generators must precede relations");
            std::vector<std::string> gens;
            while (!c.done()) gens.push_back(c.ident());
            if (gens.empty()) throw parse_error(lineno, c.col(), "no generators listed");
            file.generators = gens;
            generators_explicit = true;
        } else if (keyword == "relation") {
            auto tensor = parse_relation_expr(c, file.generators);
            if (std::all_of(tensor.begin(), tensor.end(),
                            [](const Rational& x) { return x == 0; }))
                throw parse_error(lineno, 1, "zero relation");
            file.relation_tensors.push_back(std::move(tensor));
        } else if (keyword == "quadric") {
            c.expect('(');
            LinearForm l1 = parse_form(c, file.generators, ',');
            c.expect(',');
            LinearForm l2 = parse_form(c, file.generators, ')');
            c.expect(')');
            try {
                file.quadric = QuadricSpec(l1, l2);
            } catch (const error& e) {
                throw parse_error(lineno, 1, e.what());
            }
        } else if (keyword == "tau") {
            try {
                file.tau = QMatrix::parse(rest);
            } catch (const error& e) {
                throw parse_error(lineno, 1, e.what());
            }
            if (file.tau->rows != 4 || file.tau->cols != 4)
                throw parse_error(lineno, 1, "tau must be a 4x4 matrix");
        } else {
            throw parse_error(lineno, 1, "unknown keyword: " + keyword);
        }
    }
    (void)generators_explicit;
    return file;
}

std::string print_presentation(const QuadraticPresentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : p.gen_names) os << " " << g;
    os << "\n";
    size_t n = p.gen_count;
    for (size_t r = 0; r < p.relations.dim(); ++r) {
        os << "relation: ";
        bool first = true;
        for (size_t off = 0; off < n * n; ++off) {
            const Rational& c = p.relations.basis.at(r, off);
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) os << mag << "*";
            os << p.gen_names[off / n] << "*" << p.gen_names[off % n];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace asreg
