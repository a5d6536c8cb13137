#pragma once

// Text formats: the presentation file grammar
//
//     dim <n>
//     e<i>*e<j> = <linear combination>     # comment
//
// with coefficients in Q(i) ("2", "-2/3", "i", "1+2*i"), the degeneration
// witness format (n rows of n rational-function entries in t, plus optional
// "param <name> = <expr>" lines), and cocycle expressions in D<i><j>
// coordinates.  Parsing is whitespace-insensitive inside expressions except
// that witness matrix entries are whitespace-separated and so must not
// contain spaces.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"
#include "lsa/degeneration.hpp"
#include "lsa/matrix.hpp"
#include "lsa/ratfunc.hpp"
#include "lsa/scalar.hpp"

namespace lsa {
namespace io {

namespace detail {

struct Token {
    enum Kind { Int, Ident, Sym, End } kind = End;
    std::string text;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < s.size()) {
        char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        if (c == '#') break;  // comment to end of line
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            out.push_back({Token::Int, s.substr(p, q - p)});
            p = q;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t q = p;
            while (q < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[q])) || s[q] == '_'))
                ++q;
            out.push_back({Token::Ident, s.substr(p, q - p)});
            p = q;
        } else if (std::string("+-*/^()=,").find(c) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, c)});
            ++p;
        } else {
            throw Error(std::string("unexpected character '") + c + "' in expression");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

// Value of an expression: a scalar plus a linear combination of named
// atoms (basis vectors e_k as (k,0), bilinear forms D_ij as (i,j)).
template <class K>
struct ExprValue {
    K scalar{};
    std::map<std::pair<int, int>, K> lin;

    bool pure_scalar() const { return lin.empty(); }

    ExprValue& operator+=(const ExprValue& o) {
        scalar += o.scalar;
        for (const auto& [key, v] : o.lin) {
            lin[key] += v;
            if (lin[key].is_zero()) lin.erase(key);
        }
        return *this;
    }
    ExprValue operator-() const {
        ExprValue r = *this;
        r.scalar = -r.scalar;
        for (auto& [key, v] : r.lin) v = -v;
        return r;
    }
    ExprValue& operator*=(const ExprValue& o) {
        if (!pure_scalar() && !o.pure_scalar())
            throw Error("product of two basis combinations is not allowed here");
        if (pure_scalar()) {
            ExprValue r = o;
            K f = scalar;
            r.scalar = f * r.scalar;
            for (auto& [key, v] : r.lin) v = f * v;
            *this = std::move(r);
        } else {
            if (!o.pure_scalar()) throw Error("unreachable");
            K f = o.scalar;
            scalar *= f;
            for (auto& [key, v] : lin) v = v * f;
        }
        std::erase_if(lin, [](const auto& kv) { return kv.second.is_zero(); });
        return *this;
    }
    ExprValue& operator/=(const ExprValue& o) {
        if (!o.pure_scalar()) throw Error("division by a basis combination");
        if (o.scalar.is_zero()) throw Error("division by zero in expression");
        scalar = scalar / o.scalar;
        for (auto& [key, v] : lin) v = v / o.scalar;
        return *this;
    }
};

// Recursive-descent expression parser; atom meanings come from `resolve`.
template <class K>
class ExprParser {
public:
    using Resolver = std::function<ExprValue<K>(const std::string&)>;

    ExprParser(std::vector<Token> toks, Resolver resolve)
        : toks_(std::move(toks)), resolve_(std::move(resolve)) {}

    ExprValue<K> parse_all() {
        ExprValue<K> v = expr();
        if (peek().kind != Token::End) throw Error("trailing input in expression: " + peek().text);
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool take_sym(const std::string& s) {
        if (peek().kind == Token::Sym && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprValue<K> expr() {
        ExprValue<K> v = take_sym("-") ? -term() : (take_sym("+"), term());
        for (;;) {
            if (take_sym("+")) v += term();
            else if (take_sym("-")) v += -term();
            else return v;
        }
    }

    ExprValue<K> term() {
        ExprValue<K> v = factor();
        for (;;) {
            if (take_sym("*")) v *= factor();
            else if (take_sym("/")) v /= factor();
            else return v;
        }
    }

    ExprValue<K> factor() {
        if (take_sym("-")) return -factor();
        if (take_sym("+")) return factor();
        ExprValue<K> v = atom();
        if (take_sym("^")) {
            bool neg = take_sym("-");
            if (peek().kind != Token::Int) throw Error("expected integer exponent after ^");
            long e = std::stol(take().text);
            if (!v.pure_scalar()) throw Error("exponent on a basis combination");
            ExprValue<K> r;
            r.scalar = K(1);
            for (long k = 0; k < e; ++k) r.scalar *= v.scalar;
            if (neg) {
                if (r.scalar.is_zero()) throw Error("zero to a negative power");
                r.scalar = K(1) / r.scalar;
            }
            return r;
        }
        return v;
    }

    ExprValue<K> atom() {
        if (take_sym("(")) {
            ExprValue<K> v = expr();
            if (!take_sym(")")) throw Error("missing ')' in expression");
            return v;
        }
        Token t = take();
        if (t.kind == Token::Int) {
            ExprValue<K> v;
            v.scalar = K(GaussRational(parse_rational(t.text)));
            return v;
        }
        if (t.kind == Token::Ident) return resolve_(t.text);
        throw Error("unexpected token '" + t.text + "' in expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Resolver resolve_;
};

template <class K>
ExprValue<K> scalar_atom(const std::string& name) {
    if (name == "i") {
        ExprValue<K> v;
        v.scalar = K(GaussRational::i());
        return v;
    }
    throw Error("unknown symbol '" + name + "' in expression");
}

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

// "e<k>" -> k, or nullopt
inline std::optional<std::size_t> basis_index(const std::string& ident) {
    if (ident.size() < 2 || ident[0] != 'e') return std::nullopt;
    for (std::size_t p = 1; p < ident.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(ident[p]))) return std::nullopt;
    return std::stoul(ident.substr(1));
}

}  // namespace detail

// Scalar expression over Q(i): numbers, i, + - * / ^, parentheses; named
// parameters resolved through `params` when given.
inline GaussRational parse_scalar_expr(const std::string& text, const ParamMap& params = {}) {
    auto resolve = [&params](const std::string& name) -> detail::ExprValue<GaussRational> {
        auto it = params.find(name);
        if (it != params.end()) return {it->second, {}};
        return detail::scalar_atom<GaussRational>(name);
    };
    detail::ExprParser<GaussRational> p(detail::tokenize(text), resolve);
    auto v = p.parse_all();
    return v.scalar;
}

// Rational-function expression in t over Q(i).
inline RatFunc parse_ratfunc_expr(const std::string& text,
                                  const std::map<std::string, RatFunc>& params = {}) {
    auto resolve = [&params](const std::string& name) -> detail::ExprValue<RatFunc> {
        if (name == "t") return {RatFunc::t(), {}};
        auto it = params.find(name);
        if (it != params.end()) return {it->second, {}};
        return detail::scalar_atom<RatFunc>(name);
    };
    detail::ExprParser<RatFunc> p(detail::tokenize(text), resolve);
    return p.parse_all().scalar;
}

// Cocycle expression in D<i><j> coordinates, e.g. "D12 + 2*D31 - i*D23".
inline Matrix<GaussRational> parse_cocycle_expr(const std::string& text, std::size_t n,
                                                const ParamMap& params = {}) {
    auto resolve = [&](const std::string& name) -> detail::ExprValue<GaussRational> {
        if (name.size() >= 2 && name[0] == 'D') {
            std::string digits = name.substr(1);
            bool all = !digits.empty();
            for (char c : digits) all = all && std::isdigit(static_cast<unsigned char>(c));
            if (all && digits.size() == 2) {
                int i = digits[0] - '0', j = digits[1] - '0';
                if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n))
                    throw Error("cocycle index out of range in " + name);
                detail::ExprValue<GaussRational> v;
                v.lin[{i, j}] = GaussRational(1);
                return v;
            }
        }
        auto it = params.find(name);
        if (it != params.end()) return {it->second, {}};
        return detail::scalar_atom<GaussRational>(name);
    };
    detail::ExprParser<GaussRational> p(detail::tokenize(text), resolve);
    auto v = p.parse_all();
    if (!v.scalar.is_zero()) throw Error("cocycle expression has a stray scalar term");
    Matrix<GaussRational> m(n, n);
    for (const auto& [key, coef] : v.lin) m(key.first - 1, key.second - 1) = coef;
    return m;
}

// Presentation files.  Unmentioned products are zero; duplicate product
// lines and out-of-range indices are errors.
inline Algebra<GaussRational> parse_presentation(const std::string& text) {
    auto lines = detail::logical_lines(text);
    if (lines.empty()) throw Error("empty presentation");
    std::istringstream head(lines[0]);
    std::string kw;
    std::size_t n = 0;
    head >> kw >> n;
    if (kw != "dim" || n == 0 || !head.eof())
        throw Error("presentation must start with 'dim <n>'");

    Algebra<GaussRational> a(n);
    std::vector<bool> seen(n * n, false);
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        auto toks = detail::tokenize(lines[ln]);
        if (toks.size() < 5 || toks[0].kind != detail::Token::Ident || toks[1].text != "*" ||
            toks[2].kind != detail::Token::Ident || toks[3].text != "=")
            throw Error("bad product line: " + lines[ln]);
        auto i = detail::basis_index(toks[0].text), j = detail::basis_index(toks[2].text);
        if (!i || !j) throw Error("bad product line: " + lines[ln]);
        if (*i < 1 || *i > n || *j < 1 || *j > n)
            throw Error("basis index out of range in: " + lines[ln]);
        if (seen[(*i - 1) * n + (*j - 1)])
            throw Error("duplicate product line for e" + std::to_string(*i) + "*e" +
                        std::to_string(*j));
        seen[(*i - 1) * n + (*j - 1)] = true;

        auto resolve = [n](const std::string& name) -> detail::ExprValue<GaussRational> {
            if (auto k = detail::basis_index(name)) {
                if (*k < 1 || *k > n)
                    throw Error("basis index out of range: " + name);
                detail::ExprValue<GaussRational> v;
                v.lin[{static_cast<int>(*k), 0}] = GaussRational(1);
                return v;
            }
            return detail::scalar_atom<GaussRational>(name);
        };
        std::vector<detail::Token> rhs(toks.begin() + 4, toks.end());
        detail::ExprParser<GaussRational> p(std::move(rhs), resolve);
        auto v = p.parse_all();
        if (!v.scalar.is_zero())
            throw Error("product right-hand side has a scalar term: " + lines[ln]);
        for (const auto& [key, coef] : v.lin)
            a.prod(*i - 1, *j - 1, key.first - 1) = coef;
    }
    return a;
}

namespace detail {

inline std::string coef_times_basis(const GaussRational& c, const std::string& basis) {
    if (c.is_one()) return basis;
    if (c == GaussRational(-1)) return "-" + basis;
    std::string s = to_string(c);
    bool needs_parens = c.re != 0 && c.im != 0;
    return (needs_parens ? "(" + s + ")" : s) + "*" + basis;
}

}  // namespace detail

// Normalized text form; parse(emit(a)) returns a byte-identical emit.
inline std::string emit_presentation(const Algebra<GaussRational>& a) {
    std::string out = "dim " + std::to_string(a.n) + "\n";
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            std::string rhs;
            for (std::size_t k = 0; k < a.n; ++k) {
                const GaussRational& c = a.prod(i, j, k);
                if (c.is_zero()) continue;
                std::string term =
                    detail::coef_times_basis(c, "e" + std::to_string(k + 1));
                if (rhs.empty()) rhs = term;
                else if (term[0] == '-') rhs += " - " + term.substr(1);
                else rhs += " + " + term;
            }
            if (!rhs.empty())
                out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " + rhs +
                       "\n";
        }
    return out;
}

// Witness files: optional "param <name> = <expr>" lines, then n rows of n
// whitespace- or comma-separated rational-function entries (no spaces
// inside an entry).
inline DegenerationWitness parse_witness(const std::string& text) {
    DegenerationWitness w;
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& line : detail::logical_lines(text)) {
        if (line.rfind("param", 0) == 0 &&
            (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos) throw Error("bad param line: " + line);
            std::string name = detail::strip(line.substr(5, eq - 5));
            if (name.empty()) throw Error("bad param line: " + line);
            w.param_index[name] = parse_ratfunc_expr(line.substr(eq + 1));
            continue;
        }
        std::vector<RatFunc> row;
        std::string entry;
        std::istringstream in(line);
        while (in >> entry) {
            while (!entry.empty() && entry.back() == ',') entry.pop_back();
            if (entry.empty()) continue;
            row.push_back(parse_ratfunc_expr(entry));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("witness has no matrix rows");
    std::size_t n = rows[0].size();
    if (rows.size() != n) throw Error("witness matrix is not square");
    w.basis = Matrix<RatFunc>(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error("witness matrix is not square");
        for (std::size_t j = 0; j < n; ++j) w.basis(i, j) = rows[i][j];
    }
    return w;
}

// "k=v,k2=v2" with scalar-expression values, as used by --params.
inline ParamMap parse_param_list(const std::string& text) {
    ParamMap out;
    std::size_t p = 0;
    while (p < text.size()) {
        std::size_t comma = text.find(',', p);
        std::string piece = text.substr(p, comma == std::string::npos ? std::string::npos
                                                                      : comma - p);
        p = comma == std::string::npos ? text.size() : comma + 1;
        piece = detail::strip(piece);
        if (piece.empty()) continue;
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos) throw Error("bad parameter binding: " + piece);
        std::string name = detail::strip(piece.substr(0, eq));
        out[name] = parse_scalar_expr(piece.substr(eq + 1));
    }
    return out;
}

}  // namespace io
}  // namespace lsa
