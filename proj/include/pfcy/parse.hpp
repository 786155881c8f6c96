#pragma once

// Recursive-descent parser for polynomial text.
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary | implicit)*      implicit: ident or '(' follows
//   unary    := ('+' | '-') unary | power
//   power    := primary ('^' integer)?
//   primary  := integer | ident | '(' expr ')'
//
// Division is only by nonzero constants, so "1/2*x" and "x/3" are fine.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/partfrac.hpp>
#include <pfcy/poly.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfcy {

struct Ast {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    std::size_t line = 1;
    std::size_t column = 1;
    Rational value;          // Number
    std::string name;        // Variable
    unsigned exponent = 0;   // Pow
    std::vector<Ast> children;
};

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw parse_error(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({k, std::string(1, c), l, cl});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Ast parse() {
        if (peek().kind == Tok::End) throw parse_error("empty expression", peek().line, peek().column);
        Ast e = expr();
        if (peek().kind != Tok::End) throw parse_error("unexpected " + describe(peek()), peek().line, peek().column);
        return e;
    }

private:
    static constexpr unsigned kMaxExponent = 4096;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    static Ast node(Ast::Kind k, const Token& at, std::vector<Ast> children = {}) {
        Ast a{k, at.line, at.column, {}, {}, 0, std::move(children)};
        return a;
    }

    Ast expr() {
        Ast lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = next();
            Ast rhs = term();
            lhs = node(op.kind == Tok::Plus ? Ast::Kind::Add : Ast::Kind::Sub, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Ast term() {
        Ast lhs = unary();
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Star || t.kind == Tok::Slash) {
                Token op = next();
                Ast rhs = unary();
                lhs = node(op.kind == Tok::Star ? Ast::Kind::Mul : Ast::Kind::Div, op, {std::move(lhs), std::move(rhs)});
            } else if (t.kind == Tok::Ident || t.kind == Tok::LParen) {
                Token at = t;
                Ast rhs = unary();
                lhs = node(Ast::Kind::Mul, at, {std::move(lhs), std::move(rhs)});
            } else {
                return lhs;
            }
        }
    }

    Ast unary() {
        if (peek().kind == Tok::Minus) {
            Token op = next();
            return node(Ast::Kind::Neg, op, {unary()});
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Ast power() {
        Ast base = primary();
        if (peek().kind != Tok::Caret) return base;
        Token caret = next();
        if (peek().kind == Tok::Minus) throw parse_error("negative exponent", peek().line, peek().column);
        if (peek().kind != Tok::Number)
            throw parse_error("exponent must be a non-negative integer literal, found " + describe(peek()), peek().line,
                              peek().column);
        Token num = next();
        if (num.text.size() > 5 || std::stoul(num.text) > kMaxExponent)
            throw parse_error("exponent " + num.text + " is too large", num.line, num.column);
        Ast p = node(Ast::Kind::Pow, caret, {std::move(base)});
        p.exponent = static_cast<unsigned>(std::stoul(num.text));
        return p;
    }

    Ast primary() {
        Token t = next();
        switch (t.kind) {
            case Tok::Number: {
                Ast a = node(Ast::Kind::Number, t);
                a.value = Rational(mpz_class(t.text, 10));
                return a;
            }
            case Tok::Ident: {
                Ast a = node(Ast::Kind::Variable, t);
                a.name = t.text;
                return a;
            }
            case Tok::LParen: {
                Ast e = expr();
                if (peek().kind != Tok::RParen)
                    throw parse_error("expected ')' but found " + describe(peek()), peek().line, peek().column);
                next();
                return e;
            }
            default: throw parse_error("unexpected " + describe(t), t.line, t.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline std::size_t resolve_variable(const Ast& a, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == a.name) return i;
    // Positional aliases x1..xk are always accepted.
    if (a.name.size() > 1 && a.name[0] == 'x') {
        const std::string digits = a.name.substr(1);
        bool all_digits = digits.size() < 6;
        for (char c : digits) all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
        if (all_digits && digits[0] != '0') {
            std::size_t idx = std::stoul(digits);
            if (idx >= 1 && idx <= vars.size()) return idx - 1;
        }
    }
    throw parse_error("unknown variable '" + a.name + "'", a.line, a.column);
}

}  // namespace detail

inline Ast parse_ast(std::string_view text) { return detail::Parser(text).parse(); }

/// Lowers an expression tree to a polynomial in the declared variables.
inline MultiPoly lower(const Ast& a, const std::vector<std::string>& vars) {
    const std::size_t k = vars.size();
    switch (a.kind) {
        case Ast::Kind::Number: return MultiPoly::constant(k, a.value);
        case Ast::Kind::Variable: return MultiPoly::variable(k, detail::resolve_variable(a, vars));
        case Ast::Kind::Add: return lower(a.children[0], vars) + lower(a.children[1], vars);
        case Ast::Kind::Sub: return lower(a.children[0], vars) - lower(a.children[1], vars);
        case Ast::Kind::Mul: return lower(a.children[0], vars) * lower(a.children[1], vars);
        case Ast::Kind::Neg: return -lower(a.children[0], vars);
        case Ast::Kind::Pow: {
            MultiPoly base = lower(a.children[0], vars);
            if (base.total_degree() > 0 && static_cast<unsigned long>(base.total_degree()) * a.exponent > 4096)
                throw parse_error("polynomial degree too large", a.line, a.column);
            return pow(base, a.exponent);
        }
        case Ast::Kind::Div: {
            MultiPoly den = lower(a.children[1], vars);
            if (den.is_zero()) throw parse_error("division by zero", a.line, a.column);
            if (den.total_degree() > 0) throw parse_error("division by a non-constant polynomial", a.line, a.column);
            return lower(a.children[0], vars) * (Rational(1) / den.coeff(MultiIndex(k)));
        }
    }
    throw invariant_violation("unhandled AST node");
}

/// Parses text over the given variables (x1..xk aliases always accepted).
inline MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    return lower(parse_ast(text), vars);
}

inline RatPoly to_univariate(const MultiPoly& p) {
    if (p.num_vars() != 1) throw invalid_input("polynomial is not univariate");
    std::vector<Rational> c(static_cast<std::size_t>(p.total_degree() + 1));
    for (const auto& [alpha, v] : p.terms()) c[alpha[0]] = v;
    return RatPoly(std::move(c));
}

inline MultiPoly to_multivariate(const RatPoly& p) {
    MultiPoly m(1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) m.add_term(MultiIndex{static_cast<unsigned>(i)}, p.coeffs()[i]);
    return m;
}

inline RatPoly parse_univariate(std::string_view text, const std::string& var = "x") {
    return to_univariate(parse_polynomial(text, {var}));
}

// ---------------------------------------------------------------------------
// Factored denominators

struct ParsedDenominator {
    FactoredDenominator denominator;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::string at(const Ast& a) { return " (at " + std::to_string(a.line) + ":" + std::to_string(a.column) + ")"; }

inline void collect_factors(const Ast& a, unsigned exp, const std::string& var, ParsedDenominator& out) {
    auto& den = out.denominator;
    switch (a.kind) {
        case Ast::Kind::Mul:
            collect_factors(a.children[0], exp, var, out);
            collect_factors(a.children[1], exp, var, out);
            return;
        case Ast::Kind::Pow:
            if (static_cast<unsigned long>(exp) * a.exponent > 4096)
                throw parse_error("exponent too large", a.line, a.column);
            collect_factors(a.children[0], exp * a.exponent, var, out);
            return;
        case Ast::Kind::Neg:
            if (exp % 2) den.leading = -den.leading;
            collect_factors(a.children[0], exp, var, out);
            return;
        case Ast::Kind::Div: {
            MultiPoly d = lower(a.children[1], {var});
            if (d.is_zero()) throw parse_error("division by zero", a.line, a.column);
            if (d.total_degree() > 0) throw parse_error("division by a non-constant polynomial", a.line, a.column);
            den.leading /= pfcy::pow(d.coeff(MultiIndex(1)), exp);
            collect_factors(a.children[0], exp, var, out);
            return;
        }
        default: break;
    }
    if (exp == 0) return;
    RatPoly f = to_univariate(lower(a, {var}));
    switch (f.degree()) {
        case -1: throw invalid_input("denominator is zero" + at(a));
        case 0: den.leading *= pfcy::pow(f[0], exp); return;
        case 1: {
            Rational root = -f[0] / f[1];
            den.leading *= pfcy::pow(f[1], exp);
            for (auto& lf : den.factors.linear)
                if (lf.root == root) {
                    lf.multiplicity += exp;
                    out.warnings.push_back("repeated factor (x - " + root.to_string() + ") merged into exponent " +
                                           std::to_string(lf.multiplicity));
                    return;
                }
            den.factors.linear.push_back({root, exp});
            return;
        }
        case 2: {
            Rational u = f[1] / f[2], v = f[0] / f[2];
            Rational disc = u * u - Rational(4) * v;
            if (disc.sign() >= 0)
                throw invalid_input("quadratic factor " + to_string(f) + " is reducible over the rationals or reals" +
                                    " (discriminant " + disc.to_string() + " >= 0); split it into linear factors" +
                                    at(a));
            den.leading *= pfcy::pow(f[2], exp);
            for (auto& qf : den.factors.quadratic)
                if (qf.u == u && qf.v == v) {
                    qf.multiplicity += exp;
                    out.warnings.push_back("repeated quadratic factor merged into exponent " + std::to_string(qf.multiplicity));
                    return;
                }
            den.factors.quadratic.push_back({u, v, exp});
            return;
        }
        default:
            throw invalid_input("factor " + to_string(f) + " has degree " + std::to_string(f.degree()) +
                                "; the denominator must be a product of linear and quadratic factors" + at(a));
    }
}

}  // namespace detail

/// Product of powers of linear and irreducible quadratic factors, e.g.
/// "(x-1)^2*(x+1)*(x^2+1)^3". Identical factors are merged with a warning.
/// Mode is Real when any quadratic is present, Complex otherwise.
inline ParsedDenominator parse_factored_denominator(std::string_view text, const std::string& var = "x") {
    Ast a = parse_ast(text);
    ParsedDenominator out;
    detail::collect_factors(a, 1, var, out);
    if (out.denominator.factors.linear.empty() && out.denominator.factors.quadratic.empty())
        throw invalid_input("denominator is constant; nothing to decompose");
    out.denominator.mode =
        out.denominator.factors.quadratic.empty() ? DecompositionMode::Complex : DecompositionMode::Real;
    out.denominator.factors.validate();
    return out;
}

}  // namespace pfcy
