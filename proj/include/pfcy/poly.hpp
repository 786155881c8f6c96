#pragma once

// Polynomial and jet arithmetic.
//
//  * MultiPoly: sparse polynomial over Q in k variables, keyed by exponent
//    vectors in graded-lexicographic order.
//  * UniPoly<S>: dense univariate polynomial over an exact field S (Q or a
//    quadratic extension), lowest degree first.
//  * MultiJet: truncated Taylor expansion at a point, storing D^α f(c)/α!.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pfcy {

// ---------------------------------------------------------------------------
// MultiIndex

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t k) : e_(k, 0) {}
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t k, std::size_t i) {
        MultiIndex m(k);
        m.e_.at(i) = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned total() const {
        unsigned t = 0;
        for (unsigned x : e_) t += x;
        return t;
    }

    Rational factorial() const {
        Rational r(1);
        for (unsigned x : e_) r *= pfcy::factorial(x);
        return r;
    }

    /// Componentwise β ≤ α.
    bool leq(const MultiIndex& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
        return a;
    }
    /// Requires b ≤ a.
    friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
        return a;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    /// Graded lexicographic: total degree first, then x1 > x2 > ... .
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        return a.e_ <=> b.e_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        return s;
    }

private:
    std::vector<unsigned> e_;
};

/// All α in k variables with |α| ≤ m, graded-lex ascending.
inline std::vector<MultiIndex> multi_indices_up_to(std::size_t k, unsigned m) {
    std::vector<MultiIndex> out;
    MultiIndex cur(k);
    // Enumerate by recursion on the first coordinate, then sort.
    auto rec = [&](auto&& self, std::size_t i, unsigned budget) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            cur[i] = e;
            self(self, i + 1, budget - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
}

inline Rational binomial(unsigned n, unsigned r) {
    if (r > n) return Rational(0);
    return pfcy::factorial(n) / (pfcy::factorial(r) * pfcy::factorial(n - r));
}

// ---------------------------------------------------------------------------
// MultiPoly

class MultiPoly {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    explicit MultiPoly(std::size_t num_vars = 0) : nvars_(num_vars) {}

    static MultiPoly constant(std::size_t k, const Rational& c) { return monomial(k, MultiIndex(k), c); }

    static MultiPoly variable(std::size_t k, std::size_t i) { return monomial(k, MultiIndex::unit(k, i), Rational(1)); }

    static MultiPoly monomial(std::size_t k, const MultiIndex& alpha, const Rational& c) {
        MultiPoly p(k);
        p.add_term(alpha, c);
        return p;
    }

    /// constant + Σ gradient[i]·x_i
    static MultiPoly linear(const Rational& constant, std::span<const Rational> gradient) {
        MultiPoly p(gradient.size());
        p.add_term(MultiIndex(gradient.size()), constant);
        for (std::size_t i = 0; i < gradient.size(); ++i) p.add_term(MultiIndex::unit(gradient.size(), i), gradient[i]);
        return p;
    }

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total()); }

    Rational coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& alpha, const Rational& c) {
        if (alpha.size() != nvars_) throw invalid_input("multi-index dimension mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != nvars_) throw invalid_input("evaluation point dimension mismatch");
        // Powers are cached per variable; degrees are small.
        std::vector<std::vector<Rational>> powers(nvars_);
        Rational sum;
        for (const auto& [alpha, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(Rational(1));
                while (pw.size() <= alpha[i]) pw.push_back(pw.back() * point[i]);
                t *= pw[alpha[i]];
            }
            sum += t;
        }
        return sum;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Graded-lex descending, e.g. "x^2*y - 1/2".
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void check(const MultiPoly& o) const {
        if (o.nvars_ != nvars_) throw invalid_input("polynomial dimension mismatch");
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r = MultiPoly::constant(p.num_vars(), Rational(1));
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

/// Variable names used when none are declared: x, y, z for k ≤ 3, else x1..xk.
inline std::vector<std::string> default_variables(std::size_t k) {
    if (k == 1) return {"x"};
    if (k == 2) return {"x", "y"};
    if (k == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

namespace detail {

inline std::string monomial_text(const MultiIndex& alpha, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[i];
        if (alpha[i] > 1) s += '^' + std::to_string(alpha[i]);
    }
    return s;
}

// Joins signed terms "c*m" with " + " / " - ".
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string body;
    if (mono.empty())
        body = mag.to_string();
    else if (mag == Rational(1))
        body = mono;
    else
        body = mag.to_string() + "*" + mono;
    if (out.empty())
        out = neg ? "-" + body : body;
    else
        out += (neg ? " - " : " + ") + body;
}

}  // namespace detail

inline std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
    if (vars.size() != nvars_) throw invalid_input("variable list does not match polynomial dimension");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) detail::append_term(out, it->second, detail::monomial_text(it->first, vars));
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(default_variables(p.num_vars())); }

/// D^α p.
inline MultiPoly mpoly_derivative(const MultiPoly& p, const MultiIndex& alpha) {
    if (alpha.size() != p.num_vars()) throw invalid_input("derivative multi-index dimension mismatch");
    MultiPoly r(p.num_vars());
    for (const auto& [beta, c] : p.terms()) {
        if (!alpha.leq(beta)) continue;
        Rational f = c;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (unsigned j = 0; j < alpha[i]; ++j) f *= Rational(beta[i] - j);
        r.add_term(beta - alpha, f);
    }
    return r;
}

// ---------------------------------------------------------------------------
// UniPoly<S>

template <ExactField S>
class UniPoly {
public:
    using scalar_type = S;

    UniPoly() = default;
    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const S& c) { return UniPoly(std::vector<S>{c}); }

    /// x - a
    static UniPoly x_minus(const S& a) { return UniPoly(std::vector<S>{-a, one_like(a)}); }

    static UniPoly monomial(const S& c, std::size_t n) {
        std::vector<S> v(n + 1, zero_like(c));
        v[n] = c;
        return UniPoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }
    const S& operator[](std::size_t i) const { return c_.at(i); }
    const S& leading() const {
        if (c_.empty()) throw math_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) {
            std::size_t old = c_.size();
            c_.insert(c_.end(), o.c_.begin() + static_cast<std::ptrdiff_t>(old), o.c_.end());
            for (std::size_t i = 0; i < old; ++i) c_[i] += o.c_[i];
        } else {
            for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }

    template <class T>
        requires(std::same_as<T, S> || std::same_as<T, Rational>)
    UniPoly& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
    }
    static bool is_zero_scalar(const S& s) { return pfcy::is_zero(s); }

    std::vector<S> c_;
};

using RatPoly = UniPoly<Rational>;

template <ExactField S, class T>
    requires(std::same_as<T, S> || std::same_as<T, Rational>)
UniPoly<S> operator*(UniPoly<S> p, const T& s) {
    return p *= s;
}

template <ExactField S>
UniPoly<S> pow(const UniPoly<S>& p, unsigned e) {
    if (p.is_zero()) {
        if (e == 0) throw math_error("zero polynomial raised to the power 0");
        return {};
    }
    UniPoly<S> r = UniPoly<S>::constant(one_like(p.leading()));
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

/// p(x) via Horner; x may live in a larger field than the coefficients.
template <class C, ExactField X>
    requires EmbedsInto<C, X>
X evaluate(const UniPoly<C>& p, const X& x) {
    X acc = zero_like(x);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + embed_like(c[i], x);
    return acc;
}

/// Reinterprets the coefficients of p in the field of `like`.
template <class C, ExactField X>
    requires EmbedsInto<C, X>
UniPoly<X> embed_poly(const UniPoly<C>& p, const X& like) {
    std::vector<X> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(embed_like(c, like));
    return UniPoly<X>(std::move(out));
}

template <ExactField S>
UniPoly<S> derivative(const UniPoly<S>& p) {
    if (p.degree() < 1) return {};
    std::vector<S> out;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(p.coeffs()[i] * Rational(i));
    return UniPoly<S>(std::move(out));
}

/// p = s·q + r with deg r < deg q.
template <ExactField S>
std::pair<UniPoly<S>, UniPoly<S>> poly_divmod(const UniPoly<S>& p, const UniPoly<S>& q) {
    if (q.is_zero()) throw math_error("polynomial division by zero");
    if (p.degree() < q.degree()) return {UniPoly<S>(), p};
    std::vector<S> rem = p.coeffs();
    const auto& qc = q.coeffs();
    const std::size_t dq = qc.size() - 1;
    const S lead_inv = one_like(qc.back()) / qc.back();
    std::vector<S> quot(rem.size() - dq, zero_like(qc.back()));
    for (std::size_t i = rem.size(); i-- > dq;) {
        S f = rem[i] * lead_inv;
        if (is_zero(f)) continue;
        for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= f * qc[j];
        quot[i - dq] = std::move(f);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dq), rem.end());
    return {UniPoly<S>(std::move(quot)), UniPoly<S>(std::move(rem))};
}

/// Coefficients of p(a + h) as a polynomial in h.
template <class C, ExactField X>
    requires EmbedsInto<C, X>
UniPoly<X> taylor_shift(const UniPoly<C>& p, const X& a) {
    UniPoly<X> h_plus_a(std::vector<X>{a, one_like(a)});
    UniPoly<X> acc;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * h_plus_a + UniPoly<X>::constant(embed_like(c[i], a));
    return acc;
}

/// First m+1 coefficients of num/den as power series; den[0] must be nonzero.
template <ExactField X>
std::vector<X> series_divide(const std::vector<X>& num, const std::vector<X>& den, std::size_t m, const X& like) {
    if (den.empty() || is_zero(den[0])) throw math_error("series division by a series with zero constant term");
    auto at = [&](const std::vector<X>& v, std::size_t i) { return i < v.size() ? v[i] : zero_like(like); };
    const X inv0 = one_like(like) / den[0];
    std::vector<X> g;
    g.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        X acc = at(num, j);
        for (std::size_t i = 1; i <= j && i < den.size(); ++i) acc -= den[i] * g[j - i];
        g.push_back(acc * inv0);
    }
    return g;
}

/// (1/j!)(p/ψ)^(j)(a) for j = 0..m.
template <class C, ExactField X>
    requires EmbedsInto<C, X>
std::vector<X> rational_taylor_coeffs(const UniPoly<C>& p, const UniPoly<C>& psi, const X& a, std::size_t m) {
    UniPoly<X> den = taylor_shift(psi, a);
    if (den.is_zero() || is_zero(den.coeffs()[0])) throw math_error("pole: denominator vanishes at " + to_string(a));
    UniPoly<X> num = taylor_shift(p, a);
    return series_divide(num.coeffs(), den.coeffs(), m, a);
}

template <ExactField S>
std::string to_string(const UniPoly<S>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (is_zero(c[i])) continue;
        std::string mono = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
        if constexpr (std::same_as<S, Rational>) {
            detail::append_term(out, c[i], mono);
        } else {
            std::string coef = c[i].to_string();
            std::string body = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
            out += out.empty() ? body : " + " + body;
        }
    }
    return out;
}

template <ExactField S>
std::ostream& operator<<(std::ostream& os, const UniPoly<S>& p) {
    return os << to_string(p);
}

// ---------------------------------------------------------------------------
// MultiJet

/// Order-m Taylor data at a center, coefficient at α = D^α f(center)/α!.
class MultiJet {
public:
    MultiJet(std::vector<Rational> center, unsigned order) : center_(std::move(center)), order_(order) {}

    /// Builds a jet from raw derivative values D^α f(center).
    static MultiJet from_derivatives(std::vector<Rational> center, unsigned order,
                                     const std::map<MultiIndex, Rational>& derivatives) {
        MultiJet j(std::move(center), order);
        for (const auto& [alpha, d] : derivatives) j.set(alpha, d / alpha.factorial());
        return j;
    }

    std::size_t dim() const { return center_.size(); }
    unsigned order() const { return order_; }
    const std::vector<Rational>& center() const { return center_; }
    const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(const MultiIndex& alpha) const {
        check_index(alpha);
        auto it = coeffs_.find(alpha);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// D^α f(center).
    Rational derivative(const MultiIndex& alpha) const { return coeff(alpha) * alpha.factorial(); }

    void set(const MultiIndex& alpha, const Rational& c) {
        check_index(alpha);
        if (c.is_zero())
            coeffs_.erase(alpha);
        else
            coeffs_[alpha] = c;
    }

    bool compatible(const MultiJet& o) const { return center_ == o.center_ && order_ == o.order_; }

    /// Σ c_α (x - center)^α.
    MultiPoly to_polynomial() const {
        const std::size_t k = dim();
        std::vector<std::vector<MultiPoly>> shifted(k);
        for (std::size_t i = 0; i < k; ++i) {
            shifted[i].push_back(MultiPoly::constant(k, Rational(1)));
            MultiPoly lin = MultiPoly::variable(k, i) - MultiPoly::constant(k, center_[i]);
            for (unsigned e = 1; e <= order_; ++e) shifted[i].push_back(shifted[i].back() * lin);
        }
        MultiPoly p(k);
        for (const auto& [alpha, c] : coeffs_) {
            MultiPoly t = MultiPoly::constant(k, c);
            for (std::size_t i = 0; i < k; ++i)
                if (alpha[i]) t *= shifted[i][alpha[i]];
            p += t;
        }
        return p;
    }

    /// Product truncated at total order m.
    friend MultiJet operator*(const MultiJet& a, const MultiJet& b) {
        if (!a.compatible(b)) throw invalid_input("jet multiplication needs equal center and order");
        MultiJet r(a.center_, a.order_);
        std::map<MultiIndex, Rational> acc;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                MultiIndex e = ea + eb;
                if (e.total() <= a.order_) acc[e] += ca * cb;
            }
        for (const auto& [e, c] : acc) r.set(e, c);
        return r;
    }

    friend bool operator==(const MultiJet&, const MultiJet&) = default;

private:
    void check_index(const MultiIndex& alpha) const {
        if (alpha.size() != center_.size()) throw invalid_input("jet multi-index dimension mismatch");
        if (alpha.total() > order_) throw invalid_input("multi-index " + alpha.to_string() + " exceeds jet order");
    }

    std::vector<Rational> center_;
    unsigned order_;
    std::map<MultiIndex, Rational> coeffs_;
};

/// Taylor jet of p at c to total order m.
inline MultiJet taylor_jet(const MultiPoly& p, std::vector<Rational> c, unsigned m) {
    if (c.size() != p.num_vars()) throw invalid_input("jet center dimension mismatch");
    MultiJet j(std::move(c), m);
    for (const auto& alpha : multi_indices_up_to(p.num_vars(), m)) {
        if (static_cast<int>(alpha.total()) > p.total_degree()) break;
        Rational d = mpoly_derivative(p, alpha).evaluate(j.center());
        if (!d.is_zero()) j.set(alpha, d / alpha.factorial());
    }
    return j;
}

/// Truncated power-series quotient: the jet g with g·den ≡ num through
/// total order m. Solved layer by layer from den's constant term.
inline MultiJet jet_divide(const MultiJet& num, const MultiJet& den) {
    if (!num.compatible(den)) throw invalid_input("jet division needs equal center and order");
    const std::size_t k = num.dim();
    const Rational d0 = den.coeff(MultiIndex(k));
    if (d0.is_zero()) throw math_error("jet division by a jet with zero constant term");
    MultiJet g(num.center(), num.order());
    for (const auto& alpha : multi_indices_up_to(k, num.order())) {
        Rational acc = num.coeff(alpha);
        for (const auto& [beta, db] : den.coeffs()) {
            if (beta.total() == 0 || !beta.leq(alpha)) continue;
            acc -= db * g.coeff(alpha - beta);
        }
        g.set(alpha, acc / d0);
    }
    return g;
}

}  // namespace pfcy
