#pragma once

// Partial fraction decomposition of p/q for a factored, monic q.
//
// Complex mode: p/q = s + Σ_i Σ_j c_ij/(x - d_i)^{m_i - j},
//     c_ij = (1/j!)(p/q_i)^(j)(d_i),  q_i = q/(x - d_i)^{m_i}.
//
// Real mode: linear factors as above; for each irreducible quadratic
// Q = x² + ux + v of multiplicity μ with roots b, b̄ and η = q/Q^μ,
//     M_k = [b, b̄, ..., b, b̄] (p/η)           (2k + 2 nodes)
//     N_k = [b, b̄, ..., b, b̄] ((t + u)·p/η)
// give the term (M_k x + N_k)/Q^{μ-k}. The divided differences are taken in
// Q[θ]/(Q(θ)); their θ-components must vanish.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/interp.hpp>
#include <pfcy/poly.hpp>

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pfcy {

struct LinearFactor {
    Rational root;  ///< factor (x - root)
    unsigned multiplicity;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

struct QuadraticFactor {
    Rational u;  ///< factor x² + ux + v
    Rational v;
    unsigned multiplicity;

    RatPoly polynomial() const { return RatPoly{v, u, Rational(1)}; }
    friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

template <ExactField X>
struct RootFactor {
    X root;
    unsigned multiplicity;
    friend bool operator==(const RootFactor&, const RootFactor&) = default;
};

/// q = Π (x - a)^m · Π (x² + ux + v)^μ over Q.
struct RealFactorization {
    std::vector<LinearFactor> linear;
    std::vector<QuadraticFactor> quadratic;

    void validate() const {
        if (linear.empty() && quadratic.empty()) throw invalid_input("empty factorization");
        for (std::size_t i = 0; i < linear.size(); ++i) {
            if (linear[i].multiplicity == 0) throw invalid_input("factor multiplicity must be positive");
            for (std::size_t j = i + 1; j < linear.size(); ++j)
                if (linear[i].root == linear[j].root)
                    throw invalid_input("repeated linear factor (x - " + linear[i].root.to_string() + "); merge the exponents");
        }
        for (std::size_t i = 0; i < quadratic.size(); ++i) {
            const auto& f = quadratic[i];
            if (f.multiplicity == 0) throw invalid_input("factor multiplicity must be positive");
            if ((f.u * f.u - Rational(4) * f.v).sign() >= 0)
                throw invalid_input("quadratic factor x^2 + (" + f.u.to_string() + ")x + (" + f.v.to_string() +
                                    ") is reducible; split it into linear factors");
            for (std::size_t j = i + 1; j < quadratic.size(); ++j)
                if (f.u == quadratic[j].u && f.v == quadratic[j].v)
                    throw invalid_input("repeated quadratic factor; merge the exponents");
        }
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : linear) d += f.multiplicity;
        for (const auto& f : quadratic) d += 2 * f.multiplicity;
        return d;
    }

    RatPoly expand() const {
        RatPoly q{Rational(1)};
        for (const auto& f : linear) q *= pow(RatPoly::x_minus(f.root), f.multiplicity);
        for (const auto& f : quadratic) q *= pow(f.polynomial(), f.multiplicity);
        return q;
    }
};

/// q = Π (x - d_i)^{m_i} with all d_i in one field X.
template <ExactField X>
struct ComplexFactorization {
    std::vector<RootFactor<X>> roots;

    void validate() const {
        if (roots.empty()) throw invalid_input("empty factorization");
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].multiplicity == 0) throw invalid_input("factor multiplicity must be positive");
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (roots[i].root == roots[j].root)
                    throw invalid_input("repeated root " + to_string(roots[i].root) + "; merge the exponents");
        }
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& r : roots) d += r.multiplicity;
        return d;
    }

    UniPoly<X> expand() const {
        UniPoly<X> q = UniPoly<X>::constant(one_like(roots.at(0).root));
        for (const auto& r : roots) q *= pow(UniPoly<X>::x_minus(r.root), r.multiplicity);
        return q;
    }
};

enum class DecompositionMode { Complex, Real };

/// A denominator as supplied by a user: leading constant times monic
/// factors. The leading constant is folded into the numerator before
/// decomposing.
struct FactoredDenominator {
    DecompositionMode mode = DecompositionMode::Real;
    Rational leading{1};
    RealFactorization factors;

    RatPoly expand() const { return factors.expand() * leading; }
};

/// Rational roots only (no quadratic factors).
inline ComplexFactorization<Rational> rational_roots(const RealFactorization& den) {
    if (!den.quadratic.empty()) throw invalid_input("factorization has quadratic factors; roots are not rational");
    ComplexFactorization<Rational> out;
    for (const auto& f : den.linear) out.roots.push_back({f.root, f.multiplicity});
    return out;
}

/// Splits the single distinct quadratic factor into θ, θ̄ in Q[θ]/(Q(θ)).
/// Several distinct quadratics would need a composite field and are rejected.
inline ComplexFactorization<QuadExt> split_over_quadratic(const RealFactorization& den) {
    if (den.quadratic.size() != 1)
        throw invalid_input("complex splitting supports exactly one distinct quadratic factor, got " +
                            std::to_string(den.quadratic.size()));
    const auto& qf = den.quadratic.front();
    auto field = std::make_shared<const QuadField>(qf.u, qf.v);
    ComplexFactorization<QuadExt> out;
    for (const auto& f : den.linear) out.roots.push_back({QuadExt(field, f.root), f.multiplicity});
    QuadExt theta = QuadExt::theta(field);
    out.roots.push_back({theta, qf.multiplicity});
    out.roots.push_back({theta.conj(), qf.multiplicity});
    return out;
}

// ---------------------------------------------------------------------------
// Expansion

/// coeff / (x - center)^exponent
template <ExactField X>
struct LinearTerm {
    X center;
    unsigned exponent;
    X coeff;
    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// (M x + N) / (x² + ux + v)^exponent
struct QuadraticTerm {
    Rational u;
    Rational v;
    unsigned exponent;
    Rational M;
    Rational N;
    friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/// Terms are listed per factor in factorization order, exponents descending.
template <ExactField X>
struct PartialFractionExpansion {
    UniPoly<X> poly;
    std::vector<LinearTerm<X>> linear;
    std::vector<QuadraticTerm> quadratic;

    bool empty() const { return poly.is_zero() && linear.empty() && quadratic.empty(); }

    PartialFractionExpansion without_zero_terms() const {
        PartialFractionExpansion r;
        r.poly = poly;
        for (const auto& t : linear)
            if (!is_zero(t.coeff)) r.linear.push_back(t);
        for (const auto& t : quadratic)
            if (!t.M.is_zero() || !t.N.is_zero()) r.quadratic.push_back(t);
        return r;
    }

    friend bool operator==(const PartialFractionExpansion&, const PartialFractionExpansion&) = default;
};

/// p/q = s + r/q with deg r < deg q.
template <ExactField S>
std::pair<UniPoly<S>, UniPoly<S>> split_improper(const UniPoly<S>& p, const UniPoly<S>& q) {
    return poly_divmod(p, q);
}

/// Distinct roots: c_i = p(x_i)/q'(x_i), q'(x_i) = Π_{j≠i}(x_i - x_j).
template <ExactField X, class C>
    requires EmbedsInto<C, X>
PartialFractionExpansion<X> decompose_distinct(const UniPoly<C>& p, const std::vector<X>& roots) {
    if (roots.empty()) throw invalid_input("no roots given");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw invalid_input("repeated root " + to_string(roots[i]) + "; use the multiple-root decomposition");
    PartialFractionExpansion<X> e;
    if (p.is_zero()) return e;
    const X& like = roots[0];
    UniPoly<X> q = UniPoly<X>::constant(one_like(like));
    for (const auto& r : roots) q *= UniPoly<X>::x_minus(r);
    e.poly = split_improper(embed_poly(p, like), q).first;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        X dq = one_like(like);
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != i) dq *= roots[i] - roots[j];
        e.linear.push_back({roots[i], 1, evaluate(p, roots[i]) / dq});
    }
    return e;
}

/// Multiple roots through the univariate Lagrange–Taylor coefficients.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
PartialFractionExpansion<X> decompose_complex(const UniPoly<C>& p, const ComplexFactorization<X>& den) {
    den.validate();
    PartialFractionExpansion<X> e;
    if (p.is_zero()) return e;
    const X& like = den.roots[0].root;
    UniPoly<X> px = embed_poly(p, like);
    e.poly = split_improper(px, den.expand()).first;
    for (std::size_t i = 0; i < den.roots.size(); ++i) {
        UniPoly<X> qi = UniPoly<X>::constant(one_like(like));
        for (std::size_t j = 0; j < den.roots.size(); ++j)
            if (j != i) qi *= pow(UniPoly<X>::x_minus(den.roots[j].root), den.roots[j].multiplicity);
        const auto& [d, m] = den.roots[i];
        auto c = rational_taylor_coeffs(px, qi, d, m - 1);
        for (unsigned j = 0; j < m; ++j) e.linear.push_back({d, m - j, c[j]});
    }
    return e;
}

/// M_k, N_k for k = 0..μ-1 of one quadratic factor, as computed in the
/// extension field (before projecting to Q).
struct QuadraticPairValues {
    std::vector<QuadExt> M;
    std::vector<QuadExt> N;
};

inline QuadraticPairValues quadratic_pair_coefficients(const RatPoly& p, const RealFactorization& den, std::size_t index) {
    const auto& qf = den.quadratic.at(index);
    RatPoly eta{Rational(1)};
    for (const auto& f : den.linear) eta *= pow(RatPoly::x_minus(f.root), f.multiplicity);
    for (std::size_t j = 0; j < den.quadratic.size(); ++j)
        if (j != index) eta *= pow(den.quadratic[j].polynomial(), den.quadratic[j].multiplicity);

    auto field = std::make_shared<const QuadField>(qf.u, qf.v);
    const QuadExt b = QuadExt::theta(field);
    const QuadExt b_bar = b.conj();
    const UniRationalFn<Rational> f(p, eta);
    // t - 2c with c = -u/2 the real part of the roots.
    const UniRationalFn<Rational> shifted = f.times_linear(-qf.u);

    QuadraticPairValues out;
    std::vector<QuadExt> nodes;
    for (unsigned k = 0; k < qf.multiplicity; ++k) {
        nodes.push_back(b);
        nodes.push_back(b_bar);
        out.M.push_back(divided_difference(nodes, f));
        out.N.push_back(divided_difference(nodes, shifted));
    }
    return out;
}

/// Real decomposition with E (linear), M and N (quadratic) coefficients.
inline PartialFractionExpansion<Rational> decompose_real(const RatPoly& p, const RealFactorization& den) {
    den.validate();
    PartialFractionExpansion<Rational> e;
    if (p.is_zero()) return e;
    e.poly = split_improper(p, den.expand()).first;

    for (std::size_t nu = 0; nu < den.linear.size(); ++nu) {
        RatPoly psi{Rational(1)};
        for (std::size_t j = 0; j < den.linear.size(); ++j)
            if (j != nu) psi *= pow(RatPoly::x_minus(den.linear[j].root), den.linear[j].multiplicity);
        for (const auto& f : den.quadratic) psi *= pow(f.polynomial(), f.multiplicity);
        const auto& [a, m] = den.linear[nu];
        auto E = rational_taylor_coeffs(p, psi, a, m - 1);
        for (unsigned k = 0; k < m; ++k) e.linear.push_back({a, m - k, E[k]});
    }

    for (std::size_t nu = 0; nu < den.quadratic.size(); ++nu) {
        const auto& qf = den.quadratic[nu];
        auto vals = quadratic_pair_coefficients(p, den, nu);
        for (unsigned k = 0; k < qf.multiplicity; ++k) {
            if (!vals.M[k].is_real() || !vals.N[k].is_real())
                throw invariant_violation("real decomposition produced a non-real coefficient: M = " +
                                          vals.M[k].to_string() + ", N = " + vals.N[k].to_string());
            e.quadratic.push_back({qf.u, qf.v, qf.multiplicity - k, vals.M[k].a(), vals.N[k].a()});
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Recombination

/// (p, q) with p/q equal to the expansion, q the expanded denominator.
template <ExactField X>
std::pair<UniPoly<X>, UniPoly<X>> recombine(const PartialFractionExpansion<X>& e, const ComplexFactorization<X>& den) {
    den.validate();
    if (!e.quadratic.empty()) throw invalid_input("complex expansion cannot carry quadratic terms");
    UniPoly<X> q = den.expand();
    UniPoly<X> p = e.poly * q;
    for (const auto& t : e.linear) {
        const RootFactor<X>* f = nullptr;
        for (const auto& r : den.roots)
            if (r.root == t.center) f = &r;
        if (!f || t.exponent == 0 || t.exponent > f->multiplicity)
            throw invalid_input("expansion term 1/(x - " + to_string(t.center) + ")^" + std::to_string(t.exponent) +
                                " does not fit the denominator");
        auto [cof, rem] = poly_divmod(q, pow(UniPoly<X>::x_minus(t.center), t.exponent));
        p += cof * t.coeff;
    }
    return {p, q};
}

inline std::pair<RatPoly, RatPoly> recombine(const PartialFractionExpansion<Rational>& e, const RealFactorization& den) {
    den.validate();
    RatPoly q = den.expand();
    RatPoly p = e.poly * q;
    for (const auto& t : e.linear) {
        const LinearFactor* f = nullptr;
        for (const auto& r : den.linear)
            if (r.root == t.center) f = &r;
        if (!f || t.exponent == 0 || t.exponent > f->multiplicity)
            throw invalid_input("expansion term 1/(x - " + t.center.to_string() + ")^" + std::to_string(t.exponent) +
                                " does not fit the denominator");
        p += poly_divmod(q, pow(RatPoly::x_minus(t.center), t.exponent)).first * t.coeff;
    }
    for (const auto& t : e.quadratic) {
        const QuadraticFactor* f = nullptr;
        for (const auto& r : den.quadratic)
            if (r.u == t.u && r.v == t.v) f = &r;
        if (!f || t.exponent == 0 || t.exponent > f->multiplicity)
            throw invalid_input("expansion quadratic term does not fit the denominator");
        RatPoly cof = poly_divmod(q, pow(f->polynomial(), t.exponent)).first;
        p += cof * RatPoly{t.N, t.M};
    }
    return {p, q};
}

/// Cross-multiplied equality a/b == c/d.
template <ExactField S>
bool same_rational_function(const UniPoly<S>& a, const UniPoly<S>& b, const UniPoly<S>& c, const UniPoly<S>& d) {
    return a * d == c * b;
}

}  // namespace pfcy
