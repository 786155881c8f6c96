#pragma once

// Brute-force reference solvers for verification. Nothing here uses the
// interpolation formulas: partial fractions come from equating coefficients
// in a dense linear system, Hermite interpolants from collocation in the
// monomial basis.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/interp.hpp>
#include <pfcy/partfrac.hpp>
#include <pfcy/poly.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pfcy::oracle {

template <ExactField X>
struct LinearSystem {
    std::vector<std::vector<X>> matrix;
    std::vector<X> rhs;
};

/// Gauss–Jordan elimination with the first nonzero pivot. Throws on a
/// non-square or singular system.
template <ExactField X>
std::vector<X> solve_exact(LinearSystem<X> sys) {
    auto& a = sys.matrix;
    auto& b = sys.rhs;
    const std::size_t n = a.size();
    if (b.size() != n) throw invalid_input("right-hand side size does not match the matrix");
    for (const auto& row : a)
        if (row.size() != n) throw invalid_input("linear system is not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw math_error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const X inv = one_like(a[col][col]) / a[col][col];
        for (std::size_t c = col; c < n; ++c) a[col][c] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            const X f = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

namespace detail {

// Unknown k multiplies basis[k]; solves Σ u_k basis[k] = target coefficientwise.
template <ExactField X>
std::vector<X> solve_in_basis(const std::vector<UniPoly<X>>& basis, const UniPoly<X>& target, const X& like) {
    const std::size_t n = basis.size();
    if (target.degree() >= static_cast<int>(n)) throw invariant_violation("target degree exceeds the unknown count");
    LinearSystem<X> sys;
    sys.matrix.assign(n, std::vector<X>(n, zero_like(like)));
    sys.rhs.assign(n, zero_like(like));
    for (std::size_t k = 0; k < n; ++k) {
        const auto& c = basis[k].coeffs();
        if (c.size() > n) throw invariant_violation("basis polynomial degree exceeds the unknown count");
        for (std::size_t row = 0; row < c.size(); ++row) sys.matrix[row][k] = c[row];
    }
    for (std::size_t row = 0; row < target.coeffs().size(); ++row) sys.rhs[row] = target.coeffs()[row];
    return solve_exact(std::move(sys));
}

template <ExactField X>
UniPoly<X> power_of_x_times(const UniPoly<X>& q, std::size_t j, const X& like) {
    return UniPoly<X>::monomial(one_like(like), j) * q;
}

template <ExactField X>
std::size_t poly_part_unknowns(int deg_p, int deg_q) {
    return deg_p >= deg_q ? static_cast<std::size_t>(deg_p - deg_q + 1) : 0;
}

}  // namespace detail

/// Complex-mode coefficients by equating coefficients of
///     p = s·q + Σ c_ij · q/(x - d_i)^j.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
PartialFractionExpansion<X> oracle_partfrac(const UniPoly<C>& p, const ComplexFactorization<X>& den) {
    den.validate();
    const X& like = den.roots[0].root;
    UniPoly<X> px = embed_poly(p, like);
    UniPoly<X> q = den.expand();
    const std::size_t ns = detail::poly_part_unknowns<X>(px.degree(), q.degree());

    std::vector<UniPoly<X>> basis;
    for (std::size_t j = 0; j < ns; ++j) basis.push_back(detail::power_of_x_times(q, j, like));
    for (const auto& [d, m] : den.roots)
        for (unsigned e = m; e >= 1; --e) basis.push_back(poly_divmod(q, pow(UniPoly<X>::x_minus(d), e)).first);

    auto sol = detail::solve_in_basis(basis, px, like);
    PartialFractionExpansion<X> out;
    out.poly = UniPoly<X>(std::vector<X>(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(ns)));
    std::size_t k = ns;
    for (const auto& [d, m] : den.roots)
        for (unsigned e = m; e >= 1; --e) out.linear.push_back({d, e, sol[k++]});
    return out;
}

/// Real-mode coefficients over Q by equating coefficients of
///     p = s·q + Σ E·q/(x - a)^j + Σ (Mx + N)·q/(x² + ux + v)^j.
inline PartialFractionExpansion<Rational> oracle_partfrac(const RatPoly& p, const RealFactorization& den) {
    den.validate();
    const Rational like;
    RatPoly q = den.expand();
    const std::size_t ns = detail::poly_part_unknowns<Rational>(p.degree(), q.degree());

    std::vector<RatPoly> basis;
    for (std::size_t j = 0; j < ns; ++j) basis.push_back(detail::power_of_x_times(q, j, like));
    for (const auto& [a, m] : den.linear)
        for (unsigned e = m; e >= 1; --e) basis.push_back(poly_divmod(q, pow(RatPoly::x_minus(a), e)).first);
    for (const auto& f : den.quadratic)
        for (unsigned e = f.multiplicity; e >= 1; --e) {
            RatPoly cof = poly_divmod(q, pow(f.polynomial(), e)).first;
            basis.push_back(cof * RatPoly{Rational(0), Rational(1)});  // M
            basis.push_back(cof);                                       // N
        }

    auto sol = detail::solve_in_basis(basis, p, like);
    PartialFractionExpansion<Rational> out;
    out.poly = RatPoly(std::vector<Rational>(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(ns)));
    std::size_t k = ns;
    for (const auto& [a, m] : den.linear)
        for (unsigned e = m; e >= 1; --e) out.linear.push_back({a, e, sol[k++]});
    for (const auto& f : den.quadratic)
        for (unsigned e = f.multiplicity; e >= 1; --e) {
            Rational M = sol[k++];
            Rational N = sol[k++];
            out.quadratic.push_back({f.u, f.v, e, M, N});
        }
    return out;
}

/// Hermite interpolant by collocation: unknowns are the coefficients of the
/// monomials x^β, |β| ≤ n, one equation per condition D^α p(x^(i)) = c_i^α.
inline MultiPoly oracle_hermite(const HyperplaneConfig& cfg, const HermiteDataSet& data) {
    auto lattice = intersection_lattice(cfg);
    data.validate(lattice);
    const std::size_t k = cfg.dim();
    const auto basis = multi_indices_up_to(k, cfg.degree());
    std::vector<MultiPoly> monomials;
    for (const auto& beta : basis) monomials.push_back(MultiPoly::monomial(k, beta, Rational(1)));

    LinearSystem<Rational> sys;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (const auto& alpha : multi_indices_up_to(k, lattice[i].multiplicity - 1)) {
            std::vector<Rational> row;
            for (const auto& mono : monomials) row.push_back(mpoly_derivative(mono, alpha).evaluate(lattice[i].coords));
            sys.matrix.push_back(std::move(row));
            sys.rhs.push_back(data[i].derivative(alpha));
        }
    }
    if (sys.matrix.size() != basis.size())
        throw math_error("collocation system has " + std::to_string(sys.matrix.size()) + " conditions for " +
                         std::to_string(basis.size()) + " unknowns");
    auto sol = solve_exact(std::move(sys));
    MultiPoly p(k);
    for (std::size_t j = 0; j < basis.size(); ++j) p.add_term(basis[j], sol[j]);
    return p;
}

}  // namespace pfcy::oracle
