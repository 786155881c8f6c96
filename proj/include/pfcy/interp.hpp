#pragma once

// Interpolation engines.
//
// Multivariate: Chung–Yao Lagrange interpolation on general-position
// arrangements and Hermite interpolation on admissible arrangements through
// the Lagrange–Taylor formula
//
//     p_f = Σ_i φ_i · T[f/φ_i, x^(i), m_i - 1],
//
// where φ_i is the product of the linear forms not vanishing at x^(i).
//
// Univariate: confluent divided differences, the grouped Lagrange/Newton
// formula and the univariate Lagrange–Taylor formula. Scalars may be
// rationals or elements of a quadratic extension.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/poly.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pfcy {

// ---------------------------------------------------------------------------
// Hermite data

/// One jet per lattice point, in lattice order; the jet at x^(i) has order
/// m_i - 1 and stores D^α f(x^(i))/α!.
class HermiteDataSet {
public:
    HermiteDataSet() = default;
    explicit HermiteDataSet(std::vector<MultiJet> entries) : entries_(std::move(entries)) {}

    /// Samples the jets of f at every lattice point.
    static HermiteDataSet sample(const std::vector<LatticePoint>& lattice, const MultiPoly& f) {
        std::vector<MultiJet> entries;
        for (const auto& p : lattice) entries.push_back(taylor_jet(f, p.coords, p.multiplicity - 1));
        return HermiteDataSet(std::move(entries));
    }

    /// From raw derivative values D^α f(x^(i)), one map per lattice point.
    /// Every |α| ≤ m_i - 1 must be present, and nothing else.
    static HermiteDataSet from_derivatives(const std::vector<LatticePoint>& lattice,
                                           const std::vector<std::map<MultiIndex, Rational>>& derivatives) {
        if (derivatives.size() != lattice.size())
            throw invalid_input("Hermite data has " + std::to_string(derivatives.size()) + " points, lattice has " +
                                std::to_string(lattice.size()));
        std::vector<MultiJet> entries;
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            const auto& p = lattice[i];
            const unsigned order = p.multiplicity - 1;
            const auto expected = multi_indices_up_to(p.coords.size(), order);
            for (const auto& alpha : expected)
                if (!derivatives[i].contains(alpha))
                    throw invalid_input("Hermite data at point " + std::to_string(i) + " is missing derivative " +
                                        alpha.to_string());
            if (derivatives[i].size() != expected.size())
                throw invalid_input("Hermite data at point " + std::to_string(i) +
                                    " has derivatives beyond order m_i - 1 = " + std::to_string(order));
            entries.push_back(MultiJet::from_derivatives(p.coords, order, derivatives[i]));
        }
        return HermiteDataSet(std::move(entries));
    }

    const std::vector<MultiJet>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const MultiJet& operator[](std::size_t i) const { return entries_.at(i); }

    void validate(const std::vector<LatticePoint>& lattice) const {
        if (entries_.size() != lattice.size())
            throw invalid_input("Hermite data has " + std::to_string(entries_.size()) + " entries for " +
                                std::to_string(lattice.size()) + " lattice points");
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            if (entries_[i].center() != lattice[i].coords)
                throw invalid_input("Hermite data entry " + std::to_string(i) + " is not centered at its lattice point");
            if (entries_[i].order() != lattice[i].multiplicity - 1)
                throw invalid_input("Hermite data entry " + std::to_string(i) + " has order " +
                                    std::to_string(entries_[i].order()) + ", multiplicity requires " +
                                    std::to_string(lattice[i].multiplicity - 1));
        }
    }

    /// Number of scalar conditions Σ_i C(order_i + k, k).
    std::size_t condition_count() const {
        std::size_t n = 0;
        for (const auto& e : entries_) n += multi_indices_up_to(e.dim(), e.order()).size();
        return n;
    }

private:
    std::vector<MultiJet> entries_;
};

// ---------------------------------------------------------------------------
// Chung–Yao Lagrange

namespace detail {

inline MultiPoly product_of_forms(const HyperplaneConfig& cfg, const std::vector<bool>& skip) {
    MultiPoly p = MultiPoly::constant(cfg.dim(), Rational(1));
    for (std::size_t j = 0; j < cfg.size(); ++j)
        if (!skip[j]) p *= cfg[j].form();
    return p;
}

inline void require_general_position(const HyperplaneConfig& cfg) {
    auto c = classify_config(cfg);
    if (c != Classification::GeneralPosition)
        throw math_error("configuration is " + to_string(c) + ", Lagrange interpolation needs general position");
}

inline void check_subset(const HyperplaneConfig& cfg, const std::vector<std::size_t>& alpha) {
    if (alpha.size() != cfg.dim()) throw invalid_input("index tuple must have k entries");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] >= cfg.size()) throw invalid_input("hyperplane index out of range");
        if (i && alpha[i] <= alpha[i - 1]) throw invalid_input("index tuple must be strictly increasing");
    }
}

inline MultiPoly fundamental_unchecked(const HyperplaneConfig& cfg, const std::vector<std::size_t>& alpha) {
    std::vector<bool> skip(cfg.size(), false);
    for (std::size_t i : alpha) skip[i] = true;
    MultiPoly prod = product_of_forms(cfg, skip);
    auto point = intersect(cfg, alpha);
    if (!point) throw invariant_violation("general-position subset without an intersection point");
    Rational a = prod.evaluate(*point);
    if (a.is_zero()) throw invariant_violation("normalizing constant vanishes in general position");
    return prod * (Rational(1) / a);
}

}  // namespace detail

/// p*_α = Π_{i∉α} L_i / A_α: one at x_α, zero at every other node.
/// α holds 0-based, strictly increasing hyperplane indices.
inline MultiPoly cy_fundamental(const HyperplaneConfig& cfg, const std::vector<std::size_t>& alpha) {
    detail::check_subset(cfg, alpha);
    detail::require_general_position(cfg);
    return detail::fundamental_unchecked(cfg, alpha);
}

/// Σ_α c_α p*_α; one value for every k-subset of the hyperplanes.
inline MultiPoly cy_lagrange(const HyperplaneConfig& cfg, const std::map<std::vector<std::size_t>, Rational>& values) {
    detail::require_general_position(cfg);
    auto subsets = k_subsets(cfg.size(), cfg.dim());
    if (values.size() != subsets.size())
        throw invalid_input("Lagrange data has " + std::to_string(values.size()) + " values, configuration needs " +
                            std::to_string(subsets.size()));
    MultiPoly p(cfg.dim());
    for (const auto& alpha : subsets) {
        auto it = values.find(alpha);
        if (it == values.end()) throw invalid_input("Lagrange data is missing a value for some node");
        if (!it->second.is_zero()) p += detail::fundamental_unchecked(cfg, alpha) * it->second;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Hermite via Lagrange–Taylor

/// φ_i: product of the linear forms that do not pass through the point.
inline MultiPoly vanishing_cofactor(const HyperplaneConfig& cfg, const LatticePoint& point) {
    std::vector<bool> skip(cfg.size(), false);
    for (std::size_t j : point.incident) skip[j] = true;
    return detail::product_of_forms(cfg, skip);
}

/// One summand φ_i · T[f/φ_i, x^(i), m_i - 1] given the jet of f at x^(i).
inline MultiPoly lagrange_taylor_term(const HyperplaneConfig& cfg, const LatticePoint& point, const MultiJet& jet) {
    MultiPoly phi = vanishing_cofactor(cfg, point);
    MultiJet phi_jet = taylor_jet(phi, point.coords, point.multiplicity - 1);
    return phi * jet_divide(jet, phi_jet).to_polynomial();
}

/// The unique p in Π_n^k with D^α p(x^(i)) = c_i^α for |α| ≤ m_i - 1.
inline MultiPoly hermite_interpolate(const HyperplaneConfig& cfg, const HermiteDataSet& data) {
    auto lattice = intersection_lattice(cfg);
    data.validate(lattice);
    MultiPoly p(cfg.dim());
    for (std::size_t i = 0; i < lattice.size(); ++i) p += lagrange_taylor_term(cfg, lattice[i], data[i]);
    return p;
}

// ---------------------------------------------------------------------------
// Univariate

/// numerator / denominator with a nonzero denominator. Only evaluated at
/// points where the denominator does not vanish.
template <ExactField C>
struct UniRationalFn {
    UniPoly<C> numerator;
    UniPoly<C> denominator;

    UniRationalFn(UniPoly<C> num, UniPoly<C> den) : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator.is_zero()) throw math_error("rational function with zero denominator");
    }

    /// (t - shift)·f
    UniRationalFn times_linear(const C& shift) const {
        return UniRationalFn(numerator * UniPoly<C>::x_minus(shift), denominator);
    }
};

inline UniRationalFn<Rational> as_rational_fn(const RatPoly& p) { return {p, RatPoly{Rational(1)}}; }

template <class C, ExactField X>
    requires EmbedsInto<C, X>
UniRationalFn<X> embed_fn(const UniRationalFn<C>& f, const X& like) {
    return UniRationalFn<X>(embed_poly(f.numerator, like), embed_poly(f.denominator, like));
}

/// [x_0, ..., x_n] f with repetitions allowed. Equal nodes are clustered
/// first; entries spanning a single repeated node are Taylor coefficients of
/// f, all others follow the quotient recurrence.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
X divided_difference(std::span<const X> nodes, const UniRationalFn<C>& f) {
    if (nodes.empty()) throw invalid_input("divided difference of an empty node list");
    std::vector<X> distinct;
    std::vector<std::size_t> counts;
    for (const auto& x : nodes) {
        std::size_t j = 0;
        while (j < distinct.size() && !(distinct[j] == x)) ++j;
        if (j == distinct.size()) {
            distinct.push_back(x);
            counts.push_back(0);
        }
        ++counts[j];
    }
    std::vector<std::vector<X>> taylor;
    std::vector<X> z;
    std::vector<std::size_t> cluster;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
        taylor.push_back(rational_taylor_coeffs(f.numerator, f.denominator, distinct[j], counts[j] - 1));
        for (std::size_t r = 0; r < counts[j]; ++r) {
            z.push_back(distinct[j]);
            cluster.push_back(j);
        }
    }
    const std::size_t n = z.size();
    std::vector<X> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(taylor[cluster[i]][0]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const std::size_t j = i + level;
            if (cluster[i] == cluster[j])
                d[i] = taylor[cluster[i]][level];
            else
                d[i] = (d[i + 1] - d[i]) / (z[j] - z[i]);
        }
    }
    return d[0];
}

template <ExactField X, class C>
    requires EmbedsInto<C, X>
X divided_difference(const std::vector<X>& nodes, const UniRationalFn<C>& f) {
    return divided_difference(std::span<const X>(nodes), f);
}

/// Newton form Σ_j (x - z_0)...(x - z_{j-1}) [z_0..z_j] f on the nodes in the
/// given order; repeated nodes give the Hermite interpolant.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
UniPoly<X> newton_interpolant(const std::vector<X>& nodes, const UniRationalFn<C>& f) {
    if (nodes.empty()) throw invalid_input("interpolation on an empty node list");
    UniPoly<X> basis = UniPoly<X>::constant(one_like(nodes[0]));
    UniPoly<X> p;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        X dd = divided_difference(std::span<const X>(nodes.data(), j + 1), f);
        p += basis * dd;
        basis *= UniPoly<X>::x_minus(nodes[j]);
    }
    return p;
}

/// Σ_i ψ_i · P[f/ψ_i; group i], ψ_i the node polynomial of the other groups.
/// Nodes must be pairwise distinct within and across groups.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
UniPoly<X> grouped_lagrange(const std::vector<std::vector<X>>& groups, const UniRationalFn<C>& f) {
    std::vector<X> all;
    for (const auto& g : groups) {
        if (g.empty()) throw invalid_input("empty node group");
        all.insert(all.end(), g.begin(), g.end());
    }
    if (all.empty()) throw invalid_input("grouped interpolation without nodes");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) throw invalid_input("duplicate node " + to_string(all[i]));
    const X& like = all[0];
    UniRationalFn<X> fx = embed_fn(f, like);
    UniPoly<X> result;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        UniPoly<X> psi = UniPoly<X>::constant(one_like(like));
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (j != i)
                for (const auto& d : groups[j]) psi *= UniPoly<X>::x_minus(d);
        UniRationalFn<X> local(fx.numerator, fx.denominator * psi);
        result += psi * newton_interpolant(groups[i], local);
    }
    return result;
}

template <ExactField X>
struct NodeMultiplicity {
    X node;
    unsigned multiplicity;
};

/// Σ_i q_i(x) Σ_{j<m_i} (1/j!)(f/q_i)^(j)(d_i) (x - d_i)^j with
/// q_i = q/(x - d_i)^{m_i}, q = Π (x - d_i)^{m_i}.
template <ExactField X, class C>
    requires EmbedsInto<C, X>
UniPoly<X> uni_lagrange_taylor(const std::vector<NodeMultiplicity<X>>& centers, const UniRationalFn<C>& f) {
    if (centers.empty()) throw invalid_input("Lagrange–Taylor interpolation without centers");
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (centers[i].multiplicity == 0) throw invalid_input("center multiplicity must be positive");
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (centers[i].node == centers[j].node) throw invalid_input("coincident centers " + to_string(centers[i].node));
    }
    const X& like = centers[0].node;
    UniRationalFn<X> fx = embed_fn(f, like);
    UniPoly<X> result;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        UniPoly<X> qi = UniPoly<X>::constant(one_like(like));
        for (std::size_t j = 0; j < centers.size(); ++j)
            if (j != i) qi *= pow(UniPoly<X>::x_minus(centers[j].node), centers[j].multiplicity);
        const auto& d = centers[i].node;
        auto c = rational_taylor_coeffs(fx.numerator, fx.denominator * qi, d, centers[i].multiplicity - 1);
        UniPoly<X> local;
        UniPoly<X> shift_pow = UniPoly<X>::constant(one_like(like));
        for (const auto& cj : c) {
            local += shift_pow * cj;
            shift_pow *= UniPoly<X>::x_minus(d);
        }
        result += qi * local;
    }
    return result;
}

}  // namespace pfcy
