#pragma once

// Hyperplane arrangements in Q^k: classification, intersection lattice and
// multiplicities.

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pfcy {

/// The zero set of a degree-1 polynomial L(x) = c + g·x with g ≠ 0.
/// Not normalized: any nonzero multiple of L describes the same plane.
class Hyperplane {
public:
    explicit Hyperplane(MultiPoly form) : form_(std::move(form)) {
        if (form_.total_degree() > 1) throw invalid_input("hyperplane equation must have degree 1");
        if (form_.total_degree() < 1) throw invalid_input("hyperplane equation has zero gradient");
    }

    static Hyperplane from_coefficients(const Rational& constant, std::span<const Rational> gradient) {
        return Hyperplane(MultiPoly::linear(constant, gradient));
    }

    const MultiPoly& form() const { return form_; }
    std::size_t dim() const { return form_.num_vars(); }

    std::vector<Rational> gradient() const {
        std::vector<Rational> g;
        for (std::size_t i = 0; i < dim(); ++i) g.push_back(form_.coeff(MultiIndex::unit(dim(), i)));
        return g;
    }

    Rational constant() const { return form_.coeff(MultiIndex(dim())); }

    Rational evaluate(std::span<const Rational> x) const { return form_.evaluate(x); }
    bool contains(std::span<const Rational> x) const { return evaluate(x).is_zero(); }

    Hyperplane scaled(const Rational& s) const {
        if (s.is_zero()) throw invalid_input("hyperplane scaled by zero");
        return Hyperplane(form_ * s);
    }

    /// Parallel plane through x: L - L(x).
    Hyperplane translated_through(std::span<const Rational> x) const {
        return Hyperplane(form_ - MultiPoly::constant(dim(), evaluate(x)));
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

private:
    MultiPoly form_;
};

/// Ordered hyperplanes L_1..L_m in a common Q^k. For interpolation m = n + k.
class HyperplaneConfig {
public:
    HyperplaneConfig(std::size_t k, std::vector<Hyperplane> planes) : k_(k), planes_(std::move(planes)) {
        if (k_ == 0) throw invalid_input("configuration dimension must be positive");
        for (const auto& h : planes_)
            if (h.dim() != k_) throw invalid_input("hyperplane dimension does not match configuration");
    }

    std::size_t dim() const { return k_; }
    std::size_t size() const { return planes_.size(); }
    const std::vector<Hyperplane>& planes() const { return planes_; }
    const Hyperplane& operator[](std::size_t i) const { return planes_.at(i); }

    /// Interpolation degree n = m - k.
    unsigned degree() const {
        if (planes_.size() < k_) throw invalid_input("fewer hyperplanes than the dimension");
        return static_cast<unsigned>(planes_.size() - k_);
    }

private:
    std::size_t k_;
    std::vector<Hyperplane> planes_;
};

enum class Classification { GeneralPosition, Admissible, Inadmissible };

inline std::string to_string(Classification c) {
    switch (c) {
        case Classification::GeneralPosition: return "general-position";
        case Classification::Admissible: return "admissible";
        case Classification::Inadmissible: return "inadmissible";
    }
    return "?";
}

struct LatticePoint {
    std::vector<Rational> coords;
    std::vector<std::size_t> incident;  ///< 0-based hyperplane indices, ascending
    unsigned multiplicity = 1;          ///< |incident| - k + 1

    bool simple() const { return multiplicity == 1; }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// All strictly increasing k-tuples from {0..m-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > m) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace detail {

// Unique solution of a square system, or nullopt when singular.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

}  // namespace detail

/// The point L_{s1} ∩ ... ∩ L_{sk}, or nullopt if the normals are dependent.
inline std::optional<std::vector<Rational>> intersect(const HyperplaneConfig& cfg, std::span<const std::size_t> subset) {
    if (subset.size() != cfg.dim()) throw invalid_input("intersection needs exactly k hyperplanes");
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t idx : subset) {
        a.push_back(cfg[idx].gradient());
        b.push_back(-cfg[idx].constant());
    }
    return detail::solve_unique(std::move(a), std::move(b));
}

namespace detail {

struct LatticeScan {
    bool all_subsets_meet = true;
    std::vector<LatticePoint> points;
};

inline LatticeScan scan_lattice(const HyperplaneConfig& cfg) {
    if (cfg.size() < cfg.dim())
        throw invalid_input("configuration has " + std::to_string(cfg.size()) + " hyperplanes in dimension " +
                            std::to_string(cfg.dim()) + "; need at least k");
    LatticeScan scan;
    std::map<std::vector<Rational>, std::size_t> seen;
    for (const auto& subset : k_subsets(cfg.size(), cfg.dim())) {
        auto pt = intersect(cfg, subset);
        if (!pt) {
            scan.all_subsets_meet = false;
            return scan;
        }
        if (seen.contains(*pt)) continue;
        LatticePoint lp;
        lp.coords = *pt;
        for (std::size_t j = 0; j < cfg.size(); ++j)
            if (cfg[j].contains(lp.coords)) lp.incident.push_back(j);
        lp.multiplicity = static_cast<unsigned>(lp.incident.size() - cfg.dim() + 1);
        seen.emplace(lp.coords, scan.points.size());
        scan.points.push_back(std::move(lp));
    }
    return scan;
}

}  // namespace detail

/// GeneralPosition: every k planes meet in one point and no k+1 share one.
/// Admissible: only the first condition holds.
inline Classification classify_config(const HyperplaneConfig& cfg) {
    auto scan = detail::scan_lattice(cfg);
    if (!scan.all_subsets_meet) return Classification::Inadmissible;
    for (const auto& p : scan.points)
        if (p.multiplicity > 1) return Classification::Admissible;
    return Classification::GeneralPosition;
}

/// Distinct intersection points in order of first appearance over the
/// lexicographic k-subsets, with incidence sets and multiplicities.
inline std::vector<LatticePoint> intersection_lattice(const HyperplaneConfig& cfg) {
    auto scan = detail::scan_lattice(cfg);
    if (!scan.all_subsets_meet) throw math_error("inadmissible configuration: some k hyperplanes do not meet in a single point");
    return std::move(scan.points);
}

/// Σ_i C(m_i - 1 + k, k): the number of Hermite conditions carried by the lattice.
inline std::size_t hermite_condition_count(const std::vector<LatticePoint>& lattice, std::size_t k) {
    std::size_t total = 0;
    for (const auto& p : lattice) {
        Rational c = binomial(p.multiplicity - 1 + static_cast<unsigned>(k), static_cast<unsigned>(k));
        total += c.numerator().get_ui();
    }
    return total;
}

}  // namespace pfcy
