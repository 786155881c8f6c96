#pragma once

// Seeded random instance generators shared by the unit and acceptance suites.

#include <pfcy/pfcy.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace pfcy::testkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

    Rational rational(int num_bound = 5, int den_bound = 3) {
        return Rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
    }

    Rational nonzero_rational(int num_bound = 5, int den_bound = 3) {
        Rational r;
        while (r.is_zero()) r = rational(num_bound, den_bound);
        return r;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline RatPoly random_poly(Rng& rng, int degree, int num_bound = 5, int den_bound = 3) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rng.rational(num_bound, den_bound));
    if (degree >= 0) c.back() = rng.nonzero_rational(num_bound, den_bound);
    return RatPoly(std::move(c));
}

inline MultiPoly random_mpoly(Rng& rng, std::size_t k, unsigned degree, double density = 0.7) {
    MultiPoly p(k);
    for (const auto& alpha : multi_indices_up_to(k, degree))
        if (rng.coin(density)) p.add_term(alpha, rng.rational(4, 3));
    return p;
}

/// Distinct rational roots from a small grid.
inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t count) {
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational r = rng.rational(6, 3);
        bool dup = false;
        for (const auto& o : out) dup = dup || o == r;
        if (!dup) out.push_back(r);
    }
    return out;
}

/// Irreducible x² + ux + v from roots c ± i·d, d > 0.
inline QuadraticFactor random_quadratic(Rng& rng, unsigned multiplicity) {
    Rational c = rng.rational(3, 2);
    Rational d = Rational(rng.uniform(1, 3), rng.uniform(1, 2));
    return {Rational(-2) * c, c * c + d * d, multiplicity};
}

struct FactorizationShape {
    int max_linear = 4;
    unsigned max_linear_mult = 3;
    int max_quadratic = 2;
    unsigned max_quadratic_mult = 3;
    int min_linear = 0;
    int min_quadratic = 0;
};

inline RealFactorization random_real_factorization(Rng& rng, const FactorizationShape& shape = {}) {
    RealFactorization f;
    int nl, nq;
    do {
        nl = rng.uniform(shape.min_linear, shape.max_linear);
        nq = rng.uniform(shape.min_quadratic, shape.max_quadratic);
    } while (nl + nq == 0);
    for (const auto& r : distinct_rationals(rng, static_cast<std::size_t>(nl)))
        f.linear.push_back({r, static_cast<unsigned>(rng.uniform(1, static_cast<int>(shape.max_linear_mult)))});
    while (static_cast<int>(f.quadratic.size()) < nq) {
        auto q = random_quadratic(rng, static_cast<unsigned>(rng.uniform(1, static_cast<int>(shape.max_quadratic_mult))));
        bool dup = false;
        for (const auto& o : f.quadratic) dup = dup || (o.u == q.u && o.v == q.v);
        if (!dup) f.quadratic.push_back(q);
    }
    return f;
}

inline ComplexFactorization<Rational> random_rational_roots(Rng& rng, int max_roots = 4, unsigned max_mult = 3) {
    ComplexFactorization<Rational> f;
    for (const auto& r : distinct_rationals(rng, static_cast<std::size_t>(rng.uniform(1, max_roots))))
        f.roots.push_back({r, static_cast<unsigned>(rng.uniform(1, static_cast<int>(max_mult)))});
    return f;
}

/// n + k hyperplanes with small integer coefficients, in general position.
inline HyperplaneConfig random_general_position(Rng& rng, std::size_t k, unsigned n) {
    while (true) {
        std::vector<Hyperplane> planes;
        for (std::size_t j = 0; j < n + k; ++j) {
            std::vector<Rational> g(k);
            bool nonzero = false;
            for (auto& gi : g) {
                gi = Rational(rng.uniform(-3, 3));
                nonzero = nonzero || !gi.is_zero();
            }
            if (!nonzero) g[0] = Rational(1);
            planes.push_back(Hyperplane::from_coefficients(Rational(rng.uniform(-4, 4)), g));
        }
        HyperplaneConfig cfg(k, std::move(planes));
        if (classify_config(cfg) == Classification::GeneralPosition) return cfg;
    }
}

/// Starts in general position, then forces coincidences by translating
/// hyperplanes through existing intersection points, re-classifying after
/// each step. Returns an admissible configuration with at least one
/// multiple point whenever n ≥ 1.
inline HyperplaneConfig random_admissible(Rng& rng, std::size_t k, unsigned n, int steps = 2) {
    while (true) {
        HyperplaneConfig cfg = random_general_position(rng, k, n);
        for (int s = 0; s < steps; ++s) {
            auto lattice = intersection_lattice(cfg);
            const auto& pt = lattice[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(lattice.size()) - 1))];
            std::vector<std::size_t> candidates;
            for (std::size_t j = 0; j < cfg.size(); ++j)
                if (!cfg[j].contains(pt.coords)) candidates.push_back(j);
            if (candidates.empty()) continue;
            std::size_t j = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
            std::vector<Hyperplane> planes = cfg.planes();
            planes[j] = planes[j].translated_through(pt.coords);
            HyperplaneConfig next(k, std::move(planes));
            if (classify_config(next) != Classification::Inadmissible) cfg = std::move(next);
        }
        if (n == 0 || classify_config(cfg) == Classification::Admissible) return cfg;
    }
}

/// Random Hermite data (arbitrary jets, not sampled from a polynomial).
inline HermiteDataSet random_hermite_data(Rng& rng, const std::vector<LatticePoint>& lattice) {
    std::vector<MultiJet> entries;
    for (const auto& p : lattice) {
        MultiJet j(p.coords, p.multiplicity - 1);
        for (const auto& alpha : multi_indices_up_to(p.coords.size(), p.multiplicity - 1)) j.set(alpha, rng.rational(6, 4));
        entries.push_back(std::move(j));
    }
    return HermiteDataSet(std::move(entries));
}

}  // namespace pfcy::testkit
