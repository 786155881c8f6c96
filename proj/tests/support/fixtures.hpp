#pragma once

// Worked fixtures from tests/data/fixtures.json. Every expected value is
// checked twice: against the library and against an independent
// computation (linear-system oracle, collocation, explicit sums).

#include <pfcy/io.hpp>
#include <pfcy/oracle.hpp>
#include <pfcy/pfcy.hpp>

#include "support/reference.hpp"

#include <fstream>
#include <functional>
#include <string>
#include <vector>

namespace pfcy::testkit {

struct FixtureResult {
    std::string name;
    bool ok;
    std::string detail;
};

namespace fixture_detail {

using io::json;

inline RatPoly uni(const json& j) { return parse_univariate(j.get<std::string>()); }

inline std::vector<Rational> as_rationals(const json& j) {
    std::vector<Rational> out;
    for (const auto& c : j) out.push_back(io::rational_from_json(c));
    return out;
}

inline std::string check(bool cond, const std::string& what) { return cond ? "" : what + "; "; }

inline std::string partfrac(const json& f) {
    RatPoly p = uni(f["numerator"]);
    auto parsed = parse_factored_denominator(f["denominator"].get<std::string>());
    const auto& den = parsed.denominator;
    p = p * (Rational(1) / den.leading);
    auto expected = io::expansion_from_json<Rational>(f["expected"]);
    if (f["mode"] == "real") {
        return check(decompose_real(p, den.factors) == expected, "decompose_real differs") +
               check(oracle::oracle_partfrac(p, den.factors) == expected, "oracle differs");
    }
    auto roots = rational_roots(den.factors);
    return check(decompose_complex(p, roots) == expected, "decompose_complex differs") +
           check(oracle::oracle_partfrac(p, roots) == expected, "oracle differs");
}

inline std::string lattice(const json& f) {
    auto cfg = io::config_from_json(f["config"]);
    const std::size_t k = cfg.dim();
    std::string err;
    const std::string cls = f["classification"];
    err += check(to_string(classify_config(cfg)) == cls, "classification differs");

    if (cls == "inadmissible") {
        // Independent witness: some k normals are linearly dependent.
        bool singular = false;
        for (const auto& s : k_subsets(cfg.size(), k)) {
            oracle::LinearSystem<Rational> sys;
            for (auto i : s) {
                sys.matrix.push_back(cfg[i].gradient());
                sys.rhs.push_back(-cfg[i].constant());
            }
            try {
                oracle::solve_exact(sys);
            } catch (const math_error&) {
                singular = true;
            }
        }
        return err + check(singular, "no dependent k-subset found");
    }

    std::vector<LatticePoint> expected;
    std::size_t conditions = 0;
    for (const auto& pj : f["points"]) {
        LatticePoint p;
        p.coords = io::point_from_json(pj["coords"], k);
        for (const auto& i : pj["incident"]) p.incident.push_back(i.get<std::size_t>() - 1);
        p.multiplicity = pj["multiplicity"].get<unsigned>();
        // Independent: solve the first k incident planes, recount incidence.
        oracle::LinearSystem<Rational> sys;
        for (std::size_t r = 0; r < k; ++r) {
            sys.matrix.push_back(cfg[p.incident[r]].gradient());
            sys.rhs.push_back(-cfg[p.incident[r]].constant());
        }
        err += check(oracle::solve_exact(sys) == p.coords, "point does not solve its planes");
        std::size_t on = 0;
        for (std::size_t j = 0; j < cfg.size(); ++j)
            if (cfg[j].evaluate(p.coords).is_zero()) ++on;
        err += check(on == p.incident.size() && p.multiplicity == on - k + 1, "incidence recount differs");
        conditions += multi_indices_up_to(k, p.multiplicity - 1).size();
        expected.push_back(std::move(p));
    }
    err += check(Rational(static_cast<long>(conditions)) == binomial(cfg.degree() + static_cast<unsigned>(k), static_cast<unsigned>(k)),
                 "condition count differs from dim Π_n^k");
    return err + check(intersection_lattice(cfg) == expected, "intersection_lattice differs");
}

inline std::string hermite(const json& f) {
    auto cfg = io::config_from_json(f["config"]);
    auto vars = default_variables(cfg.dim());
    auto data = HermiteDataSet::sample(intersection_lattice(cfg), parse_polynomial(f["sample"].get<std::string>(), vars));
    MultiPoly expected = parse_polynomial(f["expected"].get<std::string>(), vars);
    return check(hermite_interpolate(cfg, data) == expected, "hermite_interpolate differs") +
           check(oracle::oracle_hermite(cfg, data) == expected, "oracle differs");
}

inline std::string fundamental(const json& f) {
    auto cfg = io::config_from_json(f["config"]);
    std::vector<std::size_t> alpha;
    for (const auto& i : f["subset"]) alpha.push_back(i.get<std::size_t>() - 1);
    MultiPoly expected = parse_polynomial(f["expected"].get<std::string>(), default_variables(cfg.dim()));
    // Indicator data at the node x_α, solved by collocation.
    auto lat = intersection_lattice(cfg);
    auto x = intersect(cfg, alpha);
    std::vector<MultiJet> jets;
    for (const auto& p : lat) {
        MultiJet j(p.coords, 0);
        j.set(MultiIndex(cfg.dim()), Rational(p.coords == *x ? 1 : 0));
        jets.push_back(std::move(j));
    }
    return check(cy_fundamental(cfg, alpha) == expected, "cy_fundamental differs") +
           check(oracle::oracle_hermite(cfg, HermiteDataSet(std::move(jets))) == expected, "collocation differs");
}

template <class X>
std::string divided_difference_with(const std::vector<X>& nodes, const UniRationalFn<Rational>& fn, const X& expected) {
    std::string err = check(divided_difference(nodes, fn) == expected, "divided_difference differs");
    bool distinct = true, all_equal = true;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            distinct = distinct && !(nodes[i] == nodes[j]);
            all_equal = all_equal && nodes[i] == nodes[j];
        }
    if (distinct) return err + check(divided_difference_distinct(nodes, fn) == expected, "explicit sum differs");
    if (all_equal) {
        auto fx = embed_fn(fn, nodes[0]);
        auto t = taylor_by_quotient_rule(fx.numerator, fx.denominator, nodes[0], nodes.size() - 1);
        return err + check(t.back() == expected, "quotient-rule derivative differs");
    }
    return err + "fixture needs distinct or fully repeated nodes; ";
}

inline std::string divided(const json& f) {
    UniRationalFn<Rational> fn(uni(f["numerator"]), uni(f["denominator"]));
    if (f["expected"].is_object()) {
        std::vector<QuadExt> nodes;
        for (const auto& n : f["nodes"]) nodes.push_back(io::quadext_from_json(n));
        return divided_difference_with(nodes, fn, io::quadext_from_json(f["expected"]));
    }
    return divided_difference_with(as_rationals(f["nodes"]), fn, io::rational_from_json(f["expected"]));
}

inline std::string taylor(const json& f) {
    RatPoly p = uni(f["numerator"]), psi = uni(f["denominator"]);
    Rational a = io::rational_from_json(f["center"]);
    auto m = f["order"].get<std::size_t>();
    auto expected = as_rationals(f["expected"]);
    return check(rational_taylor_coeffs(p, psi, a, m) == expected, "rational_taylor_coeffs differs") +
           check(taylor_by_quotient_rule(p, psi, a, m) == expected, "quotient rule differs");
}

inline std::string lagrange_taylor(const json& f) {
    UniRationalFn<Rational> fn(uni(f["numerator"]), uni(f["denominator"]));
    RatPoly expected = uni(f["expected"]);
    std::vector<NodeMultiplicity<Rational>> centers;
    for (const auto& c : f["centers"]) centers.push_back({io::rational_from_json(c["node"]), c["multiplicity"].get<unsigned>()});

    // Confluent Vandermonde: rows p^(j)(d) = f^(j)(d) for j < m.
    std::size_t n = 0;
    for (const auto& c : centers) n += c.multiplicity;
    oracle::LinearSystem<Rational> sys;
    for (const auto& [d, m] : centers) {
        auto rhs = taylor_by_quotient_rule(fn.numerator, fn.denominator, d, m - 1);
        for (unsigned j = 0; j < m; ++j) {
            std::vector<Rational> row;
            for (std::size_t e = 0; e < n; ++e) {
                RatPoly mono = RatPoly::monomial(Rational(1), e);
                for (unsigned r = 0; r < j; ++r) mono = derivative(mono);
                row.push_back(evaluate(mono, d));
            }
            sys.matrix.push_back(std::move(row));
            sys.rhs.push_back(rhs[j] * factorial(j));
        }
    }
    RatPoly solved(oracle::solve_exact(sys));
    return check(uni_lagrange_taylor(centers, fn) == expected, "uni_lagrange_taylor differs") +
           check(solved == expected, "confluent Vandermonde differs");
}

}  // namespace fixture_detail

inline std::vector<FixtureResult> run_fixtures(const std::string& path) {
    using fixture_detail::json;
    std::ifstream in(path);
    if (!in) return {{"fixtures file", false, "cannot open " + path}};
    json doc = json::parse(in);
    const std::vector<std::pair<const char*, std::function<std::string(const json&)>>> kinds{
        {"partfrac", fixture_detail::partfrac},
        {"lattice", fixture_detail::lattice},
        {"hermite", fixture_detail::hermite},
        {"fundamental", fixture_detail::fundamental},
        {"divided_difference", fixture_detail::divided},
        {"taylor", fixture_detail::taylor},
        {"lagrange_taylor", fixture_detail::lagrange_taylor},
    };
    std::vector<FixtureResult> out;
    for (const auto& [kind, fn] : kinds) {
        for (const auto& f : doc.value(kind, json::array())) {
            std::string name = std::string(kind) + ": " + f.value("name", "?");
            try {
                std::string err = fn(f);
                out.push_back({name, err.empty(), err});
            } catch (const std::exception& e) {
                out.push_back({name, false, std::string("threw: ") + e.what()});
            }
        }
    }
    return out;
}

}  // namespace pfcy::testkit
