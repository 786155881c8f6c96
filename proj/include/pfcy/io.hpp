#pragma once

// Text and JSON forms of scalars, arrangements, Hermite data and expansions.
// Every JSON document written here carries "schema": "pfrac-cy/1".

#include <pfcy/errors.hpp>
#include <pfcy/exactnum.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/interp.hpp>
#include <pfcy/parse.hpp>
#include <pfcy/partfrac.hpp>
#include <pfcy/poly.hpp>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pfcy::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pfrac-cy/1";

// ---------------------------------------------------------------------------
// Scalars

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const QuadExt& x) {
    return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"u", x.field().u().to_string()},
                {"v", x.field().v().to_string()}};
}

/// "p/q", "p" or a JSON integer.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw invalid_input("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

inline QuadExt quadext_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("expected a quadratic extension element {a, b, u, v}, got " + j.dump());
    for (const char* key : {"a", "b", "u", "v"})
        if (!j.contains(key)) throw invalid_input(std::string("quadratic extension element is missing \"") + key + "\"");
    QuadField field(rational_from_json(j["u"]), rational_from_json(j["v"]));
    return QuadExt(field, rational_from_json(j["a"]), rational_from_json(j["b"]));
}

inline MultiIndex multi_index_from_key(const std::string& key, std::size_t k) {
    std::vector<unsigned> e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.size() > 6 || part.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_input("malformed multi-index \"" + key + "\"");
        e.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    if (e.size() != k) throw invalid_input("multi-index \"" + key + "\" does not have " + std::to_string(k) + " entries");
    return MultiIndex(std::move(e));
}

inline std::vector<Rational> point_from_json(const json& j, std::size_t k) {
    if (!j.is_array() || j.size() != k) throw invalid_input("expected a point with " + std::to_string(k) + " coordinates");
    std::vector<Rational> p;
    for (const auto& c : j) p.push_back(rational_from_json(c));
    return p;
}

inline json point_to_json(const std::vector<Rational>& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(c.to_string());
    return a;
}

// ---------------------------------------------------------------------------
// Arrangements

/// { "k": int, "hyperplanes": [ "x + y - 1", ... ] }
inline HyperplaneConfig config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("hyperplanes"))
        throw invalid_input("configuration needs \"k\" and \"hyperplanes\"");
    if (!j["k"].is_number_integer() || j["k"].get<long>() < 1) throw invalid_input("\"k\" must be a positive integer");
    const auto k = static_cast<std::size_t>(j["k"].get<long>());
    const auto vars = default_variables(k);
    std::vector<Hyperplane> planes;
    for (const auto& h : j["hyperplanes"]) {
        if (!h.is_string()) throw invalid_input("hyperplanes must be given as strings");
        MultiPoly form = parse_polynomial(h.get<std::string>(), vars);
        if (form.total_degree() != 1)
            throw invalid_input("hyperplane \"" + h.get<std::string>() + "\" is not of degree 1");
        planes.emplace_back(std::move(form));
    }
    return HyperplaneConfig(k, std::move(planes));
}

inline json lattice_to_json(const HyperplaneConfig& cfg, Classification cls, const std::vector<LatticePoint>& lattice) {
    json pts = json::array();
    for (const auto& p : lattice) {
        json inc = json::array();
        for (auto i : p.incident) inc.push_back(i + 1);
        pts.push_back({{"coords", point_to_json(p.coords)}, {"incident", inc}, {"multiplicity", p.multiplicity}});
    }
    return json{{"schema", kSchema},
                {"k", cfg.dim()},
                {"n", cfg.size() >= cfg.dim() ? cfg.size() - cfg.dim() : 0},
                {"classification", to_string(cls)},
                {"conditions", hermite_condition_count(lattice, cfg.dim())},
                {"points", pts}};
}

// ---------------------------------------------------------------------------
// Hermite data

/// { "points": [ { "coords": [...], "jet": { "0,0": "1", "1,0": "2/3" } } ] }
/// Values are raw derivatives D^α f at the point. Points are matched to the
/// lattice by coordinates, in any order.
inline HermiteDataSet hermite_data_from_json(const json& j, const std::vector<LatticePoint>& lattice, std::size_t k) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw invalid_input("Hermite data needs a \"points\" array");
    std::vector<std::map<MultiIndex, Rational>> derivs(lattice.size());
    std::vector<bool> seen(lattice.size(), false);
    for (const auto& pt : j["points"]) {
        if (!pt.contains("coords") || !pt.contains("jet") || !pt["jet"].is_object())
            throw invalid_input("each Hermite point needs \"coords\" and a \"jet\" object");
        auto coords = point_from_json(pt["coords"], k);
        std::size_t idx = lattice.size();
        for (std::size_t i = 0; i < lattice.size(); ++i)
            if (lattice[i].coords == coords) idx = i;
        if (idx == lattice.size()) throw invalid_input("Hermite data point " + pt["coords"].dump() + " is not a lattice point");
        if (seen[idx]) throw invalid_input("Hermite data point " + pt["coords"].dump() + " given twice");
        seen[idx] = true;
        for (const auto& [key, val] : pt["jet"].items()) {
            MultiIndex alpha = multi_index_from_key(key, k);
            if (alpha.total() + 1 > lattice[idx].multiplicity)
                throw invalid_input("derivative " + key + " at " + pt["coords"].dump() + " exceeds order m - 1 = " +
                                    std::to_string(lattice[idx].multiplicity - 1));
            derivs[idx][alpha] = rational_from_json(val);
        }
    }
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (!seen[i]) throw invalid_input("Hermite data is missing lattice point " + point_to_json(lattice[i].coords).dump());
    return HermiteDataSet::from_derivatives(lattice, derivs);
}

inline json polynomial_to_json(const MultiPoly& p) {
    json terms = json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms[it->first.to_string()] = it->second.to_string();
    return json{{"text", p.to_string(default_variables(p.num_vars()))}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Expansions

template <ExactField X>
json expansion_to_json(const PartialFractionExpansion<X>& e, DecompositionMode mode) {
    json poly = json::array();
    for (const auto& c : e.poly.coeffs()) poly.push_back(to_json(c));
    json lin = json::array();
    for (const auto& t : e.linear) lin.push_back({{"root", to_json(t.center)}, {"exponent", t.exponent}, {"coeff", to_json(t.coeff)}});
    json quad = json::array();
    for (const auto& t : e.quadratic)
        quad.push_back({{"u", t.u.to_string()},
                        {"v", t.v.to_string()},
                        {"exponent", t.exponent},
                        {"M", t.M.to_string()},
                        {"N", t.N.to_string()}});
    return json{{"schema", kSchema},
                {"mode", mode == DecompositionMode::Real ? "real" : "complex"},
                {"poly", poly},
                {"linear", lin},
                {"quadratic", quad}};
}

/// True when any scalar in the document is a quadratic extension element.
inline bool expansion_uses_extension(const json& j) {
    auto is_ext = [](const json& v) { return v.is_object(); };
    for (const auto& c : j.value("poly", json::array()))
        if (is_ext(c)) return true;
    for (const auto& t : j.value("linear", json::array()))
        if (is_ext(t.value("root", json())) || is_ext(t.value("coeff", json()))) return true;
    return false;
}

namespace detail {

inline Rational scalar_from_json(const json& j, const Rational*) { return rational_from_json(j); }
inline QuadExt scalar_from_json(const json& j, const QuadExt*) {
    if (j.is_object()) return quadext_from_json(j);
    throw invalid_input("expected a quadratic extension element, got " + j.dump());
}

inline unsigned exponent_from_json(const json& j) {
    if (!j.is_number_integer() || j.get<long>() < 1) throw invalid_input("term exponent must be a positive integer");
    return static_cast<unsigned>(j.get<long>());
}

}  // namespace detail

/// Reads an expansion whose scalars are all of type X. For QuadExt, rational
/// scalars (plain strings) are lifted into the field of the first extension
/// element found.
template <ExactField X>
PartialFractionExpansion<X> expansion_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("expansion must be a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
        throw invalid_input("unsupported schema " + j["schema"].dump() + ", expected " + kSchema);
    PartialFractionExpansion<X> e;
    auto read = [&](const json& v) -> X {
        if constexpr (std::same_as<X, Rational>) {
            return rational_from_json(v);
        } else {
            if (v.is_object()) return quadext_from_json(v);
            // Find any extension element to borrow its field.
            for (const auto& t : j.value("linear", json::array()))
                for (const char* key : {"root", "coeff"})
                    if (t.contains(key) && t[key].is_object())
                        return QuadExt(quadext_from_json(t[key]).field_ptr(), rational_from_json(v));
            throw invalid_input("no quadratic extension element to interpret " + v.dump());
        }
    };
    std::vector<X> poly;
    for (const auto& c : j.value("poly", json::array())) poly.push_back(read(c));
    e.poly = UniPoly<X>(std::move(poly));
    for (const auto& t : j.value("linear", json::array())) {
        if (!t.contains("root") || !t.contains("exponent") || !t.contains("coeff"))
            throw invalid_input("linear term needs \"root\", \"exponent\" and \"coeff\"");
        e.linear.push_back({read(t["root"]), detail::exponent_from_json(t["exponent"]), read(t["coeff"])});
    }
    for (const auto& t : j.value("quadratic", json::array())) {
        for (const char* key : {"u", "v", "exponent", "M", "N"})
            if (!t.contains(key)) throw invalid_input(std::string("quadratic term is missing \"") + key + "\"");
        e.quadratic.push_back({rational_from_json(t["u"]), rational_from_json(t["v"]), detail::exponent_from_json(t["exponent"]),
                               rational_from_json(t["M"]), rational_from_json(t["N"])});
    }
    return e;
}

// ---------------------------------------------------------------------------
// Human-readable text

template <ExactField X>
std::string linear_factor_text(const X& root, unsigned exponent) {
    std::string base;
    if constexpr (std::same_as<X, Rational>) {
        if (root.is_zero())
            base = "x";
        else
            base = root.sign() > 0 ? "(x - " + root.to_string() + ")" : "(x + " + (-root).to_string() + ")";
    } else {
        const std::string s = root.to_string();
        if (s.front() == '-' && s.find(' ') == std::string::npos)
            base = "(x + " + s.substr(1) + ")";
        else
            base = "(x - " + s + ")";
    }
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

inline std::string quadratic_factor_text(const Rational& u, const Rational& v, unsigned exponent) {
    std::string base = "(" + to_string(RatPoly{v, u, Rational(1)}) + ")";
    return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

/// One line for the polynomial part, then one line per term.
template <ExactField X>
std::string format_expansion(const PartialFractionExpansion<X>& e) {
    std::ostringstream os;
    os << "poly: " << to_string(e.poly) << "\n";
    for (const auto& t : e.linear) os << "  " << to_string(t.coeff) << " / " << linear_factor_text(t.center, t.exponent) << "\n";
    for (const auto& t : e.quadratic)
        os << "  (" << to_string(RatPoly{t.N, t.M}) << ") / " << quadratic_factor_text(t.u, t.v, t.exponent) << "\n";
    return os.str();
}

}  // namespace pfcy::io
