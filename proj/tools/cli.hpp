#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit codes: 0 success, 1 check mismatch, 2 parse/validation error,
// 3 mathematical precondition violated, 4 internal invariant failure.

#include <pfcy/pfcy.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pfcy::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalid = 2, kMath = 3, kInternal = 4 };

using io::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw invalid_input("'" + path + "' is not valid JSON: " + e.what());
    }
}

struct PartfracOptions {
    std::string numerator;
    std::string denominator;
    std::string var = "x";
    bool real = false;
    bool complex = false;
    bool oracle = false;
    bool json = false;
};

struct InterpOptions {
    std::string config;
    std::string data;
    bool oracle = false;
    bool json = false;
};

struct LatticeOptions {
    std::string config;
    bool json = false;
};

struct CheckOptions {
    std::string expansion;
    std::string numerator;
    std::string denominator;
    std::string var = "x";
};

namespace detail {

template <ExactField X>
int report_expansion(const PartfracOptions& opt, const ParsedDenominator& parsed, DecompositionMode mode,
                     const PartialFractionExpansion<X>& e, const std::optional<PartialFractionExpansion<X>>& oracle,
                     const std::string& field_note, std::ostream& out) {
    const bool agrees = !oracle || oracle->without_zero_terms() == e.without_zero_terms();
    if (opt.json) {
        json j = io::expansion_to_json(e, mode);
        j["numerator"] = opt.numerator;
        j["denominator"] = opt.denominator;
        j["warnings"] = parsed.warnings;
        if (oracle) {
            j["oracle"] = io::expansion_to_json(*oracle, mode);
            j["oracle_agrees"] = agrees;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "mode: " << (mode == DecompositionMode::Real ? "real" : "complex") << "\n";
        if (!field_note.empty()) out << field_note << "\n";
        out << io::format_expansion(e);
        if (oracle) {
            out << "oracle (linear system):\n" << io::format_expansion(*oracle);
            out << "oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
        }
    }
    return agrees ? kOk : kInternal;
}

}  // namespace detail

inline int run_partfrac(const PartfracOptions& opt, std::ostream& out, std::ostream& err) {
    RatPoly p = parse_univariate(opt.numerator, opt.var);
    ParsedDenominator parsed = parse_factored_denominator(opt.denominator, opt.var);
    for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
    const auto& den = parsed.denominator;
    p = p * (Rational(1) / den.leading);

    DecompositionMode mode = den.mode;
    if (opt.real) mode = DecompositionMode::Real;
    if (opt.complex) mode = DecompositionMode::Complex;

    if (mode == DecompositionMode::Real) {
        auto e = decompose_real(p, den.factors);
        std::optional<PartialFractionExpansion<Rational>> o;
        if (opt.oracle) o = oracle::oracle_partfrac(p, den.factors);
        return detail::report_expansion(opt, parsed, mode, e, o, "", out);
    }
    if (den.factors.quadratic.empty()) {
        auto roots = rational_roots(den.factors);
        auto e = decompose_complex(p, roots);
        std::optional<PartialFractionExpansion<Rational>> o;
        if (opt.oracle) o = oracle::oracle_partfrac(p, roots);
        return detail::report_expansion(opt, parsed, mode, e, o, "", out);
    }
    auto roots = split_over_quadratic(den.factors);
    auto e = decompose_complex(p, roots);
    std::optional<PartialFractionExpansion<QuadExt>> o;
    if (opt.oracle) o = oracle::oracle_partfrac(p, roots);
    const auto& qf = den.factors.quadratic.front();
    std::string note = "θ is a root of " + to_string(qf.polynomial());
    return detail::report_expansion(opt, parsed, mode, e, o, note, out);
}

inline int run_lattice(const LatticeOptions& opt, std::ostream& out) {
    auto cfg = io::config_from_json(read_json_file(opt.config));
    auto cls = classify_config(cfg);
    if (cls == Classification::Inadmissible) {
        if (opt.json)
            out << json{{"schema", io::kSchema}, {"k", cfg.dim()}, {"classification", to_string(cls)}, {"points", json::array()}}.dump(2)
                << "\n";
        else
            out << "classification: " << to_string(cls) << "\n";
        return kOk;
    }
    auto lattice = intersection_lattice(cfg);
    if (opt.json) {
        out << io::lattice_to_json(cfg, cls, lattice).dump(2) << "\n";
        return kOk;
    }
    out << "classification: " << to_string(cls) << "\n";
    out << "k = " << cfg.dim() << ", n = " << cfg.degree() << ", points = " << lattice.size()
        << ", conditions = " << hermite_condition_count(lattice, cfg.dim()) << " (dim Π_n^k = "
        << binomial(cfg.degree() + static_cast<unsigned>(cfg.dim()), static_cast<unsigned>(cfg.dim())) << ")\n";
    for (const auto& pt : lattice) {
        out << "  " << io::point_to_json(pt.coords).dump() << "  m = " << pt.multiplicity << "  on L";
        for (std::size_t i = 0; i < pt.incident.size(); ++i) out << (i ? ",L" : "") << pt.incident[i] + 1;
        out << "\n";
    }
    return kOk;
}

inline int run_interp(const InterpOptions& opt, std::ostream& out) {
    auto cfg = io::config_from_json(read_json_file(opt.config));
    auto lattice = intersection_lattice(cfg);
    auto data = io::hermite_data_from_json(read_json_file(opt.data), lattice, cfg.dim());
    MultiPoly p = hermite_interpolate(cfg, data);
    std::optional<MultiPoly> o;
    if (opt.oracle) o = oracle::oracle_hermite(cfg, data);
    const bool agrees = !o || *o == p;
    const auto vars = default_variables(cfg.dim());
    if (opt.json) {
        json j{{"schema", io::kSchema}, {"classification", to_string(classify_config(cfg))}, {"interpolant", io::polynomial_to_json(p)}};
        if (o) {
            j["oracle"] = io::polynomial_to_json(*o);
            j["oracle_agrees"] = agrees;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "p = " << p.to_string(vars) << "\n";
        if (o) {
            out << "oracle (collocation): " << o->to_string(vars) << "\n";
            out << "oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
        }
    }
    return agrees ? kOk : kInternal;
}

inline int run_check(const CheckOptions& opt, std::ostream& out) {
    json doc = read_json_file(opt.expansion);
    RatPoly p = parse_univariate(opt.numerator, opt.var);
    ParsedDenominator parsed = parse_factored_denominator(opt.denominator, opt.var);
    const auto& den = parsed.denominator;
    p = p * (Rational(1) / den.leading);

    bool same = false;
    if (io::expansion_uses_extension(doc)) {
        auto e = io::expansion_from_json<QuadExt>(doc);
        auto roots = split_over_quadratic(den.factors);
        auto [rp, rq] = recombine(e, roots);
        same = same_rational_function(rp, rq, embed_poly(p, roots.roots.front().root), rq);
    } else {
        auto e = io::expansion_from_json<Rational>(doc);
        auto [rp, rq] = recombine(e, den.factors);
        same = same_rational_function(rp, rq, p, den.factors.expand());
    }
    out << (same ? "OK: expansion recombines to p/q" : "MISMATCH: expansion does not recombine to p/q") << "\n";
    return same ? kOk : kMismatch;
}

/// Parses argv and dispatches; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact partial fractions and Chung–Yao Hermite interpolation", "pfcy"};
    app.require_subcommand(1);

    PartfracOptions pf;
    auto* c_pf = app.add_subcommand("partfrac", "Decompose p/q for a factored denominator q");
    c_pf->add_option("numerator", pf.numerator, "Numerator polynomial, e.g. \"x^3 + 1\"")->required();
    c_pf->add_option("denominator", pf.denominator, "Factored denominator, e.g. \"(x-1)^2*(x^2+1)\"")->required();
    c_pf->add_option("--var", pf.var, "Variable name");
    auto* f_real = c_pf->add_flag("--real", pf.real, "Real decomposition with quadratic factors");
    c_pf->add_flag("--complex", pf.complex, "Complex decomposition over the roots")->excludes(f_real);
    c_pf->add_flag("--oracle", pf.oracle, "Also solve the linear system and compare");
    c_pf->add_flag("--json", pf.json, "Emit JSON");

    InterpOptions ip;
    auto* c_ip = app.add_subcommand("interp", "Hermite interpolation on an admissible arrangement");
    c_ip->add_option("config", ip.config, "Arrangement JSON file")->required();
    c_ip->add_option("data", ip.data, "Hermite data JSON file")->required();
    c_ip->add_flag("--oracle", ip.oracle, "Also solve the collocation system and compare");
    c_ip->add_flag("--json", ip.json, "Emit JSON");

    LatticeOptions lt;
    auto* c_lt = app.add_subcommand("lattice", "Classify an arrangement and list its intersection lattice");
    c_lt->add_option("config", lt.config, "Arrangement JSON file")->required();
    c_lt->add_flag("--json", lt.json, "Emit JSON");

    CheckOptions ck;
    auto* c_ck = app.add_subcommand("check", "Recombine an expansion and compare it with p/q");
    c_ck->add_option("expansion", ck.expansion, "Expansion JSON file")->required();
    c_ck->add_option("numerator", ck.numerator, "Numerator polynomial")->required();
    c_ck->add_option("denominator", ck.denominator, "Factored denominator")->required();
    c_ck->add_option("--var", ck.var, "Variable name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*c_pf) return run_partfrac(pf, out, err);
        if (*c_ip) return run_interp(ip, out);
        if (*c_lt) return run_lattice(lt, out);
        if (*c_ck) return run_check(ck, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kInvalid;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const math_error& e) {
        err << "math error: " << e.what() << "\n";
        return kMath;
    } catch (const invariant_violation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInvalid;
}

}  // namespace pfcy::cli
