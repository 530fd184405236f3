#pragma once

// Command-line front end. run() parses argv, builds a report and returns
// the exit code: 0 ok or reported discrepancy, 1 consistency failure, 2 usage.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/carlitz.hpp"
#include "cyclo/error.hpp"
#include "cyclo/invariant.hpp"
#include "cyclo/models.hpp"
#include "cyclo/ramify.hpp"
#include "cyclo/report.hpp"

namespace cyclo::cli {

using report::json;
using ff::Element;
using ff::Field;

/// Flattens a report to "path = value" lines; provenance pairs print inline.
inline void flatten(const json& j, const std::string& path, std::vector<std::string>& out) {
    if (j.is_object() && j.contains("provenance") && j.contains("value") && j.size() == 2) {
        out.push_back(path + " = " + j["value"].dump() + " (" + j["provenance"].get<std::string>() + ")");
        return;
    }
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
        return;
    }
    if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out.push_back(path + " = " + j.dump());
}

inline std::string render_text(const json& rep) {
    std::string s = "command: " + rep["command"].get<std::string>() + "\n";
    std::vector<std::string> lines;
    flatten(rep["results"], "", lines);
    for (auto& l : lines) s += l + "\n";
    for (auto& v : rep["verdicts"]) s += "[" + v["status"].get<std::string>() + "] " + v["claim"].get<std::string>() + " " + v["instance"].dump() + "\n";
    return s;
}

inline std::uint64_t env_budget() {
    if (const char* e = std::getenv("CARLITZ_BUDGET")) {
        const auto v = poly::io::parse_int(e);
        if (v <= 0) fail(ErrorKind::ParseError, "CARLITZ_BUDGET must be positive");
        return static_cast<std::uint64_t>(v);
    }
    return kDefaultBudget;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclo: cyclotomic function field computations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string out_file;
    std::uint64_t budget = 0;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_option("--out", out_file, "also write the report to this file");
    app.add_option("--budget", budget, "enumeration cap (default: CARLITZ_BUDGET or 2^20)")->check(CLI::PositiveNumber);

    std::uint64_t q = 0, Q = 0;
    unsigned d = 1, s = 1, alpha = 1, degree = 1;
    std::string M, P, rho, mode = "kernel", suite = "all", bound;
    std::optional<unsigned> dopt;
    bool table = false, certificate = false;

    auto* group = app.add_subcommand("group", "G_{q^d,M}, H, CRT factors, filtration and decomposition");
    group->add_option("--q", q, "base field order")->required();
    group->add_option("--d", d, "constant field degree");
    group->add_option("--M", M, "modulus over F_q, coefficients low to high")->required();

    auto* different = app.add_subcommand("different", "different exponents, filtration and Hilbert sums");
    different->add_option("--q", q)->required();
    different->add_option("--d", d)->required();
    different->add_option("--s", s)->required();
    different->add_option("--alpha", alpha)->required();

    auto* kummer = app.add_subcommand("kummer", "tame Kummer model and Z values");
    kummer->add_option("--q", q)->required();
    kummer->add_option("--s", s)->required();
    kummer->add_option("--d", dopt, "constant field degree (default s)");
    kummer->add_option("--P", P, "irreducible of degree s over F_q (default: first in enumeration)");

    auto* tower = app.add_subcommand("tower-verify", "Artin-Schreier tower certificates");
    tower->add_option("--q", Q, "order of the coefficient field F_Q")->required();
    tower->add_option("--alpha", alpha)->required()->check(CLI::IsMember({2, 3}));
    tower->add_option("--rho", rho, "single root (default: every element)");

    auto* inv = app.add_subcommand("invariants", "invariants of ΔT_α over F_{q^d}");
    inv->add_option("--q", q)->required();
    inv->add_option("--d", d);
    inv->add_option("--alpha", alpha)->required();
    inv->add_option("--degree", degree, "homogeneous degree");
    inv->add_option("--bound", bound, "multidegree bound μ_0,...,μ_{α-1} (replaces --degree)");
    inv->add_option("--mode", mode)->check(CLI::IsMember({"kernel", "eigen"}));
    inv->add_flag("--table", table, "include the q = 3 remainder table");
    inv->add_flag("--certificate", certificate, "include the polynomiality certificate");

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz module");
    carlitz->require_subcommand(1);
    carlitz->fallthrough();
    auto* cpoly = carlitz->add_subcommand("poly", "coefficients of C_M over F_{q^d}");
    cpoly->add_option("--q", q)->required();
    cpoly->add_option("--d", d);
    cpoly->add_option("--M", M)->required();

    auto* verify = app.add_subcommand("verify", "acceptance suites");
    std::vector<std::string> names = report::suite_names();
    names.push_back("all");
    verify->add_option("--suite", suite)->check(CLI::IsMember(names));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

    json rep{{"schema", report::kSchema}, {"command", echo}};
    try {
        if (!budget) budget = env_budget();
        json results, verdicts = json::array();
        json inputs{{"budget", budget}};
        if (group->parsed()) {
            const auto ext = ff::make_extension(q, d, budget);
            const auto Mp = poly::parse_poly(M, ext.base());
            inputs.update({{"q", q}, {"d", d}, {"M", poly::to_string(Mp)}});
            results = report::group_report(ext, Mp, budget);
        } else if (different->parsed()) {
            inputs.update({{"q", q}, {"d", d}, {"s", s}, {"alpha", alpha}});
            const auto r = ramify::different_main(q, d, s, alpha);
            const auto e = ramify::ram_index(q, d, s, alpha);
            const auto t = ramify::divisor_dT(q, alpha, s);
            const auto f = ramify::lower_filtration(q, d, s, alpha, budget);
            const auto h = ramify::hilbert_sum_check(q, d, s, alpha, budget);
            json ingredients;
            for (auto& [name, D] : r.ingredients) ingredients[name] = ramify::to_string(D);
            results = {{"ramification_index", report::formula(e.value())},
                       {"A", report::formula(r.A())},
                       {"B", report::formula(r.B())},
                       {"A_telescoped", report::formula(r.A_telescoped)},
                       {"B_telescoped", report::formula(r.B_telescoped)},
                       {"different", ramify::to_string(r.telescoped)},
                       {"ingredients", ingredients},
                       {"divisor_dT", {{"S", report::formula(t.S_degree_s)}, {"total_infinity", report::formula(t.total_infinity)}}},
                       {"H_display", report::formula(report::wide_json(f.H.display))}};
            if (f.H.enumerated) results["H_cap_N"] = report::enumerated(*f.H.enumerated);
            json hj{{"A", report::formula(report::wide_json(h.A))},
                    {"sum_by_level", report::formula(report::wide_json(h.sum_by_level))},
                    {"sum_by_lower_i", report::formula(report::wide_json(h.sum_by_lower_i))}};
            if (h.sum_enumerated) hj["sum_enumerated"] = report::enumerated(report::wide_json(*h.sum_enumerated));
            results["hilbert"] = hj;
            const bool agree = h.agrees_by_level() && h.agrees_by_lower_i() && (!h.sum_enumerated || *h.sum_enumerated == h.A);
            report::Verdicts v;
            v.check("hilbert_sum_check: Σ(|H_i|-1) = A", agree, inputs, true);
            verdicts = v.take();
        } else if (kummer->parsed()) {
            const unsigned dd = dopt.value_or(s);
            const auto ext = ff::make_extension(q, dd, budget);
            const auto Pp = P.empty() ? ramify::first_irreducible(ext.base(), s) : poly::parse_poly(P, ext.base());
            if (Pp.degree() != static_cast<int>(s)) fail(ErrorKind::ParseError, "P must have degree s");
            inputs.update({{"q", q}, {"s", s}, {"d", dd}, {"P", poly::to_string(Pp)}});
            const auto m = models::kummer_exponents(q, s);
            const auto c = models::check_kummer(m);
            const auto z = models::z_values(Pp, ext);
            results = {{"exponents", report::formula(m.exponents)},
                       {"modulus", report::formula(m.modulus)},
                       {"model", models::tame_model(q, s, dd)},
                       {"checks_pass", c.all()},
                       {"Z", report::enumerated(report::z_json(z))}};
            report::Verdicts v;
            v.check("b_i = q^{i-1}: recurrences, coprimality, Σ b_i", c.all(), inputs);
            v.check("Z_i primitive of order q^s-1", z.all_primitive(), inputs, true);
            verdicts = v.take();
        } else if (tower->parsed()) {
            const auto [p, r] = cyclo::detail::prime_power(Q);
            if (!p) fail(ErrorKind::CompositeCharacteristic, std::to_string(Q) + " is not a prime power");
            const Field F = ff::build_field(p, r, std::nullopt, budget);
            inputs.update({{"Q", Q}, {"alpha", alpha}});
            std::vector<Element> rhos = rho.empty() ? F.elements() : std::vector<Element>{poly::parse_element(rho, F)};
            json certs = json::array();
            report::Verdicts v;
            for (auto& x : rhos) {
                const auto c = models::verify_as_tower(F, x, alpha);
                certs.push_back({{"rho", ff::to_string(x)},
                                 {"level2", c.level2},
                                 {"level3", c.level3},
                                 {"carlitz_level2", c.carlitz_level2},
                                 {"carlitz_level3", c.carlitz_level3},
                                 {"negative_control", c.negative_control},
                                 {"ok", c.ok()}});
                v.check("tower certificate", c.ok(), {{"Q", Q}, {"alpha", alpha}, {"rho", ff::to_string(x)}});
            }
            results = {{"certificates", certs}};
            verdicts = v.take();
        } else if (inv->parsed()) {
            const auto ext = ff::make_extension(q, d, budget);
            const Field& F = ext.field();
            inputs.update({{"q", q}, {"d", d}, {"alpha", alpha}, {"mode", mode}});
            const auto G = invariant::delta_t(F, alpha);
            results["group_order"] = report::formula(cyclo::detail::ipow(F.order(), alpha - 1));
            if (mode == "kernel") {
                invariant::InvariantBasis B;
                if (!bound.empty()) {
                    invariant::Exponent mu;
                    for (auto& tok : poly::io::split_top(bound)) {
                        const auto v = poly::io::parse_int(tok);
                        if (v < 0 || v > 0xFFFF) fail(ErrorKind::ParseError, "bad multidegree bound");
                        mu.push_back(static_cast<std::uint16_t>(v));
                    }
                    inputs["bound"] = mu;
                    B = invariant::invariant_space(G, mu);
                } else {
                    inputs["degree"] = degree;
                    B = invariant::invariant_space(G, degree);
                }
                results["basis"] = report::enumerated(report::basis_json(B));
                results["dim"] = report::enumerated(B.basis.size());
                results["columns"] = B.columns;
            } else {
                const auto fam = invariant::delta_t_elements(F, alpha, budget);
                const auto e = invariant::eigenspace_invariants(fam, q, d);
                results["family"] = "ΔT_α(F_{q^d})";
                results["matrix_power"] = report::enumerated(report::vectors_json(F, e.matrix_power));
                results["semilinear"] = report::enumerated(report::vectors_json(F, e.semilinear));
                results["matrix_power_comp_cond"] = e.matrix_power_comp_cond;
                results["semilinear_comp_cond"] = e.semilinear_comp_cond;
            }
            if (certificate) results["certificate"] = report::certificate_json(invariant::non_polynomiality_certificate(q, d, alpha));
            if (table) {
                const auto t = invariant::remainder_table();
                results["remainder_table"] = report::table_json(t);
                report::Verdicts v;
                v.check("remainder table reproduced row by row", t.all_match(), {{"q", 3}});
                verdicts = v.take();
            }
        } else if (cpoly->parsed()) {
            const auto ext = ff::make_extension(q, d, budget);
            const auto Mp = poly::embed(poly::parse_poly(M, ext.base()), ext.embedding());
            inputs.update({{"q", q}, {"d", d}, {"M", poly::to_string(Mp)}});
            const auto C = carlitz::carlitz_poly(Mp);
            json cs = json::array();
            for (auto& c : C.coeffs()) cs.push_back(poly::to_string(c));
            results = {{"coefficients", cs}, {"Q", C.Q()}};
        } else if (verify->parsed()) {
            inputs["suite"] = suite;
            const std::vector<std::string> run = suite == "all" ? report::suite_names() : std::vector<std::string>{suite};
            results = json::array();
            for (auto& n : run) {
                auto sj = report::run_suite(n, budget).to_json(n);
                for (auto& v : sj["verdicts"]) {
                    v["suite"] = n;
                    verdicts.push_back(v);
                }
                sj.erase("verdicts");
                results.push_back(std::move(sj));
            }
        }
        rep["inputs"] = inputs;
        rep["results"] = results;
        rep["verdicts"] = verdicts;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ConsistencyFailure || e.kind() == ErrorKind::InternalInconsistency ? 1 : 2;
    }

    const std::string text = as_json ? rep.dump(2) + "\n" : render_text(rep);
    out << text;
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << out_file << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

} // namespace cyclo::cli
