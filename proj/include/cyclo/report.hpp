#pragma once

// Structured reports and the verification suites. Every numeric claim is
// {"value", "provenance"} with provenance formula | enumeration | both-agree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo/carlitz.hpp"
#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/invariant.hpp"
#include "cyclo/models.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/ramify.hpp"

namespace cyclo::report {

using json = nlohmann::json;
using ff::Element;
using ff::Field;
using poly::Polynomial;

inline constexpr const char* kSchema = "v1";

inline json formula(json v) { return {{"value", std::move(v)}, {"provenance", "formula"}}; }
inline json enumerated(json v) { return {{"value", std::move(v)}, {"provenance", "enumeration"}}; }
/// Both sides when they differ, a single value when they agree.
inline json compare(json by_formula, json by_enumeration) {
    if (by_formula == by_enumeration) return {{"value", std::move(by_formula)}, {"provenance", "both-agree"}};
    return {{"formula", formula(std::move(by_formula))}, {"enumeration", enumerated(std::move(by_enumeration))}};
}

class Verdicts {
public:
    /// status: pass | fail | reported-discrepancy
    void add(const std::string& claim, const std::string& status, json instance) {
        list_.push_back({{"claim", claim}, {"status", status}, {"instance", std::move(instance)}});
    }
    void check(const std::string& claim, bool ok, json instance, bool discrepancy = false) {
        add(claim, ok ? "pass" : discrepancy ? "reported-discrepancy" : "fail", std::move(instance));
    }
    void skip(const std::string& claim, json instance, const std::string& why) {
        instance["skipped"] = why;
        add(claim, "skipped", std::move(instance));
    }
    const json& list() const { return list_; }
    json take() { return std::move(list_); }

private:
    json list_ = json::array();
};

struct Suite {
    json results = json::array();
    Verdicts verdicts;

    json to_json(const std::string& name) {
        return {{"suite", name}, {"results", std::move(results)}, {"verdicts", verdicts.take()}};
    }
};

inline json decomposition_json(const galois::AbelianDecomposition& a) {
    return {{"cyclic_orders", a.cyclic_orders}, {"structure", galois::to_string(a)}};
}

/// 128-bit closed forms: a JSON number when it fits in 64 bits, else a decimal string.
inline json wide_json(ramify::wide x) {
    if (x >= INT64_MIN && x <= INT64_MAX) return static_cast<std::int64_t>(x);
    return ramify::to_string(x);
}

inline json wide_json(const std::vector<ramify::wide>& xs) {
    json a = json::array();
    for (auto x : xs) a.push_back(wide_json(x));
    return a;
}

inline std::string poly_text(const Polynomial& f) { return poly::to_string(f); }

inline std::vector<std::uint64_t> grid_orders(std::uint64_t qmax) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= qmax; ++n)
        if (cyclo::detail::prime_power(n).first) out.push_back(n);
    return out;
}

// ---- group ----

/// |G|, |H|, quotient, CRT factors, N_t orders and the wild decomposition for M over F_q.
inline json group_report(const ff::Extension& ext, const Polynomial& M, std::uint64_t budget) {
    const auto G = galois::build_group(ext, M, budget);
    const auto H = galois::compute_H(G);
    const auto NK = galois::norm_kernel(G);
    const auto qc = galois::quotient_order_check(G, H, M);
    json r;
    r["q"] = ext.q();
    r["d"] = ext.d();
    r["M"] = poly_text(M);
    r["G"] = enumerated(G.size());
    r["H"] = enumerated(H.order());
    r["quotient"] = compare(qc.base_units, qc.quotient);
    r["H_equals_norm_kernel"] = H == NK;
    const auto crt = galois::crt_split(ext, M, budget);
    json fs = json::array();
    for (auto& f : crt.factors)
        fs.push_back({{"P", poly_text(f.P)}, {"exponent", f.exponent}, {"G", enumerated(f.G)}, {"H", enumerated(f.H)}});
    r["crt"] = {{"factors", fs}, {"order_product_holds", crt.holds()}};
    const auto fac = poly::factor(M);
    if (fac.size() == 1) {
        const auto& P = fac.front().poly;
        const unsigned alpha = fac.front().multiplicity;
        const auto s = static_cast<unsigned>(P.degree());
        const auto N = galois::filtration_N(G, P, alpha, false);
        json ns = json::array();
        for (unsigned t = 1; t <= alpha; ++t)
            ns.push_back({{"t", t},
                          {"order", compare(cyclo::detail::ipow(ext.q(), ext.d() * s * (alpha - t)), N[t - 1].order())}});
        r["N"] = ns;
        if (alpha >= 2) {
            const auto dec = galois::p_group_decomposition(N.front());
            const auto fm = galois::v_formula_multiset(ext.q(), ext.d(), s, alpha);
            r["N1_decomposition"] = compare(decomposition_json(fm), decomposition_json(dec));
        }
    }
    return r;
}

// ---- suites ----

/// H = (σ-1)G equals the norm kernel; |G|/|H| = #(A_1/M)^*; |H| = (q^d-1)^{d-1}.
inline Suite suite_kummerfun(std::uint64_t budget) {
    Suite s;
    for (std::uint64_t q : {2, 3}) {
        const auto ext = ff::make_extension(q, 2, budget);
        const Field& F = ext.base();
        std::vector<Polynomial> Ms{poly::parse_poly("0,1", F), poly::parse_poly("1,1", F)};
        for (std::uint64_t k = 0; k < q * q; ++k) {
            auto P = poly::monic_by_rank(F, 2, k);
            if (poly::is_irreducible(P)) Ms.push_back(P);
        }
        Ms.push_back(poly::parse_poly("0,0,1", F));
        Ms.push_back(poly::parse_poly("0,1,1", F));
        for (auto& M : Ms) {
            json inst{{"q", q}, {"d", 2}, {"M", poly_text(M)}};
            const auto G = galois::build_group(ext, M, budget);
            const auto H = galois::compute_H(G);
            const auto NK = galois::norm_kernel(G);
            const auto qc = galois::quotient_order_check(G, H, M);
            s.results.push_back({{"instance", inst},
                                 {"G", enumerated(G.size())},
                                 {"H", enumerated(H.order())},
                                 {"norm_kernel", enumerated(NK.order())},
                                 {"quotient", compare(qc.base_units, qc.quotient)}});
            s.verdicts.check("H equals the kernel of G_{q^d,M} -> G_{q,M}", H == NK, inst);
            s.verdicts.check("|G|/|H| = #(A_1/M)^*", qc.holds(), inst);
        }
        const auto P = ramify::first_irreducible(F, 2);
        const auto G = galois::build_group(ext, P, budget);
        const auto H = galois::compute_H(G);
        const std::uint64_t expect = cyclo::detail::ipow(q * q - 1, 1);
        json inst{{"q", q}, {"d", 2}, {"s", 2}, {"M", poly_text(P)}};
        s.results.push_back({{"instance", inst}, {"H", compare(expect, H.order())}});
        s.verdicts.check("|H| = (q^d-1)^{d-1}", H.order() == expect, inst);
    }
    return s;
}

/// N_1 decomposition against v_{q^r,n}(α), and |N_k| = q^{rs(α-k)}.
inline Suite suite_pgroup(std::uint64_t budget) {
    Suite s;
    for (std::uint64_t q : {2, 3})
        for (unsigned r : {1u, 2u}) {
            const auto ext = ff::make_extension(q, r, budget);
            for (unsigned deg : {1u, 2u}) {
                const auto P = ramify::first_irreducible(ext.base(), deg);
                for (unsigned alpha : {2u, 3u, 4u}) {
                    json inst{{"q", q}, {"r", r}, {"s", deg}, {"alpha", alpha}, {"P", poly_text(P)}};
                    long double size = 1;
                    for (unsigned i = 0; i < deg * (alpha - 1); ++i) size *= static_cast<long double>(ext.field().order());
                    if (size > static_cast<long double>(budget)) {
                        s.verdicts.skip("decomposition of P_{q^r,P^α}", inst, "group order exceeds budget");
                        continue;
                    }
                    const auto G = galois::build_wild_group(ext, P, alpha, budget);
                    const auto S = galois::whole(G);
                    const auto dec = galois::p_group_decomposition(S);
                    const auto fm = galois::v_formula_multiset(q, r, deg, alpha);
                    json cyc;
                    for (auto [order, count] : galois::cyclic_subgroup_counts(S)) cyc[std::to_string(order)] = count;
                    json vn;
                    const std::uint64_t p = cyclo::detail::prime_power(q).first;
                    for (unsigned n = 1, pn1 = 1; pn1 < alpha; ++n, pn1 *= static_cast<unsigned>(p))
                        vn[std::to_string(pn1 * p)] = galois::v_formula(q, r, deg, alpha, n);
                    const auto N = galois::filtration_N(G, P, alpha, false);
                    json ns = json::array();
                    bool n_ok = true;
                    for (unsigned k = 1; k <= alpha; ++k) {
                        const std::uint64_t expect = cyclo::detail::ipow(q, r * deg * (alpha - k));
                        n_ok = n_ok && expect == N[k - 1].order();
                        ns.push_back({{"k", k}, {"order", compare(expect, N[k - 1].order())}});
                    }
                    s.results.push_back({{"instance", inst},
                                         {"order", enumerated(G.size())},
                                         {"decomposition", compare(decomposition_json(fm), decomposition_json(dec))},
                                         {"v_formula", formula(vn)},
                                         {"cyclic_subgroups_by_order", enumerated(cyc)},
                                         {"N", ns}});
                    s.verdicts.check("decomposition of P_{q^r,P^α} equals {p^n with multiplicity v_{q^r,n}(α)}",
                                     dec == fm, inst, true);
                    s.verdicts.check("|N_k| = q^{rs(α-k)}", n_ok, inst);
                }
            }
        }
    return s;
}

/// Kernel q^d and image q^{d(s-1)} of the additive σ-1; H-orders of the lower filtration.
inline Suite suite_filtration(std::uint64_t budget) {
    Suite s;
    for (std::uint64_t q : {2, 3, 4})
        for (unsigned d : {1u, 2u, 3u, 4u})
            for (unsigned deg = 1; deg <= d; ++deg) {
                if (d % deg) continue;
                json inst{{"q", q}, {"d", d}, {"s", deg}};
                long double size = 1;
                for (unsigned i = 0; i < d * deg; ++i) size *= static_cast<long double>(q);
                if (size > 65536.0L) continue;
                const auto ext = ff::make_extension(q, d, budget);
                const auto k = galois::kernel_image_counts(ext, deg);
                s.results.push_back({{"instance", inst},
                                     {"kernel", compare(k.kernel_formula, k.kernel)},
                                     {"image", compare(k.image_formula, k.image)}});
                s.verdicts.check("additive σ-1: kernel q^d, image q^{d(s-1)}", k.holds(), inst, true);
            }
    for (std::uint64_t q : {2, 3})
        for (unsigned d : {1u, 2u})
            for (unsigned deg = 1; deg <= d; ++deg) {
                if (d % deg) continue;
                for (unsigned alpha : {1u, 2u, 3u}) {
                    json inst{{"q", q}, {"d", d}, {"s", deg}, {"alpha", alpha}};
                    const auto f = ramify::lower_filtration(q, d, deg, alpha, budget);
                    json steps = json::array();
                    for (auto& st : f.lower)
                        steps.push_back({{"from", st.from},
                                         {"to", st.to == UINT64_MAX ? json("inf") : json(st.to)},
                                         {"level", st.level},
                                         {"order", formula(wide_json(st.order))}});
                    json r{{"instance", inst}, {"lower", steps}, {"H_display", formula(wide_json(f.H.display))},
                           {"H_expected", formula(wide_json(f.H.H_expected))}};
                    if (f.H.enumerated) {
                        r["H_cap_N"] = enumerated(*f.H.enumerated);
                        r["H"] = compare(wide_json(f.H.H_expected), *f.H.H_enumerated);
                        std::vector<ramify::wide> e(f.H.enumerated->begin(), f.H.enumerated->end());
                        s.verdicts.check("closed-form |H_k| equals |H ∩ N_k|", e == f.H.display, inst, true);
                    }
                    s.results.push_back(std::move(r));
                }
            }
    return s;
}

/// Closed forms of A and B, telescoping, A = 0 for s = d, divisor of dT, Hilbert sums.
inline Suite suite_different(std::uint64_t budget) {
    Suite s;
    for (std::uint64_t q : {2, 3})
        for (unsigned d : {1u, 2u, 4u})
            for (unsigned deg = 1; deg <= d; ++deg) {
                if (d % deg) continue;
                for (unsigned alpha = 1; alpha <= 4; ++alpha) {
                    json inst{{"q", q}, {"d", d}, {"s", deg}, {"alpha", alpha}};
                    const auto r = ramify::different_main(q, d, deg, alpha);
                    s.results.push_back({{"instance", inst},
                                         {"A", formula(r.A())},
                                         {"B", formula(r.B())},
                                         {"A_telescoped", formula(r.A_telescoped)},
                                         {"B_telescoped", formula(r.B_telescoped)},
                                         {"different", ramify::to_string(r.telescoped)}});
                    s.verdicts.check("A and B: unsimplified = simplified",
                                     r.A_unsimplified == r.A_simplified && r.B_unsimplified == r.B_simplified, inst);
                    s.verdicts.check("telescoping reproduces (A, B)", r.telescoping_agrees(), inst);
                    if (deg == d) s.verdicts.check("A = 0 when s = d", r.A() == 0, inst);

                    const auto h = ramify::hilbert_sum_check(q, d, deg, alpha, budget);
                    json hj{{"A", formula(wide_json(h.A))},
                            {"sum_by_level", formula(wide_json(h.sum_by_level))},
                            {"sum_by_lower_i", formula(wide_json(h.sum_by_lower_i))}};
                    if (h.sum_enumerated) hj["sum_enumerated"] = enumerated(wide_json(*h.sum_enumerated));
                    s.results.back()["hilbert"] = hj;
                    const bool agree = h.agrees_by_level() && h.agrees_by_lower_i() &&
                                       (!h.sum_enumerated || *h.sum_enumerated == h.A);
                    s.verdicts.check("hilbert_sum_check: Σ(|H_i|-1) = A", agree, inst, true);
                }
            }
    for (std::uint64_t q : {2, 3})
        for (unsigned alpha = 1; alpha <= 3; ++alpha) {
            const auto t = ramify::divisor_dT(q, alpha, 1);
            s.results.push_back({{"instance", {{"q", q}, {"alpha", alpha}, {"s", 1}}},
                                 {"divisor_dT",
                                  {{"S", formula(t.S)},
                                   {"infinity_exponent", formula(t.infinity_exponent)},
                                   {"total_infinity", formula(t.total_infinity)}}}});
        }
    return s;
}

inline json z_json(const models::ZReport& z) {
    json zs = json::array();
    for (std::size_t i = 0; i < z.Z.size(); ++i)
        zs.push_back({{"i", i + 1},
                      {"root", ff::to_string(z.roots[i])},
                      {"Z", ff::to_string(z.Z[i])},
                      {"order", z.orders[i] ? json(*z.orders[i]) : json(nullptr)},
                      {"primitive", static_cast<bool>(z.primitive[i])}});
    return {{"values", zs}, {"target_order", z.target_order}, {"frobenius_relation", z.frobenius_relation}};
}

/// b_i = q^{i-1} recurrences and sums; primitivity of Z_i listed as findings.
inline Suite suite_tame(std::uint64_t budget) {
    Suite s;
    for (std::uint64_t q : {2, 3, 4})
        for (unsigned deg : {1u, 2u, 3u}) {
            json inst{{"q", q}, {"s", deg}};
            const auto m = models::kummer_exponents(q, deg);
            const auto c = models::check_kummer(m);
            const auto ext = ff::make_extension(q, deg, budget);
            const auto P = ramify::first_irreducible(ext.base(), deg);
            const auto z = models::z_values(P, ext);
            const auto cs = models::as_character_sum(P, ext);
            s.results.push_back({{"instance", inst},
                                 {"exponents", formula(m.exponents)},
                                 {"modulus", formula(m.modulus)},
                                 {"model", models::tame_model(q, deg)},
                                 {"checks",
                                  {{"b1_is_one", c.b1_is_one},
                                   {"recurrence", c.recurrence},
                                   {"recurrence_mu_prime", c.recurrence_mu_prime},
                                   {"coprime", c.coprime},
                                   {"sum_mod", c.sum_mod},
                                   {"sum_exact", c.sum_exact}}},
                                 {"P", poly_text(P)},
                                 {"Z", enumerated(z_json(z))},
                                 {"character_sum", {{"rhs", cs.rhs}, {"obligation_holds", cs.obligation_holds}}}});
            s.verdicts.check("b_i = q^{i-1}: recurrences, coprimality, Σ b_i", c.all(), inst);
            s.verdicts.check("Z_i primitive of order q^s-1", z.all_primitive(), inst, true);
            s.verdicts.check("σ(R) - R ∈ ℘(F_{q^d}(T)) for b_i = 1", cs.obligation_holds, inst);
        }
    return s;
}

/// verify_as_tower over every ρ ∈ F_Q, Q <= 16, α ∈ {2, 3}.
inline Suite suite_tower(std::uint64_t budget) {
    Suite s;
    for (auto Q : grid_orders(16)) {
        const auto [p, r] = cyclo::detail::prime_power(Q);
        const Field F = ff::build_field(p, r, std::nullopt, budget);
        for (unsigned alpha : {2u, 3u}) {
            std::size_t ok = 0, total = 0;
            json failures = json::array();
            for (auto& rho : F.elements()) {
                const auto c = models::verify_as_tower(F, rho, alpha);
                ++total;
                if (c.ok()) ++ok;
                else failures.push_back(ff::to_string(rho));
            }
            json inst{{"Q", Q}, {"alpha", alpha}};
            s.results.push_back({{"instance", inst}, {"certified", enumerated(ok)}, {"rho_count", total},
                                 {"failures", failures}});
            s.verdicts.check("verify_as_tower certificates for every ρ", ok == total, inst);
        }
    }
    return s;
}

inline json table_json(const invariant::RemainderTable& t) {
    json rows = json::array();
    for (auto& r : t.rows) {
        json rem = json::array(), img = json::array();
        for (unsigned k = 0; k < 4; ++k) {
            rem.push_back(invariant::to_string(r.remainder[k], invariant::table_names(), 3));
            img.push_back(invariant::to_string(r.image[k], invariant::table_names(), 3));
        }
        rows.push_back({{"monomial", r.monomial},
                        {"remainder", rem},
                        {"image", img},
                        {"matches_remainder", r.matches_remainder},
                        {"matches_image", r.matches_image},
                        {"convention", r.convention()}});
    }
    return rows;
}

inline json certificate_json(const invariant::PolynomialityCertificate& c) {
    json mins = json::array(), pure = json::array(), facs = json::array();
    for (auto& m : c.min_degree) mins.push_back(m ? json(*m) : json(nullptr));
    for (auto& m : c.min_pure_leading) pure.push_back(m ? json(*m) : json(nullptr));
    for (auto& f : c.factorizations) {
        json j{{"degrees", f.degrees}};
        if (f.rejected_at) j["rejected_at"] = {{"degree", *f.rejected_at}, {"predicted", f.predicted}, {"computed", f.computed}};
        facs.push_back(j);
    }
    return {{"group_order", formula(c.group_order)},
            {"scanned_to", c.scanned_to},
            {"dims", enumerated(c.dims)},
            {"min_degree_involving", enumerated(mins)},
            {"min_pure_leading_degree", enumerated(pure)},
            {"factorizations", facs},
            {"reflection_subgroup_order", enumerated(c.reflection_subgroup_order)},
            {"verdict", c.verdict},
            {"reasons", c.reasons}};
}

inline json basis_json(const invariant::InvariantBasis& b) {
    json v = json::array();
    for (auto& p : b.basis) v.push_back(invariant::to_string(p));
    return v;
}

inline json vectors_json(const Field& f, const std::vector<std::vector<ff::code_t>>& vs) {
    json out = json::array();
    for (auto& v : vs) {
        json row = json::array();
        for (auto c : v) row.push_back(ff::to_string(f.element(c)));
        out.push_back(row);
    }
    return out;
}

/// q = 3 remainder table, ΔT_3(F_3) invariants, certificate, σ(g)g^{-1}, eigenspace modes.
inline Suite suite_invariants(std::uint64_t budget) {
    Suite s;
    const auto table = invariant::remainder_table();
    s.results.push_back({{"remainder_table", table_json(table)}});
    s.verdicts.check("remainder table reproduced row by row", table.all_match(), json{{"q", 3}});
    s.verdicts.check("remainder table uses act(g,m) - m throughout", table.remainder_matches() == table.rows.size(),
                     json{{"q", 3}, {"remainder_rows", table.remainder_matches()}, {"rows", table.rows.size()}}, true);

    const Field F3 = ff::build_field(3, 1);
    const auto G = invariant::delta_t(F3, 3);
    const auto all = invariant::delta_t_elements(F3, 3, budget);
    json dims = json::array();
    bool fixed = true, zfree = true;
    std::vector<std::size_t> dv;
    for (unsigned n = 1; n <= 3; ++n) {
        const auto B = invariant::invariant_space(G, n);
        for (auto& p : B.basis) {
            fixed = fixed && invariant::is_fixed(p, all);
            if (n == 3) zfree = zfree && !p.involves(2);
        }
        dv.push_back(B.basis.size());
        dims.push_back({{"degree", n}, {"dim", enumerated(B.basis.size())}, {"basis", basis_json(B)}});
    }
    s.results.push_back({{"instance", {{"q", 3}, {"d", 1}, {"alpha", 3}}}, {"invariants", dims}});
    s.verdicts.check("ΔT_3(F_3) invariant dims (1, 1, 2)", dv == std::vector<std::size_t>{1, 1, 2}, json{{"q", 3}});
    s.verdicts.check("degree-3 invariants are z-free", zfree, json{{"q", 3}});
    s.verdicts.check("invariant bases fixed by every group element", fixed, json{{"q", 3}});

    for (auto [q, d, alpha] : std::vector<std::tuple<std::uint64_t, unsigned, std::size_t>>{{3, 1, 3}, {2, 1, 3}, {3, 1, 2}, {3, 1, 1}}) {
        json inst{{"q", q}, {"d", d}, {"alpha", alpha}};
        const auto c = invariant::non_polynomiality_certificate(q, d, alpha);
        s.results.push_back({{"instance", inst}, {"certificate", certificate_json(c)}});
        if (q == 3 && alpha == 3)
            s.verdicts.check("ΔT_3(F_3): |H| = 9, invariant ring not polynomial",
                             c.group_order == 9 && c.verdict == "not polynomial", inst);
    }

    for (std::uint64_t q : {2, 3}) {
        const auto sym = invariant::sigma_minus_one_symbolic(q, 3);
        json row = json::array(), diff = json::array();
        for (auto& e : sym.first_row) row.push_back(invariant::to_string(e, sym.names, sym.names.size()));
        for (auto& e : sym.difference) diff.push_back(invariant::to_string(e, sym.names, sym.names.size()));
        json inst{{"q", q}, {"alpha", 3}};
        s.results.push_back({{"instance", inst}, {"sigma_g_ginv_first_row", row}, {"minus_closed_form", diff}});
        s.verdicts.check("σ(g)g^{-1} = closed form with a(a^q-a)+b^q-b", sym.matches_closed_form, inst, true);
    }
    for (std::size_t alpha : {2, 3}) {
        const auto n = invariant::sigma_minus_one_numeric(2, 2, alpha, budget);
        json inst{{"q", 2}, {"d", 2}, {"alpha", alpha}};
        json r{{"instance", inst},
               {"instances", enumerated(n.instances)},
               {"strict_difference_members_by_column", enumerated(n.strict_members)}};
        if (n.strict_counterexample) r["strict_counterexample_first_row"] = vectors_json(ff::make_extension(2, 2).field(), {*n.strict_counterexample});
        s.results.push_back(r);
        s.verdicts.check("σ(g)g^{-1} lies in ΔT_α", n.all_toeplitz_unitriangular, inst);
        s.verdicts.check("upper entries lie in the F_{q^d}-span of {x^q - x}", n.all_in_difference_module, inst);
        s.verdicts.check("upper entries are themselves of the form x^q - x", !n.strict_counterexample, inst, true);
    }

    const auto F4 = ff::make_extension(2, 2).field();
    for (std::size_t alpha : {2, 3}) {
        const auto fam = invariant::delta_t_elements(F4, alpha, budget);
        const auto e = invariant::eigenspace_invariants(fam, 2, 2);
        json inst{{"q", 2}, {"d", 2}, {"alpha", alpha}, {"family", "ΔT_α(F_4)"}};
        const bool cc = std::all_of(e.matrix_power_comp_cond.begin(), e.matrix_power_comp_cond.end(), [](bool b) { return b; }) &&
                        std::all_of(e.semilinear_comp_cond.begin(), e.semilinear_comp_cond.end(), [](bool b) { return b; });
        s.results.push_back({{"instance", inst},
                             {"matrix_power", enumerated(vectors_json(F4, e.matrix_power))},
                             {"semilinear", enumerated(vectors_json(F4, e.semilinear))}});
        s.verdicts.check("comp-cond holds on eigenspace vectors (both modes)", cc, inst, true);
    }
    return s;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"kummerfun", "pgroup", "filtration", "different", "tame", "tower", "invariants"};
    return n;
}

inline Suite run_suite(const std::string& name, std::uint64_t budget) {
    if (name == "kummerfun") return suite_kummerfun(budget);
    if (name == "pgroup") return suite_pgroup(budget);
    if (name == "filtration") return suite_filtration(budget);
    if (name == "different") return suite_different(budget);
    if (name == "tame") return suite_tame(budget);
    if (name == "tower") return suite_tower(budget);
    if (name == "invariants") return suite_invariants(budget);
    fail(ErrorKind::ParseError, "unknown suite '" + name + "'");
}

} // namespace cyclo::report
