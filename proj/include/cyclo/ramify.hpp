#pragma once

// Closed-form ramification data for K_{q^d,P^α} / F_{q^d}K_{q,P^α}:
// ramification indices, lower filtration and H_i orders, the different
// exponents (A, B) replayed through the tower on symbolic divisors, and
// the divisor of dT.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/poly.hpp"

namespace cyclo::ramify {

using cyclo::detail::checked_add;
using cyclo::detail::checked_mul;
using i64 = std::int64_t;

inline i64 pw(i64 b, i64 e) {
    if (e < 0) fail(ErrorKind::InternalInconsistency, "negative exponent in closed form");
    return cyclo::detail::checked_pow(b, static_cast<unsigned>(e));
}

inline i64 exact_div(i64 a, i64 b) {
    if (b == 0 || a % b != 0)
        fail(ErrorKind::InternalInconsistency, std::to_string(a) + " is not divisible by " + std::to_string(b));
    return a / b;
}

/// Checked 128-bit arithmetic for the filtration orders, which exceed 64 bits
/// at the top of the grid (e.g. q = 3, d = s = α = 4).
using wide = __int128;

inline wide wmul(wide a, wide b) {
    wide r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer product exceeds 128 bits");
    return r;
}

inline wide wadd(wide a, wide b) {
    wide r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer sum exceeds 128 bits");
    return r;
}

inline wide wpw(wide b, i64 e) {
    if (e < 0) fail(ErrorKind::InternalInconsistency, "negative exponent in closed form");
    wide r = 1;
    for (i64 i = 0; i < e; ++i) r = wmul(r, b);
    return r;
}

inline std::string to_string(wide x) {
    if (x == 0) return "0";
    const bool neg = x < 0;
    std::string s;
    while (x != 0) {
        const int digit = static_cast<int>(x % 10);
        s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

inline wide wexact_div(wide a, wide b) {
    if (b == 0 || a % b != 0) fail(ErrorKind::InternalInconsistency, to_string(a) + " is not divisible by " + to_string(b));
    return a / b;
}

inline void require_divides(unsigned s, unsigned d) {
    if (s == 0 || d % s != 0)
        fail(ErrorKind::DegreeNotDividing, "s = " + std::to_string(s) + " does not divide d = " + std::to_string(d));
}

// ---- places and divisors ----

enum class PlaceKind { Finite, Infinite };

/// Fields of the two towers F_q(T) ⊂ K_q ⊂ F_{q^d}K_q ⊂ K_{q^d} and
/// F_q(T) ⊂ F_{q^d}(T) ⊂ K_{q^d}.
enum class Level { Base, Kq, ConstKq, ConstBase, Top };

inline std::string to_string(Level l) {
    switch (l) {
    case Level::Base: return "F_q(T)";
    case Level::Kq: return "K_q";
    case Level::ConstKq: return "F_{q^d}K_q";
    case Level::ConstBase: return "F_{q^d}(T)";
    case Level::Top: return "K_{q^d}";
    }
    return "?";
}

/// A place class: the places above ℘_i (index i >= 1) or above ∞ at a level.
/// Below F_{q^d} the finite places over P carry index 0.
struct PlaceLabel {
    PlaceKind kind = PlaceKind::Finite;
    Level level = Level::Base;
    unsigned index = 0;

    auto tie() const { return std::tuple(static_cast<int>(level), static_cast<int>(kind), index); }
    bool operator<(const PlaceLabel& o) const { return tie() < o.tie(); }
    bool operator==(const PlaceLabel& o) const { return tie() == o.tie(); }
};

inline std::string to_string(const PlaceLabel& p) {
    const std::string name = p.kind == PlaceKind::Infinite ? "B_inf" : (p.index ? "P_" + std::to_string(p.index) : "P");
    return name + "[" + to_string(p.level) + "]";
}

class Divisor {
public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<const PlaceLabel, i64>> init) {
        for (auto& [k, v] : init) add(k, v);
    }

    void add(const PlaceLabel& p, i64 e) {
        const i64 v = checked_add(terms_[p], e);
        if (v == 0)
            terms_.erase(p);
        else
            terms_[p] = v;
    }

    i64 exponent(const PlaceLabel& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<PlaceLabel, i64>& terms() const { return terms_; }
    bool is_trivial() const { return terms_.empty(); }

    /// Multiplicative notation: exponent-wise sum.
    Divisor operator*(const Divisor& o) const {
        Divisor r = *this;
        for (auto& [k, v] : o.terms_) r.add(k, v);
        return r;
    }
    Divisor inverse() const {
        Divisor r;
        for (auto& [k, v] : terms_) r.add(k, -v);
        return r;
    }
    Divisor operator/(const Divisor& o) const { return *this * o.inverse(); }
    Divisor pow(i64 n) const {
        Divisor r;
        for (auto& [k, v] : terms_) r.add(k, checked_mul(v, n));
        return r;
    }

    bool operator==(const Divisor& o) const { return terms_ == o.terms_; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

private:
    std::map<PlaceLabel, i64> terms_;
};

inline std::string to_string(const Divisor& D) {
    if (D.is_trivial()) return "(1)";
    std::string s;
    for (auto& [p, e] : D.terms()) {
        if (!s.empty()) s += " ";
        s += to_string(p) + "^" + std::to_string(e);
    }
    return s;
}

/// One field extension in the static tower with its ramification data.
struct TowerEdge {
    Level from, to;
    i64 e_finite = 1;   // index of each place over P (resp. ℘_i)
    i64 e_infinite = 1; // index of each place over ∞
    bool splits_P = false; // P splits into ℘_1..℘_s along this edge
};

class Tower {
public:
    Tower(std::uint64_t q, unsigned d, unsigned s, unsigned alpha) : s_(s) {
        require_divides(s, d);
        const i64 Q = static_cast<i64>(q);
        const i64 wild_d = pw(Q, i64{d} * alpha) - pw(Q, i64{d} * (alpha - 1));
        const i64 wild_s = pw(Q, i64{s} * alpha) - pw(Q, i64{s} * (alpha - 1));
        edges_ = {
            {Level::Base, Level::Kq, wild_s, Q - 1, false},
            {Level::Kq, Level::ConstKq, 1, 1, true},
            {Level::ConstKq, Level::Top, exact_div(wild_d, wild_s), exact_div(pw(Q, d) - 1, Q - 1), false},
            {Level::Base, Level::ConstBase, 1, 1, true},
            {Level::ConstBase, Level::Top, wild_d, pw(Q, d) - 1, false},
        };
    }

    const std::vector<TowerEdge>& edges() const { return edges_; }

    const TowerEdge& edge(Level from, Level to) const {
        for (auto& e : edges_)
            if (e.from == from && e.to == to) return e;
        fail(ErrorKind::InternalInconsistency, "no such tower edge");
    }

    /// con_{from -> to}: each place is replaced by the places above it,
    /// raised to the ramification index; composite edges chain.
    Divisor conorm(const Divisor& D, Level from, Level to) const {
        if (from == to) return D;
        if (from == Level::Kq && to == Level::Top) return conorm(conorm(D, Level::Kq, Level::ConstKq), Level::ConstKq, to);
        if (from == Level::Base && to == Level::Top)
            return conorm(conorm(D, Level::Base, Level::ConstBase), Level::ConstBase, to);
        const TowerEdge& e = edge(from, to);
        Divisor r;
        for (auto& [p, x] : D.terms()) {
            if (p.level != from) fail(ErrorKind::InternalInconsistency, "conorm applied at the wrong level");
            if (p.kind == PlaceKind::Infinite) {
                r.add({PlaceKind::Infinite, to, 0}, checked_mul(x, e.e_infinite));
            } else if (e.splits_P && p.index == 0) {
                for (unsigned i = 1; i <= s_; ++i) r.add({PlaceKind::Finite, to, i}, checked_mul(x, e.e_finite));
            } else {
                r.add({PlaceKind::Finite, to, p.index}, checked_mul(x, e.e_finite));
            }
        }
        return r;
    }

private:
    unsigned s_;
    std::vector<TowerEdge> edges_;
};

// ---- closed forms ----

struct RamIndex {
    i64 difference_form = 0; // (q^{dα} - q^{d(α-1)}) / (q^{sα} - q^{s(α-1)})
    i64 product_form = 0;    // q^{(d-s)(α-1)} (q^d-1)/(q^s-1)
    i64 value() const { return product_form; }
};

inline RamIndex ram_index(std::uint64_t q, unsigned d, unsigned s, unsigned alpha) {
    require_divides(s, d);
    if (alpha < 1) fail(ErrorKind::ParseError, "α must be positive");
    const i64 Q = static_cast<i64>(q);
    RamIndex r;
    r.difference_form = exact_div(pw(Q, i64{d} * alpha) - pw(Q, i64{d} * (alpha - 1)),
                                  pw(Q, i64{s} * alpha) - pw(Q, i64{s} * (alpha - 1)));
    r.product_form = checked_mul(pw(Q, i64{d - s} * (alpha - 1)), exact_div(pw(Q, d) - 1, pw(Q, s) - 1));
    if (r.difference_form != r.product_form)
        fail(ErrorKind::InternalInconsistency, "the two ramification index forms disagree");
    return r;
}

/// α q^{kα} - (α+1) q^{k(α-1)}.
inline i64 wild_different_exponent(std::uint64_t q, unsigned k, unsigned alpha) {
    const i64 Q = static_cast<i64>(q);
    return checked_mul(alpha, pw(Q, i64{k} * alpha)) - checked_mul(alpha + 1, pw(Q, i64{k} * (alpha - 1)));
}

struct DifferentReport {
    i64 A_unsimplified = 0, A_simplified = 0;
    i64 B_unsimplified = 0, B_simplified = 0;
    i64 A_telescoped = 0, B_telescoped = 0;
    Divisor telescoped; // D_{K_{q^d}/F_{q^d}K_q}
    std::vector<std::pair<std::string, Divisor>> ingredients;
    i64 A() const { return A_simplified; }
    i64 B() const { return B_simplified; }
    bool telescoping_agrees() const { return A_telescoped == A_simplified && B_telescoped == B_simplified; }
};

/// Exponents of the different of K_{q^d,P^α}/F_{q^d}K_{q,P^α} at the finite
/// places over each ℘_i (A) and over ∞ (B), in closed form and replayed
/// through D_{M/K} = D_{M/L} con_{L/M}(D_{L/K}).
inline DifferentReport different_main(std::uint64_t q, unsigned d, unsigned s, unsigned alpha) {
    require_divides(s, d);
    if (alpha < 1) fail(ErrorKind::ParseError, "α must be positive");
    const i64 Q = static_cast<i64>(q);
    DifferentReport r;
    const i64 e = ram_index(q, d, s, alpha).value();
    r.A_unsimplified = wild_different_exponent(q, d, alpha) - checked_mul(wild_different_exponent(q, s, alpha), e);
    r.A_simplified = exact_div(checked_mul(pw(Q, i64{d} * (alpha - 1)), pw(Q, d) - pw(Q, s)), pw(Q, s) - 1);
    r.B_unsimplified = (pw(Q, d) - 2) - checked_mul(Q - 2, exact_div(pw(Q, d) - 1, Q - 1));
    r.B_simplified = checked_mul(Q, exact_div(pw(Q, d - 1) - 1, Q - 1));
    if (r.A_unsimplified != r.A_simplified)
        fail(ErrorKind::InternalInconsistency, "A: unsimplified " + std::to_string(r.A_unsimplified) +
                                                   " != simplified " + std::to_string(r.A_simplified));
    if (r.B_unsimplified != r.B_simplified)
        fail(ErrorKind::InternalInconsistency, "B: unsimplified " + std::to_string(r.B_unsimplified) +
                                                   " != simplified " + std::to_string(r.B_simplified));

    const Tower tw(q, d, s, alpha);
    const PlaceLabel P_Kq{PlaceKind::Finite, Level::Kq, 0};
    const PlaceLabel inf_Kq{PlaceKind::Infinite, Level::Kq, 0};
    Divisor D1{{P_Kq, wild_different_exponent(q, s, alpha)}, {inf_Kq, Q - 2}}; // K_q / F_q(T)
    Divisor D2;                                                               // F_{q^d}K_q / K_q
    Divisor D3;                                                               // F_{q^d}(T) / F_q(T)
    Divisor D4;                                                               // K_{q^d} / F_{q^d}(T)
    for (unsigned i = 1; i <= s; ++i) D4.add({PlaceKind::Finite, Level::Top, i}, wild_different_exponent(q, d, alpha));
    D4.add({PlaceKind::Infinite, Level::Top, 0}, pw(Q, d) - 2);
    r.ingredients = {{"K_q/F_q(T)", D1}, {"F_{q^d}K_q/K_q", D2}, {"F_{q^d}(T)/F_q(T)", D3}, {"K_{q^d}/F_{q^d}(T)", D4}};

    // D_{top/base} through F_{q^d}(T), and D_{F_{q^d}K_q/base} through K_q.
    const Divisor top_over_base = D4 * tw.conorm(D3, Level::ConstBase, Level::Top);
    const Divisor mid_over_base = D2 * tw.conorm(D1, Level::Kq, Level::ConstKq);
    r.telescoped = top_over_base / tw.conorm(mid_over_base, Level::ConstKq, Level::Top);

    r.A_telescoped = r.telescoped.exponent({PlaceKind::Finite, Level::Top, 1});
    for (unsigned i = 2; i <= s; ++i)
        if (r.telescoped.exponent({PlaceKind::Finite, Level::Top, i}) != r.A_telescoped)
            fail(ErrorKind::InternalInconsistency, "telescoped exponent differs between places over ℘_i");
    r.B_telescoped = r.telescoped.exponent({PlaceKind::Infinite, Level::Top, 0});
    return r;
}

struct DivisorDT {
    i64 S = 0;                 // α q^α - (α+1) q^{α-1}
    i64 S_degree_s = 0;        // α q^{sα} - (α+1) q^{s(α-1)}, the exponent at P for deg P = s
    i64 infinity_exponent = 0; // q - 2
    Divisor conorm_term;       // con(p_∞^{-2}) in K_q
    i64 total_infinity = 0;
};

inline DivisorDT divisor_dT(std::uint64_t q, unsigned alpha, unsigned s) {
    if (alpha < 1 || s < 1) fail(ErrorKind::ParseError, "α and s must be positive");
    const i64 Q = static_cast<i64>(q);
    DivisorDT r;
    r.S = wild_different_exponent(q, 1, alpha);
    r.S_degree_s = wild_different_exponent(q, s, alpha);
    r.infinity_exponent = Q - 2;
    const Tower tw(q, s, s, alpha);
    const Divisor pinf{{PlaceLabel{PlaceKind::Infinite, Level::Base, 0}, -2}};
    r.conorm_term = Divisor{};
    for (auto& [p, x] : pinf.terms())
        r.conorm_term.add({PlaceKind::Infinite, Level::Kq, 0}, checked_mul(x, tw.edge(Level::Base, Level::Kq).e_infinite));
    r.total_infinity = r.infinity_exponent + r.conorm_term.exponent({PlaceKind::Infinite, Level::Kq, 0});
    return r;
}

// ---- filtration ----

struct FiltrationStep {
    std::uint64_t from = 0, to = 0; // lower indices i in [from, to]; to = UINT64_MAX for "and beyond"
    unsigned level = 0;             // k with G_i = N_k (0 for G_0, α for trivial)
    wide order = 0;
};

struct HOrders {
    // display[k] = the closed-form |H_k|, k = 0..α. Read per N-level, it holds
    // on the whole lower range of N_k; read literally, only at lower index k.
    std::vector<wide> display;
    std::optional<std::vector<std::uint64_t>> enumerated; // |H ∩ N_k|, k = 0..α
    std::optional<std::uint64_t> H_enumerated;
    wide H_expected = 0; // |G| / #(A_1/P^α)^*
};

struct FiltrationReport {
    std::uint64_t q = 0;
    unsigned d = 0, s = 0, alpha = 0;
    std::vector<FiltrationStep> lower;
    HOrders H;
};

/// Lex-first monic irreducible of degree s over F_q.
inline poly::Polynomial first_irreducible(const ff::Field& Fq, unsigned s) {
    const std::uint64_t count = cyclo::detail::ipow(Fq.order(), s);
    for (std::uint64_t k = 0; k < count; ++k) {
        auto P = poly::monic_by_rank(Fq, s, k);
        if (poly::is_irreducible(P)) return P;
    }
    fail(ErrorKind::InternalInconsistency, "no irreducible of this degree");
}

inline FiltrationReport lower_filtration(std::uint64_t q, unsigned d, unsigned s, unsigned alpha,
                                         std::uint64_t budget = kDefaultBudget) {
    require_divides(s, d);
    if (alpha < 1) fail(ErrorKind::ParseError, "α must be positive");
    const wide Q = static_cast<wide>(q);
    const wide qd = wpw(Q, d);
    FiltrationReport r{q, d, s, alpha, {}, {}};
    const wide G = wmul(wpw(qd - 1, s), wpw(Q, i64{d} * s * (alpha - 1)));
    r.lower.push_back({0, 0, 0, G});
    for (unsigned k = 1; k < alpha; ++k)
        r.lower.push_back({static_cast<std::uint64_t>(pw(static_cast<i64>(qd), k - 1)),
                           static_cast<std::uint64_t>(pw(static_cast<i64>(qd), k) - 1), k,
                           wpw(Q, i64{d} * s * (alpha - k))});
    r.lower.push_back({static_cast<std::uint64_t>(pw(static_cast<i64>(qd), alpha - 1)), UINT64_MAX, alpha, 1});
    if (alpha == 1) r.lower.front().to = 0;

    auto display = [&](i64 i) -> wide {
        if (i == 0) return wmul(wpw(qd - 1, s - 1), wpw(Q, i64{d} * (s - 1) * (alpha - 1)));
        return i >= alpha ? 1 : wpw(Q, i64{d} * (s - 1) * (alpha - i));
    };
    for (unsigned k = 0; k <= alpha; ++k) r.H.display.push_back(display(k));
    r.H.H_expected = wexact_div(G, wmul(wpw(Q, s) - 1, wpw(Q, i64{s} * (alpha - 1))));

    const std::uint64_t space = [&] {
        long double x = 1;
        for (unsigned i = 0; i < s * alpha; ++i) x *= static_cast<long double>(qd);
        return x > static_cast<long double>(budget) ? budget + 1 : static_cast<std::uint64_t>(x);
    }();
    if (space <= budget) {
        auto ext = ff::make_extension(q, d, budget);
        const auto P = first_irreducible(ext.base(), s);
        const auto Gt = galois::build_group(ext, poly::pow(P, alpha), budget);
        const auto H = galois::compute_H(Gt);
        const auto N = galois::filtration_N(Gt, P, alpha, false);
        std::vector<std::uint64_t> e{H.order()};
        for (auto& Nk : N) e.push_back(H.intersect(Nk).order());
        r.H.enumerated = std::move(e);
        r.H.H_enumerated = H.order();
    }
    return r;
}

struct HilbertCheck {
    wide A = 0;
    wide sum_by_level = 0;    // sum over lower indices with H_i attached to N_k ranges
    wide sum_by_lower_i = 0;  // sum with the display's i read as the lower index
    std::optional<wide> sum_enumerated;
    bool agrees_by_level() const { return sum_by_level == A; }
    bool agrees_by_lower_i() const { return sum_by_lower_i == A; }
};

/// Σ_{i>=0} (|H_i| - 1) against A; reported, never asserted.
inline HilbertCheck hilbert_sum_check(std::uint64_t q, unsigned d, unsigned s, unsigned alpha,
                                      std::uint64_t budget = kDefaultBudget) {
    const auto f = lower_filtration(q, d, s, alpha, budget);
    HilbertCheck h;
    h.A = different_main(q, d, s, alpha).A();
    auto range_len = [](const FiltrationStep& st) { return static_cast<wide>(st.to - st.from + 1); };
    h.sum_by_level = f.H.display[0] - 1;
    for (unsigned k = 1; k < alpha; ++k)
        h.sum_by_level = wadd(h.sum_by_level, wmul(range_len(f.lower[k]), f.H.display[k] - 1));
    for (unsigned i = 0; i < alpha; ++i) h.sum_by_lower_i = wadd(h.sum_by_lower_i, f.H.display[i] - 1);
    if (f.H.enumerated) {
        const auto& e = *f.H.enumerated;
        wide sum = static_cast<wide>(e[0]) - 1;
        for (unsigned k = 1; k < alpha; ++k)
            sum = wadd(sum, wmul(range_len(f.lower[k]), static_cast<wide>(e[k]) - 1));
        h.sum_enumerated = sum;
    }
    return h;
}

} // namespace cyclo::ramify
