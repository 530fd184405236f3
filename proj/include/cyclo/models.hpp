#pragma once

// Tame (Kummer) and wild (Artin-Schreier) models: the exponents b_i of the
// Kummer generator L, Boseck indices, the Z-values, and normal-form
// verification of the tower U_j^Q - U_j = -U_{j-1}/(T-ρ), u_j = U_j λ.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclo/carlitz.hpp"
#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"
#include "cyclo/poly.hpp"

namespace cyclo::models {

using ff::Element;
using ff::Field;
using poly::Polynomial;

// ---- tame part ----

struct KummerModel {
    std::uint64_t q = 0;
    unsigned s = 0;
    std::uint64_t modulus = 0;                 // q^s - 1
    std::vector<std::uint64_t> exponents;      // b_i mod q^s-1
    std::vector<std::uint64_t> raw_exponents;  // q^{i-1}
    int sign = 1;                              // (-1)^s
};

struct KummerChecks {
    bool b1_is_one = false;          // b_1 = 1 (mod q^s-1)
    bool recurrence = false;         // b_{i-1} ≡ q^{-1} b_i cyclically, wrap included
    bool recurrence_mu_prime = false; // b_i ≡ q b_{i-1} cyclically (μ' = q)
    bool coprime = false;            // gcd(b_i, q^s-1) = 1
    bool sum_mod = false;            // Σ b_i ≡ 1+q+...+q^{s-1}
    bool sum_exact = false;          // Σ q^{i-1} = 1+q+...+q^{s-1} as integers
    bool all() const { return b1_is_one && recurrence && recurrence_mu_prime && coprime && sum_mod && sum_exact; }
};

inline KummerModel kummer_exponents(std::uint64_t q, unsigned s) {
    if (s < 1) fail(ErrorKind::ParseError, "s must be positive");
    KummerModel m;
    m.q = q;
    m.s = s;
    m.modulus = static_cast<std::uint64_t>(cyclo::detail::checked_pow(static_cast<std::int64_t>(q), s)) - 1;
    std::uint64_t b = 1;
    for (unsigned i = 1; i <= s; ++i) {
        m.raw_exponents.push_back(b);
        m.exponents.push_back(b % m.modulus);
        b *= q;
    }
    m.sign = s % 2 ? -1 : 1;
    return m;
}

/// Inverse of a mod n (n >= 1); nullopt if not invertible.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(n), nr = static_cast<std::int64_t>(a % n);
    while (nr) {
        const std::int64_t qq = r / nr;
        std::tie(t, nt) = std::pair(nt, t - qq * nt);
        std::tie(r, nr) = std::pair(nr, r - qq * nr);
    }
    if (r != 1) return std::nullopt;
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

inline KummerChecks check_kummer(const KummerModel& m) {
    KummerChecks c;
    const std::uint64_t n = m.modulus, s = m.s;
    auto mod = [n](std::uint64_t x) { return x % n; };
    c.b1_is_one = m.exponents[0] == mod(1);
    const auto mu = inverse_mod(m.q, n);
    c.recurrence = mu.has_value();
    c.recurrence_mu_prime = true;
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t prev = (i + s - 1) % s; // b_{i-1}, with b_0 := b_s
        if (mu && mod(m.exponents[prev]) != mod(*mu * m.exponents[i])) c.recurrence = false;
        if (mod(m.exponents[i]) != mod(m.q * m.exponents[prev])) c.recurrence_mu_prime = false;
    }
    c.coprime = true;
    for (auto b : m.exponents)
        if (std::gcd(b, n) != 1) c.coprime = false;
    std::uint64_t geo = 0, pw = 1, sum = 0, raw = 0;
    for (unsigned i = 0; i < s; ++i) {
        geo += pw;
        pw *= m.q;
        sum += m.exponents[i];
        raw += m.raw_exponents[i];
    }
    c.sum_mod = mod(sum) == mod(geo);
    c.sum_exact = raw == geo;
    return c;
}

/// e_i = (q^s-1) / gcd(q^s-1, b_i).
inline std::vector<std::uint64_t> boseck_indices(const KummerModel& m) {
    std::vector<std::uint64_t> e;
    for (auto b : m.exponents) e.push_back(m.modulus / std::gcd(m.modulus, b));
    return e;
}

struct ZReport {
    std::vector<Element> roots;
    std::vector<Element> Z;
    std::vector<std::optional<std::uint64_t>> orders; // nullopt when Z = 0
    std::uint64_t target_order = 0;                   // q^s - 1
    bool frobenius_relation = false;                  // Z_i = Z_1^{q^{i-1}}
    std::vector<bool> primitive;
    bool all_primitive() const {
        for (bool b : primitive)
            if (!b) return false;
        return true;
    }
};

/// Z_{i0} = 1 - prod_{i != i0} (ρ_{i0} - ρ_i) over the Frobenius-ordered roots.
inline ZReport z_values(const Polynomial& P, const ff::Extension& ext) {
    const auto sp = poly::split_over_extension(P, ext);
    ZReport r;
    r.roots = sp.roots;
    const Field& F = ext.field();
    const std::size_t s = sp.roots.size();
    for (std::size_t i0 = 0; i0 < s; ++i0) {
        Element prod = F.one();
        for (std::size_t i = 0; i < s; ++i)
            if (i != i0) prod *= sp.roots[i0] - sp.roots[i];
        r.Z.push_back(F.one() - prod);
    }
    r.target_order = cyclo::detail::ipow(ext.q(), static_cast<unsigned>(s)) - 1;
    r.frobenius_relation = true;
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (r.Z[i] != r.Z[0].pow(qi)) r.frobenius_relation = false;
        qi *= ext.q();
        if (r.Z[i].is_zero()) {
            r.orders.push_back(std::nullopt);
            r.primitive.push_back(false);
        } else {
            const auto o = ff::mult_order(r.Z[i]);
            r.orders.push_back(o);
            r.primitive.push_back(o == r.target_order);
        }
    }
    return r;
}

/// "L^{q^s-1} = (-1)^s prod_i (T - ζ_1^{q^{i-1}})^{q^i}" with ζ_1 the
/// primitive (q^s-1)st root ζ^{(q^d-1)/(q^s-1)} in F_{q^d} (d = s by default).
inline std::string tame_model(std::uint64_t q, unsigned s, std::optional<unsigned> d = std::nullopt) {
    const unsigned dd = d.value_or(s);
    if (s < 1 || dd % s != 0) fail(ErrorKind::DegreeNotDividing, "s must divide d");
    const auto ext = ff::make_extension(q, dd);
    const Field& F = ext.field();
    const std::uint64_t qs1 = cyclo::detail::ipow(q, s) - 1;
    const Element zeta1 = ff::nth_root_of_unity(F, qs1);
    std::string out = "L^" + std::to_string(qs1) + " = " + (s % 2 ? "-" : "");
    std::uint64_t qi = 1;
    for (unsigned i = 1; i <= s; ++i) {
        const Element root = zeta1.pow(qi);
        qi *= q;
        out += "(T - " + ff::to_string(root) + ")^" + std::to_string(qi);
    }
    return out;
}

// ---- wild tower ----

/// num / (T-ρ)^k, with (T-ρ) not dividing num when k > 0.
struct LaurentCoef {
    Polynomial num;
    unsigned k = 0;
};

/// Polynomials in λ, U_2..U_α over F_Q[T, 1/(T-ρ)] modulo
/// λ^{Q-1} = -(T-ρ) and U_j^Q = U_j - U_{j-1}/(T-ρ) (U_1 = 1).
class RelationRing {
public:
    using Mono = std::vector<std::uint32_t>; // (e_λ, e_{U_2}, ..., e_{U_α})

    class Elem {
    public:
        Elem() = default;
        explicit Elem(const RelationRing* R) : R_(R) {}

        Elem operator+(const Elem& o) const {
            Elem r = *this;
            for (auto& [m, c] : o.t_) r.add_term(m, c);
            return r;
        }
        Elem operator-() const {
            Elem r(R_);
            for (auto& [m, c] : t_) r.t_[m] = {-c.num, c.k};
            return r;
        }
        Elem operator-(const Elem& o) const { return *this + (-o); }
        Elem operator*(const Elem& o) const {
            Elem r(R_);
            for (auto& [m1, c1] : t_)
                for (auto& [m2, c2] : o.t_) {
                    Mono m(m1.size());
                    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
                    r.add_reduced(m, R_->mul(c1, c2));
                }
            return r;
        }

        bool is_zero() const { return t_.empty(); }
        const std::map<Mono, LaurentCoef>& terms() const { return t_; }

        void add_term(const Mono& m, const LaurentCoef& c) {
            auto it = t_.find(m);
            LaurentCoef v = it == t_.end() ? c : R_->add(it->second, c);
            if (v.num.is_zero()) {
                if (it != t_.end()) t_.erase(it);
            } else {
                t_[m] = v;
            }
        }

        /// Adds c·m after rewriting m to normal form.
        void add_reduced(const Mono& m, const LaurentCoef& c);

    private:
        friend class RelationRing;
        const RelationRing* R_ = nullptr;
        std::map<Mono, LaurentCoef> t_;
    };

    RelationRing(Field F, Element rho, unsigned alpha) : F_(std::move(F)), rho_(std::move(rho)), alpha_(alpha) {
        if (alpha < 1) fail(ErrorKind::ParseError, "α must be positive");
        Q_ = F_.order();
        wp_ = Polynomial::linear(rho_);
    }

    const Field& field() const { return F_; }
    std::uint64_t Q() const { return Q_; }
    unsigned alpha() const { return alpha_; }
    const Polynomial& wp() const { return wp_; }

    Elem constant(const Polynomial& c, unsigned k = 0) const {
        Elem e(this);
        if (!c.is_zero()) e.add_term(Mono(alpha_, 0), normalize({c, k}));
        return e;
    }
    Elem lambda() const { return var(0); }
    /// U_j for 2 <= j <= α; U_1 = 1.
    Elem U(unsigned j) const {
        if (j == 1) return constant(Polynomial::constant(F_.one()));
        if (j < 2 || j > alpha_) fail(ErrorKind::DimensionMismatch, "no such U variable");
        return var(j - 1);
    }

    /// x -> x^Q, through the Frobenius: coefficients c(T) -> c(T^Q), with
    /// (T-ρ)^Q = T^Q - ρ, and monomials raised to the Q-th power.
    Elem pow_q(const Elem& x) const {
        Elem r(this);
        for (auto& [m, c] : x.t_) {
            Mono mq(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) mq[i] = static_cast<std::uint32_t>(m[i] * Q_);
            r.add_reduced(mq, normalize({carlitz::twist(c.num, Q_), static_cast<unsigned>(c.k * Q_)}));
        }
        return r;
    }

    LaurentCoef normalize(LaurentCoef c) const {
        if (c.num.is_zero()) return {c.num, 0};
        while (c.k > 0) {
            auto [qq, rr] = poly::divmod(c.num, wp_);
            if (!rr.is_zero()) break;
            c.num = std::move(qq);
            --c.k;
        }
        return c;
    }
    LaurentCoef add(const LaurentCoef& a, const LaurentCoef& b) const {
        const unsigned K = std::max(a.k, b.k);
        return normalize({a.num * poly::pow(wp_, K - a.k) + b.num * poly::pow(wp_, K - b.k), K});
    }
    LaurentCoef mul(const LaurentCoef& a, const LaurentCoef& b) const { return normalize({a.num * b.num, a.k + b.k}); }

    std::size_t reduction_limit() const { return std::size_t{1} << 22; }

private:
    Elem var(std::size_t i) const {
        Elem e(this);
        Mono m(alpha_, 0);
        m[i] = 1;
        e.add_reduced(m, {Polynomial::constant(F_.one()), 0});
        return e;
    }

    Field F_;
    Element rho_;
    unsigned alpha_;
    std::uint64_t Q_ = 0;
    Polynomial wp_;
};

inline void RelationRing::Elem::add_reduced(const Mono& m0, const LaurentCoef& c0) {
    const RelationRing& R = *R_;
    const std::uint32_t Q = static_cast<std::uint32_t>(R.Q());
    std::vector<std::pair<Mono, LaurentCoef>> work{{m0, c0}};
    std::size_t steps = 0;
    while (!work.empty()) {
        if (++steps > R.reduction_limit()) fail(ErrorKind::ReductionFailure, "normal form did not terminate");
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (c.num.is_zero()) continue;
        // λ^{Q-1} -> -(T-ρ)
        if (m[0] >= Q - 1) {
            const std::uint32_t t = m[0] / (Q - 1);
            m[0] %= Q - 1;
            c = R.mul(c, {poly::pow(-R.wp(), t), 0});
        }
        // U_j^Q -> U_j - U_{j-1}/(T-ρ), highest j first
        bool rewritten = false;
        for (std::size_t v = m.size(); v-- > 1;) {
            if (m[v] < Q) continue;
            Mono keep = m;
            keep[v] -= Q - 1;
            Mono down = m;
            down[v] -= Q;
            if (v > 1) ++down[v - 1];
            work.push_back({keep, c});
            work.push_back({down, R.mul(c, {-Polynomial::constant(R.field().one()), 1})});
            rewritten = true;
            break;
        }
        if (!rewritten) add_term(m, c);
    }
}

struct TowerCertificate {
    std::uint64_t Q = 0;
    unsigned alpha = 0;
    Element rho;
    bool level2 = false;        // u_2^Q + (T-ρ)u_2 - λ = 0
    bool level3 = false;        // u_3^Q + (T-ρ)u_3 - u_2 = 0 (α = 3)
    bool carlitz_level2 = false; // C(T-ρ)(u_2) = λ via carlitz_apply
    bool carlitz_level3 = false; // C(T-ρ)(u_3) = u_2
    bool negative_control = false; // C(T-ρ)(λ) = 0 ≠ λ: λ is not a (T-ρ)^2 witness
    bool ok() const {
        return level2 && carlitz_level2 && negative_control && (alpha < 3 || (level3 && carlitz_level3));
    }
};

/// Reduces u_j := U_j λ in the relation ring and checks the torsion tower.
inline TowerCertificate verify_as_tower(const Field& FQ, const Element& rho, unsigned alpha) {
    if (alpha != 2 && alpha != 3) fail(ErrorKind::ParseError, "tower verification supports α ∈ {2, 3}");
    RelationRing R(FQ, rho, alpha);
    TowerCertificate cert{FQ.order(), alpha, rho, false, false, false, false, false};
    using E = RelationRing::Elem;
    const E lam = R.lambda();
    const E wp = R.constant(R.wp());
    const E u2 = R.U(2) * lam;
    cert.level2 = (R.pow_q(u2) + wp * u2 - lam).is_zero();

    const auto C = carlitz::carlitz_poly(R.wp());
    auto lift = [&R](const Polynomial& c) { return R.constant(c); };
    auto powq = [&R](const E& x) { return R.pow_q(x); };
    cert.carlitz_level2 = (carlitz::carlitz_apply(C, u2, lift, powq) - lam).is_zero();
    const E at_lambda = carlitz::carlitz_apply(C, lam, lift, powq);
    cert.negative_control = at_lambda.is_zero() && !(at_lambda - lam).is_zero();
    if (alpha == 3) {
        const E u3 = R.U(3) * lam;
        cert.level3 = (R.pow_q(u3) + wp * u3 - u2).is_zero();
        cert.carlitz_level3 = (carlitz::carlitz_apply(C, u3, lift, powq) - u2).is_zero();
    }
    return cert;
}

// ---- partial-fraction obligation ----

struct CharacterSum {
    std::vector<Element> roots;        // ρ_1..ρ_s (Frobenius orbit)
    std::vector<Element> coefficients; // b_i on 1/(T-ρ_i)
    std::vector<Element> sigma_difference; // coefficient on 1/(T-ρ_j) of σ(R) - R
    Polynomial difference_numerator;   // σ(R) - R over the common denominator P
    bool obligation_holds = false;     // σ(R) - R ∈ ℘(F_{q^d}(T))
    std::string rhs;
};

/// R = Σ b_i / (T - ρ_i). σ acts on coefficients, sending 1/(T-ρ_i) to
/// 1/(T-ρ_{i+1}). A sum of simple poles lies in the image of x -> x^p - x
/// only if it vanishes (poles of x^p - x have order divisible by p), so the
/// obligation reduces to σ(R) - R = 0.
inline CharacterSum as_character_sum(const Polynomial& P, const ff::Extension& ext,
                                     std::optional<std::vector<Element>> b = std::nullopt) {
    const auto sp = poly::split_over_extension(P, ext);
    const Field& F = ext.field();
    const std::size_t s = sp.roots.size();
    CharacterSum r;
    r.roots = sp.roots;
    r.coefficients = b.value_or(std::vector<Element>(s, F.one()));
    if (r.coefficients.size() != s) fail(ErrorKind::DimensionMismatch, "need one coefficient per root");
    for (std::size_t j = 0; j < s; ++j) {
        const std::size_t prev = (j + s - 1) % s;
        r.sigma_difference.push_back(ext.sigma(r.coefficients[prev]) - r.coefficients[j]);
    }
    // numerator of Σ_j c_j / (T - ρ_j) over prod_j (T - ρ_j)
    Polynomial num(F);
    for (std::size_t j = 0; j < s; ++j) {
        Polynomial term = Polynomial::constant(r.sigma_difference[j]);
        for (std::size_t i = 0; i < s; ++i)
            if (i != j) term *= Polynomial::linear(sp.roots[i]);
        num += term;
    }
    r.difference_numerator = num;
    r.obligation_holds = num.is_zero();
    for (std::size_t i = 0; i < s; ++i) {
        if (i) r.rhs += " + ";
        r.rhs += ff::to_string(r.coefficients[i]) + "/(T - " + ff::to_string(sp.roots[i]) + ")";
    }
    return r;
}

} // namespace cyclo::models
