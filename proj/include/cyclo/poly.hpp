#pragma once

// Dense univariate polynomials over a finite field, residue rings A/M and
// the root-finding/splitting helpers used throughout.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"

namespace cyclo::poly {

using ff::code_t;
using ff::Element;
using ff::Field;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    Polynomial(Field f, std::vector<code_t> codes) : field_(std::move(f)), c_(std::move(codes)) { strip(); }

    static Polynomial constant(const Element& c) { return Polynomial(c.field(), {c.code()}); }
    static Polynomial monomial(const Element& c, std::size_t deg) {
        std::vector<code_t> v(deg + 1, 0);
        v[deg] = c.code();
        return Polynomial(c.field(), std::move(v));
    }
    /// The indeterminate T.
    static Polynomial T(const Field& f) { return Polynomial(f, {0, 1}); }
    /// T - a.
    static Polynomial linear(const Element& a) { return Polynomial(a.field(), {(-a).code(), 1}); }
    static Polynomial from_elements(const Field& f, const std::vector<Element>& cs) {
        std::vector<code_t> v;
        for (auto& e : cs) {
            if (e.field() != f) fail(ErrorKind::FieldMismatch, "coefficient from another field");
            v.push_back(e.code());
        }
        return Polynomial(f, std::move(v));
    }

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<code_t>& codes() const { return c_; }
    code_t raw(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Element coeff(std::size_t i) const { return {field_, raw(i)}; }
    Element leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        const auto& fd = field_.data();
        std::vector<code_t> v(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = fd.add(raw(i), o.raw(i));
        return Polynomial(field_, std::move(v));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator-() const {
        const auto& fd = field_.data();
        std::vector<code_t> v(c_);
        for (auto& x : v) x = fd.neg(x);
        return Polynomial(field_, std::move(v));
    }
    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(field_);
        const auto& fd = field_.data();
        std::vector<code_t> v(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = fd.add(v[i + j], fd.mul(c_[i], o.c_[j]));
        }
        return Polynomial(field_, std::move(v));
    }
    Polynomial operator*(const Element& s) const {
        if (s.field() != field_) fail(ErrorKind::FieldMismatch, "scalar from another field");
        const auto& fd = field_.data();
        std::vector<code_t> v(c_);
        for (auto& x : v) x = fd.mul(x, s.code());
        return Polynomial(field_, std::move(v));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
    }

    Element operator()(const Element& x) const {
        if (x.field() != field_) fail(ErrorKind::FieldMismatch, "evaluation point from another field");
        const auto& fd = field_.data();
        code_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = fd.add(fd.mul(acc, x.code()), c_[i]);
        return {field_, acc};
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    /// Coefficient-wise x -> x^e (a ring endomorphism when e is a power of p).
    Polynomial map_coeffs_pow(std::uint64_t e) const {
        const auto& fd = field_.data();
        std::vector<code_t> v(c_);
        for (auto& x : v) x = fd.pow(x, e);
        return Polynomial(field_, std::move(v));
    }

private:
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const Polynomial& o) const {
        if (field_ != o.field_) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    }

    Field field_;
    std::vector<code_t> c_;
};

inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    if (f.field() != g.field()) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    const auto& fd = f.field().data();
    std::vector<code_t> r = f.codes();
    const auto& gc = g.codes();
    const std::size_t dg = gc.size() - 1;
    const code_t linv = fd.inv(gc.back());
    std::vector<code_t> q(r.size() >= gc.size() ? r.size() - dg : 0, 0);
    for (std::size_t k = r.size(); k-- > dg;) {
        if (!r[k]) continue;
        const code_t t = fd.mul(r[k], linv);
        q[k - dg] = t;
        for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = fd.sub(r[k - dg + j], fd.mul(t, gc[j]));
    }
    r.resize(std::min(r.size(), dg));
    return {Polynomial(f.field(), std::move(q)), Polynomial(f.field(), std::move(r))};
}

inline Polynomial operator%(const Polynomial& f, const Polynomial& g) { return divmod(f, g).second; }
inline Polynomial operator/(const Polynomial& f, const Polynomial& g) { return divmod(f, g).first; }

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
inline std::tuple<Polynomial, Polynomial, Polynomial> xgcd(Polynomial a, Polynomial b) {
    const Field f = a.field();
    Polynomial s0 = Polynomial::constant(f.one()), s1(f), t0(f), t1 = Polynomial::constant(f.one());
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = s0 - q * s1;
        auto t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    const Element li = a.leading().inverse();
    return {a * li, s0 * li, t0 * li};
}

inline Polynomial pow(Polynomial b, std::uint64_t e) {
    Polynomial r = Polynomial::constant(b.field().one());
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

inline Polynomial powmod(Polynomial b, std::uint64_t e, const Polynomial& m) {
    Polynomial r = Polynomial::constant(b.field().one()) % m;
    b = b % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

/// Monic polynomials of the given degree over f, in enumeration order of
/// (c_0, ..., c_{deg-1}) with c_0 most significant.
inline Polynomial monic_by_rank(const Field& f, std::size_t deg, std::uint64_t rank) {
    const auto& fd = f.data();
    std::vector<code_t> v(deg + 1, 0);
    for (std::size_t i = deg; i-- > 0;) {
        v[i] = fd.code_from_rank(rank % fd.n);
        rank /= fd.n;
    }
    v[deg] = 1;
    return Polynomial(f, std::move(v));
}

/// Smallest-degree monic nonconstant divisor, first in enumeration order.
inline std::optional<Polynomial> smallest_factor(const Polynomial& f, std::uint64_t budget = kDefaultBudget) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::uint64_t Q = f.field().order();
    std::uint64_t spent = 0;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        const std::uint64_t count = cyclo::detail::ipow(Q, static_cast<unsigned>(k));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (++spent > budget) fail(ErrorKind::BudgetExceeded, "trial division budget exhausted");
            auto g = monic_by_rank(f.field(), k, idx);
            if ((f % g).is_zero()) return g;
        }
    }
    return std::nullopt;
}

inline bool is_irreducible(const Polynomial& f, std::uint64_t budget = kDefaultBudget) {
    if (f.degree() < 1) fail(ErrorKind::ConstantPolynomial, "irreducibility of a constant");
    return !smallest_factor(f, budget).has_value();
}

struct Factor {
    Polynomial poly;
    unsigned multiplicity;
};

/// Monic irreducible factorization by trial division; factors ordered by
/// degree then enumeration. The leading coefficient is dropped.
inline std::vector<Factor> factor(Polynomial f, std::uint64_t budget = kDefaultBudget) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factorization of zero");
    f = f.monic();
    std::vector<Factor> out;
    while (f.degree() >= 1) {
        auto g = smallest_factor(f, budget).value_or(f);
        unsigned m = 0;
        while (true) {
            auto [q, r] = divmod(f, g);
            if (!r.is_zero()) break;
            f = std::move(q);
            ++m;
        }
        out.push_back({g, m});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return out;
}

/// Image of f under a field embedding applied to each coefficient.
inline Polynomial embed(const Polynomial& f, const ff::Embedding& e) {
    std::vector<code_t> v;
    for (std::size_t i = 0; i < f.codes().size(); ++i) v.push_back(e(f.coeff(i)).code());
    return Polynomial(e.target(), std::move(v));
}

/// Inverse of embed; nullopt if a coefficient is outside the image.
inline std::optional<Polynomial> restrict_to(const Polynomial& f, const ff::Embedding& e) {
    std::vector<code_t> v;
    for (std::size_t i = 0; i < f.codes().size(); ++i) {
        auto pre = e.preimage(f.coeff(i));
        if (!pre) return std::nullopt;
        v.push_back(pre->code());
    }
    return Polynomial(e.source(), std::move(v));
}

struct SplittingData {
    Polynomial base_poly;
    unsigned s = 0;
    std::vector<Element> roots; // rho_{i+1} = rho_i^q
};

/// Roots of P (over F_q) in F_{q^d}, as the Frobenius orbit of the
/// enumeration-first root.
inline SplittingData split_over_extension(const Polynomial& P, const ff::Extension& ext) {
    if (P.field() != ext.base()) fail(ErrorKind::FieldMismatch, "P must have coefficients in the base field");
    if (P.degree() < 1) fail(ErrorKind::ConstantPolynomial, "cannot split a constant");
    const unsigned s = static_cast<unsigned>(P.degree());
    if (ext.d() % s != 0)
        fail(ErrorKind::DegreeNotDividing, "deg P = " + std::to_string(s) + " does not divide d = " + std::to_string(ext.d()));
    if (!is_irreducible(P)) fail(ErrorKind::NotIrreducible, "P is reducible over F_q");
    const Polynomial Pd = embed(P, ext.embedding());
    std::optional<Element> seed;
    for (auto& x : ext.field().elements())
        if (Pd(x).is_zero()) {
            seed = x;
            break;
        }
    if (!seed) fail(ErrorKind::InternalInconsistency, "irreducible P has no root in F_{q^d}");
    SplittingData out{P, s, {}};
    Element r = *seed;
    for (unsigned i = 0; i < s; ++i) {
        out.roots.push_back(r);
        r = ext.sigma(r);
    }
    return out;
}

/// Residue class modulo a fixed polynomial.
class Residue {
public:
    Residue() = default;
    Residue(std::shared_ptr<const Polynomial> m, const Polynomial& rep) : m_(std::move(m)), rep_(rep % *m_) {}
    Residue(const Polynomial& m, const Polynomial& rep) : Residue(std::make_shared<const Polynomial>(m), rep) {}

    const Polynomial& modulus() const { return *m_; }
    const std::shared_ptr<const Polynomial>& modulus_ptr() const { return m_; }
    const Polynomial& rep() const { return rep_; }

    Residue operator+(const Residue& o) const { return {m_, same(o).rep_ + o.rep_}; }
    Residue operator-(const Residue& o) const { return {m_, same(o).rep_ - o.rep_}; }
    Residue operator*(const Residue& o) const { return {m_, same(o).rep_ * o.rep_}; }
    bool operator==(const Residue& o) const { return same(o).rep_ == o.rep_; }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    bool is_one() const { return rep_ == Polynomial::constant(rep_.field().one()) % *m_; }

    Residue pow(std::uint64_t e) const { return {m_, powmod(rep_, e, *m_)}; }

    Residue inverse() const {
        auto [g, s, t] = xgcd(rep_, *m_);
        if (g.degree() != 0) fail(ErrorKind::NotAUnit, "residue is not a unit");
        return {m_, s};
    }

private:
    const Residue& same(const Residue& o) const {
        if (m_ != o.m_ && *m_ != *o.m_) fail(ErrorKind::ModulusMismatch, "residues modulo different polynomials");
        return *this;
    }

    std::shared_ptr<const Polynomial> m_;
    Polynomial rep_;
};

inline bool is_unit(const Residue& D) {
    if (D.modulus().degree() == 0) return true;
    return gcd(D.rep(), D.modulus()).degree() == 0;
}

/// #(A/M)^* from the factorization of M.
inline std::uint64_t unit_count(const Polynomial& M) {
    const std::uint64_t Q = M.field().order();
    std::uint64_t n = 1;
    for (auto& [P, e] : factor(M)) {
        const auto deg = static_cast<unsigned>(P.degree());
        const std::uint64_t N = cyclo::detail::ipow(Q, deg);
        n = static_cast<std::uint64_t>(cyclo::detail::checked_mul(static_cast<std::int64_t>(n), static_cast<std::int64_t>(N - 1)));
        n = static_cast<std::uint64_t>(cyclo::detail::checked_mul(static_cast<std::int64_t>(n),
                                                           static_cast<std::int64_t>(cyclo::detail::ipow(N, e - 1))));
    }
    return n;
}

/// Least k >= 1 with D^k = 1; searched over divisors of the unit count.
inline std::uint64_t unit_order(const Residue& D) {
    if (!is_unit(D)) fail(ErrorKind::NotAUnit, "order of a non-unit");
    const std::uint64_t N = unit_count(D.modulus());
    std::uint64_t k = N;
    for (auto pr : cyclo::detail::prime_factors(N))
        while (k % pr == 0 && D.pow(k / pr).is_one()) k /= pr;
    return k;
}

/// Digits (a_0, ..., a_{alpha-1}) with D = sum a_l wp^l, where the modulus is
/// wp^alpha and wp is monic linear.
inline std::vector<Element> padic_digits(const Residue& D, const Polynomial& wp) {
    if (wp.degree() != 1 || !wp.is_monic()) fail(ErrorKind::NonLinearBase, "base must be monic linear");
    const Polynomial& M = D.modulus();
    const int alpha = M.degree();
    if (alpha < 1 || pow(wp, static_cast<std::uint64_t>(alpha)) != M)
        fail(ErrorKind::ModulusNotAPower, "modulus is not a power of the base");
    std::vector<Element> out;
    Polynomial cur = D.rep();
    for (int l = 0; l < alpha; ++l) {
        auto [q, r] = divmod(cur, wp);
        out.push_back(r.coeff(0));
        cur = std::move(q);
    }
    return out;
}

inline Polynomial reassemble(const std::vector<Element>& digits, const Polynomial& wp) {
    Polynomial acc(wp.field());
    for (std::size_t l = digits.size(); l-- > 0;) acc = acc * wp + Polynomial::constant(digits[l]);
    return acc;
}

/// "T^2 + g^3*T + 1"; "0" for the zero polynomial.
inline std::string to_string(const Polynomial& f, const std::string& var = "T") {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Element c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0)
            out += ff::to_string(c);
        else if (c.is_one())
            out += mono;
        else
            out += ff::to_string(c) + "*" + mono;
    }
    return out;
}

// ---- text formats ----

namespace io {

inline std::string trim(std::string s) {
    auto ns = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), ns));
    s.erase(std::find_if(s.rbegin(), s.rend(), ns).base(), s.end());
    return s;
}

inline std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "expected an integer, got '" + s + "'");
    }
}

/// Splits on commas outside brackets.
inline std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

} // namespace io

/// "p", "p^r" or "p^r/c0,...,cr".
inline Field parse_field(const std::string& text, std::uint64_t budget = kDefaultBudget) {
    std::string s = io::trim(text);
    std::optional<std::vector<std::uint64_t>> modulus;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::vector<std::uint64_t> m;
        for (auto& tok : io::split_top(s.substr(slash + 1))) {
            const auto v = io::parse_int(tok);
            if (v < 0) fail(ErrorKind::ParseError, "negative modulus coefficient");
            m.push_back(static_cast<std::uint64_t>(v));
        }
        modulus = std::move(m);
        s = s.substr(0, slash);
    }
    std::int64_t p = 0, r = 1;
    if (auto caret = s.find('^'); caret != std::string::npos) {
        p = io::parse_int(s.substr(0, caret));
        r = io::parse_int(s.substr(caret + 1));
    } else {
        p = io::parse_int(s);
    }
    if (p < 2 || r < 1) fail(ErrorKind::ParseError, "bad field notation '" + text + "'");
    if (modulus) {
        for (auto& c : *modulus) c %= static_cast<std::uint64_t>(p);
    }
    return ff::build_field(static_cast<std::uint64_t>(p), static_cast<unsigned>(r), modulus, budget);
}

/// Integer, "g", "g^k" or "[c0,c1,...]".
inline Element parse_element(const std::string& text, const Field& f) {
    const std::string s = io::trim(text);
    if (s.empty()) fail(ErrorKind::ParseError, "empty coefficient");
    if (s.front() == '[') {
        if (s.back() != ']') fail(ErrorKind::ParseError, "unterminated bracket in '" + s + "'");
        std::vector<std::int64_t> cs;
        for (auto& tok : io::split_top(s.substr(1, s.size() - 2))) cs.push_back(io::parse_int(tok));
        return f.from_coeffs(cs);
    }
    if (s.front() == 'g') {
        if (s == "g") return f.generator();
        if (s.size() < 3 || s[1] != '^') fail(ErrorKind::ParseError, "bad generator power '" + s + "'");
        const auto k = io::parse_int(s.substr(2));
        if (k < 0) fail(ErrorKind::ParseError, "negative exponent");
        return f.generator().pow(static_cast<std::uint64_t>(k));
    }
    return f.from_int(io::parse_int(s));
}

/// Comma-separated coefficients, low to high: "1,1,1" is T^2 + T + 1.
inline Polynomial parse_poly(const std::string& text, const Field& f) {
    std::vector<Element> cs;
    for (auto& tok : io::split_top(text)) cs.push_back(parse_element(tok, f));
    return Polynomial::from_elements(f, cs);
}

} // namespace cyclo::poly
