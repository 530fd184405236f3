#pragma once

// Finite fields F_{p^r} as F_p[x]/(modulus) with log/antilog tables.
//
// Elements are stored as a code: the coefficient vector (c_0, ..., c_{r-1})
// read as the base-p integer sum c_i p^i. The "enumeration order" used for
// every deterministic choice (modulus, primitive root, first root) is the
// lexicographic order on (c_0, c_1, ..., c_{r-1}) with c_0 most significant.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo::ff {

using code_t = std::uint32_t;

namespace detail {

using raw_poly = std::vector<std::uint64_t>;

inline void raw_strip(raw_poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m over F_p; m monic.
inline raw_poly raw_mod(raw_poly a, const raw_poly& m, std::uint64_t p) {
    raw_strip(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        raw_strip(a);
    }
    return a;
}

inline raw_poly raw_mulmod(const raw_poly& a, const raw_poly& b, const raw_poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    raw_poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return raw_mod(std::move(c), m, p);
}

inline raw_poly raw_powmod(raw_poly a, std::uint64_t e, const raw_poly& m, std::uint64_t p) {
    raw_poly r{1};
    r = raw_mod(r, m, p);
    while (e) {
        if (e & 1) r = raw_mulmod(r, a, m, p);
        a = raw_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool raw_is_irreducible(const raw_poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        const std::uint64_t count = cyclo::detail::ipow(p, static_cast<unsigned>(k));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            raw_poly g(k + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[k] = 1;
            if (raw_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FieldData {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t n = 0; // p^r
    std::vector<std::uint64_t> modulus; // length r+1, monic, low-to-high
    std::vector<code_t> exp;            // exp[i] = g^i, size n-1
    std::vector<std::uint32_t> log;     // log[code], log[0] unused
    code_t generator = 1;

    std::vector<std::uint64_t> digits(code_t c) const {
        std::vector<std::uint64_t> d(r, 0);
        for (unsigned i = 0; i < r; ++i) {
            d[i] = c % p;
            c = static_cast<code_t>(c / p);
        }
        return d;
    }

    code_t from_digits(const std::vector<std::uint64_t>& d) const {
        std::uint64_t c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i] % p;
        return static_cast<code_t>(c);
    }

    code_t add(code_t a, code_t b) const {
        if (p == 2) return a ^ b;
        if (r == 1) return static_cast<code_t>((a + b) % p);
        code_t out = 0, scale = 1;
        while (a || b) {
            out += scale * static_cast<code_t>(((a % p) + (b % p)) % p);
            a = static_cast<code_t>(a / p);
            b = static_cast<code_t>(b / p);
            scale = static_cast<code_t>(scale * p);
        }
        return out;
    }

    code_t neg(code_t a) const {
        if (p == 2) return a;
        if (r == 1) return a == 0 ? 0 : static_cast<code_t>(p - a);
        code_t out = 0, scale = 1;
        while (a) {
            const code_t dgt = static_cast<code_t>(a % p);
            out += scale * (dgt == 0 ? 0 : static_cast<code_t>(p - dgt));
            a = static_cast<code_t>(a / p);
            scale = static_cast<code_t>(scale * p);
        }
        return out;
    }

    code_t sub(code_t a, code_t b) const { return add(a, neg(b)); }

    code_t mul(code_t a, code_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t{log[a]} + log[b];
        if (e >= n - 1) e -= n - 1;
        return exp[e];
    }

    code_t inv(code_t a) const {
        if (a == 0) fail(ErrorKind::ZeroElement, "inverse of zero");
        const std::uint32_t l = log[a];
        return exp[l == 0 ? 0 : (n - 1) - l];
    }

    code_t div(code_t a, code_t b) const { return mul(a, inv(b)); }

    code_t pow(code_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t l = (static_cast<unsigned __int128>(log[a]) * e) % (n - 1);
        return exp[l];
    }

    code_t scalar(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return static_cast<code_t>(m);
    }

    code_t code_from_rank(std::uint64_t rank) const {
        // rank digits, most significant first, are c_0, c_1, ..., c_{r-1}
        std::vector<std::uint64_t> d(r, 0);
        for (unsigned i = r; i-- > 0;) {
            d[i] = rank % p;
            rank /= p;
        }
        return from_digits(d);
    }

    std::uint64_t rank_of_code(code_t c) const {
        auto d = digits(c);
        std::uint64_t rank = 0;
        for (unsigned i = 0; i < r; ++i) rank = rank * p + d[i];
        return rank;
    }
};

inline std::shared_ptr<const FieldData> make_field_data(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus) {
    auto fd = std::make_shared<FieldData>();
    fd->p = p;
    fd->r = r;
    fd->n = cyclo::detail::ipow(p, r);
    fd->modulus = std::move(modulus);
    const std::uint64_t n = fd->n;

    auto raw_of = [&](code_t c) {
        raw_poly a = fd->digits(c);
        raw_strip(a);
        return a;
    };
    auto code_of = [&](const raw_poly& a) {
        std::vector<std::uint64_t> d(r, 0);
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i];
        return fd->from_digits(d);
    };

    // enumeration-first element of multiplicative order n-1
    const auto primes = cyclo::detail::prime_factors(n - 1);
    code_t gen = 1;
    bool found = (n == 2);
    for (std::uint64_t rank = 0; rank < n && !found; ++rank) {
        const code_t c = fd->code_from_rank(rank);
        if (c == 0) continue;
        const raw_poly a = raw_of(c);
        bool primitive = true;
        for (auto q : primes) {
            if (raw_powmod(a, (n - 1) / q, fd->modulus, p) == raw_poly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = c;
            found = true;
        }
    }
    if (!found) fail(ErrorKind::InternalInconsistency, "no primitive element found");
    fd->generator = gen;

    fd->exp.assign(n - 1, 0);
    fd->log.assign(n, 0);
    raw_poly cur{1};
    const raw_poly g = raw_of(gen);
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        const code_t c = code_of(cur);
        fd->exp[i] = c;
        fd->log[c] = static_cast<std::uint32_t>(i);
        cur = raw_mulmod(cur, g, fd->modulus, p);
    }
    return fd;
}

} // namespace detail

class Element;

/// Immutable handle to a finite field F_{p^r}. Copies share the tables.
class Field {
public:
    Field() = default;
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    std::uint64_t characteristic() const { return d_->p; }
    unsigned degree() const { return d_->r; }
    std::uint64_t order() const { return d_->n; }
    const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
    const detail::FieldData& data() const { return *d_; }
    bool valid() const { return static_cast<bool>(d_); }

    bool operator==(const Field& o) const {
        if (d_ == o.d_) return true;
        if (!d_ || !o.d_) return false;
        return d_->p == o.d_->p && d_->modulus == o.d_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Element zero() const;
    Element one() const;
    Element element(code_t code) const;
    Element from_int(std::int64_t v) const;
    Element from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    Element generator() const;

    /// All elements in enumeration order.
    std::vector<Element> elements() const;

private:
    std::shared_ptr<const detail::FieldData> d_;
};

class Element {
public:
    Element() = default;
    Element(Field f, code_t c) : field_(std::move(f)), code_(c) {}

    const Field& field() const { return field_; }
    code_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    std::vector<std::uint64_t> coeffs() const { return field_.data().digits(code_); }

    Element operator+(const Element& o) const { return {field_, d(o).add(code_, o.code_)}; }
    Element operator-(const Element& o) const { return {field_, d(o).sub(code_, o.code_)}; }
    Element operator*(const Element& o) const { return {field_, d(o).mul(code_, o.code_)}; }
    Element operator/(const Element& o) const { return {field_, d(o).div(code_, o.code_)}; }
    Element operator-() const { return {field_, field_.data().neg(code_)}; }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element inverse() const { return {field_, field_.data().inv(code_)}; }
    Element pow(std::uint64_t e) const { return {field_, field_.data().pow(code_, e)}; }

    bool operator==(const Element& o) const { return code_ == o.code_ && field_ == o.field_; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return code_ < o.code_; }

private:
    const detail::FieldData& d(const Element& o) const {
        if (field_ != o.field_) fail(ErrorKind::FieldMismatch, "operands live in different fields");
        return field_.data();
    }

    Field field_;
    code_t code_ = 0;
};

inline Element Field::zero() const { return {*this, 0}; }
inline Element Field::one() const { return {*this, 1}; }
inline Element Field::element(code_t code) const {
    if (code >= d_->n) fail(ErrorKind::ParseError, "element code out of range");
    return {*this, code};
}
inline Element Field::from_int(std::int64_t v) const { return {*this, d_->scalar(v)}; }
inline Element Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > d_->r) fail(ErrorKind::ParseError, "too many coefficients for field element");
    std::vector<std::uint64_t> dg(d_->r, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) dg[i] = d_->scalar(coeffs[i]);
    return {*this, d_->from_digits(dg)};
}
inline Element Field::generator() const { return {*this, d_->generator}; }
inline std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(d_->n);
    for (std::uint64_t k = 0; k < d_->n; ++k) out.emplace_back(*this, d_->code_from_rank(k));
    return out;
}

/// Builds F_{p^r}. Without a modulus, picks the lexicographically smallest
/// monic irreducible of degree r (c_0 compared first).
inline Field build_field(std::uint64_t p, unsigned r, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                         std::uint64_t budget = kDefaultBudget) {
    if (!cyclo::detail::is_prime(p)) fail(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
    if (r == 0) fail(ErrorKind::ParseError, "field degree must be positive");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < r; ++i) {
        n *= p;
        if (n > budget) fail(ErrorKind::BudgetExceeded, "field order exceeds budget " + std::to_string(budget));
    }
    if (modulus) {
        auto m = *modulus;
        if (m.size() != r + 1 || m.back() != 1)
            fail(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(r));
        for (auto c : m)
            if (c >= p) fail(ErrorKind::ParseError, "modulus coefficient out of range");
        if (!detail::raw_is_irreducible(m, p)) fail(ErrorKind::ReducibleModulus, "supplied modulus factors over F_p");
        return Field(detail::make_field_data(p, r, std::move(m)));
    }
    for (std::uint64_t rank = 0; rank < n; ++rank) {
        std::vector<std::uint64_t> m(r + 1, 0);
        std::uint64_t t = rank;
        for (unsigned i = r; i-- > 0;) {
            m[i] = t % p;
            t /= p;
        }
        m[r] = 1;
        if (detail::raw_is_irreducible(m, p)) return Field(detail::make_field_data(p, r, std::move(m)));
    }
    fail(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

/// x^q for q = p^m with m | r.
inline Element frobenius(const Element& x, std::uint64_t q) {
    const auto& d = x.field().data();
    auto [pp, m] = cyclo::detail::prime_power(q);
    if (pp != d.p || m == 0 || d.r % m != 0)
        fail(ErrorKind::InvalidSubfield, std::to_string(q) + " is not the order of a subfield");
    return x.pow(q);
}

inline Element primitive_root(const Field& f) { return f.generator(); }

inline Element nth_root_of_unity(const Field& f, std::uint64_t n) {
    if (n == 0 || (f.order() - 1) % n != 0)
        fail(ErrorKind::NoSuchRoot, std::to_string(n) + " does not divide " + std::to_string(f.order() - 1));
    return f.generator().pow((f.order() - 1) / n);
}

inline std::uint64_t mult_order(const Element& x) {
    if (x.is_zero()) fail(ErrorKind::ZeroElement, "multiplicative order of zero");
    const auto& d = x.field().data();
    const std::uint64_t l = d.log[x.code()];
    return (d.n - 1) / std::gcd(l, d.n - 1);
}

/// Discrete logarithm base the primitive root (table lookup).
inline std::uint64_t log(const Element& x) {
    if (x.is_zero()) fail(ErrorKind::ZeroElement, "logarithm of zero");
    return x.field().data().log[x.code()];
}

inline bool in_subfield(const Element& x, std::uint64_t q) { return frobenius(x, q) == x; }

/// Elements of the subfield of order q, in the field's enumeration order.
inline std::vector<Element> subfield_elements(const Field& f, std::uint64_t q) {
    std::vector<Element> out;
    for (auto& e : f.elements())
        if (in_subfield(e, q)) out.push_back(e);
    return out;
}

/// "0", "1", small integers for prime-field elements, otherwise "g^k".
inline std::string to_string(const Element& x) {
    const auto& d = x.field().data();
    if (x.code() < d.p) return std::to_string(x.code());
    const auto l = d.log[x.code()];
    return l == 1 ? std::string("g") : "g^" + std::to_string(l);
}

/// Field homomorphism F_{p^m} -> F_{p^n} (m | n) sending x to the
/// enumeration-first root of the source modulus.
class Embedding {
public:
    Embedding() = default;
    Embedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
        if (from_.characteristic() != to_.characteristic() || to_.degree() % from_.degree() != 0)
            fail(ErrorKind::InvalidSubfield, "no embedding between these fields");
        if (from_ == to_) {
            image_.resize(from_.order());
            std::iota(image_.begin(), image_.end(), code_t{0});
            return;
        }
        const auto& m = from_.modulus();
        std::optional<Element> root;
        for (auto& e : to_.elements()) {
            Element acc = to_.zero();
            for (std::size_t i = m.size(); i-- > 0;) acc = acc * e + to_.from_int(static_cast<std::int64_t>(m[i]));
            if (acc.is_zero()) {
                root = e;
                break;
            }
        }
        if (!root) fail(ErrorKind::InternalInconsistency, "source modulus has no root in target");
        image_.assign(from_.order(), 0);
        std::vector<Element> powers;
        Element pw = to_.one();
        for (unsigned i = 0; i < from_.degree(); ++i) {
            powers.push_back(pw);
            pw *= *root;
        }
        for (code_t c = 0; c < from_.order(); ++c) {
            const auto dg = from_.data().digits(c);
            Element acc = to_.zero();
            for (unsigned i = 0; i < dg.size(); ++i) acc += to_.from_int(static_cast<std::int64_t>(dg[i])) * powers[i];
            image_[c] = acc.code();
        }
    }

    Element operator()(const Element& x) const {
        if (x.field() != from_) fail(ErrorKind::FieldMismatch, "embedding applied to foreign element");
        return {to_, image_[x.code()]};
    }

    /// Inverse image, if x lies in the image.
    std::optional<Element> preimage(const Element& x) const {
        for (code_t c = 0; c < image_.size(); ++c)
            if (image_[c] == x.code()) return Element(from_, c);
        return std::nullopt;
    }

    const Field& source() const { return from_; }
    const Field& target() const { return to_; }

private:
    Field from_, to_;
    std::vector<code_t> image_;
};

/// The pair F_q ⊂ F_{q^d} with an explicit embedding.
class Extension {
public:
    Extension() = default;
    Extension(Field base, unsigned d, std::uint64_t budget = kDefaultBudget) : base_(std::move(base)), d_(d) {
        if (d == 0) fail(ErrorKind::ParseError, "extension degree must be positive");
        top_ = d == 1 ? base_ : build_field(base_.characteristic(), base_.degree() * d, std::nullopt, budget);
        embed_ = Embedding(base_, top_);
    }

    const Field& base() const { return base_; }
    const Field& field() const { return top_; }
    std::uint64_t q() const { return base_.order(); }
    unsigned d() const { return d_; }
    const Embedding& embedding() const { return embed_; }
    Element embed(const Element& x) const { return embed_(x); }

    /// Images of the base field in enumeration order of the base.
    std::vector<Element> base_elements() const {
        std::vector<Element> out;
        for (auto& e : base_.elements()) out.push_back(embed_(e));
        return out;
    }

    /// x ↦ x^q on F_{q^d}.
    Element sigma(const Element& x) const { return x.pow(q()); }

private:
    Field base_;
    unsigned d_ = 1;
    Field top_;
    Embedding embed_;
};

/// Builds F_q (q = p^r, default modulus unless given) and F_{q^d}.
inline Extension make_extension(std::uint64_t q, unsigned d, std::uint64_t budget = kDefaultBudget,
                                std::optional<std::vector<std::uint64_t>> base_modulus = std::nullopt) {
    auto [p, r] = cyclo::detail::prime_power(q);
    if (p == 0) fail(ErrorKind::CompositeCharacteristic, std::to_string(q) + " is not a prime power");
    return Extension(build_field(p, r, std::move(base_modulus), budget), d, budget);
}

} // namespace cyclo::ff
