#pragma once

// Enumerated unit groups (A_d/M)^* with A_d = F_{q^d}[T], the Frobenius
// σ acting on coefficients, H = (σ-1)G, the N_t filtration and
// order-statistics decomposition of abelian p-groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"
#include "cyclo/poly.hpp"

namespace cyclo::galois {

using ff::code_t;
using ff::Element;
using ff::Extension;
using ff::Field;
using poly::Polynomial;

namespace detail {

/// Arithmetic on packed residues modulo a fixed monic polynomial.
class PackedRing {
public:
    PackedRing() = default;
    PackedRing(Field f, std::vector<code_t> monic_modulus) : f_(std::move(f)), m_(std::move(monic_modulus)) {
        n_ = m_.size() - 1;
        Q_ = f_.order();
        cyclo::detail::checked_pow(static_cast<std::int64_t>(Q_), static_cast<unsigned>(n_));
    }

    std::size_t n() const { return n_; }
    std::uint64_t Q() const { return Q_; }
    const Field& field() const { return f_; }

    std::vector<code_t> unpack(std::uint64_t key) const {
        std::vector<code_t> v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = static_cast<code_t>(key % Q_);
            key /= Q_;
        }
        return v;
    }

    std::uint64_t pack(const std::vector<code_t>& v) const {
        std::uint64_t k = 0;
        for (std::size_t i = v.size(); i-- > 0;) k = k * Q_ + v[i];
        return k;
    }

    std::vector<code_t> mul(const std::vector<code_t>& a, const std::vector<code_t>& b) const {
        const auto& fd = f_.data();
        std::vector<code_t> c(2 * n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (b[j]) c[i + j] = fd.add(c[i + j], fd.mul(a[i], b[j]));
        }
        for (std::size_t k = 2 * n_; k-- > n_;) {
            const code_t t = c[k];
            if (!t) continue;
            c[k] = 0;
            for (std::size_t j = 0; j < n_; ++j) c[k - n_ + j] = fd.sub(c[k - n_ + j], fd.mul(t, m_[j]));
        }
        c.resize(n_);
        return c;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return pack(mul(unpack(a), unpack(b))); }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        auto base = unpack(a);
        std::vector<code_t> r(n_, 0);
        if (n_) r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return pack(r);
    }

    std::uint64_t one() const { return n_ ? 1 : 0; }

private:
    Field f_;
    std::vector<code_t> m_;
    std::size_t n_ = 0;
    std::uint64_t Q_ = 0;
};

} // namespace detail

/// A finite multiplicative group of residues mod M over F_{q^d}, listed
/// explicitly, with σ (coefficient-wise x -> x^q) as a permutation.
class GroupTable {
public:
    GroupTable() = default;

    /// `keys` must be closed under multiplication and σ-stable.
    GroupTable(Extension ext, Polynomial modulus, std::vector<std::uint64_t> keys)
        : ext_(std::move(ext)), M_(std::move(modulus)), ring_(M_.field(), M_.codes()), keys_(std::move(keys)) {
        std::sort(keys_.begin(), keys_.end());
        const std::uint64_t space = cyclo::detail::ipow(ring_.Q(), static_cast<unsigned>(ring_.n()));
        if (space <= (std::uint64_t{1} << 22)) {
            dense_.assign(space, -1);
            for (std::size_t i = 0; i < keys_.size(); ++i) dense_[keys_[i]] = static_cast<std::int64_t>(i);
        } else {
            sparse_.reserve(keys_.size() * 2);
            for (std::size_t i = 0; i < keys_.size(); ++i) sparse_[keys_[i]] = i;
        }
        identity_ = index_of(ring_.one()).value();
        const auto& fd = M_.field().data();
        const std::uint64_t q = ext_.q();
        sigma_.resize(keys_.size());
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            auto v = ring_.unpack(keys_[i]);
            for (auto& c : v) c = fd.pow(c, q);
            auto j = index_of(ring_.pack(v));
            if (!j) fail(ErrorKind::InternalInconsistency, "element set is not σ-stable");
            sigma_[i] = static_cast<std::uint32_t>(*j);
        }
        // Inverses by walking cyclic orbits: the walk of x fixes inv on all of <x>.
        inv_.assign(keys_.size(), UINT32_MAX);
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (inv_[i] != UINT32_MAX) continue;
            cyc.clear();
            std::size_t y = i;
            while (true) {
                cyc.push_back(y);
                if (y == identity_) break;
                y = mul(y, i);
            }
            const std::size_t k = cyc.size();
            for (std::size_t j = 0; j < k; ++j) inv_[cyc[j]] = static_cast<std::uint32_t>(cyc[(2 * k - 2 - j) % k]);
        }
    }

    const Extension& ext() const { return ext_; }
    const Polynomial& modulus() const { return M_; }
    const detail::PackedRing& ring() const { return ring_; }
    std::size_t size() const { return keys_.size(); }
    std::size_t identity() const { return identity_; }
    std::uint64_t key(std::size_t i) const { return keys_[i]; }
    const std::vector<std::uint64_t>& keys() const { return keys_; }

    std::optional<std::size_t> index_of(std::uint64_t key) const {
        if (!dense_.empty()) {
            if (key >= dense_.size() || dense_[key] < 0) return std::nullopt;
            return static_cast<std::size_t>(dense_[key]);
        }
        auto it = sparse_.find(key);
        if (it == sparse_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t at_key(std::uint64_t key) const {
        auto i = index_of(key);
        if (!i) fail(ErrorKind::InternalInconsistency, "product left the group");
        return *i;
    }

    Polynomial element(std::size_t i) const {
        auto v = ring_.unpack(keys_[i]);
        return Polynomial(M_.field(), std::move(v));
    }

    std::size_t mul(std::size_t i, std::size_t j) const { return at_key(ring_.mul(keys_[i], keys_[j])); }
    std::size_t pow(std::size_t i, std::uint64_t e) const { return at_key(ring_.pow(keys_[i], e)); }
    std::size_t inverse(std::size_t i) const { return inv_[i]; }
    std::size_t sigma(std::size_t i) const { return sigma_[i]; }

private:
    Extension ext_;
    Polynomial M_;
    detail::PackedRing ring_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::int64_t> dense_;
    std::unordered_map<std::uint64_t, std::size_t> sparse_;
    std::vector<std::uint32_t> sigma_, inv_;
    std::size_t identity_ = 0;
};

/// A subset of a GroupTable given by sorted indices.
class SubgroupHandle {
public:
    SubgroupHandle() = default;
    SubgroupHandle(const GroupTable* g, std::vector<std::size_t> members) : g_(g), m_(std::move(members)) {
        std::sort(m_.begin(), m_.end());
        m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
    }

    const GroupTable& parent() const { return *g_; }
    const std::vector<std::size_t>& members() const { return m_; }
    std::size_t order() const { return m_.size(); }
    bool contains(std::size_t i) const { return std::binary_search(m_.begin(), m_.end(), i); }

    bool operator==(const SubgroupHandle& o) const { return g_ == o.g_ && m_ == o.m_; }
    bool operator!=(const SubgroupHandle& o) const { return !(*this == o); }

    SubgroupHandle intersect(const SubgroupHandle& o) const {
        std::vector<std::size_t> r;
        std::set_intersection(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(r));
        return {g_, std::move(r)};
    }

    /// Identity present and the subgroup generated by the set equals the set.
    /// Uses a greedy generating set and the abelian closure.
    bool is_subgroup() const {
        if (m_.empty() || !contains(g_->identity())) return false;
        std::vector<char> in(g_->size(), 0);
        std::vector<std::size_t> closure{g_->identity()};
        in[g_->identity()] = 1;
        for (auto x : m_) {
            if (in[x]) continue;
            const std::size_t base = closure.size();
            for (std::size_t k = 0; k < base; ++k) {
                std::size_t y = closure[k];
                while (true) {
                    y = g_->mul(y, x);
                    if (in[y]) break;
                    if (!contains(y)) return false;
                    in[y] = 1;
                    closure.push_back(y);
                }
            }
        }
        return closure.size() == m_.size();
    }

    /// σ(S) = S as sets.
    bool sigma_stable() const {
        for (auto i : m_)
            if (!contains(g_->sigma(i))) return false;
        return true;
    }

private:
    const GroupTable* g_ = nullptr;
    std::vector<std::size_t> m_;
};

/// Abelian group as a multiset of cyclic prime-power orders, ascending.
struct AbelianDecomposition {
    std::vector<std::uint64_t> cyclic_orders;
    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (auto c : cyclic_orders) n *= c;
        return n;
    }
    bool operator==(const AbelianDecomposition& o) const { return cyclic_orders == o.cyclic_orders; }
    bool operator!=(const AbelianDecomposition& o) const { return !(*this == o); }
};

inline std::string to_string(const AbelianDecomposition& a) {
    if (a.cyclic_orders.empty()) return "1";
    std::map<std::uint64_t, std::size_t> mult;
    for (auto c : a.cyclic_orders) ++mult[c];
    std::string s;
    for (auto [c, m] : mult) {
        s += (s.empty() ? "C" : " x C") + std::to_string(c);
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

// ---- construction ----

/// Checks that each irreducible F_q-factor of M has degree dividing d.
inline void require_split(const Polynomial& M, unsigned d) {
    for (auto& [P, e] : poly::factor(M))
        if (d % static_cast<unsigned>(P.degree()) != 0)
            fail(ErrorKind::MDoesNotSplit, "factor " + poly::to_string(P) + " of degree " + std::to_string(P.degree()) +
                                               " does not split over F_{q^" + std::to_string(d) + "}");
}

/// G_{q^d,M} = (F_{q^d}[T]/M)^* by full enumeration. M has coefficients in F_q.
inline GroupTable build_group(const Extension& ext, const Polynomial& M, std::uint64_t budget = kDefaultBudget) {
    if (M.field() != ext.base()) fail(ErrorKind::FieldMismatch, "M must have coefficients in F_q");
    if (M.degree() < 1) fail(ErrorKind::ConstantPolynomial, "modulus must be nonconstant");
    require_split(M, ext.d());
    const Polynomial Md = poly::embed(M.monic(), ext.embedding());
    const std::uint64_t Q = ext.field().order();
    const auto n = static_cast<unsigned>(M.degree());
    std::uint64_t space = 1;
    for (unsigned i = 0; i < n; ++i) {
        space *= Q;
        if (space > budget)
            fail(ErrorKind::BudgetExceeded, "|F_{q^d}|^deg M exceeds the enumeration budget " + std::to_string(budget));
    }
    // M splits, so D is a unit iff it vanishes at no root of M.
    std::vector<Element> roots;
    for (auto& x : ext.field().elements())
        if (Md(x).is_zero()) roots.push_back(x);
    const auto& fd = ext.field().data();
    detail::PackedRing ring(ext.field(), Md.codes());
    std::vector<std::uint64_t> keys;
    for (std::uint64_t k = 0; k < space; ++k) {
        const auto v = ring.unpack(k);
        bool unit = true;
        for (auto& r : roots) {
            code_t acc = 0;
            for (std::size_t i = v.size(); i-- > 0;) acc = fd.add(fd.mul(acc, r.code()), v[i]);
            if (!acc) {
                unit = false;
                break;
            }
        }
        if (unit) keys.push_back(k);
    }
    return GroupTable(ext, Md, std::move(keys));
}

/// P_{Q,P^α} = {D mod P^α : D ≡ 1 mod P} over F_Q = ext.field(), built
/// directly as 1 + P f with deg f < s(α-1). P need not split.
inline GroupTable build_wild_group(const Extension& ext, const Polynomial& P, unsigned alpha,
                                   std::uint64_t budget = kDefaultBudget) {
    if (P.field() != ext.base()) fail(ErrorKind::FieldMismatch, "P must have coefficients in F_q");
    if (alpha < 1) fail(ErrorKind::ParseError, "α must be positive");
    const Polynomial Pd = poly::embed(P.monic(), ext.embedding());
    const Polynomial Md = poly::pow(Pd, alpha);
    const std::uint64_t Q = ext.field().order();
    const auto free_len = static_cast<unsigned>(P.degree()) * (alpha - 1);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < free_len; ++i) {
        count *= Q;
        if (count > budget) fail(ErrorKind::BudgetExceeded, "wild group exceeds the enumeration budget");
    }
    detail::PackedRing ring(ext.field(), Md.codes());
    std::vector<std::uint64_t> keys;
    keys.reserve(count);
    const Polynomial one = Polynomial::constant(ext.field().one());
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<code_t> f(free_len);
        std::uint64_t t = k;
        for (auto& c : f) {
            c = static_cast<code_t>(t % Q);
            t /= Q;
        }
        const Polynomial D = one + Pd * Polynomial(ext.field(), std::move(f));
        std::vector<code_t> v(Md.degree(), 0);
        for (std::size_t i = 0; i < D.codes().size(); ++i) v[i] = D.codes()[i];
        keys.push_back(ring.pack(v));
    }
    return GroupTable(ext, Md, std::move(keys));
}

inline SubgroupHandle whole(const GroupTable& G) {
    std::vector<std::size_t> all(G.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return {&G, std::move(all)};
}

/// H = {σ(D) D^{-1}}.
inline SubgroupHandle compute_H(const GroupTable& G) {
    std::vector<std::size_t> out;
    out.reserve(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) out.push_back(G.mul(G.sigma(i), G.inverse(i)));
    SubgroupHandle H(&G, std::move(out));
    if (!H.is_subgroup()) fail(ErrorKind::ConsistencyFailure, "(σ-1)G is not a subgroup");
    return H;
}

/// Kernel of the quotient G_{q^d,M} -> G_{q,M}, realized as the norm
/// D -> prod_{j<d} σ^j(D), which lands in the σ-fixed residues.
inline SubgroupHandle norm_kernel(const GroupTable& G) {
    std::vector<std::size_t> out;
    const unsigned d = G.ext().d();
    for (std::size_t i = 0; i < G.size(); ++i) {
        std::size_t acc = i, cur = i;
        for (unsigned j = 1; j < d; ++j) {
            cur = G.sigma(cur);
            acc = G.mul(acc, cur);
        }
        if (acc == G.identity()) out.push_back(i);
    }
    return {&G, std::move(out)};
}

/// #(F_q[T]/M)^* by enumeration over F_q.
inline std::uint64_t count_units_base(const Polynomial& M, std::uint64_t budget = kDefaultBudget) {
    const Field& f = M.field();
    const auto n = static_cast<unsigned>(M.degree());
    const std::uint64_t Q = f.order();
    std::uint64_t space = 1;
    for (unsigned i = 0; i < n; ++i) {
        space *= Q;
        if (space > budget) fail(ErrorKind::BudgetExceeded, "base residue ring exceeds the enumeration budget");
    }
    std::uint64_t units = 0;
    for (std::uint64_t k = 0; k < space; ++k) {
        std::vector<code_t> v(n);
        std::uint64_t t = k;
        for (auto& c : v) {
            c = static_cast<code_t>(t % Q);
            t /= Q;
        }
        if (poly::gcd(Polynomial(f, std::move(v)), M).degree() == 0) ++units;
    }
    return units;
}

struct QuotientCheck {
    std::uint64_t G = 0, H = 0, quotient = 0, base_units = 0;
    bool holds() const { return H * quotient == G && quotient == base_units; }
};

/// (|G|, |H|, |G|/|H|) against #(A_1/M)^*; throws ConsistencyFailure on mismatch.
inline QuotientCheck quotient_order_check(const GroupTable& G, const SubgroupHandle& H, const Polynomial& M_base) {
    QuotientCheck c;
    c.G = G.size();
    c.H = H.order();
    c.quotient = c.H ? c.G / c.H : 0;
    c.base_units = count_units_base(M_base);
    if (!c.holds())
        fail(ErrorKind::ConsistencyFailure, "|G|/|H| = " + std::to_string(c.G) + "/" + std::to_string(c.H) +
                                                " but #(A_1/M)^* = " + std::to_string(c.base_units));
    return c;
}

struct CrtFactor {
    Polynomial P;        // irreducible over F_q
    unsigned exponent = 0;
    std::uint64_t G = 0, H = 0;
};

struct CrtReport {
    std::vector<CrtFactor> factors;
    std::uint64_t G = 0, H = 0;
    bool holds() const {
        std::uint64_t g = 1, h = 1;
        for (auto& f : factors) {
            g *= f.G;
            h *= f.H;
        }
        return g == G && h == H;
    }
};

/// Per-factor groups for M = prod P_j^{a_j} and the order-product check.
inline CrtReport crt_split(const Extension& ext, const Polynomial& M, std::uint64_t budget = kDefaultBudget) {
    CrtReport r;
    const auto G = build_group(ext, M, budget);
    r.G = G.size();
    r.H = compute_H(G).order();
    for (auto& [P, e] : poly::factor(M)) {
        const auto Gj = build_group(ext, poly::pow(P, e), budget);
        r.factors.push_back({P, e, Gj.size(), compute_H(Gj).order()});
    }
    if (!r.holds()) fail(ErrorKind::ConsistencyFailure, "CRT order product differs from the full group");
    return r;
}

/// N_t = {D : D ≡ 1 mod P^t} inside G (modulus P^α), for t = 1..α.
/// Expected orders q^{ds(α-t)}; ConsistencyFailure on deviation.
inline std::vector<SubgroupHandle> filtration_N(const GroupTable& G, const Polynomial& P_base, unsigned alpha,
                                                bool check = true) {
    const Polynomial P = poly::embed(P_base.monic(), G.ext().embedding());
    if (poly::pow(P, alpha) != G.modulus()) fail(ErrorKind::ModulusNotAPower, "group modulus is not P^α");
    const Polynomial one = Polynomial::constant(G.modulus().field().one());
    std::vector<SubgroupHandle> out;
    const auto s = static_cast<unsigned>(P.degree());
    for (unsigned t = 1; t <= alpha; ++t) {
        const Polynomial Pt = poly::pow(P, t);
        std::vector<std::size_t> mem;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (((G.element(i) - one) % Pt).is_zero()) mem.push_back(i);
        SubgroupHandle N(&G, std::move(mem));
        const std::uint64_t expect = cyclo::detail::ipow(G.ext().q(), G.ext().d() * s * (alpha - t));
        if (check && N.order() != expect)
            fail(ErrorKind::ConsistencyFailure, "|N_" + std::to_string(t) + "| = " + std::to_string(N.order()) +
                                                    ", expected " + std::to_string(expect));
        out.push_back(std::move(N));
    }
    return out;
}

/// c_n = #{x : x^{p^n} = 1} for n = 0, 1, ... until it stabilizes at |S|.
inline std::vector<std::uint64_t> power_torsion_counts(const SubgroupHandle& S) {
    const auto& G = S.parent();
    const std::uint64_t p = G.ext().field().characteristic();
    std::vector<std::uint64_t> counts{1};
    std::vector<std::uint64_t> cur;
    for (auto i : S.members()) cur.push_back(G.key(i));
    const std::uint64_t one = G.ring().one();
    while (counts.back() < S.order()) {
        std::uint64_t c = 0;
        for (auto& x : cur) {
            x = G.ring().pow(x, p);
            if (x == one) ++c;
        }
        if (c == counts.back() && counts.size() > 64)
            fail(ErrorKind::InternalInconsistency, "subgroup is not a p-group");
        counts.push_back(c);
    }
    return counts;
}

/// Abelian p-group structure from c_n = p^{sum_k min(n, e_k)}.
inline AbelianDecomposition p_group_decomposition(const SubgroupHandle& S) {
    const auto& G = S.parent();
    const std::uint64_t p = G.ext().field().characteristic();
    const auto c = power_torsion_counts(S);
    auto logp = [p](std::uint64_t x) {
        unsigned k = 0;
        while (x > 1) {
            if (x % p) fail(ErrorKind::InternalInconsistency, "torsion count is not a power of p");
            x /= p;
            ++k;
        }
        return k;
    };
    // r_n = #{k : e_k >= n}
    std::vector<unsigned> r(c.size() + 1, 0);
    for (std::size_t n = 1; n < c.size(); ++n) r[n] = logp(c[n]) - logp(c[n - 1]);
    AbelianDecomposition out;
    for (std::size_t n = 1; n < c.size(); ++n) {
        const unsigned mult = r[n] - r[n + 1];
        for (unsigned k = 0; k < mult; ++k) out.cyclic_orders.push_back(cyclo::detail::ipow(p, static_cast<unsigned>(n)));
    }
    std::sort(out.cyclic_orders.begin(), out.cyclic_orders.end());
    return out;
}

/// Number of cyclic subgroups of order p^n, n >= 1, from element orders.
inline std::map<std::uint64_t, std::uint64_t> cyclic_subgroup_counts(const SubgroupHandle& S) {
    const auto& G = S.parent();
    const std::uint64_t p = G.ext().field().characteristic();
    const auto c = power_torsion_counts(S);
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::size_t n = 1; n < c.size(); ++n) {
        const std::uint64_t pn = cyclo::detail::ipow(p, static_cast<unsigned>(n));
        const std::uint64_t exact = c[n] - c[n - 1];
        out[pn] = exact / (pn - pn / p);
    }
    return out;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// v_{q^r,n}(α) = (q^{rs(α-⌈α/p^n⌉)} - q^{rs(α-⌈α/p^{n-1}⌉)}) / (p^{n-1}(p-1)).
inline std::int64_t v_formula(std::uint64_t q, unsigned r, unsigned s, unsigned alpha, unsigned n) {
    if (n == 0) fail(ErrorKind::ParseError, "n must be positive");
    auto [p, e] = cyclo::detail::prime_power(q);
    if (p == 0) fail(ErrorKind::CompositeCharacteristic, "q is not a prime power");
    auto qpow = [&](std::uint64_t k) {
        return cyclo::detail::checked_pow(static_cast<std::int64_t>(q), static_cast<unsigned>(r * s * k));
    };
    std::uint64_t pn = 1, pn1 = 1;
    for (unsigned i = 0; i < n; ++i) {
        pn1 = pn;
        pn = std::min<std::uint64_t>(pn * p, std::uint64_t{1} << 40);
    }
    const std::int64_t num = qpow(alpha - ceil_div(alpha, pn)) - qpow(alpha - ceil_div(alpha, pn1));
    const std::int64_t den = static_cast<std::int64_t>(pn1 * (p - 1));
    if (num % den != 0) fail(ErrorKind::InternalInconsistency, "v formula is not integral");
    return num / den;
}

/// The multiset {p^n with multiplicity v_n}.
inline AbelianDecomposition v_formula_multiset(std::uint64_t q, unsigned r, unsigned s, unsigned alpha) {
    const std::uint64_t p = cyclo::detail::prime_power(q).first;
    AbelianDecomposition out;
    std::uint64_t pn1 = 1;
    for (unsigned n = 1; pn1 < alpha; ++n, pn1 *= p) {
        const auto v = v_formula(q, r, s, alpha, n);
        for (std::int64_t k = 0; k < v; ++k) out.cyclic_orders.push_back(pn1 * p);
    }
    std::sort(out.cyclic_orders.begin(), out.cyclic_orders.end());
    return out;
}

// ---- additive σ - 1 on ⊕_{i=1}^s F_{q^d} ----

/// (x_1..x_s) -> (x_s^q - x_1, x_1^q - x_2, ..., x_{s-1}^q - x_s).
inline std::vector<Element> sigma_minus_one_additive(const std::vector<Element>& x, std::uint64_t q) {
    if (x.empty()) fail(ErrorKind::DimensionMismatch, "empty coordinate vector");
    std::vector<Element> out;
    const std::size_t s = x.size();
    for (std::size_t i = 0; i < s; ++i) out.push_back(ff::frobenius(x[(i + s - 1) % s], q) - x[i]);
    return out;
}

struct KernelImageCounts {
    std::uint64_t kernel = 0, image = 0;
    std::uint64_t kernel_formula = 0, image_formula = 0; // q^d and q^{d(s-1)}
    bool holds() const { return kernel == kernel_formula && image == image_formula; }
};

inline KernelImageCounts kernel_image_counts(const Extension& ext, unsigned s, std::uint64_t budget = 1u << 16) {
    const std::uint64_t Q = ext.field().order(), q = ext.q();
    std::uint64_t space = 1;
    for (unsigned i = 0; i < s; ++i) {
        space *= Q;
        if (space > budget) fail(ErrorKind::BudgetExceeded, "q^{ds} exceeds the enumeration budget");
    }
    const auto& fd = ext.field().data();
    std::vector<char> hit(space, 0);
    KernelImageCounts r;
    for (std::uint64_t k = 0; k < space; ++k) {
        std::vector<code_t> x(s);
        std::uint64_t t = k;
        for (auto& c : x) {
            c = static_cast<code_t>(t % Q);
            t /= Q;
        }
        std::uint64_t img = 0;
        bool zero = true;
        for (std::size_t i = s; i-- > 0;) {
            const code_t y = fd.sub(fd.pow(x[(i + s - 1) % s], q), x[i]);
            zero = zero && y == 0;
            img = img * Q + y;
        }
        if (zero) ++r.kernel;
        if (!hit[img]) {
            hit[img] = 1;
            ++r.image;
        }
    }
    r.kernel_formula = Q;
    r.image_formula = cyclo::detail::ipow(Q, s - 1);
    return r;
}

} // namespace cyclo::galois
