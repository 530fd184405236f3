#pragma once

// Invariant theory of the unitriangular Toeplitz group ΔT_α over F_{q^d}
// acting on F_{q^d}[v_0, ..., v_{α-1}] by linear substitution.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/carlitz.hpp"
#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo::invariant {

using ff::code_t;
using ff::Element;
using ff::Field;
using linalg::Matrix;

using Exponent = std::vector<std::uint16_t>;

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(Field f, std::size_t nvars) : f_(std::move(f)), n_(nvars) {}

    static MultiPoly constant(const Field& f, std::size_t nvars, code_t c) {
        MultiPoly r(f, nvars);
        r.add_term(Exponent(nvars, 0), c);
        return r;
    }
    static MultiPoly variable(const Field& f, std::size_t nvars, std::size_t i, unsigned e = 1) {
        MultiPoly r(f, nvars);
        Exponent x(nvars, 0);
        x[i] = static_cast<std::uint16_t>(e);
        r.add_term(std::move(x), 1);
        return r;
    }
    static MultiPoly monomial(const Field& f, Exponent e, code_t c = 1) {
        MultiPoly r(f, e.size());
        r.add_term(std::move(e), c);
        return r;
    }

    const Field& field() const { return f_; }
    std::size_t nvars() const { return n_; }
    const std::map<Exponent, code_t>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    code_t coeff(const Exponent& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? 0 : it->second;
    }

    void add_term(Exponent e, code_t c) {
        if (e.size() != n_) fail(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
        if (!c) return;
        auto [it, fresh] = t_.emplace(std::move(e), c);
        if (fresh) return;
        it->second = f_.data().add(it->second, c);
        if (!it->second) t_.erase(it);
    }

    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, sum(e));
        return d;
    }
    /// Componentwise maximum of the exponents.
    Exponent multidegree() const {
        Exponent m(n_, 0);
        for (auto& [e, c] : t_)
            for (std::size_t i = 0; i < n_; ++i) m[i] = std::max(m[i], e[i]);
        return m;
    }
    bool involves(std::size_t i) const {
        for (auto& [e, c] : t_)
            if (e[i]) return true;
        return false;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.t_) c = f_.data().neg(c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        MultiPoly r(f_, n_);
        const auto& fd = f_.data();
        for (auto& [a, ca] : t_)
            for (auto& [b, cb] : o.t_) {
                Exponent e(n_);
                for (std::size_t i = 0; i < n_; ++i) e[i] = static_cast<std::uint16_t>(a[i] + b[i]);
                r.add_term(std::move(e), fd.mul(ca, cb));
            }
        return r;
    }
    MultiPoly scaled(code_t c) const {
        MultiPoly r(f_, n_);
        for (auto& [e, x] : t_) r.add_term(e, f_.data().mul(x, c));
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(f_, n_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Coefficient of v_i^k as a polynomial in the remaining variables (v_i removed from exponents).
    MultiPoly coefficient_of(std::size_t i, unsigned k) const {
        MultiPoly r(f_, n_);
        for (auto& [e, c] : t_)
            if (e[i] == k) {
                Exponent x = e;
                x[i] = 0;
                r.add_term(std::move(x), c);
            }
        return r;
    }

    /// Applies v_i^Q = v_i for each listed i.
    MultiPoly reduce_frobenius(const std::vector<std::size_t>& vars, std::uint64_t Q) const {
        MultiPoly r(f_, n_);
        for (auto& [e, c] : t_) {
            Exponent x = e;
            for (auto i : vars)
                if (x[i] >= Q) x[i] = static_cast<std::uint16_t>((x[i] - 1) % (Q - 1) + 1);
            r.add_term(std::move(x), c);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && f_ == o.f_ && t_ == o.t_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    static int sum(const Exponent& e) {
        int s = 0;
        for (auto x : e) s += x;
        return s;
    }

private:
    void check(const MultiPoly& o) const {
        if (n_ != o.n_) fail(ErrorKind::DimensionMismatch, "polynomials in different variable counts");
        if (f_ != o.f_) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    }

    Field f_;
    std::size_t n_ = 0;
    std::map<Exponent, code_t> t_;
};

/// Substitutes v_j -> images[j] for j < images.size(); later variables stay.
inline MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
    const std::size_t k = images.size();
    if (k > f.nvars()) fail(ErrorKind::DimensionMismatch, "more images than variables");
    std::vector<std::vector<MultiPoly>> powers(k);
    auto power = [&](std::size_t j, unsigned e) -> const MultiPoly& {
        auto& v = powers[j];
        if (v.empty()) v.push_back(MultiPoly::constant(f.field(), f.nvars(), 1));
        while (v.size() <= e) v.push_back(v.back() * images[j]);
        return v[e];
    };
    MultiPoly out(f.field(), f.nvars());
    for (auto& [e, c] : f.terms()) {
        Exponent rest = e;
        for (std::size_t j = 0; j < k; ++j) rest[j] = 0;
        MultiPoly term = MultiPoly::monomial(f.field(), std::move(rest), c);
        for (std::size_t j = 0; j < k; ++j)
            if (e[j]) term *= power(j, e[j]);
        out += term;
    }
    return out;
}

/// v_j -> sum_i g(i,j) v_i.
inline MultiPoly act(const Matrix& g, const MultiPoly& f) {
    if (g.rows() != g.cols() || g.cols() != f.nvars())
        fail(ErrorKind::DimensionMismatch, "matrix dimension differs from variable count");
    if (g.field() != f.field()) fail(ErrorKind::FieldMismatch, "matrix and polynomial over different fields");
    std::vector<MultiPoly> img;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        MultiPoly v(f.field(), f.nvars());
        for (std::size_t i = 0; i < g.rows(); ++i)
            if (g.at(i, j)) v += MultiPoly::variable(f.field(), f.nvars(), i).scaled(g.at(i, j));
        img.push_back(std::move(v));
    }
    return substitute(f, img);
}

// ---- ordering, rendering, parsing ----

/// Graded lexicographic key over the first `primary` variables (later index
/// dominates), then the same over the rest. Larger keys print first.
inline std::vector<int> order_key(const Exponent& e, std::size_t primary) {
    std::vector<int> k;
    auto block = [&](std::size_t lo, std::size_t hi) {
        int s = 0;
        for (std::size_t i = lo; i < hi; ++i) s += e[i];
        k.push_back(s);
        for (std::size_t i = hi; i-- > lo;) k.push_back(e[i]);
    };
    block(0, std::min(primary, e.size()));
    block(std::min(primary, e.size()), e.size());
    return k;
}

inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "l" + std::to_string(i));
    return v;
}

/// Canonical text: terms in descending order_key, each as coeff*params*vars.
inline std::string to_string(const MultiPoly& f, const std::vector<std::string>& names, std::size_t primary) {
    if (names.size() != f.nvars()) fail(ErrorKind::DimensionMismatch, "name count differs from variable count");
    if (f.is_zero()) return "0";
    std::vector<std::pair<std::vector<int>, std::pair<Exponent, code_t>>> ts;
    for (auto& [e, c] : f.terms()) ts.push_back({order_key(e, primary), {e, c}});
    std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) { return a.first > b.first; });
    std::string out;
    for (auto& [key, ec] : ts) {
        auto& [e, c] = ec;
        std::vector<std::string> parts;
        if (c != 1) parts.push_back(ff::to_string(f.field().element(c)));
        auto var = [&](std::size_t i) {
            if (!e[i]) return;
            parts.push_back(names[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
        };
        for (std::size_t i = primary; i < e.size(); ++i) var(i);
        for (std::size_t i = 0; i < std::min(primary, e.size()); ++i) var(i);
        if (parts.empty()) parts.push_back("1");
        std::string t;
        for (auto& p : parts) t += (t.empty() ? "" : "*") + p;
        out += (out.empty() ? "" : " + ") + t;
    }
    return out;
}

inline std::string to_string(const MultiPoly& f) { return to_string(f, default_names(f.nvars()), f.nvars()); }

/// Parses sums of terms like "2 a y z", "a^2*y^2", "yx^2", "-b". Integer
/// coefficients are read in the prime field; names match longest first.
inline MultiPoly parse_multipoly(const Field& f, const std::vector<std::string>& names, const std::string& text) {
    const std::size_t n = names.size();
    MultiPoly out(f, n);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    auto read_int = [&]() -> std::int64_t {
        std::int64_t v = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = cyclo::detail::checked_add(cyclo::detail::checked_mul(v, 10), text[i++] - '0');
            any = true;
        }
        if (!any) fail(ErrorKind::ParseError, "expected an integer in '" + text + "'");
        return v;
    };
    skip();
    if (i < text.size() && text.substr(i) == "0") return out;
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size()) break;
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
        } else if (!first) {
            fail(ErrorKind::ParseError, "expected '+' or '-' in '" + text + "'");
        }
        first = false;
        code_t c = 1;
        Exponent e(n, 0);
        bool any = false;
        while (true) {
            skip();
            if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                c = f.data().mul(c, f.data().scalar(read_int()));
                any = true;
                continue;
            }
            std::size_t best = n, len = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (names[k].size() > len && text.compare(i, names[k].size(), names[k]) == 0) best = k, len = names[k].size();
            if (best == n) fail(ErrorKind::ParseError, "unknown symbol at '" + text.substr(i) + "'");
            i += len;
            std::int64_t k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                k = read_int();
            }
            e[best] = static_cast<std::uint16_t>(e[best] + k);
            any = true;
        }
        if (!any) fail(ErrorKind::ParseError, "empty term in '" + text + "'");
        out.add_term(std::move(e), negative ? f.data().neg(c) : c);
    }
    return out;
}

// ---- groups ----

/// First row (1, a_1, ..., a_{α-1}) -> the Toeplitz matrix.
inline Matrix toeplitz(const Field& f, const std::vector<code_t>& first_row) {
    std::vector<Element> row;
    for (auto c : first_row) row.push_back(f.element(c));
    return carlitz::ToeplitzMatrix{std::move(row)}.to_matrix();
}

struct MatrixGroup {
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> generators;
    bool unitriangular_toeplitz = false;

    /// Closure of the generators (breadth first, budgeted).
    std::vector<Matrix> enumerate(std::uint64_t budget = kDefaultBudget) const {
        std::vector<Matrix> out{Matrix::identity(field, dim)};
        std::set<std::vector<code_t>> seen{out.front().raw()};
        for (std::size_t k = 0; k < out.size(); ++k)
            for (auto& g : generators) {
                Matrix h = out[k] * g;
                if (seen.insert(h.raw()).second) {
                    if (out.size() >= budget) fail(ErrorKind::BudgetExceeded, "matrix group exceeds budget");
                    out.push_back(std::move(h));
                }
            }
        return out;
    }
};

inline void require_dim(std::size_t alpha) {
    if (alpha == 0) fail(ErrorKind::DimensionMismatch, "dimension must be positive");
}

/// ΔT_α(F): generators 1 + b t^k for b in an F_p-basis of F and 1 <= k < α.
inline MatrixGroup delta_t(const Field& f, std::size_t alpha) {
    require_dim(alpha);
    MatrixGroup g{f, alpha, {}, true};
    for (std::size_t k = 1; k < alpha; ++k)
        for (unsigned i = 0; i < f.degree(); ++i) {
            std::vector<code_t> row(alpha, 0);
            row[0] = 1;
            row[k] = static_cast<code_t>(cyclo::detail::ipow(f.characteristic(), i));
            g.generators.push_back(toeplitz(f, row));
        }
    return g;
}

/// Every element of ΔT_α(F), first rows in enumeration order.
inline std::vector<Matrix> delta_t_elements(const Field& f, std::size_t alpha, std::uint64_t budget = kDefaultBudget) {
    require_dim(alpha);
    const std::uint64_t n = f.order();
    std::uint64_t total = 1;
    for (std::size_t k = 1; k < alpha; ++k) {
        total = static_cast<std::uint64_t>(cyclo::detail::checked_mul(static_cast<std::int64_t>(total), static_cast<std::int64_t>(n)));
        if (total > budget) fail(ErrorKind::BudgetExceeded, "ΔT_α exceeds budget");
    }
    std::vector<Matrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<code_t> row(alpha, 0);
        row[0] = 1;
        std::uint64_t r = idx;
        for (std::size_t k = alpha; k-- > 1;) {
            row[k] = f.data().code_from_rank(r % n);
            r /= n;
        }
        out.push_back(toeplitz(f, row));
    }
    return out;
}

// ---- invariant subspaces ----

inline constexpr std::size_t kDefaultColumnBudget = 10000;

/// Exponents of total degree `deg` in n variables, in descending canonical order.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned deg) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) return {Exponent{}};
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), [n](auto& a, auto& b) { return order_key(a, n) > order_key(b, n); });
    return out;
}

/// Exponents with e_i <= bound_i, in descending canonical order.
inline std::vector<Exponent> monomials_in_box(const Exponent& bound) {
    std::vector<Exponent> out;
    Exponent e(bound.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == bound.size()) {
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= bound[i]; ++k) {
            e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    const std::size_t n = bound.size();
    std::sort(out.begin(), out.end(), [n](auto& a, auto& b) { return order_key(a, n) > order_key(b, n); });
    return out;
}

struct InvariantBasis {
    std::optional<unsigned> degree;
    std::optional<Exponent> bound;
    std::vector<MultiPoly> basis;
    std::size_t columns = 0;
};

inline bool is_fixed(const MultiPoly& f, const std::vector<Matrix>& gs) {
    for (auto& g : gs)
        if (act(g, f) != f) return false;
    return true;
}

/// Common kernel of act(g) - id over span(cols). The basis is reduced
/// echelon with respect to the given column order (leading monomials first).
inline InvariantBasis invariant_span(const MatrixGroup& G, const std::vector<Exponent>& cols,
                                     std::size_t column_budget = kDefaultColumnBudget) {
    if (cols.size() > column_budget) fail(ErrorKind::BudgetExceeded, "monomial basis exceeds the column budget");
    const Field& f = G.field;
    const std::size_t n = G.dim;
    for (auto& g : G.generators)
        if (g.rows() != n || g.cols() != n) fail(ErrorKind::DimensionMismatch, "generator size differs from dimension");
    std::map<Exponent, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, code_t>>> entries(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiPoly m = MultiPoly::monomial(f, cols[c]);
        for (std::size_t gi = 0; gi < G.generators.size(); ++gi) {
            const MultiPoly d = act(G.generators[gi], m) - m;
            for (auto& [e, x] : d.terms()) {
                Exponent key = e;
                key.push_back(static_cast<std::uint16_t>(gi));
                auto it = row_of.emplace(std::move(key), row_of.size()).first;
                entries[c].push_back({it->second, x});
            }
        }
    }
    Matrix A(f, row_of.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, x] : entries[c]) A.set(r, c, x);
    const auto ker = linalg::kernel(A);
    InvariantBasis out;
    out.columns = cols.size();
    if (ker.empty()) return out;
    Matrix K(f, ker.size(), cols.size());
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t c = 0; c < cols.size(); ++c) K.set(i, c, ker[i][c]);
    const auto e = linalg::rref(K);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        MultiPoly p(f, n);
        for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], e.reduced.at(i, c));
        if (!is_fixed(p, G.generators)) fail(ErrorKind::InternalInconsistency, "kernel vector is not invariant");
        out.basis.push_back(std::move(p));
    }
    return out;
}

inline InvariantBasis invariant_space(const MatrixGroup& G, unsigned degree,
                                      std::size_t column_budget = kDefaultColumnBudget) {
    auto out = invariant_span(G, monomials_of_degree(G.dim, degree), column_budget);
    out.degree = degree;
    return out;
}

inline InvariantBasis invariant_space(const MatrixGroup& G, const Exponent& bound,
                                      std::size_t column_budget = kDefaultColumnBudget) {
    if (bound.size() != G.dim) fail(ErrorKind::DimensionMismatch, "bound length differs from dimension");
    std::uint64_t cols = 1;
    for (auto b : bound) {
        cols *= b + 1u;
        if (cols > column_budget) fail(ErrorKind::BudgetExceeded, "monomial box exceeds the column budget");
    }
    auto out = invariant_span(G, monomials_in_box(bound), column_budget);
    out.bound = bound;
    return out;
}

// ---- remainder table (q = 3, α = 3, symbolic a, b) ----

/// Variables of the symbolic ring, in index order.
inline const std::vector<std::string>& table_names() {
    static const std::vector<std::string> n{"x", "y", "z", "a", "b"};
    return n;
}

inline const std::vector<std::string>& table_rows() {
    static const std::vector<std::string> r{"x^3", "y^3", "z^3", "x^2 y", "x y^2", "x^2 z", "x z^2", "y^2 z", "y z^2", "x y z"};
    return r;
}

/// Reference remainder table (columns 1, x, x^2, x^3) for g = [[1,a,b],[0,1,a],[0,0,1]], with the
/// parameters left unreduced.
inline const std::vector<std::array<std::string, 4>>& tabulated_remainders() {
    static const std::vector<std::array<std::string, 4>> t{
        {"0", "0", "0", "0"},
        {"0", "0", "0", "a"},
        {"a y^3", "0", "0", "b"},
        {"0", "0", "0", "a"},
        {"0", "0", "2 a y", "a^2"},
        {"0", "0", "a y", "b"},
        {"0", "a^2 y^2 + 2 a y z + z^2", "2 a b y + 2 b z", "b^2"},
        {"a y^3 + y^2 z", "2 a^2 y^2 + b y^2 + 2 a y z", "a^3 y + 2 a b y + a^2 z", "a^2 b"},
        {"a^2 y^3 + 2 a y^2 z + y z^2", "a^3 y^2 + 2 a b y^2 + 2 a^2 y z + 2 b y z + a z^2", "2 a^2 b y + b^2 y + 2 a b z",
         "a b^2"},
        {"0", "a y^2 + y z", "a^2 y + b y + a z", "a b"},
    };
    return t;
}

struct TableRow {
    std::string monomial;
    std::array<MultiPoly, 4> remainder;  // coefficients of act(g,m) - m
    std::array<MultiPoly, 4> image;      // coefficients of act(g,m)
    std::array<MultiPoly, 4> tabulated;
    bool matches_remainder = false;
    bool matches_image = false;

    bool matches() const { return matches_remainder || matches_image; }
    std::string convention() const {
        return matches_remainder ? "remainder" : matches_image ? "image" : "none";
    }
};

struct RemainderTable {
    Field field;
    std::vector<TableRow> rows;

    bool all_match() const {
        return std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.matches(); });
    }
    std::size_t remainder_matches() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.matches_remainder; }));
    }
};

/// g = [[1,a,b],[0,1,a],[0,0,1]] acting on degree-3 monomials over F_3 with
/// indeterminates a, b subject to a^3 = a, b^3 = b.
inline RemainderTable remainder_table() {
    const Field f = ff::build_field(3, 1);
    const auto& names = table_names();
    const std::size_t n = names.size();
    auto var = [&](std::size_t i) { return MultiPoly::variable(f, n, i); };
    const MultiPoly x = var(0), y = var(1), z = var(2), a = var(3), b = var(4);
    const std::vector<MultiPoly> img{x, y + a * x, z + a * y + b * x};
    const std::vector<std::size_t> params{3, 4};
    auto columns = [&](const MultiPoly& p) {
        std::array<MultiPoly, 4> c;
        for (unsigned k = 0; k < 4; ++k) c[k] = p.coefficient_of(0, k);
        return c;
    };
    RemainderTable out{f, {}};
    const auto& tab = tabulated_remainders();
    for (std::size_t r = 0; r < table_rows().size(); ++r) {
        TableRow row;
        row.monomial = table_rows()[r];
        const MultiPoly m = parse_multipoly(f, names, row.monomial);
        const MultiPoly im = substitute(m, img).reduce_frobenius(params, 3);
        row.image = columns(im);
        row.remainder = columns(im - m);
        for (unsigned k = 0; k < 4; ++k) row.tabulated[k] = parse_multipoly(f, names, tab[r][k]).reduce_frobenius(params, 3);
        row.matches_remainder = row.remainder == row.tabulated;
        row.matches_image = row.image == row.tabulated;
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// One line per row and reading: "<m> | <reading> | c0 | c1 | c2 | c3".
inline std::string render(const RemainderTable& t) {
    std::string s;
    for (auto& r : t.rows)
        for (int pass = 0; pass < 2; ++pass) {
            const auto& cs = pass == 0 ? r.remainder : r.image;
            s += r.monomial + " | " + (pass == 0 ? "remainder" : "image");
            for (auto& c : cs) s += " | " + to_string(c, table_names(), 3);
            s += "\n";
        }
    return s;
}

// ---- non-polynomiality ----

struct Factorization {
    std::vector<std::uint64_t> degrees;         // nondecreasing, product = |H|
    std::optional<unsigned> rejected_at;       // first degree where the dims disagree
    std::uint64_t predicted = 0, computed = 0;  // at rejected_at
};

struct PolynomialityCertificate {
    std::uint64_t q = 0;
    unsigned d = 1;
    std::size_t alpha = 0;
    std::uint64_t group_order = 0;                          // q^{d(α-1)}
    unsigned scanned_to = 0;
    std::vector<std::uint64_t> dims;                        // dims[n-1] = dim of degree-n invariants
    std::vector<std::optional<unsigned>> min_degree;        // smallest degree of an invariant involving v_j
    std::vector<std::optional<unsigned>> min_pure_leading;  // smallest degree with leading monomial v_j^n
    std::vector<Factorization> factorizations;
    std::uint64_t reflection_subgroup_order = 0;
    std::string verdict;  // "polynomial" | "not polynomial" | "undetermined"
    std::vector<std::string> reasons;
};

/// Coefficient of t^n in prod_i 1/(1 - t^{d_i}).
inline std::uint64_t weighted_count(const std::vector<std::uint64_t>& degs, unsigned n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (auto w : degs)
        for (std::size_t k = w; k <= n; ++k) c[k] += c[k - w];
    return c[n];
}

inline void factorizations_into(std::uint64_t n, std::size_t parts, std::uint64_t min,
                                std::vector<std::uint64_t>& cur, std::vector<std::vector<std::uint64_t>>& out) {
    if (parts == 0) {
        if (n == 1) out.push_back(cur);
        return;
    }
    for (std::uint64_t k = min; k <= n; ++k) {
        if (n % k) continue;
        cur.push_back(k);
        factorizations_into(n / k, parts - 1, k, cur, out);
        cur.pop_back();
    }
}

/// Leading monomial order for pure-power detection: lexicographic with the
/// highest-index variable dominant.
inline bool lex_greater(const Exponent& a, const Exponent& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

inline PolynomialityCertificate non_polynomiality_certificate(std::uint64_t q, unsigned d, std::size_t alpha,
                                                              std::optional<unsigned> max_degree = std::nullopt,
                                                              std::size_t column_budget = kDefaultColumnBudget) {
    require_dim(alpha);
    const auto ext = ff::make_extension(q, d);
    const Field& F = ext.field();
    PolynomialityCertificate c;
    c.q = q;
    c.d = d;
    c.alpha = alpha;
    c.group_order = cyclo::detail::ipow(F.order(), static_cast<unsigned>(alpha - 1));
    c.min_degree.assign(alpha, std::nullopt);
    c.min_pure_leading.assign(alpha, std::nullopt);
    if (alpha == 1) {
        c.reflection_subgroup_order = 1;
        c.verdict = "polynomial";
        c.reasons.push_back("trivial group");
        return c;
    }
    const auto G = delta_t(F, alpha);
    const unsigned top = max_degree.value_or(static_cast<unsigned>(std::min<std::uint64_t>(c.group_order, 64)));
    for (unsigned n = 1; n <= top; ++n) {
        const auto cols = monomials_of_degree(alpha, n);
        if (cols.size() > column_budget) break;
        // Lex order makes each pivot the leading monomial.
        auto lex = cols;
        std::sort(lex.begin(), lex.end(), lex_greater);
        const auto B = invariant_span(G, lex, column_budget);
        c.scanned_to = n;
        c.dims.push_back(B.basis.size());
        for (auto& p : B.basis) {
            Exponent lead = p.terms().begin()->first;
            for (auto& [e, x] : p.terms())
                if (lex_greater(e, lead)) lead = e;
            for (std::size_t j = 0; j < alpha; ++j) {
                if (p.involves(j) && !c.min_degree[j]) c.min_degree[j] = n;
                bool pure = lead[j] == n;
                if (pure && !c.min_pure_leading[j]) c.min_pure_leading[j] = n;
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> facs;
    std::vector<std::uint64_t> cur;
    factorizations_into(c.group_order, alpha, 1, cur, facs);
    bool any_open = false;
    for (auto& degs : facs) {
        Factorization fz{degs, std::nullopt, 0, 0};
        for (unsigned n = 1; n <= c.scanned_to; ++n) {
            const auto pred = weighted_count(degs, n);
            if (pred != c.dims[n - 1]) {
                fz.rejected_at = n;
                fz.predicted = pred;
                fz.computed = c.dims[n - 1];
                break;
            }
        }
        any_open = any_open || !fz.rejected_at;
        c.factorizations.push_back(std::move(fz));
    }

    // Subgroup generated by pseudoreflections (rank(g - I) = 1).
    MatrixGroup R{F, alpha, {}, false};
    for (auto& g : delta_t_elements(F, alpha))
        if (linalg::rank(g - Matrix::identity(F, alpha)) == 1) R.generators.push_back(g);
    c.reflection_subgroup_order = R.enumerate().size();

    const bool serre = c.reflection_subgroup_order != c.group_order;
    bool pure_product = true;
    std::uint64_t prod = 1;
    for (auto& m : c.min_pure_leading) {
        if (!m) pure_product = false;
        else prod *= *m;
    }
    pure_product = pure_product && prod == c.group_order;

    if (!any_open) c.reasons.push_back("every degree factorization of |H| contradicts the invariant dimensions");
    if (serre) c.reasons.push_back("group is not generated by pseudoreflections");
    if (pure_product) c.reasons.push_back("invariants with independent leading monomials have degree product |H|");
    if ((serre || !any_open) && pure_product)
        fail(ErrorKind::InternalInconsistency, "polynomiality certificate contradicts itself");
    c.verdict = pure_product ? "polynomial" : (serre || !any_open) ? "not polynomial" : "undetermined";
    return c;
}

// ---- σ(g) g^{-1} ----

/// Truncated product of first rows of unitriangular Toeplitz matrices.
template <class R>
std::vector<R> toeplitz_mul(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
    std::vector<R> out(a.size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

template <class R>
std::vector<R> toeplitz_inverse(const std::vector<R>& a, const R& zero) {
    std::vector<R> inv(a.size(), zero);
    inv[0] = a[0];  // a[0] = 1
    for (std::size_t k = 1; k < a.size(); ++k) {
        R s = zero;
        for (std::size_t l = 1; l <= k; ++l) s = s + a[l] * inv[k - l];
        inv[k] = zero - s;
    }
    return inv;
}

struct SymbolicSigmaMinusOne {
    Field field;                          // F_p
    std::vector<std::string> names;       // a1.., then a1q..
    std::vector<MultiPoly> first_row;     // of σ(g) g^{-1}
    std::vector<MultiPoly> closed_form;   // closed-form α = 3 entries (empty otherwise)
    bool matches_closed_form = false;
    std::vector<MultiPoly> difference;    // first_row - closed_form
};

/// Parameters a_k and their q-th powers are independent indeterminates.
inline SymbolicSigmaMinusOne sigma_minus_one_symbolic(std::uint64_t q, std::size_t alpha) {
    require_dim(alpha);
    const auto [p, r] = cyclo::detail::prime_power(q);
    if (p == 0) fail(ErrorKind::CompositeCharacteristic, std::to_string(q) + " is not a prime power");
    const Field f = ff::build_field(p, 1);
    const std::size_t m = alpha - 1, n = 2 * m;
    SymbolicSigmaMinusOne s{f, {}, {}, {}, false, {}};
    static const char* letters = "abcdefghijklmnopqrstuvw";
    for (std::size_t k = 0; k < m; ++k) s.names.push_back(m <= 23 ? std::string(1, letters[k]) : "a" + std::to_string(k + 1));
    for (std::size_t k = 0; k < m; ++k) s.names.push_back(s.names[k] + "q");
    const MultiPoly zero(f, n), one = MultiPoly::constant(f, n, 1);
    std::vector<MultiPoly> g{one}, sg{one};
    for (std::size_t k = 0; k < m; ++k) {
        g.push_back(MultiPoly::variable(f, n, k));
        sg.push_back(MultiPoly::variable(f, n, m + k));
    }
    s.first_row = toeplitz_mul(sg, toeplitz_inverse(g, zero), zero);
    if (alpha == 3) {
        const MultiPoly a = g[1], b = g[2], aq = sg[1], bq = sg[2];
        s.closed_form = {one, aq - a, a * (aq - a) + bq - b};
        for (std::size_t k = 0; k < 3; ++k) s.difference.push_back(s.first_row[k] - s.closed_form[k]);
        s.matches_closed_form = s.first_row == s.closed_form;
    }
    return s;
}

struct NumericSigmaMinusOne {
    std::uint64_t q = 0;
    unsigned d = 1;
    std::size_t alpha = 0;
    std::uint64_t instances = 0;
    bool all_toeplitz_unitriangular = true;   // σ(g) g^{-1} lands in ΔT_α
    bool all_in_difference_module = true;      // upper entries in the F_{q^d}-span of {x^q - x}
    std::vector<std::uint64_t> strict_members;  // per column k >= 1: entries that are themselves some x^q - x
    std::optional<std::vector<code_t>> strict_counterexample;  // first row g with an entry outside {x^q - x}
};

inline NumericSigmaMinusOne sigma_minus_one_numeric(std::uint64_t q, unsigned d, std::size_t alpha,
                                                    std::uint64_t budget = kDefaultBudget) {
    const auto ext = ff::make_extension(q, d);
    const Field& F = ext.field();
    const auto& fd = F.data();
    NumericSigmaMinusOne out;
    out.q = q;
    out.d = d;
    out.alpha = alpha;
    out.strict_members.assign(alpha, 0);
    std::set<code_t> diffs;
    for (auto& x : F.elements()) diffs.insert(fd.sub(fd.pow(x.code(), q), x.code()));
    const bool span_all = std::any_of(diffs.begin(), diffs.end(), [](code_t c) { return c != 0; });
    for (auto& g : delta_t_elements(F, alpha, budget)) {
        ++out.instances;
        const Matrix s = g.map_pow(q) * linalg::inverse(g);
        std::vector<code_t> row(alpha);
        for (std::size_t j = 0; j < alpha; ++j) row[j] = s.at(0, j);
        if (s != toeplitz(F, row) || row[0] != 1) out.all_toeplitz_unitriangular = false;
        for (std::size_t j = 1; j < alpha; ++j) {
            if (row[j] && !span_all) out.all_in_difference_module = false;
            if (diffs.count(row[j])) ++out.strict_members[j];
            else if (!out.strict_counterexample) {
                std::vector<code_t> gr(alpha);
                for (std::size_t k = 0; k < alpha; ++k) gr[k] = g.at(0, k);
                out.strict_counterexample = gr;
            }
        }
    }
    return out;
}

// ---- eigenspace criterion ----

inline std::vector<std::vector<code_t>> canonical_basis(const Field& f, const std::vector<std::vector<code_t>>& vs,
                                                        std::size_t n) {
    if (vs.empty()) return {};
    Matrix K(f, vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) K.set(i, j, vs[i][j]);
    const auto e = linalg::rref(K);
    std::vector<std::vector<code_t>> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        std::vector<code_t> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = e.reduced.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<code_t> frobenius(const Field& f, std::vector<code_t> v, std::uint64_t e) {
    for (auto& x : v) x = f.data().pow(x, e);
    return v;
}

/// A σ(v) == σ(A v), σ entrywise x -> x^q.
inline bool comp_cond(const Matrix& A, const std::vector<code_t>& v, std::uint64_t q) {
    const Field& f = A.field();
    return A.apply(frobenius(f, v, q)) == frobenius(f, A.apply(v), q);
}

struct EigenspaceReport {
    std::vector<std::vector<code_t>> matrix_power;  // ∩ ker(A^{q^{d-1}-1} - I)
    std::vector<std::vector<code_t>> semilinear;    // {v : A v^{(q)} = A^{(q)} v^{(q)} for all A}
    std::vector<bool> matrix_power_comp_cond;
    std::vector<bool> semilinear_comp_cond;
};

inline EigenspaceReport eigenspace_invariants(const std::vector<Matrix>& family, std::uint64_t q, unsigned d) {
    if (family.empty()) fail(ErrorKind::DimensionMismatch, "empty matrix family");
    const Field& f = family.front().field();
    const std::size_t n = family.front().rows();
    for (auto& A : family)
        if (A.rows() != n || A.cols() != n || A.field() != f)
            fail(ErrorKind::DimensionMismatch, "family members differ in size or field");
    const std::uint64_t qd1 = cyclo::detail::ipow(q, d - 1);
    std::vector<Matrix> eq, sl;
    for (auto& A : family) {
        eq.push_back(A.pow(qd1 - 1) - Matrix::identity(f, n));
        sl.push_back(A - A.map_pow(q));
    }
    EigenspaceReport r;
    r.matrix_power = canonical_basis(f, linalg::kernel(linalg::stack(eq, f, n)), n);
    std::vector<std::vector<code_t>> back;
    for (auto& w : linalg::kernel(linalg::stack(sl, f, n))) back.push_back(frobenius(f, w, qd1));
    r.semilinear = canonical_basis(f, back, n);
    auto check = [&](const std::vector<code_t>& v) {
        return std::all_of(family.begin(), family.end(), [&](const Matrix& A) { return comp_cond(A, v, q); });
    };
    for (auto& v : r.matrix_power) r.matrix_power_comp_cond.push_back(check(v));
    for (auto& v : r.semilinear) r.semilinear_comp_cond.push_back(check(v));
    return r;
}

} // namespace cyclo::invariant
