#pragma once

// The Carlitz module over F_Q[T] (Q = q^d): additive polynomials
// u -> sum c_i(T) u^{Q^i}, their composition, evaluation in an arbitrary
// F_Q[T]-algebra, and the digit-shift action on torsion coordinates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/poly.hpp"

namespace cyclo::carlitz {

using ff::Element;
using ff::Field;
using poly::Polynomial;
using poly::Residue;

/// c(T) -> c(T)^{Q^k} = c(T^{Q^k}) for c over F_Q.
inline Polynomial twist(const Polynomial& c, std::uint64_t Qk) {
    if (c.is_zero()) return c;
    const auto& cs = c.codes();
    std::vector<ff::code_t> v(static_cast<std::size_t>(c.degree()) * Qk + 1, 0);
    for (std::size_t j = 0; j < cs.size(); ++j) v[j * Qk] = cs[j];
    return Polynomial(c.field(), std::move(v));
}

/// u -> sum_i coeffs[i](T) u^{Q^i}.
class AdditivePolynomial {
public:
    AdditivePolynomial() = default;
    AdditivePolynomial(Field f, std::vector<Polynomial> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Field& field() const { return f_; }
    std::uint64_t Q() const { return f_.order(); }
    /// Index of the top term (deg M when built from M); -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Polynomial>& coeffs() const { return c_; }
    /// Carlitz binomial <M over i>.
    Polynomial coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Polynomial(f_); }

    AdditivePolynomial operator+(const AdditivePolynomial& o) const {
        std::vector<Polynomial> v(std::max(c_.size(), o.c_.size()), Polynomial(f_));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return {f_, std::move(v)};
    }

    /// (this ∘ o)(u) = this(o(u)).
    AdditivePolynomial compose(const AdditivePolynomial& o) const {
        if (c_.empty() || o.c_.empty()) return {f_, {}};
        std::vector<Polynomial> v(c_.size() + o.c_.size() - 1, Polynomial(f_));
        std::uint64_t Qi = 1;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * twist(o.c_[j], Qi);
            if (i + 1 < c_.size()) Qi = static_cast<std::uint64_t>(cyclo::detail::checked_mul(static_cast<std::int64_t>(Qi), static_cast<std::int64_t>(Q())));
        }
        return {f_, std::move(v)};
    }

    bool operator==(const AdditivePolynomial& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const AdditivePolynomial& o) const { return !(*this == o); }

private:
    Field f_;
    std::vector<Polynomial> c_;
};

/// C(T): u -> T u + u^Q.
inline AdditivePolynomial carlitz_T(const Field& f) {
    return {f, {Polynomial::T(f), Polynomial::constant(f.one())}};
}

/// C(M) = sum m_k C(T)^k over the field of M's coefficients (F_{q^d}).
inline AdditivePolynomial carlitz_poly(const Polynomial& M) {
    if (M.is_zero()) fail(ErrorKind::ZeroPolynomial, "Carlitz action of the zero polynomial");
    const Field& f = M.field();
    const auto CT = carlitz_T(f);
    AdditivePolynomial power(f, {Polynomial::constant(f.one())});
    AdditivePolynomial acc(f, {});
    for (int k = 0; k <= M.degree(); ++k) {
        if (k > 0) power = CT.compose(power);
        const Element m = M.coeff(static_cast<std::size_t>(k));
        if (m.is_zero()) continue;
        std::vector<Polynomial> scaled;
        for (auto& c : power.coeffs()) scaled.push_back(c * m);
        acc = acc + AdditivePolynomial(f, std::move(scaled));
    }
    return acc;
}

/// Evaluates C at u in an F_Q[T]-algebra described by `lift` (a polynomial
/// coefficient c(T) to the algebra) and `pow_q` (x -> x^Q).
template <class V, class Lift, class PowQ>
V carlitz_apply(const AdditivePolynomial& C, const V& u, Lift&& lift, PowQ&& pow_q) {
    V acc = lift(Polynomial(C.field()));
    V up = u;
    for (int i = 0; i <= C.degree(); ++i) {
        if (i > 0) up = pow_q(up);
        const auto& c = C.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) acc = acc + lift(c) * up;
    }
    return acc;
}

/// Evaluation in the polynomial ring F_Q[T] itself.
inline Polynomial carlitz_apply(const Polynomial& M, const Polynomial& u) {
    const auto C = carlitz_poly(M);
    const std::uint64_t Q = C.Q();
    return carlitz_apply(
        C, u, [](const Polynomial& c) { return c; }, [Q](const Polynomial& x) { return poly::pow(x, Q); });
}

/// Evaluation in a quotient F_Q[T]/(N).
inline Residue carlitz_apply(const Polynomial& M, const Residue& u) {
    const auto C = carlitz_poly(M);
    const std::uint64_t Q = C.Q();
    const auto mod = u.modulus_ptr();
    return carlitz_apply(
        C, u, [&mod](const Polynomial& c) { return Residue(mod, c); }, [Q](const Residue& x) { return x.pow(Q); });
}

/// Coordinates of sum_k coords[k-1] λ_k over the torsion basis λ_1..λ_α.
struct TorsionBasisVector {
    std::vector<Element> coords;
    std::size_t alpha() const { return coords.size(); }
    bool operator==(const TorsionBasisVector& o) const { return coords == o.coords; }
};

/// Upper-triangular Toeplitz matrix given by its first row.
struct ToeplitzMatrix {
    std::vector<Element> first_row;

    std::size_t alpha() const { return first_row.size(); }

    Element entry(std::size_t i, std::size_t j) const {
        return j >= i ? first_row[j - i] : first_row.front().field().zero();
    }

    linalg::Matrix to_matrix() const {
        const Field& f = first_row.front().field();
        linalg::Matrix m(f, alpha(), alpha());
        for (std::size_t i = 0; i < alpha(); ++i)
            for (std::size_t j = i; j < alpha(); ++j) m.set(i, j, first_row[j - i]);
        return m;
    }

    ToeplitzMatrix operator*(const ToeplitzMatrix& o) const {
        if (alpha() != o.alpha()) fail(ErrorKind::DimensionMismatch, "Toeplitz sizes differ");
        const Field& f = first_row.front().field();
        std::vector<Element> r(alpha(), f.zero());
        for (std::size_t i = 0; i < alpha(); ++i)
            for (std::size_t j = 0; i + j < alpha(); ++j) r[i + j] += first_row[i] * o.first_row[j];
        return {std::move(r)};
    }

    bool is_unitriangular() const { return first_row.front().is_one(); }
    bool operator==(const ToeplitzMatrix& o) const { return first_row == o.first_row; }
};

/// The root ρ of a modulus (T-ρ)^α, found by scanning the field.
inline Polynomial linear_base(const Polynomial& M) {
    for (auto& x : M.field().elements())
        if (M(x).is_zero()) return Polynomial::linear(x);
    fail(ErrorKind::NonLinearBase, "modulus has no root in its coefficient field");
}

inline ToeplitzMatrix toeplitz_of(const Residue& D, const Polynomial& wp) {
    auto digits = poly::padic_digits(D, wp);
    if (digits.front().is_zero()) fail(ErrorKind::NotAUnit, "leading digit vanishes");
    return {std::move(digits)};
}

inline ToeplitzMatrix toeplitz_of(const Residue& D) { return toeplitz_of(D, linear_base(D.modulus())); }

/// D * λ_k = sum_l a_l λ_{k-l}, λ_m = 0 for m <= 0.
inline TorsionBasisVector torsion_action(const Residue& D, const TorsionBasisVector& v) {
    const auto t = toeplitz_of(D);
    if (t.alpha() != v.alpha()) fail(ErrorKind::DimensionMismatch, "torsion vector length differs from α");
    const Field& f = t.first_row.front().field();
    std::vector<Element> out(v.alpha(), f.zero());
    for (std::size_t j = 0; j < v.alpha(); ++j)
        for (std::size_t l = 0; j + l < v.alpha(); ++l) out[j] += t.first_row[l] * v.coords[j + l];
    return {std::move(out)};
}

} // namespace cyclo::carlitz
