#include <gtest/gtest.h>

#include "common.hpp"
#include "cyclo/carlitz.hpp"

using namespace cyclo;
using ff::Field;
using poly::Polynomial;
using poly::Residue;

namespace {

Polynomial random_poly(const Field& f, std::mt19937_64& rng, int maxdeg) {
    std::vector<ff::code_t> v(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& c : v) c = static_cast<ff::code_t>(rng() % f.order());
    return Polynomial(f, v);
}

// C(M)(u) from the defining recursion C(T)u = Tu + u^Q, extended linearly.
Polynomial oracle_apply(const Polynomial& M, const Polynomial& u) {
    const Field& f = M.field();
    Polynomial acc(f), cur = u;
    for (int k = 0; k <= M.degree(); ++k) {
        acc += cur * M.coeff(static_cast<std::size_t>(k));
        cur = Polynomial::T(f) * cur + poly::pow(cur, f.order());
    }
    return acc;
}

} // namespace

TEST(Carlitz, SquareOfT) {
    for (std::uint64_t q : {2, 3}) {
        const Field f = ff::build_field(q, 1);
        const auto C = carlitz::carlitz_poly(poly::parse_poly("0,0,1", f));
        ASSERT_EQ(C.degree(), 2);
        const auto T = Polynomial::T(f);
        EXPECT_EQ(C.coeff(0), T * T);
        EXPECT_EQ(C.coeff(1), poly::pow(T, q) + T);
        EXPECT_EQ(C.coeff(2), Polynomial::constant(f.one()));
    }
}

TEST(Carlitz, ShapeOfCoefficients) {
    auto rng = test::rng(7);
    const Field f = ff::build_field(2, 2);
    for (int t = 0; t < 40; ++t) {
        const auto M = random_poly(f, rng, 4);
        if (M.is_zero()) continue;
        const auto C = carlitz::carlitz_poly(M);
        EXPECT_EQ(C.degree(), M.degree());
        EXPECT_EQ(C.coeff(0), M);
        EXPECT_EQ(C.coeff(static_cast<std::size_t>(M.degree())), Polynomial::constant(M.leading()));
    }
    EXPECT_THROW(carlitz::carlitz_poly(Polynomial(f)), Error);
}

TEST(Carlitz, ApplyMatchesRecursion) {
    auto rng = test::rng(8);
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = ff::make_extension(q, 1).base();
        for (int t = 0; t < 20; ++t) {
            const auto M = random_poly(f, rng, 3), u = random_poly(f, rng, 2);
            if (M.is_zero()) continue;
            EXPECT_EQ(carlitz::carlitz_apply(M, u), oracle_apply(M, u));
        }
    }
}

TEST(Carlitz, ModuleStructure) {
    auto rng = test::rng(9);
    const Field f = ff::build_field(3, 1);
    for (int t = 0; t < 20; ++t) {
        const auto M = random_poly(f, rng, 2), N = random_poly(f, rng, 2);
        const auto u = random_poly(f, rng, 2), v = random_poly(f, rng, 2);
        if (M.is_zero() || N.is_zero() || (M + N).is_zero()) continue;
        EXPECT_EQ(carlitz::carlitz_apply(M * N, u), carlitz::carlitz_apply(M, carlitz::carlitz_apply(N, u)));
        EXPECT_EQ(carlitz::carlitz_apply(M + N, u), carlitz::carlitz_apply(M, u) + carlitz::carlitz_apply(N, u));
        EXPECT_EQ(carlitz::carlitz_apply(M, u + v), carlitz::carlitz_apply(M, u) + carlitz::carlitz_apply(M, v));
        EXPECT_EQ(carlitz::carlitz_poly(M * N), carlitz::carlitz_poly(M).compose(carlitz::carlitz_poly(N)));
    }
}

TEST(Carlitz, ApplyInQuotient) {
    auto rng = test::rng(10);
    const Field f = ff::build_field(2, 1);
    const auto N = poly::parse_poly("1,1,0,1", f);
    for (int t = 0; t < 30; ++t) {
        const auto M = random_poly(f, rng, 3), u = random_poly(f, rng, 4);
        if (M.is_zero()) continue;
        EXPECT_EQ(carlitz::carlitz_apply(M, Residue(N, u)), Residue(N, carlitz::carlitz_apply(M, u)));
    }
}

TEST(Carlitz, TwistIsFrobenius) {
    auto rng = test::rng(11);
    const Field f = ff::build_field(3, 1);
    for (int t = 0; t < 20; ++t) {
        const auto c = random_poly(f, rng, 4);
        EXPECT_EQ(carlitz::twist(c, 3), poly::pow(c, 3));
        EXPECT_EQ(carlitz::twist(c, 9), poly::pow(c, 9));
    }
}

TEST(Torsion, ToeplitzOfResidue) {
    const auto ext = ff::make_extension(2, 2);
    const Field& F = ext.field();
    const auto rho = F.generator();
    const auto wp = Polynomial::linear(rho);
    const auto M = poly::pow(wp, 3);
    const Residue D(M, poly::parse_poly("1,1", F));
    const auto t = carlitz::toeplitz_of(D);
    EXPECT_EQ(poly::reassemble(t.first_row, wp), D.rep());
    EXPECT_EQ(carlitz::linear_base(M), wp);
    EXPECT_THROW(carlitz::toeplitz_of(Residue(M, wp)), Error);
}

TEST(Torsion, ActionIsMultiplicative) {
    auto rng = test::rng(12);
    const auto ext = ff::make_extension(3, 2);
    const Field& F = ext.field();
    const auto M = poly::pow(Polynomial::linear(F.generator().pow(4)), 3);
    auto random_unit = [&] {
        while (true) {
            Residue D(M, random_poly(F, rng, 2));
            if (poly::is_unit(D)) return D;
        }
    };
    for (int t = 0; t < 50; ++t) {
        const auto D1 = random_unit(), D2 = random_unit();
        carlitz::TorsionBasisVector v{{F.element(static_cast<ff::code_t>(rng() % 9)), F.element(static_cast<ff::code_t>(rng() % 9)),
                                       F.element(static_cast<ff::code_t>(rng() % 9))}};
        EXPECT_EQ(carlitz::torsion_action(D1 * D2, v), carlitz::torsion_action(D1, carlitz::torsion_action(D2, v)));
        const auto t1 = carlitz::toeplitz_of(D1), t2 = carlitz::toeplitz_of(D2);
        const auto prod = (t1 * t2).to_matrix();
        const auto ref = t1.to_matrix() * t2.to_matrix();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(prod.at(i, j), ref.at(i, j));
    }
    const Residue one(M, Polynomial::constant(F.one()));
    carlitz::TorsionBasisVector v{{F.one(), F.generator(), F.zero()}};
    EXPECT_EQ(carlitz::torsion_action(one, v), v);
    EXPECT_THROW(carlitz::torsion_action(one, carlitz::TorsionBasisVector{{F.one()}}), Error);
}
