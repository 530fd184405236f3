#include <gtest/gtest.h>

#include "common.hpp"
#include "cyclo/poly.hpp"

using namespace cyclo;
using ff::Element;
using ff::Field;
using poly::Polynomial;

namespace {

Polynomial random_poly(const Field& f, std::mt19937_64& rng, int maxdeg) {
    std::vector<ff::code_t> v(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& c : v) c = static_cast<ff::code_t>(rng() % f.order());
    return Polynomial(f, v);
}

int mobius(unsigned n) {
    int m = 1;
    for (unsigned p = 2; p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    return m;
}

// Number of monic irreducibles of degree n over F_Q.
std::int64_t necklace(std::int64_t Q, unsigned n) {
    std::int64_t s = 0;
    for (unsigned k = 1; k <= n; ++k)
        if (n % k == 0) {
            std::int64_t pw = 1;
            for (unsigned i = 0; i < n / k; ++i) pw *= Q;
            s += mobius(k) * pw;
        }
    return s / n;
}

} // namespace

TEST(Poly, DivmodIdentity) {
    auto rng = test::rng(2);
    const Field f = ff::build_field(3, 2);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_poly(f, rng, 8);
        auto b = random_poly(f, rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = poly::divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(poly::divmod(Polynomial::T(f), Polynomial(f)), Error);
}

TEST(Poly, GcdAndBezout) {
    auto rng = test::rng(3);
    const Field f = ff::build_field(2, 3);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_poly(f, rng, 6), b = random_poly(f, rng, 6);
        if (a.is_zero() && b.is_zero()) continue;
        auto [g, s, u] = poly::xgcd(a, b);
        EXPECT_EQ(s * a + u * b, g);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        EXPECT_EQ(g, poly::gcd(a, b));
    }
}

TEST(Poly, IrreducibleCountsMatchNecklaceFormula) {
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = ff::make_extension(q, 1).base();
        for (unsigned n = 1; n <= 4; ++n) {
            std::uint64_t total = 1;
            for (unsigned i = 0; i < n; ++i) total *= q;
            std::int64_t count = 0;
            for (std::uint64_t rank = 0; rank < total; ++rank) count += poly::is_irreducible(poly::monic_by_rank(f, n, rank));
            EXPECT_EQ(count, necklace(static_cast<std::int64_t>(q), n)) << "q=" << q << " n=" << n;
        }
    }
}

TEST(Poly, FactorReconstructs) {
    auto rng = test::rng(4);
    const Field f = ff::build_field(3, 1);
    for (int t = 0; t < 100; ++t) {
        auto a = random_poly(f, rng, 7);
        if (a.degree() < 1) continue;
        Polynomial prod = Polynomial::constant(a.leading());
        for (auto& [P, e] : poly::factor(a)) {
            EXPECT_TRUE(P.is_monic());
            EXPECT_TRUE(poly::is_irreducible(P));
            prod *= poly::pow(P, e);
        }
        EXPECT_EQ(prod, a);
    }
}

TEST(Poly, UnitCountMatchesEnumeration) {
    for (std::uint64_t q : {2, 3}) {
        const Field f = ff::build_field(q, 1);
        for (unsigned deg = 1; deg <= 4; ++deg) {
            std::uint64_t total = 1;
            for (unsigned i = 0; i < deg; ++i) total *= q;
            for (std::uint64_t rank = 0; rank < total; ++rank) {
                const auto M = poly::monic_by_rank(f, deg, rank);
                std::uint64_t units = 0;
                for (std::uint64_t c = 0; c < total; ++c) {
                    std::vector<ff::code_t> v;
                    for (std::uint64_t x = c, i = 0; i < deg; ++i, x /= q) v.push_back(static_cast<ff::code_t>(x % q));
                    units += poly::gcd(Polynomial(f, v), M).degree() == 0;
                }
                ASSERT_EQ(poly::unit_count(M), units) << poly::to_string(M);
            }
        }
    }
}

TEST(Poly, ResidueArithmetic) {
    const Field f = ff::build_field(2, 1);
    const auto M = poly::parse_poly("1,1,1", f);
    const poly::Residue T(M, Polynomial::T(f));
    EXPECT_TRUE(T.pow(3).is_one());
    EXPECT_EQ(poly::unit_order(T), 3u);
    EXPECT_TRUE((T * T.inverse()).is_one());
    const poly::Residue zero(M, Polynomial(f));
    EXPECT_THROW(zero.inverse(), Error);
    const poly::Residue other(poly::parse_poly("1,0,1", f), Polynomial::T(f));
    try {
        (void)(T + other);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ModulusMismatch);
    }
}

TEST(Poly, PadicDigitsRoundTrip) {
    auto rng = test::rng(5);
    const Field f = ff::build_field(3, 2);
    const auto wp = Polynomial::linear(f.generator());
    const auto M = poly::pow(wp, 4);
    for (int t = 0; t < 100; ++t) {
        const poly::Residue D(M, random_poly(f, rng, 6));
        const auto digits = poly::padic_digits(D, wp);
        ASSERT_EQ(digits.size(), 4u);
        EXPECT_EQ(poly::reassemble(digits, wp), D.rep());
    }
    EXPECT_THROW(poly::padic_digits(poly::Residue(M, wp), poly::pow(wp, 2)), Error);
    EXPECT_THROW(poly::padic_digits(poly::Residue(poly::pow(wp, 2) * Polynomial::T(f), wp), wp), Error);
}

TEST(Poly, SplitOverExtension) {
    const auto ext = ff::make_extension(2, 4);
    const auto P = poly::parse_poly("1,1,1", ext.base());
    const auto sd = poly::split_over_extension(P, ext);
    ASSERT_EQ(sd.roots.size(), 2u);
    const auto Pd = poly::embed(P, ext.embedding());
    for (auto& r : sd.roots) EXPECT_TRUE(Pd(r).is_zero());
    EXPECT_EQ(sd.roots[1], ext.sigma(sd.roots[0]));
    EXPECT_EQ(ext.sigma(sd.roots[1]), sd.roots[0]);

    auto kind = [&](const std::string& text, const ff::Extension& e) {
        try {
            poly::split_over_extension(poly::parse_poly(text, e.base()), e);
        } catch (const Error& err) {
            return err.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    EXPECT_EQ(kind("1,0,1", ext), ErrorKind::NotIrreducible);
    EXPECT_EQ(kind("1,1,0,1", ext), ErrorKind::DegreeNotDividing);
    EXPECT_EQ(kind("1", ext), ErrorKind::ConstantPolynomial);
}

TEST(Poly, EmbedRestrictRoundTrip) {
    auto rng = test::rng(6);
    const auto ext = ff::make_extension(4, 2);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_poly(ext.base(), rng, 5);
        EXPECT_EQ(poly::restrict_to(poly::embed(a, ext.embedding()), ext.embedding()), a);
    }
    EXPECT_FALSE(poly::restrict_to(Polynomial::linear(ext.field().generator()), ext.embedding()).has_value());
}

TEST(Poly, TextFormats) {
    const Field f = poly::parse_field("2^2");
    EXPECT_EQ(f.order(), 4u);
    EXPECT_EQ(poly::parse_field("3^2/2,1,1").modulus(), (std::vector<std::uint64_t>{2, 1, 1}));
    const auto P = poly::parse_poly("g,0,1", f);
    EXPECT_EQ(poly::to_string(P), "T^2 + g");
    EXPECT_EQ(poly::to_string(poly::parse_poly("[1,1],g^2,1", f)), "T^2 + g^2*T + g^2");
    EXPECT_EQ(poly::to_string(Polynomial(f)), "0");
    for (const char* bad : {"x", "g^", "[1,2", "1,,2"}) EXPECT_THROW(poly::parse_poly(bad, f), Error) << bad;
    EXPECT_THROW(poly::parse_field("6"), Error);
    EXPECT_THROW(poly::parse_field("2^2/1,0,1"), Error);
}
