#include <gtest/gtest.h>

#include <numeric>

#include "cyclo/models.hpp"
#include "cyclo/ramify.hpp"

using namespace cyclo;
using ff::Element;
using poly::Polynomial;

namespace {

Polynomial derivative(const Polynomial& f) {
    std::vector<Element> cs;
    for (int i = 1; i <= f.degree(); ++i) cs.push_back(f.coeff(static_cast<std::size_t>(i)) * f.field().from_int(i));
    return Polynomial::from_elements(f.field(), cs);
}

} // namespace

TEST(Kummer, ExponentsSatisfyCyclicSystem) {
    for (std::uint64_t q : {2, 3, 4})
        for (unsigned s : {1u, 2u, 3u}) {
            const auto m = models::kummer_exponents(q, s);
            const std::uint64_t n = cyclo::detail::ipow(q, s) - 1;
            ASSERT_EQ(m.modulus, n);
            ASSERT_EQ(m.exponents.size(), s);
            std::uint64_t sum = 0, geo = 0, pw = 1;
            for (unsigned i = 0; i < s; ++i) {
                EXPECT_EQ(m.raw_exponents[i], pw);
                // b_{i+1} = q b_i, and b_1 = q b_s because q^s = 1 mod n.
                EXPECT_EQ((q * m.exponents[(i + s - 1) % s]) % std::max<std::uint64_t>(n, 1), m.exponents[i] % std::max<std::uint64_t>(n, 1));
                EXPECT_EQ(std::gcd(m.exponents[i], n), 1u);
                sum += m.raw_exponents[i];
                geo += pw;
                pw *= q;
            }
            EXPECT_EQ(sum, geo);
            const auto c = models::check_kummer(m);
            EXPECT_TRUE(c.b1_is_one && c.recurrence && c.recurrence_mu_prime && c.coprime && c.sum_mod && c.sum_exact)
                << q << " " << s;
            for (auto e : models::boseck_indices(m)) EXPECT_EQ(e, n);
        }
}

TEST(Kummer, InverseMod) {
    for (std::uint64_t n = 1; n < 40; ++n)
        for (std::uint64_t a = 0; a < n; ++a) {
            const auto inv = models::inverse_mod(a, n);
            std::optional<std::uint64_t> brute;
            for (std::uint64_t x = 0; x < n && !brute; ++x)
                if ((a * x) % n == 1 % n) brute = x;
            EXPECT_EQ(inv, brute) << a << " mod " << n;
        }
}

TEST(Kummer, TameModelText) {
    EXPECT_EQ(models::tame_model(2, 1), "L^1 = -(T - 1)^2");
    EXPECT_EQ(models::tame_model(2, 2), "L^3 = (T - g)^2(T - g^2)^4");
    EXPECT_EQ(models::tame_model(3, 1), "L^2 = -(T - 2)^3");
    EXPECT_EQ(models::tame_model(3, 2), "L^8 = (T - g)^3(T - g^3)^9");
}

TEST(ZValues, MatchDerivativeAtRoots) {
    for (std::uint64_t q : {2, 3, 4})
        for (unsigned s : {1u, 2u, 3u}) {
            if (cyclo::detail::ipow(q, s) > 64) continue;
            const auto ext = ff::make_extension(q, s);
            const auto P = ramify::first_irreducible(ext.base(), s);
            const auto z = models::z_values(P, ext);
            const auto dP = derivative(poly::embed(P, ext.embedding()));
            ASSERT_EQ(z.Z.size(), s);
            for (unsigned i = 0; i < s; ++i) EXPECT_EQ(z.Z[i], ext.field().one() - dP(z.roots[i]));
            EXPECT_TRUE(z.frobenius_relation);
            EXPECT_EQ(z.target_order, cyclo::detail::ipow(q, s) - 1);
        }
}

TEST(ZValues, VanishesForQ2S2) {
    const auto ext = ff::make_extension(2, 2);
    const auto z = models::z_values(poly::parse_poly("1,1,1", ext.base()), ext);
    EXPECT_TRUE(z.Z[0].is_zero());
    EXPECT_FALSE(z.orders[0].has_value());
    EXPECT_FALSE(z.all_primitive());
}

TEST(Tower, CertificatesOverSmallFields) {
    for (std::uint64_t Q : {2, 3, 4, 5})
        for (unsigned alpha : {2u, 3u}) {
            const auto F = ff::make_extension(Q, 1).base();
            for (auto& rho : F.elements()) {
                const auto c = models::verify_as_tower(F, rho, alpha);
                EXPECT_TRUE(c.ok()) << Q << " " << alpha << " " << ff::to_string(rho);
            }
        }
    const auto F = ff::build_field(2, 1);
    EXPECT_THROW(models::verify_as_tower(F, F.one(), 4), Error);
}

TEST(Tower, RelationRingReductions) {
    const auto F = ff::build_field(3, 1);
    const models::RelationRing R(F, F.one(), 2);
    const auto lam = R.lambda();
    // λ^{Q-1} = -(T - ρ)
    EXPECT_TRUE((lam * lam + R.constant(R.wp())).is_zero());
    // U_2^Q = U_2 - 1/(T - ρ)
    const auto u = R.U(2);
    const auto lhs = R.pow_q(u);
    const auto rhs = u - R.constant(Polynomial::constant(F.one()), 1);
    EXPECT_TRUE((lhs - rhs).is_zero());
    EXPECT_THROW(R.U(3), Error);
}

TEST(CharacterSum, ObligationOnlyForFrobeniusStableCoefficients) {
    const auto ext = ff::make_extension(2, 2);
    const auto P = poly::parse_poly("1,1,1", ext.base());
    const auto& F = ext.field();
    EXPECT_TRUE(models::as_character_sum(P, ext).obligation_holds);
    const auto g = F.generator();
    EXPECT_TRUE(models::as_character_sum(P, ext, std::vector<Element>{g, g.pow(2)}).obligation_holds);
    const auto bad = models::as_character_sum(P, ext, std::vector<Element>{g, g});
    EXPECT_FALSE(bad.obligation_holds);
    EXPECT_FALSE(bad.difference_numerator.is_zero());
    EXPECT_THROW(models::as_character_sum(P, ext, std::vector<Element>{g}), Error);
}
