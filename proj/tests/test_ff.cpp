#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "cyclo/ff.hpp"

using namespace cyclo;
using ff::Element;
using ff::Field;

namespace {

// Schoolbook product of coefficient vectors reduced by the field modulus.
std::vector<std::uint64_t> oracle_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                      const std::vector<std::uint64_t>& m, std::uint64_t p) {
    const std::size_t r = m.size() - 1;
    std::vector<std::uint64_t> c(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = 2 * r - 1; k >= r; --k) {
        const auto t = c[k];
        if (!t) continue;
        c[k] = 0;
        for (std::size_t i = 0; i < r; ++i) c[k - r + i] = (c[k - r + i] + (p - t) * m[i]) % p;
    }
    c.resize(r);
    return c;
}

} // namespace

TEST(Field, DefaultModulusIsLexFirstIrreducible) {
    EXPECT_EQ(ff::build_field(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(ff::build_field(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(ff::build_field(2, 3).modulus(), (std::vector<std::uint64_t>{1, 0, 1, 1}));
    EXPECT_EQ(ff::build_field(5, 1).modulus(), (std::vector<std::uint64_t>{0, 1}));
}

TEST(Field, MultiplicationMatchesSchoolbook) {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        const Field f = ff::build_field(p, r);
        for (auto& a : f.elements())
            for (auto& b : f.elements())
                ASSERT_EQ((a * b).coeffs(), oracle_mul(a.coeffs(), b.coeffs(), f.modulus(), p));
    }
}

TEST(Field, AdditionIsCoefficientwise) {
    const Field f = ff::build_field(3, 3);
    for (auto& a : f.elements())
        for (auto& b : f.elements()) {
            auto s = (a + b).coeffs();
            auto d = (a - b).coeffs();
            for (unsigned i = 0; i < 3; ++i) {
                ASSERT_EQ(s[i], (a.coeffs()[i] + b.coeffs()[i]) % 3);
                ASSERT_EQ(d[i], (a.coeffs()[i] + 3 - b.coeffs()[i]) % 3);
            }
        }
}

TEST(Field, InversesAndPowers) {
    const Field f = ff::build_field(2, 4);
    for (auto& a : f.elements()) {
        if (a.is_zero()) continue;
        EXPECT_TRUE((a * a.inverse()).is_one());
        Element acc = f.one();
        for (int k = 0; k < 7; ++k) acc *= a;
        EXPECT_EQ(acc, a.pow(7));
        EXPECT_TRUE(a.pow(f.order() - 1).is_one());
    }
}

TEST(Field, GeneratorIsPrimitive) {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 4}, {3, 2}, {7, 1}}) {
        const Field f = ff::build_field(p, r);
        std::set<ff::code_t> seen;
        Element x = f.one();
        for (std::uint64_t i = 0; i + 1 < f.order(); ++i) {
            seen.insert(x.code());
            x *= f.generator();
        }
        EXPECT_EQ(seen.size(), f.order() - 1);
        EXPECT_EQ(ff::mult_order(f.generator()), f.order() - 1);
    }
}

TEST(Field, MultOrderMatchesRepeatedMultiplication) {
    const Field f = ff::build_field(3, 2);
    for (auto& a : f.elements()) {
        if (a.is_zero()) continue;
        std::uint64_t k = 1;
        for (Element x = a; !x.is_one(); x *= a) ++k;
        EXPECT_EQ(ff::mult_order(a), k);
        EXPECT_EQ(f.generator().pow(ff::log(a)), a);
    }
}

TEST(Field, RootsOfUnity) {
    const Field f = ff::build_field(2, 4);
    for (std::uint64_t n : {1, 3, 5, 15}) EXPECT_EQ(ff::mult_order(ff::nth_root_of_unity(f, n)), n);
    try {
        ff::nth_root_of_unity(f, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoSuchRoot);
    }
}

TEST(Field, SubfieldsAndFrobenius) {
    const Field f = ff::build_field(2, 4);
    EXPECT_EQ(ff::subfield_elements(f, 2).size(), 2u);
    EXPECT_EQ(ff::subfield_elements(f, 4).size(), 4u);
    EXPECT_EQ(ff::subfield_elements(f, 16).size(), 16u);
    for (auto& a : f.elements())
        for (auto& b : f.elements()) EXPECT_EQ(ff::frobenius(a + b, 2), ff::frobenius(a, 2) + ff::frobenius(b, 2));
    EXPECT_THROW(ff::frobenius(f.one(), 8), Error);
}

TEST(Field, Errors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    EXPECT_EQ(kind([] { ff::build_field(4, 1); }), ErrorKind::CompositeCharacteristic);
    EXPECT_EQ(kind([] { ff::build_field(2, 2, std::vector<std::uint64_t>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
    EXPECT_EQ(kind([] { ff::build_field(2, 30); }), ErrorKind::BudgetExceeded);
    EXPECT_EQ(kind([] { ff::make_extension(6, 2); }), ErrorKind::CompositeCharacteristic);
    const Field f = ff::build_field(3, 1);
    EXPECT_EQ(kind([&] { ff::mult_order(f.zero()); }), ErrorKind::ZeroElement);
    const Field g = ff::build_field(5, 1);
    EXPECT_EQ(kind([&] { (void)(f.one() + g.one()); }), ErrorKind::FieldMismatch);
}

TEST(Field, CustomModulusAccepted) {
    const Field f = ff::build_field(3, 2, std::vector<std::uint64_t>{2, 1, 1});
    EXPECT_EQ(f.order(), 9u);
    const Element x = f.from_coeffs({0, 1});
    EXPECT_EQ(x * x + x + f.from_int(2), f.zero());
}

TEST(Embedding, IsRingHomomorphism) {
    for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{4, 2}, {3, 2}, {2, 3}, {4, 3}, {9, 2}}) {
        const auto ext = ff::make_extension(q, d);
        const auto base = ext.base().elements();
        std::set<ff::code_t> image;
        for (auto& a : base) {
            image.insert(ext.embed(a).code());
            EXPECT_TRUE(ff::in_subfield(ext.embed(a), q));
            EXPECT_EQ(ext.embedding().preimage(ext.embed(a)), a);
            for (auto& b : base) {
                ASSERT_EQ(ext.embed(a * b), ext.embed(a) * ext.embed(b));
                ASSERT_EQ(ext.embed(a + b), ext.embed(a) + ext.embed(b));
            }
        }
        EXPECT_EQ(image.size(), q);
    }
}

TEST(Embedding, SigmaHasOrderD) {
    const auto ext = ff::make_extension(2, 4);
    for (auto& x : ext.field().elements()) {
        Element y = x;
        for (int i = 0; i < 4; ++i) y = ext.sigma(y);
        EXPECT_EQ(y, x);
    }
    EXPECT_NE(ext.sigma(ext.field().generator()), ext.field().generator());
}

TEST(Embedding, RandomizedPreimage) {
    auto rng = test::rng(1);
    const auto ext = ff::make_extension(3, 3);
    for (int i = 0; i < 200; ++i) {
        const Element x = ext.field().element(static_cast<ff::code_t>(rng() % ext.field().order()));
        EXPECT_EQ(ext.embedding().preimage(x).has_value(), ff::in_subfield(x, 3));
    }
}

TEST(Field, ToString) {
    const Field f = ff::build_field(2, 2);
    EXPECT_EQ(ff::to_string(f.zero()), "0");
    EXPECT_EQ(ff::to_string(f.one()), "1");
    EXPECT_EQ(ff::to_string(f.generator()), "g");
    EXPECT_EQ(ff::to_string(f.generator().pow(2)), "g^2");
}
