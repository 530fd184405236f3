#include <gtest/gtest.h>

#include "cyclo/galois.hpp"
#include "cyclo/ramify.hpp"

using namespace cyclo;
using ramify::i64;
using ramify::wide;

namespace {

wide wp(wide b, unsigned e) {
    wide r = 1;
    while (e--) r *= b;
    return r;
}

// Different exponent of a wild P^α-extension whose P has degree k, straight from
// the definition α Q^α - (α+1) Q^{α-1} with Q = q^k.
wide delta(wide q, unsigned k, unsigned alpha) { return alpha * wp(q, k * alpha) - (alpha + 1) * wp(q, k * (alpha - 1)); }

struct Inst {
    std::uint64_t q;
    unsigned d, s, alpha;
};

std::vector<Inst> grid() {
    std::vector<Inst> out;
    for (std::uint64_t q : {2, 3})
        for (unsigned d : {1u, 2u, 4u})
            for (unsigned s = 1; s <= d; ++s)
                if (d % s == 0)
                    for (unsigned alpha = 1; alpha <= 4; ++alpha) out.push_back({q, d, s, alpha});
    return out;
}

} // namespace

TEST(Ramify, HandComputedValues) {
    const auto a = ramify::different_main(2, 2, 1, 2);
    EXPECT_EQ(a.A(), 8);
    EXPECT_EQ(a.B(), 2);
    const auto b = ramify::different_main(3, 2, 1, 2);
    EXPECT_EQ(b.A(), 27);
    EXPECT_EQ(b.B(), 3);
    EXPECT_EQ(ramify::ram_index(2, 2, 1, 2).value(), 6);
    EXPECT_EQ(ramify::ram_index(3, 2, 1, 2).value(), 12);
}

TEST(Ramify, ClosedFormsAgainstDefinition) {
    for (auto [q, d, s, alpha] : grid()) {
        const auto r = ramify::different_main(q, d, s, alpha);
        const wide Q = static_cast<wide>(q);
        const wide e = (wp(Q, d * alpha) - wp(Q, d * (alpha - 1))) / (wp(Q, s * alpha) - wp(Q, s * (alpha - 1)));
        EXPECT_EQ(static_cast<wide>(r.A()), delta(Q, d, alpha) - e * delta(Q, s, alpha)) << q << d << s << alpha;
        // ∞: tame of index q^d-1 on top, index q-1 with exponent q-2 below.
        const wide B = (wp(Q, d) - 2) - (Q - 2) * ((wp(Q, d) - 1) / (Q - 1));
        EXPECT_EQ(static_cast<wide>(r.B()), B);
        EXPECT_EQ(r.A_unsimplified, r.A_simplified);
        EXPECT_EQ(r.B_unsimplified, r.B_simplified);
        EXPECT_TRUE(r.telescoping_agrees());
        if (s == d) EXPECT_EQ(r.A(), 0);
    }
}

TEST(Ramify, ConormPathsCommute) {
    const ramify::Tower tw(3, 4, 2, 3);
    using ramify::Level;
    using ramify::PlaceKind;
    const ramify::Divisor D{{{PlaceKind::Finite, Level::Base, 0}, 5}, {{PlaceKind::Infinite, Level::Base, 0}, -2}};
    const auto via_const = tw.conorm(D, Level::Base, Level::Top);
    const auto via_kq = tw.conorm(tw.conorm(tw.conorm(D, Level::Base, Level::Kq), Level::Kq, Level::ConstKq),
                                  Level::ConstKq, Level::Top);
    EXPECT_EQ(via_const, via_kq);
    EXPECT_EQ(via_const.exponent({PlaceKind::Finite, Level::Top, 2}), 5 * (81 * 81 * 81 - 81 * 81));
}

TEST(Ramify, DivisorAlgebra) {
    using ramify::Level;
    using ramify::PlaceKind;
    const ramify::PlaceLabel p{PlaceKind::Finite, Level::Kq, 1}, inf{PlaceKind::Infinite, Level::Kq, 0};
    const ramify::Divisor a{{p, 3}, {inf, -1}}, b{{p, -3}};
    EXPECT_EQ((a * b).exponent(p), 0);
    EXPECT_EQ((a * b).terms().size(), 1u);
    EXPECT_TRUE((a / a).is_trivial());
    EXPECT_EQ(a.pow(4).exponent(inf), -4);
    EXPECT_EQ(ramify::to_string(ramify::Divisor{}), "(1)");
    EXPECT_EQ(ramify::to_string(a), "P_1[K_q]^3 B_inf[K_q]^-1");
}

TEST(Ramify, DivisorDT) {
    const auto r = ramify::divisor_dT(3, 2, 1);
    EXPECT_EQ(r.S, 9);
    EXPECT_EQ(r.infinity_exponent, 1);
    EXPECT_EQ(r.total_infinity, -3);
    EXPECT_EQ(ramify::divisor_dT(2, 3, 2).S_degree_s, 3 * 64 - 4 * 16);
}

TEST(Ramify, Errors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    EXPECT_EQ(kind([] { ramify::different_main(2, 3, 2, 2); }), ErrorKind::DegreeNotDividing);
    EXPECT_EQ(kind([] { ramify::ram_index(4, 16, 1, 4); }), ErrorKind::Overflow);
    EXPECT_EQ(kind([] { ramify::lower_filtration(2, 2, 1, 0); }), ErrorKind::ParseError);
}

TEST(Filtration, LowerRanges) {
    const auto f = ramify::lower_filtration(2, 2, 1, 3, 0);
    ASSERT_EQ(f.lower.size(), 4u);
    EXPECT_EQ(f.lower[1].from, 1u);
    EXPECT_EQ(f.lower[1].to, 3u);
    EXPECT_EQ(f.lower[2].from, 4u);
    EXPECT_EQ(f.lower[2].to, 15u);
    EXPECT_EQ(f.lower[3].from, 16u);
    EXPECT_EQ(f.lower[0].order, static_cast<wide>(3 * 16));
    EXPECT_FALSE(f.H.enumerated.has_value());
}

TEST(Filtration, EnumeratedGroupsAgreeWithCounts) {
    for (auto [q, d, s, alpha] : std::vector<Inst>{{2, 2, 1, 2}, {2, 2, 2, 2}, {3, 2, 1, 2}, {2, 2, 1, 3}, {2, 4, 2, 2}}) {
        const auto f = ramify::lower_filtration(q, d, s, alpha);
        ASSERT_TRUE(f.H.enumerated.has_value());
        const auto& e = *f.H.enumerated;
        EXPECT_EQ(static_cast<wide>(*f.H.H_enumerated), f.H.H_expected);
        EXPECT_EQ(e.back(), 1u);
        for (std::size_t k = 1; k < e.size(); ++k) EXPECT_LE(e[k], e[k - 1]);
        auto ext = ff::make_extension(q, d);
        const auto G = galois::build_group(ext, poly::pow(ramify::first_irreducible(ext.base(), s), alpha));
        EXPECT_EQ(static_cast<wide>(G.size()), f.lower[0].order);
    }
}

TEST(Filtration, HilbertSumIsReportedOnLargeInstances) {
    const auto h = ramify::hilbert_sum_check(3, 4, 4, 4, 0);
    EXPECT_EQ(h.A, 0);
    EXPECT_FALSE(h.sum_enumerated.has_value());
    EXPECT_GT(h.sum_by_level, static_cast<wide>(INT64_MAX));
    EXPECT_EQ(ramify::to_string(static_cast<wide>(-120)), "-120");
}
