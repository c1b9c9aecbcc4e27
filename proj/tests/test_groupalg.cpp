#include <gtest/gtest.h>

#include "qac/groupalg.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace qac;
using namespace qac::testing;

namespace {

GroupRing ring_of(std::uint64_t q, const std::string& group) {
    return GroupRing(Field::of_order(q), SubgroupContext::whole(AbelianGroup::parse(group)));
}

GroupRingElement from_list(const GroupRing& R, std::vector<elem_t> c) { return GroupRingElement::from_coeffs(R, c); }

struct Case {
    std::uint64_t q;
    std::string group, gens;
};

const std::vector<Case> kCases{
    {2, "Z3", "(1)"},          {2, "Z3xZ3", "(1,0);(0,1)"}, {2, "Z7", "(1)"},      {2, "Z15", "(1)"},
    {3, "Z4", "(2)"},          {3, "Z2xZ4", "(1,0);(0,1)"}, {3, "Z8", "(2)"},      {4, "Z5", "(1)"},
    {5, "Z3xZ6", "(1,0);(0,1)"}, {5, "Z12", "(1)"},           {7, "Z2xZ2", "(1,0);(0,1)"},
    {8, "Z9", "(1)"},          {9, "Z8", "(1)"},            {2, "Z3xZ6", "(1,0);(0,2)"}, {25, "Z6", "(1)"},
};

}  // namespace

TEST(Convolve, MonomialsAddExponents) {
    const auto R = ring_of(2, "Z3xZ2");
    const auto& H = R.group();
    const auto a = GroupRingElement::monomial(R, H.position_of(GroupElement{{1, 0}}));
    const auto b = GroupRingElement::monomial(R, H.position_of(GroupElement{{2, 0}}));
    EXPECT_EQ(convolve(a, b), GroupRingElement::one(R));
}

TEST(Convolve, IdentityAndIdempotentOfZ3) {
    const auto R = ring_of(2, "Z3");
    const auto u = random_element(R);
    EXPECT_EQ(convolve(u, GroupRingElement::one(R)), u);
    const auto all = from_list(R, {1, 1, 1});
    EXPECT_EQ(convolve(all, all), all);
}

TEST(Convolve, RingMismatchThrows) {
    EXPECT_THROW(convolve(GroupRingElement::one(ring_of(2, "Z3")), GroupRingElement::one(ring_of(5, "Z3"))),
                 std::invalid_argument);
}

TEST(Spectral, SmallExamplesOverF2Z3) {
    const auto R = ring_of(2, "Z3");
    const SpectralTransform T(R);
    ASSERT_EQ(T.classes().size(), 2u);
    EXPECT_EQ(T.forward(GroupRingElement::one(R)).values, (std::vector<elem_t>{1, 1}));
    const auto y = from_list(R, {0, 1, 1});
    EXPECT_EQ(T.forward(y).values, (std::vector<elem_t>{0, 1}));
    EXPECT_EQ(T.inverse(T.indicator({1})), y);
}

TEST(Spectral, RoundTripAndLinearity) {
    for (const auto& c : kCases) {
        const GroupRing R(Field::of_order(c.q), subgroup(c.group, c.gens));
        const SpectralTransform T(R);
        for (int rep = 0; rep < 40; ++rep) {
            const auto u = random_element(R), v = random_element(R);
            const auto su = T.forward(u), sv = T.forward(v);
            EXPECT_EQ(T.inverse(su), u) << R.describe();
            EXPECT_EQ(T.forward(add(u, v)), add(su, sv));
            const elem_t k = random_scalar(R.scalars());
            auto sk = su;
            for (auto& x : sk.values) x = T.splitting_field().mul(T.scalar_embedding()(k), x);
            EXPECT_EQ(T.forward(scale(k, u)), sk);
        }
    }
}

TEST(Spectral, ConvolutionTheoremExhaustiveOverF2) {
    for (const std::string g : {"Z3", "Z5", "Z7", "Z3xZ3"}) {
        const auto R = ring_of(2, g);
        const SpectralTransform T(R);
        const std::uint64_t total = std::uint64_t{1} << R.size();
        std::vector<SpectrumView> spec;
        std::vector<GroupRingElement> el;
        for (std::uint64_t i = 0; i < total; ++i) {
            el.push_back(element_at(R, i));
            spec.push_back(T.forward(el.back()));
        }
        // Pairs (i, j) with j >= i; thin out the 9-element case to every 7th i.
        const std::uint64_t stride = total > 256 ? 7 : 1;
        for (std::uint64_t i = 0; i < total; i += stride)
            for (std::uint64_t j = i; j < total; ++j)
                ASSERT_EQ(T.forward(convolve(el[i], el[j])), multiply(spec[i], spec[j])) << g << " " << i << " " << j;
    }
}

TEST(Spectral, ConvolutionTheoremRandomPairs) {
    int pairs = 0;
    for (const auto& c : kCases) {
        const GroupRing R(Field::of_order(c.q), subgroup(c.group, c.gens));
        const SpectralTransform T(R);
        for (int rep = 0; rep < 100; ++rep, ++pairs) {
            const auto u = random_element(R), v = random_element(R);
            ASSERT_EQ(T.forward(convolve(u, v)), multiply(T.forward(u), T.forward(v))) << R.describe();
        }
    }
    EXPECT_GE(pairs, 1000);
}

TEST(Spectral, IdempotentIffSpectrumIsZeroOne) {
    const auto R = ring_of(2, "Z7");
    const SpectralTransform T(R);
    for (std::uint64_t i = 0; i < 128; ++i) {
        const auto u = element_at(R, i);
        EXPECT_EQ(convolve(u, u) == u, T.forward(u).is_idempotent());
    }
}

TEST(Spectral, NonSemisimpleRejected) {
    EXPECT_THROW(SpectralTransform(ring_of(3, "Z6")), precondition_error);
    EXPECT_THROW(SpectralTransform(ring_of(2, "Z2xZ3")), precondition_error);
}

TEST(Spectral, SharedCharactersAcrossScalarFields) {
    // R and S spectra agree on elements of R lifted into S.
    const auto ctx = QacContext::make(AbelianGroup({3, 6}), parse_generators(AbelianGroup({3, 6}), "(1,0);(0,2)"), 2);
    const auto& RT = ctx.r_transform();
    const auto& ST = ctx.s_transform();
    EXPECT_EQ(RT.splitting_field(), ST.splitting_field());
    for (int rep = 0; rep < 20; ++rep) {
        const auto u = random_element(ctx.R());
        const auto U = embed(u, ctx.base_into_ext(), ctx.S());
        for (std::size_t h = 0; h < ctx.H().subgroup_order(); ++h) EXPECT_EQ(RT.evaluate(u, h), ST.evaluate(U, h));
    }
}

TEST(RingFrobenius, FreshmansDream) {
    const auto R = ring_of(2, "Z3");
    const auto u = from_list(R, {1, 1, 0});
    EXPECT_EQ(convolve(u, u), from_list(R, {1, 0, 1}));
    EXPECT_EQ(ring_frobenius(u, 2), from_list(R, {1, 0, 1}));
    const auto R4 = ring_of(4, "Z5");
    for (int rep = 0; rep < 50; ++rep) {
        const auto v = random_element(R4);
        EXPECT_EQ(ring_frobenius(v, 2), convolve(v, v));
    }
}

TEST(HammingWeight, Basics) {
    const auto R = ring_of(2, "Z3");
    EXPECT_EQ(hamming_weight(GroupRingElement::zero(R)), 0u);
    EXPECT_EQ(hamming_weight(from_list(R, {1, 1, 1})), 3u);
}

TEST(Phi, IndexOneIsIdentity) {
    const auto ctx = QacContext::make(SubgroupContext::whole(AbelianGroup({5})), 2);
    EXPECT_EQ(ctx.index(), 1u);
    const std::vector<elem_t> u{1, 0, 1, 1, 0};
    const auto a = phi_split(u, ctx);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].coeffs, u);
}

TEST(Phi, SingleCosetMonomial) {
    const AbelianGroup G({3, 6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(1,0);(0,2)"), 2);
    std::vector<elem_t> u(18, 0);
    u[ctx.H().coset_representatives()[1]] = 1;
    const auto a = phi_split(u, ctx);
    EXPECT_TRUE(a[0].is_zero());
    EXPECT_EQ(a[1], GroupRingElement::one(ctx.R()));
}

TEST(Phi, RoundTripExhaustiveOrder18) {
    const AbelianGroup G({3, 6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(1,0);(0,2)"), 2);
    for (std::uint64_t code = 0; code < (1u << 18); ++code) {
        std::vector<elem_t> u(18);
        std::size_t w = 0;
        for (std::size_t i = 0; i < 18; ++i) w += (u[i] = (code >> i) & 1);
        const auto a = phi_split(u, ctx);
        std::size_t wa = 0;
        for (const auto& x : a) wa += hamming_weight(x);
        ASSERT_EQ(wa, w);
        ASSERT_EQ(phi_merge(a, ctx), u);
    }
}

TEST(Phi, ModuleLinear) {
    const AbelianGroup G({2, 6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(0,2)"), 5);
    EXPECT_EQ(ctx.index(), 4u);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<elem_t> u(G.order());
        for (auto& x : u) x = random_scalar(ctx.base_field());
        const auto r = random_element(ctx.R());
        const auto lhs = phi_split(act_on_ambient(r, u), ctx);
        const auto a = phi_split(u, ctx);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(lhs[i], convolve(r, a[i]));
    }
}

TEST(Varphi, Examples) {
    const AbelianGroup G({6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(2)"), 2);
    ASSERT_EQ(ctx.index(), 2u);
    ASSERT_EQ(ctx.basis().elements, (std::vector<elem_t>{1, ctx.extension_field().generator_x()}));
    const auto one = GroupRingElement::one(ctx.R()), zero = GroupRingElement::zero(ctx.R());
    EXPECT_EQ(varphi({one, zero}, ctx), GroupRingElement::one(ctx.S()));
    const auto y = GroupRingElement::monomial(ctx.R(), 1);
    const Field& F4 = ctx.extension_field();
    EXPECT_EQ(varphi({y, y}, ctx), GroupRingElement::monomial(ctx.S(), 1, F4.add(1, F4.generator_x())));
}

TEST(Varphi, RoundTripExhaustiveAndLinear) {
    const AbelianGroup G({6});
    for (auto kind : {BasisKind::polynomial, BasisKind::normal}) {
        const auto ctx = QacContext::make(G, parse_generators(G, "(2)"), 2, kind);
        for (std::uint64_t code = 0; code < 64; ++code) {
            const Tuple a{element_at(ctx.R(), code & 7), element_at(ctx.R(), code >> 3)};
            ASSERT_EQ(varphi_inverse(varphi(a, ctx), ctx), a);
            const auto f = element_at(ctx.R(), (code * 5) & 7);
            Tuple fa;
            for (const auto& x : a) fa.push_back(convolve(f, x));
            EXPECT_EQ(varphi(fa, ctx), convolve(embed(f, ctx.base_into_ext(), ctx.S()), varphi(a, ctx)));
        }
    }
}

TEST(Varphi, RandomRoundTripLargerIndex) {
    const AbelianGroup G({3, 6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(1,0)"), 5);
    EXPECT_EQ(ctx.index(), 6u);
    for (int rep = 0; rep < 30; ++rep) {
        const auto a = random_tuple(ctx.R(), ctx.index());
        EXPECT_EQ(varphi_inverse(varphi(a, ctx), ctx), a);
    }
}

TEST(TextForm, TupleRoundTrip) {
    const auto R = ring_of(5, "Z3xZ6");
    const auto a = random_tuple(R, 2);
    EXPECT_EQ(parse_tuple(R, format_tuple(a)), a);
    EXPECT_THROW(GroupRingElement::parse(R, "1,2,3"), std::invalid_argument);
    const auto R4 = ring_of(4, "Z3");
    const auto b = random_tuple(R4, 3);
    EXPECT_EQ(parse_tuple(R4, format_tuple(b)), b);
}
