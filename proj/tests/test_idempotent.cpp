#include <gtest/gtest.h>

#include <set>

#include "qac/idempotent.hpp"
#include "support.hpp"

using namespace qac;
using namespace qac::testing;

namespace {

QacContext worked_example() {
    const AbelianGroup G({3, 6});
    return QacContext::make(G, parse_generators(G, "(1,0);(0,2)"), 2);
}

GroupRingElement ring_pow(const GroupRingElement& x, std::uint64_t e) {
    auto r = GroupRingElement::one(x.ring), b = x;
    for (; e; e >>= 1) {
        if (e & 1) r = convolve(r, b);
        b = convolve(b, b);
    }
    return r;
}

std::set<std::vector<elem_t>> coefficient_set(const std::vector<GroupRingElement>& v) {
    std::set<std::vector<elem_t>> s;
    for (const auto& x : v) s.insert(x.coeffs);
    return s;
}

// Is every Y^h x (x in xs) in the span of {Y^h y}?
bool ideal_contains(const GroupRingElement& y, const std::vector<GroupRingElement>& xs) {
    linalg::Matrix rows;
    for (std::size_t h = 0; h < y.ring.size(); ++h) rows.push_back(shift(y, h).coeffs);
    const auto ech = linalg::rref(y.ring.scalars(), rows);
    for (const auto& x : xs)
        if (!linalg::in_span(y.ring.scalars(), ech, x.coeffs)) return false;
    return true;
}

struct RingCase {
    std::uint64_t q;
    std::string group, gens;
};

const std::vector<RingCase> kRandomRings{
    {2, "Z3", "(1)"},   {2, "Z7", "(1)"},          {2, "Z15", "(1)"},  {3, "Z4", "(1)"},
    {3, "Z2xZ8", "(1,0);(0,1)"}, {5, "Z12", "(1)"}, {4, "Z15", "(1)"},  {7, "Z2xZ2", "(1,0);(0,1)"},
    {9, "Z16", "(1)"},  {2, "Z3xZ6", "(1,0);(0,2)"},
};

}  // namespace

TEST(PrimitiveIdempotents, F2Z3) {
    const GroupRing R(Field::of_order(2), SubgroupContext::whole(AbelianGroup({3})));
    const auto e = primitive_idempotents(R);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].element.coeffs, (std::vector<elem_t>{1, 1, 1}));
    EXPECT_EQ(e[1].element.coeffs, (std::vector<elem_t>{0, 1, 1}));
    EXPECT_EQ(e[1].dimension, 2u);
}

TEST(PrimitiveIdempotents, WorkedExampleMatchesPrintedSet) {
    const auto ctx = worked_example();
    const auto e = primitive_idempotents(ctx.r_transform());
    ASSERT_EQ(e.size(), 5u);
    // e_1 .. e_5 over a_0..a_8.
    const std::set<std::vector<elem_t>> printed{
        {1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 1, 0, 1, 0, 1}, {0, 1, 1, 1, 0, 1, 1, 1, 0}};
    std::vector<GroupRingElement> els;
    for (const auto& x : e) els.push_back(x.element);
    EXPECT_EQ(coefficient_set(els), printed);
    std::vector<unsigned> dims;
    for (const auto& x : e) dims.push_back(x.dimension);
    EXPECT_EQ(dims, (std::vector<unsigned>{1, 2, 2, 2, 2}));
    EXPECT_EQ(hamming_weight(GroupRingElement::from_coeffs(ctx.R(), {0, 1, 1, 0, 1, 1, 0, 1, 1})), 6u);
}

TEST(PrimitiveIdempotents, AxiomsOnRandomRings) {
    for (const auto& c : kRandomRings) {
        const GroupRing R(Field::of_order(c.q), subgroup(c.group, c.gens));
        ASSERT_LE(R.size(), 16u);
        const auto e = primitive_idempotents(R);
        auto total = GroupRingElement::zero(R);
        std::size_t dims = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            EXPECT_EQ(convolve(e[i].element, e[i].element), e[i].element) << R.describe();
            EXPECT_FALSE(e[i].element.is_zero());
            for (std::size_t j = i + 1; j < e.size(); ++j)
                EXPECT_TRUE(convolve(e[i].element, e[j].element).is_zero()) << R.describe();
            total = add(total, e[i].element);
            dims += e[i].dimension;
        }
        EXPECT_EQ(total, GroupRingElement::one(R)) << R.describe();
        EXPECT_EQ(dims, R.size());
    }
}

TEST(PrimitiveIdempotents, ComponentsAreFields) {
    for (const auto& c : std::vector<RingCase>{{2, "Z7", "(1)"}, {3, "Z4", "(1)"}, {2, "Z31", "(1)"}, {5, "Z3", "(1)"}}) {
        const GroupRing R(Field::of_order(c.q), subgroup(c.group, c.gens));
        for (const auto& e : primitive_idempotents(R)) {
            // R e = {f e}; collect its elements.
            std::set<std::vector<elem_t>> seen;
            std::vector<GroupRingElement> members;
            const std::uint64_t total = nt::checked_pow(c.q, e.dimension);
            ASSERT_LE(total, 32u);
            for (std::uint64_t code = 0; seen.size() < total; ++code) {
                auto x = convolve(element_at(R, code), e.element);
                if (seen.insert(x.coeffs).second) members.push_back(x);
            }
            for (const auto& x : members) {
                if (x.is_zero()) continue;
                bool inverted = false;
                for (const auto& y : members) inverted |= convolve(x, y) == e.element;
                EXPECT_TRUE(inverted) << R.describe();
            }
        }
    }
}

TEST(Refinement, WorkedExample) {
    const auto ctx = worked_example();
    ASSERT_EQ(ctx.extension_field().modulus(), (poly::Poly{1, 1, 1}));
    const auto e = primitive_idempotents(ctx.r_transform());
    std::vector<GroupRingElement> children;
    std::vector<std::tuple<unsigned, unsigned, unsigned, std::uint64_t, std::size_t>> params;
    for (std::size_t j = 0; j < 3; ++j) {
        const auto dec = refine_over_extension(e[j], ctx);
        params.emplace_back(dec.k, dec.d, dec.s, dec.L, dec.exponent_set_size());
        auto sum = GroupRingElement::zero(ctx.S());
        for (const auto& c : dec.children) {
            sum = add(sum, c.element);
            if (dec.s > 1) children.push_back(c.element);
        }
        EXPECT_EQ(sum, embed(e[j].element, ctx.base_into_ext(), ctx.S()));
    }
    using P = std::tuple<unsigned, unsigned, unsigned, std::uint64_t, std::size_t>;
    EXPECT_EQ(params, (std::vector<P>{{1, 1, 1, 3, 4}, {2, 1, 2, 1, 4}, {2, 1, 2, 1, 4}}));
    // e21, e22, e31, e32 with alpha = 2, alpha^2 = 3.
    const std::set<std::vector<elem_t>> printed{{1, 3, 2, 1, 3, 2, 1, 3, 2},
                                                {1, 2, 3, 1, 2, 3, 1, 2, 3},
                                                {1, 1, 1, 3, 3, 3, 2, 2, 2},
                                                {1, 1, 1, 2, 2, 2, 3, 3, 3}};
    EXPECT_EQ(coefficient_set(children), printed);
}

TEST(Refinement, ChildrenOrthogonalAndFirstHoldsRepresentative) {
    for (const auto& [q, group, gens] : std::vector<RingCase>{{2, "Z3xZ6", "(1,0);(0,2)"},
                                                              {2, "Z14", "(2)"},
                                                              {3, "Z8xZ2", "(1,0)"},
                                                              {5, "Z6xZ2", "(1,0)"},
                                                              {2, "Z30", "(2)"}}) {
        const auto H = subgroup(group, gens);
        const auto ctx = QacContext::make(H, q);
        for (const auto& ej : primitive_idempotents(ctx.r_transform())) {
            const auto dec = refine_over_extension(ej, ctx);
            EXPECT_EQ(dec.s, std::gcd(ctx.index(), dec.k));
            EXPECT_EQ(dec.children[0].inducing_class.representative, ej.inducing_class.representative);
            EXPECT_EQ(dec.tau[0], 0u);
            for (std::size_t i = 0; i < dec.children.size(); ++i) {
                const auto& c = dec.children[i].element;
                EXPECT_EQ(convolve(c, c), c);
                for (std::size_t j = i + 1; j < dec.children.size(); ++j)
                    EXPECT_TRUE(convolve(c, dec.children[j].element).is_zero());
            }
            if (std::gcd(ctx.index(), dec.k) == 1) {
                EXPECT_EQ(dec.children.size(), 1u);
                EXPECT_EQ(dec.d, dec.k);
            }
        }
    }
}

TEST(ComponentPrimitiveElement, OrderInsideComponent) {
    const auto ctx = worked_example();
    const auto e = primitive_idempotents(ctx.r_transform());
    const auto dec1 = refine_over_extension(e[0], ctx);
    // alpha e_1 is a valid choice and has order 3.
    const auto alpha_e1 = scale(2, embed(e[0].element, ctx.base_into_ext(), ctx.S()));
    EXPECT_EQ(ring_pow(alpha_e1, 3), dec1.children[0].element);
    EXPECT_NE(ring_pow(alpha_e1, 1), dec1.children[0].element);

    for (const auto& [q, group, gens] : std::vector<RingCase>{{2, "Z3xZ6", "(1,0);(0,2)"}, {2, "Z6", "(2)"}, {3, "Z8", "(2)"}}) {
        const auto c = QacContext::make(subgroup(group, gens), q);
        for (const auto& ej : primitive_idempotents(c.r_transform())) {
            const auto dec = refine_over_extension(ej, c);
            const std::uint64_t n = dec.component_order - 1;
            for (std::size_t i = 0; i < dec.children.size(); ++i) {
                const auto& pi = component_primitive_element(i, dec);
                EXPECT_EQ(ring_pow(pi, n), dec.children[i].element);
                for (auto [r, mult] : nt::factorize(n)) {
                    (void)mult;
                    EXPECT_NE(ring_pow(pi, n / r), dec.children[i].element);
                }
            }
        }
    }
}

TEST(GeneratorAndCheck, Examples) {
    const AbelianGroup G({6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(2)"), 2);
    const auto& T = ctx.r_transform();
    const auto& R = ctx.R();
    const auto one = GroupRingElement::one(R), zero = GroupRingElement::zero(R);
    const auto all = GroupRingElement::from_coeffs(R, {1, 1, 1});
    const auto y = GroupRingElement::from_coeffs(R, {0, 1, 1});
    EXPECT_EQ(idempotent_generator_of({one, zero}, T), one);
    EXPECT_EQ(idempotent_generator_of({y, all}, T), one);
    EXPECT_EQ(idempotent_generator_of({zero, zero}, T), zero);
    EXPECT_EQ(idempotent_check_of({one, zero}, T), zero);
    EXPECT_EQ(idempotent_check_of({y, zero}, T), all);
}

TEST(GeneratorAndCheck, ExhaustiveSmallCase) {
    const AbelianGroup G({6});
    const auto ctx = QacContext::make(G, parse_generators(G, "(2)"), 2);
    const auto& T = ctx.r_transform();
    const auto& R = ctx.R();
    for (std::uint64_t code = 0; code < 64; ++code) {
        const Tuple a{element_at(R, code & 7), element_at(R, code >> 3)};
        const auto e = idempotent_generator_of(a, T);
        const auto f = idempotent_check_of(a, T);
        EXPECT_EQ(add(e, f), GroupRingElement::one(R));
        EXPECT_TRUE(convolve(e, f).is_zero());
        EXPECT_EQ(convolve(e, e), e);
        for (const auto& x : a) EXPECT_TRUE(convolve(f, x).is_zero());
        // R e = R a_1 + R a_2 as ideals of R.
        EXPECT_TRUE(ideal_contains(e, a));
        linalg::Matrix span;
        for (const auto& x : a)
            for (std::size_t h = 0; h < R.size(); ++h) span.push_back(shift(x, h).coeffs);
        EXPECT_EQ(linalg::rank(R.scalars(), span), module_dimension(e));
        EXPECT_EQ(module_dimension(a), R.size() - module_dimension(f));
    }
}

TEST(GeneratorAndCheck, DimensionOnRandomTuples) {
    for (const auto& [q, group, gens] : std::vector<RingCase>{{2, "Z3xZ6", "(1,0);(0,2)"}, {5, "Z6xZ2", "(1,0)"}, {3, "Z8", "(2)"}}) {
        const auto ctx = QacContext::make(subgroup(group, gens), q);
        const auto& T = ctx.r_transform();
        const auto idem = primitive_idempotents(T);
        for (int rep = 0; rep < 20; ++rep) {
            // Random tuple pushed into a random sub-sum of components.
            std::vector<std::size_t> cls;
            for (std::size_t c = 0; c < idem.size(); ++c)
                if (random_scalar(Field::of_order(2))) cls.push_back(c);
            const auto mask = idempotent_of_classes(T, cls);
            Tuple a;
            for (auto& x : random_tuple(ctx.R(), ctx.index())) a.push_back(convolve(mask, x));
            const auto e = idempotent_generator_of(a, T);
            EXPECT_EQ(module_dimension(a), module_dimension(e));
            EXPECT_EQ(module_dimension(a), ctx.R().size() - module_dimension(idempotent_check_of(a, T)));
        }
    }
}

TEST(GeneratorAndCheck, ContainmentMatchesSpectralSupport) {
    // R a_1 + ... + R a_l in R b  <=>  supp(a) within supp(b)  <=>  S A in S b.
    const auto ctx = QacContext::make(subgroup("Z3xZ6", "(1,0);(0,2)"), 2);
    const auto& T = ctx.r_transform();
    const auto idem = primitive_idempotents(T);
    auto random_masked = [&] {
        std::vector<std::size_t> cls;
        for (std::size_t c = 0; c < idem.size(); ++c)
            if (random_scalar(Field::of_order(4)) != 0) cls.push_back(c);
        return convolve(idempotent_of_classes(T, cls), random_element(ctx.R()));
    };
    int agree = 0, contained = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const Tuple a{random_masked(), random_masked()};
        const auto b = random_masked();
        const bool by_algebra = ideal_contains(b, a);
        const auto sa = spectral_support(a, T), sb = spectral_support({b}, T);
        const bool by_support = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
        const bool by_extension =
            ideal_contains(embed(b, ctx.base_into_ext(), ctx.S()), {varphi(a, ctx)});
        EXPECT_EQ(by_algebra, by_support);
        EXPECT_EQ(by_algebra, by_extension);
        agree += by_algebra == by_support;
        contained += by_algebra;
    }
    EXPECT_EQ(agree, 200);
    EXPECT_GT(contained, 0);
}

TEST(DiscreteLogTest, InvertsPowers) {
    const Field F = Field::of_order(3125);
    const elem_t g = F.primitive_element();
    const DiscreteLog log(F, g, F.order() - 1);
    for (std::uint64_t m : {0ull, 1ull, 7ull, 1000ull, 3123ull}) EXPECT_EQ(log(F.upow(g, m)), m);
    EXPECT_THROW(log(0), std::domain_error);
}
