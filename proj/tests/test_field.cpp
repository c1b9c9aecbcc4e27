#include <gtest/gtest.h>

#include <random>

#include "qac/field.hpp"

using namespace qac;

TEST(CreateField, SmallestIrreducibleQuadraticOverF2) {
    const Field f = Field::create(2, 2);
    EXPECT_EQ(f.modulus(), (poly::Poly{1, 1, 1}));
    EXPECT_EQ(f.order(), 4u);
}

TEST(CreateField, PrimeFieldModulusIsX) {
    const Field f = Field::create(5, 1);
    EXPECT_EQ(f.modulus(), (poly::Poly{0, 1}));
    EXPECT_EQ(f.mul(3, 4), 2u);
}

TEST(CreateField, RejectsReducibleModulusNamingFactor) {
    try {
        Field::create(2, 2, poly::Poly{1, 0, 1});
        FAIL() << "expected rejection";
    } catch (const precondition_error& e) {
        EXPECT_STREQ(e.what(), "reducible: (x+1)^2");
    }
}

TEST(CreateField, RejectsCompositeCharacteristic) {
    EXPECT_THROW(Field::create(6, 1), precondition_error);
    EXPECT_THROW(Field::create(4, 1), precondition_error);
}

TEST(CreateField, AcceptsUserIrreducibleModulus) {
    const Field f = Field::create(3, 2, poly::Poly{1, 0, 1});  // x^2 + 1
    const elem_t i = f.generator_x();
    EXPECT_EQ(f.mul(i, i), f.from_int(-1));
}

TEST(CreateField, LexicographicOrderIsLowDegreeFirst) {
    // Over F3: x^2+1 (c0=1,c1=0) precedes x^2+x+2 (c0=2,c1=1) and x^2+2x+2.
    EXPECT_EQ(Field::create(3, 2).modulus(), (poly::Poly{1, 0, 1}));
    // Over F2, degree 3: (c0,c1,c2) = (1,0,0) is x^3+1, reducible; (1,0,1) is x^3+x^2+1.
    EXPECT_EQ(Field::create(2, 3).modulus(), (poly::Poly{1, 0, 1, 1}));
}

TEST(FieldArith, F4Examples) {
    const Field f4 = Field::create(2, 2);
    const elem_t a = f4.generator_x();
    EXPECT_EQ(f4.mul(a, a), f4.add(1, a));
    EXPECT_EQ(f4.inv(1), 1u);
    EXPECT_EQ(f4.pow(a, 3), 1u);
    EXPECT_EQ(f4.pow(a, -1), f4.mul(a, a));
}

TEST(FieldArith, ErrorsAreExplicit) {
    const Field f4 = Field::create(2, 2);
    EXPECT_THROW(f4.inv(0), std::domain_error);
    const FieldElement x(f4, 2), y(Field::create(3, 1), 1);
    EXPECT_THROW(x + y, std::invalid_argument);
    EXPECT_THROW(x * y, std::invalid_argument);
    const FieldElement z(Field::create(2, 2), 3);  // same field, separately created
    EXPECT_EQ((x * z).value(), f4.mul(2, 3));
}

namespace {

void check_axioms(const Field& f, elem_t a, elem_t b, elem_t c) {
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.add(a, f.neg(a)), 0u);
    if (a) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    }
}

}  // namespace

TEST(FieldProperties, AxiomsExhaustiveUpTo16) {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        const Field f = Field::create(p, m);
        for (elem_t a = 0; a < f.order(); ++a)
            for (elem_t b = 0; b < f.order(); ++b)
                for (elem_t c = 0; c < f.order(); ++c) check_axioms(f, a, b, c);
    }
}

TEST(FieldProperties, AxiomsRandomUpTo64AndSlowPath) {
    std::mt19937_64 rng(7);
    // Orders above the log-table limit exercise polynomial arithmetic.
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {2, 17}, {3, 11}, {65537, 1}}) {
        const Field f = Field::create(p, m);
        std::uniform_int_distribution<elem_t> d(0, f.order() - 1);
        for (int i = 0; i < 2000; ++i) check_axioms(f, d(rng), d(rng), d(rng));
        for (int i = 0; i < 50; ++i) {
            const elem_t x = d(rng);
            ASSERT_EQ(f.upow(x, f.order()), x);
        }
        EXPECT_EQ(f.multiplicative_order(f.primitive_element()), f.order() - 1);
    }
}

TEST(Frobenius, Examples) {
    const Field f4 = Field::create(2, 2);
    const elem_t a = f4.generator_x();
    EXPECT_EQ(f4.frobenius(a, 2), f4.add(1, a));
    EXPECT_EQ(f4.frobenius(1, 2), 1u);
    for (elem_t x = 0; x < 4; ++x) EXPECT_EQ(f4.frobenius(f4.frobenius(x, 2), 2), x);
    EXPECT_THROW(f4.frobenius(a, 3), precondition_error);
}

TEST(Frobenius, AdditiveUpTo25) {
    for (std::uint64_t order : {4u, 8u, 9u, 16u, 25u}) {
        const Field f = Field::of_order(order);
        const std::uint64_t p = f.characteristic();
        unsigned j = 0;
        for (std::uint64_t q = p; q < order; q *= p) {
            if (f.degree() % ++j) continue;
            for (elem_t x = 0; x < order; ++x) {
                for (elem_t y = 0; y < order; ++y)
                    ASSERT_EQ(f.frobenius(f.add(x, y), q), f.add(f.frobenius(x, q), f.frobenius(y, q)));
                ASSERT_EQ(f.frobenius(x, q), f.upow(x, q));
            }
        }
    }
}

TEST(Trace, Examples) {
    const Field f4 = Field::create(2, 2);
    const Embedding f2_in_f4(Field::create(2, 1), f4);
    EXPECT_EQ(trace_to_base(f2_in_f4, f4.generator_x()), 1u);
    EXPECT_EQ(trace_to_base(f2_in_f4, 1), 0u);
    const Field f25 = Field::create(5, 2);
    for (elem_t x = 0; x < 25; ++x) {
        const elem_t t = f25.trace(x, 5);
        EXPECT_EQ(f25.upow(t, 5), t);
    }
    EXPECT_THROW(f25.trace(1, 25 * 5), precondition_error);
}

TEST(Trace, LinearAndSurjectiveUpTo25) {
    for (std::uint64_t order : {4u, 8u, 9u, 16u, 25u}) {
        const Field ext = Field::of_order(order);
        const Field base = Field::create(ext.characteristic(), 1);
        const Embedding emb(base, ext);
        std::vector<int> hit(base.order(), 0);
        for (elem_t x = 0; x < order; ++x) {
            const elem_t tx = trace_to_base(emb, x);
            hit[tx] = 1;
            for (elem_t c = 0; c < base.order(); ++c)
                for (elem_t y = 0; y < order; y += 3) {
                    const elem_t lhs = trace_to_base(emb, ext.add(ext.mul(emb(c), x), y));
                    ASSERT_EQ(lhs, base.add(base.mul(c, tx), trace_to_base(emb, y)));
                }
        }
        for (int h : hit) EXPECT_EQ(h, 1);
    }
}

TEST(Embedding, IsRingHomomorphism) {
    const Field f4 = Field::create(2, 2), f16 = Field::create(2, 4), f64 = Field::create(2, 6);
    for (const Field& dst : {f16, f64}) {
        const Embedding e(f4, dst);
        for (elem_t a = 0; a < 4; ++a)
            for (elem_t b = 0; b < 4; ++b) {
                EXPECT_EQ(e(f4.add(a, b)), dst.add(e(a), e(b)));
                EXPECT_EQ(e(f4.mul(a, b)), dst.mul(e(a), e(b)));
                EXPECT_EQ(e.pull(e(a)), a);
            }
        // Image is exactly the fixed field of x -> x^4.
        int fixed = 0;
        for (elem_t y = 0; y < dst.order(); ++y)
            if (dst.upow(y, 4) == y) {
                ++fixed;
                EXPECT_TRUE(e.try_pull(y).has_value());
            } else {
                EXPECT_FALSE(e.try_pull(y).has_value());
            }
        EXPECT_EQ(fixed, 4);
    }
    EXPECT_THROW(Embedding(Field::create(2, 3), f16), precondition_error);
    EXPECT_THROW(Embedding(f4, Field::create(3, 2)), precondition_error);
}

TEST(Embedding, IdenticalFieldsMapIdentically) {
    const Field f4 = Field::create(2, 2);
    const Embedding e(f4, Field::create(2, 2));
    for (elem_t a = 0; a < 4; ++a) EXPECT_EQ(e(a), a);
}

TEST(Decompose, PolynomialBasisExamples) {
    const Field f4 = Field::create(2, 2);
    const Embedding emb(Field::create(2, 1), f4);
    const SubfieldCoordinates sc(emb, polynomial_basis(emb));
    EXPECT_EQ(sc.basis().elements, (std::vector<elem_t>{1, f4.generator_x()}));
    EXPECT_EQ(sc.decompose(f4.add(1, f4.generator_x())), (std::vector<elem_t>{1, 1}));
    EXPECT_EQ(sc.decompose(0), (std::vector<elem_t>{0, 0}));
}

TEST(Decompose, RoundTripExhaustive) {
    // (base order, extension degree l)
    for (auto [q, l] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 2}, {2, 2}, {2, 3}, {2, 6}, {4, 2}, {4, 3}, {3, 2}, {8, 2}}) {
        const Field base = Field::of_order(q);
        const Field ext = Field::create(base.characteristic(), base.degree() * l);
        const Embedding emb(base, ext);
        for (auto kind : {BasisKind::polynomial, BasisKind::normal}) {
            const ExtensionBasis b = kind == BasisKind::polynomial ? polynomial_basis(emb) : normal_basis(emb);
            if (kind == BasisKind::normal) {
                EXPECT_TRUE(is_normal_basis(b, ext, q));
            }
            const SubfieldCoordinates sc(emb, b);
            for (elem_t x = 0; x < ext.order(); ++x) {
                const auto c = sc.decompose(x);
                ASSERT_EQ(c.size(), l);
                ASSERT_EQ(sc.recompose(c), x);
            }
        }
    }
}

TEST(Decompose, SingularBasisRejected) {
    const Field f4 = Field::create(2, 2);
    const Embedding emb(Field::create(2, 1), f4);
    EXPECT_THROW(SubfieldCoordinates(emb, ExtensionBasis{BasisKind::polynomial, {1, 1}}), precondition_error);
}

TEST(PrimitiveElement, Examples) {
    const Field f4 = Field::create(2, 2);
    EXPECT_EQ(f4.primitive_element(), f4.generator_x());
    EXPECT_EQ(Field::create(5, 1).primitive_element(), 2u);
    EXPECT_THROW(Field::create(2, 1).primitive_element(), precondition_error);
}

TEST(PrimitiveElement, VisitsAllNonzeroElements) {
    for (std::uint64_t order : {3u, 4u, 8u, 9u, 25u, 27u, 49u, 64u, 81u}) {
        const Field f = Field::of_order(order);
        std::vector<int> seen(order, 0);
        elem_t y = 1;
        for (std::uint64_t i = 0; i + 1 < order; ++i) {
            seen[y]++;
            y = f.mul(y, f.primitive_element());
        }
        EXPECT_EQ(y, 1u);
        EXPECT_EQ(seen[0], 0);
        for (elem_t x = 1; x < order; ++x) EXPECT_EQ(seen[x], 1);
    }
}

TEST(TextSyntax, FormatAndParse) {
    const Field f4 = Field::create(2, 2);
    EXPECT_EQ(f4.format(3), "(1,1)");
    EXPECT_EQ(f4.parse("(1,1)"), 3u);
    EXPECT_EQ(f4.parse("a^2"), f4.mul(2, 2));
    EXPECT_EQ(f4.parse("0"), 0u);
    EXPECT_EQ(f4.format_symbolic(f4.mul(2, 2)), "a^2");
    const Field f5 = Field::create(5, 1);
    EXPECT_EQ(f5.parse("4"), 4u);
    EXPECT_THROW(f5.parse("5"), std::invalid_argument);
    EXPECT_THROW(f4.parse("(1,1"), std::invalid_argument);
}
