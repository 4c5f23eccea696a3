#include "octalg/algebra.hpp"
#include "octalg/random.hpp"
#include "octalg/reference.hpp"
#include "octalg/subalgebra.hpp"

#include <gtest/gtest.h>

using namespace octalg;

namespace {

Element E(int i) { return Element::basis(i); }

class BothKinds : public ::testing::TestWithParam<AlgebraKind> {};

std::string row_string(const CayleyTable &t, int i) {
    std::string s;
    for (int j = 0; j < kDim; ++j) {
        s += (j ? " " : "") + to_string(t.at(i, j));
    }
    return s;
}

} // namespace

TEST(Table, OctonionRowsAsPrinted) {
    const auto &t = cayley_table(AlgebraKind::Octonion);
    EXPECT_EQ(row_string(t, 0), "0 1 2 3 4 5 6 7");
    EXPECT_EQ(row_string(t, 1), "1 -0 4 7 -2 6 -5 -3");
    EXPECT_EQ(row_string(t, 7), "7 3 6 -1 5 -4 -2 -0");
}

TEST(Table, SplitRowOne) { EXPECT_EQ(row_string(cayley_table(AlgebraKind::SplitOctonion), 1), "1 0 4 -7 2 -6 -5 -3"); }

TEST(Table, SignedBasisRoundTrip) {
    for (const char *s : {"0", "-0", "4", "-7"}) {
        EXPECT_EQ(to_string(parse_signed_basis(s)), s);
    }
    EXPECT_THROW(parse_signed_basis("8"), std::invalid_argument);
    EXPECT_THROW(parse_signed_basis("x"), std::invalid_argument);
    EXPECT_THROW(parse_signed_basis(""), std::invalid_argument);
}

TEST(Table, KindNames) {
    for (auto k : kAllKinds) {
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    }
    EXPECT_FALSE(parse_kind("quaternion"));
}

TEST(Table, BasisIndexRange) {
    EXPECT_THROW(BasisIndex(8), std::out_of_range);
    EXPECT_THROW(BasisIndex(-1), std::out_of_range);
    EXPECT_TRUE(BasisIndex(0).is_real());
}

TEST_P(BothKinds, BuiltInTableIsSound) { EXPECT_TRUE(check_table(cayley_table(GetParam())).empty()); }

TEST_P(BothKinds, CorruptedEntryIsNamed) {
    CayleyTable t = cayley_table(GetParam());
    t.set(1, 2, -t.at(1, 2));
    const auto v = check_table(t);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].rule, TableViolation::Rule::Antisymmetry);
    EXPECT_EQ(v[0].row, 1);
    EXPECT_EQ(v[0].col, 2);
    EXPECT_NE(v[0].message.find("E1*E2"), std::string::npos);
}

TEST_P(BothKinds, BrokenIdentityRowIsNamed) {
    CayleyTable t = cayley_table(GetParam());
    t.set(0, 3, SignedBasis{-1, 3});
    const auto v = check_table(t);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v[0].rule, TableViolation::Rule::Identity);
    EXPECT_NE(v[0].message.find("E0*E3"), std::string::npos);
}

TEST_P(BothKinds, ProductOfBasisUnitsMatchesTable) {
    const auto k = GetParam();
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            const SignedBasis s = basis_product(k, BasisIndex(i), BasisIndex(j));
            EXPECT_EQ(multiply(k, E(i), E(j)), Element::basis(s.index, s.sign));
        }
    }
}

TEST_P(BothKinds, AlternativeAndFlexibleOnRandomElements) {
    const auto k = GetParam();
    ElementSampler rng(11);
    for (int i = 0; i < 200; ++i) {
        const Element a = rng.element();
        const Element b = rng.element();
        EXPECT_TRUE(associator(k, a, a, b).is_zero());
        EXPECT_TRUE(associator(k, a, b, b).is_zero());
        EXPECT_TRUE(associator(k, a, b, a).is_zero());
    }
}

TEST_P(BothKinds, NotAssociative) {
    const auto k = GetParam();
    EXPECT_FALSE(associator(k, E(1), E(2), E(3)).is_zero());
}

TEST_P(BothKinds, NormIsMultiplicative) {
    const auto k = GetParam();
    ElementSampler rng(5);
    for (int i = 0; i < 200; ++i) {
        const Element a = rng.element();
        const Element b = rng.element();
        const Element ab = multiply(k, a, b);
        EXPECT_EQ(bilinear_form(k, ab, ab), bilinear_form(k, a, a) * bilinear_form(k, b, b));
    }
}

TEST_P(BothKinds, ConjugationIsAnInvolutiveAntiAutomorphism) {
    const auto k = GetParam();
    ElementSampler rng(3);
    for (int i = 0; i < 100; ++i) {
        const Element a = rng.element();
        const Element b = rng.element();
        EXPECT_EQ(conjugate(conjugate(a)), a);
        EXPECT_EQ(conjugate(multiply(k, a, b)), multiply(k, conjugate(b), conjugate(a)));
        // a conj(a) is real
        EXPECT_TRUE(multiply(k, a, conjugate(a)).imag().is_zero());
    }
}

TEST_P(BothKinds, CommutatorIsAnticommutativeAndNormalized) {
    const auto k = GetParam();
    ElementSampler rng(9);
    for (int i = 0; i < 100; ++i) {
        const Element a = rng.element();
        const Element b = rng.element();
        EXPECT_EQ(commutator(k, a, b), -commutator(k, b, a));
        EXPECT_EQ(Rational(2) * commutator(k, a, b), multiply(k, a, b) - multiply(k, b, a));
    }
}

TEST_P(BothKinds, MalcevOnBasisTriples) {
    const auto k = GetParam();
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                EXPECT_TRUE(malcev_check(k, E(x), E(y), E(z)).pass) << x << y << z;
            }
}

TEST_P(BothKinds, MalcevOnRandomTriples) {
    const auto k = GetParam();
    ElementSampler rng(2024);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(malcev_check(k, rng.element(), rng.element(), rng.element()).pass);
    }
}

TEST_P(BothKinds, SubalgebrasMatchListedTypes) {
    const auto rep = classify_subalgebras(GetParam());
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(compare_subalgebra_reference(rep).pass());
    for (const auto &e : rep.entries) {
        EXPECT_TRUE(e.closed);
        EXPECT_TRUE(e.associative);
    }
}

TEST(Subalgebra, QuaternionicTriples) {
    EXPECT_EQ(quaternionic_triple(1), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(quaternionic_triple(6), (std::vector<int>{6, 7, 2}));
    EXPECT_EQ(quaternionic_triple(7), (std::vector<int>{7, 1, 3}));
}

TEST(ZeroDivisor, SplitHasOneOctonionDoesNot) {
    const Element p = E(0) + E(1);
    const Element q = E(0) - E(1);
    EXPECT_TRUE(multiply(AlgebraKind::SplitOctonion, p, q).is_zero());
    EXPECT_EQ(multiply(AlgebraKind::Octonion, p, q), Element::basis(0, 2));
}

TEST(ZeroDivisor, OctonionNormPositiveDefinite) {
    ElementSampler rng(17);
    for (int i = 0; i < 100; ++i) {
        const Element a = rng.element();
        if (!a.is_zero()) {
            EXPECT_GT(bilinear_form(AlgebraKind::Octonion, a, a), 0);
        }
    }
}

TEST(BilinearForm, Signatures) {
    int pos[2] = {0, 0};
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < kDim; ++i) {
            pos[k] += bilinear_form(kAllKinds[static_cast<std::size_t>(k)], E(i), E(i)) > 0 ? 1 : 0;
        }
    }
    EXPECT_EQ(pos[0], 8);
    EXPECT_EQ(pos[1], 4);
}

TEST(ElementText, Rendering) {
    EXPECT_EQ(to_string(Element::zero()), "0");
    Element e = Element::basis(0, make_rational(3, 2)) - E(3) + Element::basis(7, 2);
    EXPECT_EQ(to_string(e), "3/2 E0 - E3 + 2 E7");
}

INSTANTIATE_TEST_SUITE_P(Kinds, BothKinds, ::testing::ValuesIn(kAllKinds),
                         [](const auto &info) { return std::string(kind_name(info.param)); });
