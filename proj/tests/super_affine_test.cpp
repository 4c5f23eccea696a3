#include "octalg/super_affine.hpp"

#include <gtest/gtest.h>

#include <map>
#include <mutex>
#include <set>

using namespace octalg;

namespace {

using G = ModeGenerator;

class BothKinds : public ::testing::TestWithParam<AlgebraKind> {};

const std::vector<ConventionOutcome> &search(AlgebraKind k) {
    static std::map<AlgebraKind, std::vector<ConventionOutcome>> cache;
    static std::mutex m;
    std::lock_guard lock(m);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, convention_search(k, 2)).first;
    }
    return it->second;
}

} // namespace

TEST(FormalSum, CancelsAndSorts) {
    GradedElement e;
    e.add(G::phi(3, 1), 2);
    e.add(G::psi(1, 0), 1);
    e.add(G::phi(3, 1), -2);
    ASSERT_EQ(e.terms().size(), 1u);
    EXPECT_EQ(e.terms()[0].first, G::psi(1, 0));
    EXPECT_EQ(parity(e), 1);
    e.add(G::central(), 1);
    EXPECT_FALSE(parity(e));
    EXPECT_TRUE((e - e).is_zero());
    EXPECT_EQ((Rational(3) * e).coefficient(G::central()), 3);
}

TEST(Generators, CountAndOrder) {
    const auto g = generators(2);
    EXPECT_EQ(g.size(), 2u * 8u * 5u + 1u);
    EXPECT_EQ(g.front(), G::psi(0, -2));
    EXPECT_EQ(g.back(), G::central());
    EXPECT_EQ(to_string(G::psi(3, -1)), "psi_3^-1");
}

TEST(Conventions, SixteenDistinct) {
    const auto all = BracketConvention::all();
    ASSERT_EQ(all.size(), 16u);
    std::set<std::string> names;
    for (const auto &c : all) {
        names.insert(c.name());
    }
    EXPECT_EQ(names.size(), 16u);
    EXPECT_EQ(all.front().name(), "s1=+ s2=+ s3=+ gamma");
}

TEST_P(BothKinds, BracketValues) {
    const auto k = GetParam();
    const BracketConvention c{};
    const auto &t = structure_tensors(k);
    // {psi_mu^m, psi_nu^-m} = gamma_{mu nu} K
    EXPECT_EQ(mode_bracket(k, c, G::psi(2, 1), G::psi(2, -1)), GradedElement(G::central(), t.gamma.diag(2)));
    EXPECT_TRUE(mode_bracket(k, c, G::psi(2, 1), G::psi(2, 1)).is_zero());
    // [phi_mu^m, phi_mu^-m] = m gamma_{mu mu} K
    EXPECT_EQ(mode_bracket(k, c, G::phi(5, 2), G::phi(5, -2)), GradedElement(G::central(), 2 * t.gamma.diag(5)));
    // [phi_1^1, phi_2^0] = b_{12}^4 phi_4^1
    EXPECT_EQ(mode_bracket(k, c, G::phi(1, 1), G::phi(2, 0)), GradedElement(G::phi(4, 1), t.b_mixed(1, 2, 4)));
    EXPECT_EQ(mode_bracket(k, c, G::psi(1, 1), G::phi(2, 0)), GradedElement(G::psi(4, 1), t.b_mixed(1, 2, 4)));
    EXPECT_THROW(graded_bracket(k, c, GradedElement(G::psi(1, 0), 1) + GradedElement(G::phi(1, 0), 1),
                                GradedElement(G::phi(2, 0), 1)),
                 std::invalid_argument);
}

TEST_P(BothKinds, StructuralChecksForEveryConvention) {
    const auto k = GetParam();
    for (const auto &c : BracketConvention::all()) {
        for (const auto &r : {graded_antisymmetry_check(k, c, 2), bracket_invariants_check(k, c, 2),
                              mode_zero_homomorphism_check(k, c), even_super_jacobian_check(k, c)}) {
            EXPECT_TRUE(r.pass()) << c.name() << " " << r.name << ": " << r.first_failure;
        }
    }
}

TEST_P(BothKinds, SuperJacobianOfEvenUnits) {
    const auto k = GetParam();
    const int s = k == AlgebraKind::Octonion ? 1 : -1;
    EXPECT_EQ(super_jacobian(k, BracketConvention{}, G::phi(1, 0), G::phi(2, 0), G::phi(3, 0)),
              GradedElement(G::phi(6, 0), 3 * s));
}

TEST_P(BothKinds, ConventionSearchPassers) {
    const auto k = GetParam();
    std::set<std::string> passers;
    for (const auto &o : search(k)) {
        EXPECT_TRUE(o.antisymmetry.pass());
        if (o.pass()) {
            passers.insert(o.convention.name());
        } else {
            EXPECT_TRUE(o.malcev.counterexample);
        }
    }
    std::set<std::string> expected;
    for (const auto &c : BracketConvention::all()) {
        const bool pairing_ok = k == AlgebraKind::Octonion || c.pairing == Pairing::Gamma;
        if (c.s1 == c.s2 && pairing_ok) {
            expected.insert(c.name());
        }
    }
    EXPECT_EQ(passers, expected);
}

TEST_P(BothKinds, FastEngineAgreesWithExactResiduals) {
    const auto k = GetParam();
    for (const auto &o : search(k)) {
        if (o.malcev.counterexample) {
            const auto &ce = *o.malcev.counterexample;
            const auto exact =
                super_malcev_residual(k, o.convention, MalcevReading::GrassmannEnvelope, ce.x, ce.y, ce.z);
            EXPECT_FALSE(exact.is_zero());
            EXPECT_EQ(to_string(exact), ce.residual);
        }
    }
    const auto gens = generators(1);
    const BracketConvention c{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < gens.size(); i += 3)
        for (std::size_t j = 0; j < gens.size(); j += 5)
            for (std::size_t l = 0; l < gens.size(); l += 7) {
                ++n;
                EXPECT_TRUE(
                    super_malcev_residual(k, c, MalcevReading::GrassmannEnvelope, gens[i], gens[j], gens[l]).is_zero());
            }
    EXPECT_GT(n, 100u);
}

TEST(SuperMalcev, LiteralReadingDefaultConvention) {
    for (auto k : kAllKinds) {
        EXPECT_TRUE(super_malcev_check(k, BracketConvention{}, 1, MalcevReading::LiteralSuperJacobian).pass());
    }
}

TEST(SuperMalcev, MismatchedSignsFail) {
    const BracketConvention c{1, -1, 1, Pairing::Gamma};
    const auto r = super_malcev_check(AlgebraKind::Octonion, c, 1);
    EXPECT_FALSE(r.pass());
    EXPECT_THROW(super_malcev_check(AlgebraKind::Octonion, c, 0), std::invalid_argument);
}

INSTANTIATE_TEST_SUITE_P(Kinds, BothKinds, ::testing::ValuesIn(kAllKinds),
                         [](const auto &info) { return std::string(kind_name(info.param)); });
