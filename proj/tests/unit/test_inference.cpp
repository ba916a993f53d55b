#include <gtest/gtest.h>

#include "condw/condw.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace condw;
using condw::test::birds;
using condw::test::f;
using condw::test::make_base;

namespace {

constexpr InferenceMode kModes[] = {InferenceMode::W, InferenceMode::Z, InferenceMode::P};

bool oracle_p(const BeliefBase& base, const ModelSet& a, const ModelSet& b) {
    if (a.empty()) return true;
    BeliefBase extended = base;
    extended.add(Conditional::from_models(base.signature_ptr(), ~b, a));
    return !oracle::partition(extended).has_value();
}

TEST(Inference, BirdsDaysAndPenguins) {
    auto base = birds();
    EXPECT_TRUE(infer_w(base, f(base, "d,p"), f(base, "!v")));
    EXPECT_FALSE(infer_z(base, f(base, "d,p"), f(base, "!v")));
    EXPECT_FALSE(infer_p(base, f(base, "d,p"), f(base, "!v")));
    for (auto mode : kModes) {
        EXPECT_TRUE(infer(base, mode, {f(base, "d"), f(base, "!v")})) << to_string(mode);
    }
    EXPECT_TRUE(infer_z(base, f(base, "b"), f(base, "f")));
    EXPECT_TRUE(infer_w(base, f(base, "p"), f(base, "!f")));
    EXPECT_FALSE(infer_w(base, f(base, "p"), f(base, "f")));
}

TEST(Inference, VacuousAntecedent) {
    auto base = birds();
    for (auto mode : kModes) {
        EXPECT_TRUE(infer(base, mode, {f(base, "bot"), f(base, "b")}));
        EXPECT_TRUE(infer(base, mode, {f(base, "p,!p"), f(base, "bot")}));
    }
}

TEST(Inference, InconsistentBaseThrows) {
    auto base = make_base({"a"}, {"(a|top)", "(!a|top)"});
    for (auto mode : kModes) EXPECT_THROW(induce(base, mode), InconsistentBaseError);
    EXPECT_THROW(infer_p(base, f(base, "a"), f(base, "a")), InconsistentBaseError);
}

TEST(Inference, ModeNames) {
    EXPECT_EQ(parse_mode("W"), InferenceMode::W);
    EXPECT_EQ(parse_mode("z"), InferenceMode::Z);
    EXPECT_EQ(parse_mode("p"), InferenceMode::P);
    EXPECT_FALSE(parse_mode("q").has_value());
    EXPECT_STREQ(to_string(InferenceMode::Z), "z");
}

TEST(SystemZ, BirdsRanks) {
    auto base = birds();
    SystemZ z(base);
    EXPECT_EQ(z.rank(test::world(base, "b!pf!v!d")), 0U);
    EXPECT_EQ(z.rank(test::world(base, "b!p!f!v!d")), 1U);
    EXPECT_EQ(z.rank(test::world(base, "bpf!v!d")), 2U);
    EXPECT_EQ(z.rank(f(base, "p").models()), 1U);
    EXPECT_FALSE(z.rank(ModelSet::none(32)).has_value());
}

// Penguins are birds, birds fly and have wings, penguins do not fly. Wings
// should still be inherited by penguins; System Z drowns that inference.
TEST(Inference, WingedPenguinsAreNotDrowned) {
    auto base = make_base({"b", "p", "f", "w"}, {"(f|b)", "(b|p)", "(!f|p)", "(w|b)"});
    auto partition = *tolerance_partition(base);
    EXPECT_EQ(partition.layers, (std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}}));
    EXPECT_TRUE(infer_w(base, f(base, "p"), f(base, "w")));
    EXPECT_FALSE(infer_z(base, f(base, "p"), f(base, "w")));
}

TEST(Inference, MatchesOraclesAndNests) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto base = generate_random_base(2, 1 + seed % 4, seed, true);
        auto w = induce(base, InferenceMode::W);
        auto z = induce(base, InferenceMode::Z);
        auto p = induce(base, InferenceMode::P);
        const auto formulas = test::all_semantic_formulas(base.signature());
        for (const auto& a : formulas) {
            for (const auto& b : formulas) {
                const bool iw = w->infers(a, b), iz = z->infers(a, b), ip = p->infers(a, b);
                ASSERT_EQ(iw, oracle::infer_w(base, a, b));
                ASSERT_EQ(iz, oracle::infer_z(base, a, b));
                ASSERT_EQ(ip, oracle_p(base, a, b));
                ASSERT_TRUE(!iz || iw);
                ASSERT_TRUE(!ip || iz);
            }
        }
    }
}

TEST(Inference, WInfersStrictlyMoreThanZ) {
    std::size_t w_only = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto base = generate_random_base(3, 3, seed, true);
        SystemW w(base);
        SystemZ z(base);
        const auto formulas = test::all_semantic_formulas(base.signature());
        for (const auto& a : formulas) {
            for (const auto& b : formulas) w_only += w.infers(a, b) && !z.infers(a, b);
        }
    }
    EXPECT_GT(w_only, 0U);
}

TEST(Inference, EquivalentFormulasGiveEqualAnswers) {
    auto base = birds();
    auto sig = base.signature_ptr();
    Rng rng(21);
    std::vector<std::unique_ptr<InferenceRelation>> relations;
    for (auto mode : kModes) relations.push_back(induce(base, mode));
    for (int i = 0; i < 200; ++i) {
        auto a = test::random_formula(rng, sig, 3);
        auto b = test::random_formula(rng, sig, 3);
        auto a2 = Formula::negation(Formula::negation(Formula::conjunction({a, Formula::top(sig)})));
        auto b2 = Formula::from_models(sig, b.models());
        for (const auto& r : relations) {
            const bool expected = r->infers(a, b);
            ASSERT_EQ(r->infers(a2, b), expected);
            ASSERT_EQ(r->infers(a, b2), expected);
            ASSERT_EQ(r->infers(parse_formula(a.to_string(), sig), b), expected);
        }
    }
}

TEST(Inference, DirectInference) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto base = generate_random_base(3, 4, seed, true);
        for (auto mode : kModes) {
            auto r = induce(base, mode);
            for (const auto& c : base.conditionals()) {
                ASSERT_TRUE(r->infers(c.antecedent(), c.consequent()));
            }
        }
    }
}

TEST(Inference, EmptyBaseIsClassical) {
    auto base = make_base({"a", "b"}, {});
    const auto formulas = test::all_semantic_formulas(base.signature());
    for (auto mode : kModes) {
        auto r = induce(base, mode);
        for (const auto& a : formulas) {
            for (const auto& b : formulas) ASSERT_EQ(r->infers(a, b), a.is_subset_of(b));
        }
    }
}

}  // namespace
