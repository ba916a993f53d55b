#include <gtest/gtest.h>

#include "condw/condw.hpp"

using namespace condw;

namespace {

TEST(Rng, Deterministic) {
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
    Rng c(5);
    auto set = c.nontrivial_model_set(4);
    EXPECT_FALSE(set.empty());
    EXPECT_FALSE(set.is_universe());
}

TEST(GenerateSplitBase, ShapeAndValidity) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = generate_split_base(2, 2, seed);
        EXPECT_EQ(g.base.signature().atoms(), (std::vector<std::string>{"a1", "b1", "a2", "b2"}));
        EXPECT_EQ(g.base.size(), 4U);
        EXPECT_TRUE(is_consistent(g.base));
        EXPECT_TRUE(is_syntax_splitting(g.base, g.splitting));
        EXPECT_EQ(g.splitting.atoms[0], (std::vector<std::size_t>{0, 2}));
        EXPECT_EQ(g.splitting.atoms[1], (std::vector<std::size_t>{1, 3}));
        EXPECT_EQ(g.splitting.conditionals[0].size(), 2U);
        for (const auto& c : g.base.conditionals()) {
            EXPECT_FALSE(c.antecedent().models().empty());
            EXPECT_FALSE(c.antecedent().models().is_universe());
        }
    }
}

TEST(GenerateSplitBase, SameSeedSameBase) {
    auto a = generate_split_base(2, 3, 77);
    auto b = generate_split_base(2, 3, 77);
    EXPECT_EQ(format_belief_base(a.base), format_belief_base(b.base));
    EXPECT_EQ(a.splitting, b.splitting);
    auto c = generate_split_base(2, 3, 78);
    EXPECT_NE(format_belief_base(a.base), format_belief_base(c.base));
}

TEST(GenerateSplitBase, NoConditionals) {
    auto g = generate_split_base(2, 0, 1);
    EXPECT_TRUE(g.base.empty());
    EXPECT_EQ(g.base.signature().size(), 4U);
}

TEST(GenerateSplitBase, GivesUpAfterAttemptCap) {
    EXPECT_THROW(generate_split_base(1, 16, 3, 5), Error);
}

TEST(GenerateRandomBase, ConsistentOnRequest) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto base = generate_random_base(3, 4, seed, true);
        EXPECT_TRUE(is_consistent(base));
        EXPECT_EQ(base.signature().atom(0), "x1");
    }
    auto a = generate_random_base(3, 4, 9, false);
    auto b = generate_random_base(3, 4, 9, false);
    EXPECT_EQ(format_belief_base(a), format_belief_base(b));
}

}  // namespace
