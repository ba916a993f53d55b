#include <gtest/gtest.h>

#include <memory>

#include "condw/condw.hpp"
#include "fixtures.hpp"

using namespace condw;
using condw::test::birds;
using condw::test::world;

namespace {

std::shared_ptr<const Signature> sig_of(std::initializer_list<std::string> atoms) {
    return std::make_shared<const Signature>(std::vector<std::string>(atoms));
}

TEST(Signature, RejectsDuplicatesAndReservedNames) {
    EXPECT_THROW(Signature({"a", "a"}), SignatureError);
    EXPECT_THROW(Signature({"top"}), SignatureError);
    EXPECT_THROW(Signature({"A"}), SignatureError);
    EXPECT_FALSE(is_valid_atom_name("bot"));
    EXPECT_TRUE(is_valid_atom_name("x_1"));
}

TEST(Signature, RejectsMoreThanTheCap) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i <= kMaxAtoms; ++i) atoms.push_back("x" + std::to_string(i));
    EXPECT_THROW(Signature{atoms}, SignatureError);
    atoms.pop_back();
    EXPECT_NO_THROW(Signature{atoms});
}

TEST(Signature, SubsetAndRestriction) {
    Signature full{"b", "p", "f"};
    Signature sub = full.restrict_to({0, 2});
    EXPECT_EQ(sub.atoms(), (std::vector<std::string>{"b", "f"}));
    EXPECT_TRUE(sub.is_subset_of(full));
    EXPECT_FALSE(full.is_subset_of(sub));
    EXPECT_TRUE(Signature({"p"}).is_disjoint_from(sub));
}

TEST(ModelSet, TopBottomAndConjunction) {
    auto sig = sig_of({"a", "b", "c"});
    EXPECT_EQ(Formula::top(sig).models().count(), 8U);
    EXPECT_TRUE(Formula::bot(sig).models().empty());

    auto bp = sig_of({"b", "p"});
    const auto models = parse_formula("b,!p", bp).models();
    ASSERT_EQ(models.count(), 1U);
    EXPECT_EQ(to_string(models.worlds().front(), *bp), "b!p");
}

TEST(ModelSet, ConnectivesAreSetOperationsExhaustively) {
    auto sig = sig_of({"a", "b", "c", "d"});
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        auto f = test::random_formula(rng, sig, 3);
        auto g = test::random_formula(rng, sig, 3);
        const auto all = ModelSet::all(sig->world_count());
        EXPECT_EQ(Formula::negation(f).models(), all - f.models());
        EXPECT_EQ(Formula::conjunction({f, g}).models(), f.models() & g.models());
        EXPECT_EQ(Formula::disjunction({f, g}).models(), f.models() | g.models());
        for (std::uint32_t w = 0; w < sig->world_count(); ++w) {
            ASSERT_EQ(f.holds(World(w)), f.models().contains(World(w)));
        }
    }
}

TEST(ModelSet, PrinterRoundTrip) {
    auto sig = sig_of({"a", "b", "c", "d"});
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto f = test::random_formula(rng, sig, 4);
        auto back = parse_formula(f.to_string(), sig);
        ASSERT_TRUE(equivalent(f, back)) << f.to_string();
    }
}

TEST(ModelSet, FromModelsDescribesTheSameSet) {
    auto sig = sig_of({"a", "b", "c"});
    for (const auto& set : test::all_semantic_formulas(*sig)) {
        auto f = Formula::from_models(sig, set);
        ASSERT_EQ(f.models(), set) << f.to_string();
        ASSERT_TRUE(equivalent(parse_formula(f.to_string(), sig), f));
    }
    EXPECT_EQ(Formula::from_models(sig, ModelSet::all(8)).to_string(), "top");
    EXPECT_EQ(Formula::from_models(sig, ModelSet::none(8)).to_string(), "bot");
}

TEST(Cylinder, LiftsLocalSets) {
    Signature full{"b", "p", "f", "v", "d"};
    Signature vd = full.restrict_to({3, 4});
    auto sig = std::make_shared<const Signature>(full);
    // local world "v" (v true, d false) is index 1 over {v, d}.
    ModelSet local(4);
    local.insert(World(1));
    EXPECT_EQ(cylinder(local, vd, full), parse_formula("v,!d", sig).models());
    EXPECT_EQ(cylinder_from_mask(0b0010, vd, full), parse_formula("v,!d", sig).models());
}

TEST(Conditional, ThreeValuedEvaluation) {
    auto base = birds();
    const auto& fb = base[0];
    const auto& nfp = base[3];
    const auto& nvd = base[1];
    EXPECT_EQ(fb.evaluate(world(base, "b!pf!v!d")), Evaluation::Verified);
    EXPECT_EQ(nfp.evaluate(world(base, "bpf!v!d")), Evaluation::Falsified);
    EXPECT_EQ(nvd.evaluate(world(base, "!b!p!f!v!d")), Evaluation::NotApplicable);
}

TEST(Conditional, EvaluationPartitionsTheWorlds) {
    auto sig = sig_of({"a", "b", "c"});
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Conditional c(test::random_formula(rng, sig, 3), test::random_formula(rng, sig, 3));
        const auto m = c.models();
        EXPECT_FALSE(m.verifying.intersects(m.falsifying));
        for (std::uint32_t w = 0; w < sig->world_count(); ++w) {
            const auto e = c.evaluate(World(w));
            EXPECT_EQ(e == Evaluation::Verified, m.verifying.contains(World(w)));
            EXPECT_EQ(e == Evaluation::Falsified, m.falsifying.contains(World(w)));
            EXPECT_EQ(e == Evaluation::NotApplicable, !c.antecedent().holds(World(w)));
        }
    }
}

TEST(Worlds, MergeAndMarginalize) {
    Signature bf{"b", "f"};
    Signature d{"d"};
    Signature target{"b", "f", "d"};
    World merged = merge_worlds(World(0b11), bf, World(0b1), d, target);
    EXPECT_EQ(to_string(merged, target), "bfd");

    Signature empty;
    EXPECT_EQ(merge_worlds(World(0b01), bf, World(0), empty, bf), World(0b01));

    Signature birds_sig{"b", "p", "f", "v", "d"};
    World w = parse_world("b!pfv!d", birds_sig);
    EXPECT_EQ(to_string(marginalize(w, birds_sig, birds_sig.restrict_to({3, 4})),
                        birds_sig.restrict_to({3, 4})),
              "v!d");
    EXPECT_EQ(marginalize(w, birds_sig, birds_sig), w);
    EXPECT_EQ(marginalize(w, birds_sig, empty), World(0));
}

TEST(Worlds, MergeMarginalizeRoundTrip) {
    Signature full{"a", "b", "c", "d", "e"};
    Signature s1 = full.restrict_to({0, 3});
    Signature s2 = full.restrict_to({1, 2, 4});
    for (std::uint32_t w1 = 0; w1 < s1.world_count(); ++w1) {
        for (std::uint32_t w2 = 0; w2 < s2.world_count(); ++w2) {
            World m = merge_worlds(World(w1), s1, World(w2), s2, full);
            EXPECT_EQ(marginalize(m, full, s1), World(w1));
            EXPECT_EQ(marginalize(m, full, s2), World(w2));
        }
    }
}

TEST(Worlds, MisuseThrows) {
    Signature ab{"a", "b"};
    Signature bc{"b", "c"};
    Signature abc{"a", "b", "c"};
    EXPECT_THROW(merge_worlds(World(0), ab, World(0), bc, abc), SignatureError);
    EXPECT_THROW(merge_worlds(World(0), ab, World(0), Signature{"c"}, Signature{"a", "b", "d"}),
                 SignatureError);
    EXPECT_THROW(marginalize(World(0), ab, bc), SignatureError);
}

TEST(Worlds, StringRoundTrip) {
    Signature sig{"b", "p", "f", "v", "d"};
    for (std::uint32_t w = 0; w < sig.world_count(); ++w) {
        EXPECT_EQ(parse_world(to_string(World(w), sig), sig), World(w));
    }
}

}  // namespace
