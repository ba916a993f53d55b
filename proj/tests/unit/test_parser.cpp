#include <gtest/gtest.h>

#include <memory>

#include "condw/condw.hpp"

using namespace condw;

namespace {

std::shared_ptr<const Signature> birds_sig() {
    return std::make_shared<const Signature>(std::vector<std::string>{"b", "p", "f", "v", "d"});
}

TEST(ParseFormula, SingleNegation) {
    auto sig = std::make_shared<const Signature>(std::vector<std::string>{"v", "d"});
    auto f = parse_formula("!v", sig);
    ASSERT_EQ(f.kind(), FormulaKind::Not);
    ASSERT_EQ(f.children().size(), 1U);
    EXPECT_EQ(f.children()[0].kind(), FormulaKind::Atom);
    EXPECT_EQ(f.children()[0].atom_index(), 0U);
}

TEST(ParseFormula, Conjunction) {
    auto f = parse_formula("d,p", birds_sig());
    ASSERT_EQ(f.kind(), FormulaKind::And);
    auto kids = f.children();
    ASSERT_EQ(kids.size(), 2U);
    EXPECT_EQ(kids[0].atom_index(), 4U);
    EXPECT_EQ(kids[1].atom_index(), 1U);
    EXPECT_TRUE(f.same_syntax(parse_formula("d & p", birds_sig())));
}

TEST(ParseFormula, AndBindsTighterThanOr) {
    auto sig = std::make_shared<const Signature>(std::vector<std::string>{"a", "b", "c"});
    auto f = parse_formula("a;b,c", sig);
    ASSERT_EQ(f.kind(), FormulaKind::Or);
    auto kids = f.children();
    ASSERT_EQ(kids.size(), 2U);
    EXPECT_EQ(kids[0].kind(), FormulaKind::Atom);
    EXPECT_EQ(kids[1].kind(), FormulaKind::And);
    EXPECT_FALSE(equivalent(f, parse_formula("(a;b),c", sig)));
}

TEST(ParseFormula, NegationBindsTightest) {
    auto sig = std::make_shared<const Signature>(std::vector<std::string>{"a", "b"});
    EXPECT_TRUE(equivalent(parse_formula("!a,b", sig), parse_formula("(!a),b", sig)));
    EXPECT_TRUE(equivalent(parse_formula("!!a", sig), parse_formula("a", sig)));
    EXPECT_EQ(parse_formula("top", sig).kind(), FormulaKind::Top);
    EXPECT_EQ(parse_formula(" bot ", sig).kind(), FormulaKind::Bot);
}

TEST(ParseFormula, SyntaxErrorsCarryPositions) {
    auto sig = birds_sig();
    try {
        parse_formula("b,,p", sig, 4);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4U);
        EXPECT_EQ(e.column(), 3U);
    }
    EXPECT_THROW(parse_formula("", sig), ParseError);
    EXPECT_THROW(parse_formula("(b", sig), ParseError);
    EXPECT_THROW(parse_formula("b)", sig), ParseError);
    EXPECT_THROW(parse_formula("b p", sig), ParseError);
}

TEST(ParseFormula, UnknownAtomIsNamed) {
    try {
        parse_formula("b,zz", birds_sig());
        FAIL();
    } catch (const UnknownAtomError& e) {
        EXPECT_EQ(e.atom(), "zz");
        EXPECT_EQ(e.column(), 3U);
    }
}

TEST(ParseConditional, Basic) {
    auto c = parse_conditional("(!f|p)", birds_sig());
    EXPECT_EQ(c.to_string(), "(!f|p)");
    EXPECT_TRUE(equivalent(c.antecedent(), parse_formula("p", birds_sig())));
    EXPECT_TRUE(equivalent(c.consequent(), parse_formula("!f", birds_sig())));
    auto nested = parse_conditional("( (b;f) | (p,!v) )", birds_sig());
    EXPECT_TRUE(equivalent(nested.antecedent(), parse_formula("p,!v", birds_sig())));
}

TEST(ParseConditional, Malformed) {
    auto sig = birds_sig();
    EXPECT_THROW(parse_conditional("f|b", sig), ParseError);
    EXPECT_THROW(parse_conditional("(f b)", sig), ParseError);
    EXPECT_THROW(parse_conditional("(f|b|p)", sig), ParseError);
    EXPECT_THROW(parse_conditional("(f|)", sig), ParseError);
    EXPECT_THROW(parse_conditional("(f|b) x", sig), ParseError);
}

TEST(ParseBeliefBase, FileFormat) {
    const char* text =
        "# birds\n"
        "\n"
        "signature: b, p, f, v, d\n"
        "(f|b)   # birds fly\n"
        "(!v|d)\n"
        "(b|p)\n"
        "(!f|p)\n";
    auto base = parse_belief_base(text);
    EXPECT_EQ(base.signature().atoms(), (std::vector<std::string>{"b", "p", "f", "v", "d"}));
    ASSERT_EQ(base.size(), 4U);
    EXPECT_EQ(base[1].to_string(), "(!v|d)");

    auto again = parse_belief_base(format_belief_base(base));
    ASSERT_EQ(again.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        EXPECT_EQ(again[i].to_string(), base[i].to_string());
    }
}

TEST(ParseBeliefBase, EmptyBaseAndEmptySignature) {
    auto base = parse_belief_base("signature: a, b\n");
    EXPECT_TRUE(base.empty());
    EXPECT_EQ(base.signature().size(), 2U);
    auto none = parse_belief_base("signature:\n(top|top)\n");
    EXPECT_EQ(none.signature().size(), 0U);
    EXPECT_EQ(none.size(), 1U);
}

TEST(ParseBeliefBase, ErrorsReportLines) {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_belief_base(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("(a|b)\n"), 1U);
    EXPECT_EQ(line_of("# c\nsignature: a\n(a|\n"), 3U);
    EXPECT_EQ(line_of("signature: a\n(a|b)\n"), 2U);
    EXPECT_EQ(line_of("signature: a, a\n"), 1U);
    EXPECT_EQ(line_of(""), 1U);
}

TEST(ParseBeliefBase, DuplicatesStayDistinct) {
    auto base = parse_belief_base("signature: a\n(a|top)\n(a|top)\n");
    EXPECT_EQ(base.size(), 2U);
}

TEST(ParseBeliefBase, UnsatisfiableAntecedentsAreListed) {
    auto base = parse_belief_base("signature: a, b\n(a|b)\n(b|a,!a)\n");
    EXPECT_EQ(base.unsatisfiable_antecedents(), (std::vector<std::size_t>{1}));
}

}  // namespace
