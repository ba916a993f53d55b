#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "condw/model_set.hpp"
#include "condw/signature.hpp"
#include "condw/world.hpp"

namespace condw {

enum class FormulaKind { Top, Bot, Atom, Not, And, Or };

/// Propositional formula over a signature: a syntax tree plus its model set,
/// computed on first request and shared between copies.
class Formula {
public:
    static Formula top(std::shared_ptr<const Signature> sig);
    static Formula bot(std::shared_ptr<const Signature> sig);
    static Formula atom(std::shared_ptr<const Signature> sig, std::size_t index);
    static Formula atom(std::shared_ptr<const Signature> sig, const std::string& name);

    static Formula negation(const Formula& f);
    static Formula conjunction(std::vector<Formula> parts);
    static Formula disjunction(std::vector<Formula> parts);

    /// A short formula (minimised DNF over the atoms that matter) denoting `models`.
    static Formula from_models(std::shared_ptr<const Signature> sig, const ModelSet& models);

    FormulaKind kind() const noexcept { return node_->kind; }
    std::size_t atom_index() const noexcept { return node_->atom; }
    std::vector<Formula> children() const;

    const Signature& signature() const noexcept { return *sig_; }
    const std::shared_ptr<const Signature>& signature_ptr() const noexcept { return sig_; }

    /// Direct evaluation of the syntax tree in one world.
    bool holds(World w) const { return eval(*node_, w); }

    /// Mod(f) over the formula's signature.
    const ModelSet& models() const;

    bool is_satisfiable() const { return !models().empty(); }

    /// Sorted atom indices occurring syntactically.
    std::vector<std::size_t> atoms() const;

    /// Text in the input grammar; parsing it back yields an equivalent formula.
    std::string to_string() const;

    /// Same syntax tree (not mere equivalence).
    bool same_syntax(const Formula& other) const;

private:
    struct Node {
        FormulaKind kind = FormulaKind::Top;
        std::size_t atom = 0;
        std::vector<std::shared_ptr<const Node>> children;
    };
    struct Cache {
        std::once_flag once;
        ModelSet models;
    };

    Formula(std::shared_ptr<const Signature> sig, std::shared_ptr<const Node> node);

    static bool eval(const Node& n, World w);
    static ModelSet compute_models(const Node& n, std::size_t world_count);
    static void print(const Node& n, const Signature& sig, std::string& out, int parent_prec);
    static bool same(const Node& a, const Node& b);

    std::shared_ptr<const Signature> sig_;
    std::shared_ptr<const Node> node_;
    std::shared_ptr<Cache> cache_;
};

/// Logical equivalence: equal model sets.
inline bool equivalent(const Formula& a, const Formula& b) { return a.models() == b.models(); }

/// Parse `text` against the grammar
///   formula := disj ; disj := conj (';' conj)* ; conj := lit ((','|'&') lit)* ;
///   lit := '!' lit | '(' formula ')' | 'top' | 'bot' | atom
/// Throws ParseError / UnknownAtomError. `line` is used only for error positions.
Formula parse_formula(std::string_view text, std::shared_ptr<const Signature> sig,
                      std::size_t line = 1);

/// Parse a world string in the rendering of to_string(World, Signature).
World parse_world(std::string_view text, const Signature& sig);

}  // namespace condw
