#pragma once

#include <string>
#include <vector>

#include "condw/formula.hpp"

namespace condw {

enum class Evaluation { Verified, Falsified, NotApplicable };

/// The semantic content of a conditional (B|A): Mod(AB) and Mod(A¬B).
struct ConditionalModels {
    ModelSet verifying;
    ModelSet falsifying;
};

/// Conditional (B|A): "if A then usually B".
class Conditional {
public:
    Conditional(Formula consequent, Formula antecedent);

    /// Conditional whose formulas are short descriptions of the given model sets.
    static Conditional from_models(std::shared_ptr<const Signature> sig, const ModelSet& consequent,
                                   const ModelSet& antecedent);

    const Formula& antecedent() const noexcept { return antecedent_; }
    const Formula& consequent() const noexcept { return consequent_; }
    const Signature& signature() const noexcept { return antecedent_.signature(); }

    Evaluation evaluate(World w) const;
    ConditionalModels models() const;

    /// Atoms occurring in either formula, sorted.
    std::vector<std::size_t> atoms() const;

    /// "(B|A)"
    std::string to_string() const;

private:
    Formula consequent_;
    Formula antecedent_;
};

/// Parse "(B|A)".
Conditional parse_conditional(std::string_view text, std::shared_ptr<const Signature> sig,
                              std::size_t line = 1);

}  // namespace condw
