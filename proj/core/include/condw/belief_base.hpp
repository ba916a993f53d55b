#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condw/conditional.hpp"

namespace condw {

/// Ordered conditionals over one signature. Position i (0-based) is the stable
/// identifier of the (i+1)-th conditional everywhere in the library.
class BeliefBase {
public:
    explicit BeliefBase(std::shared_ptr<const Signature> sig);
    BeliefBase(std::shared_ptr<const Signature> sig, std::vector<Conditional> conditionals);

    const Signature& signature() const noexcept { return *sig_; }
    const std::shared_ptr<const Signature>& signature_ptr() const noexcept { return sig_; }
    std::size_t world_count() const noexcept { return sig_->world_count(); }

    std::size_t size() const noexcept { return conditionals_.size(); }
    bool empty() const noexcept { return conditionals_.empty(); }
    const Conditional& operator[](std::size_t i) const { return conditionals_.at(i); }
    const std::vector<Conditional>& conditionals() const noexcept { return conditionals_; }

    void add(Conditional c);

    /// The conditionals at `indices`, in the order given, over the same signature.
    BeliefBase subset(std::span<const std::size_t> indices) const;

    /// Model sets of every conditional, in index order.
    std::vector<ConditionalModels> models() const;

    /// Indices of conditionals whose antecedent has no model.
    std::vector<std::size_t> unsatisfiable_antecedents() const;

private:
    std::shared_ptr<const Signature> sig_;
    std::vector<Conditional> conditionals_;
};

/// Parse the belief-base file format:
///   # comment
///   signature: a, b, c
///   (B|A)
/// Throws ParseError with the offending line and column.
BeliefBase parse_belief_base(std::string_view text);

/// Inverse of parse_belief_base (up to comments and whitespace).
std::string format_belief_base(const BeliefBase& base);

}  // namespace condw
