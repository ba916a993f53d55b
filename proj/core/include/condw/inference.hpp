#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "condw/belief_base.hpp"
#include "condw/preferred_structure.hpp"

namespace condw {

enum class InferenceMode { W, Z, P };

const char* to_string(InferenceMode mode);
/// Accepts "w", "z", "p" (either case).
std::optional<InferenceMode> parse_mode(std::string_view text);

struct InferenceQuery {
    Formula antecedent;
    Formula consequent;
};

/// The inference relation |~_Δ an operator induces on one belief base.
/// Queries are answered on model sets, so equivalent formulas are interchangeable.
class InferenceRelation {
public:
    virtual ~InferenceRelation() = default;

    virtual InferenceMode mode() const noexcept = 0;
    /// A |~ B for semantic formulas over the base's signature.
    virtual bool infers(const ModelSet& antecedent, const ModelSet& consequent) const = 0;

    bool infers(const Formula& antecedent, const Formula& consequent) const {
        return infers(antecedent.models(), consequent.models());
    }
};

/// System W: every A¬B-world has some AB-world below it in <_Δ.
class SystemW final : public InferenceRelation {
public:
    explicit SystemW(PreferredStructure order) : order_(std::move(order)) {}
    explicit SystemW(const BeliefBase& base) : order_(base) {}

    InferenceMode mode() const noexcept override { return InferenceMode::W; }
    using InferenceRelation::infers;
    bool infers(const ModelSet& antecedent, const ModelSet& consequent) const override;

    const PreferredStructure& order() const noexcept { return order_; }

private:
    PreferredStructure order_;
};

/// System Z: rank 0 for worlds falsifying nothing, else 1 + highest layer falsified;
/// A |~ B iff the least AB-rank is below the least A¬B-rank.
class SystemZ final : public InferenceRelation {
public:
    explicit SystemZ(const BeliefBase& base);
    SystemZ(std::size_t world_count, std::span<const ConditionalModels> conditionals);

    InferenceMode mode() const noexcept override { return InferenceMode::Z; }
    using InferenceRelation::infers;
    bool infers(const ModelSet& antecedent, const ModelSet& consequent) const override;

    unsigned rank(World w) const { return ranks_.at(w.index()); }
    /// Least rank in `worlds`; nullopt for the empty set.
    std::optional<unsigned> rank(const ModelSet& worlds) const;
    const TolerancePartition& partition() const noexcept { return partition_; }

private:
    TolerancePartition partition_;
    std::vector<unsigned> ranks_;
};

/// p-entailment: A |~ B iff A is unsatisfiable or Δ ∪ {(¬B|A)} is inconsistent.
class PEntailment final : public InferenceRelation {
public:
    explicit PEntailment(const BeliefBase& base);
    explicit PEntailment(std::vector<ConditionalModels> conditionals);

    InferenceMode mode() const noexcept override { return InferenceMode::P; }
    using InferenceRelation::infers;
    bool infers(const ModelSet& antecedent, const ModelSet& consequent) const override;

private:
    std::vector<ConditionalModels> conditionals_;
};

/// The relation `mode` induces on `base`. Throws InconsistentBaseError.
std::unique_ptr<InferenceRelation> induce(const BeliefBase& base, InferenceMode mode);

/// One-shot queries. Each throws InconsistentBaseError for an inconsistent base.
bool infer_w(const BeliefBase& base, const Formula& antecedent, const Formula& consequent);
bool infer_z(const BeliefBase& base, const Formula& antecedent, const Formula& consequent);
bool infer_p(const BeliefBase& base, const Formula& antecedent, const Formula& consequent);
bool infer(const BeliefBase& base, InferenceMode mode, const InferenceQuery& query);

}  // namespace condw
