#include "condw/inference.hpp"

#include <algorithm>
#include <cctype>

#include "condw/errors.hpp"

namespace condw {

const char* to_string(InferenceMode mode) {
    switch (mode) {
        case InferenceMode::W: return "w";
        case InferenceMode::Z: return "z";
        case InferenceMode::P: return "p";
    }
    return "?";
}

std::optional<InferenceMode> parse_mode(std::string_view text) {
    if (text.size() != 1) return std::nullopt;
    switch (std::tolower(static_cast<unsigned char>(text[0]))) {
        case 'w': return InferenceMode::W;
        case 'z': return InferenceMode::Z;
        case 'p': return InferenceMode::P;
        default: return std::nullopt;
    }
}

bool SystemW::infers(const ModelSet& antecedent, const ModelSet& consequent) const {
    return order_.dominates_all(antecedent & consequent, antecedent - consequent);
}

SystemZ::SystemZ(const BeliefBase& base) : SystemZ(base.world_count(), base.models()) {}

SystemZ::SystemZ(std::size_t world_count, std::span<const ConditionalModels> conditionals) {
    auto partition = tolerance_partition(conditionals);
    if (!partition) throw InconsistentBaseError();
    partition_ = std::move(*partition);
    ranks_.assign(world_count, 0);
    for (std::size_t j = 0; j < partition_.layers.size(); ++j) {
        for (auto i : partition_.layers[j]) {
            const auto r = static_cast<unsigned>(j + 1);
            conditionals[i].falsifying.for_each(
                [&](World w) { ranks_[w.index()] = std::max(ranks_[w.index()], r); });
        }
    }
}

std::optional<unsigned> SystemZ::rank(const ModelSet& worlds) const {
    std::optional<unsigned> best;
    worlds.for_each([&](World w) {
        if (!best || ranks_[w.index()] < *best) best = ranks_[w.index()];
    });
    return best;
}

bool SystemZ::infers(const ModelSet& antecedent, const ModelSet& consequent) const {
    if (antecedent.empty()) return true;
    const auto verified = rank(antecedent & consequent);
    const auto falsified = rank(antecedent - consequent);
    if (!verified) return false;
    return !falsified || *verified < *falsified;
}

PEntailment::PEntailment(const BeliefBase& base) : PEntailment(base.models()) {}

PEntailment::PEntailment(std::vector<ConditionalModels> conditionals)
    : conditionals_(std::move(conditionals)) {
    if (!is_consistent(conditionals_)) throw InconsistentBaseError();
}

bool PEntailment::infers(const ModelSet& antecedent, const ModelSet& consequent) const {
    if (antecedent.empty()) return true;
    std::vector<ConditionalModels> extended = conditionals_;
    // (¬B|A) is verified by A¬B and falsified by AB.
    extended.push_back({antecedent - consequent, antecedent & consequent});
    return !is_consistent(extended);
}

std::unique_ptr<InferenceRelation> induce(const BeliefBase& base, InferenceMode mode) {
    switch (mode) {
        case InferenceMode::W: return std::make_unique<SystemW>(base);
        case InferenceMode::Z: return std::make_unique<SystemZ>(base);
        case InferenceMode::P: return std::make_unique<PEntailment>(base);
    }
    throw Error("unknown inference mode");
}

bool infer_w(const BeliefBase& base, const Formula& antecedent, const Formula& consequent) {
    return SystemW(base).infers(antecedent, consequent);
}

bool infer_z(const BeliefBase& base, const Formula& antecedent, const Formula& consequent) {
    return SystemZ(base).infers(antecedent, consequent);
}

bool infer_p(const BeliefBase& base, const Formula& antecedent, const Formula& consequent) {
    return PEntailment(base).infers(antecedent, consequent);
}

bool infer(const BeliefBase& base, InferenceMode mode, const InferenceQuery& query) {
    return induce(base, mode)->infers(query.antecedent, query.consequent);
}

}  // namespace condw
