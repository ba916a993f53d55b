#include "condw/tolerance.hpp"

#include <algorithm>

namespace condw {

std::optional<std::size_t> TolerancePartition::layer_of(std::size_t index) const {
    for (std::size_t j = 0; j < layers.size(); ++j) {
        if (std::binary_search(layers[j].begin(), layers[j].end(), index)) return j;
    }
    return std::nullopt;
}

namespace {

// Worlds that falsify none of the conditionals at `indices`.
ModelSet unfalsified(std::span<const ConditionalModels> base,
                     const std::vector<std::size_t>& indices, std::size_t world_count) {
    ModelSet ok = ModelSet::all(world_count);
    for (auto i : indices) ok -= base[i].falsifying;
    return ok;
}

}  // namespace

std::optional<World> tolerance_witness(const ConditionalModels& candidate,
                                       std::span<const ConditionalModels> among) {
    ModelSet ok = candidate.verifying;
    for (const auto& c : among) ok -= c.falsifying;
    if (ok.empty()) return std::nullopt;
    return World(static_cast<std::uint32_t>(ok.bits().find_first()));
}

bool is_tolerated(const Conditional& candidate, const BeliefBase& among) {
    const auto models = among.models();
    return is_tolerated(candidate.models(), models);
}

std::optional<TolerancePartition> tolerance_partition(std::span<const ConditionalModels> base) {
    TolerancePartition out;
    if (base.empty()) return out;
    const std::size_t world_count = base.front().verifying.world_count();

    std::vector<std::size_t> remaining(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) remaining[i] = i;

    while (!remaining.empty()) {
        const ModelSet ok = unfalsified(base, remaining, world_count);
        std::vector<std::size_t> layer;
        std::vector<std::size_t> rest;
        for (auto i : remaining) {
            (base[i].verifying.intersects(ok) ? layer : rest).push_back(i);
        }
        if (layer.empty()) return std::nullopt;
        out.layers.push_back(std::move(layer));
        remaining = std::move(rest);
    }
    return out;
}

std::optional<TolerancePartition> tolerance_partition(const BeliefBase& base) {
    const auto models = base.models();
    return tolerance_partition(models);
}

}  // namespace condw
