#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "condw/belief_base.hpp"

namespace condw {

/// Ordered partition (Δ^0, …, Δ^k) of the conditional indices of a consistent base.
/// Each layer lists indices in ascending order.
struct TolerancePartition {
    std::vector<std::vector<std::size_t>> layers;

    std::size_t layer_count() const noexcept { return layers.size(); }
    /// k, the index of the last layer; -1 for the empty partition.
    long top_index() const noexcept { return static_cast<long>(layers.size()) - 1; }
    /// Layer containing conditional `index`, if any.
    std::optional<std::size_t> layer_of(std::size_t index) const;

    friend bool operator==(const TolerancePartition&, const TolerancePartition&) = default;
};

/// A world verifying `candidate` and falsifying no conditional of `among`, if one exists.
std::optional<World> tolerance_witness(const ConditionalModels& candidate,
                                       std::span<const ConditionalModels> among);

inline bool is_tolerated(const ConditionalModels& candidate,
                         std::span<const ConditionalModels> among) {
    return tolerance_witness(candidate, among).has_value();
}

bool is_tolerated(const Conditional& candidate, const BeliefBase& among);

/// The inclusion-maximal tolerance partition, or nullopt if the base is inconsistent.
std::optional<TolerancePartition> tolerance_partition(std::span<const ConditionalModels> base);
std::optional<TolerancePartition> tolerance_partition(const BeliefBase& base);

inline bool is_consistent(std::span<const ConditionalModels> base) {
    return tolerance_partition(base).has_value();
}
inline bool is_consistent(const BeliefBase& base) { return tolerance_partition(base).has_value(); }

}  // namespace condw
