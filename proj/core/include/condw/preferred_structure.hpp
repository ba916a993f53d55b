#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "condw/belief_base.hpp"
#include "condw/tolerance.hpp"

namespace condw {

/// Conditionals falsified by one world: per tolerance layer and overall.
struct XiProfile {
    std::vector<std::vector<std::size_t>> per_layer;
    std::vector<std::size_t> total;

    friend bool operator==(const XiProfile&, const XiProfile&) = default;
};

enum class WorldComparison { StrictlyLess, StrictlyGreater, EqualProfile, Incomparable };

const char* to_string(WorldComparison c);

/// ξ profile of `w`, evaluated conditional by conditional against `base`.
XiProfile xi_profile(const BeliefBase& base, const TolerancePartition& partition, World w);

/// The preferred structure <_Δ on the worlds of a consistent belief base.
///
/// Worlds with identical falsification sets form a profile class; the order is
/// computed on classes and expanded to worlds. The world-level matrix is kept
/// when the signature has at most kMatrixWorldLimit worlds.
class PreferredStructure {
public:
    static constexpr std::size_t kMatrixWorldLimit = std::size_t{1} << 14;

    /// Throws InconsistentBaseError.
    explicit PreferredStructure(const BeliefBase& base);
    PreferredStructure(std::shared_ptr<const Signature> sig,
                       std::span<const ConditionalModels> conditionals);

    const Signature& signature() const noexcept { return *sig_; }
    std::size_t world_count() const noexcept { return world_count_; }
    std::size_t conditional_count() const noexcept { return conditional_count_; }
    const TolerancePartition& partition() const noexcept { return partition_; }

    XiProfile profile(World w) const;
    bool falsifies_nothing(World w) const;

    /// Decides at the highest layer where the two ξ sets differ.
    WorldComparison compare(World a, World b) const;
    /// a <_Δ b
    bool less(World a, World b) const;

    /// All worlds strictly preferred to `w`.
    ModelSet below(World w) const;

    /// True iff every world in `targets` has some world of `candidates` below it.
    bool dominates_all(const ModelSet& candidates, const ModelSet& targets) const;

    bool has_matrix() const noexcept { return !below_.empty(); }
    std::size_t class_count() const noexcept;
    std::size_t profile_class(World w) const { return class_of_.at(w.index()); }

    /// Related pairs (a, b) with a <_Δ b, sorted by (a, b).
    std::vector<std::pair<World, World>> related_pairs() const;
    /// Transitive reduction of the relation, sorted by (lower, upper).
    std::vector<std::pair<World, World>> hasse_edges() const;
    /// Worlds with nothing below them.
    ModelSet minimal_worlds() const;

private:
    using ClassBits = boost::dynamic_bitset<std::uint64_t>;

    void build(std::span<const ConditionalModels> conditionals);
    const std::uint64_t* class_xi(std::size_t c) const { return &class_xi_[c * words_]; }
    WorldComparison compare_classes(std::size_t a, std::size_t b) const;
    bool class_less(std::size_t a, std::size_t b) const;

    std::shared_ptr<const Signature> sig_;
    std::size_t world_count_ = 0;
    std::size_t conditional_count_ = 0;
    std::size_t words_ = 0;
    TolerancePartition partition_;
    std::vector<std::vector<std::uint64_t>> layer_masks_;

    std::vector<std::uint32_t> class_of_;       // world -> profile class
    std::vector<std::uint64_t> class_xi_;       // class -> falsified indices, `words_` per class
    std::vector<ClassBits> class_below_;        // class -> classes strictly below; empty if too many
    std::vector<ModelSet> below_;               // world -> worlds strictly below; empty if too many
};

/// Throws InconsistentBaseError.
inline PreferredStructure build_order(const BeliefBase& base) { return PreferredStructure(base); }

inline WorldComparison compare_worlds(const PreferredStructure& ps, World a, World b) {
    return ps.compare(a, b);
}

inline std::vector<std::pair<World, World>> hasse_edges(const PreferredStructure& ps) {
    return ps.hasse_edges();
}

/// Graphviz digraph of the Hasse diagram. Nodes are labelled with world strings;
/// each edge points from a world to one directly preferred to it.
void write_dot(std::ostream& out, const PreferredStructure& ps);

/// One "lower<TAB>upper" line per related pair (not reduced).
void write_tsv(std::ostream& out, const PreferredStructure& ps);

}  // namespace condw
