#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "condw/belief_base.hpp"
#include "condw/splitting.hpp"

namespace condw {

/// Deterministic 64-bit engine; bounded draws use plain modulo so that a seed
/// produces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    bool coin() { return (engine_() >> 63) != 0; }

    /// Uniformly random set of worlds.
    ModelSet model_set(std::size_t world_count);
    /// Random set that is neither empty nor everything. Needs world_count >= 2.
    ModelSet nontrivial_model_set(std::size_t world_count);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

struct GeneratedBase {
    BeliefBase base;
    TwoPartSplitting splitting;
};

/// Consistent Δ = Δ1 ∪_{Σ1,Σ2} Δ2 with `vars_per_part` atoms and `conds_per_part`
/// conditionals on each side. Atoms are a1.. and b1.., interleaved in the signature;
/// conditionals of the two sides are shuffled together. Antecedents are never top
/// or bot. Inconsistent draws are discarded; throws Error after `max_attempts`.
GeneratedBase generate_split_base(std::size_t vars_per_part, std::size_t conds_per_part,
                                  std::uint64_t seed, std::size_t max_attempts = 1000);

/// Random base over atoms x1..xn (no splitting structure imposed). With
/// `require_consistent`, redraws until consistent; throws Error after `max_attempts`.
BeliefBase generate_random_base(std::size_t atoms, std::size_t conditionals, std::uint64_t seed,
                                bool require_consistent, std::size_t max_attempts = 1000);

}  // namespace condw
