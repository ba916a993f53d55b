#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "condw/belief_base.hpp"

namespace condw {

/// A partition {Σ1,…,Σn} of the signature with the induced partition {Δ1,…,Δn}
/// of the belief base. Atom and conditional indices refer to the base.
struct SyntaxSplitting {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::vector<std::size_t>> conditional_parts;

    friend bool operator==(const SyntaxSplitting&, const SyntaxSplitting&) = default;
};

/// Δ = Δ1 ∪_{Σ1,Σ2} Δ2. Either side may be empty only when the base has fewer
/// than two parts.
struct TwoPartSplitting {
    std::array<std::vector<std::size_t>, 2> atoms;
    std::array<std::vector<std::size_t>, 2> conditionals;

    friend bool operator==(const TwoPartSplitting&, const TwoPartSplitting&) = default;
};

/// The finest syntax splitting: connected components of the atom co-occurrence
/// graph. Parts are ordered by their smallest atom index.
SyntaxSplitting detect_splitting(const BeliefBase& base);

/// Checks the partition conditions and that every conditional's atoms lie in its part.
bool is_syntax_splitting(const BeliefBase& base, const SyntaxSplitting& splitting);
bool is_syntax_splitting(const BeliefBase& base, const TwoPartSplitting& splitting);

/// Splitting with the given atom parts; conditionals are assigned to the part
/// containing their atoms. Throws Error if the parts do not split the base.
SyntaxSplitting make_splitting(const BeliefBase& base,
                               const std::vector<std::vector<std::string>>& parts);

/// Every part-vs-rest two-part view. A splitting with fewer than two parts gives
/// one view whose second side is empty.
std::vector<TwoPartSplitting> bipartitions(const SyntaxSplitting& splitting);

/// "{b, p, f}: (f|b), (b|p), (!f|p)" per part, one per line.
std::string format_splitting(const BeliefBase& base, const SyntaxSplitting& splitting);

}  // namespace condw
