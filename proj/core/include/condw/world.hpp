#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "condw/signature.hpp"

namespace condw {

/// One truth assignment. Bit i holds the value of atom i of the owning signature;
/// the signature itself is carried by context, not by the world.
class World {
public:
    constexpr World() noexcept = default;
    constexpr explicit World(std::uint32_t bits) noexcept : bits_(bits) {}

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr std::size_t index() const noexcept { return bits_; }
    constexpr bool holds(std::size_t atom) const noexcept { return (bits_ >> atom) & 1U; }

    constexpr World with(std::size_t atom, bool value) const noexcept {
        return value ? World(bits_ | (1U << atom)) : World(bits_ & ~(1U << atom));
    }

    friend constexpr auto operator<=>(World, World) noexcept = default;

private:
    std::uint32_t bits_ = 0;
};

/// Combine w1 over s1 and w2 over s2 into a world over target = s1 ∪ s2.
World merge_worlds(World w1, const Signature& s1, World w2, const Signature& s2,
                   const Signature& target);

/// Restriction of w (over from) to the atoms of sub.
World marginalize(World w, const Signature& from, const Signature& sub);

/// Atoms in signature order, negated ones prefixed with '!', no separators.
std::string to_string(World w, const Signature& sig);

}  // namespace condw
