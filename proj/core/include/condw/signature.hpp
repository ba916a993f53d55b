#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace condw {

/// Largest signature the engine accepts; every algorithm enumerates all 2^n worlds.
inline constexpr std::size_t kMaxAtoms = 24;

/// Ordered set of distinct atom names. Atom i is bit i of every world.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<std::string> atoms);
    Signature(std::initializer_list<std::string> atoms)
        : Signature(std::vector<std::string>(atoms)) {}

    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    std::size_t world_count() const noexcept { return std::size_t{1} << atoms_.size(); }

    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    const std::string& atom(std::size_t index) const { return atoms_.at(index); }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    bool is_subset_of(const Signature& other) const;
    bool is_disjoint_from(const Signature& other) const;

    /// Atoms at the given positions, kept in this signature's order.
    Signature restrict_to(const std::vector<std::size_t>& indices) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::string> atoms_;
};

/// True for names matching [a-z][a-z0-9_]* that are not reserved words.
bool is_valid_atom_name(std::string_view name);

}  // namespace condw
