#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "condw/signature.hpp"
#include "condw/world.hpp"

namespace condw {

/// A set of worlds over a fixed signature, i.e. a formula up to logical equivalence.
class ModelSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    ModelSet() = default;
    explicit ModelSet(std::size_t world_count) : bits_(world_count) {}
    explicit ModelSet(Bits bits) : bits_(std::move(bits)) {}

    static ModelSet none(std::size_t world_count) { return ModelSet(world_count); }
    static ModelSet all(std::size_t world_count) {
        ModelSet s(world_count);
        s.bits_.set();
        return s;
    }
    /// Worlds in which atom `atom` is true.
    static ModelSet atom(std::size_t world_count, std::size_t atom);

    std::size_t world_count() const noexcept { return bits_.size(); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool is_universe() const noexcept { return bits_.all(); }

    bool contains(World w) const { return bits_.test(w.index()); }
    void insert(World w) { bits_.set(w.index()); }
    void erase(World w) { bits_.reset(w.index()); }

    bool is_subset_of(const ModelSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool is_proper_subset_of(const ModelSet& other) const {
        return bits_.is_proper_subset_of(other.bits_);
    }
    bool intersects(const ModelSet& other) const { return bits_.intersects(other.bits_); }

    ModelSet operator~() const { return ModelSet(~bits_); }
    ModelSet& operator&=(const ModelSet& o) { bits_ &= o.bits_; return *this; }
    ModelSet& operator|=(const ModelSet& o) { bits_ |= o.bits_; return *this; }
    ModelSet& operator-=(const ModelSet& o) { bits_ -= o.bits_; return *this; }
    friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
    friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
    friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }
    friend bool operator==(const ModelSet&, const ModelSet&) = default;

    /// Calls fn(World) for each member in ascending index order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
            fn(World(static_cast<std::uint32_t>(i)));
        }
    }

    std::vector<World> worlds() const;
    const Bits& bits() const noexcept { return bits_; }

private:
    Bits bits_;
};

/// Lift a set of worlds over `sub` (a sub-signature of `full`) to its cylinder over `full`:
/// every world whose marginal on `sub` is in `local`.
ModelSet cylinder(const ModelSet& local, const Signature& sub, const Signature& full);

/// Semantic formula over `sub` given by the low 2^|sub| bits of `mask`, lifted to `full`.
/// Only meaningful for |sub| <= 6.
ModelSet cylinder_from_mask(std::uint64_t mask, const Signature& sub, const Signature& full);

}  // namespace condw
