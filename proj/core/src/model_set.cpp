#include "condw/model_set.hpp"

#include <algorithm>

#include "condw/errors.hpp"

namespace condw {

ModelSet ModelSet::atom(std::size_t world_count, std::size_t atom) {
    ModelSet s(world_count);
    const std::size_t period = std::size_t{1} << atom;
    for (std::size_t start = period; start < world_count; start += 2 * period) {
        s.bits_.set(start, std::min(period, world_count - start), true);
    }
    return s;
}

std::vector<World> ModelSet::worlds() const {
    std::vector<World> out;
    out.reserve(count());
    for_each([&](World w) { out.push_back(w); });
    return out;
}

namespace {

std::vector<std::size_t> positions_in(const Signature& sub, const Signature& full) {
    std::vector<std::size_t> pos;
    pos.reserve(sub.size());
    for (const auto& a : sub.atoms()) {
        auto idx = full.index_of(a);
        if (!idx) throw SignatureError("'" + a + "' is not in the signature");
        pos.push_back(*idx);
    }
    return pos;
}

std::uint32_t project(std::uint32_t bits, const std::vector<std::size_t>& positions) {
    std::uint32_t local = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        local |= ((bits >> positions[i]) & 1U) << i;
    }
    return local;
}

}  // namespace

ModelSet cylinder(const ModelSet& local, const Signature& sub, const Signature& full) {
    const auto positions = positions_in(sub, full);
    ModelSet out(full.world_count());
    for (std::uint32_t w = 0; w < full.world_count(); ++w) {
        if (local.contains(World(project(w, positions)))) out.insert(World(w));
    }
    return out;
}

ModelSet cylinder_from_mask(std::uint64_t mask, const Signature& sub, const Signature& full) {
    const auto positions = positions_in(sub, full);
    ModelSet out(full.world_count());
    for (std::uint32_t w = 0; w < full.world_count(); ++w) {
        if ((mask >> project(w, positions)) & 1U) out.insert(World(w));
    }
    return out;
}

}  // namespace condw
