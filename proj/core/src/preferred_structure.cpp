#include "condw/preferred_structure.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "condw/errors.hpp"

namespace condw {

const char* to_string(WorldComparison c) {
    switch (c) {
        case WorldComparison::StrictlyLess: return "less";
        case WorldComparison::StrictlyGreater: return "greater";
        case WorldComparison::EqualProfile: return "equal";
        case WorldComparison::Incomparable: return "incomparable";
    }
    return "?";
}

XiProfile xi_profile(const BeliefBase& base, const TolerancePartition& partition, World w) {
    XiProfile p;
    for (const auto& layer : partition.layers) {
        auto& falsified = p.per_layer.emplace_back();
        for (auto i : layer) {
            if (base[i].evaluate(w) == Evaluation::Falsified) falsified.push_back(i);
        }
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i].evaluate(w) == Evaluation::Falsified) p.total.push_back(i);
    }
    return p;
}

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

PreferredStructure::PreferredStructure(const BeliefBase& base) : sig_(base.signature_ptr()) {
    const auto models = base.models();
    build(models);
}

PreferredStructure::PreferredStructure(std::shared_ptr<const Signature> sig,
                                       std::span<const ConditionalModels> conditionals)
    : sig_(std::move(sig)) {
    build(conditionals);
}

void PreferredStructure::build(std::span<const ConditionalModels> conditionals) {
    world_count_ = sig_->world_count();
    conditional_count_ = conditionals.size();
    auto partition = tolerance_partition(conditionals);
    if (!partition) throw InconsistentBaseError();
    partition_ = std::move(*partition);

    words_ = std::max<std::size_t>(1, (conditional_count_ + 63) / 64);
    for (const auto& layer : partition_.layers) {
        auto& mask = layer_masks_.emplace_back(words_, 0);
        for (auto i : layer) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    std::vector<std::uint64_t> rows(world_count_ * words_, 0);
    for (std::size_t i = 0; i < conditional_count_; ++i) {
        conditionals[i].falsifying.for_each([&](World w) {
            rows[w.index() * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        });
    }

    // Profile classes, numbered by first occurrence.
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, WordsHash> ids;
    std::vector<std::uint64_t> key(words_);
    class_of_.resize(world_count_);
    for (std::size_t w = 0; w < world_count_; ++w) {
        std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(w * words_), words_, key.begin());
        auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
        if (inserted) class_xi_.insert(class_xi_.end(), key.begin(), key.end());
        class_of_[w] = it->second;
    }

    const std::size_t classes = ids.size();
    if (classes <= kMatrixWorldLimit) {
        class_below_.assign(classes, ClassBits(classes));
        for (std::size_t a = 0; a < classes; ++a) {
            for (std::size_t b = a + 1; b < classes; ++b) {
                switch (compare_classes(a, b)) {
                    case WorldComparison::StrictlyLess: class_below_[b].set(a); break;
                    case WorldComparison::StrictlyGreater: class_below_[a].set(b); break;
                    default: break;
                }
            }
        }
    }

    if (world_count_ <= kMatrixWorldLimit) {
        std::vector<ModelSet> members(classes, ModelSet(world_count_));
        for (std::size_t w = 0; w < world_count_; ++w) {
            members[class_of_[w]].insert(World(static_cast<std::uint32_t>(w)));
        }
        std::vector<ModelSet> class_below_worlds(classes, ModelSet(world_count_));
        for (std::size_t c = 0; c < classes; ++c) {
            for (auto a = class_below_[c].find_first(); a != ClassBits::npos;
                 a = class_below_[c].find_next(a)) {
                class_below_worlds[c] |= members[a];
            }
        }
        below_.reserve(world_count_);
        for (std::size_t w = 0; w < world_count_; ++w) below_.push_back(class_below_worlds[class_of_[w]]);
    }
}

WorldComparison PreferredStructure::compare_classes(std::size_t a, std::size_t b) const {
    const std::uint64_t* xa = class_xi(a);
    const std::uint64_t* xb = class_xi(b);
    for (std::size_t j = layer_masks_.size(); j-- > 0;) {
        bool a_in_b = true;
        bool b_in_a = true;
        for (std::size_t k = 0; k < words_; ++k) {
            const std::uint64_t x = xa[k] & layer_masks_[j][k];
            const std::uint64_t y = xb[k] & layer_masks_[j][k];
            if (x & ~y) a_in_b = false;
            if (y & ~x) b_in_a = false;
        }
        if (a_in_b && b_in_a) continue;
        if (a_in_b) return WorldComparison::StrictlyLess;
        if (b_in_a) return WorldComparison::StrictlyGreater;
        return WorldComparison::Incomparable;
    }
    return WorldComparison::EqualProfile;
}

bool PreferredStructure::class_less(std::size_t a, std::size_t b) const {
    if (!class_below_.empty()) return class_below_[b].test(a);
    return compare_classes(a, b) == WorldComparison::StrictlyLess;
}

XiProfile PreferredStructure::profile(World w) const {
    const std::uint64_t* xi = class_xi(profile_class(w));
    auto has = [&](std::size_t i) { return (xi[i / 64] >> (i % 64)) & 1U; };
    XiProfile p;
    for (const auto& layer : partition_.layers) {
        auto& falsified = p.per_layer.emplace_back();
        for (auto i : layer) {
            if (has(i)) falsified.push_back(i);
        }
    }
    for (std::size_t i = 0; i < conditional_count_; ++i) {
        if (has(i)) p.total.push_back(i);
    }
    return p;
}

bool PreferredStructure::falsifies_nothing(World w) const {
    const std::uint64_t* xi = class_xi(profile_class(w));
    return std::all_of(xi, xi + words_, [](std::uint64_t x) { return x == 0; });
}

WorldComparison PreferredStructure::compare(World a, World b) const {
    return compare_classes(profile_class(a), profile_class(b));
}

bool PreferredStructure::less(World a, World b) const {
    if (has_matrix()) return below_[b.index()].contains(a);
    return class_less(profile_class(a), profile_class(b));
}

ModelSet PreferredStructure::below(World w) const {
    if (has_matrix()) return below_[w.index()];
    ModelSet out(world_count_);
    const std::size_t cw = profile_class(w);
    for (std::size_t x = 0; x < world_count_; ++x) {
        if (class_less(class_of_[x], cw)) out.insert(World(static_cast<std::uint32_t>(x)));
    }
    return out;
}

bool PreferredStructure::dominates_all(const ModelSet& candidates, const ModelSet& targets) const {
    const std::size_t classes = class_count();
    ClassBits candidate_classes(classes);
    candidates.for_each([&](World w) { candidate_classes.set(profile_class(w)); });
    ClassBits target_classes(classes);
    targets.for_each([&](World w) { target_classes.set(profile_class(w)); });

    for (auto t = target_classes.find_first(); t != ClassBits::npos; t = target_classes.find_next(t)) {
        if (!class_below_.empty()) {
            if (!class_below_[t].intersects(candidate_classes)) return false;
            continue;
        }
        bool found = false;
        for (auto c = candidate_classes.find_first(); c != ClassBits::npos && !found;
             c = candidate_classes.find_next(c)) {
            found = compare_classes(c, t) == WorldComparison::StrictlyLess;
        }
        if (!found) return false;
    }
    return true;
}

std::size_t PreferredStructure::class_count() const noexcept { return class_xi_.size() / words_; }

std::vector<std::pair<World, World>> PreferredStructure::related_pairs() const {
    std::vector<std::pair<World, World>> out;
    for (std::uint32_t b = 0; b < world_count_; ++b) {
        below(World(b)).for_each([&](World a) { out.emplace_back(a, World(b)); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<World, World>> PreferredStructure::hasse_edges() const {
    std::vector<std::pair<World, World>> out;
    // A world pair is a cover iff its class pair is: no world lies strictly between
    // two worlds of one class.
    const std::size_t classes = class_count();
    std::vector<std::vector<std::size_t>> cover_below(classes);
    std::vector<std::vector<World>> members(classes);
    for (std::uint32_t w = 0; w < world_count_; ++w) members[class_of_[w]].push_back(World(w));

    if (!class_below_.empty()) {
        std::vector<ClassBits> above(classes, ClassBits(classes));
        for (std::size_t hi = 0; hi < classes; ++hi) {
            for (auto lo = class_below_[hi].find_first(); lo != ClassBits::npos;
                 lo = class_below_[hi].find_next(lo)) {
                above[lo].set(hi);
            }
        }
        for (std::size_t hi = 0; hi < classes; ++hi) {
            for (auto lo = class_below_[hi].find_first(); lo != ClassBits::npos;
                 lo = class_below_[hi].find_next(lo)) {
                if (!class_below_[hi].intersects(above[lo])) cover_below[hi].push_back(lo);
            }
        }
    } else {
        for (std::size_t hi = 0; hi < classes; ++hi) {
            std::vector<std::size_t> lower;
            for (std::size_t lo = 0; lo < classes; ++lo) {
                if (class_less(lo, hi)) lower.push_back(lo);
            }
            for (auto lo : lower) {
                const bool covered = std::none_of(lower.begin(), lower.end(), [&](std::size_t mid) {
                    return class_less(lo, mid);
                });
                if (covered) cover_below[hi].push_back(lo);
            }
        }
    }
    for (std::size_t hi = 0; hi < classes; ++hi) {
        for (auto lo : cover_below[hi]) {
            for (World a : members[lo]) {
                for (World b : members[hi]) out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ModelSet PreferredStructure::minimal_worlds() const {
    ModelSet out(world_count_);
    const std::size_t classes = class_count();
    std::vector<bool> minimal(classes, true);
    for (std::size_t hi = 0; hi < classes; ++hi) {
        for (std::size_t lo = 0; lo < classes && minimal[hi]; ++lo) {
            if (class_less(lo, hi)) minimal[hi] = false;
        }
    }
    for (std::uint32_t w = 0; w < world_count_; ++w) {
        if (minimal[class_of_[w]]) out.insert(World(w));
    }
    return out;
}

void write_dot(std::ostream& out, const PreferredStructure& ps) {
    const auto& sig = ps.signature();
    out << "digraph preferred_structure {\n";
    out << "  node [shape=plaintext];\n";
    for (std::uint32_t w = 0; w < ps.world_count(); ++w) {
        out << "  w" << w << " [label=\"" << to_string(World(w), sig) << "\"];\n";
    }
    for (const auto& [lower, upper] : ps.hasse_edges()) {
        out << "  w" << upper.index() << " -> w" << lower.index() << ";\n";
    }
    out << "}\n";
}

void write_tsv(std::ostream& out, const PreferredStructure& ps) {
    const auto& sig = ps.signature();
    for (const auto& [lower, upper] : ps.related_pairs()) {
        out << to_string(lower, sig) << '\t' << to_string(upper, sig) << '\n';
    }
}

}  // namespace condw
