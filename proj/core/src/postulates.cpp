#include "condw/postulates.hpp"

#include <algorithm>
#include <sstream>

#include "condw/errors.hpp"
#include "condw/generator.hpp"

namespace condw {

const char* to_string(Postulate p) {
    switch (p) {
        case Postulate::DI: return "di";
        case Postulate::TV: return "tv";
        case Postulate::Rel: return "rel";
        case Postulate::Ind: return "ind";
        case Postulate::SynSplit: return "synsplit";
        case Postulate::Lemma1: return "lemma1";
        case Postulate::Lemma2: return "lemma2";
        case Postulate::Lemma3: return "lemma3";
        case Postulate::Lemma4: return "lemma4";
    }
    return "?";
}

std::optional<Postulate> parse_postulate(std::string_view name) {
    for (auto p : {Postulate::DI, Postulate::TV, Postulate::Rel, Postulate::Ind,
                   Postulate::SynSplit, Postulate::Lemma1, Postulate::Lemma2, Postulate::Lemma3,
                   Postulate::Lemma4}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

const std::string* Witness::find(std::string_view key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return &v;
    }
    return nullptr;
}

const std::string& Witness::at(std::string_view key) const {
    if (const auto* v = find(key)) return *v;
    throw Error("witness has no field '" + std::string(key) + "'");
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_atoms(const Signature& sig, const std::vector<std::size_t>& atoms) {
    std::string s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) s += ',';
        s += sig.atom(atoms[i]);
    }
    return s;
}

std::string join_indices(const std::vector<std::size_t>& indices) {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(indices[i] + 1);
    }
    return s;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_atoms(const Signature& sig, const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& name : split_list(text)) {
        auto idx = sig.index_of(name);
        if (!idx) throw Error("witness names unknown atom '" + name + "'");
        out.push_back(*idx);
    }
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text)) out.push_back(std::stoul(item) - 1);
    return out;
}

std::uint32_t atom_mask(const std::vector<std::size_t>& atoms) {
    std::uint32_t m = 0;
    for (auto a : atoms) m |= 1U << a;
    return m;
}

void add_split_fields(Witness& w, const Signature& sig, const TwoPartSplitting& split) {
    w.fields.emplace_back("first_atoms", join_atoms(sig, split.atoms[0]));
    w.fields.emplace_back("second_atoms", join_atoms(sig, split.atoms[1]));
    w.fields.emplace_back("first_conditionals", join_indices(split.conditionals[0]));
    w.fields.emplace_back("second_conditionals", join_indices(split.conditionals[1]));
}

TwoPartSplitting split_from(const Signature& sig, const Witness& w) {
    TwoPartSplitting s;
    s.atoms[0] = parse_atoms(sig, w.at("first_atoms"));
    s.atoms[1] = parse_atoms(sig, w.at("second_atoms"));
    s.conditionals[0] = parse_indices(w.at("first_conditionals"));
    s.conditionals[1] = parse_indices(w.at("second_conditionals"));
    return s;
}

// True iff membership in `s` never changes when an atom outside `atoms` is flipped.
bool depends_only_on(const ModelSet& s, std::uint32_t atoms, std::size_t atom_count) {
    for (std::size_t i = 0; i < atom_count; ++i) {
        if ((atoms >> i) & 1U) continue;
        const std::uint32_t flip = 1U << i;
        bool stable = true;
        s.for_each([&](World w) { stable = stable && s.contains(World(w.bits() ^ flip)); });
        if (!stable) return false;
    }
    return true;
}

std::string describe(const std::shared_ptr<const Signature>& sig, const ModelSet& s) {
    return Formula::from_models(sig, s).to_string();
}

// Semantic formulas over one part of the signature, lifted to the full signature.
class FormulaSpace {
public:
    FormulaSpace(std::shared_ptr<const Signature> full, const std::vector<std::size_t>& atoms,
                 std::size_t bound)
        : full_(std::move(full)), part_(full_->restrict_to(atoms)) {
        exhaustive_ = part_.size() <= std::min(bound, kMaxExhaustiveAtoms);
        if (exhaustive_) {
            const std::uint64_t count = std::uint64_t{1} << part_.world_count();
            for (std::uint64_t mask = 0; mask < count; ++mask) {
                formulas_.push_back(cylinder_from_mask(mask, part_, *full_));
            }
        }
    }

    bool exhaustive() const noexcept { return exhaustive_; }
    const std::vector<ModelSet>& formulas() const noexcept { return formulas_; }
    std::size_t atom_count() const noexcept { return part_.size(); }

    ModelSet sample(Rng& rng) const {
        return cylinder(rng.model_set(part_.world_count()), part_, *full_);
    }
    ModelSet sample_consistent(Rng& rng) const {
        for (;;) {
            ModelSet s = rng.model_set(part_.world_count());
            if (!s.empty()) return cylinder(s, part_, *full_);
        }
    }

    std::string bounds() const {
        if (exhaustive_) {
            return "exhaustive " + std::to_string(formulas_.size()) + " formulas over " +
                   std::to_string(part_.size()) + " atoms";
        }
        return "sampled over " + std::to_string(part_.size()) + " atoms";
    }

private:
    std::shared_ptr<const Signature> full_;
    Signature part_;
    bool exhaustive_ = false;
    std::vector<ModelSet> formulas_;
};

PostulateReport make_report(Postulate p, std::optional<InferenceMode> mode, std::uint64_t seed) {
    PostulateReport r;
    r.postulate = p;
    r.mode = mode;
    r.seed = seed;
    return r;
}

// ---------------------------------------------------------------------------
// Single-instance predicates shared by the checkers and by replay.

bool rel_violated(const InferenceRelation& full, const InferenceRelation& part, const ModelSet& a,
                  const ModelSet& b) {
    return full.infers(a, b) != part.infers(a, b);
}

bool ind_violated(const InferenceRelation& rel, const ModelSet& a, const ModelSet& b,
                  const ModelSet& d, bool conjoin, bool base_result) {
    const bool with_d = conjoin ? rel.infers(a & d, b & d) : rel.infers(a & d, b);
    return with_d != base_result;
}

Witness rel_witness(const BeliefBase& base, const TwoPartSplitting& split, std::size_t side,
                    const ModelSet& a, const ModelSet& b, bool full_result) {
    Witness w;
    add_split_fields(w, base.signature(), split);
    w.fields.emplace_back("side", std::to_string(side + 1));
    w.fields.emplace_back("A", describe(base.signature_ptr(), a));
    w.fields.emplace_back("B", describe(base.signature_ptr(), b));
    w.fields.emplace_back("whole_base", yes_no(full_result));
    w.fields.emplace_back("part_only", yes_no(!full_result));
    return w;
}

Witness ind_witness(const BeliefBase& base, const TwoPartSplitting& split, std::size_t side,
                    const ModelSet& a, const ModelSet& b, const ModelSet& d, bool conjoin,
                    bool base_result) {
    Witness w;
    add_split_fields(w, base.signature(), split);
    w.fields.emplace_back("side", std::to_string(side + 1));
    w.fields.emplace_back("A", describe(base.signature_ptr(), a));
    w.fields.emplace_back("B", describe(base.signature_ptr(), b));
    w.fields.emplace_back("D", describe(base.signature_ptr(), d));
    w.fields.emplace_back("form", conjoin ? "AD|~BD" : "AD|~B");
    w.fields.emplace_back("without_D", yes_no(base_result));
    w.fields.emplace_back("with_D", yes_no(!base_result));
    return w;
}

}  // namespace

// ---------------------------------------------------------------------------

PostulateReport check_di(const BeliefBase& base, InferenceMode mode) {
    auto report = make_report(Postulate::DI, mode, 0);
    report.search_bounds = "all " + std::to_string(base.size()) + " conditionals";
    const auto rel = induce(base, mode);
    for (std::size_t i = 0; i < base.size(); ++i) {
        ++report.instances;
        if (!rel->infers(base[i].antecedent(), base[i].consequent())) {
            report.passed = false;
            report.witness = Witness{{{"conditional", base[i].to_string()},
                                      {"index", std::to_string(i + 1)}}};
            return report;
        }
    }
    return report;
}

PostulateReport check_tv(std::shared_ptr<const Signature> sig, InferenceMode mode,
                         const CheckOptions& options) {
    auto report = make_report(Postulate::TV, mode, options.seed);
    const BeliefBase empty(sig);
    const auto rel = induce(empty, mode);
    std::vector<std::size_t> all(sig->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const FormulaSpace space(sig, all, options.exhaustive_bound);

    auto test = [&](const ModelSet& a, const ModelSet& b) {
        ++report.instances;
        const bool classical = a.is_subset_of(b);
        if (rel->infers(a, b) == classical) return true;
        report.passed = false;
        report.witness = Witness{{{"A", describe(sig, a)},
                                  {"B", describe(sig, b)},
                                  {"classical", yes_no(classical)},
                                  {"inferred", yes_no(!classical)}}};
        return false;
    };

    report.search_bounds = "empty base; " + space.bounds();
    if (space.exhaustive()) {
        for (const auto& a : space.formulas()) {
            for (const auto& b : space.formulas()) {
                if (!test(a, b)) return report;
            }
        }
    } else {
        Rng rng(options.seed);
        report.search_bounds += "; " + std::to_string(options.samples) + " pairs";
        for (std::size_t k = 0; k < options.samples; ++k) {
            const ModelSet a = space.sample(rng);
            const ModelSet b = space.sample(rng);
            if (!test(a, b)) return report;
        }
    }
    return report;
}

PostulateReport check_rel(const BeliefBase& base, const TwoPartSplitting& split, InferenceMode mode,
                          const CheckOptions& options) {
    auto report = make_report(Postulate::Rel, mode, options.seed);
    const auto full = induce(base, mode);
    Rng rng(options.seed);
    std::string bounds;
    for (std::size_t side = 0; side < 2; ++side) {
        const auto part = induce(base.subset(split.conditionals[side]), mode);
        const FormulaSpace space(base.signature_ptr(), split.atoms[side], options.exhaustive_bound);
        bounds += (side ? " | " : "") + std::string("part ") + std::to_string(side + 1) + ": " +
                  space.bounds();

        auto test = [&](const ModelSet& a, const ModelSet& b) {
            ++report.instances;
            if (!rel_violated(*full, *part, a, b)) return true;
            report.passed = false;
            report.witness = rel_witness(base, split, side, a, b, full->infers(a, b));
            return false;
        };

        bool ok = true;
        if (space.exhaustive()) {
            for (const auto& a : space.formulas()) {
                for (const auto& b : space.formulas()) {
                    if (!(ok = test(a, b))) break;
                }
                if (!ok) break;
            }
        } else {
            bounds += ", " + std::to_string(options.samples) + " pairs";
            for (std::size_t k = 0; k < options.samples && ok; ++k) {
                const ModelSet a = space.sample(rng);
                const ModelSet b = space.sample(rng);
                ok = test(a, b);
            }
        }
        if (!ok) break;
    }
    report.search_bounds = bounds;
    return report;
}

PostulateReport check_ind(const BeliefBase& base, const TwoPartSplitting& split, InferenceMode mode,
                          const CheckOptions& options) {
    auto report = make_report(Postulate::Ind, mode, options.seed);
    const auto rel = induce(base, mode);
    const bool conjoin = options.conjoin_consequent;
    Rng rng(options.seed);
    std::string bounds = conjoin ? "form AD|~BD; " : "form AD|~B; ";

    for (std::size_t side = 0; side < 2; ++side) {
        const std::size_t other = 1 - side;
        const FormulaSpace inner(base.signature_ptr(), split.atoms[side], options.exhaustive_bound);
        const FormulaSpace outer(base.signature_ptr(), split.atoms[other], options.exhaustive_bound);
        bounds += (side ? " | " : "") + std::string("A,B on part ") + std::to_string(side + 1) +
                  " (" + inner.bounds() + "), D on part " + std::to_string(other + 1) + " (" +
                  outer.bounds() + ")";

        auto test = [&](const ModelSet& a, const ModelSet& b, const ModelSet& d, bool base_result) {
            ++report.instances;
            if (!ind_violated(*rel, a, b, d, conjoin, base_result)) return true;
            report.passed = false;
            report.witness = ind_witness(base, split, side, a, b, d, conjoin, base_result);
            return false;
        };

        if (inner.exhaustive() && outer.exhaustive()) {
            std::vector<const ModelSet*> consistent;
            for (const auto& d : outer.formulas()) {
                if (!d.empty()) consistent.push_back(&d);
            }
            for (const auto& a : inner.formulas()) {
                for (const auto& b : inner.formulas()) {
                    const bool base_result = rel->infers(a, b);
                    for (const ModelSet* d : consistent) {
                        if (!test(a, b, *d, base_result)) {
                            report.search_bounds = bounds;
                            return report;
                        }
                    }
                }
            }
        } else {
            bounds += ", " + std::to_string(options.samples) + " triples";
            for (std::size_t k = 0; k < options.samples; ++k) {
                const ModelSet a = inner.sample(rng);
                const ModelSet b = inner.sample(rng);
                const ModelSet d = outer.sample_consistent(rng);
                if (!test(a, b, d, rel->infers(a, b))) {
                    report.search_bounds = bounds;
                    return report;
                }
            }
        }
    }
    report.search_bounds = bounds;
    return report;
}

PostulateReport check_synsplit(const BeliefBase& base, const TwoPartSplitting& split,
                               InferenceMode mode, const CheckOptions& options) {
    auto rel = check_rel(base, split, mode, options);
    auto ind = check_ind(base, split, mode, options);
    auto report = make_report(Postulate::SynSplit, mode, options.seed);
    report.instances = rel.instances + ind.instances;
    report.search_bounds = "rel: " + rel.search_bounds + "; ind: " + ind.search_bounds;
    const PostulateReport* failed = !rel.passed ? &rel : (!ind.passed ? &ind : nullptr);
    if (failed) {
        report.passed = false;
        Witness w = *failed->witness;
        w.fields.insert(w.fields.begin(), {"component", to_string(failed->postulate)});
        report.witness = std::move(w);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Lemmas on the preferred structure.

namespace {

struct SplitOrders {
    PreferredStructure whole;
    std::array<PreferredStructure, 2> parts;
};

SplitOrders build_split_orders(const BeliefBase& base, const TwoPartSplitting& split) {
    return {PreferredStructure(base),
            {PreferredStructure(base.subset(split.conditionals[0])),
             PreferredStructure(base.subset(split.conditionals[1]))}};
}

std::string pairs_bounds(std::size_t worlds) {
    return "all " + std::to_string(worlds * worlds) + " world pairs";
}

std::vector<std::size_t> mapped(const std::vector<std::size_t>& local,
                                const std::vector<std::size_t>& to_parent) {
    std::vector<std::size_t> out;
    for (auto i : local) out.push_back(to_parent.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

// Empty string when all three claims hold, else a description of the first failure.
std::pair<std::string, std::string> lemma1_failure(const BeliefBase& base,
                                                   const TwoPartSplitting& split,
                                                   std::size_t& instances) {
    auto whole = tolerance_partition(base);
    if (!whole) throw InconsistentBaseError();
    std::array<TolerancePartition, 2> parts;
    for (std::size_t i = 0; i < 2; ++i) {
        auto p = tolerance_partition(base.subset(split.conditionals[i]));
        if (!p) throw InconsistentBaseError();
        for (auto& layer : p->layers) layer = mapped(layer, split.conditionals[i]);
        parts[i] = std::move(*p);
    }

    auto layer_text = [&](const std::vector<std::size_t>& layer) {
        std::string s = "{";
        for (std::size_t i = 0; i < layer.size(); ++i) s += (i ? ", " : "") + base[layer[i]].to_string();
        return s + "}";
    };

    // (1) Δ_i^j = Δ^j ∩ Δ_i.
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<std::size_t> members = split.conditionals[i];
        std::sort(members.begin(), members.end());
        for (std::size_t j = 0; j < parts[i].layers.size(); ++j) {
            ++instances;
            std::vector<std::size_t> expected;
            if (j < whole->layers.size()) {
                std::set_intersection(whole->layers[j].begin(), whole->layers[j].end(),
                                      members.begin(), members.end(), std::back_inserter(expected));
            }
            if (expected != parts[i].layers[j]) {
                return {"1", "layer " + std::to_string(j) + " of part " + std::to_string(i + 1) +
                                 " is " + layer_text(parts[i].layers[j]) + " but the whole base gives " +
                                 layer_text(expected)};
            }
        }
    }

    // (2) max{l1, l2} = k.
    ++instances;
    const long l1 = parts[0].top_index();
    const long l2 = parts[1].top_index();
    const long k = whole->top_index();
    if (std::max(l1, l2) != k) {
        return {"2", "max{l1=" + std::to_string(l1) + ", l2=" + std::to_string(l2) +
                         "} differs from k=" + std::to_string(k)};
    }

    // (3) Δ^j = Δ_1^j ∪ Δ_2^j up to the shorter partition, then the longer one's layers.
    const std::size_t shorter = l1 <= l2 ? 0 : 1;
    const long l_short = std::min(l1, l2);
    for (long j = 0; j <= k; ++j) {
        ++instances;
        std::vector<std::size_t> expected;
        if (j <= l_short) {
            const auto& x = parts[0].layers[static_cast<std::size_t>(j)];
            const auto& y = parts[1].layers[static_cast<std::size_t>(j)];
            std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(expected));
        } else {
            expected = parts[1 - shorter].layers[static_cast<std::size_t>(j)];
        }
        if (expected != whole->layers[static_cast<std::size_t>(j)]) {
            return {"3", "layer " + std::to_string(j) + " of the whole base is " +
                             layer_text(whole->layers[static_cast<std::size_t>(j)]) +
                             " but the parts give " + layer_text(expected)};
        }
    }
    return {};
}

Witness world_witness(const BeliefBase& base, const TwoPartSplitting& split,
                      std::vector<std::pair<std::string, World>> worlds) {
    Witness w;
    add_split_fields(w, base.signature(), split);
    for (auto& [name, world] : worlds) w.fields.emplace_back(name, to_string(world, base.signature()));
    return w;
}

// Lemma 2 at one pair: a <_Δ b implies a <_Δ1 b or a <_Δ2 b.
bool lemma2_violated(const SplitOrders& o, World a, World b) {
    return o.whole.less(a, b) && !o.parts[0].less(a, b) && !o.parts[1].less(a, b);
}

// Lemma 3 at one pair for side i: a <_Δi b and equal marginals on the other side
// imply a <_Δ b.
bool lemma3_violated(const SplitOrders& o, std::size_t side, std::uint32_t other_mask, World a,
                     World b) {
    return o.parts[side].less(a, b) && (a.bits() & other_mask) == (b.bits() & other_mask) &&
           !o.whole.less(a, b);
}

// Lemma 4 at one triple for side i: equal marginals of wa, wb on side i give
// wa <_Δi w' iff wb <_Δi w'.
bool lemma4_violated(const PreferredStructure& part, std::uint32_t side_mask, World wa, World wb,
                     World w) {
    return (wa.bits() & side_mask) == (wb.bits() & side_mask) && part.less(wa, w) != part.less(wb, w);
}

}  // namespace

PostulateReport check_lemma1(const BeliefBase& base, const TwoPartSplitting& split) {
    auto report = make_report(Postulate::Lemma1, std::nullopt, 0);
    report.search_bounds = "all layers of the three tolerance partitions";
    auto [claim, detail] = lemma1_failure(base, split, report.instances);
    if (!claim.empty()) {
        report.passed = false;
        Witness w;
        add_split_fields(w, base.signature(), split);
        w.fields.emplace_back("claim", claim);
        w.fields.emplace_back("detail", detail);
        report.witness = std::move(w);
    }
    return report;
}

PostulateReport check_lemma2(const BeliefBase& base, const TwoPartSplitting& split) {
    auto report = make_report(Postulate::Lemma2, std::nullopt, 0);
    const auto orders = build_split_orders(base, split);
    const auto n = static_cast<std::uint32_t>(base.world_count());
    report.search_bounds = pairs_bounds(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            ++report.instances;
            if (lemma2_violated(orders, World(a), World(b))) {
                report.passed = false;
                report.witness = world_witness(base, split, {{"w", World(a)}, {"w'", World(b)}});
                return report;
            }
        }
    }
    return report;
}

PostulateReport check_lemma3(const BeliefBase& base, const TwoPartSplitting& split) {
    auto report = make_report(Postulate::Lemma3, std::nullopt, 0);
    const auto orders = build_split_orders(base, split);
    const auto n = static_cast<std::uint32_t>(base.world_count());
    report.search_bounds = pairs_bounds(n) + ", both sides";
    for (std::size_t side = 0; side < 2; ++side) {
        const std::uint32_t other_mask = atom_mask(split.atoms[1 - side]);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                ++report.instances;
                if (lemma3_violated(orders, side, other_mask, World(a), World(b))) {
                    report.passed = false;
                    report.witness = world_witness(base, split, {{"w", World(a)}, {"w'", World(b)}});
                    report.witness->fields.emplace_back("side", std::to_string(side + 1));
                    return report;
                }
            }
        }
    }
    return report;
}

PostulateReport check_lemma4(const BeliefBase& base, const TwoPartSplitting& split) {
    auto report = make_report(Postulate::Lemma4, std::nullopt, 0);
    const auto orders = build_split_orders(base, split);
    const auto n = static_cast<std::uint32_t>(base.world_count());
    report.search_bounds = "all world triples with equal marginals, both sides";
    for (std::size_t side = 0; side < 2; ++side) {
        const auto& part = orders.parts[side];
        const std::uint32_t side_mask = atom_mask(split.atoms[side]);
        const std::uint32_t other_mask = atom_mask(split.atoms[1 - side]);
        for (std::uint32_t a = 0; a < n; ++a) {
            // Every b agreeing with a on this side: a's side bits plus any other-side bits.
            std::uint32_t sub = 0;
            do {
                const World wa(a);
                const World wb((a & side_mask) | sub);
                for (std::uint32_t w = 0; w < n; ++w) {
                    ++report.instances;
                    if (lemma4_violated(part, side_mask, wa, wb, World(w))) {
                        report.passed = false;
                        report.witness =
                            world_witness(base, split, {{"wa", wa}, {"wb", wb}, {"w'", World(w)}});
                        report.witness->fields.emplace_back("side", std::to_string(side + 1));
                        return report;
                    }
                }
                sub = (sub - other_mask) & other_mask;
            } while (sub != 0);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

PostulateReport check(Postulate postulate, const BeliefBase& base, const TwoPartSplitting& split,
                      InferenceMode mode, const CheckOptions& options) {
    switch (postulate) {
        case Postulate::DI: return check_di(base, mode);
        case Postulate::TV: return check_tv(base.signature_ptr(), mode, options);
        case Postulate::Rel: return check_rel(base, split, mode, options);
        case Postulate::Ind: return check_ind(base, split, mode, options);
        case Postulate::SynSplit: return check_synsplit(base, split, mode, options);
        case Postulate::Lemma1: return check_lemma1(base, split);
        case Postulate::Lemma2: return check_lemma2(base, split);
        case Postulate::Lemma3: return check_lemma3(base, split);
        case Postulate::Lemma4: return check_lemma4(base, split);
    }
    throw Error("unknown postulate");
}

PostulateReport check(Postulate postulate, const BeliefBase& base, const SyntaxSplitting& splitting,
                      InferenceMode mode, const CheckOptions& options) {
    if (postulate == Postulate::DI || postulate == Postulate::TV) {
        return check(postulate, base, TwoPartSplitting{}, mode, options);
    }
    const auto views = bipartitions(splitting);
    std::size_t instances = 0;
    PostulateReport last;
    for (std::size_t v = 0; v < views.size(); ++v) {
        last = check(postulate, base, views[v], mode, options);
        if (views.size() > 1) {
            last.search_bounds = "view " + std::to_string(v + 1) + "/" +
                                 std::to_string(views.size()) + ": " + last.search_bounds;
        }
        instances += last.instances;
        last.instances = instances;
        if (!last.passed) break;
    }
    return last;
}

// ---------------------------------------------------------------------------

bool replay(const BeliefBase& base, const PostulateReport& report) {
    if (report.passed || !report.witness) return false;
    const Witness& w = *report.witness;
    const auto& sig = base.signature_ptr();
    auto formula = [&](std::string_view key) { return parse_formula(w.at(key), sig).models(); };
    auto world = [&](std::string_view key) { return parse_world(w.at(key), *sig); };

    switch (report.postulate) {
        case Postulate::DI: {
            const std::size_t i = std::stoul(w.at("index")) - 1;
            return !induce(base, *report.mode)->infers(base[i].antecedent(), base[i].consequent());
        }
        case Postulate::TV: {
            const auto rel = induce(BeliefBase(sig), *report.mode);
            const ModelSet a = formula("A");
            const ModelSet b = formula("B");
            return rel->infers(a, b) != a.is_subset_of(b);
        }
        case Postulate::Rel: {
            const auto split = split_from(*sig, w);
            const std::size_t side = std::stoul(w.at("side")) - 1;
            const std::uint32_t local = atom_mask(split.atoms[side]);
            if (!is_syntax_splitting(base, split) || !depends_only_on(formula("A"), local, sig->size()) ||
                !depends_only_on(formula("B"), local, sig->size())) {
                return false;
            }
            const auto full = induce(base, *report.mode);
            const auto part = induce(base.subset(split.conditionals[side]), *report.mode);
            return rel_violated(*full, *part, formula("A"), formula("B"));
        }
        case Postulate::Ind: {
            const auto rel = induce(base, *report.mode);
            const ModelSet a = formula("A");
            const ModelSet b = formula("B");
            const ModelSet d = formula("D");
            const auto split = split_from(*sig, w);
            const std::size_t side = std::stoul(w.at("side")) - 1;
            const std::uint32_t local = atom_mask(split.atoms[side]);
            const std::uint32_t other = atom_mask(split.atoms[1 - side]);
            if (d.empty() || !is_syntax_splitting(base, split) ||
                !depends_only_on(a, local, sig->size()) || !depends_only_on(b, local, sig->size()) ||
                !depends_only_on(d, other, sig->size())) {
                return false;
            }
            return ind_violated(*rel, a, b, d, w.at("form") == "AD|~BD", rel->infers(a, b));
        }
        case Postulate::SynSplit: {
            PostulateReport component = report;
            component.postulate = *parse_postulate(w.at("component"));
            return replay(base, component);
        }
        case Postulate::Lemma1:
        case Postulate::Lemma2:
        case Postulate::Lemma3:
        case Postulate::Lemma4:
            if (!is_syntax_splitting(base, split_from(*sig, w))) return false;
            break;
    }

    switch (report.postulate) {
        case Postulate::Lemma1: {
            std::size_t ignored = 0;
            return !lemma1_failure(base, split_from(*sig, w), ignored).first.empty();
        }
        case Postulate::Lemma2:
            return lemma2_violated(build_split_orders(base, split_from(*sig, w)), world("w"),
                                   world("w'"));
        case Postulate::Lemma3: {
            const auto split = split_from(*sig, w);
            const std::size_t side = std::stoul(w.at("side")) - 1;
            return lemma3_violated(build_split_orders(base, split), side,
                                   atom_mask(split.atoms[1 - side]), world("w"), world("w'"));
        }
        case Postulate::Lemma4: {
            const auto split = split_from(*sig, w);
            const std::size_t side = std::stoul(w.at("side")) - 1;
            const PreferredStructure part(base.subset(split.conditionals[side]));
            return lemma4_violated(part, atom_mask(split.atoms[side]), world("wa"), world("wb"),
                                   world("w'"));
        }
        default:
            break;
    }
    return false;
}

std::string format_report(const PostulateReport& report) {
    std::ostringstream out;
    out << to_string(report.postulate) << ": " << (report.passed ? "pass" : "fail");
    if (report.mode) out << " [" << to_string(*report.mode) << "]";
    out << " (" << report.search_bounds << "; " << report.instances << " instances";
    if (report.seed) out << "; seed " << report.seed;
    out << ")";
    if (report.witness) {
        out << " witness:";
        for (const auto& [k, v] : report.witness->fields) out << ' ' << k << '=' << v;
    }
    return out.str();
}

}  // namespace condw
