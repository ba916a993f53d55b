#pragma once

#include <memory>
#include <string>
#include <vector>

#include "condw/condw.hpp"

namespace condw::test {

inline BeliefBase make_base(std::vector<std::string> atoms, const std::vector<std::string>& conds) {
    auto sig = std::make_shared<const Signature>(std::move(atoms));
    BeliefBase base(sig);
    for (const auto& c : conds) base.add(parse_conditional(c, sig));
    return base;
}

/// {(f|b), (!v|d), (b|p), (!f|p)} over b, p, f, v, d.
inline BeliefBase birds() {
    return make_base({"b", "p", "f", "v", "d"}, {"(f|b)", "(!v|d)", "(b|p)", "(!f|p)"});
}

inline Formula f(const BeliefBase& base, const std::string& text) {
    return parse_formula(text, base.signature_ptr());
}

inline World world(const BeliefBase& base, const std::string& text) {
    return parse_world(text, base.signature());
}

/// Failed (Ind) report for A = d, B = !v, D = p on the {v, d} side of birds().
inline PostulateReport birds_ind_witness(InferenceMode mode) {
    PostulateReport r;
    r.postulate = Postulate::Ind;
    r.mode = mode;
    r.passed = false;
    r.witness = Witness{{{"first_atoms", "b,p,f"},
                         {"second_atoms", "v,d"},
                         {"first_conditionals", "1,3,4"},
                         {"second_conditionals", "2"},
                         {"side", "2"},
                         {"A", "d"},
                         {"B", "!v"},
                         {"D", "p"},
                         {"form", "AD|~B"},
                         {"without_D", "yes"},
                         {"with_D", "no"}}};
    return r;
}

/// Random syntax tree over `sig`, for property tests.
inline Formula random_formula(Rng& rng, const std::shared_ptr<const Signature>& sig, int depth) {
    const std::size_t choice = depth <= 0 ? rng.below(3) : rng.below(7);
    switch (choice) {
        case 0:
        case 1:
            if (!sig->empty()) return Formula::atom(sig, rng.below(sig->size()));
            return Formula::top(sig);
        case 2:
            return rng.coin() ? Formula::top(sig) : Formula::bot(sig);
        case 3:
        case 4:
            return Formula::negation(random_formula(rng, sig, depth - 1));
        case 5: {
            std::vector<Formula> parts;
            for (std::size_t i = 0, n = 2 + rng.below(2); i < n; ++i) {
                parts.push_back(random_formula(rng, sig, depth - 1));
            }
            return Formula::conjunction(std::move(parts));
        }
        default: {
            std::vector<Formula> parts;
            for (std::size_t i = 0, n = 2 + rng.below(2); i < n; ++i) {
                parts.push_back(random_formula(rng, sig, depth - 1));
            }
            return Formula::disjunction(std::move(parts));
        }
    }
}

/// Every semantic formula over all atoms of `sig` (|sig| <= 3).
inline std::vector<ModelSet> all_semantic_formulas(const Signature& sig) {
    std::vector<ModelSet> out;
    const std::uint64_t count = std::uint64_t{1} << sig.world_count();
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(cylinder_from_mask(mask, sig, sig));
    return out;
}

}  // namespace condw::test
