#include "condw/generator.hpp"

#include "condw/errors.hpp"
#include "condw/tolerance.hpp"

namespace condw {

ModelSet Rng::model_set(std::size_t world_count) {
    ModelSet s(world_count);
    std::uint64_t bits = 0;
    for (std::size_t w = 0; w < world_count; ++w) {
        if (w % 64 == 0) bits = next();
        if ((bits >> (w % 64)) & 1U) s.insert(World(static_cast<std::uint32_t>(w)));
    }
    return s;
}

ModelSet Rng::nontrivial_model_set(std::size_t world_count) {
    if (world_count < 2) throw Error("no non-trivial formula over an empty signature");
    for (;;) {
        ModelSet s = model_set(world_count);
        if (!s.empty() && !s.is_universe()) return s;
    }
}

namespace {

Conditional random_conditional(Rng& rng, const std::shared_ptr<const Signature>& full,
                               const Signature& part) {
    const ModelSet antecedent = cylinder(rng.nontrivial_model_set(part.world_count()), part, *full);
    const ModelSet consequent = cylinder(rng.model_set(part.world_count()), part, *full);
    return Conditional::from_models(full, consequent, antecedent);
}

}  // namespace

GeneratedBase generate_split_base(std::size_t vars_per_part, std::size_t conds_per_part,
                                  std::uint64_t seed, std::size_t max_attempts) {
    if (2 * vars_per_part > kMaxAtoms) throw Error("too many atoms per part");
    if (conds_per_part > 0 && vars_per_part == 0) {
        throw Error("conditionals need at least one atom per part");
    }

    std::vector<std::string> names;
    std::array<std::vector<std::size_t>, 2> atoms;
    for (std::size_t i = 0; i < vars_per_part; ++i) {
        atoms[0].push_back(names.size());
        names.push_back("a" + std::to_string(i + 1));
        atoms[1].push_back(names.size());
        names.push_back("b" + std::to_string(i + 1));
    }
    auto sig = std::make_shared<const Signature>(std::move(names));
    const std::array<Signature, 2> parts{sig->restrict_to(atoms[0]), sig->restrict_to(atoms[1])};

    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(max_attempts, 1); ++attempt) {
        std::vector<std::pair<std::size_t, Conditional>> drawn;
        for (std::size_t side = 0; side < 2; ++side) {
            for (std::size_t i = 0; i < conds_per_part; ++i) {
                drawn.emplace_back(side, random_conditional(rng, sig, parts[side]));
            }
        }
        rng.shuffle(drawn);

        GeneratedBase out{BeliefBase(sig), {}};
        out.splitting.atoms = atoms;
        for (auto& [side, c] : drawn) {
            out.splitting.conditionals[side].push_back(out.base.size());
            out.base.add(std::move(c));
        }
        if (is_consistent(out.base)) return out;
    }
    throw Error("no consistent split base drawn within " + std::to_string(max_attempts) +
                " attempts");
}

BeliefBase generate_random_base(std::size_t atoms, std::size_t conditionals, std::uint64_t seed,
                                bool require_consistent, std::size_t max_attempts) {
    if (atoms > kMaxAtoms) throw Error("too many atoms");
    if (conditionals > 0 && atoms == 0) throw Error("conditionals need at least one atom");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < atoms; ++i) names.push_back("x" + std::to_string(i + 1));
    auto sig = std::make_shared<const Signature>(std::move(names));

    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(max_attempts, 1); ++attempt) {
        BeliefBase base(sig);
        for (std::size_t i = 0; i < conditionals; ++i) base.add(random_conditional(rng, sig, *sig));
        if (!require_consistent || is_consistent(base)) return base;
    }
    throw Error("no consistent base drawn within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace condw
