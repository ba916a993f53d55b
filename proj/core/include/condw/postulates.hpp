#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condw/belief_base.hpp"
#include "condw/inference.hpp"
#include "condw/splitting.hpp"

namespace condw {

enum class Postulate { DI, TV, Rel, Ind, SynSplit, Lemma1, Lemma2, Lemma3, Lemma4 };

const char* to_string(Postulate p);
/// "di", "tv", "rel", "ind", "synsplit", "lemma1" … "lemma4".
std::optional<Postulate> parse_postulate(std::string_view name);

/// Named values describing one violating instance, in a fixed order.
/// Formulas are in the input grammar, worlds in world-string form, conditional
/// lists are 1-based and comma separated.
struct Witness {
    std::vector<std::pair<std::string, std::string>> fields;

    const std::string* find(std::string_view key) const;
    const std::string& at(std::string_view key) const;
};

struct PostulateReport {
    Postulate postulate = Postulate::DI;
    std::optional<InferenceMode> mode;  // unset for the lemmas
    bool passed = true;
    std::optional<Witness> witness;     // set iff !passed
    std::string search_bounds;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
};

/// Semantic formulas over a part with at most this many atoms can be enumerated.
inline constexpr std::size_t kMaxExhaustiveAtoms = 3;

struct CheckOptions {
    /// Parts with at most min(bound, kMaxExhaustiveAtoms) atoms are enumerated
    /// exhaustively; larger parts are sampled.
    std::size_t exhaustive_bound = 2;
    std::uint64_t seed = 0;
    std::size_t samples = 2000;
    /// Check (Ind) as "A |~ B iff AD |~ BD" instead of "A |~ B iff AD |~ B".
    bool conjoin_consequent = false;
};

PostulateReport check_di(const BeliefBase& base, InferenceMode mode);
/// Against classical entailment on the empty base over `sig`.
PostulateReport check_tv(std::shared_ptr<const Signature> sig, InferenceMode mode,
                         const CheckOptions& options = {});

PostulateReport check_rel(const BeliefBase& base, const TwoPartSplitting& split, InferenceMode mode,
                          const CheckOptions& options = {});
PostulateReport check_ind(const BeliefBase& base, const TwoPartSplitting& split, InferenceMode mode,
                          const CheckOptions& options = {});
PostulateReport check_synsplit(const BeliefBase& base, const TwoPartSplitting& split,
                               InferenceMode mode, const CheckOptions& options = {});

PostulateReport check_lemma1(const BeliefBase& base, const TwoPartSplitting& split);
PostulateReport check_lemma2(const BeliefBase& base, const TwoPartSplitting& split);
PostulateReport check_lemma3(const BeliefBase& base, const TwoPartSplitting& split);
PostulateReport check_lemma4(const BeliefBase& base, const TwoPartSplitting& split);

/// Run `postulate` over every part-vs-rest view of `splitting`; the first failure wins.
/// DI and TV ignore the splitting. `mode` is ignored by the lemmas.
PostulateReport check(Postulate postulate, const BeliefBase& base, const SyntaxSplitting& splitting,
                      InferenceMode mode, const CheckOptions& options = {});
PostulateReport check(Postulate postulate, const BeliefBase& base, const TwoPartSplitting& split,
                      InferenceMode mode, const CheckOptions& options = {});

/// Re-evaluate the single instance named by a failed report's witness.
/// Returns true iff that instance still violates the postulate.
bool replay(const BeliefBase& base, const PostulateReport& report);

/// One line: "<name>: pass|fail [mode] (<bounds>; <n> instances)" plus witness fields.
std::string format_report(const PostulateReport& report);

/// Machine-readable form: {"reports": [...], "passed": bool}. See docs/report-format.md.
std::string reports_to_json(std::span<const PostulateReport> reports);

}  // namespace condw
