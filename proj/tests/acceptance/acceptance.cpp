// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "condw/condw.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace condw;

namespace {

constexpr InferenceMode kModes[] = {InferenceMode::W, InferenceMode::Z, InferenceMode::P};

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;  // 0: no runtime limit
    std::function<Outcome()> run;
};

// Bases collected by suites 2-5 for the (DI) sweep of criterion 8.
std::vector<BeliefBase> g_collected;

void fail(Outcome& o, const std::string& why) {
    if (o.ok) o.detail = why;
    o.ok = false;
}

Outcome golden() {
    Outcome o;
    auto base = test::birds();
    auto is = [&](InferenceMode m, const char* a, const char* b) {
        return infer(base, m, {test::f(base, a), test::f(base, b)});
    };
    if (!is(InferenceMode::W, "d,p", "!v")) fail(o, "w d,p |~ !v should hold");
    if (is(InferenceMode::Z, "d,p", "!v")) fail(o, "z d,p |~ !v should not hold");
    if (is(InferenceMode::P, "d,p", "!v")) fail(o, "p d,p |~ !v should not hold");
    for (auto m : kModes) {
        if (!is(m, "d", "!v")) fail(o, std::string(to_string(m)) + " d |~ !v should hold");
    }
    const auto split = format_splitting(base, detect_splitting(base));
    if (split != "{b, p, f}: (f|b), (b|p), (!f|p)\n{v, d}: (!v|d)\n") fail(o, "split: " + split);
    if (o.ok) o.detail = "5 queries, split {b,p,f} / {v,d}";
    return o;
}

Outcome tolerance_oracle() {
    Outcome o;
    std::size_t inconsistent = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::uint64_t seed = 2000 + i;
        Rng shape(seed);
        const std::size_t atoms = 1 + shape.below(4);
        const std::size_t conds = shape.below(5);
        auto base = generate_random_base(atoms, conds, seed, false);
        auto got = tolerance_partition(base);
        auto expected = oracle::partition(base);
        if (got.has_value() != expected.has_value()) {
            fail(o, "existence differs for seed " + std::to_string(seed));
            continue;
        }
        if (!got) {
            ++inconsistent;
            continue;
        }
        g_collected.push_back(base);
        bool same = got->layer_count() == expected->size();
        for (std::size_t j = 0; same && j < got->layer_count(); ++j) {
            same = std::set<std::size_t>(got->layers[j].begin(), got->layers[j].end()) == (*expected)[j];
        }
        if (!same) fail(o, "layers differ for seed " + std::to_string(seed));
    }
    if (o.ok) o.detail = "200 bases, " + std::to_string(inconsistent) + " inconsistent";
    if (o.ok && inconsistent == 0) fail(o, "no inconsistent base was drawn");
    return o;
}

Outcome strict_order() {
    Outcome o;
    std::size_t violations = 0, related = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::uint64_t seed = 3000 + i;
        Rng shape(seed);
        const std::size_t atoms = 1 + shape.below(6);
        const std::size_t conds = shape.below(7);
        auto base = generate_random_base(atoms, conds, seed, true);
        g_collected.push_back(base);
        PreferredStructure ps(base);
        const std::uint32_t n = static_cast<std::uint32_t>(base.world_count());
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) r[a][b] = ps.less(World(a), World(b));
        for (std::uint32_t a = 0; a < n; ++a) {
            violations += r[a][a];
            for (std::uint32_t b = 0; b < n; ++b) {
                if (!r[a][b]) continue;
                ++related;
                violations += r[b][a];
                for (std::uint32_t c = 0; c < n; ++c) violations += r[b][c] && !r[a][c];
            }
        }
    }
    if (violations) fail(o, std::to_string(violations) + " violations");
    else o.detail = "200 bases, " + std::to_string(related) + " related pairs, 0 violations";
    return o;
}

Outcome w_extends_z() {
    Outcome o;
    std::size_t violations = 0, w_only = 0, pairs = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::uint64_t seed = 4000 + i;
        auto base = generate_random_base(3, 1 + i % 5, seed, true);
        g_collected.push_back(base);
        SystemW w(base);
        SystemZ z(base);
        const auto formulas = test::all_semantic_formulas(base.signature());
        for (const auto& a : formulas) {
            for (const auto& b : formulas) {
                ++pairs;
                const bool iz = z.infers(a, b);
                const bool iw = w.infers(a, b);
                violations += iz && !iw;
                w_only += iw && !iz;
            }
        }
    }
    std::ostringstream s;
    s << pairs << " pairs, " << violations << " violations, " << w_only << " W-only inferences";
    o.detail = s.str();
    if (violations) fail(o, s.str());
    if (w_only == 0) fail(o, "no W-only inference found");
    return o;
}

Outcome w_splitting() {
    Outcome o;
    const Postulate checks[] = {Postulate::Rel, Postulate::Ind, Postulate::SynSplit};
    auto base = test::birds();
    g_collected.push_back(base);
    CheckOptions full;
    full.exhaustive_bound = 3;
    std::size_t instances = 0;
    for (auto p : checks) {
        auto r = check(p, base, detect_splitting(base), InferenceMode::W, full);
        instances += r.instances;
        if (!r.passed) fail(o, "example: " + format_report(r));
        if (r.search_bounds.find("sampled") != std::string::npos) fail(o, "example not exhaustive");
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::uint64_t seed = 5000 + i;
        Rng shape(seed);
        const std::size_t vars = 1 + shape.below(2);
        const std::size_t conds = 1 + shape.below(3);
        auto g = generate_split_base(vars, conds, seed);
        g_collected.push_back(g.base);
        CheckOptions opts;
        opts.exhaustive_bound = 2;
        opts.seed = seed;
        for (auto p : checks) {
            auto r = check(p, g.base, g.splitting, InferenceMode::W, opts);
            instances += r.instances;
            if (!r.passed) fail(o, "seed " + std::to_string(seed) + ": " + format_report(r));
            if (r.search_bounds.find("sampled") != std::string::npos) fail(o, "generated base not exhaustive");
        }
    }
    if (o.ok) o.detail = "example + 100 generated bases, " + std::to_string(instances) + " instances";
    return o;
}

Outcome baseline_witnesses() {
    Outcome o;
    auto base = test::birds();
    CheckOptions full;
    full.exhaustive_bound = 3;
    std::string shown;
    for (auto mode : {InferenceMode::Z, InferenceMode::P}) {
        auto r = check(Postulate::Ind, base, detect_splitting(base), mode, full);
        if (r.passed || !r.witness) {
            fail(o, std::string(to_string(mode)) + " passed (Ind)");
            continue;
        }
        if (!replay(base, r)) fail(o, std::string(to_string(mode)) + " witness does not replay");
        shown += std::string(shown.empty() ? "" : "; ") + to_string(mode) + ": A=" + r.witness->at("A") +
                 " B=" + r.witness->at("B") + " D=" + r.witness->at("D");
    }
    for (auto mode : {InferenceMode::Z, InferenceMode::P}) {
        if (!replay(base, test::birds_ind_witness(mode))) {
            fail(o, std::string(to_string(mode)) + " does not violate (Ind) at A=d B=!v D=p");
        }
    }
    if (replay(base, test::birds_ind_witness(InferenceMode::W))) fail(o, "w violates (Ind) at A=d B=!v D=p");
    if (o.ok) o.detail = shown + "; A=d B=!v D=p replays for z and p";
    return o;
}

Outcome lemmas() {
    Outcome o;
    const Postulate checks[] = {Postulate::Lemma1, Postulate::Lemma2, Postulate::Lemma3,
                                Postulate::Lemma4};
    auto base = test::birds();
    std::size_t instances = 0;
    for (auto p : checks) {
        auto r = check(p, base, detect_splitting(base), InferenceMode::W);
        instances += r.instances;
        if (!r.passed) fail(o, "example: " + format_report(r));
    }
    for (std::uint64_t i = 0; i < 500; ++i) {
        const std::uint64_t seed = 7000 + i;
        Rng shape(seed);
        const std::size_t vars = 1 + shape.below(3);
        const std::size_t conds = shape.below(4);
        auto g = generate_split_base(vars, conds, seed);
        for (auto p : checks) {
            auto r = check(p, g.base, g.splitting, InferenceMode::W);
            instances += r.instances;
            if (!r.passed) fail(o, "seed " + std::to_string(seed) + ": " + format_report(r));
        }
    }
    if (o.ok) o.detail = "example + 500 generated bases, " + std::to_string(instances) + " instances";
    return o;
}

Outcome di_tv() {
    Outcome o;
    std::size_t conditionals = 0;
    for (const auto& base : g_collected) {
        for (auto mode : kModes) {
            auto r = check_di(base, mode);
            conditionals += r.instances;
            if (!r.passed) fail(o, format_report(r));
        }
    }
    auto sig = std::make_shared<const Signature>(std::vector<std::string>{"a", "b", "c"});
    CheckOptions full;
    full.exhaustive_bound = 3;
    for (auto mode : kModes) {
        auto r = check_tv(sig, mode, full);
        if (!r.passed || r.instances != 256U * 256U) fail(o, format_report(r));
    }
    if (o.ok) {
        o.detail = std::to_string(g_collected.size()) + " bases, " + std::to_string(conditionals) +
                   " (DI) instances; (TV) 3 x 65536 pairs";
    }
    if (g_collected.empty()) fail(o, "no bases collected");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden example", 1.0, golden},
        {2, "tolerance oracle equivalence", 10.0, tolerance_oracle},
        {3, "strict partial order", 30.0, strict_order},
        {4, "W extends Z", 60.0, w_extends_z},
        {5, "syntax splitting for W", 60.0, w_splitting},
        {6, "baseline failure witnesses", 0.0, baseline_witnesses},
        {7, "lemma suites", 60.0, lemmas},
        {8, "(DI) and (TV)", 0.0, di_tv},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.ok = false;
            o.detail += " (over the time limit)";
        }
        char timing[64];
        if (c.limit_seconds > 0) {
            std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", seconds, c.limit_seconds);
        } else {
            std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << " [" << timing
                  << "]: " << o.detail << std::endl;
        failed += !o.ok;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed"
                         : std::string("acceptance: all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
