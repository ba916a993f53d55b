#include <benchmark/benchmark.h>

#include <memory>

#include "condw/condw.hpp"

using namespace condw;

namespace {

BeliefBase birds() {
    auto sig = std::make_shared<const Signature>(std::vector<std::string>{"b", "p", "f", "v", "d"});
    BeliefBase base(sig);
    for (auto c : {"(f|b)", "(!v|d)", "(b|p)", "(!f|p)"}) base.add(parse_conditional(c, sig));
    return base;
}

// Birds-and-penguins chain repeated over fresh atoms, `copies` times.
BeliefBase chained(std::size_t copies) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < copies; ++i) {
        for (auto name : {"b", "p", "f"}) atoms.push_back(name + std::to_string(i));
    }
    auto sig = std::make_shared<const Signature>(atoms);
    BeliefBase base(sig);
    for (std::size_t i = 0; i < copies; ++i) {
        const auto n = std::to_string(i);
        for (auto c : {"(f" + n + "|b" + n + ")", "(b" + n + "|p" + n + ")", "(!f" + n + "|p" + n + ")"}) {
            base.add(parse_conditional(c, sig));
        }
    }
    return base;
}

void BM_TolerancePartitionRandom(benchmark::State& state) {
    const auto atoms = static_cast<std::size_t>(state.range(0));
    const auto base = generate_random_base(atoms, 6, 1, true);
    const auto models = base.models();
    for (auto _ : state) benchmark::DoNotOptimize(tolerance_partition(models));
}
BENCHMARK(BM_TolerancePartitionRandom)->Arg(4)->Arg(6)->Arg(8);

void BM_TolerancePartitionChain(benchmark::State& state) {
    const auto base = chained(static_cast<std::size_t>(state.range(0)));
    const auto models = base.models();
    for (auto _ : state) benchmark::DoNotOptimize(tolerance_partition(models));
}
BENCHMARK(BM_TolerancePartitionChain)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildOrder(benchmark::State& state) {
    const auto base = chained(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_order(base));
}
BENCHMARK(BM_BuildOrder)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_BuildOrderBirds(benchmark::State& state) {
    const auto base = birds();
    for (auto _ : state) benchmark::DoNotOptimize(build_order(base));
}
BENCHMARK(BM_BuildOrderBirds);

void BM_InferW(benchmark::State& state) {
    const auto base = birds();
    const SystemW w(base);
    const auto a = parse_formula("d,p", base.signature_ptr()).models();
    const auto b = parse_formula("!v", base.signature_ptr()).models();
    for (auto _ : state) benchmark::DoNotOptimize(w.infers(a, b));
}
BENCHMARK(BM_InferW);

void BM_InferWChain(benchmark::State& state) {
    const auto base = chained(static_cast<std::size_t>(state.range(0)));
    const SystemW w(base);
    const auto a = parse_formula("p0", base.signature_ptr()).models();
    const auto b = parse_formula("!f0", base.signature_ptr()).models();
    for (auto _ : state) benchmark::DoNotOptimize(w.infers(a, b));
}
BENCHMARK(BM_InferWChain)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_InferZ(benchmark::State& state) {
    const auto base = birds();
    const SystemZ z(base);
    const auto a = parse_formula("d,p", base.signature_ptr()).models();
    const auto b = parse_formula("!v", base.signature_ptr()).models();
    for (auto _ : state) benchmark::DoNotOptimize(z.infers(a, b));
}
BENCHMARK(BM_InferZ);

void BM_InferP(benchmark::State& state) {
    const auto base = birds();
    const PEntailment p(base);
    const auto a = parse_formula("d,p", base.signature_ptr()).models();
    const auto b = parse_formula("!v", base.signature_ptr()).models();
    for (auto _ : state) benchmark::DoNotOptimize(p.infers(a, b));
}
BENCHMARK(BM_InferP);

void BM_CheckInd(benchmark::State& state) {
    const auto base = birds();
    const auto split = detect_splitting(base);
    CheckOptions o;
    o.exhaustive_bound = 3;
    for (auto _ : state) benchmark::DoNotOptimize(check(Postulate::Ind, base, split, InferenceMode::W, o));
}
BENCHMARK(BM_CheckInd)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
