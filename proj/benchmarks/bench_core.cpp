#include <benchmark/benchmark.h>

#include <random>

#include "glnq/characters.hpp"
#include "glnq/verify.hpp"

using namespace glnq;

namespace {

void BM_Rref(benchmark::State& state) {
    const FieldSpec& f = FieldSpec::get(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    FqMatrix m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.set_enc(i, j, dist(rng));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(2)->Arg(3)->Arg(16);

void BM_GlEnumerate(benchmark::State& state) {
    const FieldSpec& f = FieldSpec::get(2);
    for (auto _ : state) {
        GlEnumerator gl(static_cast<int>(state.range(0)), f);
        std::uint64_t count = 0;
        while (gl.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GlEnumerate)->Arg(2)->Arg(3);

void BM_Charge(benchmark::State& state) {
    std::vector<int> word{3, 1, 2, 1, 4, 2, 1, 3, 1, 2, 1, 1};  // content (6,3,2,1)
    for (auto _ : state) benchmark::DoNotOptimize(charge(word));
}
BENCHMARK(BM_Charge);

void BM_KostkaPolynomialTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n);
    for (auto _ : state)
        for (const auto& mu : parts)
            for (const auto& la : parts) benchmark::DoNotOptimize(kostka_polynomial(mu, la));
}
BENCHMARK(BM_KostkaPolynomialTable)->Arg(4)->Arg(6);

void BM_EVector(benchmark::State& state) {
    const FieldSpec& f = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    FqTableau t = FqTableau::standard(Partition({2, 1}), f);
    for (auto _ : state) benchmark::DoNotOptimize(e_vector(K, t));
}
BENCHMARK(BM_EVector);

void BM_SBasis(benchmark::State& state) {
    const FieldSpec& f = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    Partition la = state.range(0) == 0 ? Partition({2, 1}) : Partition({3});
    for (auto _ : state) benchmark::DoNotOptimize(s_basis(la, f, K).rank());
}
BENCHMARK(BM_SBasis)->Arg(0)->Arg(1);

void BM_CharacterTrace(benchmark::State& state) {
    const FieldSpec& f = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    SpanBasis b = s_basis(Partition({2, 1}), f, K);
    std::mt19937_64 rng(3);
    FqMatrix g = random_gl(3, f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(action_matrix(g, b).trace());
}
BENCHMARK(BM_CharacterTrace);

} // namespace

BENCHMARK_MAIN();
