#include <benchmark/benchmark.h>

#include "hadscheme/actions.hpp"
#include "hadscheme/builder.hpp"
#include "hadscheme/catalogue.hpp"
#include "hadscheme/scheme_iso.hpp"

using namespace hadscheme;

static void BM_BuildCover8(benchmark::State &state) {
  auto base = find_catalogue_scheme("D4")->scheme;
  auto h = sylvester(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_cover_scheme(base, h));
}
BENCHMARK(BM_BuildCover8);

static void BM_VerifyCover8(benchmark::State &state) {
  auto cs = build_cover_scheme(find_catalogue_scheme("Q8")->scheme, sylvester(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_scheme(cs.scheme.n, cs.scheme.rel));
}
BENCHMARK(BM_VerifyCover8);

static void BM_Normalize(benchmark::State &state) {
  auto h = sylvester(5);
  for (auto _ : state) {
    auto c = h;
    normalize(c);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Normalize);

static void BM_AutPairsFixing8(benchmark::State &state) {
  auto h = sylvester(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(aut_pairs_fixing(h, 0));
}
BENCHMARK(BM_AutPairsFixing8);

static void BM_Orbits4Full(benchmark::State &state) {
  auto base = order4_schemes()[1].scheme;
  auto h = order4_hadamards()[0];
  OrbitOptions opt;
  opt.mode = OrbitMode::full;
  for (auto _ : state)
    benchmark::DoNotOptimize(similarity_orbits(base, h, opt));
}
BENCHMARK(BM_Orbits4Full);

static void BM_Orbits8Normalized(benchmark::State &state) {
  auto base = find_catalogue_scheme("C8")->scheme;
  auto h = sylvester(3);
  OrbitOptions opt;
  opt.mode = OrbitMode::normalized;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(similarity_orbits(base, h, opt));
}
BENCHMARK(BM_Orbits8Normalized)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SchemeIso16(benchmark::State &state) {
  auto hs = order4_hadamards();
  auto base = order4_schemes()[2].scheme;
  auto a = build_cover_scheme(base, hs[0]).scheme;
  auto b = build_cover_scheme(base, hs[1]).scheme;
  for (auto _ : state)
    benchmark::DoNotOptimize(scheme_isomorphic(a, b));
}
BENCHMARK(BM_SchemeIso16);

BENCHMARK_MAIN();
