// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "forge/errors.hpp"
#include "forge/pipeline.hpp"

using namespace forge;

namespace {

BraidKnot named(const std::string& name) {
  for (const BraidKnot& k : bundled_knots())
    if (k.name() == name) return k;
  throw Error("no bundled knot " + name);
}

struct Fixture {
  Quandle base = conjugation_quandle(FiniteGroup::symmetric(4), symmetric_element({1, 2, 3, 0})).quandle;
  Cocycle2 phi = second_cohomology(base, 4).representatives.at(0);
  Extension extension = abelian_extension(base, phi);
  BraidKnot knot = named("8_18");
  BraidKnot wide = named("4_1.b");
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void bm_state_sum_serial(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(state_sum_serial(f.base, f.phi, f.knot));
}

void bm_state_sum(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(state_sum(f.base, f.phi, f.knot));
}

void bm_count_colorings_serial(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(count_colorings_serial(f.extension.quandle, f.wide));
}

void bm_count_colorings(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(count_colorings(f.extension.quandle, f.wide));
}

void bm_fiber_criterion_serial(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(fiber_criterion_serial(f.extension.projection));
}

void bm_fiber_criterion(benchmark::State& s) {
  const Fixture& f = fixture();
  for (auto _ : s) benchmark::DoNotOptimize(fiber_criterion(f.extension.projection));
}

}  // namespace

BENCHMARK(bm_state_sum_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_state_sum)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_colorings_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_colorings)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fiber_criterion_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fiber_criterion)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
