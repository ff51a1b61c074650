#include <benchmark/benchmark.h>

#include "genaff/actions.hpp"
#include "genaff/deformation.hpp"
#include "genaff/fields.hpp"
#include "genaff/generators.hpp"
#include "genaff/malcev.hpp"

namespace {

using namespace genaff;

void BM_ClassifyRegular(benchmark::State& state) {
  const Action a = left_regular_action(cyclic_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(BM_ClassifyRegular)->Arg(4)->Arg(8)->Arg(12);

void BM_ClassifyAllZ3OnThree(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t reversible = 0;
    for_each_action(catalog_group("Z3"), FiniteSet::range("X", 3), [&](const Action& a) {
      reversible += classify(a).holds(Flag::reversible);
      return true;
    });
    benchmark::DoNotOptimize(reversible);
  }
}
BENCHMARK(BM_ClassifyAllZ3OnThree)->Unit(benchmark::kMillisecond);

void BM_EnumerateMalcev(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t assoc = 0;
    enumerate_malcev(n, {MalcevLaw::A1, MalcevLaw::A2}, [&](std::span<const Index> t) {
      assoc += law_holds(t, n, MalcevLaw::associative);
      return true;
    });
    benchmark::DoNotOptimize(assoc);
  }
}
BENCHMARK(BM_EnumerateMalcev)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FieldLawsKlein(benchmark::State& state) {
  const auto f = certify_field(automorphism_field(elementary_abelian(2, 2), std::vector<Index>{0, 1, 2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(field_laws(f));
}
BENCHMARK(BM_FieldLawsKlein);

void BM_Curvature0Table(benchmark::State& state) {
  std::vector<std::vector<Index>> bij;
  for_each_identity_preserving_bijection(catalog_group("Z2^2"), catalog_group("Z4"), [&](std::span<const Index> b) {
    bij.emplace_back(b.begin(), b.end());
    return true;
  });
  const auto f = certify_field(bijection_field(elementary_abelian(2, 2), catalog_group("Z4"), {bij[0], bij[1], bij[2], bij[3]}));
  for (auto _ : state) {
    Index acc = 0;
    for (Index x = 0; x < 4; ++x)
      for (Index w = 0; w < 4; ++w)
        for (Index u = 0; u < 4; ++u)
          for (Index v = 0; v < 4; ++v) acc += curvature0(f, x, w, u, v).vector;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Curvature0Table);

}  // namespace
BENCHMARK_MAIN();
