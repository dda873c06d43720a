#include <benchmark/benchmark.h>

#include "gkm/chern.hpp"
#include "gkm/classify.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"
#include "gkm/symmetry.hpp"

namespace {

using gkm::CatalogType;

void BM_ChernNumbers(benchmark::State& state) {
  const gkm::GkmGraph g = gkm::catalog_standard(CatalogType::Q1);
  for (auto _ : state) benchmark::DoNotOptimize(gkm::chern_numbers(g));
}
BENCHMARK(BM_ChernNumbers);

void BM_ComponentRank(benchmark::State& state) {
  const gkm::GkmGraph g = gkm::catalog_standard(CatalogType::P1);
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::component_rank(g, degree));
}
BENCHMARK(BM_ComponentRank)->Arg(4)->Arg(8)->Arg(12);

void BM_Automorphisms(benchmark::State& state) {
  const gkm::GkmGraph g = gkm::catalog_standard(CatalogType::S, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::gkm_automorphisms(g).order());
}
BENCHMARK(BM_Automorphisms)->Arg(0)->Arg(1);

void BM_BlowupVertex(benchmark::State& state) {
  const gkm::GkmGraph g = gkm::catalog_standard(CatalogType::P1);
  for (auto _ : state) benchmark::DoNotOptimize(gkm::blowup_vertex(g, "p1").num_vertices());
}
BENCHMARK(BM_BlowupVertex);

void BM_EnumerateCaseD(benchmark::State& state) {
  gkm::CaseParams p{{{"a", gkm::Weight{1, 0}}, {"b", gkm::Weight{0, 1}}}, {{"k", mpz_class(state.range(0))}}};
  const gkm::WeightData wd = gkm::case_weights(gkm::WeightCase::D, p);
  for (auto _ : state) benchmark::DoNotOptimize(gkm::enumerate_graphs(wd).size());
}
BENCHMARK(BM_EnumerateCaseD)->Arg(0)->Arg(1);

void BM_Distinctness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gkm::distinctness_certificate().pass());
}
BENCHMARK(BM_Distinctness);

}  // namespace
BENCHMARK_MAIN();
