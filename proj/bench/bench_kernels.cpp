#include "folinv/germ.hpp"
#include "folinv/linalg.hpp"
#include "folinv/localalg.hpp"

#include <benchmark/benchmark.h>

using namespace folinv;

namespace {

// F_5 with lambda = 1.
std::vector<Poly> fk_generators() {
  return {parse_poly("2*x^8*y + 4*x^2*y^4 - y^5"), parse_poly("-x^9 - 2*x^3*y^3 + x*y^4")};
}

IntMatrix macaulay_ints(int bound) {
  auto gens = fk_generators();
  return integer_rows(macaulay_matrix(gens, bound));
}

void BM_BareissSerial(benchmark::State& state) {
  IntMatrix m = macaulay_ints(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_rank_serial(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_BareissParallel(benchmark::State& state) {
  IntMatrix m = macaulay_ints(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_rank_parallel(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_MacaulayDim(benchmark::State& state) {
  auto gens = fk_generators();
  for (auto _ : state) benchmark::DoNotOptimize(macaulay_dim(gens, static_cast<int>(state.range(0))));
}

void BM_StandardBasisMilnor(benchmark::State& state) {
  auto gens = fk_generators();
  for (auto _ : state) benchmark::DoNotOptimize(quotient_dim(standard_basis(gens)));
}

} // namespace

BENCHMARK(BM_BareissSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MacaulayDim)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardBasisMilnor)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
