#include "l1plan/exposure.hpp"
#include "l1plan/feas2.hpp"
#include "l1plan/orderings.hpp"
#include "l1plan/planner2.hpp"
#include "l1plan/plannerk.hpp"

#include <benchmark/benchmark.h>

using namespace l1plan;
using model::Configuration;

namespace {

geom::Point P(long x, long y) { return {Rational(x), Rational(y)}; }
geom::Point P(long xn, long xd, long y) { return {Rational(xn, xd), Rational(y)}; }

geom::PolygonalDomain rect(long x0, long y0, long x1, long y1, int id = 0) {
  geom::PolygonalDomain d;
  d.id = id;
  d.outer = {P(x0, y0), P(x1, y0), P(x1, y1), P(x0, y1)};
  return d;
}

// Swap across distance d; the worst case for the two-robot state search.
void BM_Swap2(benchmark::State& state) {
  long d = state.range(0);
  Configuration a({P(0, 0), P(d, 0)}), b({P(d, 0), P(0, 0)});
  for (auto _ : state) benchmark::DoNotOptimize(planner2::plan_makespan2(a, b).value);
}
BENCHMARK(BM_Swap2)->Arg(1)->Arg(8)->Arg(64);

void BM_Sum2(benchmark::State& state) {
  Configuration a({P(0, 0), P(3, 1, 1)}), b({P(5, 2), P(-1, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(planner2::plan_sum2(a, b).value);
}
BENCHMARK(BM_Sum2);

void BM_TransitionGraph(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orderings::build_transition_graph(k).vertices.size());
}
BENCHMARK(BM_TransitionGraph)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BystanderK3(benchmark::State& state) {
  Configuration a({P(0, 0), P(3, 0), P(20, 20)}), b({P(3, 0), P(0, 0), P(20, 20)});
  plannerk::plan_makespan_k(a, b);  // warm the cached transition graph
  for (auto _ : state) benchmark::DoNotOptimize(plannerk::plan_makespan_k(a, b).value);
}
BENCHMARK(BM_BystanderK3)->Unit(benchmark::kMillisecond);

// Comb-shaped corridor with n teeth.
void BM_Feasibility(benchmark::State& state) {
  long n = state.range(0);
  geom::PolygonalDomain s;
  s.outer.push_back(P(0, 0));
  s.outer.push_back(P(3 * n + 1, 0));
  s.outer.push_back(P(3 * n + 1, 2));
  for (long i = n - 1; i >= 0; --i) {
    s.outer.push_back(P(3 * i + 3, 2));
    s.outer.push_back(P(3 * i + 3, 4));
    s.outer.push_back(P(3 * i + 1, 4));
    s.outer.push_back(P(3 * i + 1, 2));
  }
  s.outer.push_back(P(0, 2));
  s = geom::canonicalize(s);
  Configuration a({P(1, 2, 1), P(5, 2, 3)}), b({P(5, 2, 3), P(1, 2, 1)});
  for (auto _ : state) {
    auto f = feas2::build_feasibility(s);
    benchmark::DoNotOptimize(feas2::query_feasible(f, a, b));
  }
}
BENCHMARK(BM_Feasibility)->Arg(2)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

// Row of 3x3 squares with unit gaps.
void BM_Exposure(benchmark::State& state) {
  long m = state.range(0);
  std::vector<geom::PolygonalDomain> cover;
  for (long i = 0; i < m; ++i) cover.push_back(rect(4 * i, 0, 4 * i + 3, 3, static_cast<int>(i)));
  Configuration a({P(1, 1), P(2, 2)}), b({P(4 * m - 3, 1), P(4 * m - 2, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(exposure::plan_exposure2(a, b, cover).value);
}
BENCHMARK(BM_Exposure)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
