#include <benchmark/benchmark.h>

#include <numeric>

#include "bicross/quantum_group.hpp"

using namespace bicross;

namespace {

MatchedPair pair_for(int which) {
  if (which == 3) {
    FiniteGroup s3 = symmetric_group(3);
    std::vector<Index> g_elems, h_elems;
    for (Index x = 0; x < s3.order(); ++x) {
      const std::string& l = s3.label(x);
      if (l == "e" || l == "(1 2)") g_elems.push_back(x);
      if (l == "e" || l == "(1 2 3)" || l == "(1 3 2)") h_elems.push_back(x);
    }
    return exact_factorization(s3, g_elems, h_elems).pair;
  }
  FiniteGroup s4 = symmetric_group(4);
  std::vector<Index> g_elems, h_elems;
  for (Index x = 0; x < s4.order(); ++x) {
    const std::string& l = s4.label(x);
    if (l == "e" || l == "(1 2 3 4)" || l == "(1 3)(2 4)" || l == "(1 4 3 2)")
      g_elems.push_back(x);
    if (l.find('4') == std::string::npos) h_elems.push_back(x);
  }
  return exact_factorization(s4, g_elems, h_elems).pair;
}

}  // namespace

static void BM_PentagonCheck(benchmark::State& state) {
  MatchedPair p = pair_for(static_cast<int>(state.range(0)));
  Operator w = multiplicative_unitary(p);
  for (auto _ : state) {
    CheckResult r = pentagon_check(w);
    benchmark::DoNotOptimize(r.passed);
  }
}
BENCHMARK(BM_PentagonCheck)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BuildQuantumGroup(benchmark::State& state) {
  MatchedPair p = pair_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    QuantumGroup q = build_quantum_group(p);
    benchmark::DoNotOptimize(q.dim_m);
  }
}
BENCHMARK(BM_BuildQuantumGroup)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HaarSolve(benchmark::State& state) {
  QuantumGroup q = build_quantum_group(pair_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    InvarianceResult r = find_invariant_functionals(q, Side::kLeft);
    benchmark::DoNotOptimize(r.solutions.size());
  }
}
BENCHMARK(BM_HaarSolve)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Antipode(benchmark::State& state) {
  QuantumGroup q = build_quantum_group(pair_for(static_cast<int>(state.range(0))));
  LinearFunctional phi = find_invariant_functionals(q, Side::kLeft).solutions.at(0);
  LinearFunctional eps = compute_counit(q).counit;
  for (auto _ : state) {
    AntipodeResult a = compute_antipode(q, phi, eps);
    benchmark::DoNotOptimize(a.slices_span);
  }
}
BENCHMARK(BM_Antipode)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
