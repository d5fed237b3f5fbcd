#include <benchmark/benchmark.h>

#include <random>

#include "bicross/continuous.hpp"
#include "bicross/hopf.hpp"

using namespace bicross;
using namespace bicross::hopf;

namespace {

std::vector<Word> stress_words(const Presentation& p, std::size_t count, long degree) {
  std::mt19937_64 rng(17);
  std::vector<Word> out;
  for (std::size_t k = 0; k < count; ++k) {
    Word w;
    long budget = degree;
    while (budget > 0) {
      std::size_t g = rng() % p.ngens();
      long e = static_cast<long>(rng() % 3) + 1;
      if (p.generators()[g].invertible && rng() % 2 == 0) e = -e;
      w.push_back({g, e});
      budget -= e < 0 ? -e : e;
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

static void BM_NormalizeDegree12(benchmark::State& state) {
  Presentation p = state.range(0) == 0 ? heisenberg_primal() : heisenberg_dual();
  auto words = stress_words(p, 64, 12);
  std::size_t k = 0;
  for (auto _ : state) {
    NCPoly nf = normalize(p, {{1, words[k++ % words.size()]}});
    benchmark::DoNotOptimize(nf.terms.size());
  }
}
BENCHMARK(BM_NormalizeDegree12)->Arg(0)->Arg(1);

static void BM_HopfAxiomSample(benchmark::State& state) {
  Presentation p = state.range(0) == 0 ? heisenberg_primal() : heisenberg_dual();
  auto monos = random_monomials(p, 64, 23, 2);
  std::size_t k = 0;
  for (auto _ : state) {
    CheckResult r = check_hopf_axioms(p, {monos[k++ % monos.size()]});
    benchmark::DoNotOptimize(r.passed);
  }
}
BENCHMARK(BM_HopfAxiomSample)->Arg(0)->Arg(1);

static void BM_ContinuousIdentities(benchmark::State& state) {
  cont::SampleConfig cfg;
  cfg.count = state.range(0);
  cfg.wmap_count = 1;
  for (auto _ : state) {
    CheckResult r = cont::check_matched_identities(cfg);
    benchmark::DoNotOptimize(r.passed);
  }
  state.SetItemsProcessed(state.iterations() * cfg.count);
}
BENCHMARK(BM_ContinuousIdentities)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
