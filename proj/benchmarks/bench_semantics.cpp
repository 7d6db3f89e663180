#include <benchmark/benchmark.h>

#include "topal/formula_io.hpp"
#include "topal/model_io.hpp"
#include "topal/reduce.hpp"
#include "topal/semantics.hpp"
#include "topal/testkit.hpp"

using namespace topal;

namespace {

TopoModel model_with(int points, std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_points = points;
  cfg.num_agents = 2;
  cfg.num_atoms = 3;
  // random_model picks the size uniformly up to max_points; keep the largest draw.
  Rng rng(seed);
  TopoModel best = random_model(cfg, rng);
  for (int k = 0; k < 32 && best.space().size() < points; ++k) {
    TopoModel m = random_model(cfg, rng);
    if (m.space().size() > best.space().size()) best = std::move(m);
  }
  return best;
}

void BM_DefinableFamilyJewel(benchmark::State& state) {
  const TopoModel m = jewel_model();
  const auto& theta = m.frame().generator("thetaPrime");
  for (auto _ : state) benchmark::DoNotOptimize(compute_definable_family(m, theta));
}
BENCHMARK(BM_DefinableFamilyJewel);

void BM_DefinableFamilyRandom(benchmark::State& state) {
  const TopoModel m = model_with(static_cast<int>(state.range(0)), 3);
  const auto& theta = m.frame().generators().front().theta;
  for (auto _ : state) benchmark::DoNotOptimize(compute_definable_family(m, theta));
  state.SetLabel(std::to_string(m.space().size()) + " points");
}
BENCHMARK(BM_DefinableFamilyRandom)->Arg(4)->Arg(8)->Arg(12);

void BM_ValidJewelBox(benchmark::State& state) {
  const TopoModel m = jewel_model();
  const Formula f = parse_formula("~d -> box (~(K_e j | K_e ~j) & ~(K_e t | K_e ~t))");
  for (auto _ : state) {
    const Evaluator ev(m);
    benchmark::DoNotOptimize(ev.valid(f));
  }
}
BENCHMARK(BM_ValidJewelBox);

void BM_EvaluateRandomApal(benchmark::State& state) {
  GenConfig cfg;
  const TopoModel m = model_with(static_cast<int>(state.range(0)), 5);
  const Evaluator ev(m);
  Rng rng(7);
  std::vector<Formula> formulas;
  for (int k = 0; k < 64; ++k)
    formulas.push_back(random_formula(rng, Fragment::kAPAL, config_atoms(cfg), config_agents(cfg), 12));
  ev.valid(formulas.front());
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ev.valid(formulas[k++ % formulas.size()]));
}
BENCHMARK(BM_EvaluateRandomApal)->Arg(4)->Arg(8);

void BM_ReduceToEl(benchmark::State& state) {
  GenConfig cfg;
  Rng rng(11);
  std::vector<Formula> formulas;
  for (int k = 0; k < 64; ++k)
    formulas.push_back(random_formula(rng, Fragment::kPAL, config_atoms(cfg), config_agents(cfg), 25));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_el(formulas[k++ % formulas.size()]));
}
BENCHMARK(BM_ReduceToEl);

}  // namespace

BENCHMARK_MAIN();
