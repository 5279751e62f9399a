#include <benchmark/benchmark.h>

#include "antvote/construct.hpp"
#include "antvote/oracle.hpp"
#include "antvote/voteshare.hpp"

namespace {

using namespace antvote;

Environment example_env(int n) {
  const auto signal = validate_signal(0.7, 0.3, 0.2, 0.8);
  const auto prior = make_prior(0.6, 0.4);
  return build_environment(n, prior, signal, 0.65, 0.0,
                           default_majority_utility(),
                           default_minority_utility(), {0.0, 1.0}, {0.0, 0.0},
                           {1.0, 1.0});
}

void BM_TallyDistribution(benchmark::State& state) {
  const auto env = example_env(static_cast<int>(state.range(0)));
  const auto profile = construct(env, 0.25).profile;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tally_distribution(profile, env.signal, WorldState::L));
  }
}
BENCHMARK(BM_TallyDistribution)->Arg(1001)->Arg(4001);

void BM_Fidelity(benchmark::State& state) {
  const auto env = example_env(static_cast<int>(state.range(0)));
  const auto profile = construct(env, 0.25).profile;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity(env.prior, profile, env.signal));
  }
}
BENCHMARK(BM_Fidelity)->Arg(1001)->Arg(4001);

void BM_NumericBounds(benchmark::State& state) {
  const auto signal = validate_signal(0.7, 0.3, 0.2, 0.8);
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_xi_bounds(signal, 0.58, resolution));
  }
}
BENCHMARK(BM_NumericBounds)->Arg(100)->Arg(1000);

void BM_MonteCarlo(benchmark::State& state) {
  const auto env = example_env(1001);
  const auto profile = construct(env, 0.25).profile;
  const long long trials = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(env.prior, profile, env.signal, trials, seed++));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
