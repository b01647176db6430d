// Copyright the plap-eig authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "plap/approx.hpp"
#include "plap/inverse.hpp"
#include "plap/oracle.hpp"
#include "plap/p_operator.hpp"

namespace
{

plap::Problem geometric(int n_max, double p)
{
  return plap::make_problem(
      plap::BoundaryCase::ND, p, n_max, [](int k) { return std::pow(20.0, k); },
      [](int k) { return std::pow(20.0, k + 1); });
}

plap::Problem uniform(int n_max, double p)
{
  return plap::make_problem(
      plap::BoundaryCase::ND, p, n_max, [](int) { return 1.0; }, [](int) { return 1.0; });
}

void BM_PoissonSolve(benchmark::State& state)
{
  const auto problem = uniform(static_cast<int>(state.range(0)), 2.5);
  const auto f = plap::default_initial(problem);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::solve_poisson(problem, f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonSolve)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_InverseIterationGeometric(benchmark::State& state)
{
  const auto problem = geometric(80, 4.5);
  const auto initial = plap::default_initial(problem);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::run_inverse_iteration(problem, initial));
  }
}
BENCHMARK(BM_InverseIterationGeometric)->Unit(benchmark::kMillisecond);

void BM_ApproximationGeometric(benchmark::State& state)
{
  const auto problem = geometric(80, 4.5);
  const auto initial = plap::default_initial(problem);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::run_approximation(problem, initial));
  }
}
BENCHMARK(BM_ApproximationGeometric)->Unit(benchmark::kMillisecond);

void BM_ApproximationUniform(benchmark::State& state)
{
  const auto problem = uniform(static_cast<int>(state.range(0)), 2.5);
  const auto initial = plap::default_initial(problem);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::run_approximation(problem, initial));
  }
}
BENCHMARK(BM_ApproximationUniform)->Arg(40)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_TruncatedFamily(benchmark::State& state)
{
  const auto problem = uniform(static_cast<int>(state.range(0)), 2.5);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::truncated_family_bounds(problem, 5));
  }
}
BENCHMARK(BM_TruncatedFamily)->Arg(12)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_ShootingOracle(benchmark::State& state)
{
  const auto problem = uniform(static_cast<int>(state.range(0)), 2.5);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(plap::principal_eigenvalue_bruteforce(problem));
  }
}
BENCHMARK(BM_ShootingOracle)->Arg(20)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
