#include <benchmark/benchmark.h>

#include "kgbound/coulomb.hpp"
#include "kgbound/radial_solver.hpp"
#include "kgbound/special_functions.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgbound;

static void BM_EnergyLevel(benchmark::State& state) {
  const PhysicalParams p = PhysicalParams::natural(1.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(energy_level(p, 4, 2).e_prime);
}
BENCHMARK(BM_EnergyLevel);

static void BM_LaguerreRel(benchmark::State& state) {
  const PhysicalParams p = PhysicalParams::natural(1.0, 0.1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laguerre_rel(p, n, 0).coefficients.data());
}
BENCHMARK(BM_LaguerreRel)->Arg(2)->Arg(6)->Arg(12);

static void BM_BuildRadial(benchmark::State& state) {
  const PhysicalParams p = PhysicalParams::natural(1.0, 0.1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_radial(p, n, 0).normalization);
}
BENCHMARK(BM_BuildRadial)->Arg(1)->Arg(4);

static void BM_AssembleAndEigensolve(benchmark::State& state) {
  const PhysicalParams p = PhysicalParams::natural(1.0, 0.1);
  SolveRequest req;
  req.potential = PotentialSpec::coulomb(1.0);
  req.n = 2;
  const RadialEquation eq = effective_radial_equation(SolveMode::kg_vector, req.potential, p, 1.0, 0);
  const RadialGrid grid = solver_grid(Stencil::frobenius, default_r_max(req, p), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const DiscretizedOperator op = assemble(eq, grid);
    benchmark::DoNotOptimize(inner_eigensolve(op, 1).e_prime);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssembleAndEigensolve)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_SolveSelfConsistent(benchmark::State& state) {
  const PhysicalParams p = PhysicalParams::natural(1.0, 0.2);
  SolveRequest req;
  req.potential = PotentialSpec::coulomb(1.0);
  req.n = 3;
  req.l = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_self_consistent(req, p).e_prime);
}
BENCHMARK(BM_SolveSelfConsistent)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
