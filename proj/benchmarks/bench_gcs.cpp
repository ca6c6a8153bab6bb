#include <benchmark/benchmark.h>

#include "gcs/integration.hpp"
#include "gcs/jet.hpp"
#include "gcs/reduction.hpp"
#include "gcs/symmetry.hpp"
#include "gcs/syntax.hpp"

namespace {

using namespace gcs;

const EvolutionEquation& sl2() {
  static const EvolutionEquation eq(2, parse("(v*v_2 - 5/6*v_1^2 + x^2*v_1)/x^2", "v"), "v");
  return eq;
}

const GcsOperator& sl2_operator() {
  static const GcsOperator op =
      to_canonical(GcsOperator::reduced(parse("x^3*v_3 - 12*x^2*v_2 + 60*x*v_1 - 120*v + 12*x^3", "v")));
  return op;
}

const Ansatz& sl2_ansatz() {
  static const Ansatz a(3, parse("2*x^3 + phi4*x^4 + phi5*x^5 + phi6*x^6", "v"), {"phi4", "phi5", "phi6"});
  return a;
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parse("(2*x)^(1/2)*(3*x^4 + (24*t + c1)*x^2 - c2)/(x^4 + (24*t + c1)*x^2 + c2)", "v"));
  }
}
BENCHMARK(BM_Parse);

void BM_ZeroTest(benchmark::State& state) {
  const Expr f = parse("(2*x)^(1/2)*(3*x^4 + (24*t + c1)*x^2 - c2)/(x^4 + (24*t + c1)*x^2 + c2)", "v");
  const EvolutionEquation eq(2, parse("v_2 - v^3/x^3 + 9/4*v/x^2", "v"), "v");
  const Expr residual = verify_solution(eq, f).residual;
  SamplePlan plan;
  plan.n_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(probabilistic_zero_test(residual, plan));
}
BENCHMARK(BM_ZeroTest)->Arg(10)->Arg(50)->Arg(200);

void BM_TotalDerivative(benchmark::State& state) {
  const Expr e = sl2().rhs();
  for (auto _ : state) benchmark::DoNotOptimize(total_dx(e, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TotalDerivative)->Arg(1)->Arg(3)->Arg(5);

void BM_CheckDeterminingEquation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_gcs(sl2(), sl2_operator()));
}
BENCHMARK(BM_CheckDeterminingEquation);

void BM_CheckInvolutivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_involutivity(sl2(), sl2_operator()));
}
BENCHMARK(BM_CheckInvolutivity);

void BM_IntegrabilityProbe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(integrability_probe(sl2(), sl2_operator()));
}
BENCHMARK(BM_IntegrabilityProbe);

void BM_Reduce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduce(sl2(), sl2_ansatz()));
}
BENCHMARK(BM_Reduce);

void BM_AnsatzSetup(benchmark::State& state) {
  const Expr F = parse("2*x^3 + phi4*x^4 + phi5*x^5 + phi6*x^6", "v");
  for (auto _ : state) benchmark::DoNotOptimize(Ansatz(3, F, {"phi4", "phi5", "phi6"}));
}
BENCHMARK(BM_AnsatzSetup);

void BM_Rk4(benchmark::State& state) {
  const ReducedSystem sys = reduce(sl2(), sl2_ansatz()).system;
  IntegrationPlan plan;
  plan.step = 1e-3;
  plan.t1 = 0.05;
  plan.initial = {0.2, -0.1, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_reduced(sys, plan));
}
BENCHMARK(BM_Rk4);

void BM_PdeResidual(benchmark::State& state) {
  const ReducedSystem sys = reduce(sl2(), sl2_ansatz()).system;
  IntegrationPlan plan;
  plan.initial = {0.2, -0.1, 0.3};
  const Trajectory traj = integrate_reduced(sys, plan);
  const std::vector<double> xs{0.8, 1.0, 1.3, 1.7, 2.1};
  for (auto _ : state) benchmark::DoNotOptimize(pde_residual(sl2(), sl2_ansatz(), traj, xs));
}
BENCHMARK(BM_PdeResidual);

}  // namespace

BENCHMARK_MAIN();
