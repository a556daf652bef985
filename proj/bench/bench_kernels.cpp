// Serial reference kernels against their OpenMP counterparts on one instance.
#include <benchmark/benchmark.h>

#include "semirange/geometry.hpp"
#include "semirange/kernels.hpp"
#include "semirange/semicore.hpp"

namespace {

using namespace semirange;

struct Instance {
  PsdContext ctx;
  ComplexMatrix t;
  QValue q;
};

const Instance& instance() {
  static const Instance inst = [] {
    const int n = 6;
    const ComplexMatrix u = haar_unitary(n, 11);
    RealVector lambda(n);
    lambda << 3.0, 2.0, 1.5, 1.0, 0.5, 0.0;
    const ComplexMatrix a = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
    PsdContext ctx = build_context(0.5 * (a + a.adjoint()));
    const ComplexMatrix m = haar_unitary(ctx.rank(), 12) * Complex(1.0, 0.5) +
                            ComplexMatrix::Identity(ctx.rank(), ctx.rank());
    ComplexMatrix t = ctx.sphere_map() * m * ctx.embed_map();
    return Instance{std::move(ctx), std::move(t), QValue(0.6, 0.2)};
  }();
  return inst;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_SphereSamples(benchmark::State& state) {
  const auto& inst = instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::sphere_samples(exec_of(state), inst.ctx.rank(), 8192, 1));
  }
  set_label(state);
}

void BM_EvaluateDisks(benchmark::State& state) {
  const auto& inst = instance();
  const FormEvaluator eval(inst.ctx, inst.t);
  const auto coords = kernels::sphere_samples(Execution::serial, inst.ctx.rank(), 8192, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_disks(exec_of(state), eval, inst.q, coords));
  set_label(state);
}

void BM_ScanSupport(benchmark::State& state) {
  const auto& inst = instance();
  const FormEvaluator eval(inst.ctx, inst.t);
  const auto coords = kernels::sphere_samples(Execution::serial, inst.ctx.rank(), 8192, 1);
  const auto disks = kernels::evaluate_disks(Execution::serial, eval, inst.q, coords);
  const auto angles = geometry::angle_grid(720);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_support(exec_of(state), disks, angles));
  set_label(state);
}

void BM_RunSearches(benchmark::State& state) {
  const auto& inst = instance();
  const FormEvaluator eval(inst.ctx, inst.t);
  const auto coords = kernels::sphere_samples(Execution::serial, inst.ctx.rank(), 32, 2);
  std::vector<kernels::SearchTask> tasks;
  for (const auto& c : coords) tasks.push_back({std::nan(""), c});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::run_searches(exec_of(state), eval, inst.q, tasks, {}));
  set_label(state);
}

void BM_PairSamples(benchmark::State& state) {
  const auto& inst = instance();
  const FormEvaluator eval(inst.ctx, inst.t);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_samples(exec_of(state), eval, inst.q, 20000, 3));
  set_label(state);
}

void BM_AdaptivePairValues(benchmark::State& state) {
  const auto& inst = instance();
  const FormEvaluator eval(inst.ctx, inst.t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::adaptive_pair_values(exec_of(state), eval, inst.q, 20000, 128, 3));
  }
  set_label(state);
}

}  // namespace

BENCHMARK(BM_SphereSamples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateDisks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSupport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSearches)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSamples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdaptivePairValues)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
