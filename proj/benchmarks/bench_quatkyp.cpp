#include <benchmark/benchmark.h>

#include <vector>

#include "quatkyp/kyp.hpp"
#include "quatkyp/minimality.hpp"
#include "quatkyp/random.hpp"
#include "quatkyp/witness.hpp"

using namespace quatkyp;

static void BM_QuaternionProduct(benchmark::State& state) {
  Rng rng(1);
  Quaternion p = random_quaternion(rng);
  const Quaternion q = random_quaternion(rng);
  for (auto _ : state) {
    p = p * q;
    p = p / p.norm();
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_QuaternionProduct);

static void BM_Chi(benchmark::State& state) {
  Rng rng(2);
  const QMatrix m = random_qmatrix(state.range(0), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(chi(m));
}
BENCHMARK(BM_Chi)->Arg(4)->Arg(16)->Arg(64);

static void BM_Evaluate(benchmark::State& state) {
  const SynthesizedSystem s = synthesize_system(state.range(0), 2, CertificateKind::Definite, 3);
  const Quaternion p(1.5, 0.3, -0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(s.system, p));
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(4)->Arg(8);

static void BM_IsMinimal(benchmark::State& state) {
  const SynthesizedSystem s = synthesize_system(state.range(0), 2, CertificateKind::Definite, 4);
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal(s.system));
}
BENCHMARK(BM_IsMinimal)->Arg(2)->Arg(4)->Arg(8);

static void BM_SolveContinuous(benchmark::State& state) {
  const SynthesizedSystem s = synthesize_system(state.range(0), 2, CertificateKind::Definite, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_continuous(s.system, CertificateKind::Definite));
}
BENCHMARK(BM_SolveContinuous)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ProjectionSolve(benchmark::State& state) {
  // Singular D + D* keeps the Riccati path out of the way.
  const QMatrix one = QMatrix::scalar(Quaternion(1.0));
  const Realization r(Convention::AtInfinity, one, one, -1.0 * one, QMatrix::scalar(Quaternion()));
  for (auto _ : state) benchmark::DoNotOptimize(solve_continuous(r, CertificateKind::Indefinite));
}
BENCHMARK(BM_ProjectionSolve)->Unit(benchmark::kMillisecond);

static void BM_KernelSignature(benchmark::State& state) {
  const SynthesizedSystem s = synthesize_system(3, 2, CertificateKind::Definite, 6);
  SamplePlan plan;
  plan.domain = SampleDomain::HalfSpaceQuat;
  plan.count = static_cast<int>(state.range(0));
  plan.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_signature(s.system, KernelKind::PositiveReal, plan, VectorMode::Canonical));
  }
}
BENCHMARK(BM_KernelSignature)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
