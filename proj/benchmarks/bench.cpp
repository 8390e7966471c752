#include <random>

#include <benchmark/benchmark.h>

#include "orthograph/graph.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/pathfinder.hpp"

using namespace orthograph;

static void BM_BuildGraphT3(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(Algebra::Tn, 3, ctx).edge_count());
}
BENCHMARK(BM_BuildGraphT3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DiameterT3Gf3(benchmark::State& state) {
  const OrthoGraph g = build_graph(Algebra::Tn, 3, FieldCtx::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g).diameter);
}
BENCHMARK(BM_DiameterT3Gf3)->Unit(benchmark::kMillisecond);

static void BM_FindPathRational(benchmark::State& state) {
  const auto q = FieldCtx::rationals();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-9, 9);
  auto random_upper = [&](std::size_t zero) {
    Mat m(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, Scalar(q, mpq_class(num(rng), 1 + rng() % 7)));
    for (std::size_t i = 0; i < n; ++i)
      if (i != zero && m.is_zero_at(i, i)) m.set(i, i, Scalar::one(q));
    m.set(zero, zero, Scalar::zero(q));
    return m;
  };
  // Bad-1 to bad-2 for larger n; a middle zero gives a good endpoint.
  const Mat a = random_upper(0), b = random_upper(n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_path(a, b).length());
}
BENCHMARK(BM_FindPathRational)->Arg(3)->Arg(5)->Arg(8);

static void BM_RightKernelRational(benchmark::State& state) {
  const auto q = FieldCtx::rationals();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  Mat a(q, n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, Scalar(q, mpq_class(long(rng() % 19) - 9, 1 + rng() % 5)));
  for (auto _ : state) benchmark::DoNotOptimize(right_kernel_vector(a));
}
BENCHMARK(BM_RightKernelRational)->Arg(4)->Arg(8)->Arg(16);

static void BM_ComplementBruteforceT3Gf3(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(3);
  const Mat a = Mat::jordan(ctx, 3);
  for (auto _ : state) benchmark::DoNotOptimize(complement_bruteforce(a, Algebra::Tn).size());
}
BENCHMARK(BM_ComplementBruteforceT3Gf3);

BENCHMARK_MAIN();
