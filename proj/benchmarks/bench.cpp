#include <benchmark/benchmark.h>

#include <random>

#include "whq/generators.hpp"
#include "whq/hopfmod.hpp"
#include "whq/linalg.hpp"
#include "whq/modcat.hpp"

using namespace whq;

namespace {

const Field Q = Field::rationals();
const char* const kNames[] = {"s3", "chein-s3", "pair-2", "flagship"};

Mor random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const Field& f) {
  std::uniform_int_distribution<int> v(-3, 3);
  std::vector<std::vector<Scalar>> d(rows, std::vector<Scalar>(cols));
  for (auto& row : d)
    for (auto& x : row) x = Scalar::from_int(f, v(rng));
  return Mor::from_dense(f, cols, d);
}

void BM_Axioms(benchmark::State& state) {
  const WeakHopfQuasigroup h = named_fixture(kNames[state.range(0)], Q);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(h).passed());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Axioms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const WeakHopfQuasigroup h = named_fixture(kNames[state.range(0)], Q);
  for (auto _ : state) benchmark::DoNotOptimize(identity_suite(h).passed());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_IdentitySuite)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_FundamentalTheorem(benchmark::State& state) {
  const ContextPtr c = Context::make(named_fixture(kNames[state.range(0)], Q));
  const HopfModule m = induce(random_hl_module(c, 1, 3)).hopf;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_theorem(m).certified());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_FundamentalTheorem)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Equivalence(benchmark::State& state) {
  const ContextPtr c = Context::make(named_fixture(kNames[state.range(0)], Q));
  const std::vector<RightHLModule> ns{regular_hl_module(c), free_hl_module(c, 2), random_hl_module(c, 1)};
  const std::vector<HopfModule> ms{regular_hopf_module(c), induce(ns[1]).hopf, induce(ns[2]).hopf};
  for (auto _ : state) benchmark::DoNotOptimize(certify_equivalence(c, ns, ms).passed());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Equivalence)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Coequalizer(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = state.range(1) == 0 ? Q : Field::prime(7);
  const Mor a = random_matrix(rng, n, n, f), b = random_matrix(rng, n, n, f);
  for (auto _ : state) benchmark::DoNotOptimize(coequalizer(a, b).quotient_dim);
}
BENCHMARK(BM_Coequalizer)->ArgsProduct({{8, 32, 64}, {0, 7}});

void BM_TensorApply(benchmark::State& state) {
  const WeakHopfQuasigroup h = named_fixture("flagship", Q);
  const Term mu = h.mul(), delta = h.comul();
  const std::size_t n = h.dim();
  const Term t = tensor(mu, mu) * tensor(ident(n), braid(n, n), ident(n)) * tensor(delta, delta);
  const Mor x = Mor::identity(Q, n * n);
  for (auto _ : state) benchmark::DoNotOptimize(t.apply(x).nnz());
}
BENCHMARK(BM_TensorApply)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
