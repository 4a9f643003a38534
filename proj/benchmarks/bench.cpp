#include <benchmark/benchmark.h>

#include <random>

#include "spincert/cobordism.hpp"
#include "spincert/quadform.hpp"

using namespace spincert;

namespace {

IntMatrix e8_gram() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = 2;
  for (std::size_t i = 0; i + 1 < 7; ++i) {
    g.at(i, i + 1) = -1;
    g.at(i + 1, i) = -1;
  }
  g.at(4, 7) = -1;
  g.at(7, 4) = -1;
  return g;
}

SpinInput trefoil_torus() {
  SpinInput in;
  in.dims = {3, 2, 2};
  in.v_ranks = {1, 2, 0};
  in.m_ranks = {1, 2, 1};
  in.linking[1] = IntMatrix{{-1, 1}, {0, -1}};
  in.intersection[0] = IntMatrix{{1}};
  in.intersection[1] = IntMatrix{{0, 1}, {-1, 0}};
  in.intersection[2] = IntMatrix{{1}};
  return in;
}

SpinInput figure8_hyperbolic() {
  SpinInput in;
  in.dims = {3, 4, 3};
  in.v_ranks = {1, 2, 0};
  in.m_ranks = {1, 0, 2, 0, 1};
  in.linking[1] = IntMatrix{{1, 1}, {0, -1}};
  in.intersection[0] = IntMatrix{{1}};
  in.intersection[2] = IntMatrix{{0, 1}, {1, 0}};
  in.intersection[4] = IntMatrix{{1}};
  return in;
}

void bm_assemble(benchmark::State& state) {
  SpinInput in = trefoil_torus();
  for (auto _ : state) benchmark::DoNotOptimize(assemble(in));
}
BENCHMARK(bm_assemble);

void bm_certify_skew_branch(benchmark::State& state) {
  SpinInput in = trefoil_torus();
  for (auto _ : state) benchmark::DoNotOptimize(certify_frame_spin(in));
}
BENCHMARK(bm_certify_skew_branch);

void bm_certify_symmetric_branch(benchmark::State& state) {
  SpinInput in = figure8_hyperbolic();
  for (auto _ : state) benchmark::DoNotOptimize(certify_frame_spin(in));
}
BENCHMARK(bm_certify_symmetric_branch);

void bm_verify(benchmark::State& state) {
  SliceCertificate cert = certify_frame_spin(figure8_hyperbolic());
  for (auto _ : state) benchmark::DoNotOptimize(verify(cert));
}
BENCHMARK(bm_verify);

void bm_determinant_e8(benchmark::State& state) {
  IntMatrix g = e8_gram();
  for (auto _ : state) benchmark::DoNotOptimize(determinant(g));
}
BENCHMARK(bm_determinant_e8);

void bm_signature_e8(benchmark::State& state) {
  IntMatrix g = e8_gram();
  for (auto _ : state) benchmark::DoNotOptimize(signature(g));
}
BENCHMARK(bm_signature_e8);

void bm_diagonalize_e8_stabilized(benchmark::State& state) {
  IntMatrix t = block_sum(e8_gram(), -e8_gram());
  for (auto _ : state)
    benchmark::DoNotOptimize(diagonalize_odd_indefinite(
        block_sum(t, IntMatrix{{1, 0}, {0, -1}})));
}
BENCHMARK(bm_diagonalize_e8_stabilized);

}  // namespace

BENCHMARK_MAIN();
