// Copyright 2026 The sykq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sykq/kernels.hpp"
#include "sykq/rng.hpp"
#include "sykq/syk.hpp"
#include "sykq/trotter.hpp"
#include "sykq/statevector.hpp"

using namespace sykq;
using kernels::cplx;

namespace {

std::vector<cplx> random_state(int n) {
  Rng rng(5);
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& v : a) v = {rng.gaussian(), rng.gaussian()};
  return a;
}

const cplx kH[4] = {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
const cplx kCx[16] = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};

template <void (*K)(cplx*, int, int, const cplx*)>
void one_qubit(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto a = random_state(n);
  int q = 0;
  for (auto _ : st) {
    K(a.data(), n, q, kH);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(a.data());
  }
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(a.size() * sizeof(cplx)));
}

template <void (*K)(cplx*, int, int, int, const cplx*)>
void two_qubit(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto a = random_state(n);
  int q = 0;
  for (auto _ : st) {
    K(a.data(), n, q, (q + 3) % n, kCx);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(a.data());
  }
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(a.size() * sizeof(cplx)));
}

template <void (*K)(cplx*, int, std::uint64_t, std::uint64_t, cplx)>
void pauli(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto a = random_state(n);
  for (auto _ : st) {
    K(a.data(), n, 0x5555 & ((1u << n) - 1), 0x0f0f & ((1u << n) - 1), cplx{0.0, 1.0});
    benchmark::DoNotOptimize(a.data());
  }
}

template <double (*K)(const cplx*, int)>
void norm(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto a = random_state(n);
  for (auto _ : st) benchmark::DoNotOptimize(K(a.data(), n));
}

void trotter_step_sim(benchmark::State& st) {
  const ExecPolicy pol = st.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial;
  SykParams p;
  p.N = 20;
  p.seed = 1;
  const auto plan = plan_trotter(build_hamiltonian(sample_couplings(p)));
  const auto ops = compile_ops(trotter_step(plan, 0.1));
  StateVector s(plan.n, pol);
  for (auto _ : st) run_ops(s, ops);
  st.SetLabel(pol == ExecPolicy::Parallel ? "omp" : "serial");
}

}  // namespace

BENCHMARK(one_qubit<kernels::apply_1q_serial>)->Name("apply_1q/serial")->DenseRange(12, 22, 2);
BENCHMARK(one_qubit<kernels::apply_1q_omp>)->Name("apply_1q/omp")->DenseRange(12, 22, 2)->UseRealTime();
BENCHMARK(two_qubit<kernels::apply_2q_serial>)->Name("apply_2q/serial")->DenseRange(12, 22, 2);
BENCHMARK(two_qubit<kernels::apply_2q_omp>)->Name("apply_2q/omp")->DenseRange(12, 22, 2)->UseRealTime();
BENCHMARK(pauli<kernels::apply_pauli_serial>)->Name("apply_pauli/serial")->DenseRange(12, 22, 2);
BENCHMARK(pauli<kernels::apply_pauli_omp>)->Name("apply_pauli/omp")->DenseRange(12, 22, 2)->UseRealTime();
BENCHMARK(norm<kernels::norm2_serial>)->Name("norm2/serial")->DenseRange(12, 22, 2);
BENCHMARK(norm<kernels::norm2_omp>)->Name("norm2/omp")->DenseRange(12, 22, 2)->UseRealTime();
BENCHMARK(trotter_step_sim)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
