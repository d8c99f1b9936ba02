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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace sykq {

enum class ExecPolicy { Serial, Parallel, Auto };

/// Width at which Auto switches to the OpenMP kernels.
inline constexpr int kParallelThreshold = 14;

inline bool use_parallel(ExecPolicy p, int n) {
  return p == ExecPolicy::Parallel || (p == ExecPolicy::Auto && n >= kParallelThreshold);
}

/// Amplitude kernels on a 2^n array. Qubit q lives at index bit n-1-q.
/// Matrices are row-major; for two-qubit kernels q0 is the high bit of the
/// 4x4 matrix index.
namespace kernels {

using cplx = std::complex<double>;

void apply_1q_serial(cplx* a, int n, int q, const cplx* m);
void apply_1q_omp(cplx* a, int n, int q, const cplx* m);
void apply_2q_serial(cplx* a, int n, int q0, int q1, const cplx* m);
void apply_2q_omp(cplx* a, int n, int q0, int q1, const cplx* m);
/// a <- phase * P a for a Pauli with index-space masks (x, z) and Y count
/// already folded into phase.
void apply_pauli_serial(cplx* a, int n, std::uint64_t x, std::uint64_t z, cplx phase);
void apply_pauli_omp(cplx* a, int n, std::uint64_t x, std::uint64_t z, cplx phase);
double norm2_serial(const cplx* a, int n);
double norm2_omp(const cplx* a, int n);

inline void apply_1q(ExecPolicy p, cplx* a, int n, int q, const cplx* m) {
  use_parallel(p, n) ? apply_1q_omp(a, n, q, m) : apply_1q_serial(a, n, q, m);
}
inline void apply_2q(ExecPolicy p, cplx* a, int n, int q0, int q1, const cplx* m) {
  use_parallel(p, n) ? apply_2q_omp(a, n, q0, q1, m) : apply_2q_serial(a, n, q0, q1, m);
}
inline void apply_pauli(ExecPolicy p, cplx* a, int n, std::uint64_t x, std::uint64_t z, cplx ph) {
  use_parallel(p, n) ? apply_pauli_omp(a, n, x, z, ph) : apply_pauli_serial(a, n, x, z, ph);
}
inline double norm2(ExecPolicy p, const cplx* a, int n) {
  return use_parallel(p, n) ? norm2_omp(a, n) : norm2_serial(a, n);
}

}  // namespace kernels
}  // namespace sykq
