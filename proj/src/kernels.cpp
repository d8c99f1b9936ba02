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

#include "sykq/kernels.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace sykq::kernels {
namespace {

inline std::uint64_t insert_zero(std::uint64_t i, int pos) {
  const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
  return ((i >> pos) << (pos + 1)) | low;
}

inline void kernel_1q(cplx* a, std::uint64_t i, int pos, const cplx* m) {
  const std::uint64_t i0 = insert_zero(i, pos);
  const std::uint64_t i1 = i0 | (std::uint64_t{1} << pos);
  const cplx v0 = a[i0], v1 = a[i1];
  a[i0] = m[0] * v0 + m[1] * v1;
  a[i1] = m[2] * v0 + m[3] * v1;
}

inline void kernel_2q(cplx* a, std::uint64_t i, int lo, int hi, std::uint64_t s0,
                      std::uint64_t s1, const cplx* m) {
  const std::uint64_t b = insert_zero(insert_zero(i, lo), hi);
  const std::uint64_t idx[4] = {b, b | s1, b | s0, b | s0 | s1};
  const cplx v[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
  for (int r = 0; r < 4; ++r)
    a[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] + m[4 * r + 2] * v[2] + m[4 * r + 3] * v[3];
}

inline void kernel_pauli(cplx* a, std::uint64_t b, std::uint64_t x, std::uint64_t z, cplx ph) {
  const std::uint64_t c = b ^ x;
  const cplx sb = (std::popcount(z & b) & 1) ? -ph : ph;
  if (x == 0) {
    a[b] *= sb;
    return;
  }
  if (c < b) return;
  const cplx sc = (std::popcount(z & c) & 1) ? -ph : ph;
  const cplx vb = a[b];
  a[b] = sc * a[c];
  a[c] = sb * vb;
}

}  // namespace

void apply_1q_serial(cplx* a, int n, int q, const cplx* m) {
  const int pos = n - 1 - q;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 0; i < half; ++i) kernel_1q(a, i, pos, m);
}

void apply_1q_omp(cplx* a, int n, int q, const cplx* m) {
  const int pos = n - 1 - q;
  const std::int64_t half = std::int64_t{1} << (n - 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < half; ++i) kernel_1q(a, static_cast<std::uint64_t>(i), pos, m);
}

void apply_2q_serial(cplx* a, int n, int q0, int q1, const cplx* m) {
  const int p0 = n - 1 - q0, p1 = n - 1 - q1;
  const std::uint64_t quarter = std::uint64_t{1} << (n - 2);
  for (std::uint64_t i = 0; i < quarter; ++i)
    kernel_2q(a, i, std::min(p0, p1), std::max(p0, p1), std::uint64_t{1} << p0,
              std::uint64_t{1} << p1, m);
}

void apply_2q_omp(cplx* a, int n, int q0, int q1, const cplx* m) {
  const int p0 = n - 1 - q0, p1 = n - 1 - q1;
  const int lo = std::min(p0, p1), hi = std::max(p0, p1);
  const std::uint64_t s0 = std::uint64_t{1} << p0, s1 = std::uint64_t{1} << p1;
  const std::int64_t quarter = std::int64_t{1} << (n - 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < quarter; ++i)
    kernel_2q(a, static_cast<std::uint64_t>(i), lo, hi, s0, s1, m);
}

void apply_pauli_serial(cplx* a, int n, std::uint64_t x, std::uint64_t z, cplx ph) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < dim; ++b) kernel_pauli(a, b, x, z, ph);
}

void apply_pauli_omp(cplx* a, int n, std::uint64_t x, std::uint64_t z, cplx ph) {
  const std::int64_t dim = std::int64_t{1} << n;
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < dim; ++b) kernel_pauli(a, static_cast<std::uint64_t>(b), x, z, ph);
}

double norm2_serial(const cplx* a, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  double s = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) s += std::norm(a[b]);
  return s;
}

double norm2_omp(const cplx* a, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::int64_t b = 0; b < dim; ++b) s += std::norm(a[b]);
  return s;
}

}  // namespace sykq::kernels
