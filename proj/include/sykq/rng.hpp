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

#include <cstdint>
#include <random>

namespace sykq {

/// splitmix64 finalizer; used only to derive independent seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed of substream `index` under `master`. Distinct indices give
/// decorrelated mt19937_64 states, so work items can run in any order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The transforms below are implemented here rather than taken from
/// std::*_distribution, which differ across standard libraries:
///   uniform()  = top 53 bits / 2^53, in [0, 1)
///   gaussian() = Marsaglia polar method on 2u-1 pairs, spare value cached
///   below(n)   = rejection sampling on the top bits
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent child stream; does not advance this generator.
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(derive_seed(master, index));
  }

  std::uint64_t next() { return engine_(); }
  double uniform();
  double gaussian();
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sykq
