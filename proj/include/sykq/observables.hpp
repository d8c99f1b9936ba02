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
#include <string>
#include <vector>

#include "json.hpp"
#include "sykq/mitigation.hpp"
#include "sykq/noise.hpp"
#include "sykq/rng.hpp"
#include "sykq/syk.hpp"
#include "sykq/trotter.hpp"

namespace sykq {

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> errors;

  /// Equal lengths, strictly increasing times.
  void validate() const;
  std::size_t size() const { return times.size(); }
  /// Header "t,value,stderr"; numbers with 17 significant digits.
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Pointwise mean and standard error over curves sharing one time grid.
TimeSeries disorder_average(const std::vector<TimeSeries>& curves);

/// |<0|e^{-iHt}|0>|^2.
double return_probability_exact(const Hamiltonian& h, double t);
TimeSeries return_probability_curve(const Hamiltonian& h, const std::vector<double>& times);

struct ReturnProbPoint {
  double t = 0.0;
  int steps = 0;
  double exact = 0.0;      // exact evolution
  double noiseless = 0.0;  // compiled circuit without noise
  MitigationEstimate estimate;
};

/// Trotter circuit of r steps to time t, twirled, simulated with noise,
/// all-zeros frequency read out, then self-mitigated.
ReturnProbPoint return_probability_pipeline(const Hamiltonian& h, const TrotterPlan& plan, double t, int r,
                                            const NoiseModel& noise, const MitigationOptions& opts);

struct OtocConfig {
  PauliString W;  // defaults: Z on qubit 1
  PauliString V;  //           Z on qubit 0
  int n_unitaries = 600;
  std::uint64_t shots = 4000;  // N_M; 0 means exact expectations
  double dt = 1.5;
  std::uint64_t seed = 0;
  double floor = 1e-6;  // minimum mean <W>^2

  static OtocConfig defaults(int n);
  void validate(int n) const;
};

struct OtocValue {
  double F = 1.0;
  double C = 0.0;  // 2 (1 - F)
};

/// F = Tr[W(t) V W(t) V] / 2^n with W(t) = e^{iHt} W e^{-iHt}.
OtocValue otoc_exact(const Hamiltonian& h, const OtocConfig& cfg, double t);
/// Same trace with the compiled Trotter evolution in place of e^{-iHt}.
OtocValue otoc_trotter(const TrotterPlan& plan, const OtocConfig& cfg, double t);

/// Haar unitary: QR of a complex Gaussian matrix, R diagonal phases removed.
CMatrix sample_cue(int n, Rng& rng);

struct OtocEstimate {
  double O = 0.0;
  double stderr = 0.0;
  double numerator = 0.0;    // mean <W(t)> <V W(t) V>
  double denominator = 0.0;  // mean <W(t)>^2
  int n_unitaries = 0;
  /// 2^n (2^n + 1) * numerator: estimate of Tr[W(t) V W(t) V].
  double trace_estimate = 0.0;
};

/// Global randomized-measurement protocol on |0...0> with the compiled
/// evolution of round(t / dt) steps. Unitary k comes from substream k of the
/// seed, so every t sees the same ensemble.
/// Ratio of means mean(a*b) / mean(a^2) with a delta-method standard error.
OtocEstimate otoc_ratio_estimate(const std::vector<double>& a, const std::vector<double>& b, std::uint64_t dim,
                                 double floor = 1e-6);
OtocEstimate otoc_randomized(const TrotterPlan& plan, const OtocConfig& cfg, double t);
/// Same protocol with an explicit evolution unitary.
OtocEstimate otoc_randomized(const CMatrix& evolution, const OtocConfig& cfg, std::uint64_t shot_salt = 0);

}  // namespace sykq
