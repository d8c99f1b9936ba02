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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "sykq/mitigation.hpp"
#include "sykq/noise.hpp"

namespace sykq {

struct ExperimentConfig {
  struct Model {
    int N = 6;
    double J = 1.0;
    int q = 4;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    bool unit_majorana = false;
  } model;
  struct Compile {
    double dt = 1.5;
    int steps = 8;
    std::string route = "all";
    std::string basis = "cx";
  } compile;
  struct Noise {
    double p2 = 0.0;
    double p1 = 0.0;
    double readout_p10 = 0.0;
    double readout_p01 = 0.0;
    std::uint64_t seed = 0;
  } noise;
  struct Mitigation {
    int n_twirls = 75;
    std::uint64_t shots = 2048;
    bool self_mitigation = true;
    bool readout_correction = true;
    int bootstrap = 400;
  } mitigation;
  struct Otoc {
    std::string W = "Z1";
    std::string V = "Z0";
    int n_u = 600;
    int n_u_late = 900;  // used for t > dt
    std::uint64_t n_m = 4000;
    std::vector<double> times{0.0, 1.5, 3.0, 4.5, 6.0};
  } otoc;
  std::string output = "out";

  nlohmann::json to_json() const;
  /// Missing keys keep their defaults; unknown keys are rejected.
  static ExperimentConfig from_json(const nlohmann::json& j);
  void validate() const;

  NoiseModel noise_model() const;
  MitigationOptions mitigation_options(std::uint64_t seed) const;
};

/// Parses a placement such as "Z1" (operator, qubit) into an n-qubit Pauli.
PauliString parse_placement(const std::string& s, int n);

/// Artifact set of one run; written together with manifest.json.
class ArtifactSet {
 public:
  void add(const std::string& relpath, std::string content);
  const std::map<std::string, std::string>& files() const { return files_; }
  /// Writes every file and a manifest listing SHA-256 hashes.
  void write(const std::filesystem::path& dir, const std::string& command, const nlohmann::json& config) const;

 private:
  std::map<std::string, std::string> files_;
};

std::string sha256_hex(const std::string& data);

/// Entry point shared by the executable and tests. Returns the exit code:
/// 0 success, 1 failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sykq
