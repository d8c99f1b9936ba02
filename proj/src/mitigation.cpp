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

#include "sykq/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "sykq/error.hpp"
#include "sykq/statevector.hpp"

namespace sykq {
namespace {

constexpr std::array<char, 4> kPaulis{'I', 'X', 'Y', 'Z'};

CMatrix pair_matrix(char a, char b) {
  return PauliString::parse(std::string{a, b}).to_matrix();
}

Gate op_gate(char p, int q) {
  switch (p) {
    case 'X': return Gate::x(q);
    case 'Y': return Gate::y(q);
    default: return Gate::z(q);
  }
}

}  // namespace

std::string TwirlEntry::str() const {
  return std::string(ops.begin(), ops.end()) + (sign > 0 ? " +" : " -");
}

TwirlTable generate_twirl_table(GateKind gate, double tol) {
  if (!is_two_qubit(gate)) throw UnsupportedGateError("twirl tables exist for two-qubit gates only");
  const CMatrix g = gate_matrix(Gate{gate, {0, 1}});
  TwirlTable t{gate, {}};
  for (char p1 : kPaulis)
    for (char p2 : kPaulis)
      for (char p3 : kPaulis)
        for (char p4 : kPaulis) {
          const CMatrix m = pair_matrix(p1, p2) * g * pair_matrix(p3, p4);
          for (int sign : {1, -1})
            if ((m - double(sign) * g).cwiseAbs().maxCoeff() <= tol) t.entries.push_back({{p1, p2, p3, p4}, sign});
        }
  return t;
}

bool verify_twirl_table(const TwirlTable& t, double tol) {
  if (t.entries.size() != 16) return false;
  const CMatrix g = gate_matrix(Gate{t.gate, {0, 1}});
  std::set<std::array<char, 4>> seen;
  for (const auto& e : t.entries) {
    if (!seen.insert(e.ops).second) return false;
    for (char c : e.ops)
      if (std::find(kPaulis.begin(), kPaulis.end(), c) == kPaulis.end()) return false;
    const CMatrix m = pair_matrix(e.ops[0], e.ops[1]) * g * pair_matrix(e.ops[2], e.ops[3]);
    if ((m - double(e.sign) * g).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

TwirlTable reference_ecr_table() {
  // Column order of the reference table; sign -1 entries pick up a minus.
  static const char* kCols[16] = {"IIII", "XIXI", "XZXZ", "IZIZ", "YXYX", "ZXZX", "ZYZY", "YYYY",
                                  "ZIYZ", "YIZZ", "IXXY", "IYXX", "YZZI", "ZZYI", "XYIX", "XXIY"};
  static const int kSign[16] = {1, 1, -1, -1, 1, 1, -1, -1, 1, -1, -1, -1, 1, -1, -1, -1};
  TwirlTable t{GateKind::ECR, {}};
  for (int i = 0; i < 16; ++i)
    t.entries.push_back({{kCols[i][0], kCols[i][1], kCols[i][2], kCols[i][3]}, kSign[i]});
  return t;
}

Circuit pauli_twirl(const Circuit& c, const std::vector<TwirlTable>& tables, Rng& rng) {
  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(c.gates.size() * 3);
  for (const auto& g : c.gates) {
    if (!is_two_qubit(g.kind)) {
      out.add(g);
      continue;
    }
    const auto it = std::find_if(tables.begin(), tables.end(),
                                 [&](const TwirlTable& t) { return t.gate == g.kind; });
    if (it == tables.end() || it->entries.empty())
      throw UnsupportedGateError("no twirl table for " + std::string(gate_name(g.kind)));
    const TwirlEntry& e = it->entries[rng.below(it->entries.size())];
    if (e.ops[2] != 'I') out.add(op_gate(e.ops[2], g.q[0]));
    if (e.ops[3] != 'I') out.add(op_gate(e.ops[3], g.q[1]));
    out.add(g);
    if (e.ops[0] != 'I') out.add(op_gate(e.ops[0], g.q[0]));
    if (e.ops[1] != 'I') out.add(op_gate(e.ops[1], g.q[1]));
  }
  return out;
}

double invert_depolarizing(double raw, double p_hat, int n) {
  if (!(p_hat < 1.0)) throw SingularChannelError("depolarizing probability must be < 1");
  if (p_hat < 0.0) throw ParameterError("depolarizing probability must be >= 0");
  return (raw - std::ldexp(p_hat, -n)) / (1.0 - p_hat);
}

Eigen::Matrix2d confusion_matrix(const ReadoutError& r) {
  Eigen::Matrix2d m;
  m << 1.0 - r.p10, r.p01, r.p10, 1.0 - r.p01;
  return m;
}

std::vector<double> readout_correct(const std::vector<std::uint64_t>& hist, int n,
                                    const std::vector<Eigen::Matrix2d>& confusion) {
  const std::size_t dim = std::size_t{1} << n;
  if (hist.size() != dim) throw DimensionError("histogram length must be 2^n");
  if (static_cast<int>(confusion.size()) != n) throw DimensionError("need one confusion matrix per qubit");
  const double total = std::accumulate(hist.begin(), hist.end(), 0.0);
  if (!(total > 0.0)) throw ParameterError("empty histogram");
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = static_cast<double>(hist[i]) / total;
  for (int q = 0; q < n; ++q) {
    const Eigen::Matrix2d& m = confusion[static_cast<std::size_t>(q)];
    if (std::abs(m.determinant()) < 1e-12) throw SingularMatrixError("singular confusion matrix");
    const Eigen::Matrix2d inv = m.inverse();
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const double a = p[i], b = p[i | bit];
      p[i] = inv(0, 0) * a + inv(0, 1) * b;
      p[i | bit] = inv(1, 0) * a + inv(1, 1) * b;
    }
  }
  double s = 0.0;
  for (double& v : p) s += v = std::max(v, 0.0);
  if (!(s > 0.0)) throw SingularMatrixError("readout correction removed all probability");
  for (double& v : p) v /= s;
  return p;
}

nlohmann::json MitigationEstimate::to_json() const {
  return {{"raw", raw},           {"raw_stderr", raw_stderr}, {"mitigation_raw", mitigation_raw},
          {"p_hat", p_hat},       {"saturated", saturated},   {"mitigated", mitigated},
          {"stderr", stderr}};
}

namespace {

Circuit lower(const Circuit& c, Basis b) { return b == Basis::ECR ? rebase_to_ecr(c) : c; }

std::vector<TwirlTable> tables_for(Basis b) {
  std::vector<TwirlTable> t{generate_twirl_table(b == Basis::ECR ? GateKind::ECR : GateKind::CX),
                            generate_twirl_table(GateKind::SWAP)};
  return t;
}

double zero_probability(const std::vector<std::uint64_t>& hist, int n, const NoiseModel& noise, bool correct) {
  if (correct && !noise.readout.empty()) {
    std::vector<Eigen::Matrix2d> conf;
    for (const auto& r : noise.readout) conf.push_back(confusion_matrix(r));
    return readout_correct(hist, n, conf)[0];
  }
  const double total = std::accumulate(hist.begin(), hist.end(), 0.0);
  return static_cast<double>(hist[0]) / total;
}

double mean_of(const std::vector<double>& v, const std::vector<std::size_t>& idx) {
  double s = 0.0;
  for (std::size_t i : idx) s += v[i];
  return s / static_cast<double>(idx.size());
}

struct Combined {
  double raw, mraw, p_hat, mitigated;
  bool saturated;
};

Combined combine(double raw, double mraw, int n, bool self) {
  Combined c{raw, mraw, 0.0, raw, false};
  if (!self) return c;
  double p = (1.0 - mraw) / (1.0 - std::ldexp(1.0, -n));
  if (p < 0.0) p = 0.0;
  if (p > kMaxDepolarizing) {
    p = kMaxDepolarizing;
    c.saturated = true;
  }
  c.p_hat = p;
  c.mitigated = invert_depolarizing(raw, p, n);
  return c;
}

}  // namespace

MitigationEstimate self_mitigation(const TrotterPlan& plan, double t, int r, const NoiseModel& noise,
                                   const MitigationOptions& opts) {
  noise.validate();
  if (r < 1) throw ParameterError("Trotter repetitions must be >= 1");
  if (opts.self_mitigate && r % 2 != 0) throw ParameterError("self-mitigation needs an even step count");
  if (opts.n_twirls < 1 || opts.shots < 1) throw ParameterError("twirls and shots must be >= 1");
  const int n = plan.n;
  const double dt = t / r;
  const Circuit phys = lower(trotter_circuit(plan, t, r), opts.basis);
  Circuit mit(n);
  if (opts.self_mitigate) {
    const Circuit half = trotter_circuit(plan, dt * (r / 2), r / 2);
    mit.append(half);
    mit.append(inverse(half));
    mit = lower(mit, opts.basis);
  }
  const auto tables = tables_for(opts.basis);

  const std::size_t k = static_cast<std::size_t>(opts.n_twirls);
  std::vector<double> p_phys(k), p_mit(k, 1.0);
  const std::uint64_t seed = derive_seed(opts.seed, noise.seed);
  for (std::size_t v = 0; v < k; ++v) {
    Rng twirl_rng = Rng::stream(seed, 4 * v);
    const Circuit cp = pauli_twirl(phys, tables, twirl_rng);
    p_phys[v] = zero_probability(noisy_shots(cp, noise, opts.shots, derive_seed(seed, 4 * v + 1)), n,
                                 noise, opts.readout_correction);
    if (opts.self_mitigate) {
      Rng mit_rng = Rng::stream(seed, 4 * v + 2);
      const Circuit cm = pauli_twirl(mit, tables, mit_rng);
      p_mit[v] = zero_probability(noisy_shots(cm, noise, opts.shots, derive_seed(seed, 4 * v + 3)), n,
                                  noise, opts.readout_correction);
    }
  }

  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Combined c = combine(mean_of(p_phys, all), mean_of(p_mit, all), n, opts.self_mitigate);
  MitigationEstimate est;
  est.raw = c.raw;
  est.mitigation_raw = c.mraw;
  est.p_hat = c.p_hat;
  est.saturated = c.saturated;
  est.mitigated = c.mitigated;

  // Paired bootstrap over twirl variants.
  Rng boot = Rng::stream(seed, 4 * k + 7);
  double s1 = 0.0, s2 = 0.0, r1 = 0.0, r2 = 0.0;
  const int b = std::max(opts.bootstrap, 2);
  std::vector<std::size_t> idx(k);
  for (int rep = 0; rep < b; ++rep) {
    for (auto& i : idx) i = boot.below(k);
    const Combined cb = combine(mean_of(p_phys, idx), mean_of(p_mit, idx), n, opts.self_mitigate);
    s1 += cb.mitigated;
    s2 += cb.mitigated * cb.mitigated;
    r1 += cb.raw;
    r2 += cb.raw * cb.raw;
  }
  const auto sd = [b](double a1, double a2) {
    const double m = a1 / b;
    return std::sqrt(std::max(0.0, (a2 / b - m * m) * b / (b - 1)));
  };
  est.stderr = sd(s1, s2);
  est.raw_stderr = sd(r1, r2);
  return est;
}

MitigationEstimate self_mitigation(const Hamiltonian& h, double t, int r, const NoiseModel& noise,
                                   std::uint64_t shots, int n_twirls) {
  MitigationOptions opts;
  opts.shots = shots;
  opts.n_twirls = n_twirls;
  return self_mitigation(plan_trotter(h), t, r, noise, opts);
}

}  // namespace sykq
