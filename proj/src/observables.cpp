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

#include "sykq/observables.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include "sykq/error.hpp"
#include "sykq/statevector.hpp"

namespace sykq {

void TimeSeries::validate() const {
  if (values.size() != times.size() || errors.size() != times.size())
    throw DimensionError("time series columns differ in length");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw ParameterError("time grid must be strictly increasing");
}

std::string TimeSeries::to_csv() const {
  validate();
  std::string out = "t,value,stderr\n";
  char buf[128];
  for (std::size_t i = 0; i < size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", times[i], values[i], errors[i]);
    out += buf;
  }
  return out;
}

nlohmann::json TimeSeries::to_json() const {
  validate();
  return {{"t", times}, {"value", values}, {"stderr", errors}};
}

TimeSeries disorder_average(const std::vector<TimeSeries>& curves) {
  if (curves.empty()) throw ParameterError("no curves to average");
  const auto& grid = curves.front().times;
  for (const auto& c : curves) {
    c.validate();
    if (c.times != grid) throw GridMismatchError("curves use different time grids");
  }
  const double m = static_cast<double>(curves.size());
  TimeSeries out{grid, std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double s = 0.0;
    for (const auto& c : curves) s += c.values[i];
    const double mean = s / m;
    double ss = 0.0;
    for (const auto& c : curves) ss += (c.values[i] - mean) * (c.values[i] - mean);
    out.values[i] = mean;
    out.errors[i] = curves.size() > 1 ? std::sqrt(ss / (m - 1.0) / m) : 0.0;
  }
  return out;
}

double return_probability_exact(const Hamiltonian& h, double t) {
  const auto& e = h.eigenvalues();
  const auto& v = h.eigenvectors();
  cplx amp = 0.0;
  for (Eigen::Index k = 0; k < e.size(); ++k) amp += std::norm(v(0, k)) * std::exp(cplx{0.0, -e(k) * t});
  return std::norm(amp);
}

TimeSeries return_probability_curve(const Hamiltonian& h, const std::vector<double>& times) {
  TimeSeries ts{times, {}, std::vector<double>(times.size(), 0.0)};
  for (double t : times) ts.values.push_back(return_probability_exact(h, t));
  ts.validate();
  return ts;
}

ReturnProbPoint return_probability_pipeline(const Hamiltonian& h, const TrotterPlan& plan, double t, int r,
                                            const NoiseModel& noise, const MitigationOptions& opts) {
  ReturnProbPoint pt;
  pt.t = t;
  pt.steps = r;
  pt.exact = return_probability_exact(h, t);
  pt.noiseless = std::norm(apply_circuit(StateVector(plan.n), trotter_circuit(plan, t, r)).amps()[0]);
  pt.estimate = self_mitigation(plan, t, r, noise, opts);
  return pt;
}

OtocConfig OtocConfig::defaults(int n) {
  if (n < 2) throw ParameterError("OTOC defaults need at least two qubits");
  OtocConfig c;
  c.W = PauliString::single(n, 1, 'Z');
  c.V = PauliString::single(n, 0, 'Z');
  return c;
}

void OtocConfig::validate(int n) const {
  if (W.n() != n || V.n() != n) throw DimensionError("OTOC operators do not match the system width");
  if (W.is_identity() || V.is_identity()) throw ParameterError("OTOC operators must be nontrivial");
  if (W.phase() != 0 || V.phase() != 0) throw ParameterError("OTOC operators must be Hermitian Paulis");
  if (W.weight() != 1) throw ParameterError("W must act on a single qubit");
  if (n_unitaries < 1) throw ParameterError("N_u must be >= 1");
  if (!(dt > 0.0)) throw ParameterError("dt must be positive");
}

namespace {

OtocValue otoc_from_unitary(const CMatrix& u, const OtocConfig& cfg) {
  const CMatrix w = cfg.W.to_matrix();
  const CMatrix v = cfg.V.to_matrix();
  const CMatrix wt = u.adjoint() * w * u;
  const cplx tr = (wt * v * wt * v).trace() / static_cast<double>(u.rows());
  if (std::abs(tr.imag()) > 1e-10) throw ContractViolation("OTOC trace is not real");
  return {tr.real(), 2.0 * (1.0 - tr.real())};
}

int steps_for(double t, double dt) {
  if (t < 0.0) throw ParameterError("time must be >= 0");
  const double k = t / dt;
  const long r = std::lround(k);
  if (std::abs(k - static_cast<double>(r)) > 1e-9) throw ParameterError("time is not a multiple of dt");
  return static_cast<int>(r);
}

CMatrix trotter_unitary(const TrotterPlan& plan, double t, double dt) {
  const int r = steps_for(t, dt);
  const Eigen::Index dim = Eigen::Index{1} << plan.n;
  if (r == 0) return CMatrix::Identity(dim, dim);
  return circuit_unitary(trotter_circuit(plan, t, r));
}

}  // namespace

OtocValue otoc_exact(const Hamiltonian& h, const OtocConfig& cfg, double t) {
  cfg.validate(h.n());
  return otoc_from_unitary(exact_propagator(h, t), cfg);
}

OtocValue otoc_trotter(const TrotterPlan& plan, const OtocConfig& cfg, double t) {
  cfg.validate(plan.n);
  return otoc_from_unitary(trotter_unitary(plan, t, cfg.dt), cfg);
}

CMatrix sample_cue(int n, Rng& rng) {
  if (n < 1 || n > 6) throw CapacityError("CUE sampling supports 1..6 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix z(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = rng.gaussian(), im = rng.gaussian();
      z(r, c) = cplx{s * re, s * im};
    }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : cplx{1.0, 0.0};
  }
  return q;
}

OtocEstimate otoc_ratio_estimate(const std::vector<double>& a, const std::vector<double>& b, std::uint64_t dim,
                                 double floor) {
  if (a.size() != b.size() || a.empty()) throw DimensionError("expectation lists must be equal and nonempty");
  const std::size_t nu = a.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < nu; ++k) {
    mx += a[k] * b[k];
    my += a[k] * a[k];
  }
  mx /= static_cast<double>(nu);
  my /= static_cast<double>(nu);
  if (my < floor) throw UnstableNormalizationError("mean <W>^2 fell below its floor");
  OtocEstimate est;
  est.numerator = mx;
  est.denominator = my;
  est.O = mx / my;
  est.trace_estimate = static_cast<double>(dim) * static_cast<double>(dim + 1) * mx;
  if (nu > 1) {
    // Delta method for a ratio of means.
    double vx = 0.0, vy = 0.0, cxy = 0.0;
    for (std::size_t k = 0; k < nu; ++k) {
      const double x = a[k] * b[k] - mx, y = a[k] * a[k] - my;
      vx += x * x;
      vy += y * y;
      cxy += x * y;
    }
    const double d = static_cast<double>(nu - 1);
    vx /= d;
    vy /= d;
    cxy /= d;
    const double var = (vx - 2.0 * est.O * cxy + est.O * est.O * vy) / (my * my * static_cast<double>(nu));
    est.stderr = std::sqrt(std::max(var, 0.0));
  }
  est.n_unitaries = static_cast<int>(nu);
  return est;
}

OtocEstimate otoc_randomized(const CMatrix& evolution, const OtocConfig& cfg, std::uint64_t shot_salt) {
  const auto dim = static_cast<std::uint64_t>(evolution.rows());
  const int n = std::countr_zero(dim);
  cfg.validate(n);
  const std::size_t nu = static_cast<std::size_t>(cfg.n_unitaries);
  // Measure W in the computational basis after rotating its axis to Z.
  int wq = std::countr_zero(cfg.W.x() | cfg.W.z());
  const char wop = cfg.W.at(wq);
  CMatrix rot = CMatrix::Identity(2, 2);
  if (wop == 'X') rot = gate_matrix(Gate::h(0));
  if (wop == 'Y') rot = gate_matrix(Gate::h(0)) * gate_matrix(Gate::sdg(0));
  const CMatrix vmat = cfg.V.to_matrix();

  std::vector<double> a(nu), b(nu);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(nu); ++k) {
    const auto ku = static_cast<std::uint64_t>(k);
    Rng urng = Rng::stream(cfg.seed, ku);
    const CMatrix u = sample_cue(n, urng);
    Rng srng = Rng::stream(derive_seed(cfg.seed, ku), shot_salt);
    const Eigen::VectorXcd psi1 = u.col(0);
    const auto measure = [&](const Eigen::VectorXcd& in) {
      StateVector s = StateVector::from_vector(evolution * in, ExecPolicy::Serial);
      s.apply_1q(wq, rot);
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - wq);
      double p1 = 0.0;
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & bit) p1 += std::norm(s.amps()[i]);
      const double exact = 1.0 - 2.0 * p1;
      if (cfg.shots == 0) return exact;
      std::uint64_t ones = 0;
      for (std::uint64_t m = 0; m < cfg.shots; ++m) ones += srng.bernoulli(p1);
      return 1.0 - 2.0 * static_cast<double>(ones) / static_cast<double>(cfg.shots);
    };
    a[static_cast<std::size_t>(k)] = measure(psi1);
    b[static_cast<std::size_t>(k)] = measure(vmat * psi1);
  }

  OtocEstimate est = otoc_ratio_estimate(a, b, dim, cfg.floor);
  est.n_unitaries = cfg.n_unitaries;
  return est;
}

OtocEstimate otoc_randomized(const TrotterPlan& plan, const OtocConfig& cfg, double t) {
  cfg.validate(plan.n);
  return otoc_randomized(trotter_unitary(plan, t, cfg.dt), cfg, std::bit_cast<std::uint64_t>(t));
}

}  // namespace sykq
