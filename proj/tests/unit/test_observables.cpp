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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oracle.hpp"
#include "sykq/error.hpp"
#include "sykq/observables.hpp"
#include "sykq/statevector.hpp"
#include "sykq/syk.hpp"
#include "sykq/trotter.hpp"

using namespace sykq;
using oracle::cplx;
using oracle::Mat;

namespace {

Hamiltonian ham(int N, std::uint64_t seed = 0, double sign = 1.0) {
  SykParams p;
  p.N = N;
  p.seed = seed;
  auto in = sample_couplings(p);
  for (auto& c : in.couplings) c.value *= sign;
  return build_hamiltonian(in);
}

std::vector<double> grid(double step, int count, double start = 0.0) {
  std::vector<double> t;
  for (int k = 0; k < count; ++k) t.push_back(start + step * k);
  return t;
}

}  // namespace

TEST_CASE("return probability basics") {
  const auto h = ham(6, 1);
  CHECK(return_probability_exact(h, 0.0) == Catch::Approx(1.0));
  for (double t : {0.3, 5.0, 40.0}) CHECK(return_probability_exact(ham(4, 2), t) == Catch::Approx(1.0));
  const Mat u = oracle::expm_i(h.sum().to_matrix(), 2.7);
  CHECK(return_probability_exact(h, 2.7) == Catch::Approx(std::norm(u(0, 0))).epsilon(1e-10));
}

TEST_CASE("return probability is statistically symmetric under J -> -J") {
  std::vector<TimeSeries> plus, minus;
  const auto t = grid(1.0, 6);
  for (std::uint64_t s = 1; s <= 100; ++s) {
    plus.push_back(return_probability_curve(ham(6, s), t));
    minus.push_back(return_probability_curve(ham(6, s, -1.0), t));
  }
  const auto a = disorder_average(plus), b = disorder_average(minus);
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(std::abs(a.values[i] - b.values[i]) <= 5.0 * std::hypot(a.errors[i], b.errors[i]) + 1e-12);
}

TEST_CASE("noiseless pipeline tracks the exact curve within the Trotter envelope") {
  const auto h = ham(6, 2);
  const auto plan = plan_trotter(h);
  MitigationOptions opts;
  opts.n_twirls = 2;
  opts.shots = 64;
  for (int r : {2, 4, 6, 8}) {
    const double t = 1.5 * r;
    const auto pt = return_probability_pipeline(h, plan, t, r, NoiseModel{}, opts);
    CHECK(pt.exact == Catch::Approx(return_probability_exact(h, t)));
    const double fine = std::norm(apply_circuit(StateVector(3), trotter_circuit(plan, t, 4 * r)).amplitude(0));
    CHECK(std::abs(pt.noiseless - pt.exact) <= 2.0 * std::abs(pt.noiseless - fine) + 0.01);
  }
}

TEST_CASE("time series and averaging") {
  TimeSeries one{{0.0, 1.0}, {0.5, 0.25}, {0.0, 0.0}};
  const auto avg = disorder_average({one});
  CHECK(avg.values == one.values);
  CHECK(avg.errors == std::vector<double>{0.0, 0.0});
  CHECK(one.to_csv() == "t,value,stderr\n0,0.5,0\n1,0.25,0\n");
  TimeSeries other{{0.0, 2.0}, {0.1, 0.2}, {0.0, 0.0}};
  CHECK_THROWS_AS(disorder_average({one, other}), GridMismatchError);
  TimeSeries a{{0.0}, {1.0}, {0.0}}, b{{0.0}, {3.0}, {0.0}};
  const auto ab = disorder_average({a, b});
  CHECK(ab.values[0] == 2.0);
  CHECK(ab.errors[0] == Catch::Approx(1.0));
}

TEST_CASE("five instances show a monotone slope region") {
  std::vector<TimeSeries> curves;
  const auto t = grid(0.1, 101);
  for (std::uint64_t s = 1; s <= 5; ++s) curves.push_back(return_probability_curve(ham(6, s), t));
  const auto avg = disorder_average(curves);
  std::size_t k = 0;
  while (k + 1 < avg.size() && avg.values[k + 1] < avg.values[k]) ++k;
  CHECK(avg.times[k] >= 3.0);
}

TEST_CASE("late-time plateau of 100 instances sits near 1/8") {
  std::vector<TimeSeries> curves;
  const auto t = grid(0.5, 161, 20.0);
  for (std::uint64_t s = 1; s <= 100; ++s) curves.push_back(return_probability_curve(ham(6, s), t));
  const auto avg = disorder_average(curves);
  double plateau = 0.0;
  for (double v : avg.values) plateau += v / static_cast<double>(avg.size());
  CHECK(std::abs(plateau - 0.125) <= 0.3 * 0.125);
}

TEST_CASE("exact OTOC") {
  const auto h = ham(6, 1);
  auto cfg = OtocConfig::defaults(3);
  CHECK(cfg.W == PauliString::parse("IZI"));
  CHECK(cfg.V == PauliString::parse("ZII"));
  const auto z0 = otoc_exact(h, cfg, 0.0);
  CHECK(z0.F == Catch::Approx(1.0));
  CHECK(z0.C == Catch::Approx(0.0).margin(1e-12));
  auto same = cfg;
  same.V = cfg.W;
  CHECK(otoc_exact(h, same, 0.0).F == Catch::Approx(1.0));

  const Mat u = oracle::expm_i(h.sum().to_matrix(), 6.0);
  const Mat w = oracle::pauli("IZI"), v = oracle::pauli("ZII");
  const Mat wt = u.adjoint() * w * u;
  const cplx ref = (wt * v * wt * v).trace() / 8.0;
  const auto f6 = otoc_exact(h, cfg, 6.0);
  CHECK(std::abs(f6.F - ref.real()) <= 1e-9);
  CHECK(std::abs(ref.imag()) <= 1e-10);
  for (double t : {0.7, 2.0, 9.0, 30.0}) {
    const auto f = otoc_exact(h, cfg, t);
    CHECK(std::abs(f.F) <= 1.0 + 1e-12);
    CHECK(f.C == 2.0 * (1.0 - f.F));
  }
  auto bad = cfg;
  bad.W = PauliString::parse("ZZI");
  CHECK_THROWS_AS(otoc_exact(h, bad, 1.0), ParameterError);
}

TEST_CASE("CUE sampling") {
  Rng rng(10);
  for (int n = 1; n <= 4; ++n) {
    const Mat u = sample_cue(n, rng);
    CHECK((u.adjoint() * u - Mat::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff() <= 1e-12);
  }
  const int n = 2, M = 10000;
  const double d = 4.0;
  double s = 0.0, ss = 0.0;
  Mat first = Mat::Zero(4, 4);
  Mat second = Mat::Zero(4, 4);
  const Mat z = oracle::pauli("ZI");
  for (int m = 0; m < M; ++m) {
    const Mat u = sample_cue(n, rng);
    const double x = std::norm(u(0, 0));
    s += x;
    ss += x * x;
    const Mat t = u * z * u.adjoint();
    first += t;
    second += t.cwiseAbs2();
  }
  const double mean = s / M, se = std::sqrt((ss / M - mean * mean) / M);
  CHECK(std::abs(mean - 1.0 / d) <= 5.0 * se);
  first /= static_cast<double>(M);
  second /= static_cast<double>(M);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double sd = std::sqrt((second(i, j).real() - std::norm(first(i, j))) / M);
      CHECK(std::abs(first(i, j)) <= 5.0 * sd + 1e-12);
    }
  CHECK_THROWS_AS(sample_cue(7, rng), CapacityError);
}

TEST_CASE("randomized OTOC at t=0") {
  const auto plan = plan_trotter(ham(6, 1));
  auto cfg = OtocConfig::defaults(3);
  cfg.n_unitaries = 200;
  cfg.shots = 0;
  cfg.seed = 4;
  CHECK(otoc_randomized(plan, cfg, 0.0).O == Catch::Approx(1.0).epsilon(1e-14));
  cfg.shots = 4000;
  const auto e = otoc_randomized(plan, cfg, 0.0);
  CHECK(std::abs(e.O - 1.0) <= 3.0 * e.stderr);
  CHECK_THROWS_AS(otoc_randomized(plan, cfg, 1.0), ParameterError);
}

TEST_CASE("randomized OTOC follows the exact value") {
  const auto h = ham(6, 1);
  const auto plan = plan_trotter(h);
  auto cfg = OtocConfig::defaults(3);
  cfg.seed = 12;
  cfg.shots = 4000;
  for (double t : {1.5, 3.0, 4.5}) {
    cfg.n_unitaries = 200;
    const auto a = otoc_randomized(plan, cfg, t);
    cfg.n_unitaries = 800;
    const auto b = otoc_randomized(plan, cfg, t);
    CHECK(a.stderr / b.stderr >= 1.5);
    CHECK(a.stderr / b.stderr <= 2.7);
    const double f = otoc_exact(h, cfg, t).F;
    CHECK(std::abs(b.O - f) <= 3.0 * b.stderr);
  }
}

TEST_CASE("exact-expectation estimator error falls as 1/sqrt(N_u) with a stable constant") {
  const int nu = 100, seeds = 12;
  std::vector<double> c;
  for (double t : {1.5, 3.0, 4.5}) {
    double sq = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const auto plan = plan_trotter(ham(6, 1));
      auto cfg = OtocConfig::defaults(3);
      cfg.shots = 0;
      cfg.n_unitaries = nu;
      cfg.seed = 1000 + static_cast<std::uint64_t>(s);
      const double pop = otoc_trotter(plan, cfg, t).F;
      const double o = otoc_randomized(plan, cfg, t).O;
      sq += (o - pop) * (o - pop);
    }
    c.push_back(std::sqrt(sq / seeds) * std::sqrt(static_cast<double>(nu)));
  }
  const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
  CHECK(*hi <= 2.0);
  CHECK(*hi / *lo <= 3.0);
}

TEST_CASE("ratio estimator is blind to a common damping factor") {
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> a(500), b(500);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = d(g);
    b[k] = 0.6 * a[k] + 0.3 * d(g);
  }
  const auto base = otoc_ratio_estimate(a, b, 8);
  for (double p : {0.1, 0.5, 0.9}) {
    auto da = a, db = b;
    for (auto& x : da) x *= 1.0 - p;
    for (auto& x : db) x *= 1.0 - p;
    CHECK(otoc_ratio_estimate(da, db, 8).O == Catch::Approx(base.O).epsilon(1e-14));
  }
  std::vector<double> zero(10, 0.0);
  CHECK_THROWS_AS(otoc_ratio_estimate(zero, zero, 8), UnstableNormalizationError);
}

TEST_CASE("Haar trace identity at n=2") {
  OtocConfig cfg;
  cfg.W = PauliString::parse("IZ");
  cfg.V = PauliString::parse("XI");
  cfg.n_unitaries = 10000;
  cfg.shots = 0;
  cfg.seed = 2;
  Rng rng(99);
  const Mat u = sample_cue(2, rng);
  const auto e = otoc_randomized(u, cfg);
  const Mat wt = u.adjoint() * cfg.W.to_matrix() * u;
  const Mat v = cfg.V.to_matrix();
  const double tr = (wt * v * wt * v).trace().real();
  REQUIRE(std::abs(tr) > 0.5);
  CHECK(std::abs(e.trace_estimate - tr) <= 0.02 * std::abs(tr) + 5.0 * 20.0 * e.stderr * std::abs(e.denominator));
  CHECK(e.trace_estimate == Catch::Approx(20.0 * e.numerator));
}
