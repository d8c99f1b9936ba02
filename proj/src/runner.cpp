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

#include "sykq/runner.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sykq/clustering.hpp"
#include "sykq/error.hpp"
#include "sykq/observables.hpp"
#include "sykq/statevector.hpp"
#include "sykq/syk.hpp"
#include "sykq/trotter.hpp"

#ifndef SYKQ_VERSION
#define SYKQ_VERSION "0.0.0"
#endif

namespace sykq {

using nlohmann::json;

json ExperimentConfig::to_json() const {
  return {
      {"model",
       {{"N", model.N}, {"J", model.J}, {"q", model.q}, {"seeds", model.seeds}, {"unit_majorana", model.unit_majorana}}},
      {"compile", {{"dt", compile.dt}, {"steps", compile.steps}, {"route", compile.route}, {"basis", compile.basis}}},
      {"noise",
       {{"p2", noise.p2},
        {"p1", noise.p1},
        {"readout_p10", noise.readout_p10},
        {"readout_p01", noise.readout_p01},
        {"seed", noise.seed}}},
      {"mitigation",
       {{"n_twirls", mitigation.n_twirls},
        {"shots", mitigation.shots},
        {"self_mitigation", mitigation.self_mitigation},
        {"readout_correction", mitigation.readout_correction},
        {"bootstrap", mitigation.bootstrap}}},
      {"otoc",
       {{"W", otoc.W}, {"V", otoc.V}, {"n_u", otoc.n_u}, {"n_u_late", otoc.n_u_late}, {"n_m", otoc.n_m}, {"times", otoc.times}}},
      {"output", output},
  };
}

namespace {

template <class T>
void read_key(const json& obj, const char* key, T& field) {
  if (obj.contains(key)) field = obj.at(key).get<T>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw ParseError("config section '" + where + "' must be an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) throw ParseError("unknown config key '" + where + "." + k + "'");
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  try {
    reject_unknown(j, {"model", "compile", "noise", "mitigation", "otoc", "output"}, "");
    if (j.contains("model")) {
      const auto& m = j.at("model");
      reject_unknown(m, {"N", "J", "q", "seeds", "unit_majorana"}, "model");
      read_key(m, "N", c.model.N);
      read_key(m, "J", c.model.J);
      read_key(m, "q", c.model.q);
      read_key(m, "seeds", c.model.seeds);
      read_key(m, "unit_majorana", c.model.unit_majorana);
    }
    if (j.contains("compile")) {
      const auto& m = j.at("compile");
      reject_unknown(m, {"dt", "steps", "route", "basis"}, "compile");
      read_key(m, "dt", c.compile.dt);
      read_key(m, "steps", c.compile.steps);
      read_key(m, "route", c.compile.route);
      read_key(m, "basis", c.compile.basis);
    }
    if (j.contains("noise")) {
      const auto& m = j.at("noise");
      reject_unknown(m, {"p2", "p1", "readout_p10", "readout_p01", "seed"}, "noise");
      read_key(m, "p2", c.noise.p2);
      read_key(m, "p1", c.noise.p1);
      read_key(m, "readout_p10", c.noise.readout_p10);
      read_key(m, "readout_p01", c.noise.readout_p01);
      read_key(m, "seed", c.noise.seed);
    }
    if (j.contains("mitigation")) {
      const auto& m = j.at("mitigation");
      reject_unknown(m, {"n_twirls", "shots", "self_mitigation", "readout_correction", "bootstrap"}, "mitigation");
      read_key(m, "n_twirls", c.mitigation.n_twirls);
      read_key(m, "shots", c.mitigation.shots);
      read_key(m, "self_mitigation", c.mitigation.self_mitigation);
      read_key(m, "readout_correction", c.mitigation.readout_correction);
      read_key(m, "bootstrap", c.mitigation.bootstrap);
    }
    if (j.contains("otoc")) {
      const auto& m = j.at("otoc");
      reject_unknown(m, {"W", "V", "n_u", "n_u_late", "n_m", "times"}, "otoc");
      read_key(m, "W", c.otoc.W);
      read_key(m, "V", c.otoc.V);
      read_key(m, "n_u", c.otoc.n_u);
      read_key(m, "n_u_late", c.otoc.n_u_late);
      read_key(m, "n_m", c.otoc.n_m);
      read_key(m, "times", c.otoc.times);
    }
    read_key(j, "output", c.output);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

void ExperimentConfig::validate() const {
  SykParams p;
  p.N = model.N;
  p.J = model.J;
  p.q = model.q;
  p.validate();
  if (model.seeds.empty()) throw UsageError("at least one seed is required");
  if (!(compile.dt > 0.0)) throw UsageError("dt must be positive");
  if (compile.steps < 1) throw UsageError("steps must be >= 1");
  if (compile.basis != "cx" && compile.basis != "ecr") throw UsageError("basis must be cx or ecr");
  noise_model().validate();
  if (mitigation.n_twirls < 1 || mitigation.shots < 1) throw UsageError("twirls and shots must be >= 1");
  if (otoc.n_u < 1 || otoc.n_u_late < 1) throw UsageError("N_u must be >= 1");
  parse_placement(otoc.W, model.N / 2);
  parse_placement(otoc.V, model.N / 2);
}

NoiseModel ExperimentConfig::noise_model() const {
  NoiseModel m;
  m.p2 = noise.p2;
  m.p1 = noise.p1;
  m.seed = noise.seed;
  if (noise.readout_p10 > 0.0 || noise.readout_p01 > 0.0)
    m.readout.assign(static_cast<std::size_t>(model.N / 2), {noise.readout_p10, noise.readout_p01});
  return m;
}

MitigationOptions ExperimentConfig::mitigation_options(std::uint64_t seed) const {
  MitigationOptions o;
  o.n_twirls = mitigation.n_twirls;
  o.shots = mitigation.shots;
  o.self_mitigate = mitigation.self_mitigation;
  o.readout_correction = mitigation.readout_correction;
  o.bootstrap = mitigation.bootstrap;
  o.basis = compile.basis == "ecr" ? Basis::ECR : Basis::CX;
  o.seed = seed;
  return o;
}

PauliString parse_placement(const std::string& s, int n) {
  if (s.size() < 2 || (s[0] != 'X' && s[0] != 'Y' && s[0] != 'Z'))
    throw UsageError("operator placement must look like Z1, got '" + s + "'");
  int q = 0;
  try {
    std::size_t used = 0;
    q = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw UsageError("bad placement '" + s + "'");
  } catch (const std::logic_error&) {
    throw UsageError("bad placement '" + s + "'");
  }
  if (q < 0 || q >= n) throw UsageError("placement qubit out of range: '" + s + "'");
  return PauliString::single(n, q, s[0]);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

void ArtifactSet::add(const std::string& relpath, std::string content) {
  if (relpath == "manifest.json") throw ContractViolation("manifest.json is reserved");
  files_[relpath] = std::move(content);
}

void ArtifactSet::write(const std::filesystem::path& dir, const std::string& command, const json& config) const {
  std::filesystem::create_directories(dir);
  json list = json::array();
  for (const auto& [path, content] : files_) {
    const auto full = dir / path;
    if (full.has_parent_path()) std::filesystem::create_directories(full.parent_path());
    std::ofstream f(full, std::ios::binary);
    if (!f) throw Error("cannot write " + full.string());
    f << content;
    list.push_back({{"path", path}, {"sha256", sha256_hex(content)}, {"bytes", content.size()}});
  }
  json cfg = config;
  if (cfg.is_object()) cfg.erase("output");  // location is not content
  const json manifest{{"tool", "sykq"}, {"version", SYKQ_VERSION}, {"command", command},
                      {"config", cfg}, {"artifacts", list}};
  std::ofstream f(dir / "manifest.json", std::ios::binary);
  if (!f) throw Error("cannot write manifest");
  f << manifest.dump(2) << '\n';
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Hamiltonian make_hamiltonian(const ExperimentConfig& cfg, std::uint64_t seed, SykInstance* inst_out = nullptr) {
  SykParams p;
  p.N = cfg.model.N;
  p.J = cfg.model.J;
  p.q = cfg.model.q;
  p.seed = seed;
  p.unit_majorana = cfg.model.unit_majorana;
  SykInstance inst = sample_couplings(p);
  if (inst_out) *inst_out = inst;
  return build_hamiltonian(inst);
}

int cmd_table1(int n_min, int n_max, std::uint64_t seed, const std::string& outdir, std::ostream& out) {
  if (n_min > n_max) throw UsageError("empty N range");
  const auto rows = resource_table(n_min, n_max, seed);
  std::string csv = "N,strings,clusters,two_qubit\n";
  std::ostringstream txt;
  txt << std::setw(4) << "N" << std::setw(10) << "strings" << std::setw(10) << "clusters" << std::setw(11)
      << "two-qubit" << '\n';
  for (const auto& r : rows) {
    csv += std::to_string(r.N) + "," + std::to_string(r.strings) + "," + std::to_string(r.clusters) + "," +
           std::to_string(r.two_qubit) + "\n";
    txt << std::setw(4) << r.N << std::setw(10) << r.strings << std::setw(10) << r.clusters << std::setw(11)
        << r.two_qubit << '\n';
  }
  out << txt.str();
  ArtifactSet a;
  a.add("table1.csv", csv);
  a.add("table1.txt", txt.str());
  a.write(outdir, "table1", {{"n_min", n_min}, {"n_max", n_max}, {"seed", seed}});
  return 0;
}

int cmd_compile(const ExperimentConfig& cfg, std::ostream& out) {
  ArtifactSet a;
  json summary = json::array();
  for (std::uint64_t seed : cfg.model.seeds) {
    SykInstance inst;
    const Hamiltonian h = make_hamiltonian(cfg, seed, &inst);
    const ClusterPartition part = dsatur_partition(build_graph(h.sum()));
    const TrotterPlan plan = plan_trotter(h, part);
    Circuit step = trotter_step(plan, cfg.compile.dt);
    Circuit evo = trotter_circuit(plan, cfg.compile.dt * cfg.compile.steps, cfg.compile.steps);
    const std::string tag = "seed" + std::to_string(seed);
    json row{{"seed", seed},
             {"strings", h.sum().size()},
             {"clusters", part.count()},
             {"cx_per_step", two_qubit_count(step)},
             {"steps", cfg.compile.steps},
             {"two_qubit_total", two_qubit_count(evo)}};
    if (cfg.compile.route != "all") {
      const RoutedCircuit routed = route(evo, CouplingMap::from_spec(cfg.compile.route, h.n()));
      row["routed_two_qubit_total"] = two_qubit_count(routed.circuit);
      row["final_layout"] = routed.final_layout;
      evo = routed.circuit;
    }
    if (cfg.compile.basis == "ecr") row["ecr_total"] = count_kind(rebase_to_ecr(evo), GateKind::ECR);
    a.add(tag + "/instance.json", inst.to_json().dump(2) + "\n");
    a.add(tag + "/clusters.txt", dump_partition(h.sum(), part));
    a.add(tag + "/step.qasm", export_qasm2(step));
    a.add(tag + "/evolution.qasm", export_qasm2(evo));
    out << tag << ": " << part.count() << " clusters, " << two_qubit_count(step) << " CX per step, "
        << row.value("routed_two_qubit_total", row["two_qubit_total"].get<std::size_t>())
        << " two-qubit gates over " << cfg.compile.steps << " steps\n";
    summary.push_back(row);
  }
  a.add("summary.json", summary.dump(2) + "\n");
  a.write(cfg.output, "compile", cfg.to_json());
  return 0;
}

int cmd_return_prob(const ExperimentConfig& cfg, bool exact_only, std::ostream& out) {
  ArtifactSet a;
  const double dt = cfg.compile.dt;
  std::vector<double> exact_t;
  for (int k = 0; k <= cfg.compile.steps; ++k) exact_t.push_back(k * dt);
  std::vector<int> noisy_k;
  for (int k = 2; k <= cfg.compile.steps; k += 2) noisy_k.push_back(k);
  std::vector<double> noisy_t;
  for (int k : noisy_k) noisy_t.push_back(k * dt);

  std::vector<TimeSeries> exact_all, clean_all, raw_all, mit_all;
  const NoiseModel noise = cfg.noise_model();
  for (std::uint64_t seed : cfg.model.seeds) {
    const Hamiltonian h = make_hamiltonian(cfg, seed);
    const std::string tag = "seed" + std::to_string(seed);
    TimeSeries ex = return_probability_curve(h, exact_t);
    a.add(tag + "/exact.csv", ex.to_csv());
    exact_all.push_back(ex);
    if (exact_only) continue;
    const TrotterPlan plan = plan_trotter(h);
    TimeSeries clean{noisy_t, {}, std::vector<double>(noisy_t.size(), 0.0)};
    TimeSeries raw{noisy_t, {}, {}}, mit{noisy_t, {}, {}};
    json points = json::array();
    for (int k : noisy_k) {
      const auto pt = return_probability_pipeline(h, plan, k * dt, k, noise,
                                                  cfg.mitigation_options(derive_seed(seed, static_cast<std::uint64_t>(k))));
      clean.values.push_back(pt.noiseless);
      raw.values.push_back(pt.estimate.raw);
      raw.errors.push_back(pt.estimate.raw_stderr);
      mit.values.push_back(pt.estimate.mitigated);
      mit.errors.push_back(pt.estimate.stderr);
      json pj = pt.estimate.to_json();
      pj["t"] = pt.t;
      pj["steps"] = k;
      pj["exact"] = pt.exact;
      pj["noiseless"] = pt.noiseless;
      points.push_back(pj);
      out << tag << " t=" << fmt("%.3g", pt.t) << " exact=" << fmt("%.4f", pt.exact)
          << " noiseless=" << fmt("%.4f", pt.noiseless) << " raw=" << fmt("%.4f", pt.estimate.raw)
          << " mitigated=" << fmt("%.4f", pt.estimate.mitigated) << " +- " << fmt("%.4f", pt.estimate.stderr) << '\n';
    }
    a.add(tag + "/noiseless.csv", clean.to_csv());
    a.add(tag + "/raw.csv", raw.to_csv());
    a.add(tag + "/mitigated.csv", mit.to_csv());
    a.add(tag + "/report.json", points.dump(2) + "\n");
    clean_all.push_back(clean);
    raw_all.push_back(raw);
    mit_all.push_back(mit);
  }
  const auto avg = [&](const std::string& name, const std::vector<TimeSeries>& v) {
    if (v.empty()) return;
    const TimeSeries m = disorder_average(v);
    a.add("average/" + name + ".csv", m.to_csv());
    a.add("average/" + name + ".json", m.to_json().dump(2) + "\n");
  };
  avg("exact", exact_all);
  avg("noiseless", clean_all);
  avg("raw", raw_all);
  avg("mitigated", mit_all);
  const TimeSeries ea = disorder_average(exact_all);
  for (std::size_t i = 0; i < ea.size(); ++i)
    out << "average t=" << fmt("%.3g", ea.times[i]) << " exact=" << fmt("%.4f", ea.values[i]) << '\n';
  a.write(cfg.output, "return-prob", cfg.to_json());
  return 0;
}

int cmd_otoc(const ExperimentConfig& cfg, bool exact_only, std::ostream& out) {
  ArtifactSet a;
  const int n = cfg.model.N / 2;
  std::vector<TimeSeries> ex_all, rnd_all;
  const auto& times = cfg.otoc.times;
  for (std::uint64_t seed : cfg.model.seeds) {
    const Hamiltonian h = make_hamiltonian(cfg, seed);
    const TrotterPlan plan = plan_trotter(h);
    OtocConfig oc = OtocConfig::defaults(n);
    oc.W = parse_placement(cfg.otoc.W, n);
    oc.V = parse_placement(cfg.otoc.V, n);
    oc.shots = cfg.otoc.n_m;
    oc.dt = cfg.compile.dt;
    oc.seed = derive_seed(seed, 0x07);
    const std::string tag = "seed" + std::to_string(seed);
    TimeSeries ex{times, {}, std::vector<double>(times.size(), 0.0)};
    TimeSeries tr = ex, rnd{times, {}, {}};
    for (double t : times) {
      ex.values.push_back(otoc_exact(h, oc, t).F);
      if (exact_only) continue;
      tr.values.push_back(otoc_trotter(plan, oc, t).F);
      oc.n_unitaries = t > oc.dt + 1e-12 ? cfg.otoc.n_u_late : cfg.otoc.n_u;
      const OtocEstimate e = otoc_randomized(plan, oc, t);
      rnd.values.push_back(e.O);
      rnd.errors.push_back(e.stderr);
      out << tag << " t=" << fmt("%.3g", t) << " F_exact=" << fmt("%.4f", ex.values.back())
          << " F_trotter=" << fmt("%.4f", tr.values.back()) << " O=" << fmt("%.4f", e.O) << " +- "
          << fmt("%.4f", e.stderr) << '\n';
    }
    a.add(tag + "/otoc_exact.csv", ex.to_csv());
    a.add(tag + "/otoc_exact.json", ex.to_json().dump(2) + "\n");
    ex_all.push_back(ex);
    if (exact_only) continue;
    a.add(tag + "/otoc_trotter.csv", tr.to_csv());
    a.add(tag + "/otoc_randomized.csv", rnd.to_csv());
    a.add(tag + "/otoc_randomized.json", rnd.to_json().dump(2) + "\n");
    rnd_all.push_back(rnd);
  }
  a.add("average/otoc_exact.csv", disorder_average(ex_all).to_csv());
  if (!rnd_all.empty()) a.add("average/otoc_randomized.csv", disorder_average(rnd_all).to_csv());
  a.write(cfg.output, "otoc", cfg.to_json());
  return 0;
}

int cmd_twirl_verify(const std::string& outdir, std::ostream& out) {
  const TwirlTable cx = generate_twirl_table(GateKind::CX);
  const TwirlTable ecr = generate_twirl_table(GateKind::ECR);
  const TwirlTable ref = reference_ecr_table();
  bool ref_match = ref.entries.size() == ecr.entries.size();
  for (const auto& e : ref.entries)
    ref_match = ref_match && std::find(ecr.entries.begin(), ecr.entries.end(), e) != ecr.entries.end();
  const bool ok_cx = verify_twirl_table(cx), ok_ecr = verify_twirl_table(ecr), ok_ref = verify_twirl_table(ref);
  json j;
  for (const auto* t : {&cx, &ecr}) {
    json rows = json::array();
    for (const auto& e : t->entries)
      rows.push_back({{"P1", std::string(1, e.ops[0])}, {"P2", std::string(1, e.ops[1])},
                      {"P3", std::string(1, e.ops[2])}, {"P4", std::string(1, e.ops[3])}, {"sign", e.sign}});
    j[std::string(gate_name(t->gate))] = rows;
  }
  out << "cx: " << cx.entries.size() << " conjugations, verified=" << (ok_cx ? "yes" : "no") << '\n';
  out << "ecr: " << ecr.entries.size() << " conjugations, verified=" << (ok_ecr ? "yes" : "no") << '\n';
  out << "ecr reference table: verified=" << (ok_ref ? "yes" : "no")
      << ", matches brute force=" << (ref_match ? "yes" : "no") << '\n';
  for (const auto& e : ecr.entries) out << "  " << e.str() << '\n';
  ArtifactSet a;
  a.add("twirl_tables.json", j.dump(2) + "\n");
  a.write(outdir, "twirl-verify", json::object());
  return ok_cx && ok_ecr && ok_ref && ref_match ? 0 : 1;
}

struct Overrides {
  std::string config;
  int N = 0;
  std::vector<std::uint64_t> seeds;
  double dt = 0, p2 = 0, p1 = 0;
  int steps = 0, twirls = 0, nu = 0;
  std::uint64_t shots = 0, nm = 0, noise_seed = 0;
  std::string route, basis, W, V, out;
  std::vector<double> readout, times;
  bool no_mitigation = false;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON experiment config")->check(CLI::ExistingFile);
  sub->add_option("--N", o.N, "Majorana count");
  sub->add_option("--seeds", o.seeds, "instance seeds")->delimiter(',');
  sub->add_option("--dt", o.dt, "Trotter step");
  sub->add_option("--steps", o.steps, "Trotter steps");
  sub->add_option("--out", o.out, "output directory");
}

ExperimentConfig resolve(const CLI::App* sub, const Overrides& o) {
  ExperimentConfig c;
  if (!o.config.empty()) {
    std::ifstream f(o.config);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    c = ExperimentConfig::from_json(j);
  }
  const auto given = [&](const char* name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--N")) c.model.N = o.N;
  if (given("--seeds")) c.model.seeds = o.seeds;
  if (given("--dt")) c.compile.dt = o.dt;
  if (given("--steps")) c.compile.steps = o.steps;
  if (given("--out")) c.output = o.out;
  if (given("--route")) c.compile.route = o.route;
  if (given("--basis")) c.compile.basis = o.basis;
  if (given("--p2")) c.noise.p2 = o.p2;
  if (given("--p1")) c.noise.p1 = o.p1;
  if (given("--noise-seed")) c.noise.seed = o.noise_seed;
  if (given("--readout")) {
    if (o.readout.size() != 2) throw UsageError("--readout takes p10,p01");
    c.noise.readout_p10 = o.readout[0];
    c.noise.readout_p01 = o.readout[1];
  }
  if (given("--twirls")) c.mitigation.n_twirls = o.twirls;
  if (given("--shots")) c.mitigation.shots = o.shots;
  if (given("--no-self-mitigation")) c.mitigation.self_mitigation = false;
  if (given("--W")) c.otoc.W = o.W;
  if (given("--V")) c.otoc.V = o.V;
  if (given("--nu")) c.otoc.n_u = c.otoc.n_u_late = o.nu;
  if (given("--nm")) c.otoc.n_m = o.nm;
  if (given("--times")) c.otoc.times = o.times;
  c.validate();
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SYK compile-and-simulate toolkit", "sykq"};
  app.set_version_flag("--version", SYKQ_VERSION);
  app.require_subcommand(1);

  int n_min = 4, n_max = 20;
  std::uint64_t t1_seed = 0;
  std::string t1_out = "out", tw_out = "out";
  auto* t1 = app.add_subcommand("table1", "gate-count resource table");
  t1->add_option("--n-min", n_min, "smallest N");
  t1->add_option("--n-max", n_max, "largest N");
  t1->add_option("--seed", t1_seed, "coupling seed");
  t1->add_option("--out", t1_out, "output directory");

  Overrides co, ro, oo;
  auto* comp = app.add_subcommand("compile", "emit OPENQASM 2.0 for one step and the full evolution");
  add_common(comp, co);
  comp->add_option("--route", co.route, "coupling map: all, path<k>, line<k>, tee, or an edge-list file");
  comp->add_option("--basis", co.basis, "cx or ecr");

  bool rp_exact = false;
  auto* rp = app.add_subcommand("return-prob", "return probability: exact, noiseless, raw and mitigated");
  add_common(rp, ro);
  rp->add_option("--p2,--noise", ro.p2, "two-qubit depolarizing probability");
  rp->add_option("--p1", ro.p1, "single-qubit depolarizing probability");
  rp->add_option("--readout", ro.readout, "p10,p01")->delimiter(',');
  rp->add_option("--noise-seed", ro.noise_seed, "noise seed");
  rp->add_option("--twirls", ro.twirls, "twirl variants per circuit");
  rp->add_option("--shots", ro.shots, "shots per variant");
  rp->add_option("--basis", ro.basis, "cx or ecr");
  rp->add_flag("--no-self-mitigation", ro.no_mitigation, "report raw values only");
  rp->add_flag("--exact-only", rp_exact, "skip the circuit pipeline");

  bool ot_exact = false;
  auto* ot = app.add_subcommand("otoc", "infinite-temperature OTOC: exact and randomized protocol");
  add_common(ot, oo);
  ot->add_option("--W", oo.W, "W placement, e.g. Z1");
  ot->add_option("--V", oo.V, "V placement, e.g. Z0");
  ot->add_option("--nu", oo.nu, "random unitaries");
  ot->add_option("--nm", oo.nm, "shots per circuit");
  ot->add_option("--times", oo.times, "evaluation times")->delimiter(',');
  ot->add_flag("--exact-only", ot_exact, "skip the randomized protocol");

  auto* tw = app.add_subcommand("twirl-verify", "regenerate and check the CX and ECR twirl tables");
  tw->add_option("--out", tw_out, "output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << SYKQ_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    if (*t1) return cmd_table1(n_min, n_max, t1_seed, t1_out, out);
    if (*comp) return cmd_compile(resolve(comp, co), out);
    if (*rp) return cmd_return_prob(resolve(rp, ro), rp_exact, out);
    if (*ot) return cmd_otoc(resolve(ot, oo), ot_exact, out);
    if (*tw) return cmd_twirl_verify(tw_out, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace sykq
