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

#include "sykq/trotter.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sykq/error.hpp"

namespace sykq {

std::string_view strategy_name(DiagStrategy s) {
  switch (s) {
    case DiagStrategy::Best: return "best";
    case DiagStrategy::TableauHigh: return "tableau-high";
    case DiagStrategy::TableauLow: return "tableau-low";
    case DiagStrategy::FoldFirst: return "fold-first";
    case DiagStrategy::FoldLast: return "fold-last";
  }
  return "?";
}

namespace {

std::vector<int> bits_of(std::uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Tracks images of the cluster terms under the circuit built so far.
struct Frame {
  Circuit c;
  std::vector<PauliString> img;

  Frame(int n, const std::vector<WeightedPauli>& terms) : c(n) {
    for (const auto& t : terms) img.push_back(t.string);
  }
  void apply(const Gate& g) {
    c.add(g);
    for (auto& p : img) p = conjugate(p, g);
  }
  bool diagonal() const {
    return std::all_of(img.begin(), img.end(), [](const PauliString& p) { return p.is_diagonal(); });
  }
};

std::optional<Frame> eliminate_tableau(const std::vector<WeightedPauli>& terms, int n, bool high) {
  Frame f(n, terms);
  std::vector<PauliString> rows = f.img;
  std::vector<char> done(rows.size(), 0);
  std::vector<std::pair<std::size_t, int>> pivots;
  const auto apply = [&](const Gate& g) {
    f.apply(g);
    for (auto& r : rows) r = conjugate(r, g);
  };
  for (;;) {
    std::size_t cand = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!done[i] && rows[i].x()) {
        cand = i;
        break;
      }
    if (cand == rows.size()) break;
    const auto xs = bits_of(rows[cand].x());
    const int q = high ? xs.back() : xs.front();
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != cand && ((rows[j].x() >> q) & 1U)) rows[j] = multiply(rows[j], rows[cand]);
    done[cand] = 1;
    for (int c : xs)
      if (c != q) apply(Gate::cx(q, c));
    pivots.emplace_back(cand, q);
  }
  // Pivot rows now carry X only on their own pivot; clear Z on the others.
  for (std::size_t a = 0; a < pivots.size(); ++a)
    for (std::size_t b = a + 1; b < pivots.size(); ++b) {
      const int qa = pivots[a].second, qb = pivots[b].second;
      if ((rows[pivots[a].first].z() >> qb) & 1U) {
        apply(Gate::h(qb));
        apply(Gate::cx(qa, qb));
        apply(Gate::h(qb));
      }
    }
  for (const auto& [i, q] : pivots) {
    if ((rows[i].z() >> q) & 1U) apply(Gate::sdg(q));
    apply(Gate::h(q));
  }
  if (!f.diagonal()) return std::nullopt;
  return f;
}

std::optional<Frame> fold_terms(const std::vector<WeightedPauli>& terms, int n, bool first) {
  Frame f(n, terms);
  std::uint64_t pinned = 0;
  for (int round = 0; round <= n; ++round) {
    std::size_t pick = f.img.size();
    int best = 0;
    for (std::size_t i = 0; i < f.img.size(); ++i) {
      const auto& p = f.img[i];
      if (!p.x()) continue;
      const int w = std::popcount((p.x() | p.z()) & ~pinned);
      if (pick == f.img.size() || w < best) {
        pick = i;
        best = w;
      }
    }
    if (pick == f.img.size()) return f;
    const PauliString p = f.img[pick];
    const auto sites = bits_of((p.x() | p.z()) & ~pinned);
    if (sites.empty()) return std::nullopt;
    for (int q : sites) {
      const char op = p.at(q);
      if (op == 'Y') f.apply(Gate::sdg(q));
      if (op == 'X' || op == 'Y') f.apply(Gate::h(q));
    }
    const int pivot = first ? sites.front() : sites.back();
    for (int q : sites)
      if (q != pivot) f.apply(Gate::cx(q, pivot));
    pinned |= std::uint64_t{1} << pivot;
  }
  return std::nullopt;
}

// Prefix trie of CX ladders. A node is a target plus an ordered list of
// controls; every edge costs one CX on the way in and one on the way out.
struct LadderTrie {
  struct Node {
    int target = 0;
    int control = -1;
    bool has_term = false;
    double coeff = 0.0;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> roots;
  std::map<int, std::size_t> root_of;
  std::size_t edges = 0;

  std::optional<std::size_t> child(std::size_t node, int control) const {
    for (std::size_t c : nodes[node].children)
      if (nodes[c].control == control) return c;
    return std::nullopt;
  }

  std::size_t root(int t) {
    if (auto it = root_of.find(t); it != root_of.end()) return it->second;
    nodes.push_back({t, -1, false, 0.0, {}});
    roots.push_back(nodes.size() - 1);
    return root_of[t] = nodes.size() - 1;
  }

  // Chooses the target and control order that add the fewest new edges.
  void insert(std::uint64_t mask, double coeff) {
    const auto support = bits_of(mask);
    int best_new = -1, best_t = -1;
    std::vector<int> best_path;
    for (int t : support) {
      std::vector<int> rest;
      for (int q : support)
        if (q != t) rest.push_back(q);
      std::vector<int> path;
      int fresh = 0;
      std::optional<std::size_t> at;
      if (auto it = root_of.find(t); it != root_of.end()) at = it->second;
      while (!rest.empty()) {
        auto pick = rest.begin();
        bool found = false;
        if (at)
          for (auto it = rest.begin(); it != rest.end(); ++it)
            if (child(*at, *it)) {
              pick = it;
              found = true;
              break;
            }
        if (found) {
          at = child(*at, *pick);
        } else {
          at.reset();
          ++fresh;
        }
        path.push_back(*pick);
        rest.erase(pick);
      }
      if (best_new < 0 || fresh < best_new) {
        best_new = fresh;
        best_t = t;
        best_path = path;
      }
    }
    std::size_t at = root(best_t);
    for (int q : best_path) {
      if (auto c = child(at, q)) {
        at = *c;
        continue;
      }
      nodes.push_back({best_t, q, false, 0.0, {}});
      nodes[at].children.push_back(nodes.size() - 1);
      at = nodes.size() - 1;
      ++edges;
    }
    nodes[at].has_term = true;
    nodes[at].coeff += coeff;
  }

  void emit(std::size_t node, double dt, Circuit& out) const {
    const Node& nd = nodes[node];
    if (nd.has_term) out.add(Gate::rz(nd.target, 2.0 * nd.coeff * dt));
    for (std::size_t c : nd.children) {
      out.add(Gate::cx(nodes[c].control, nd.target));
      emit(c, dt, out);
      out.add(Gate::cx(nodes[c].control, nd.target));
    }
  }
};

LadderTrie build_trie(const std::vector<WeightedPauli>& diag_terms, int n) {
  std::map<std::pair<int, std::uint64_t>, double> merged;  // (weight, mask)
  for (const auto& t : diag_terms) {
    if (t.string.n() != n) throw DimensionError("diagonal term width differs");
    if (!t.string.is_diagonal()) throw ContractViolation("non-diagonal term " + t.string.str());
    if (t.string.phase() & 1) throw ContractViolation("imaginary phase on " + t.string.str());
    if (t.string.is_identity()) continue;
    const double c = t.string.phase() == 2 ? -t.coeff : t.coeff;
    merged[{t.string.weight(), t.string.z()}] += c;
  }
  LadderTrie trie;
  for (const auto& [key, c] : merged) trie.insert(key.second, c);
  return trie;
}

DiagonalizedCluster finish(const std::vector<WeightedPauli>& terms, int n, Frame f, DiagStrategy s) {
  DiagonalizedCluster d;
  d.clifford = std::move(f.c);
  d.strategy = s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const PauliString& im = f.img[k];
    d.diag_terms.push_back({im.with_phase(0), im.phase() == 2 ? -terms[k].coeff : terms[k].coeff});
  }
  d.ladder_cx = diagonal_ladder_cost(d.diag_terms, n);
  return d;
}

}  // namespace

DiagonalizedCluster diagonalize_cluster(const std::vector<WeightedPauli>& terms, int n,
                                        DiagStrategy strategy) {
  for (std::size_t a = 0; a < terms.size(); ++a) {
    if (terms[a].string.n() != n) throw DimensionError("cluster term width differs");
    for (std::size_t b = a + 1; b < terms.size(); ++b)
      if (!commutes(terms[a].string, terms[b].string))
        throw ContractViolation("cluster terms " + terms[a].string.str() + " and " +
                                terms[b].string.str() + " anticommute");
  }
  const auto run = [&](DiagStrategy s) -> std::optional<DiagonalizedCluster> {
    std::optional<Frame> f;
    switch (s) {
      case DiagStrategy::TableauHigh: f = eliminate_tableau(terms, n, true); break;
      case DiagStrategy::TableauLow: f = eliminate_tableau(terms, n, false); break;
      case DiagStrategy::FoldFirst: f = fold_terms(terms, n, true); break;
      case DiagStrategy::FoldLast: f = fold_terms(terms, n, false); break;
      case DiagStrategy::Best: break;
    }
    if (!f) return std::nullopt;
    return finish(terms, n, std::move(*f), s);
  };
  if (strategy != DiagStrategy::Best) {
    auto d = run(strategy);
    if (!d) throw ContractViolation(std::string(strategy_name(strategy)) + " failed to diagonalize");
    return *d;
  }
  std::optional<DiagonalizedCluster> best;
  for (DiagStrategy s : {DiagStrategy::TableauHigh, DiagStrategy::TableauLow,
                         DiagStrategy::FoldFirst, DiagStrategy::FoldLast}) {
    auto d = run(s);
    if (d && (!best || d->two_qubit_cost() < best->two_qubit_cost())) best = std::move(d);
  }
  if (!best) throw ContractViolation("cluster could not be diagonalized");
  return *best;
}

std::size_t diagonal_ladder_cost(const std::vector<WeightedPauli>& diag_terms, int n) {
  return 2 * build_trie(diag_terms, n).edges;
}

Circuit synth_diagonal_evolution(const std::vector<WeightedPauli>& diag_terms, int n, double dt) {
  const LadderTrie trie = build_trie(diag_terms, n);
  Circuit out(n);
  out.dt = dt;
  for (std::size_t r : trie.roots) trie.emit(r, dt, out);
  return out;
}

TrotterPlan plan_trotter(const Hamiltonian& h, const ClusterPartition& p, DiagStrategy strategy) {
  TrotterPlan plan{h.n(), {}};
  for (const auto& cl : p.clusters) {
    std::vector<WeightedPauli> terms;
    for (std::size_t i : cl) terms.push_back(h.sum()[i]);
    plan.clusters.push_back(diagonalize_cluster(terms, h.n(), strategy));
  }
  return plan;
}

TrotterPlan plan_trotter(const Hamiltonian& h, DiagStrategy strategy) {
  return plan_trotter(h, dsatur_partition(build_graph(h.sum())), strategy);
}

Circuit trotter_step(const TrotterPlan& plan, double dt) {
  Circuit out(plan.n);
  for (const auto& d : plan.clusters) {
    out.append(d.clifford);
    out.append(synth_diagonal_evolution(d.diag_terms, plan.n, dt));
    out.append(inverse(d.clifford));
  }
  out.name = "trotter_step";
  out.dt = dt;
  out.steps = 1;
  return out;
}

Circuit trotter_step(const Hamiltonian& h, const ClusterPartition& p, double dt) {
  return trotter_step(plan_trotter(h, p), dt);
}

Circuit trotter_circuit(const TrotterPlan& plan, double t, int r) {
  if (r < 1) throw ParameterError("Trotter repetitions must be >= 1");
  const double dt = t / r;
  const Circuit step = trotter_step(plan, dt);
  Circuit out(plan.n);
  out.gates.reserve(step.gates.size() * static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) out.append(step);
  out.name = "trotter";
  out.dt = dt;
  out.steps = r;
  return out;
}

Circuit trotter_circuit(const Hamiltonian& h, double t, int r) {
  return trotter_circuit(plan_trotter(h), t, r);
}

ResourceRow resource_row(int N, std::uint64_t seed) {
  SykParams params;
  params.N = N;
  params.seed = seed;
  const Hamiltonian h = build_hamiltonian(sample_couplings(params));
  const ClusterPartition p = dsatur_partition(build_graph(h.sum()));
  const TrotterPlan plan = plan_trotter(h, p);
  std::size_t cost = 0;
  for (const auto& d : plan.clusters) cost += d.two_qubit_cost();
  return {N, h.sum().size(), p.count(), cost};
}

std::vector<ResourceRow> resource_table(int n_min, int n_max, std::uint64_t seed) {
  if (n_min < 4 || n_max > 24 || n_min > n_max || n_min % 2 || n_max % 2)
    throw UsageError("N range must be even values within [4, 24]");
  std::vector<ResourceRow> rows;
  for (int N = n_min; N <= n_max; N += 2) rows.push_back(resource_row(N, seed));
  return rows;
}

}  // namespace sykq
