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

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "sykq/circuit.hpp"
#include "sykq/error.hpp"

namespace sykq {

CouplingMap::CouplingMap(int n, std::vector<std::array<int, 2>> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
  if (n < 1) throw ParameterError("coupling map needs at least one qubit");
  for (const auto& e : edges_) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n || e[0] == e[1])
      throw ParameterError("bad coupling edge");
    adj_[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj_[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    int* d = &dist_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n)];
    std::deque<int> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
  }
}

CouplingMap CouplingMap::line(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return {n, e};
}

CouplingMap CouplingMap::all_to_all(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return {n, e};
}

CouplingMap CouplingMap::tee() {
  // 0-1-2 with 3 hanging off the middle.
  return {4, {{0, 1}, {1, 2}, {1, 3}}};
}

CouplingMap CouplingMap::from_edge_list(std::string_view text) {
  std::vector<std::array<int, 2>> e;
  int n = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
    std::istringstream ls(line);
    int a = 0, b = 0;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError("edge line needs two endpoints: '" + line + "'");
    e.push_back({a, b});
    n = std::max({n, a + 1, b + 1});
  }
  if (e.empty()) throw ParseError("edge list is empty");
  return {n, e};
}

CouplingMap CouplingMap::from_spec(std::string_view spec, int n) {
  const auto sized = [&](std::string_view prefix) -> int {
    if (spec.size() == prefix.size()) return n;
    int k = 0;
    auto [p, ec] = std::from_chars(spec.data() + prefix.size(), spec.data() + spec.size(), k);
    if (ec != std::errc() || p != spec.data() + spec.size()) throw UsageError("bad map '" + std::string(spec) + "'");
    return k;
  };
  if (spec == "all") return all_to_all(n);
  if (spec == "tee") return tee();
  if (spec.rfind("path", 0) == 0) return line(sized("path"));
  if (spec.rfind("line", 0) == 0) return line(sized("line"));
  std::ifstream f{std::string(spec)};
  if (!f) throw UsageError("unknown coupling map '" + std::string(spec) + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return from_edge_list(ss.str());
}

bool CouplingMap::adjacent(int a, int b) const { return distance(a, b) == 1; }

int CouplingMap::distance(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw DimensionError("physical qubit out of range");
  return dist_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
}

std::vector<int> CouplingMap::path(int a, int b) const {
  if (distance(a, b) < 0) return {};
  std::vector<int> p{a};
  while (p.back() != b) {
    for (int v : adj_[static_cast<std::size_t>(p.back())])
      if (distance(v, b) == distance(p.back(), b) - 1) {
        p.push_back(v);
        break;
      }
  }
  return p;
}

RoutedCircuit route(const Circuit& c, const CouplingMap& map) {
  c.validate();
  if (c.width > map.size()) throw RoutingError("coupling map has fewer qubits than the circuit");
  const int np = map.size();
  std::vector<int> phys(static_cast<std::size_t>(np)), virt(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) phys[static_cast<std::size_t>(i)] = virt[static_cast<std::size_t>(i)] = i;

  RoutedCircuit out;
  out.circuit = Circuit(np);
  out.circuit.name = c.name;
  out.circuit.dt = c.dt;
  out.circuit.steps = c.steps;
  out.initial_layout.assign(phys.begin(), phys.begin() + c.width);

  const auto at = [&](int v) { return phys[static_cast<std::size_t>(v)]; };
  const auto do_swap = [&](int pa, int pb) {
    out.circuit.add(Gate::swap(pa, pb));
    const int va = virt[static_cast<std::size_t>(pa)], vb = virt[static_cast<std::size_t>(pb)];
    std::swap(virt[static_cast<std::size_t>(pa)], virt[static_cast<std::size_t>(pb)]);
    phys[static_cast<std::size_t>(va)] = pb;
    phys[static_cast<std::size_t>(vb)] = pa;
  };

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (!is_two_qubit(g.kind)) {
      Gate m = g;
      if (gate_arity(g.kind) == 1) m.q[0] = at(g.q[0]);
      out.circuit.add(m);
      continue;
    }
    const Gate* next = nullptr;
    const auto same_pair = [&](const Gate& o) {
      return std::min(o.q[0], o.q[1]) == std::min(g.q[0], g.q[1]) && std::max(o.q[0], o.q[1]) == std::max(g.q[0], g.q[1]);
    };
    for (std::size_t j = i + 1; j < c.gates.size(); ++j)
      if (is_two_qubit(c.gates[j].kind) && !same_pair(c.gates[j])) {
        next = &c.gates[j];
        break;
      }
    while (!map.adjacent(at(g.q[0]), at(g.q[1]))) {
      const auto p = map.path(at(g.q[0]), at(g.q[1]));
      if (p.empty()) throw RoutingError("operands lie in disconnected components");
      // Either move the first operand forward or the second one back.
      const std::array<std::array<int, 2>, 2> moves{{{p[p.size() - 1], p[p.size() - 2]}, {p[0], p[1]}}};
      std::size_t pick = 0;
      if (next) {
        int best = 0;
        for (std::size_t k = 0; k < moves.size(); ++k) {
          do_swap(moves[k][0], moves[k][1]);
          const int d = map.distance(at(next->q[0]), at(next->q[1]));
          do_swap(moves[k][0], moves[k][1]);
          out.circuit.gates.resize(out.circuit.gates.size() - 2);
          if (k == 0 || (d >= 0 && d < best)) {
            best = d;
            pick = k;
          }
        }
      }
      do_swap(std::min(moves[pick][0], moves[pick][1]), std::max(moves[pick][0], moves[pick][1]));
    }
    Gate m = g;
    m.q = {at(g.q[0]), at(g.q[1])};
    out.circuit.add(m);
  }
  out.final_layout.assign(phys.begin(), phys.begin() + c.width);
  return out;
}

}  // namespace sykq
