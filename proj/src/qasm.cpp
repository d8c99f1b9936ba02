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

#include <cstdio>
#include <sstream>
#include <string>

#include "sykq/circuit.hpp"
#include "sykq/error.hpp"

namespace sykq {

std::string export_qasm2(const Circuit& c) {
  c.validate();
  const bool measures = count_kind(c, GateKind::Measure) > 0;
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.width) + "];\n";
  if (measures) out += "creg c[" + std::to_string(c.width) + "];\n";
  char buf[64];
  for (const auto& g : c.gates) {
    const std::string q0 = "q[" + std::to_string(g.q[0]) + "]";
    switch (g.kind) {
      case GateKind::ECR:
        throw UnsupportedGateError("ECR has no OPENQASM 2.0 form; lower it first");
      case GateKind::Rz:
        std::snprintf(buf, sizeof buf, "rz(%.17g) ", g.theta);
        out += buf + q0 + ";\n";
        break;
      case GateKind::CX:
      case GateKind::SWAP:
        out += std::string(gate_name(g.kind)) + " " + q0 + ",q[" + std::to_string(g.q[1]) + "];\n";
        break;
      case GateKind::Barrier: out += "barrier q;\n"; break;
      case GateKind::Measure:
        out += "measure " + q0 + " -> c[" + std::to_string(g.q[0]) + "];\n";
        break;
      default: out += std::string(gate_name(g.kind)) + " " + q0 + ";\n"; break;
    }
  }
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_operand(const std::string& s, const char* reg) {
  const std::string t = trim(s);
  const std::string prefix = std::string(reg) + "[";
  if (t.rfind(prefix, 0) != 0 || t.back() != ']') throw ParseError("bad operand '" + t + "'");
  try {
    return std::stoi(t.substr(prefix.size(), t.size() - prefix.size() - 1));
  } catch (const std::exception&) {
    throw ParseError("bad operand '" + t + "'");
  }
}

}  // namespace

Circuit parse_qasm2(std::string_view text) {
  std::string src;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    if (auto p = line.find("//"); p != std::string::npos) line.erase(p);
    src += line + '\n';
  }
  Circuit c;
  bool header = false, have_reg = false;
  std::istringstream stmts(src);
  for (std::string st; std::getline(stmts, st, ';');) {
    st = trim(st);
    if (st.empty()) continue;
    if (st.rfind("OPENQASM", 0) == 0) {
      if (trim(st.substr(8)) != "2.0") throw ParseError("unsupported OPENQASM version");
      header = true;
      continue;
    }
    if (!header) throw ParseError("missing OPENQASM 2.0 header");
    if (st.rfind("include", 0) == 0) continue;
    if (st.rfind("qreg", 0) == 0) {
      if (have_reg) throw ParseError("only one qreg is supported");
      c.width = parse_operand(st.substr(4), "q");
      have_reg = true;
      continue;
    }
    if (st.rfind("creg", 0) == 0) continue;
    if (!have_reg) throw ParseError("gate before qreg");
    if (st.rfind("barrier", 0) == 0) {
      c.add(Gate::barrier());
      continue;
    }
    if (st.rfind("measure", 0) == 0) {
      const auto arrow = st.find("->");
      if (arrow == std::string::npos) throw ParseError("measure without target");
      c.add(Gate::measure(parse_operand(st.substr(7, arrow - 7), "q")));
      continue;
    }
    if (st.rfind("rz(", 0) == 0) {
      const auto close = st.find(')');
      if (close == std::string::npos) throw ParseError("unterminated rz angle");
      double theta = 0.0;
      try {
        theta = std::stod(st.substr(3, close - 3));
      } catch (const std::exception&) {
        throw ParseError("bad rz angle in '" + st + "'");
      }
      c.add(Gate::rz(parse_operand(st.substr(close + 1), "q"), theta));
      continue;
    }
    const auto sp = st.find_first_of(" \t");
    if (sp == std::string::npos) throw ParseError("bad statement '" + st + "'");
    const std::string name = st.substr(0, sp);
    const std::string args = st.substr(sp + 1);
    if (name == "cx" || name == "swap") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw ParseError("two-qubit gate needs two operands");
      const int a = parse_operand(args.substr(0, comma), "q");
      const int b = parse_operand(args.substr(comma + 1), "q");
      c.add(name == "cx" ? Gate::cx(a, b) : Gate::swap(a, b));
      continue;
    }
    const int a = parse_operand(args, "q");
    if (name == "h") c.add(Gate::h(a));
    else if (name == "s") c.add(Gate::s(a));
    else if (name == "sdg") c.add(Gate::sdg(a));
    else if (name == "x") c.add(Gate::x(a));
    else if (name == "y") c.add(Gate::y(a));
    else if (name == "z") c.add(Gate::z(a));
    else throw UnsupportedGateError("unsupported gate '" + name + "'");
  }
  if (!have_reg) throw ParseError("missing qreg");
  c.validate();
  return c;
}

}  // namespace sykq
