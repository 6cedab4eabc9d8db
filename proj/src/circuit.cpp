// Copyright 2026 the pfgsynth authors
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

#include "pfg/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pfg {

std::int64_t gate_duration(const Gate& g, CostModel model) {
  if (model == CostModel::kAllGates) return 1;
  return g.is_two_qubit() ? 1 : 0;
}

Schedule asap_schedule(const Circuit& c, CostModel model) {
  Schedule s;
  s.start.reserve(c.gates.size());
  s.qubit_ready.assign(c.n_qubits, 0);
  for (const Gate& g : c.gates) {
    std::int64_t t = s.qubit_ready[g.q0];
    if (g.is_two_qubit()) t = std::max(t, s.qubit_ready[g.q1]);
    s.start.push_back(t);
    const std::int64_t fin = t + gate_duration(g, model);
    s.qubit_ready[g.q0] = fin;
    if (g.is_two_qubit()) s.qubit_ready[g.q1] = fin;
    s.makespan = std::max(s.makespan, fin);
  }
  return s;
}

Metrics compute_metrics(const Circuit& c, std::size_t n_terms) {
  Metrics m;
  m.gate_count = c.gates.size();
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) ++m.tqe_count;
    if (g.is_rotation()) ++m.rotation_count;
  }
  m.depth_all = asap_schedule(c, CostModel::kAllGates).makespan;
  m.depth_tqe = asap_schedule(c, CostModel::kTwoQubitOnly).makespan;
  m.tqe_per_term =
      n_terms == 0 ? 0.0
                   : static_cast<double>(m.tqe_count) / static_cast<double>(n_terms);
  return m;
}

Gate dagger(const Gate& g) {
  Gate d = g;
  if (g.kind == GateKind::P)
    d.kind = GateKind::Pdg;
  else if (g.kind == GateKind::Pdg)
    d.kind = GateKind::P;
  else if (g.is_rotation())
    d.angle = -g.angle;
  // TQE, Swap, H and the Paulis are involutions.
  return d;
}

namespace {

/**
 * Single-qubit circuit A with A Z A^dagger = t0 on q0 and A X A^dagger = t1
 * on q1, so that TQE(t0, t1) = A CX A^dagger (the controlled-Pauli structure
 * conjugates along with the eigenbases).
 */
void tqe_basis_prep(const Gate& g, std::vector<Gate>& prep) {
  switch (g.t0) {
    case PauliAxis::Z:
      break;
    case PauliAxis::X:
      prep.push_back(Gate::h(g.q0));
      break;
    case PauliAxis::Y:
      prep.push_back(Gate::h(g.q0));
      prep.push_back(Gate::p(g.q0));
      break;
  }
  switch (g.t1) {
    case PauliAxis::X:
      break;
    case PauliAxis::Z:
      prep.push_back(Gate::h(g.q1));
      break;
    case PauliAxis::Y:
      prep.push_back(Gate::p(g.q1));
      break;
  }
}

}  // namespace

Circuit expand_tqe(const Circuit& c) {
  Circuit out(c.n_qubits);
  std::vector<Gate> prep;
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::TQE) {
      out.append(g);
      continue;
    }
    prep.clear();
    tqe_basis_prep(g, prep);
    for (auto it = prep.rbegin(); it != prep.rend(); ++it)
      out.append(dagger(*it));
    out.append(Gate::cx(g.q0, g.q1));
    for (const Gate& p : prep) out.append(p);
  }
  return out;
}

std::string tqe_name(PauliAxis t0, PauliAxis t1) {
  const char first[3] = {'A', 'B', 'C'};  // X, Y, Z on the first qubit
  std::string name;
  name += first[static_cast<int>(t0)];
  name += letter_of_axis(t1);
  return name;
}

namespace {

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

std::string gate_to_text(const Gate& g) {
  switch (g.kind) {
    case GateKind::TQE:
      return tqe_name(g.t0, g.t1) + " " + std::to_string(g.q0) + "," +
             std::to_string(g.q1);
    case GateKind::Swap:
      return "SWAP " + std::to_string(g.q0) + "," + std::to_string(g.q1);
    case GateKind::H:
      return "H " + std::to_string(g.q0);
    case GateKind::P:
      return "P " + std::to_string(g.q0);
    case GateKind::Pdg:
      return "PDG " + std::to_string(g.q0);
    case GateKind::PauliX:
      return "X " + std::to_string(g.q0);
    case GateKind::PauliY:
      return "Y " + std::to_string(g.q0);
    case GateKind::PauliZ:
      return "Z " + std::to_string(g.q0);
    case GateKind::RX:
      return "RX " + std::to_string(g.q0) + " " + format_angle(g.angle);
    case GateKind::RY:
      return "RY " + std::to_string(g.q0) + " " + format_angle(g.angle);
    case GateKind::RZ:
      return "RZ " + std::to_string(g.q0) + " " + format_angle(g.angle);
  }
  return {};
}

std::string export_text(const Circuit& c, bool expand) {
  const Circuit& src = c;
  Circuit lowered;
  const Circuit* use = &src;
  if (expand) {
    lowered = expand_tqe(c);
    use = &lowered;
  }
  std::string out = "qubits " + std::to_string(use->n_qubits) + "\n";
  for (const Gate& g : use->gates) {
    out += gate_to_text(g);
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::pair<std::uint32_t, std::uint32_t> parse_qubit_pair(
    const std::string& spec, std::size_t line) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    parse_fail(line, "expected two comma-separated qubits, got '" + spec + "'");
  std::size_t used = 0;
  unsigned long a = 0, b = 0;
  try {
    a = std::stoul(spec.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = spec.substr(comma + 1);
    b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    parse_fail(line, "malformed qubit pair '" + spec + "'");
  }
  if (a == b) parse_fail(line, "two-qubit gate repeats qubit " + std::to_string(a));
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

std::uint32_t parse_qubit(const std::string& spec, std::size_t line) {
  std::size_t used = 0;
  unsigned long q = 0;
  try {
    q = std::stoul(spec, &used);
    if (used != spec.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    parse_fail(line, "malformed qubit index '" + spec + "'");
  }
  return static_cast<std::uint32_t>(q);
}

double parse_angle(const std::string& spec, std::size_t line) {
  std::size_t used = 0;
  double a = 0.0;
  try {
    a = std::stod(spec, &used);
    if (used != spec.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    parse_fail(line, "malformed angle '" + spec + "'");
  }
  return a;
}

bool is_tqe_mnemonic(const std::string& name) {
  return name.size() == 2 && name[0] >= 'A' && name[0] <= 'C' &&
         (name[1] == 'X' || name[1] == 'Y' || name[1] == 'Z');
}

PauliAxis axis_of_letter(char c) {
  return c == 'X' ? PauliAxis::X : (c == 'Y' ? PauliAxis::Y : PauliAxis::Z);
}

}  // namespace

Circuit import_text(const std::string& text) {
  Circuit c;
  bool have_header = false;
  std::size_t max_qubit = 0;
  bool any_gate = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "qubits") {
      if (any_gate || have_header)
        parse_fail(line_no, "'qubits' header must come first and only once");
      if (toks.size() != 2) parse_fail(line_no, "expected 'qubits N'");
      c.n_qubits = parse_qubit(toks[1], line_no);
      have_header = true;
      continue;
    }

    const std::string& name = toks[0];
    Gate g;
    if (is_tqe_mnemonic(name) || name == "SWAP") {
      if (toks.size() != 2)
        parse_fail(line_no, name + " takes exactly one qubit pair");
      const auto [a, b] = parse_qubit_pair(toks[1], line_no);
      if (name == "SWAP") {
        g = Gate::swap(a, b);
      } else {
        const PauliAxis t0 =
            name[0] == 'A' ? PauliAxis::X
                           : (name[0] == 'B' ? PauliAxis::Y : PauliAxis::Z);
        g = Gate::tqe(t0, axis_of_letter(name[1]), a, b);
      }
      max_qubit = std::max<std::size_t>(max_qubit, std::max(a, b));
    } else if (name == "RX" || name == "RY" || name == "RZ") {
      if (toks.size() != 3)
        parse_fail(line_no, name + " takes a qubit and an angle");
      const std::uint32_t q = parse_qubit(toks[1], line_no);
      const double angle = parse_angle(toks[2], line_no);
      g = Gate::rotation(axis_of_letter(name[1]), q, angle);
      max_qubit = std::max<std::size_t>(max_qubit, q);
    } else if (name == "H" || name == "P" || name == "PDG" || name == "X" ||
               name == "Y" || name == "Z") {
      if (toks.size() != 2)
        parse_fail(line_no, name + " takes exactly one qubit");
      const std::uint32_t q = parse_qubit(toks[1], line_no);
      if (name == "H")
        g = Gate::h(q);
      else if (name == "P")
        g = Gate::p(q);
      else if (name == "PDG")
        g = Gate::pdg(q);
      else
        g = Gate::pauli(axis_of_letter(name[0]), q);
      max_qubit = std::max<std::size_t>(max_qubit, q);
    } else {
      parse_fail(line_no, "unknown gate '" + name + "'");
    }

    if (have_header) {
      const std::size_t hi = g.is_two_qubit() ? std::max(g.q0, g.q1) : g.q0;
      if (hi >= c.n_qubits)
        parse_fail(line_no, "qubit " + std::to_string(hi) +
                                " outside register of " +
                                std::to_string(c.n_qubits));
    }
    c.gates.push_back(g);
    any_gate = true;
  }

  if (!have_header) c.n_qubits = any_gate ? max_qubit + 1 : 0;
  return c;
}

}  // namespace pfg
