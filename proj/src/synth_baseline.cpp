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

#include "pfg/synth_baseline.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pfg {

std::vector<std::vector<std::size_t>> commuting_groups(
    const PauliSumHamiltonian& h) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    bool placed = false;
    for (auto& g : groups) {
      bool fits = true;
      for (std::size_t j : g) {
        if (symplectic_form(h.terms[i].pauli, h.terms[j].pauli) != 0) {
          fits = false;
          break;
        }
      }
      if (fits) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

Circuit staircase(const PauliString& term, double angle,
                  std::int64_t term_id) {
  if (term.is_identity()) {
    throw std::invalid_argument("staircase: identity term has no circuit");
  }
  const std::size_t n = term.num_qubits();
  Circuit c(n);

  std::vector<std::uint32_t> support;
  for (std::size_t q = 0; q < n; ++q) {
    if (term.local(q) != 0) support.push_back(static_cast<std::uint32_t>(q));
  }

  // Rotate every X and Y letter onto the Z axis. For Y the change of basis
  // is P† then H (and H then P on the way out), which maps Y -> Z exactly.
  for (std::uint32_t q : support) {
    const std::uint8_t code = term.local(q);
    if (code == kLocalX) {
      c.append(Gate::h(q));
    } else if (code == kLocalY) {
      c.append(Gate::pdg(q));
      c.append(Gate::h(q));
    }
  }

  // Parity chain onto the highest-index support qubit, turn, and uncompute.
  for (std::size_t k = 0; k + 1 < support.size(); ++k) {
    c.append(Gate::cx(support[k], support[k + 1]));
  }
  c.append(Gate::rotation(PauliAxis::Z, support.back(), angle, term_id));
  for (std::size_t k = support.size() - 1; k >= 1; --k) {
    c.append(Gate::cx(support[k - 1], support[k]));
  }

  for (std::uint32_t q : support) {
    const std::uint8_t code = term.local(q);
    if (code == kLocalX) {
      c.append(Gate::h(q));
    } else if (code == kLocalY) {
      c.append(Gate::h(q));
      c.append(Gate::p(q));
    }
  }
  return c;
}

namespace {

constexpr double kNegligibleAngle = 1e-12;

/// Circuit gate plus per-qubit doubly linked dependency lists. Slot 0 tracks
/// the q0 wire, slot 1 the q1 wire of two-qubit gates.
struct DepNode {
  Gate g;
  std::array<int, 2> prev{{-1, -1}};
  std::array<int, 2> next{{-1, -1}};
  bool alive = true;
};

int slot_of(const DepNode& n, std::uint32_t q) { return n.g.q0 == q ? 0 : 1; }

void unlink(std::vector<DepNode>& nodes, int idx) {
  DepNode& n = nodes[idx];
  const int slots = n.g.is_two_qubit() ? 2 : 1;
  for (int s = 0; s < slots; ++s) {
    const std::uint32_t q = s == 0 ? n.g.q0 : n.g.q1;
    const int p = n.prev[s];
    const int x = n.next[s];
    if (p >= 0) nodes[p].next[slot_of(nodes[p], q)] = x;
    if (x >= 0) nodes[x].prev[slot_of(nodes[x], q)] = p;
  }
  n.alive = false;
}

bool inverse_single_pair(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::H && b.kind == GateKind::H) return true;
  if (a.kind == GateKind::P && b.kind == GateKind::Pdg) return true;
  if (a.kind == GateKind::Pdg && b.kind == GateKind::P) return true;
  const bool a_pauli = a.kind == GateKind::PauliX ||
                       a.kind == GateKind::PauliY || a.kind == GateKind::PauliZ;
  return a_pauli && a.kind == b.kind;
}

bool same_two_qubit_gate(const Gate& a, const Gate& b) {
  return a.kind == b.kind && a.q0 == b.q0 && a.q1 == b.q1 && a.t0 == b.t0 &&
         a.t1 == b.t1;
}

/// Try one local rewrite anchored at node u. Returns true if anything changed.
bool reduce_at(std::vector<DepNode>& nodes, int u) {
  DepNode& a = nodes[u];
  if (a.g.is_rotation() && std::abs(a.g.angle) < kNegligibleAngle) {
    unlink(nodes, u);
    return true;
  }
  const int v = a.next[0];
  if (v < 0) return false;
  DepNode& b = nodes[v];

  if (a.g.is_two_qubit()) {
    // Both wires must meet the same partner with nothing in between.
    if (a.next[1] == v && same_two_qubit_gate(a.g, b.g)) {
      unlink(nodes, u);
      unlink(nodes, v);
      return true;
    }
    return false;
  }
  if (b.g.is_two_qubit()) return false;

  if (inverse_single_pair(a.g, b.g)) {
    unlink(nodes, u);
    unlink(nodes, v);
    return true;
  }
  if (a.g.is_rotation() && b.g.kind == a.g.kind) {
    const double sum = a.g.angle + b.g.angle;
    const std::int64_t id = a.g.term_id == b.g.term_id ? a.g.term_id : -1;
    unlink(nodes, v);
    const Gate fused = Gate::rotation(a.g.rotation_axis(), a.g.q0, sum, id);
    if (std::abs(fused.angle) < kNegligibleAngle) {
      unlink(nodes, u);
    } else {
      a.g = fused;
    }
    return true;
  }
  return false;
}

}  // namespace

Circuit cancel_adjacent(const Circuit& c, const CancelConfig& cfg) {
  std::vector<DepNode> nodes;
  nodes.reserve(c.gates.size());
  std::vector<int> last(c.n_qubits, -1);
  for (const Gate& g : c.gates) {
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back(DepNode{g, {{-1, -1}}, {{-1, -1}}, true});
    const int slots = g.is_two_qubit() ? 2 : 1;
    for (int s = 0; s < slots; ++s) {
      const std::uint32_t q = s == 0 ? g.q0 : g.q1;
      nodes[idx].prev[s] = last[q];
      if (last[q] >= 0) nodes[last[q]].next[slot_of(nodes[last[q]], q)] = idx;
      last[q] = idx;
    }
  }

  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(cfg.time_limit));
  bool changed = true;
  std::size_t pass = 0;
  while (changed && pass < cfg.passes &&
         std::chrono::steady_clock::now() < deadline) {
    changed = false;
    ++pass;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      if (nodes[i].alive && reduce_at(nodes, i)) changed = true;
    }
  }

  Circuit out(c.n_qubits);
  for (const DepNode& n : nodes) {
    if (n.alive) out.append(n.g);
  }
  return out;
}

BaselineResult synth_baseline(const PauliSumHamiltonian& h, double dt,
                              const CancelConfig& cfg) {
  BaselineResult res;
  res.circuit = Circuit(h.n_qubits);
  for (const std::vector<std::size_t>& group : commuting_groups(h)) {
    for (std::size_t idx : group) {
      const HamTerm& t = h.terms[idx];
      const double angle = 2.0 * t.coefficient * dt;
      res.circuit.append(
          staircase(t.pauli, angle, static_cast<std::int64_t>(idx)));
      res.manifest.push_back(
          RotationRecord{static_cast<int>(idx), angle, t.pauli});
    }
  }
  res.circuit = cancel_adjacent(res.circuit, cfg);
  res.metrics = compute_metrics(res.circuit, h.terms.size());
  return res;
}

}  // namespace pfg
