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

#include "pfg/synth_pfg.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pfg/tables.hpp"

namespace pfg {
namespace {

// Axis rank under a tie-break policy id; throws on unknown ids.
std::array<int, 3> axis_ranks(const std::string& tie_break) {
  if (tie_break == "xyz") return {0, 1, 2};  // X < Y < Z
  if (tie_break == "zxy") return {1, 2, 0};  // Z < X < Y
  throw std::invalid_argument("unknown tie_break policy '" + tie_break + "'");
}

// Support change of one term if g were applied, from the local action table.
int support_delta(const TermState& t, const Gate& g) {
  const int ci = t.coords.local(g.q0);
  const int cj = t.coords.local(g.q1);
  if (ci == 0 && cj == 0) return 0;
  const auto& entry = tqe_action_table()[tqe_type_index(g.t0, g.t1)]
                                        [local_pair_index(ci, cj)];
  return (entry.code_i != 0) + (entry.code_j != 0) - (ci != 0) - (cj != 0);
}

double hypothetical_start(const Gate& g, const SchedulerState& sched) {
  return std::max(sched.last_finish[g.q0], sched.last_finish[g.q1]);
}

void occupy(SchedulerState& sched, std::size_t q, double duration = 1.0) {
  const double finish = sched.last_finish[q] + duration;
  sched.last_finish[q] = finish;
  sched.leading_edge = std::max(sched.leading_edge, finish);
}

void occupy_pair(SchedulerState& sched, std::size_t q0, std::size_t q1) {
  const double start = std::max(sched.last_finish[q0], sched.last_finish[q1]);
  sched.last_finish[q0] = start + 1.0;
  sched.last_finish[q1] = start + 1.0;
  sched.leading_edge = std::max(sched.leading_edge, start + 1.0);
}

}  // namespace

std::vector<Gate> candidate_gates(const std::vector<TermState>& terms,
                                  std::size_t min_support,
                                  const std::string& tie_break) {
  const auto ranks = axis_ranks(tie_break);
  const LocalTables& tables = LocalTables::get();
  std::vector<Gate> out;
  for (const TermState& t : terms) {
    if (!t.active || t.coords.support() != min_support) continue;
    std::vector<std::size_t> qubits;
    const std::size_t n = t.coords.a.size();
    for (std::size_t q = t.coords.a.next_or_bit(t.coords.b, 0); q < n;
         q = t.coords.a.next_or_bit(t.coords.b, q + 1)) {
      qubits.push_back(q);
    }
    for (std::size_t ii = 0; ii < qubits.size(); ++ii) {
      for (std::size_t jj = ii + 1; jj < qubits.size(); ++jj) {
        const int ci = t.coords.local(qubits[ii]);
        const int cj = t.coords.local(qubits[jj]);
        const auto& four = tables.reducers[(ci - 1) + 3 * (cj - 1)];
        for (const auto& [t0, t1] : four) {
          out.push_back(Gate::tqe(t0, t1, qubits[ii], qubits[jj]));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Gate& a, const Gate& b) {
    if (a.q0 != b.q0) return a.q0 < b.q0;
    if (a.q1 != b.q1) return a.q1 < b.q1;
    if (a.t0 != b.t0) return ranks[static_cast<int>(a.t0)] <
                             ranks[static_cast<int>(b.t0)];
    return ranks[static_cast<int>(a.t1)] < ranks[static_cast<int>(b.t1)];
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double gate_cost(const Gate& g, const std::vector<TermState>& terms,
                 std::size_t n_active, const SchedulerState& sched,
                 double credit) {
  int delta_sum = 0;
  for (const TermState& t : terms) {
    if (t.active) delta_sum += support_delta(t, g);
  }
  const double avg_delta =
      static_cast<double>(delta_sum) / static_cast<double>(n_active);
  const double pace = hypothetical_start(g, sched) - sched.leading_edge;
  return avg_delta - credit * std::abs(pace);
}

Gate rotation_for_term(const TermState& term, const SignedFrame& frame,
                       double dt) {
  if (term.coords.support() != 1) {
    throw std::invalid_argument("rotation requires a support-one term");
  }
  const std::size_t n = term.coords.a.size();
  const std::size_t q = term.coords.a.next_or_bit(term.coords.b, 0);
  const int code = term.coords.local(q);
  const SignedPauli image = frame.forward().conjugate(SignedPauli(term.pauli, 0));
  assert(image.pauli == PauliString::single(n, q, code));
  (void)n;
  const double sign = image.sign_bit() ? -1.0 : 1.0;
  return Gate::rotation(axis_of_local(static_cast<std::uint8_t>(code)), q,
                        sign * 2.0 * term.coefficient * dt, term.term_id);
}

Circuit retrace(const Circuit& c) {
  Circuit out = c;
  for (std::size_t i = c.gates.size(); i-- > 0;) {
    const Gate& g = c.gates[i];
    out.append(g.is_rotation() ? g : dagger(g));
  }
  return out;
}

SynthResult synth(const PauliSumHamiltonian& h, const SynthConfig& cfg) {
  if (h.terms.empty()) {
    throw std::invalid_argument("cannot synthesize an empty Hamiltonian");
  }
  if (cfg.retrace && cfg.close_cycle) {
    throw std::invalid_argument("retrace conflicts with close_cycle");
  }
  if (cfg.credit < 0.0) {
    throw std::invalid_argument("credit must be non-negative");
  }
  axis_ranks(cfg.tie_break);  // validate the policy id up front

  const std::size_t n = h.n_qubits;
  SynthResult res{Circuit(n), SignedFrame(n), Metrics{}, {}};
  std::vector<TermState> terms;
  terms.reserve(h.terms.size());
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    TermState t;
    t.term_id = static_cast<int>(i);
    t.coefficient = h.terms[i].coefficient;
    t.pauli = h.terms[i].pauli;
    t.coords = CoordinateVector(n);
    t.coords.a = h.terms[i].pauli.x;  // at the origin frame a = x, b = z
    t.coords.b = h.terms[i].pauli.z;
    t.active = true;
    terms.push_back(std::move(t));
  }

  SchedulerState sched{std::vector<double>(n, 0.0), 0.0};
  // Deactivations and strict min-support progress bound the loop; the cap
  // only guards against an inconsistent reduction table.
  const std::size_t gate_cap = 4 * n * h.terms.size() + 64;
  std::size_t placed = 0;

  for (;;) {
    // Rotate everything that has reached support one, in term order.
    for (TermState& t : terms) {
      if (!t.active || t.coords.support() != 1) continue;
      const Gate rot = rotation_for_term(t, res.final_frame, cfg.dt);
      res.circuit.append(rot);
      res.manifest.push_back(
          {t.term_id, 2.0 * t.coefficient * cfg.dt, t.pauli});
      occupy(sched, rot.q0);
      t.active = false;
    }

    std::size_t n_active = 0;
    std::size_t min_support = SIZE_MAX;
    for (const TermState& t : terms) {
      if (!t.active) continue;
      ++n_active;
      min_support = std::min(min_support, t.coords.support());
    }
    if (n_active == 0) break;
    assert(min_support >= 2);

    const std::vector<Gate> cands =
        candidate_gates(terms, min_support, cfg.tie_break);
    if (cands.empty()) {
      throw std::runtime_error("no support-reducing gate for an active term");
    }

    std::vector<double> costs(cands.size());
    auto eval_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        costs[k] = gate_cost(cands[k], terms, n_active, sched, cfg.credit);
      }
    };
    if (cfg.n_workers > 1 && cands.size() >= 2 * cfg.n_workers) {
      std::vector<std::thread> pool;
      const std::size_t chunk =
          (cands.size() + cfg.n_workers - 1) / cfg.n_workers;
      for (std::size_t w = 0; w < cfg.n_workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(cands.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(eval_range, lo, hi);
      }
      for (std::thread& th : pool) th.join();
    } else {
      eval_range(0, cands.size());
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k) {
      if (costs[k] < costs[best]) best = k;
    }

    const Gate g = cands[best];
    res.final_frame.apply(g);
    for (TermState& t : terms) {
      if (t.active) coord_update(t.coords, g);
    }
    res.circuit.append(g);
    occupy_pair(sched, g.q0, g.q1);
    if (++placed > gate_cap) {
      throw std::runtime_error("synthesis exceeded its progress bound");
    }
  }

  if (cfg.close_cycle) {
    const Circuit closure = clifford_circuit_of_frame(res.final_frame);
    for (const Gate& g : closure.gates) {
      res.circuit.append(g);
      res.final_frame.apply(g);
    }
    assert(res.final_frame.is_origin());
  }

  if (cfg.retrace) {
    const std::size_t first_half = res.circuit.gates.size();
    res.circuit = retrace(res.circuit);
    for (std::size_t i = first_half; i < res.circuit.gates.size(); ++i) {
      const Gate& g = res.circuit.gates[i];
      if (g.is_rotation()) {
        // Same operator and raw angle as the first pass, reversed order.
        const TermState& t = terms[static_cast<std::size_t>(g.term_id)];
        res.manifest.push_back(
            {t.term_id, 2.0 * t.coefficient * cfg.dt, t.pauli});
      } else {
        res.final_frame.apply(g);
      }
    }
    assert(res.final_frame.is_origin());
  }

  res.metrics = compute_metrics(res.circuit, h.terms.size());
  return res;
}

std::string format_manifest(std::size_t n_qubits,
                            const std::vector<RotationRecord>& manifest) {
  std::string out = "qubits " + std::to_string(n_qubits) + "\n";
  char buf[64];
  for (const RotationRecord& r : manifest) {
    out += std::to_string(r.term_id);
    out += ' ';
    std::snprintf(buf, sizeof buf, "%.17g", r.angle);
    out += buf;
    out += ' ';
    out += format_pauli(r.pauli, PauliFormat::kDense);
    out += '\n';
  }
  return out;
}

ParsedManifest parse_manifest(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  ParsedManifest out;
  bool have_header = false;
  auto fail = [&](const std::string& what) -> void {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string keyword;
      long long count = -1;
      std::string extra;
      if (!(ls >> keyword >> count) || keyword != "qubits" || count < 1 ||
          (ls >> extra)) {
        fail("expected 'qubits N' header");
      }
      out.n_qubits = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long term_id = 0;
    double angle = 0.0;
    if (!(ls >> term_id >> angle)) {
      fail("expected '<term_id> <angle> <pauli>'");
    }
    std::string rest;
    std::getline(ls, rest);
    SignedPauli p(out.n_qubits);
    bool parsed = true;
    std::string why;
    try {
      p = parse_pauli(rest, out.n_qubits);
    } catch (const std::exception& e) {
      parsed = false;
      why = e.what();
    }
    if (!parsed) fail(why);
    if (p.phase_exp != 0) fail("rotation operator must carry no phase");
    out.records.push_back({static_cast<int>(term_id), angle, p.pauli});
  }
  if (!have_header) throw std::runtime_error("missing 'qubits N' header line");
  return out;
}

}  // namespace pfg
