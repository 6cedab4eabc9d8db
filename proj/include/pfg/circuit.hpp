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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfg/gate.hpp"

namespace pfg {

/// A gate list over a fixed register. Gates act in list order (index 0 first).
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_qubits(n) {}

  void append(const Gate& g) { gates.push_back(g); }
  void append(const Circuit& c) {
    gates.insert(gates.end(), c.gates.begin(), c.gates.end());
  }
};

/**
 * Depth accounting modes. kAllGates charges one time step to every gate;
 * kTwoQubitOnly charges only the entangling gates (TQE, Swap) so the makespan
 * counts layers of two-qubit operations.
 */
enum class CostModel { kAllGates, kTwoQubitOnly };

std::int64_t gate_duration(const Gate& g, CostModel model);

/// As-soon-as-possible schedule: each gate starts when all its qubits are free.
struct Schedule {
  std::vector<std::int64_t> start;        // per gate, in circuit order
  std::vector<std::int64_t> qubit_ready;  // per qubit, after the last gate
  std::int64_t makespan = 0;
};

Schedule asap_schedule(const Circuit& c, CostModel model);

struct Metrics {
  std::size_t gate_count = 0;
  std::size_t tqe_count = 0;       // two-qubit Clifford gates
  std::size_t rotation_count = 0;
  std::int64_t depth_all = 0;      // ASAP depth with unit durations
  std::int64_t depth_tqe = 0;      // ASAP depth counting two-qubit gates only
  double tqe_per_term = 0.0;       // tqe_count / n_terms (0 when n_terms == 0)
};

Metrics compute_metrics(const Circuit& c, std::size_t n_terms);

/**
 * Rewrite every TQE gate as a CX conjugated by single-qubit basis changes;
 * all other gates pass through. The result is dense-matrix equal to the
 * input (not merely equal up to phase).
 */
Circuit expand_tqe(const Circuit& c);

/// Adjoint of a single Clifford gate (rotations map to the negated angle).
Gate dagger(const Gate& g);

/// Two-letter TQE mnemonic: 'A'/'B'/'C' for X/Y/Z on the first qubit followed
/// by the plain letter for the second, so the (Z, X) entangler prints as "CX".
std::string tqe_name(PauliAxis t0, PauliAxis t1);

/// One-line text form, e.g. "CX 0,1", "H 2", "RZ 3 0.78539816339744828".
std::string gate_to_text(const Gate& g);

/**
 * Serialize as a "qubits N" header followed by one gate per line. With
 * expand = true, TQE gates are lowered through expand_tqe first so the output
 * uses only CX + single-qubit gates.
 */
std::string export_text(const Circuit& c, bool expand = false);

/**
 * Parse the export_text format. Blank lines and '#' comments are skipped; the
 * "qubits N" header is optional (without it the register size is inferred
 * from the highest qubit index). Malformed input throws std::runtime_error
 * with the offending line number.
 */
Circuit import_text(const std::string& text);

}  // namespace pfg
