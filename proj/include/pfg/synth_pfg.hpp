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

#include <cstddef>
#include <string>
#include <vector>

#include "pfg/circuit.hpp"
#include "pfg/frame.hpp"
#include "pfg/ham.hpp"

namespace pfg {

// Configuration of the greedy frame-walk synthesizer.
struct SynthConfig {
  double credit = 0.1;      // weight of the parallelization credit (>= 0)
  bool close_cycle = false; // walk back to the origin frame at the end
  bool retrace = false;     // append the reversed sequence as a second step
  double dt = 1.0;          // step length; rotation angle is 2*coeff*dt
  // Axis preference for equal-cost candidates: "zxy" (default) or "xyz".
  std::string tie_break = "zxy";
  std::size_t n_workers = 1;  // threads for candidate cost evaluation
};

// One Hamiltonian term as tracked during the walk.
struct TermState {
  int term_id = -1;
  double coefficient = 0.0;
  PauliString pauli;        // original operator, kept for the manifest
  CoordinateVector coords;  // current frame expansion
  bool active = false;
};

// Per-qubit completion times of the gates placed so far.
struct SchedulerState {
  std::vector<double> last_finish;
  double leading_edge = 0.0;
};

// One emitted rotation: the raw coefficient-signed angle (2*coeff*dt, before
// any frame sign or interval normalization) together with the original
// operator.  The ordered list reproduces the circuit's rotation content.
struct RotationRecord {
  int term_id = -1;
  double angle = 0.0;
  PauliString pauli;
};

struct SynthResult {
  Circuit circuit;
  SignedFrame final_frame;
  Metrics metrics;
  std::vector<RotationRecord> manifest;
};

// Synthesizes one Trotter step of exp(-i dt H).  Active terms are rotated as
// soon as their relative support reaches one; otherwise the cheapest
// support-reducing two-qubit gate is applied, with cost
//   cost(g) = <delta support over active terms> - credit * |pace(g)|.
SynthResult synth(const PauliSumHamiltonian& h, const SynthConfig& cfg = {});

// Candidate reduction gates for all active terms at the minimum support,
// deduplicated and ordered by (q0, q1, axis, axis) under the tie-break
// policy.  Every listed gate lowers at least one such term's support by one.
std::vector<Gate> candidate_gates(const std::vector<TermState>& terms,
                                  std::size_t min_support,
                                  const std::string& tie_break);

// The greedy objective for one candidate (lower is better).
double gate_cost(const Gate& g, const std::vector<TermState>& terms,
                 std::size_t n_active, const SchedulerState& sched,
                 double credit);

// Rotation gate for a support-one term: axis from the local coordinate bits,
// angle 2*coeff*dt signed by the term's conjugated image in `frame`.
Gate rotation_for_term(const TermState& term, const SignedFrame& frame,
                       double dt);

// The reversal step: gates in reverse order with Cliffords inverted and
// rotation angles kept, turning step + retrace into a symmetric step of 2*dt.
Circuit retrace(const Circuit& c);

// Manifest text: `qubits N` header, then `<term_id> <angle> <pauli>` lines in
// emission order.
struct ParsedManifest {
  std::size_t n_qubits = 0;
  std::vector<RotationRecord> records;
};

std::string format_manifest(std::size_t n_qubits,
                            const std::vector<RotationRecord>& manifest);
ParsedManifest parse_manifest(const std::string& text);

}  // namespace pfg
