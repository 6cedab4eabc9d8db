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

/**
 * Reference Trotterization pipeline: commuting-set grouping, per-term CX
 * staircases, and a bounded adjacent-gate cancellation pass. This is the
 * comparison point for the frame-walk synthesizer, deliberately simple:
 * every term compiles independently and optimization is local.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "pfg/circuit.hpp"
#include "pfg/ham.hpp"
#include "pfg/synth_pfg.hpp"

namespace pfg {

/** Budget for the cancellation sweep. */
struct CancelConfig {
  double time_limit = 60.0;  ///< wall-clock seconds before sweeps stop
  std::size_t passes = static_cast<std::size_t>(-1);  ///< max full sweeps
};

/**
 * Greedy first-fit partition of the term list into mutually commuting groups.
 * Terms are scanned in their stored (canonical) order; each joins the first
 * group it commutes with entirely, else opens a new one. Returns term indices.
 */
std::vector<std::vector<std::size_t>> commuting_groups(
    const PauliSumHamiltonian& h);

/**
 * CX-staircase circuit for exp(-i angle/2 * term): per-qubit basis changes
 * rotate X and Y letters onto Z, a CX chain folds the parity onto the
 * highest-index support qubit, an RZ(angle) turns it, and the mirror image
 * uncomputes. The rotation gate carries term_id for manifest cross-reference.
 * Throws std::invalid_argument on an identity term.
 */
Circuit staircase(const PauliString& term, double angle,
                  std::int64_t term_id = -1);

/**
 * Remove dependency-adjacent inverse pairs (equal two-qubit Cliffords, H·H,
 * P·P†, equal Pauli gates) and fuse dependency-adjacent same-axis rotations
 * on the same qubit (angles summed and renormalized; negligible angles are
 * dropped). Sweeps repeat until a fixpoint, cfg.passes sweeps, or the time
 * limit, whichever comes first. The result is unitarily equivalent to the
 * input up to global phase and never has more gates.
 */
Circuit cancel_adjacent(const Circuit& c, const CancelConfig& cfg = {});

struct BaselineResult {
  Circuit circuit;
  Metrics metrics;
  /// Rotations in emission order (groups in first-fit order, canonical term
  /// order within each group), with raw uncancelled angles.
  std::vector<RotationRecord> manifest;
};

/**
 * Full pipeline: group, staircase every term with angle 2*coefficient*dt in
 * group order, then run the cancellation pass. The circuit's Clifford content
 * always composes to the identity (each staircase undoes itself), so the
 * result needs no frame bookkeeping.
 */
BaselineResult synth_baseline(const PauliSumHamiltonian& h, double dt,
                              const CancelConfig& cfg = {});

}  // namespace pfg
