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

#include <array>
#include <cstdint>
#include <utility>

#include "pfg/gate.hpp"

namespace pfg {

/// Image of one local Pauli letter under single-qubit conjugation.
struct ConjEntry1 {
  std::uint8_t code;  // new local letter
  bool flip;          // true when the image carries a minus sign
};

/// Image of a two-local-letter configuration under a TQE conjugation.
struct ConjEntry2 {
  std::uint8_t code_i, code_j;
  bool flip;
};

/// Row index into the single-qubit conjugation table.
enum class Conj1Gate : std::uint8_t { H = 0, P, Pdg, X, Y, Z };

constexpr std::size_t tqe_type_index(PauliAxis t0, PauliAxis t1) {
  return 3 * static_cast<std::size_t>(t0) + static_cast<std::size_t>(t1);
}

/// Index into a 16-entry TQE table for a pair of local letters.
constexpr std::size_t local_pair_index(std::uint8_t code_i,
                                       std::uint8_t code_j) {
  return (static_cast<std::size_t>(code_i) << 2) | code_j;
}

/**
 * Conjugation action tables for every single-qubit Clifford generator and the
 * nine TQE gates, precomputed once from exact 2x2/4x4 dense matrices. Because
 * every TQE (and H, Swap, Pauli) is an involution, the same bit maps describe
 * both conjugation (used by the forward tableau, with signs) and the backward
 * row/coordinate substitutions (bits only); P and P-dagger share bits and
 * differ only in signs.
 */
struct LocalTables {
  ConjEntry1 conj1[6][4];
  ConjEntry2 tqe[9][16];

  /**
   * For each pair of nonzero local coordinate configurations
   * (code_i, code_j in 1..3), the exactly-four TQE types whose action makes
   * one of the two local supports vanish. Indexed (code_i - 1) + 3*(code_j - 1),
   * entries sorted by (t0, t1).
   */
  std::array<std::array<std::pair<PauliAxis, PauliAxis>, 4>, 9> reducers;

  static const LocalTables& get();
};

/// The 9 x 16 TQE action table (types indexed by tqe_type_index).
const ConjEntry2 (&tqe_action_table())[9][16];

}  // namespace pfg
