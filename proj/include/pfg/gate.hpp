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

#include <cassert>
#include <cmath>
#include <cstdint>

#include "pfg/pauli.hpp"

namespace pfg {

enum class PauliAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Local bit code (x | z<<1) of an axis letter.
constexpr std::uint8_t local_of_axis(PauliAxis a) {
  return a == PauliAxis::X ? kLocalX : (a == PauliAxis::Y ? kLocalY : kLocalZ);
}

inline PauliAxis axis_of_local(std::uint8_t code) {
  assert(code != kLocalI);
  return code == kLocalX ? PauliAxis::X
                         : (code == kLocalY ? PauliAxis::Y : PauliAxis::Z);
}

constexpr char letter_of_axis(PauliAxis a) {
  return a == PauliAxis::X ? 'X' : (a == PauliAxis::Y ? 'Y' : 'Z');
}

enum class GateKind : std::uint8_t {
  TQE,     // two-qubit entangling Clifford, parametrized by an axis per qubit
  H,       // Hadamard
  P,       // phase gate diag(1, i)
  Pdg,     // inverse phase gate
  PauliX,
  PauliY,
  PauliZ,
  Swap,
  RX,      // exp(-i angle/2 X)
  RY,
  RZ,
};

/**
 * One circuit instruction. TQE and Swap use (q0, q1); everything else acts on
 * q0 alone. TQE axes (t0, t1) name the controlled-Pauli structure: the gate
 * applies t1 on q1 conditioned on the t0 eigenvalue of q0 and vice versa,
 * so (Z, X) is the familiar CX with control q0. TQE gates are stored with
 * q0 < q1, which is harmless because the definition is symmetric under
 * exchanging the (qubit, axis) pairs.
 *
 * Rotation gates implement exp(-i angle/2 A) and keep the Hamiltonian-term id
 * they were emitted for (-1 when not applicable).
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0, q1 = 0;
  PauliAxis t0 = PauliAxis::X, t1 = PauliAxis::X;
  double angle = 0.0;
  std::int64_t term_id = -1;

  bool operator==(const Gate&) const = default;

  bool is_rotation() const {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
  }
  bool is_two_qubit() const {
    return kind == GateKind::TQE || kind == GateKind::Swap;
  }
  bool is_clifford() const { return !is_rotation(); }

  static Gate tqe(PauliAxis ta, PauliAxis tb, std::uint32_t qa,
                  std::uint32_t qb) {
    assert(qa != qb);
    Gate g;
    g.kind = GateKind::TQE;
    if (qa < qb) {
      g.q0 = qa, g.q1 = qb, g.t0 = ta, g.t1 = tb;
    } else {
      g.q0 = qb, g.q1 = qa, g.t0 = tb, g.t1 = ta;
    }
    return g;
  }
  /// CX with control c and target t is the (Z, X) entangler.
  static Gate cx(std::uint32_t c, std::uint32_t t) {
    return tqe(PauliAxis::Z, PauliAxis::X, c, t);
  }
  static Gate cz(std::uint32_t a, std::uint32_t b) {
    return tqe(PauliAxis::Z, PauliAxis::Z, a, b);
  }

  static Gate single(GateKind kind, std::uint32_t q) {
    Gate g;
    g.kind = kind;
    g.q0 = q;
    return g;
  }
  static Gate h(std::uint32_t q) { return single(GateKind::H, q); }
  static Gate p(std::uint32_t q) { return single(GateKind::P, q); }
  static Gate pdg(std::uint32_t q) { return single(GateKind::Pdg, q); }
  static Gate pauli(PauliAxis a, std::uint32_t q) {
    return single(a == PauliAxis::X
                      ? GateKind::PauliX
                      : (a == PauliAxis::Y ? GateKind::PauliY : GateKind::PauliZ),
                  q);
  }
  static Gate swap(std::uint32_t a, std::uint32_t b) {
    assert(a != b);
    Gate g;
    g.kind = GateKind::Swap;
    g.q0 = a < b ? a : b;
    g.q1 = a < b ? b : a;
    return g;
  }

  /// Axis rotation with the angle folded into (-pi, pi]; 2*pi shifts only
  /// contribute a global phase.
  static Gate rotation(PauliAxis a, std::uint32_t q, double angle,
                       std::int64_t term_id = -1) {
    Gate g;
    g.kind = a == PauliAxis::X
                 ? GateKind::RX
                 : (a == PauliAxis::Y ? GateKind::RY : GateKind::RZ);
    g.q0 = q;
    double r = std::remainder(angle, 2.0 * M_PI);
    if (r <= -M_PI) r = M_PI;
    g.angle = r;
    g.term_id = term_id;
    return g;
  }

  PauliAxis rotation_axis() const {
    assert(is_rotation());
    return kind == GateKind::RX
               ? PauliAxis::X
               : (kind == GateKind::RY ? PauliAxis::Y : PauliAxis::Z);
  }
};

}  // namespace pfg
