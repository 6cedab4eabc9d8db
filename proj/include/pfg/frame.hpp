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

#include <string>
#include <vector>

#include "pfg/circuit.hpp"
#include "pfg/gate.hpp"
#include "pfg/pauli.hpp"

namespace pfg {

/**
 * Coordinates of a Pauli operator relative to a frame: p is congruent (up to
 * phase) to the product of x_row(q)^{a_q} * z_row(q)^{b_q} over the register.
 * In the origin frame a/b coincide with the operator's own X/Z masks, and
 * or_count(a, b) is the support size of p as seen through the frame.
 */
struct CoordinateVector {
  BitVec a, b;

  explicit CoordinateVector(std::size_t n_qubits) : a(n_qubits), b(n_qubits) {}
  CoordinateVector() = default;

  std::size_t support() const { return BitVec::or_count(a, b); }
  /// Local coordinate code at q, same encoding as Pauli letters (x | z<<1).
  std::uint8_t local(std::size_t q) const {
    return static_cast<std::uint8_t>(a.get(q) | (b.get(q) << 1));
  }
  bool operator==(const CoordinateVector&) const = default;
};

/**
 * The images W Z_q W^dagger and W X_q W^dagger of the computational Paulis
 * under the Clifford W accumulated so far, signs included. Appending a gate g
 * (W -> g W) conjugates every stored row by g, a local table lookup.
 *
 * This is the sign-carrying companion of SignedFrame: the frame's rows are
 * kept unsigned, and their signs are recovered on demand by conjugating the
 * row body forward through this tableau.
 */
class ForwardTableau {
 public:
  ForwardTableau() = default;
  explicit ForwardTableau(std::size_t n_qubits);

  std::size_t num_qubits() const { return fz_.size(); }

  const SignedPauli& z_image(std::size_t q) const { return fz_[q]; }
  const SignedPauli& x_image(std::size_t q) const { return fx_[q]; }
  SignedPauli& mutable_z_image(std::size_t q) { return fz_[q]; }
  SignedPauli& mutable_x_image(std::size_t q) { return fx_[q]; }

  /// Append a gate to the underlying circuit. Rotations are ignored.
  void apply(const Gate& g);

  /// W p W^dagger for an arbitrary signed Pauli, with exact phase tracking.
  SignedPauli conjugate(const SignedPauli& p) const;

  /// True when every row is exactly +Z_q / +X_q.
  bool is_identity() const;

  bool operator==(const ForwardTableau&) const = default;

 private:
  void conj_row(SignedPauli& row, const Gate& g) const;

  std::vector<SignedPauli> fz_, fx_;
};

/**
 * A Pauli frame: the backward images s_q = W^dagger Z_q W (z rows) and
 * s~_q = W^dagger X_q W (x rows) of the computational Paulis, stored as
 * unsigned bodies, plus the forward tableau used for sign queries.
 *
 * Appending a gate g rewrites each row as a product of the old rows
 * (g^dagger Z_q g is a +-product of computational Paulis, and substitution
 * turns that into an XOR of old row bodies). Rotations leave the frame
 * untouched: the frame tracks only the Clifford part of a circuit.
 */
class SignedFrame {
 public:
  SignedFrame() = default;
  /// The origin frame: z rows Z_q, x rows X_q, all signs positive.
  explicit SignedFrame(std::size_t n_qubits);

  /**
   * Build a frame from raw row bodies, taking all signs positive. No
   * validity check is performed here; clifford_circuit_of_frame rejects row
   * sets that are not a symplectic basis.
   */
  static SignedFrame from_rows(std::vector<PauliString> z_rows,
                               std::vector<PauliString> x_rows);

  std::size_t num_qubits() const { return s_.size(); }

  /// Body of W^dagger Z_q W.
  const PauliString& z_row(std::size_t q) const { return s_[q]; }
  /// Body of W^dagger X_q W.
  const PauliString& x_row(std::size_t q) const { return st_[q]; }

  /// True when W^dagger Z_q W = -z_row(q) (resp. X/x_row).
  bool z_row_negative(std::size_t q) const;
  bool x_row_negative(std::size_t q) const;

  const ForwardTableau& forward() const { return fwd_; }

  /// Append a gate to the underlying circuit. Rotations are ignored.
  void apply(const Gate& g);

  /// Coordinates of p relative to this frame: a_q = lambda(z_row(q), p),
  /// b_q = lambda(x_row(q), p).
  CoordinateVector expand(const PauliString& p) const;

  /// XOR of the row bodies selected by a coordinate vector; inverse of
  /// expand up to phase.
  PauliString reconstruct(const CoordinateVector& c) const;

  /**
   * The Pauli body XOR_q (sign_z(q) * x_row(q)) ^ (sign_x(q) * z_row(q)):
   * appending this operator as gates clears every row sign. At the origin
   * body it is exactly the product of the per-qubit sign-fix Paulis.
   */
  PauliString residual() const;

  bool is_origin_body() const;
  /// Origin body and every row sign positive.
  bool is_origin() const;

  /**
   * Structural sanity: rows pairwise obey the symplectic orthonormality
   * relations, and the forward tableau is the sign-carrying transpose of the
   * rows. Meant for tests and debug assertions.
   */
  bool invariants_ok() const;

  /// Compact hashable key of the row bodies (signs excluded).
  std::string body_key() const;

  bool operator==(const SignedFrame&) const = default;

 private:
  std::vector<PauliString> s_, st_;  // z rows, x rows
  ForwardTableau fwd_;
};

/// Support of p as seen through the frame: or_count of its coordinates.
std::size_t relative_support(const SignedFrame& f, const PauliString& p);

/**
 * Incremental coordinate maintenance: updates c to the coordinates of the
 * same operator after appending g to the frame's circuit. Equivalent to (but
 * much cheaper than) re-expanding against the updated frame: the local
 * coordinate codes transform by the gate's own conjugation bit map.
 */
void coord_update(CoordinateVector& c, const Gate& g);

/**
 * A Clifford gate sequence that maps the given frame to the origin frame,
 * signs included. Equivalently, if the frame was produced by a circuit W,
 * the dense product of the returned gates times W is a scalar. Throws
 * std::invalid_argument when the rows are not a symplectic basis.
 */
Circuit clifford_circuit_of_frame(const SignedFrame& f);

}  // namespace pfg
