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

#include "pfg/bitvec.hpp"

namespace pfg {

/**
 * Local Pauli letters encoded as x | (z << 1):
 *   0 = I, 1 = X, 2 = Z, 3 = Y (Y carries both bits).
 */
enum : std::uint8_t { kLocalI = 0, kLocalX = 1, kLocalZ = 2, kLocalY = 3 };

/**
 * A tensor-product Pauli operator modulo phase: the pair of X/Z bit masks.
 *
 * The represented operator follows the Hermitian convention
 *   P(x, z) = prod_q i^{x_q z_q} X_q^{x_q} Z_q^{z_q},
 * i.e. a qubit with both bits set carries a Y. The all-zero string is the
 * identity, which doubles as the zero element of the GF(2) Pauli space:
 * operator product = componentwise XOR.
 */
struct PauliString {
  BitVec x, z;

  PauliString() = default;
  explicit PauliString(std::size_t n_qubits) : x(n_qubits), z(n_qubits) {}

  std::size_t num_qubits() const { return x.size(); }
  bool is_identity() const { return x.none() && z.none(); }

  /// Number of qubits acted on non-trivially.
  std::size_t weight() const { return BitVec::or_count(x, z); }

  std::uint8_t local(std::size_t q) const {
    return static_cast<std::uint8_t>(x.get(q) | (z.get(q) << 1));
  }
  void set_local(std::size_t q, std::uint8_t letter) {
    x.set(q, letter & 1);
    z.set(q, (letter >> 1) & 1);
  }

  PauliString& operator^=(const PauliString& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
  friend PauliString operator^(PauliString a, const PauliString& b) {
    a ^= b;
    return a;
  }

  bool operator==(const PauliString& o) const = default;

  /// Single-letter factory: the Pauli `letter` on qubit q of an n-qubit register.
  static PauliString single(std::size_t n_qubits, std::size_t q,
                            std::uint8_t letter);
};

/// Hash functor so PauliString can key unordered containers.
struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ p.num_qubits();
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    };
    for (auto w : p.x.words()) mix(w);
    for (auto w : p.z.words()) mix(w);
    return static_cast<std::size_t>(h);
  }
};

/**
 * A Pauli string together with a global power of i relative to the Hermitian
 * convention: the represented operator is i^{phase_exp} P(x, z).
 * Hermitian values have phase_exp in {0, 2}; products of Hermitian Paulis can
 * pass through anti-Hermitian intermediates (phase_exp 1 or 3), which is why
 * a full mod-4 exponent is kept rather than a sign bit.
 */
struct SignedPauli {
  PauliString pauli;
  std::uint8_t phase_exp = 0;  // power of i, mod 4

  SignedPauli() = default;
  explicit SignedPauli(std::size_t n_qubits) : pauli(n_qubits) {}
  SignedPauli(PauliString p, std::uint8_t pe) : pauli(std::move(p)), phase_exp(pe & 3) {}

  std::size_t num_qubits() const { return pauli.num_qubits(); }
  bool is_hermitian() const { return (phase_exp & 1) == 0; }

  /// Sign bit of a Hermitian value: 1 iff the operator is -P(x, z).
  bool sign_bit() const {
    assert(is_hermitian());
    return phase_exp == 2;
  }

  bool operator==(const SignedPauli& o) const = default;
};

/**
 * Symplectic form lambda(p, q) = (x_p . z_q + z_p . x_q) mod 2.
 * Zero iff the operators commute. Throws std::invalid_argument on
 * mismatched register sizes.
 */
int symplectic_form(const PauliString& p, const PauliString& q);

/**
 * Group product a * b with exact phase bookkeeping in the Hermitian
 * convention. The GF(2) part is componentwise XOR; the phase exponent
 * accumulates the i-powers generated by per-qubit letter products.
 */
SignedPauli multiply(const SignedPauli& a, const SignedPauli& b);

enum class PauliFormat { kDense, kSparse };

/**
 * Parse either a dense string ("IXYZ", qubit 0 leftmost) or a sparse list
 * ("X0 Y2 Z5"), with an optional leading sign ("+", "-", "i", "+i", "-i").
 * n_qubits = 0 lets the text determine the register size (dense: the string
 * length; sparse: highest index + 1). Errors (unknown letters, duplicate or
 * out-of-range indices, length mismatch) throw std::invalid_argument.
 */
SignedPauli parse_pauli(const std::string& text, std::size_t n_qubits = 0);

/// Inverse of parse_pauli; round-trip stable for either format.
std::string format_pauli(const SignedPauli& p,
                         PauliFormat fmt = PauliFormat::kDense);
std::string format_pauli(const PauliString& p,
                         PauliFormat fmt = PauliFormat::kDense);

/// Dense-text ordering ('I' < 'X' < 'Y' < 'Z' per qubit), used for canonical sorts.
bool dense_less(const PauliString& a, const PauliString& b);

}  // namespace pfg
