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

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "pfg/pauli.hpp"

namespace pfg {

// A real-weighted sum of non-identity Pauli strings on a fixed register.
// Kept canonical: no identity term, no duplicate strings, no coefficient
// below the drop threshold used at assembly, terms sorted by dense_less.
struct HamTerm {
  double coefficient = 0.0;
  PauliString pauli;
};

struct PauliSumHamiltonian {
  std::size_t n_qubits = 0;
  std::vector<HamTerm> terms;
};

inline constexpr double kCoefficientDropThreshold = 1e-8;
inline constexpr double kHermiticityTolerance = 1e-12;

// Complex-weighted accumulator used while multiplying operator fragments.
// Assembly into a PauliSumHamiltonian enforces the reality invariant.
class PauliAccum {
 public:
  explicit PauliAccum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t num_qubits() const { return n_qubits_; }

  // Adds coeff * body.  The i^phase_exp of a SignedPauli is folded into the
  // coefficient so only unsigned bodies are stored.
  void add(const PauliString& body, std::complex<double> coeff);
  void add(const SignedPauli& p, std::complex<double> coeff);
  void add(const PauliAccum& other, std::complex<double> scale = 1.0);

  // Operator product: (sum_i a_i P_i) * (sum_j b_j Q_j).
  friend PauliAccum product(const PauliAccum& lhs, const PauliAccum& rhs);

  const std::unordered_map<PauliString, std::complex<double>, PauliStringHash>&
  entries() const {
    return map_;
  }

  // Canonicalizes into a real Pauli sum: drops the identity component and any
  // coefficient with |Re c| < drop_threshold, sorts terms, and rejects
  // imaginary residue at or above kHermiticityTolerance.
  PauliSumHamiltonian finish(double drop_threshold = kCoefficientDropThreshold) const;

 private:
  std::size_t n_qubits_ = 0;
  std::unordered_map<PauliString, std::complex<double>, PauliStringHash> map_;
};

PauliAccum product(const PauliAccum& lhs, const PauliAccum& rhs);

// ---------------------------------------------------------------------------
// Fermions: second-quantized monomials and their qubit images.

enum class FermionMapping : std::uint8_t { kJordanWigner, kBravyiKitaev };

struct LadderFactor {
  std::size_t mode = 0;
  bool dagger = false;
};

// coefficient * a^(dg?)_{m1} a^(dg?)_{m2} ... in the written order.
struct LadderTerm {
  double coefficient = 1.0;
  std::vector<LadderFactor> factors;
};

// Image of the annihilation operator a_mode as a two-string complex fragment.
PauliAccum annihilation_image(std::size_t mode, std::size_t n_modes,
                              FermionMapping mapping);

// Image of a whole monomial (product of the factor images).
PauliAccum map_ladder_term(const LadderTerm& term, FermionMapping mapping,
                           std::size_t n_modes);

PauliAccum jordan_wigner(const LadderTerm& term, std::size_t n_modes);
PauliAccum bravyi_kitaev(const LadderTerm& term, std::size_t n_modes);

// Index sets of the Bravyi-Kitaev tree, exposed for inspection/testing.
std::vector<std::size_t> bk_update_set(std::size_t mode, std::size_t n_modes);
std::vector<std::size_t> bk_parity_set(std::size_t mode);
std::vector<std::size_t> bk_flip_set(std::size_t mode);

// Hubbard model on a chain of n_sites >= 2 (periodic adds the wrap-around
// bond; duplicate bonds on two sites are not emitted twice).  Spin orbitals
// are interleaved: mode 2*site is spin-up, 2*site+1 is spin-down.
//   H = -t sum_{<ij>,s} (a+_{is} a_{js} + a+_{js} a_{is})
//       + u sum_i n_{i,up} n_{i,down}
PauliSumHamiltonian fermi_hubbard(std::size_t n_sites, double t, double u,
                                  FermionMapping mapping, bool periodic);

// ---------------------------------------------------------------------------
// Bosons: truncated modes on binary-encoded qubit blocks.

enum class BosonCode : std::uint8_t { kStandardBinary, kGray };

struct BosonEncoding {
  BosonCode kind = BosonCode::kStandardBinary;
  std::size_t levels = 4;  // must be a power of two >= 2
};

// Bit pattern assigned to an occupation level under the encoding.
std::size_t encoded_level(const BosonEncoding& enc, std::size_t level);
std::size_t qubits_per_mode(const BosonEncoding& enc);

// Truncated single-mode matrices (levels x levels): a, q=(a+a+)/sqrt2,
// p=i(a+-a)/sqrt2.
Eigen::MatrixXcd boson_annihilation(std::size_t levels);
Eigen::MatrixXcd boson_position(std::size_t levels);
Eigen::MatrixXcd boson_momentum(std::size_t levels);

// Exact Pauli expansion of a Hermitian levels x levels operator on
// log2(levels) qubits: coefficient of P is tr(P * op~)/levels where op~ is op
// with rows/columns permuted by the encoding.  The identity component is kept
// in the returned fragment (assembly drops it).  Throws on non-power-of-two
// dimension or non-Hermitian input beyond kHermiticityTolerance.
PauliAccum bosonic_matrix_to_paulis(const Eigen::MatrixXcd& op,
                                    const BosonEncoding& enc);

// Same expansion without the Hermiticity gate, placed on the qubit block of
// `mode` inside a register of n_modes blocks (block bits are most-significant
// first).  Used for non-Hermitian fragments like b and b+.
PauliAccum encode_mode_operator(const Eigen::MatrixXcd& op,
                                const BosonEncoding& enc, std::size_t mode,
                                std::size_t n_modes);

// Bose-Hubbard chain with wrap-around bond:
//   H = -t sum_{<ij>} (b+_i b_j + b+_j b_i) + u sum_i n_i (n_i - 1)
PauliSumHamiltonian bose_hubbard(std::size_t n_sites, double t, double u,
                                 const BosonEncoding& enc);

// ---------------------------------------------------------------------------
// Vibronic: two harmonic mode bases related by a Duschinsky rotation.

struct VibronicParameters {
  Eigen::MatrixXd s;        // orthogonal mode-mixing matrix
  Eigen::VectorXd omega_a;  // initial-surface frequencies
  Eigen::VectorXd omega_b;  // final-surface frequencies
  Eigen::VectorXd delta;    // displacement in the B coordinates
};

// Deterministic parameter draw: frequencies uniform in [0.5, 1.5],
// displacements uniform in [-0.1, 0.1], S from a QR-orthonormalized Gaussian
// matrix with the sign of each R diagonal fixed.
VibronicParameters sample_vibronic_parameters(std::size_t n_modes,
                                              std::uint64_t seed);

// H = 1/2 sum_j omega_Bj (q_Bj^2 + p_Bj^2) expressed in the A-mode qubit
// register, with q_B = Wb S Wa^-1 q_A + delta and p_B = Wb^-1 S Wa p_A for
// W* = diag(sqrt(omega_*)).  The constant term is dropped with the identity.
PauliSumHamiltonian vibronic_from_parameters(const VibronicParameters& par,
                                             const BosonEncoding& enc);
PauliSumHamiltonian vibronic(std::size_t n_modes, const BosonEncoding& enc,
                             std::uint64_t seed);

// ---------------------------------------------------------------------------
// Canonical text format: `qubits N` header, then one `<coefficient> <pauli>`
// line per term, '#' comments allowed.  Parsing merges duplicates, drops
// identity terms and coefficients below the threshold, and reports malformed
// input with its line number.

PauliSumHamiltonian parse_hamiltonian_text(const std::string& text,
                                           double drop_threshold = kCoefficientDropThreshold);
std::string format_hamiltonian_text(const PauliSumHamiltonian& h);

PauliSumHamiltonian load_hamiltonian(const std::string& path);
void save_hamiltonian(const PauliSumHamiltonian& h, const std::string& path);

}  // namespace pfg
