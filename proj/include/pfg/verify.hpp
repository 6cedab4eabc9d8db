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
 * Ground-truth oracles: dense-matrix circuit semantics, a stabilizer-tableau
 * cross-check, and Trotter-error measurement. Everything here is exact up to
 * floating point and deliberately independent of the synthesizers, so it can
 * certify their output.
 *
 * Conventions: qubit q maps to row-index bit (n-1-q), i.e. qubit 0 is the
 * most significant bit; a circuit's matrix applies its first gate first
 * (U = g_last ... g_first); Pauli strings are the Hermitian i^{x.z} X^x Z^z.
 */

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "pfg/circuit.hpp"
#include "pfg/frame.hpp"
#include "pfg/ham.hpp"
#include "pfg/pauli.hpp"
#include "pfg/synth_pfg.hpp"

namespace pfg {

/// Hard cap on dense construction; 2^12 matrices are the practical limit.
inline constexpr std::size_t kDenseQubitCap = 12;
/// Equivalence checks pay for three dense products, so they stop earlier.
inline constexpr std::size_t kPathCheckQubitCap = 10;
/// The tableau cross-check conjugates 2N basis Paulis densely.
inline constexpr std::size_t kTableauCheckQubitCap = 6;

/** Dense matrix of a Hermitian Pauli string. Throws above kDenseQubitCap. */
Eigen::MatrixXcd dense_of_pauli(const PauliString& p);

/** Dense matrix including the tracked power of i. */
Eigen::MatrixXcd dense_of_signed_pauli(const SignedPauli& p);

/** Exact unitary of a circuit, first gate applied first. */
Eigen::MatrixXcd dense_of_circuit(const Circuit& c);

/**
 * Ordered product of rotation exponentials exp(-i angle/2 * pauli); the
 * first record acts first, exactly like gates in a circuit.
 */
Eigen::MatrixXcd dense_of_rotation_product(
    std::size_t n_qubits, const std::vector<RotationRecord>& rotations);

/** Dense Hermitian matrix of a coefficient-weighted Pauli sum. */
Eigen::MatrixXcd dense_of_hamiltonian(const PauliSumHamiltonian& h);

/** exp(-i dt H) by exact diagonalization. */
Eigen::MatrixXcd exact_evolution(const PauliSumHamiltonian& h, double dt);

/** Largest singular value. */
double spectral_norm(const Eigen::MatrixXcd& a);

/** Frobenius distance of U'U from the identity; 0 for exact unitaries. */
double unitarity_defect(const Eigen::MatrixXcd& u);

/**
 * Difference after quotienting out each side's global phase: both matrices
 * are normalized so the first significant entry of `a` (row-major scan,
 * threshold relative to max modulus) becomes positive real in each.
 */
Eigen::MatrixXcd phase_aligned_difference(const Eigen::MatrixXcd& a,
                                          const Eigen::MatrixXcd& b);

/** True when the phase-aligned Frobenius distance is within tol. */
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol = 1e-9);

struct PathCheck {
  bool pass = false;
  double defect = 0.0;     ///< max entry modulus of the aligned difference
  double frobenius = 0.0;  ///< Frobenius norm of the aligned difference
};

/**
 * Certify the structural identity of a synthesized step: the circuit times
 * the inverse ordered rotation product must equal (up to global phase) the
 * Clifford encoded by the final frame, reconstructed through its closure
 * circuit. Passes when the aligned Frobenius distance is within tol.
 * Throws above kPathCheckQubitCap qubits.
 */
PathCheck check_path_equivalence(const Circuit& c,
                                 const std::vector<RotationRecord>& rotations,
                                 const SignedFrame& final_frame,
                                 double tol = 1e-9);

/**
 * Replay the circuit's Clifford gates on a fresh frame and compare the
 * forward conjugation of every Z_i and X_i — including signs — against dense
 * conjugation. Rotation gates are ignored. Throws above
 * kTableauCheckQubitCap qubits.
 */
bool tableau_cross_check(const Circuit& c, double tol = 1e-9);

struct TrotterFit {
  std::vector<double> errors;  ///< spectral-norm error per dt, same order
  double slope = 0.0;          ///< least-squares slope of log err vs log dt
};

/**
 * Measure || exp(-i dt H) - U_step(dt) ||_2 for each dt, with the step
 * circuit rebuilt by the callback per dt. Global phase is removed by trace
 * alignment (the Frobenius-optimal rotation) before taking the norm. The
 * fitted slope estimates the local order of the step. Throws above
 * kPathCheckQubitCap qubits or on an empty dt list.
 */
TrotterFit trotter_error(const PauliSumHamiltonian& h,
                         const std::function<Circuit(double)>& step_builder,
                         const std::vector<double>& dt_list);

}  // namespace pfg
