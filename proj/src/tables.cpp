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

#include "pfg/tables.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

namespace pfg {

namespace {

// Minimal exact 2x2 / 4x4 complex matrix arithmetic, used once at startup to
// derive all conjugation tables from first principles.

using cplx = std::complex<double>;
using M2 = std::array<cplx, 4>;    // row-major 2x2
using M4 = std::array<cplx, 16>;   // row-major 4x4

M2 mul2(const M2& a, const M2& b) {
  M2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[2 * i + j] += a[2 * i + k] * b[2 * k + j];
  return c;
}

M2 dag2(const M2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

M4 mul4(const M4& a, const M4& b) {
  M4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[4 * i + j] += a[4 * i + k] * b[4 * k + j];
  return c;
}

M4 kron22(const M2& a, const M2& b) {
  M4 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          c[4 * (2 * i + k) + (2 * j + l)] = a[2 * i + j] * b[2 * k + l];
  return c;
}

M4 add4(const M4& a, const M4& b) {
  M4 c;
  for (int i = 0; i < 16; ++i) c[i] = a[i] + b[i];
  return c;
}

const cplx kI{0.0, 1.0};

M2 pauli2(std::uint8_t code) {
  switch (code) {
    case kLocalI:
      return {1, 0, 0, 1};
    case kLocalX:
      return {0, 1, 1, 0};
    case kLocalZ:
      return {1, 0, 0, -1};
    default:
      return {0, -kI, kI, 0};  // Y
  }
}

template <typename M>
bool match_scaled(const M& m, const M& target, double scale) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (std::abs(m[i] - scale * target[i]) > 1e-12) return false;
  return true;
}

// Identify m as +/- one Pauli letter; aborts if m is not of that form.
ConjEntry1 identify1(const M2& m) {
  for (std::uint8_t c = 0; c < 4; ++c) {
    const M2 t = pauli2(c);
    if (match_scaled(m, t, 1.0)) return {c, false};
    if (match_scaled(m, t, -1.0)) return {c, true};
  }
  std::abort();  // conjugation of a Pauli by a Clifford must stay +/- Pauli
}

ConjEntry2 identify2(const M4& m) {
  for (std::uint8_t ci = 0; ci < 4; ++ci)
    for (std::uint8_t cj = 0; cj < 4; ++cj) {
      const M4 t = kron22(pauli2(ci), pauli2(cj));
      if (match_scaled(m, t, 1.0)) return {ci, cj, false};
      if (match_scaled(m, t, -1.0)) return {ci, cj, true};
    }
  std::abort();
}

/// TQE(u, v) as a projector sum: (I+u)/2 (x) I + (I-u)/2 (x) v.
M4 tqe_matrix(PauliAxis t0, PauliAxis t1) {
  const M2 u = pauli2(local_of_axis(t0));
  const M2 v = pauli2(local_of_axis(t1));
  const M2 id = pauli2(kLocalI);
  M2 up{}, um{};
  for (int i = 0; i < 4; ++i) {
    up[i] = 0.5 * (id[i] + u[i]);
    um[i] = 0.5 * (id[i] - u[i]);
  }
  return add4(kron22(up, id), kron22(um, v));
}

LocalTables build() {
  LocalTables t{};

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const M2 gates[6] = {
      {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2},  // H
      {1, 0, 0, kI},                                  // P
      {1, 0, 0, -kI},                                 // Pdg
      pauli2(kLocalX),
      pauli2(kLocalY),
      pauli2(kLocalZ),
  };
  for (int g = 0; g < 6; ++g) {
    const M2 gd = dag2(gates[g]);
    for (std::uint8_t c = 0; c < 4; ++c)
      t.conj1[g][c] = identify1(mul2(gates[g], mul2(pauli2(c), gd)));
  }

  const PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (PauliAxis t0 : axes)
    for (PauliAxis t1 : axes) {
      const M4 u = tqe_matrix(t0, t1);  // Hermitian involution: u == u^dagger
      auto& row = t.tqe[tqe_type_index(t0, t1)];
      for (std::uint8_t ci = 0; ci < 4; ++ci)
        for (std::uint8_t cj = 0; cj < 4; ++cj) {
          const M4 m = mul4(u, mul4(kron22(pauli2(ci), pauli2(cj)), u));
          row[local_pair_index(ci, cj)] = identify2(m);
        }
    }

  // Reduction table: brute-force which TQE types clear exactly one side of a
  // nonzero/nonzero local configuration. Each row must come out with exactly
  // four entries; anything else means the action table is wrong.
  for (std::uint8_t ci = 1; ci <= 3; ++ci)
    for (std::uint8_t cj = 1; cj <= 3; ++cj) {
      std::vector<std::pair<PauliAxis, PauliAxis>> hits;
      for (PauliAxis t0 : axes)
        for (PauliAxis t1 : axes) {
          const ConjEntry2& e =
              t.tqe[tqe_type_index(t0, t1)][local_pair_index(ci, cj)];
          if ((e.code_i == 0) != (e.code_j == 0)) hits.emplace_back(t0, t1);
        }
      if (hits.size() != 4) std::abort();
      t.reducers[(ci - 1) + 3 * (cj - 1)] = {hits[0], hits[1], hits[2],
                                             hits[3]};
    }

  return t;
}

}  // namespace

const LocalTables& LocalTables::get() {
  static const LocalTables t = build();
  return t;
}

const ConjEntry2 (&tqe_action_table())[9][16] { return LocalTables::get().tqe; }

}  // namespace pfg
