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

#include "pfg/frame.hpp"

#include <cassert>
#include <cstring>
#include <stdexcept>
#include <utility>

#include "pfg/tables.hpp"

namespace pfg {

namespace {

Conj1Gate conj1_row_of(GateKind k) {
  switch (k) {
    case GateKind::H:
      return Conj1Gate::H;
    case GateKind::P:
      return Conj1Gate::P;
    case GateKind::Pdg:
      return Conj1Gate::Pdg;
    case GateKind::PauliX:
      return Conj1Gate::X;
    case GateKind::PauliY:
      return Conj1Gate::Y;
    default:
      assert(k == GateKind::PauliZ);
      return Conj1Gate::Z;
  }
}

/// Conjugation by the adjoint gate, as used for backward row substitution.
/// Everything in the Clifford generator set is an involution except P/Pdg,
/// which are each other's adjoints.
Conj1Gate conj1_row_of_adjoint(GateKind k) {
  if (k == GateKind::P) return Conj1Gate::Pdg;
  if (k == GateKind::Pdg) return Conj1Gate::P;
  return conj1_row_of(k);
}

}  // namespace

// ---------------------------------------------------------------------------
// ForwardTableau

ForwardTableau::ForwardTableau(std::size_t n_qubits) {
  fz_.reserve(n_qubits);
  fx_.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    fz_.emplace_back(PauliString::single(n_qubits, q, kLocalZ), 0);
    fx_.emplace_back(PauliString::single(n_qubits, q, kLocalX), 0);
  }
}

void ForwardTableau::conj_row(SignedPauli& row, const Gate& g) const {
  const LocalTables& t = LocalTables::get();
  switch (g.kind) {
    case GateKind::TQE: {
      const std::uint8_t ci = row.pauli.local(g.q0);
      const std::uint8_t cj = row.pauli.local(g.q1);
      const ConjEntry2& e =
          t.tqe[tqe_type_index(g.t0, g.t1)][local_pair_index(ci, cj)];
      row.pauli.set_local(g.q0, e.code_i);
      row.pauli.set_local(g.q1, e.code_j);
      if (e.flip) row.phase_exp = (row.phase_exp + 2) & 3;
      break;
    }
    case GateKind::Swap: {
      const std::uint8_t ci = row.pauli.local(g.q0);
      const std::uint8_t cj = row.pauli.local(g.q1);
      row.pauli.set_local(g.q0, cj);
      row.pauli.set_local(g.q1, ci);
      break;
    }
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      break;
    default: {
      const ConjEntry1& e =
          t.conj1[static_cast<int>(conj1_row_of(g.kind))][row.pauli.local(g.q0)];
      row.pauli.set_local(g.q0, e.code);
      if (e.flip) row.phase_exp = (row.phase_exp + 2) & 3;
      break;
    }
  }
}

void ForwardTableau::apply(const Gate& g) {
  if (g.is_rotation()) return;
  for (auto& r : fz_) conj_row(r, g);
  for (auto& r : fx_) conj_row(r, g);
}

SignedPauli ForwardTableau::conjugate(const SignedPauli& p) const {
  const std::size_t n = num_qubits();
  assert(p.num_qubits() == n);
  // Peel p into per-qubit X/Z factors: the Hermitian convention contributes
  // one power of i per Y letter, after which the bare factors multiply out
  // with ordinary phase bookkeeping.
  SignedPauli acc(n);
  acc.phase_exp = static_cast<std::uint8_t>(
      (p.phase_exp + BitVec::and_count(p.pauli.x, p.pauli.z)) & 3);
  for (std::size_t q = p.pauli.x.next_or_bit(p.pauli.z, 0); q < n;
       q = p.pauli.x.next_or_bit(p.pauli.z, q + 1)) {
    if (p.pauli.x.get(q)) acc = multiply(acc, fx_[q]);
    if (p.pauli.z.get(q)) acc = multiply(acc, fz_[q]);
  }
  return acc;
}

bool ForwardTableau::is_identity() const {
  const std::size_t n = num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (fz_[q].phase_exp != 0 || fx_[q].phase_exp != 0) return false;
    if (fz_[q].pauli != PauliString::single(n, q, kLocalZ)) return false;
    if (fx_[q].pauli != PauliString::single(n, q, kLocalX)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SignedFrame

SignedFrame::SignedFrame(std::size_t n_qubits) : fwd_(n_qubits) {
  s_.reserve(n_qubits);
  st_.reserve(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    s_.push_back(PauliString::single(n_qubits, q, kLocalZ));
    st_.push_back(PauliString::single(n_qubits, q, kLocalX));
  }
}

SignedFrame SignedFrame::from_rows(std::vector<PauliString> z_rows,
                                   std::vector<PauliString> x_rows) {
  const std::size_t n = z_rows.size();
  if (x_rows.size() != n)
    throw std::invalid_argument("frame needs matching z/x row counts");
  for (const auto& r : z_rows)
    if (r.num_qubits() != n)
      throw std::invalid_argument("frame row width does not match row count");
  for (const auto& r : x_rows)
    if (r.num_qubits() != n)
      throw std::invalid_argument("frame row width does not match row count");

  SignedFrame f;
  f.s_ = std::move(z_rows);
  f.st_ = std::move(x_rows);
  // The forward tableau body is the transpose of the rows: the j-th letter of
  // W Z_i W^dagger pairs with the i-th letter of the backward rows at j
  // (lambda is conjugation-invariant). Signs are not recoverable from bodies
  // alone, so they are taken positive.
  f.fwd_ = ForwardTableau(n);
  for (std::size_t i = 0; i < n; ++i) {
    SignedPauli& fz = f.fwd_.mutable_z_image(i);
    SignedPauli& fx = f.fwd_.mutable_x_image(i);
    for (std::size_t j = 0; j < n; ++j) {
      fz.pauli.x.set(j, f.s_[j].x.get(i));
      fz.pauli.z.set(j, f.st_[j].x.get(i));
      fx.pauli.x.set(j, f.s_[j].z.get(i));
      fx.pauli.z.set(j, f.st_[j].z.get(i));
    }
  }
  return f;
}

void SignedFrame::apply(const Gate& g) {
  if (g.is_rotation()) return;
  const LocalTables& t = LocalTables::get();
  switch (g.kind) {
    case GateKind::TQE: {
      // g^dagger Z_q g (g is its own adjoint) is a +-product of computational
      // Paulis on the two touched qubits; substituting rows for letters makes
      // the new row an XOR of the old ones. Copies keep the substitution
      // simultaneous.
      const auto& row = t.tqe[tqe_type_index(g.t0, g.t1)];
      const PauliString sz0 = s_[g.q0], sz1 = s_[g.q1];
      const PauliString sx0 = st_[g.q0], sx1 = st_[g.q1];
      auto combine = [&](PauliString& dst, const ConjEntry2& e) {
        dst.x.clear();
        dst.z.clear();
        if (e.code_i & 1) dst ^= sx0;
        if (e.code_i & 2) dst ^= sz0;
        if (e.code_j & 1) dst ^= sx1;
        if (e.code_j & 2) dst ^= sz1;
      };
      combine(s_[g.q0], row[local_pair_index(kLocalZ, kLocalI)]);
      combine(st_[g.q0], row[local_pair_index(kLocalX, kLocalI)]);
      combine(s_[g.q1], row[local_pair_index(kLocalI, kLocalZ)]);
      combine(st_[g.q1], row[local_pair_index(kLocalI, kLocalX)]);
      break;
    }
    case GateKind::Swap:
      std::swap(s_[g.q0], s_[g.q1]);
      std::swap(st_[g.q0], st_[g.q1]);
      break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      break;
    default: {
      const auto& row = t.conj1[static_cast<int>(conj1_row_of_adjoint(g.kind))];
      const PauliString sz = s_[g.q0], sx = st_[g.q0];
      auto combine = [&](PauliString& dst, const ConjEntry1& e) {
        dst.x.clear();
        dst.z.clear();
        if (e.code & 1) dst ^= sx;
        if (e.code & 2) dst ^= sz;
      };
      combine(s_[g.q0], row[kLocalZ]);
      combine(st_[g.q0], row[kLocalX]);
      break;
    }
  }
  fwd_.apply(g);
}

bool SignedFrame::z_row_negative(std::size_t q) const {
  const SignedPauli img = fwd_.conjugate(SignedPauli{s_[q], 0});
  assert(img.pauli == PauliString::single(num_qubits(), q, kLocalZ));
  return img.sign_bit();
}

bool SignedFrame::x_row_negative(std::size_t q) const {
  const SignedPauli img = fwd_.conjugate(SignedPauli{st_[q], 0});
  assert(img.pauli == PauliString::single(num_qubits(), q, kLocalX));
  return img.sign_bit();
}

CoordinateVector SignedFrame::expand(const PauliString& p) const {
  const std::size_t n = num_qubits();
  assert(p.num_qubits() == n);
  CoordinateVector c(n);
  for (std::size_t q = 0; q < n; ++q) {
    c.a.set(q, symplectic_form(s_[q], p));
    c.b.set(q, symplectic_form(st_[q], p));
  }
  return c;
}

PauliString SignedFrame::reconstruct(const CoordinateVector& c) const {
  const std::size_t n = num_qubits();
  PauliString p(n);
  for (std::size_t q = c.a.next_or_bit(c.b, 0); q < n;
       q = c.a.next_or_bit(c.b, q + 1)) {
    if (c.a.get(q)) p ^= st_[q];
    if (c.b.get(q)) p ^= s_[q];
  }
  return p;
}

PauliString SignedFrame::residual() const {
  const std::size_t n = num_qubits();
  PauliString r(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (z_row_negative(q)) r ^= st_[q];
    if (x_row_negative(q)) r ^= s_[q];
  }
  return r;
}

bool SignedFrame::is_origin_body() const {
  const std::size_t n = num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (s_[q] != PauliString::single(n, q, kLocalZ)) return false;
    if (st_[q] != PauliString::single(n, q, kLocalX)) return false;
  }
  return true;
}

bool SignedFrame::is_origin() const {
  return is_origin_body() && fwd_.is_identity();
}

bool SignedFrame::invariants_ok() const {
  const std::size_t n = num_qubits();
  if (st_.size() != n || fwd_.num_qubits() != n) return false;
  // Symplectic orthonormality: z rows and x rows each commute among
  // themselves; z_row(i) anticommutes with x_row(j) exactly when i == j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_form(s_[i], s_[j]) != 0) return false;
      if (symplectic_form(st_[i], st_[j]) != 0) return false;
      if (symplectic_form(s_[i], st_[j]) != (i == j ? 1 : 0)) return false;
    }
  // Forward tableau: Hermitian rows whose bodies are the transpose of ours.
  for (std::size_t i = 0; i < n; ++i) {
    if (!fwd_.z_image(i).is_hermitian() || !fwd_.x_image(i).is_hermitian())
      return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (fwd_.z_image(i).pauli.x.get(j) != s_[j].x.get(i)) return false;
      if (fwd_.z_image(i).pauli.z.get(j) != st_[j].x.get(i)) return false;
      if (fwd_.x_image(i).pauli.x.get(j) != s_[j].z.get(i)) return false;
      if (fwd_.x_image(i).pauli.z.get(j) != st_[j].z.get(i)) return false;
    }
  }
  return true;
}

std::string SignedFrame::body_key() const {
  std::string key;
  key.reserve(s_.size() * 4 * sizeof(std::uint64_t) * 2);
  auto feed = [&key](const BitVec& v) {
    for (std::uint64_t w : v.words()) {
      char buf[sizeof w];
      std::memcpy(buf, &w, sizeof w);
      key.append(buf, sizeof w);
    }
  };
  for (const auto& r : s_) {
    feed(r.x);
    feed(r.z);
  }
  for (const auto& r : st_) {
    feed(r.x);
    feed(r.z);
  }
  return key;
}

std::size_t relative_support(const SignedFrame& f, const PauliString& p) {
  return f.expand(p).support();
}

void coord_update(CoordinateVector& c, const Gate& g) {
  const LocalTables& t = LocalTables::get();
  switch (g.kind) {
    case GateKind::TQE: {
      const ConjEntry2& e = t.tqe[tqe_type_index(g.t0, g.t1)]
                                 [local_pair_index(c.local(g.q0), c.local(g.q1))];
      c.a.set(g.q0, e.code_i & 1);
      c.b.set(g.q0, (e.code_i >> 1) & 1);
      c.a.set(g.q1, e.code_j & 1);
      c.b.set(g.q1, (e.code_j >> 1) & 1);
      break;
    }
    case GateKind::Swap: {
      const std::uint8_t ci = c.local(g.q0), cj = c.local(g.q1);
      c.a.set(g.q0, cj & 1);
      c.b.set(g.q0, (cj >> 1) & 1);
      c.a.set(g.q1, ci & 1);
      c.b.set(g.q1, (ci >> 1) & 1);
      break;
    }
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::PauliX:
    case GateKind::PauliY:
    case GateKind::PauliZ:
      break;
    default: {
      // P and Pdg share one bit map, so the gate's own table row works for
      // the adjoint as well.
      const ConjEntry1& e =
          t.conj1[static_cast<int>(conj1_row_of(g.kind))][c.local(g.q0)];
      c.a.set(g.q0, e.code & 1);
      c.b.set(g.q0, (e.code >> 1) & 1);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Closure: reduce a frame to the origin with explicit gates.

Circuit clifford_circuit_of_frame(const SignedFrame& f) {
  const std::size_t n = f.num_qubits();
  // Reject row sets that no Clifford produces. Orthonormality implies full
  // rank: a dependent row would pair to zero with every row, contradicting
  // the delta pairing with its partner.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_form(f.z_row(i), f.z_row(j)) != 0 ||
          symplectic_form(f.x_row(i), f.x_row(j)) != 0 ||
          symplectic_form(f.z_row(i), f.x_row(j)) != (i == j ? 1 : 0))
        throw std::invalid_argument(
            "clifford_circuit_of_frame: rows are not a symplectic basis");
    }

  SignedFrame w = f;
  Circuit out(n);
  auto emit = [&](const Gate& g) {
    w.apply(g);
    out.append(g);
  };

  // Gaussian-style reduction of the forward tableau, one qubit at a time.
  // Rows already fixed live on columns < k only, and every gate below acts on
  // columns >= k, so earlier work is never disturbed.
  for (std::size_t k = 0; k < n; ++k) {
    const auto x_of = [&](std::size_t col) {
      return w.forward().x_image(k).pauli.x.get(col);
    };
    const auto z_of = [&](std::size_t col) {
      return w.forward().x_image(k).pauli.z.get(col);
    };

    // Phase A: drive the X image to +-X_k.
    {
      bool have_x = false;
      for (std::size_t col = k; col < n && !have_x; ++col) have_x = x_of(col);
      if (!have_x) {
        std::size_t j = k;
        while (j < n && !z_of(j)) ++j;
        assert(j < n);  // validated frames always leave a letter here
        emit(Gate::h(static_cast<std::uint32_t>(j)));
      }
      if (!x_of(k)) {
        std::size_t j = k + 1;
        while (j < n && !x_of(j)) ++j;
        assert(j < n);
        emit(Gate::cx(static_cast<std::uint32_t>(j),
                      static_cast<std::uint32_t>(k)));
      }
      for (std::size_t l = k + 1; l < n; ++l)
        if (x_of(l))
          emit(Gate::cx(static_cast<std::uint32_t>(k),
                        static_cast<std::uint32_t>(l)));
      bool z_tail = false;
      for (std::size_t col = k + 1; col < n && !z_tail; ++col)
        z_tail = z_of(col);
      if (z_tail) {
        if (!z_of(k)) emit(Gate::p(static_cast<std::uint32_t>(k)));
        for (std::size_t j = k + 1; j < n; ++j)
          if (z_of(j))
            emit(Gate::cx(static_cast<std::uint32_t>(j),
                          static_cast<std::uint32_t>(k)));
      }
      if (z_of(k)) emit(Gate::p(static_cast<std::uint32_t>(k)));
    }

    // Phase B: drive the Z image to +-Z_k without touching +-X_k.
    {
      const auto zx_of = [&](std::size_t col) {
        return w.forward().z_image(k).pauli.x.get(col);
      };
      const auto zz_of = [&](std::size_t col) {
        return w.forward().z_image(k).pauli.z.get(col);
      };
      for (std::size_t j = k + 1; j < n; ++j)
        if (zx_of(j)) {
          if (zz_of(j)) emit(Gate::p(static_cast<std::uint32_t>(j)));
          emit(Gate::h(static_cast<std::uint32_t>(j)));
        }
      // Anticommutation with +-X_k guarantees zz_of(k) == 1 here, so a CX
      // into column k clears each remaining z letter.
      for (std::size_t j = k + 1; j < n; ++j)
        if (zz_of(j))
          emit(Gate::cx(static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k)));
      if (zx_of(k)) {
        // Local Y: rotate it to Z while fixing X_k.
        emit(Gate::h(static_cast<std::uint32_t>(k)));
        emit(Gate::p(static_cast<std::uint32_t>(k)));
        emit(Gate::h(static_cast<std::uint32_t>(k)));
      }
    }
  }

  // Sign fixes: X flips the Z image sign, Z flips the X image sign, Y both.
  for (std::size_t q = 0; q < n; ++q) {
    const bool fz_neg = w.forward().z_image(q).sign_bit();
    const bool fx_neg = w.forward().x_image(q).sign_bit();
    if (fz_neg && fx_neg)
      emit(Gate::pauli(PauliAxis::Y, static_cast<std::uint32_t>(q)));
    else if (fz_neg)
      emit(Gate::pauli(PauliAxis::X, static_cast<std::uint32_t>(q)));
    else if (fx_neg)
      emit(Gate::pauli(PauliAxis::Z, static_cast<std::uint32_t>(q)));
  }

  assert(w.is_origin());
  return out;
}

}  // namespace pfg
