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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "dense_ref.hpp"
#include "doctest.h"
#include "gate_ref.hpp"
#include "pfg/frame.hpp"
#include "pfg/tables.hpp"
#include "test_util.hpp"

using namespace pfg;

namespace {

PauliString from_dense(const std::string& text) {
  return parse_pauli(text).pauli;
}

SignedFrame frame_of(std::size_t n, const std::vector<Gate>& gates) {
  SignedFrame f(n);
  for (const Gate& g : gates) f.apply(g);
  return f;
}

dense_ref::Mat signed_row_mat(const SignedFrame& f, std::size_t q, bool x_row) {
  const bool neg = x_row ? f.x_row_negative(q) : f.z_row_negative(q);
  return dense_ref::scale(neg ? -1.0 : 1.0,
                          dense_ref::pauli_mat(x_row ? f.x_row(q) : f.z_row(q)));
}

}  // namespace

TEST_CASE("origin frame: rows, signs, coordinates") {
  const std::size_t n = 5;
  SignedFrame f(n);
  CHECK(f.is_origin());
  CHECK(f.invariants_ok());
  CHECK(f.residual() == PauliString(n));
  for (std::size_t q = 0; q < n; ++q) {
    CHECK(f.z_row(q) == PauliString::single(n, q, kLocalZ));
    CHECK(f.x_row(q) == PauliString::single(n, q, kLocalX));
    CHECK_FALSE(f.z_row_negative(q));
    CHECK_FALSE(f.x_row_negative(q));
  }

  // In the origin frame, coordinates are the operator's own X/Z masks.
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const PauliString p = test_util::random_pauli(n, rng);
    const CoordinateVector c = f.expand(p);
    CHECK(c.a == p.x);
    CHECK(c.b == p.z);
    CHECK(f.reconstruct(c) == p);
    CHECK(relative_support(f, p) == p.weight());
  }
}

TEST_CASE("backward action of CX and CZ on the two-qubit origin") {
  SignedFrame f = frame_of(2, {Gate::cx(0, 1)});
  CHECK(f.z_row(0) == from_dense("ZI"));
  CHECK(f.x_row(0) == from_dense("XX"));
  CHECK(f.z_row(1) == from_dense("ZZ"));
  CHECK(f.x_row(1) == from_dense("IX"));
  CHECK(f.invariants_ok());

  SignedFrame g = frame_of(2, {Gate::cz(0, 1)});
  CHECK(g.z_row(0) == from_dense("ZI"));
  CHECK(g.x_row(0) == from_dense("XZ"));
  CHECK(g.z_row(1) == from_dense("IZ"));
  CHECK(g.x_row(1) == from_dense("ZX"));
  CHECK(g.invariants_ok());

  // The two frames agree except on the X rows, which is what distinguishes
  // the entanglers when a later operator is expanded against them.
  CHECK(f.z_row(0) == g.z_row(0));
  CHECK(f.x_row(0) != g.x_row(0));
}

TEST_CASE("support of Z1 through the post-CX and post-CZ frames") {
  const PauliString z1 = from_dense("IZ");
  SignedFrame cx = frame_of(2, {Gate::cx(0, 1)});
  SignedFrame cz = frame_of(2, {Gate::cz(0, 1)});
  CHECK(relative_support(cx, z1) == 2);
  CHECK(relative_support(cz, z1) == 1);
  // The surviving coordinate after CZ is a Z-like letter on qubit 1.
  const CoordinateVector c = cz.expand(z1);
  CHECK(c.local(0) == kLocalI);
  CHECK(c.local(1) == kLocalZ);
}

TEST_CASE("frame rows match dense conjugation, signs included") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < (n < 3 ? 40 : 15); ++rep) {
      std::vector<Gate> gates;
      const int len = 1 + static_cast<int>(rng() % 12);
      for (int k = 0; k < len; ++k)
        gates.push_back(n == 1 ? test_util::random_clifford_gate(2, rng)
                               : test_util::random_clifford_gate(n, rng));
      if (n == 1) {
        // Restrict to single-qubit gates on qubit 0.
        for (Gate& g : gates) {
          if (g.is_two_qubit()) g = Gate::h(0);
          g.q0 = 0;
        }
      }

      SignedFrame f = frame_of(n, gates);
      REQUIRE(f.invariants_ok());

      Circuit c(n);
      for (const Gate& g : gates) c.append(g);
      const dense_ref::Mat w = gate_ref::circuit_mat(c);
      const dense_ref::Mat wd = dense_ref::dagger(w);

      for (std::size_t q = 0; q < n; ++q) {
        // Backward rows: W^dagger Z_q W and W^dagger X_q W.
        const auto zq = dense_ref::pauli_mat(PauliString::single(n, q, kLocalZ));
        const auto xq = dense_ref::pauli_mat(PauliString::single(n, q, kLocalX));
        CHECK(dense_ref::approx_equal(dense_ref::mul(wd, dense_ref::mul(zq, w)),
                                      signed_row_mat(f, q, false)));
        CHECK(dense_ref::approx_equal(dense_ref::mul(wd, dense_ref::mul(xq, w)),
                                      signed_row_mat(f, q, true)));
        // Forward tableau: W Z_q W^dagger and W X_q W^dagger.
        CHECK(dense_ref::approx_equal(
            dense_ref::mul(w, dense_ref::mul(zq, wd)),
            dense_ref::pauli_mat(f.forward().z_image(q))));
        CHECK(dense_ref::approx_equal(
            dense_ref::mul(w, dense_ref::mul(xq, wd)),
            dense_ref::pauli_mat(f.forward().x_image(q))));
      }

      // Arbitrary-operator conjugation through the forward tableau.
      const SignedPauli p{test_util::random_pauli(n, rng),
                          static_cast<std::uint8_t>((rng() & 1) * 2)};
      const SignedPauli img = f.forward().conjugate(p);
      CHECK(dense_ref::approx_equal(
          dense_ref::mul(w, dense_ref::mul(dense_ref::pauli_mat(p), wd)),
          dense_ref::pauli_mat(img)));
    }
  }
}

TEST_CASE("gate involutions return the frame to where it was") {
  std::mt19937_64 rng(23);
  const std::size_t n = 6;
  for (int rep = 0; rep < 50; ++rep) {
    SignedFrame f(n);
    for (int k = 0; k < 20; ++k) f.apply(test_util::random_clifford_gate(n, rng));
    const SignedFrame snapshot = f;

    Gate g = test_util::random_clifford_gate(n, rng);
    f.apply(g);
    if (g.kind == GateKind::P)
      f.apply(Gate::pdg(g.q0));
    else if (g.kind == GateKind::Pdg)
      f.apply(Gate::p(g.q0));
    else
      f.apply(g);
    CHECK(f == snapshot);
  }
}

TEST_CASE("invariants hold along long random walks") {
  std::mt19937_64 rng(31);
  const std::size_t n = 16;
  SignedFrame f(n);
  for (int k = 0; k < 10000; ++k) {
    f.apply(test_util::random_clifford_gate(n, rng));
    if (k % 250 == 0) {
      REQUIRE(f.invariants_ok());
    }
  }
  CHECK(f.invariants_ok());
}

TEST_CASE("expand and reconstruct invert each other on any frame") {
  std::mt19937_64 rng(37);
  const std::size_t n = 9;
  for (int rep = 0; rep < 30; ++rep) {
    SignedFrame f(n);
    for (int k = 0; k < 60; ++k) f.apply(test_util::random_clifford_gate(n, rng));
    for (int it = 0; it < 20; ++it) {
      const PauliString p = test_util::random_pauli(n, rng);
      const CoordinateVector c = f.expand(p);
      CHECK(f.reconstruct(c) == p);
      // Nondegeneracy: only the identity has empty coordinates.
      if (!p.is_identity()) CHECK(c.support() >= 1);
    }
  }
}

TEST_CASE("incremental coordinate updates track expand exactly") {
  std::mt19937_64 rng(41);
  const std::size_t n = 7;
  for (int rep = 0; rep < 25; ++rep) {
    SignedFrame f(n);
    const PauliString p = test_util::random_pauli(n, rng, /*nonzero=*/true);
    CoordinateVector c = f.expand(p);
    for (int k = 0; k < 50; ++k) {
      const Gate g = test_util::random_clifford_gate(n, rng);
      f.apply(g);
      coord_update(c, g);
      REQUIRE(c == f.expand(p));
    }
  }
}

TEST_CASE("TQE action table agrees with an independent dense derivation") {
  const LocalTables& t = LocalTables::get();
  const PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (PauliAxis t0 : axes)
    for (PauliAxis t1 : axes) {
      const dense_ref::Mat u =
          gate_ref::gate_mat_small(Gate::tqe(t0, t1, 0, 1));
      // A TQE is a Hermitian involution.
      CHECK(dense_ref::approx_equal(u, dense_ref::dagger(u)));
      CHECK(dense_ref::approx_equal(dense_ref::mul(u, u), dense_ref::eye(4)));

      for (std::uint8_t ci = 0; ci < 4; ++ci)
        for (std::uint8_t cj = 0; cj < 4; ++cj) {
          const dense_ref::Mat conj = dense_ref::mul(
              u, dense_ref::mul(dense_ref::kron(dense_ref::pauli1(ci),
                                                dense_ref::pauli1(cj)),
                                u));
          const ConjEntry2& e =
              t.tqe[tqe_type_index(t0, t1)][local_pair_index(ci, cj)];
          const dense_ref::Mat expect = dense_ref::scale(
              e.flip ? -1.0 : 1.0,
              dense_ref::kron(dense_ref::pauli1(e.code_i),
                              dense_ref::pauli1(e.code_j)));
          REQUIRE(dense_ref::approx_equal(conj, expect));
        }
    }
}

TEST_CASE("hand-pinned conjugation anchors") {
  const auto& t = tqe_action_table();
  const std::size_t cx = tqe_type_index(PauliAxis::Z, PauliAxis::X);
  // CX: X on the control copies onto the target; Z on the target copies back.
  CHECK(t[cx][local_pair_index(kLocalX, kLocalI)].code_i == kLocalX);
  CHECK(t[cx][local_pair_index(kLocalX, kLocalI)].code_j == kLocalX);
  CHECK_FALSE(t[cx][local_pair_index(kLocalX, kLocalI)].flip);
  CHECK(t[cx][local_pair_index(kLocalI, kLocalZ)].code_i == kLocalZ);
  CHECK(t[cx][local_pair_index(kLocalI, kLocalZ)].code_j == kLocalZ);
  CHECK(t[cx][local_pair_index(kLocalZ, kLocalI)].code_i == kLocalZ);
  CHECK(t[cx][local_pair_index(kLocalZ, kLocalI)].code_j == kLocalI);
  // The classic signed case: CX (Y x Y) CX = -(X x Z).
  const ConjEntry2& yy = t[cx][local_pair_index(kLocalY, kLocalY)];
  CHECK(yy.code_i == kLocalX);
  CHECK(yy.code_j == kLocalZ);
  CHECK(yy.flip);
  // CZ symmetrically copies Z onto X letters.
  const std::size_t cz = tqe_type_index(PauliAxis::Z, PauliAxis::Z);
  CHECK(t[cz][local_pair_index(kLocalX, kLocalI)].code_i == kLocalX);
  CHECK(t[cz][local_pair_index(kLocalX, kLocalI)].code_j == kLocalZ);
}

TEST_CASE("every nonzero coordinate pair has exactly four reducing TQE types") {
  const LocalTables& t = LocalTables::get();
  const PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (std::uint8_t ci = 1; ci <= 3; ++ci)
    for (std::uint8_t cj = 1; cj <= 3; ++cj) {
      const auto& reducers = t.reducers[(ci - 1) + 3 * (cj - 1)];
      std::set<std::pair<PauliAxis, PauliAxis>> listed(reducers.begin(),
                                                       reducers.end());
      CHECK(listed.size() == 4);
      // Cross-check against the action table: a reducer clears exactly one
      // side, a non-reducer keeps both letters nonzero.
      int reducing = 0;
      for (PauliAxis t0 : axes)
        for (PauliAxis t1 : axes) {
          const ConjEntry2& e =
              t.tqe[tqe_type_index(t0, t1)][local_pair_index(ci, cj)];
          const bool clears = (e.code_i == 0) != (e.code_j == 0);
          CHECK(e.code_i + e.code_j != 0);  // both cannot vanish
          if (clears) {
            ++reducing;
            CHECK(listed.count({t0, t1}) == 1);
          } else {
            CHECK(listed.count({t0, t1}) == 0);
          }
        }
      CHECK(reducing == 4);
    }
  // The worked example: a (Z, Z) coordinate pair is cleared by exactly
  // {CX, CY, XZ-type, YZ-type} entanglers.
  const auto& zz = t.reducers[(kLocalZ - 1) + 3 * (kLocalZ - 1)];
  std::set<std::pair<PauliAxis, PauliAxis>> got(zz.begin(), zz.end());
  std::set<std::pair<PauliAxis, PauliAxis>> want = {
      {PauliAxis::Z, PauliAxis::X},
      {PauliAxis::Z, PauliAxis::Y},
      {PauliAxis::X, PauliAxis::Z},
      {PauliAxis::Y, PauliAxis::Z},
  };
  CHECK(got == want);
}

TEST_CASE("prepending the residual Pauli clears all row signs") {
  std::mt19937_64 rng(43);
  const std::size_t n = 5;
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<Gate> gates;
    for (int k = 0; k < 30; ++k)
      gates.push_back(test_util::random_clifford_gate(n, rng));
    SignedFrame f = frame_of(n, gates);
    const PauliString r = f.residual();

    SignedFrame g(n);
    for (std::size_t q = 0; q < n; ++q)
      if (r.local(q) != kLocalI)
        g.apply(Gate::pauli(axis_of_local(r.local(q)), static_cast<std::uint32_t>(q)));
    for (const Gate& gate : gates) g.apply(gate);

    for (std::size_t q = 0; q < n; ++q) {
      CHECK(g.z_row(q) == f.z_row(q));
      CHECK(g.x_row(q) == f.x_row(q));
      CHECK_FALSE(g.z_row_negative(q));
      CHECK_FALSE(g.x_row_negative(q));
    }
  }
}

TEST_CASE("closure of the origin is empty; closure undoes a single CX") {
  CHECK(clifford_circuit_of_frame(SignedFrame(3)).gates.empty());

  SignedFrame f = frame_of(2, {Gate::cx(0, 1)});
  const Circuit c = clifford_circuit_of_frame(f);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::cx(0, 1));
}

TEST_CASE("closure maps random frames to the origin, signs included") {
  std::mt19937_64 rng(47);
  const std::size_t n = 5;
  for (int rep = 0; rep < 60; ++rep) {
    SignedFrame f(n);
    for (int k = 0; k < 30; ++k) f.apply(test_util::random_clifford_gate(n, rng));
    const Circuit c = clifford_circuit_of_frame(f);
    SignedFrame g = f;
    for (const Gate& gate : c.gates) {
      CHECK(gate.is_clifford());
      g.apply(gate);
    }
    CHECK(g.is_origin());
  }
}

TEST_CASE("closure times the producing circuit is a scalar (dense)") {
  std::mt19937_64 rng(53);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      Circuit walk(n);
      for (int k = 0; k < 15; ++k)
        walk.append(test_util::random_clifford_gate(n, rng));
      SignedFrame f(n);
      for (const Gate& g : walk.gates) f.apply(g);

      const Circuit close = clifford_circuit_of_frame(f);
      const dense_ref::Mat w = gate_ref::circuit_mat(walk);
      const dense_ref::Mat cl = gate_ref::circuit_mat(close);
      const dense_ref::Mat prod = dense_ref::mul(cl, w);
      CHECK(dense_ref::equal_up_to_phase(
          prod, dense_ref::eye(std::size_t{1} << n), 1e-9));
    }
  }
}

TEST_CASE("closure accepts raw symplectic rows and rejects degenerate ones") {
  std::mt19937_64 rng(59);
  const std::size_t n = 4;
  // Valid input: rows of a frame reached by a walk, signs forgotten.
  for (int rep = 0; rep < 20; ++rep) {
    SignedFrame f(n);
    for (int k = 0; k < 25; ++k) f.apply(test_util::random_clifford_gate(n, rng));
    std::vector<PauliString> zr, xr;
    for (std::size_t q = 0; q < n; ++q) {
      zr.push_back(f.z_row(q));
      xr.push_back(f.x_row(q));
    }
    SignedFrame raw = SignedFrame::from_rows(zr, xr);
    CHECK(raw.invariants_ok());
    const Circuit c = clifford_circuit_of_frame(raw);
    for (const Gate& g : c.gates) raw.apply(g);
    CHECK(raw.is_origin());
  }

  // Duplicated row: not a symplectic basis.
  std::vector<PauliString> zr = {from_dense("ZI"), from_dense("ZI")};
  std::vector<PauliString> xr = {from_dense("XI"), from_dense("IX")};
  CHECK_THROWS_AS(clifford_circuit_of_frame(SignedFrame::from_rows(zr, xr)),
                  std::invalid_argument);
  // Commuting partner: violates the delta pairing.
  zr = {from_dense("ZI"), from_dense("IZ")};
  xr = {from_dense("XI"), from_dense("ZI")};
  CHECK_THROWS_AS(clifford_circuit_of_frame(SignedFrame::from_rows(zr, xr)),
                  std::invalid_argument);
}

TEST_CASE("same circuit, same frame; body keys separate distinct bodies") {
  std::mt19937_64 rng(61);
  const std::size_t n = 6;
  std::unordered_set<std::string> keys;
  SignedFrame f(n);
  keys.insert(f.body_key());
  std::vector<Gate> gates;
  for (int k = 0; k < 40; ++k) {
    const Gate g = test_util::random_clifford_gate(n, rng);
    gates.push_back(g);
    f.apply(g);
    keys.insert(f.body_key());
  }
  SignedFrame replay = frame_of(n, gates);
  CHECK(replay == f);
  CHECK(replay.body_key() == f.body_key());
  // A 40-step generic walk should visit many distinct bodies.
  CHECK(keys.size() > 20);
}

TEST_CASE("rotations do not move the frame") {
  std::mt19937_64 rng(67);
  SignedFrame f(3);
  for (int k = 0; k < 15; ++k) f.apply(test_util::random_clifford_gate(3, rng));
  const SignedFrame snapshot = f;
  f.apply(Gate::rotation(PauliAxis::Z, 1, 0.7));
  f.apply(Gate::rotation(PauliAxis::X, 2, -2.1));
  CHECK(f == snapshot);
}

TEST_CASE("symplectic pairings are preserved by every gate") {
  std::mt19937_64 rng(71);
  const std::size_t n = 8;
  SignedFrame f(n);
  for (int k = 0; k < 400; ++k) {
    f.apply(test_util::random_clifford_gate(n, rng));
    // Spot-check a random pair each step instead of the full O(n^2) matrix.
    const std::size_t i = rng() % n, j = rng() % n;
    CHECK(symplectic_form(f.z_row(i), f.z_row(j)) == 0);
    CHECK(symplectic_form(f.x_row(i), f.x_row(j)) == 0);
    CHECK(symplectic_form(f.z_row(i), f.x_row(j)) == (i == j ? 1 : 0));
  }
}
