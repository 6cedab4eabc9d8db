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
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "dense_ref.hpp"
#include "gate_ref.hpp"
#include "pfg/synth_baseline.hpp"
#include "pfg/synth_pfg.hpp"
#include "pfg/verify.hpp"
#include "test_util.hpp"

using namespace pfg;
using dense_ref::cplx;

namespace {

Eigen::MatrixXcd from_ref(const dense_ref::Mat& m) {
  Eigen::MatrixXcd out(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r][c];
    }
  }
  return out;
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

PauliSumHamiltonian ring_fixture() {
  PauliAccum acc(4);
  acc.add(parse_pauli("ZZII").pauli, 0.11);
  acc.add(parse_pauli("IZZI").pauli, 0.12);
  acc.add(parse_pauli("IIZZ").pauli, 0.13);
  acc.add(parse_pauli("ZIIZ").pauli, 0.14);
  acc.add(parse_pauli("ZZZZ").pauli, 0.15);
  return acc.finish();
}

PauliSumHamiltonian toy_noncommuting() {
  PauliAccum acc(2);
  acc.add(parse_pauli("ZZ").pauli, 0.9);
  acc.add(parse_pauli("XI").pauli, 0.7);
  acc.add(parse_pauli("IZ").pauli, 0.5);
  return acc.finish();
}

Gate random_gate_or_rotation(std::size_t n, std::mt19937_64& rng) {
  if (rng() % 4 == 0) {
    const auto axis = static_cast<PauliAxis>(rng() % 3);
    const auto q = static_cast<std::uint32_t>(rng() % n);
    return Gate::rotation(axis, q, test_util::random_uniform(rng, -3.0, 3.0));
  }
  return test_util::random_clifford_gate(n, rng);
}

}  // namespace

TEST_CASE("dense Pauli matrices agree with the independent tensor oracle") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng() % 5;
    const PauliString p = test_util::random_pauli(n, rng);
    CHECK(max_diff(dense_of_pauli(p), from_ref(dense_ref::pauli_mat(p))) ==
          0.0);
  }
  SignedPauli sp(2);
  sp.pauli = parse_pauli("XY").pauli;
  sp.phase_exp = 2;
  CHECK(max_diff(dense_of_signed_pauli(sp),
                 from_ref(dense_ref::pauli_mat(sp))) == 0.0);

  PauliString big(kDenseQubitCap + 1);
  CHECK_THROWS_AS(dense_of_pauli(big), std::invalid_argument);
}

TEST_CASE("dense circuit semantics match the tensor oracle gate by gate") {
  const Circuit empty(3);
  CHECK(max_diff(dense_of_circuit(empty), Eigen::MatrixXcd::Identity(8, 8)) ==
        0.0);

  Circuit cx(2);
  cx.append(Gate::cx(0, 1));
  Eigen::MatrixXcd want(4, 4);
  want << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  CHECK(max_diff(dense_of_circuit(cx), want) == 0.0);

  Circuit hh(1);
  hh.append(Gate::h(0));
  hh.append(Gate::h(0));
  CHECK(max_diff(dense_of_circuit(hh), Eigen::MatrixXcd::Identity(2, 2)) <
        1e-15);

  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t n = 2 + rng() % 3;
    Circuit c(n);
    const std::size_t len = 1 + rng() % 20;
    for (std::size_t k = 0; k < len; ++k) {
      c.append(random_gate_or_rotation(n, rng));
    }
    CHECK(max_diff(dense_of_circuit(c),
                   from_ref(gate_ref::circuit_mat(c))) < 1e-12);
    CHECK(unitarity_defect(dense_of_circuit(c)) < 1e-12);
  }

  Circuit big(kDenseQubitCap + 1);
  CHECK_THROWS_AS(dense_of_circuit(big), std::invalid_argument);
}

TEST_CASE("rotation products multiply in emission order") {
  // exp(-i pi/2 Z) = diag(-i, i).
  std::vector<RotationRecord> one = {
      {0, M_PI, PauliString::single(1, 0, kLocalZ)}};
  const Eigen::MatrixXcd u = dense_of_rotation_product(1, one);
  CHECK(std::abs(u(0, 0) - cplx(0, -1)) < 1e-15);
  CHECK(std::abs(u(1, 1) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(u(0, 1)) == 0.0);

  // Commuting rotations are order-independent; anticommuting ones are not.
  std::vector<RotationRecord> ab = {{0, 0.4, parse_pauli("ZI").pauli},
                                    {1, 0.7, parse_pauli("ZZ").pauli}};
  std::vector<RotationRecord> ba = {ab[1], ab[0]};
  CHECK(max_diff(dense_of_rotation_product(2, ab),
                 dense_of_rotation_product(2, ba)) < 1e-15);

  std::vector<RotationRecord> xz = {{0, 0.4, parse_pauli("X").pauli},
                                    {1, 0.7, parse_pauli("Z").pauli}};
  std::vector<RotationRecord> zx = {xz[1], xz[0]};
  CHECK(max_diff(dense_of_rotation_product(1, xz),
                 dense_of_rotation_product(1, zx)) > 0.01);

  // Against the closed form, factor by factor, on random data.
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<RotationRecord> recs;
    const std::size_t m = 1 + rng() % 6;
    for (std::size_t k = 0; k < m; ++k) {
      recs.push_back(RotationRecord{static_cast<int>(k),
                                    test_util::random_uniform(rng, -3.0, 3.0),
                                    test_util::random_pauli(n, rng, true)});
    }
    dense_ref::Mat want = dense_ref::eye(std::size_t{1} << n);
    for (const RotationRecord& rec : recs) {
      dense_ref::Mat f = dense_ref::scale(std::cos(rec.angle / 2),
                                          dense_ref::eye(std::size_t{1} << n));
      f = dense_ref::add(
          f, dense_ref::scale(cplx(0, -std::sin(rec.angle / 2)),
                              dense_ref::pauli_mat(rec.pauli)));
      want = dense_ref::mul(f, want);
    }
    CHECK(max_diff(dense_of_rotation_product(n, recs), from_ref(want)) <
          1e-12);
  }

  std::vector<RotationRecord> wrong = {{0, 0.1, PauliString(3)}};
  CHECK_THROWS_AS(dense_of_rotation_product(2, wrong), std::invalid_argument);
}

TEST_CASE("Hamiltonian dense assembly and exact evolution") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 1 + rng() % 4;
    const PauliSumHamiltonian h =
        test_util::random_hamiltonian(n, 1 + rng() % 8, rng);
    dense_ref::Mat want = dense_ref::zeros(std::size_t{1} << n);
    for (const HamTerm& t : h.terms) {
      want = dense_ref::add(
          want, dense_ref::scale(t.coefficient, dense_ref::pauli_mat(t.pauli)));
    }
    CHECK(max_diff(dense_of_hamiltonian(h), from_ref(want)) < 1e-14);
  }

  // One-qubit closed form: exp(-i t 0.7X) = cos(0.7t) I - i sin(0.7t) X.
  PauliAccum acc(1);
  acc.add(parse_pauli("X").pauli, 0.7);
  const PauliSumHamiltonian hx = acc.finish();
  const double t = 0.9;
  const Eigen::MatrixXcd u = exact_evolution(hx, t);
  CHECK(std::abs(u(0, 0) - cplx(std::cos(0.7 * t), 0)) < 1e-13);
  CHECK(std::abs(u(0, 1) - cplx(0, -std::sin(0.7 * t))) < 1e-13);
  CHECK(unitarity_defect(u) < 1e-12);

  // Diagonal Hamiltonian: evolution is the elementwise phase.
  const PauliSumHamiltonian ring = ring_fixture();
  const Eigen::MatrixXcd ham = dense_of_hamiltonian(ring);
  const Eigen::MatrixXcd ev = exact_evolution(ring, 1.0);
  for (Eigen::Index i = 0; i < 16; ++i) {
    CHECK(std::abs(ev(i, i) - std::exp(cplx(0, -ham(i, i).real()))) < 1e-13);
  }
}

TEST_CASE("spectral norm and unitarity defect behave on knowns") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  CHECK(spectral_norm(d) == doctest::Approx(3.0));

  Eigen::MatrixXcd nil = Eigen::MatrixXcd::Zero(2, 2);
  nil(0, 1) = 2.0;
  CHECK(spectral_norm(nil) == doctest::Approx(2.0));
  CHECK(spectral_norm(Eigen::MatrixXcd::Zero(3, 3)) == 0.0);

  CHECK(unitarity_defect(Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
  CHECK(unitarity_defect(2.0 * Eigen::MatrixXcd::Identity(2, 2)) > 1.0);
}

TEST_CASE("phase alignment quotients exactly one global phase") {
  std::mt19937_64 rng(5);
  Circuit c(3);
  for (int k = 0; k < 15; ++k) c.append(random_gate_or_rotation(3, rng));
  const Eigen::MatrixXcd u = dense_of_circuit(c);
  const cplx ph = std::exp(cplx(0, 1.2345));
  CHECK(phase_aligned_difference(u, ph * u).norm() < 1e-12);
  CHECK(equal_up_to_phase(u, ph * u));
  CHECK(equal_up_to_phase(ph * u, u));

  Circuit other = c;
  other.append(Gate::h(0));
  CHECK(!equal_up_to_phase(u, dense_of_circuit(other)));

  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(2, 3);
  CHECK_THROWS_AS(phase_aligned_difference(u, z), std::invalid_argument);
}

TEST_CASE("path equivalence certifies synthesized steps and catches corruption") {
  // Empty everything: D is exactly the identity.
  const PathCheck trivial = check_path_equivalence(
      Circuit(2), {}, SignedFrame(2));
  CHECK(trivial.pass);
  CHECK(trivial.defect == 0.0);

  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 100; ++rep) {
    const PauliSumHamiltonian h =
        test_util::random_hamiltonian(4, 2 + rng() % 9, rng);
    SynthConfig cfg;
    cfg.dt = 0.3;
    switch (rep % 3) {
      case 1:
        cfg.close_cycle = true;
        break;
      case 2:
        cfg.retrace = true;
        break;
      default:
        break;
    }
    const SynthResult res = synth(h, cfg);
    const PathCheck pc =
        check_path_equivalence(res.circuit, res.manifest, res.final_frame);
    CHECK(pc.pass);
    CHECK(pc.defect < 1e-10);
  }

  // Baseline circuits check against the origin frame.
  const PauliSumHamiltonian toy = toy_noncommuting();
  const BaselineResult base = synth_baseline(toy, 0.4);
  CHECK(check_path_equivalence(base.circuit, base.manifest, SignedFrame(2))
            .pass);

  // A corrupted rotation angle is detected.
  SynthResult res = synth(toy, SynthConfig{});
  std::vector<RotationRecord> bad = res.manifest;
  bad[0].angle += 1e-3;
  const PathCheck caught =
      check_path_equivalence(res.circuit, bad, res.final_frame);
  CHECK(!caught.pass);
  CHECK(caught.defect > 1e-6);

  CHECK_THROWS_AS(
      check_path_equivalence(Circuit(kPathCheckQubitCap + 1), {},
                             SignedFrame(kPathCheckQubitCap + 1)),
      std::invalid_argument);
}

TEST_CASE("forward tableau agrees with dense conjugation, signs included") {
  CHECK(tableau_cross_check(Circuit(3)));

  Circuit p(1);
  p.append(Gate::p(0));
  CHECK(tableau_cross_check(p));

  Circuit flip(2);
  flip.append(Gate::pauli(PauliAxis::X, 0));
  flip.append(Gate::cx(0, 1));
  CHECK(tableau_cross_check(flip));

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t n = 2 + rng() % 5;
    Circuit c(n);
    for (int k = 0; k < 200; ++k) {
      c.append(test_util::random_clifford_gate(n, rng));
    }
    CHECK(tableau_cross_check(c));
  }

  // Rotations in the stream are skipped rather than rejected.
  Circuit mixed(2);
  mixed.append(Gate::h(0));
  mixed.append(Gate::rotation(PauliAxis::Z, 1, 0.3));
  mixed.append(Gate::cx(0, 1));
  CHECK(tableau_cross_check(mixed));

  CHECK_THROWS_AS(tableau_cross_check(Circuit(kTableauCheckQubitCap + 1)),
                  std::invalid_argument);
}

TEST_CASE("Trotter error is exact for commuting terms and scales as expected") {
  const std::vector<double> dts = {0.2, 0.1, 0.05, 0.025};

  const PauliSumHamiltonian ring = ring_fixture();
  const TrotterFit exact_fit = trotter_error(
      ring,
      [&](double dt) {
        SynthConfig cfg;
        cfg.dt = dt;
        cfg.close_cycle = true;
        return synth(ring, cfg).circuit;
      },
      dts);
  for (const double e : exact_fit.errors) CHECK(e < 1e-12);

  const PauliSumHamiltonian toy = toy_noncommuting();
  const TrotterFit first = trotter_error(
      toy,
      [&](double dt) {
        SynthConfig cfg;
        cfg.dt = dt;
        cfg.close_cycle = true;
        return synth(toy, cfg).circuit;
      },
      dts);
  CHECK(first.slope == doctest::Approx(2.0).epsilon(0.15));
  for (std::size_t i = 1; i < first.errors.size(); ++i) {
    CHECK(first.errors[i] < first.errors[i - 1]);
  }

  // A retraced step with half the internal dt is a second-order step.
  const TrotterFit second = trotter_error(
      toy,
      [&](double dt) {
        SynthConfig cfg;
        cfg.dt = dt / 2.0;
        cfg.retrace = true;
        return synth(toy, cfg).circuit;
      },
      dts);
  CHECK(second.slope == doctest::Approx(3.0).epsilon(0.1));
  for (std::size_t i = 0; i < dts.size(); ++i) {
    CHECK(second.errors[i] < first.errors[i]);
  }

  CHECK_THROWS_AS(
      trotter_error(toy, [](double) { return Circuit(2); }, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      trotter_error(toy, [](double) { return Circuit(3); }, {0.1}),
      std::invalid_argument);
}
