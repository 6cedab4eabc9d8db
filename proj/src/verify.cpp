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

#include "pfg/verify.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace pfg {

namespace {

using Mcd = Eigen::MatrixXcd;
using cplx = std::complex<double>;

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                " qubits exceeds the dense cap of " +
                                std::to_string(cap));
  }
}

/// Row-index bit of qubit q in an n-qubit register (qubit 0 = MSB).
std::uint64_t qubit_bit(std::size_t n, std::size_t q) {
  return std::uint64_t{1} << (n - 1 - q);
}

Eigen::Matrix2cd axis_block(PauliAxis a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::Matrix2cd single_block(const Gate& g) {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      m << s, s, s, -s;
      return m;
    case GateKind::P:
      m << 1, 0, 0, cplx(0, 1);
      return m;
    case GateKind::Pdg:
      m << 1, 0, 0, cplx(0, -1);
      return m;
    case GateKind::PauliX:
      return axis_block(PauliAxis::X);
    case GateKind::PauliY:
      return axis_block(PauliAxis::Y);
    case GateKind::PauliZ:
      return axis_block(PauliAxis::Z);
    default: {
      // Rotations: cos(a/2) I - i sin(a/2) sigma.
      const Eigen::Matrix2cd sig = axis_block(g.rotation_axis());
      return std::cos(g.angle / 2.0) * Eigen::Matrix2cd::Identity() -
             cplx(0, 1) * std::sin(g.angle / 2.0) * sig;
    }
  }
}

Eigen::Matrix4cd two_block(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  if (g.kind == GateKind::Swap) {
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = 1;
    return m;
  }
  // Entangler with axes (A, B): (I+A)/2 (x) I + (I-A)/2 (x) B, the
  // controlled-Pauli with A selecting the branch on q0.
  const Eigen::Matrix2cd a = axis_block(g.t0);
  const Eigen::Matrix2cd b = axis_block(g.t1);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd up = 0.5 * (id + a);
  const Eigen::Matrix2cd um = 0.5 * (id - a);
  for (int ra = 0; ra < 2; ++ra) {
    for (int ca = 0; ca < 2; ++ca) {
      for (int rb = 0; rb < 2; ++rb) {
        for (int cb = 0; cb < 2; ++cb) {
          m(2 * ra + rb, 2 * ca + cb) =
              up(ra, ca) * (rb == cb ? 1.0 : 0.0) + um(ra, ca) * b(rb, cb);
        }
      }
    }
  }
  return m;
}

void apply_single(Mcd& u, const Eigen::Matrix2cd& m, std::size_t n,
                  std::uint32_t q) {
  const std::uint64_t s = qubit_bit(n, q);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & s) continue;
    const Eigen::RowVectorXcd r0 = u.row(static_cast<Eigen::Index>(base));
    const Eigen::RowVectorXcd r1 = u.row(static_cast<Eigen::Index>(base | s));
    u.row(static_cast<Eigen::Index>(base)) = m(0, 0) * r0 + m(0, 1) * r1;
    u.row(static_cast<Eigen::Index>(base | s)) = m(1, 0) * r0 + m(1, 1) * r1;
  }
}

void apply_two(Mcd& u, const Eigen::Matrix4cd& m, std::size_t n,
               std::uint32_t q0, std::uint32_t q1) {
  const std::uint64_t s0 = qubit_bit(n, q0);
  const std::uint64_t s1 = qubit_bit(n, q1);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (s0 | s1)) continue;
    Eigen::RowVectorXcd r[4];
    const std::uint64_t rows[4] = {base, base | s1, base | s0, base | s0 | s1};
    for (int l = 0; l < 4; ++l) r[l] = u.row(static_cast<Eigen::Index>(rows[l]));
    for (int l = 0; l < 4; ++l) {
      u.row(static_cast<Eigen::Index>(rows[l])) =
          m(l, 0) * r[0] + m(l, 1) * r[1] + m(l, 2) * r[2] + m(l, 3) * r[3];
    }
  }
}

/// In-place u := exp(-i angle/2 pauli) * u without forming the exponential.
void apply_rotation_product_factor(Mcd& u, const PauliString& p, double angle,
                                   std::size_t n) {
  std::uint64_t xm = 0, zm = 0;
  int xz = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint8_t code = p.local(q);
    if (code & 1) xm |= qubit_bit(n, q);
    if (code & 2) zm |= qubit_bit(n, q);
    if (code == kLocalY) ++xz;
  }
  const cplx c = std::cos(angle / 2.0);
  const cplx is = cplx(0, -1) * std::sin(angle / 2.0);
  const cplx phase = kIPow[xz & 3];
  const std::uint64_t dim = std::uint64_t{1} << n;
  Mcd pu(u.rows(), u.cols());
  for (std::uint64_t r = 0; r < dim; ++r) {
    const std::uint64_t src = r ^ xm;
    const double sgn = (std::popcount(zm & src) & 1) ? -1.0 : 1.0;
    pu.row(static_cast<Eigen::Index>(r)) =
        (phase * sgn) * u.row(static_cast<Eigen::Index>(src));
  }
  u = c * u + is * pu;
}

/// Phase of the first row-major entry whose modulus clears a relative
/// threshold; the zero matrix aligns trivially.
cplx leading_phase(const Mcd& a, Eigen::Index* row, Eigen::Index* col) {
  const double mx = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  if (mx == 0.0) {
    *row = *col = 0;
    return cplx(1, 0);
  }
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (std::abs(a(r, c)) > 1e-6 * mx) {
        *row = r;
        *col = c;
        return a(r, c) / std::abs(a(r, c));
      }
    }
  }
  *row = *col = 0;
  return cplx(1, 0);
}

}  // namespace

Eigen::MatrixXcd dense_of_pauli(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  require_cap(n, kDenseQubitCap, "dense_of_pauli");
  std::uint64_t xm = 0, zm = 0;
  int xz = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint8_t code = p.local(q);
    if (code & 1) xm |= qubit_bit(n, q);
    if (code & 2) zm |= qubit_bit(n, q);
    if (code == kLocalY) ++xz;
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Mcd m = Mcd::Zero(static_cast<Eigen::Index>(dim),
                    static_cast<Eigen::Index>(dim));
  const cplx phase = kIPow[xz & 3];
  for (std::uint64_t colidx = 0; colidx < dim; ++colidx) {
    const double sgn = (std::popcount(zm & colidx) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(colidx ^ xm),
      static_cast<Eigen::Index>(colidx)) = phase * sgn;
  }
  return m;
}

Eigen::MatrixXcd dense_of_signed_pauli(const SignedPauli& p) {
  return kIPow[p.phase_exp & 3] * dense_of_pauli(p.pauli);
}

Eigen::MatrixXcd dense_of_circuit(const Circuit& c) {
  require_cap(c.n_qubits, kDenseQubitCap, "dense_of_circuit");
  const std::uint64_t dim = std::uint64_t{1} << c.n_qubits;
  Mcd u = Mcd::Identity(static_cast<Eigen::Index>(dim),
                        static_cast<Eigen::Index>(dim));
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) {
      apply_two(u, two_block(g), c.n_qubits, g.q0, g.q1);
    } else {
      apply_single(u, single_block(g), c.n_qubits, g.q0);
    }
  }
  return u;
}

Eigen::MatrixXcd dense_of_rotation_product(
    std::size_t n_qubits, const std::vector<RotationRecord>& rotations) {
  require_cap(n_qubits, kDenseQubitCap, "dense_of_rotation_product");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  Mcd u = Mcd::Identity(static_cast<Eigen::Index>(dim),
                        static_cast<Eigen::Index>(dim));
  for (const RotationRecord& r : rotations) {
    if (r.pauli.num_qubits() != n_qubits) {
      throw std::invalid_argument(
          "dense_of_rotation_product: record register size mismatch");
    }
    apply_rotation_product_factor(u, r.pauli, r.angle, n_qubits);
  }
  return u;
}

Eigen::MatrixXcd dense_of_hamiltonian(const PauliSumHamiltonian& h) {
  require_cap(h.n_qubits, kDenseQubitCap, "dense_of_hamiltonian");
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits;
  Mcd m = Mcd::Zero(static_cast<Eigen::Index>(dim),
                    static_cast<Eigen::Index>(dim));
  for (const HamTerm& t : h.terms) {
    std::uint64_t xm = 0, zm = 0;
    int xz = 0;
    for (std::size_t q = 0; q < h.n_qubits; ++q) {
      const std::uint8_t code = t.pauli.local(q);
      if (code & 1) xm |= qubit_bit(h.n_qubits, q);
      if (code & 2) zm |= qubit_bit(h.n_qubits, q);
      if (code == kLocalY) ++xz;
    }
    const cplx w = t.coefficient * kIPow[xz & 3];
    for (std::uint64_t colidx = 0; colidx < dim; ++colidx) {
      const double sgn = (std::popcount(zm & colidx) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(colidx ^ xm),
        static_cast<Eigen::Index>(colidx)) += w * sgn;
    }
  }
  return m;
}

Eigen::MatrixXcd exact_evolution(const PauliSumHamiltonian& h, double dt) {
  const Mcd ham = dense_of_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<Mcd> es(ham);
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXcd ph(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    ph(i) = std::exp(cplx(0, -dt * lam(i)));
  }
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mcd> es(a.adjoint() * a,
                                        Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Mcd::Identity(u.rows(), u.cols())).norm();
}

Eigen::MatrixXcd phase_aligned_difference(const Eigen::MatrixXcd& a,
                                          const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_difference: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  const cplx pa = leading_phase(a, &r, &c);
  // Quotient b by its own phase at the position chosen from a; if b vanishes
  // there the matrices differ regardless of phase, so leave b unrotated.
  const cplx bv = b(r, c);
  const cplx pb = std::abs(bv) > 0.0 ? bv / std::abs(bv) : cplx(1, 0);
  return a / pa - b / pb;
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol) {
  return phase_aligned_difference(a, b).norm() <= tol;
}

PathCheck check_path_equivalence(const Circuit& c,
                                 const std::vector<RotationRecord>& rotations,
                                 const SignedFrame& final_frame,
                                 double tol) {
  require_cap(c.n_qubits, kPathCheckQubitCap, "check_path_equivalence");
  const Mcd u = dense_of_circuit(c);
  const Mcd r = dense_of_rotation_product(c.n_qubits, rotations);
  const Mcd d = u * r.adjoint();
  const Mcd v = dense_of_circuit(clifford_circuit_of_frame(final_frame)).adjoint();
  const Mcd diff = phase_aligned_difference(d, v);
  PathCheck out;
  out.defect = diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
  out.frobenius = diff.norm();
  out.pass = out.frobenius <= tol;
  return out;
}

bool tableau_cross_check(const Circuit& c, double tol) {
  require_cap(c.n_qubits, kTableauCheckQubitCap, "tableau_cross_check");
  Circuit cliffords(c.n_qubits);
  SignedFrame f(c.n_qubits);
  for (const Gate& g : c.gates) {
    if (g.is_rotation()) continue;
    cliffords.append(g);
    f.apply(g);
  }
  const Mcd u = dense_of_circuit(cliffords);
  for (std::size_t q = 0; q < c.n_qubits; ++q) {
    for (const std::uint8_t code : {kLocalZ, kLocalX}) {
      SignedPauli base(c.n_qubits);
      base.pauli = PauliString::single(c.n_qubits, q, code);
      const SignedPauli image = f.forward().conjugate(base);
      const Mcd got = u * dense_of_pauli(base.pauli) * u.adjoint();
      const Mcd want = dense_of_signed_pauli(image);
      if ((got - want).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

TrotterFit trotter_error(const PauliSumHamiltonian& h,
                         const std::function<Circuit(double)>& step_builder,
                         const std::vector<double>& dt_list) {
  require_cap(h.n_qubits, kPathCheckQubitCap, "trotter_error");
  if (dt_list.empty()) {
    throw std::invalid_argument("trotter_error: empty dt list");
  }
  TrotterFit fit;
  for (const double dt : dt_list) {
    const Circuit step = step_builder(dt);
    if (step.n_qubits != h.n_qubits) {
      throw std::invalid_argument(
          "trotter_error: step register size does not match the Hamiltonian");
    }
    const Mcd exact = exact_evolution(h, dt);
    const Mcd u = dense_of_circuit(step);
    // Trace alignment: the Frobenius-optimal global phase for u.
    const cplx tr = (u.adjoint() * exact).trace();
    const cplx ph = std::abs(tr) > 1e-12 ? tr / std::abs(tr) : cplx(1, 0);
    fit.errors.push_back(spectral_norm(exact - ph * u));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(dt_list.size());
  for (std::size_t i = 0; i < dt_list.size(); ++i) {
    const double x = std::log(dt_list[i]);
    const double y = std::log(std::max(fit.errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  fit.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  return fit;
}

}  // namespace pfg
