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

#include "pfg/ham.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pfg {
namespace {

constexpr std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

double parse_double_token(const std::string& tok, bool* ok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  *ok = end == begin + tok.size() && !tok.empty();
  return value;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// PauliAccum

void PauliAccum::add(const PauliString& body, std::complex<double> coeff) {
  if (coeff == 0.0) return;
  auto [it, inserted] = map_.try_emplace(body, coeff);
  if (!inserted) it->second += coeff;
}

void PauliAccum::add(const SignedPauli& p, std::complex<double> coeff) {
  add(p.pauli, coeff * kIPow[p.phase_exp & 3]);
}

void PauliAccum::add(const PauliAccum& other, std::complex<double> scale) {
  for (const auto& [body, coeff] : other.map_) add(body, coeff * scale);
}

PauliAccum product(const PauliAccum& lhs, const PauliAccum& rhs) {
  PauliAccum out(lhs.n_qubits_);
  for (const auto& [pa, ca] : lhs.map_) {
    for (const auto& [pb, cb] : rhs.map_) {
      out.add(multiply(SignedPauli(pa, 0), SignedPauli(pb, 0)), ca * cb);
    }
  }
  return out;
}

PauliSumHamiltonian PauliAccum::finish(double drop_threshold) const {
  PauliSumHamiltonian h;
  h.n_qubits = n_qubits_;
  for (const auto& [body, coeff] : map_) {
    if (std::abs(coeff.imag()) >= kHermiticityTolerance) {
      throw std::runtime_error(
          "non-Hermitian Pauli accumulation: imaginary coefficient " +
          std::to_string(coeff.imag()) + " on " + format_pauli(body));
    }
    if (body.is_identity()) continue;
    if (std::abs(coeff.real()) < drop_threshold) continue;
    h.terms.push_back({coeff.real(), body});
  }
  std::sort(h.terms.begin(), h.terms.end(),
            [](const HamTerm& a, const HamTerm& b) {
              return dense_less(a.pauli, b.pauli);
            });
  return h;
}

// ---------------------------------------------------------------------------
// Fermion mappings

std::vector<std::size_t> bk_update_set(std::size_t mode, std::size_t n_modes) {
  std::vector<std::size_t> out;
  for (std::size_t k = mode | (mode + 1); k < n_modes; k |= k + 1) {
    out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> bk_parity_set(std::size_t mode) {
  std::vector<std::size_t> out;
  for (std::size_t t = mode; t != 0; t &= t - 1) out.push_back(t - 1);
  return out;
}

std::vector<std::size_t> bk_flip_set(std::size_t mode) {
  std::vector<std::size_t> out;
  const std::size_t low = (mode + 1) & ~mode;  // lowest set bit of mode+1
  for (std::size_t p = 1; p < low; p <<= 1) out.push_back(mode - p);
  return out;
}

PauliAccum annihilation_image(std::size_t mode, std::size_t n_modes,
                              FermionMapping mapping) {
  if (mode >= n_modes) throw std::invalid_argument("mode index out of range");
  PauliAccum out(n_modes);
  PauliString real_part(n_modes);  // the a + a' combination
  PauliString imag_part(n_modes);  // the i(a - a') combination carrier
  if (mapping == FermionMapping::kJordanWigner) {
    for (std::size_t k = 0; k < mode; ++k) {
      real_part.set_local(k, kLocalZ);
      imag_part.set_local(k, kLocalZ);
    }
    real_part.set_local(mode, kLocalX);
    imag_part.set_local(mode, kLocalY);
  } else {
    const auto update = bk_update_set(mode, n_modes);
    const auto parity = bk_parity_set(mode);
    auto flip = bk_flip_set(mode);
    std::sort(flip.begin(), flip.end());
    for (std::size_t k : update) {
      real_part.set_local(k, kLocalX);
      imag_part.set_local(k, kLocalX);
    }
    real_part.set_local(mode, kLocalX);
    imag_part.set_local(mode, kLocalY);
    for (std::size_t k : parity) {
      real_part.set_local(k, kLocalZ);
      if (!std::binary_search(flip.begin(), flip.end(), k)) {
        imag_part.set_local(k, kLocalZ);  // remainder set: parity minus flip
      }
    }
  }
  out.add(real_part, {0.5, 0.0});
  out.add(imag_part, {0.0, 0.5});
  return out;
}

PauliAccum map_ladder_term(const LadderTerm& term, FermionMapping mapping,
                           std::size_t n_modes) {
  PauliAccum acc(n_modes);
  acc.add(PauliString(n_modes), {term.coefficient, 0.0});
  for (const LadderFactor& f : term.factors) {
    PauliAccum img = annihilation_image(f.mode, n_modes, mapping);
    if (f.dagger) {
      PauliAccum conj(n_modes);
      for (const auto& [body, coeff] : img.entries()) {
        conj.add(body, std::conj(coeff));
      }
      img = conj;
    }
    acc = product(acc, img);
  }
  return acc;
}

PauliAccum jordan_wigner(const LadderTerm& term, std::size_t n_modes) {
  return map_ladder_term(term, FermionMapping::kJordanWigner, n_modes);
}

PauliAccum bravyi_kitaev(const LadderTerm& term, std::size_t n_modes) {
  return map_ladder_term(term, FermionMapping::kBravyiKitaev, n_modes);
}

PauliSumHamiltonian fermi_hubbard(std::size_t n_sites, double t, double u,
                                  FermionMapping mapping, bool periodic) {
  if (n_sites < 2) {
    throw std::invalid_argument("fermi_hubbard requires at least two sites");
  }
  const std::size_t n_modes = 2 * n_sites;
  PauliAccum acc(n_modes);
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < n_sites; ++i) bonds.emplace_back(i, i + 1);
  // The two-site ring would repeat the single bond; emit it once.
  if (periodic && n_sites > 2) bonds.emplace_back(n_sites - 1, 0);
  for (const auto& [i, j] : bonds) {
    for (std::size_t spin = 0; spin < 2; ++spin) {
      const std::size_t mi = 2 * i + spin;
      const std::size_t mj = 2 * j + spin;
      acc.add(map_ladder_term({-t, {{mi, true}, {mj, false}}}, mapping, n_modes));
      acc.add(map_ladder_term({-t, {{mj, true}, {mi, false}}}, mapping, n_modes));
    }
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    const std::size_t up = 2 * i;
    const std::size_t dn = 2 * i + 1;
    acc.add(map_ladder_term(
        {u, {{up, true}, {up, false}, {dn, true}, {dn, false}}}, mapping,
        n_modes));
  }
  return acc.finish();
}

// ---------------------------------------------------------------------------
// Boson encodings

std::size_t qubits_per_mode(const BosonEncoding& enc) {
  if (enc.levels < 2 || (enc.levels & (enc.levels - 1)) != 0) {
    throw std::invalid_argument("boson level count must be a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(enc.levels));
}

std::size_t encoded_level(const BosonEncoding& enc, std::size_t level) {
  if (level >= enc.levels) throw std::invalid_argument("level out of range");
  return enc.kind == BosonCode::kGray ? level ^ (level >> 1) : level;
}

Eigen::MatrixXcd boson_annihilation(std::size_t levels) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
  for (std::size_t l = 1; l < levels; ++l) {
    a(l - 1, l) = std::sqrt(static_cast<double>(l));
  }
  return a;
}

Eigen::MatrixXcd boson_position(std::size_t levels) {
  const Eigen::MatrixXcd a = boson_annihilation(levels);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

Eigen::MatrixXcd boson_momentum(std::size_t levels) {
  const Eigen::MatrixXcd a = boson_annihilation(levels);
  return std::complex<double>(0.0, 1.0) * (a.adjoint() - a) / std::sqrt(2.0);
}

namespace {

// Entry (r, c) of the single-qubit Pauli with the given local code.
std::complex<double> pauli1_entry(int code, int r, int c) {
  switch (code) {
    case kLocalI: return r == c ? 1.0 : 0.0;
    case kLocalX: return r != c ? 1.0 : 0.0;
    case kLocalZ: return r == c ? (r == 0 ? 1.0 : -1.0) : 0.0;
    default:  // kLocalY
      if (r == c) return 0.0;
      return r == 0 ? std::complex<double>(0.0, -1.0)
                    : std::complex<double>(0.0, 1.0);
  }
}

}  // namespace

PauliAccum encode_mode_operator(const Eigen::MatrixXcd& op,
                                const BosonEncoding& enc, std::size_t mode,
                                std::size_t n_modes) {
  const std::size_t d = enc.levels;
  const std::size_t nq = qubits_per_mode(enc);
  if (op.rows() != static_cast<Eigen::Index>(d) ||
      op.cols() != static_cast<Eigen::Index>(d)) {
    throw std::invalid_argument("operator dimension does not match encoding");
  }
  if (mode >= n_modes) throw std::invalid_argument("mode index out of range");

  Eigen::MatrixXcd op_enc = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      op_enc(encoded_level(enc, k), encoded_level(enc, l)) = op(k, l);
    }
  }

  PauliAccum out(n_modes * nq);
  const std::size_t n_codes = std::size_t{1} << (2 * nq);
  for (std::size_t code = 0; code < n_codes; ++code) {
    std::complex<double> trace = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (op_enc(c, r) == 0.0) continue;
        std::complex<double> entry = 1.0;
        for (std::size_t t = 0; t < nq && entry != 0.0; ++t) {
          const int letter = static_cast<int>((code >> (2 * (nq - 1 - t))) & 3);
          entry *= pauli1_entry(letter, (r >> (nq - 1 - t)) & 1,
                                (c >> (nq - 1 - t)) & 1);
        }
        trace += entry * op_enc(c, r);
      }
    }
    const std::complex<double> coeff = trace / static_cast<double>(d);
    if (coeff == 0.0) continue;
    PauliString body(n_modes * nq);
    for (std::size_t t = 0; t < nq; ++t) {
      body.set_local(mode * nq + t,
                     static_cast<int>((code >> (2 * (nq - 1 - t))) & 3));
    }
    out.add(body, coeff);
  }
  return out;
}

PauliAccum bosonic_matrix_to_paulis(const Eigen::MatrixXcd& op,
                                    const BosonEncoding& enc) {
  if (op.rows() != op.cols() ||
      op.rows() != static_cast<Eigen::Index>(enc.levels)) {
    throw std::invalid_argument("operator dimension does not match encoding");
  }
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTolerance) {
    throw std::invalid_argument("bosonic operator is not Hermitian");
  }
  return encode_mode_operator(op, enc, 0, 1);
}

PauliSumHamiltonian bose_hubbard(std::size_t n_sites, double t, double u,
                                 const BosonEncoding& enc) {
  if (n_sites < 2) {
    throw std::invalid_argument("bose_hubbard requires at least two sites");
  }
  const std::size_t d = enc.levels;
  const Eigen::MatrixXcd b = boson_annihilation(d);
  const Eigen::MatrixXcd num = b.adjoint() * b;
  const Eigen::MatrixXcd interaction =
      num * (num - Eigen::MatrixXcd::Identity(d, d));

  PauliAccum acc(n_sites * qubits_per_mode(enc));
  std::vector<PauliAccum> frag_b;
  std::vector<PauliAccum> frag_bd;
  for (std::size_t i = 0; i < n_sites; ++i) {
    frag_b.push_back(encode_mode_operator(b, enc, i, n_sites));
    frag_bd.push_back(encode_mode_operator(b.adjoint(), enc, i, n_sites));
  }

  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < n_sites; ++i) bonds.emplace_back(i, i + 1);
  if (n_sites > 2) bonds.emplace_back(n_sites - 1, 0);  // ring closure
  for (const auto& [i, j] : bonds) {
    acc.add(product(frag_bd[i], frag_b[j]), -t);
    acc.add(product(frag_bd[j], frag_b[i]), -t);
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    acc.add(encode_mode_operator(interaction, enc, i, n_sites), u);
  }
  return acc.finish();
}

// ---------------------------------------------------------------------------
// Vibronic model

namespace {

class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {  // in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

VibronicParameters sample_vibronic_parameters(std::size_t n_modes,
                                              std::uint64_t seed) {
  if (n_modes < 2) {
    throw std::invalid_argument("vibronic model requires at least two modes");
  }
  SeededSampler rng(seed);
  VibronicParameters par;
  const Eigen::Index m = static_cast<Eigen::Index>(n_modes);
  par.omega_a.resize(m);
  par.omega_b.resize(m);
  par.delta.resize(m);
  for (Eigen::Index k = 0; k < m; ++k) par.omega_a(k) = rng.uniform(0.5, 1.5);
  for (Eigen::Index k = 0; k < m; ++k) par.omega_b(k) = rng.uniform(0.5, 1.5);
  for (Eigen::Index k = 0; k < m; ++k) par.delta(k) = rng.uniform(-0.1, 0.1);

  Eigen::MatrixXd g(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) g(r, c) = rng.gaussian();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < m; ++k) {
    if (r(k, k) < 0.0) q.col(k) *= -1.0;  // unique QR: positive R diagonal
  }
  par.s = q;
  return par;
}

PauliSumHamiltonian vibronic_from_parameters(const VibronicParameters& par,
                                             const BosonEncoding& enc) {
  const Eigen::Index m = par.s.rows();
  if (par.s.cols() != m || par.omega_a.size() != m ||
      par.omega_b.size() != m || par.delta.size() != m || m < 1) {
    throw std::invalid_argument("inconsistent vibronic parameter shapes");
  }
  for (Eigen::Index k = 0; k < m; ++k) {
    if (par.omega_a(k) <= 0.0 || par.omega_b(k) <= 0.0) {
      throw std::invalid_argument("vibronic frequencies must be positive");
    }
  }

  // q_B = Mq q_A + delta and p_B = Mp p_A for the sampled Duschinsky data.
  Eigen::MatrixXd mq(m, m);
  Eigen::MatrixXd mp(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const double ratio = std::sqrt(par.omega_b(j) / par.omega_a(k));
      mq(j, k) = par.s(j, k) * ratio;
      mp(j, k) = par.s(j, k) / ratio;
    }
  }
  const Eigen::MatrixXd d_omega = par.omega_b.asDiagonal();
  const Eigen::MatrixXd qquad = mq.transpose() * d_omega * mq;
  const Eigen::MatrixXd pquad = mp.transpose() * d_omega * mp;
  const Eigen::VectorXd linear = mq.transpose() * d_omega * par.delta;

  const std::size_t d = enc.levels;
  const std::size_t n_modes = static_cast<std::size_t>(m);
  const Eigen::MatrixXcd qmat = boson_position(d);
  const Eigen::MatrixXcd pmat = boson_momentum(d);
  const Eigen::MatrixXcd q2 = qmat * qmat;
  const Eigen::MatrixXcd p2 = pmat * pmat;

  PauliAccum acc(n_modes * qubits_per_mode(enc));
  std::vector<PauliAccum> frag_q;
  std::vector<PauliAccum> frag_p;
  for (std::size_t k = 0; k < n_modes; ++k) {
    frag_q.push_back(encode_mode_operator(qmat, enc, k, n_modes));
    frag_p.push_back(encode_mode_operator(pmat, enc, k, n_modes));
  }

  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::MatrixXcd diag_block =
        0.5 * qquad(k, k) * q2 + 0.5 * pquad(k, k) * p2 + linear(k) * qmat;
    acc.add(encode_mode_operator(diag_block, enc, static_cast<std::size_t>(k),
                                 n_modes));
    for (Eigen::Index l = k + 1; l < m; ++l) {
      acc.add(product(frag_q[k], frag_q[l]), qquad(k, l));
      acc.add(product(frag_p[k], frag_p[l]), pquad(k, l));
    }
  }
  return acc.finish();
}

PauliSumHamiltonian vibronic(std::size_t n_modes, const BosonEncoding& enc,
                             std::uint64_t seed) {
  return vibronic_from_parameters(sample_vibronic_parameters(n_modes, seed),
                                  enc);
}

// ---------------------------------------------------------------------------
// Text format

PauliSumHamiltonian parse_hamiltonian_text(const std::string& text,
                                           double drop_threshold) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n_qubits = 0;
  PauliAccum acc(0);
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    if (!have_header) {
      std::istringstream ls(line);
      std::string keyword, count, extra;
      ls >> keyword >> count;
      if (keyword != "qubits" || count.empty() || (ls >> extra)) {
        parse_fail(line_no, "expected 'qubits N' header");
      }
      bool ok = false;
      const double n = parse_double_token(count, &ok);
      if (!ok || n < 1 || n != std::floor(n)) {
        parse_fail(line_no, "qubit count must be a positive integer");
      }
      n_qubits = static_cast<std::size_t>(n);
      acc = PauliAccum(n_qubits);
      have_header = true;
      continue;
    }

    const auto split = line.find_first_of(" \t");
    if (split == std::string::npos) {
      parse_fail(line_no, "expected '<coefficient> <pauli>'");
    }
    const std::string coeff_tok = line.substr(0, split);
    bool ok = false;
    const double coeff = parse_double_token(coeff_tok, &ok);
    if (!ok) parse_fail(line_no, "malformed coefficient '" + coeff_tok + "'");
    const auto body_at = line.find_first_not_of(" \t", split);
    SignedPauli p(n_qubits);
    try {
      p = parse_pauli(line.substr(body_at), n_qubits);
    } catch (const std::exception& e) {
      parse_fail(line_no, e.what());
    }
    acc.add(p, coeff);
  }
  if (!have_header) {
    throw std::runtime_error("missing 'qubits N' header line");
  }
  return acc.finish(drop_threshold);
}

std::string format_hamiltonian_text(const PauliSumHamiltonian& h) {
  std::string out = "qubits " + std::to_string(h.n_qubits) + "\n";
  char buf[64];
  for (const HamTerm& term : h.terms) {
    std::snprintf(buf, sizeof buf, "%.17g", term.coefficient);
    out += buf;
    out += ' ';
    out += format_pauli(term.pauli, PauliFormat::kDense);
    out += '\n';
  }
  return out;
}

PauliSumHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hamiltonian_text(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_hamiltonian(const PauliSumHamiltonian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << format_hamiltonian_text(h);
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace pfg
