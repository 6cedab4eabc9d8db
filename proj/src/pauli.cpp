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

#include "pfg/pauli.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pfg {

namespace {

constexpr char kLetterOf[4] = {'I', 'X', 'Z', 'Y'};

// Rank of each local code under dense-text ordering I < X < Y < Z.
constexpr int kDenseRank[4] = {0, 1, 3, 2};

std::uint8_t code_of_letter(char c) {
  switch (c) {
    case 'I':
      return kLocalI;
    case 'X':
      return kLocalX;
    case 'Y':
      return kLocalY;
    case 'Z':
      return kLocalZ;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + c +
                                  "'");
  }
}

}  // namespace

PauliString PauliString::single(std::size_t n_qubits, std::size_t q,
                                std::uint8_t letter) {
  PauliString p(n_qubits);
  p.set_local(q, letter);
  return p;
}

int symplectic_form(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("symplectic_form: register size mismatch");
  return static_cast<int>((BitVec::and_count(p.x, q.z) +
                           BitVec::and_count(p.z, q.x)) &
                          1);
}

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("multiply: register size mismatch");
  // Writing each factor as i^{x.z} X^x Z^z and commuting X^{x_b} through
  // Z^{z_a} gives the product phase
  //   i^{x_a.z_a + x_b.z_b - x_c.z_c + 2 z_a.x_b},  c = a + b,
  // with -1 == 3 (mod 4).
  SignedPauli out(a.pauli ^ b.pauli,
                  static_cast<std::uint8_t>(a.phase_exp + b.phase_exp));
  std::size_t phase = BitVec::and_count(a.pauli.x, a.pauli.z) +
                      BitVec::and_count(b.pauli.x, b.pauli.z) +
                      3 * BitVec::and_count(out.pauli.x, out.pauli.z) +
                      2 * BitVec::and_count(a.pauli.z, b.pauli.x);
  out.phase_exp = static_cast<std::uint8_t>((out.phase_exp + phase) & 3);
  return out;
}

SignedPauli parse_pauli(const std::string& text, std::size_t n_qubits) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;

  std::uint8_t phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  // Lowercase 'i' is never a Pauli letter, so a leading one is always the
  // imaginary-unit prefix.
  if (pos < text.size() && text[pos] == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) & 3);
    ++pos;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;

  const std::string body = text.substr(pos);
  const bool sparse = body.find_first_of("0123456789") != std::string::npos;

  if (!sparse) {
    std::string letters;
    for (char c : body) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      letters.push_back(c);
    }
    if (letters.empty() && n_qubits == 0)
      throw std::invalid_argument("parse_pauli: empty Pauli text");
    const std::size_t n = n_qubits ? n_qubits : letters.size();
    if (!letters.empty() && letters.size() != n)
      throw std::invalid_argument("parse_pauli: dense string length " +
                                  std::to_string(letters.size()) +
                                  " does not match register size " +
                                  std::to_string(n));
    SignedPauli p(n);
    p.phase_exp = phase;
    for (std::size_t q = 0; q < letters.size(); ++q)
      p.pauli.set_local(q, code_of_letter(letters[q]));
    return p;
  }

  // Sparse form: whitespace-separated <letter><index> tokens.
  std::vector<std::pair<std::size_t, std::uint8_t>> entries;
  std::size_t max_index = 0;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2)
      throw std::invalid_argument("parse_pauli: malformed token '" + tok + "'");
    const std::uint8_t code = code_of_letter(tok[0]);
    std::size_t idx_end = 0;
    std::size_t q = 0;
    try {
      q = std::stoul(tok.substr(1), &idx_end);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_pauli: bad qubit index in '" + tok +
                                  "'");
    }
    if (idx_end + 1 != tok.size())
      throw std::invalid_argument("parse_pauli: trailing characters in '" +
                                  tok + "'");
    if (code == kLocalI)
      throw std::invalid_argument("parse_pauli: indexed identity '" + tok +
                                  "' is not allowed");
    entries.emplace_back(q, code);
    max_index = std::max(max_index, q);
  }
  const std::size_t n = n_qubits ? n_qubits : max_index + 1;
  SignedPauli p(n);
  p.phase_exp = phase;
  for (const auto& [q, code] : entries) {
    if (q >= n)
      throw std::invalid_argument("parse_pauli: qubit index " +
                                  std::to_string(q) + " out of range for " +
                                  std::to_string(n) + " qubits");
    if (p.pauli.local(q) != kLocalI)
      throw std::invalid_argument("parse_pauli: duplicate qubit index " +
                                  std::to_string(q));
    p.pauli.set_local(q, code);
  }
  return p;
}

std::string format_pauli(const PauliString& p, PauliFormat fmt) {
  std::string out;
  if (fmt == PauliFormat::kDense) {
    out.reserve(p.num_qubits());
    for (std::size_t q = 0; q < p.num_qubits(); ++q)
      out.push_back(kLetterOf[p.local(q)]);
    return out;
  }
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    const std::uint8_t code = p.local(q);
    if (code == kLocalI) continue;
    if (!out.empty()) out.push_back(' ');
    out.push_back(kLetterOf[code]);
    out += std::to_string(q);
  }
  return out;  // identity formats as the empty token list
}

std::string format_pauli(const SignedPauli& p, PauliFormat fmt) {
  static const char* kSign[4] = {"", "i", "-", "-i"};
  return kSign[p.phase_exp & 3] + format_pauli(p.pauli, fmt);
}

bool dense_less(const PauliString& a, const PauliString& b) {
  const std::size_t n = std::min(a.num_qubits(), b.num_qubits());
  for (std::size_t q = 0; q < n; ++q) {
    const int ra = kDenseRank[a.local(q)];
    const int rb = kDenseRank[b.local(q)];
    if (ra != rb) return ra < rb;
  }
  return a.num_qubits() < b.num_qubits();
}

}  // namespace pfg
