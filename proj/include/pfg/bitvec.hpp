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

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pfg {

/**
 * Fixed-length vector over GF(2), packed into 64-bit words.
 *
 * All arithmetic is word-parallel; the tail word keeps its unused high bits
 * at zero so that equality, popcounts and hashes can work on raw words.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n_bits)
      : n_(n_bits), w_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i, bool v) {
    assert(i < n_);
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= m;
    } else {
      w_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  BitVec& operator^=(const BitVec& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  /// popcount(a & b) without materializing the intermediate vector.
  static std::size_t and_count(const BitVec& a, const BitVec& b) {
    assert(a.n_ == b.n_);
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      c += std::popcount(a.w_[k] & b.w_[k]);
    return c;
  }

  /// popcount(a | b), the joint support size of two masks.
  static std::size_t or_count(const BitVec& a, const BitVec& b) {
    assert(a.n_ == b.n_);
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      c += std::popcount(a.w_[k] | b.w_[k]);
    return c;
  }

  /**
   * Index of the first set bit at position >= from in (this | other), or
   * size() when there is none. Used to walk the joint support of paired
   * masks without allocating.
   */
  std::size_t next_or_bit(const BitVec& other, std::size_t from) const {
    assert(n_ == other.n_);
    if (from >= n_) return n_;
    std::size_t k = from >> 6;
    std::uint64_t w = (w_[k] | other.w_[k]) >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (++k; k < w_.size(); ++k) {
      w = w_[k] | other.w_[k];
      if (w) return (k << 6) + std::countr_zero(w);
    }
    return n_;
  }

  bool operator==(const BitVec& o) const = default;

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace pfg
