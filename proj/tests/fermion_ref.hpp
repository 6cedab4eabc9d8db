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
//
// Canonical occupation-basis ladder operators and basis permutations, written
// directly from first principles so the mapped Pauli operators can be checked
// against an independent construction.

#pragma once

#include <cstddef>

#include "dense_ref.hpp"

namespace fermion_ref {

using dense_ref::Mat;

// a_j on the occupation basis: mode 0 owns the most significant index bit.
// a_j |n_0 ... n_{m-1}> = (-1)^{n_0 + ... + n_{j-1}} [n_j = 1] |... n_j=0 ...>
inline Mat annihilation(std::size_t n_modes, std::size_t j) {
  const std::size_t dim = std::size_t{1} << n_modes;
  Mat m = dense_ref::zeros(dim);
  const std::size_t bit = std::size_t{1} << (n_modes - 1 - j);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (!(idx & bit)) continue;
    int parity = 0;
    for (std::size_t k = 0; k < j; ++k) {
      parity ^= static_cast<int>((idx >> (n_modes - 1 - k)) & 1);
    }
    m[idx ^ bit][idx] = parity ? -1.0 : 1.0;
  }
  return m;
}

inline Mat creation(std::size_t n_modes, std::size_t j) {
  return dense_ref::dagger(annihilation(n_modes, j));
}

inline Mat number_op(std::size_t n_modes, std::size_t j) {
  return dense_ref::mul(creation(n_modes, j), annihilation(n_modes, j));
}

// Index of the parity-encoded basis state: bit j stores the parity of the
// occupations in the window [j+1-lowbit(j+1), j].
inline std::size_t parity_tree_index(std::size_t n_modes, std::size_t occ) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < n_modes; ++j) {
    const std::size_t low = (j + 1) & ~j;
    int parity = 0;
    for (std::size_t k = j + 1 - low; k <= j; ++k) {
      parity ^= static_cast<int>((occ >> (n_modes - 1 - k)) & 1);
    }
    if (parity) out |= std::size_t{1} << (n_modes - 1 - j);
  }
  return out;
}

// Permutation matrix T with T |occ> = |parity_tree_index(occ)>.
inline Mat parity_tree_permutation(std::size_t n_modes) {
  const std::size_t dim = std::size_t{1} << n_modes;
  Mat t = dense_ref::zeros(dim);
  for (std::size_t occ = 0; occ < dim; ++occ) {
    t[parity_tree_index(n_modes, occ)][occ] = 1.0;
  }
  return t;
}

// T A T^-1 for the permutation above (T is real orthogonal).
inline Mat to_parity_tree_basis(std::size_t n_modes, const Mat& a) {
  const Mat t = parity_tree_permutation(n_modes);
  return dense_ref::mul(t, dense_ref::mul(a, dense_ref::dagger(t)));
}

// Traceless part: A - tr(A)/dim * I.
inline Mat traceless(const Mat& a) {
  dense_ref::cplx tr = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tr += a[i][i];
  Mat out = a;
  const dense_ref::cplx shift = tr / static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i][i] -= shift;
  return out;
}

}  // namespace fermion_ref
