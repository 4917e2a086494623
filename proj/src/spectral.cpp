/*
 * Copyright (c) 2026, the dunkl project authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "dunkl/spectral.hpp"

#include <deque>
#include <stdexcept>

namespace dunkl {

ReflectionMatrix build_reflection_matrix(const Multiplicities& k, int i0) {
  const int n = k.n();
  if (n < 3) throw std::invalid_argument("build_reflection_matrix: need n >= 3");
  if (n > 12) throw std::invalid_argument("build_reflection_matrix: n too large");
  if (i0 < 1 || i0 > n)
    throw std::invalid_argument("build_reflection_matrix: i0 out of range");
  Rat total(0);
  int zeros = 0;
  for (int i = 1; i <= n; ++i) {
    if (k.at(i) > 0)
      throw std::invalid_argument("build_reflection_matrix: multiplicities must be <= 0");
    if (k.at(i) == 0) {
      ++zeros;
      if (i != i0)
        throw std::invalid_argument(
            "build_reflection_matrix: a zero multiplicity must sit at i0");
    }
    total += k.at(i);
  }
  if (zeros > 1)
    throw std::invalid_argument("build_reflection_matrix: more than one zero multiplicity");
  if (total == 0)
    throw std::invalid_argument("build_reflection_matrix: multiplicities sum to zero");

  std::vector<int> ground;
  for (int i = 1; i <= n; ++i)
    if (i != i0) ground.push_back(i);

  ReflectionMatrix M;
  M.n = n;
  M.i0 = i0;
  M.order = 1 << (n - 1);
  M.entries.assign(static_cast<std::size_t>(M.order),
                   std::vector<Rat>(static_cast<std::size_t>(M.order), Rat(0)));
  const unsigned full = static_cast<unsigned>(M.order - 1);
  for (unsigned h = 0; h < static_cast<unsigned>(M.order); ++h) {
    for (std::size_t b = 0; b < ground.size(); ++b) {
      unsigned to = h ^ (1u << b);
      M.entries[h][to] += k.at(ground[b]) / total;
    }
    M.entries[h][(~h) & full] += k.at(i0) / total;
  }
  return M;
}

std::vector<int> state_subset(const ReflectionMatrix& M, int index) {
  if (index < 0 || index >= M.order)
    throw std::invalid_argument("state_subset: index out of range");
  std::vector<int> ground;
  for (int i = 1; i <= M.n; ++i)
    if (i != M.i0) ground.push_back(i);
  std::vector<int> out;
  for (std::size_t b = 0; b < ground.size(); ++b)
    if (index & (1 << b)) out.push_back(ground[b]);
  return out;
}

long long rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  long long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[row][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] -= factor * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

PerronReport verify_perron(const ReflectionMatrix& M) {
  const std::size_t order = static_cast<std::size_t>(M.order);
  PerronReport rep;

  rep.symmetric = true;
  for (std::size_t i = 0; i < order && rep.symmetric; ++i)
    for (std::size_t j = 0; j < order; ++j)
      if (M.entries[i][j] != M.entries[j][i]) {
        rep.symmetric = false;
        break;
      }

  rep.doubly_stochastic = true;
  for (std::size_t i = 0; i < order && rep.doubly_stochastic; ++i) {
    Rat rsum(0), csum(0);
    for (std::size_t j = 0; j < order; ++j) {
      rsum += M.entries[i][j];
      csum += M.entries[j][i];
      if (M.entries[i][j] < 0) rep.doubly_stochastic = false;
    }
    if (rsum != 1 || csum != 1) rep.doubly_stochastic = false;
  }

  std::vector<bool> seen(order, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < order; ++j)
      if (!seen[j] && M.entries[at][j] != 0) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  rep.irreducible = true;
  for (bool s : seen)
    if (!s) rep.irreducible = false;

  std::vector<std::vector<Rat>> shifted(order,
                                        std::vector<Rat>(order, Rat(0)));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      shifted[i][j] = Rat(i == j ? 1 : 0) - M.entries[i][j];
  rep.rank = rational_rank(std::move(shifted));
  rep.corank_one = rep.rank == M.order - 1;
  return rep;
}

}  // namespace dunkl
