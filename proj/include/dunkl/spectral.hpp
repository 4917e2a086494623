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

#ifndef DUNKL_SPECTRAL_HPP
#define DUNKL_SPECTRAL_HPP

#include <string>
#include <vector>

#include "dunkl/operators.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Transition matrix of the reflection walk on subsets of [n] \ {i0}.  State H
// moves to H symmetric-difference {i} with weight k_i / sum(k) for i != i0,
// and to the complement of H with the weight of i0.
struct ReflectionMatrix {
  int n = 0;
  int i0 = 0;
  int order = 0;
  std::vector<std::vector<Rat>> entries;
};

// Requires n >= 3, sum(k) != 0, every k_i <= 0 with at most one zero, and
// k_i != 0 for every i != i0.  Throws std::invalid_argument otherwise.
ReflectionMatrix build_reflection_matrix(const Multiplicities& k, int i0);

// The subset of [n] \ {i0} encoded by a row index.
std::vector<int> state_subset(const ReflectionMatrix& M, int index);

struct PerronReport {
  bool symmetric = false;
  bool doubly_stochastic = false;
  bool irreducible = false;
  bool corank_one = false;
  long long rank = 0;
  bool ok() const { return symmetric && doubly_stochastic && irreducible && corank_one; }
};

// Exact verification that M is symmetric and doubly stochastic, that its
// nonzero pattern is connected, and that I - M has rank order - 1, so the
// eigenvalue 1 is simple with constant eigenvector.
PerronReport verify_perron(const ReflectionMatrix& M);

// Exact rank of a rational matrix by Gaussian elimination.
long long rational_rank(std::vector<std::vector<Rat>> rows);

}  // namespace dunkl

#endif  // DUNKL_SPECTRAL_HPP
