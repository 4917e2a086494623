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

#ifndef DUNKL_SELFTEST_HPP
#define DUNKL_SELFTEST_HPP

#include <random>
#include <string>
#include <vector>

#include "dunkl/algebra.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

// Seeded generator for reproducible random inputs.  Draws go through
// explicit modulo reduction of the raw 64-bit stream, so a seed produces
// the same values on every platform.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  long pick(long lo, long hi);  // uniform on [lo, hi]
  Rat small_rat(long max_abs = 3, long max_den = 2);
  Element element(const AlgebraTable* tab, long max_abs = 2);
  Element nonzero_element(const AlgebraTable* tab, long max_abs = 2);
  std::vector<Rat> point(int n, long max_abs = 3, long max_den = 3);

  // Random polynomial with at most `terms` monomials of total degree
  // <= max_degree and algebra-valued coefficients.
  Poly poly(const Frame& frame, int max_degree, int terms, long max_abs = 2);
  // Real-coefficient polynomial supported on the given variables (x_0
  // included when use_x0 is set).
  Poly real_poly_on(const Frame& frame, const std::vector<int>& vars, bool use_x0,
                    int max_degree, int terms);
  // Sum of x_0^m x_^ell a pieces with m + ell <= max_degree.
  Poly slice_poly(const Frame& frame, int max_degree, int terms);
  // Sum_j x^j a_j with degree <= max_degree; the drawn coefficients are
  // appended to *coeffs when given.
  Poly slice_regular_poly(const Frame& frame, int max_degree,
                          std::vector<Element>* coeffs = nullptr);

 private:
  std::mt19937_64 eng_;
};

// Deterministic pool of members of the A-indexed regular space: the
// sub-frame slice powers, the paravector variables outside A paired with
// their units, symmetrized pairs of those, and (in associative algebras)
// right-scaled copies.  Every returned polynomial passes membership_A
// with the default A-admissible multiplicities.
std::vector<Poly> regular_member_pool(Rng& rng, const Frame& frame,
                                      const std::vector<int>& A, int count);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
};

// Runs every acceptance criterion whose name contains `filter` (all when
// empty) with reproducible seeding.
AcceptanceReport run_acceptance(const std::string& filter = std::string(),
                                unsigned long long seed = 20260818ULL);

}  // namespace dunkl

#endif  // DUNKL_SELFTEST_HPP
