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

// The differential and differential-difference operators of the calculus:
// Cauchy-Riemann and Laplace operators, the spherical Dirac operator, the
// Dunkl operators T_i with their Dirac and Cauchy-Riemann combinations over
// subsets A and partitions P, the Casimir operator S_A with its companions
// S'_A, S''_A, and the Dunkl Laplacian. All of them map Poly to Poly
// exactly; composition is eager.

#ifndef DUNKL_OPERATORS_HPP
#define DUNKL_OPERATORS_HPP

#include <functional>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

// Dunkl multiplicities k_1..k_n attached to the frame directions.
struct Multiplicities {
  std::vector<Rat> k;

  int n() const { return static_cast<int>(k.size()); }
  const Rat& at(int i) const { return k.at(i - 1); }  // 1-based
};

Multiplicities zero_multiplicities(int n);

// kappa = sum_i k_i and gamma_A = |A|/2 + sum_{i in A} k_i.
Rat kappa(const Multiplicities& k);
Rat gamma_A(const Multiplicities& k, const std::vector<int>& A);

// Cauchy-Riemann operator d/dx_0 + sum_i v_i d/dx_i, its conjugate, and
// the flat Laplacian over all n+1 variables.
Poly cauchy_riemann(const Poly& f);
Poly conj_cauchy_riemann(const Poly& f);
Poly laplacian(const Poly& f);

// Spherical Dirac operator
//   Gamma f = - sum_{i<j} v_i (v_j (x_i d_j - x_j d_i) f),
// with the nesting preserved exactly as written.
Poly gamma_spherical(const Poly& f);

// x-multiplied forms of theta-bar and theta: x d_0 f -+ E f with E the
// Euler operator over the imaginary variables. The first vanishes exactly
// when theta-bar f = 0 away from the real axis.
Poly thetabar_mult(const Poly& f);
Poly theta_mult(const Poly& f);

// Dunkl operator T_i f = d_i f + k_i (f - r_i f)/x_i. The difference part
// is odd in x_i, so the division is always exact.
Poly dunkl_T(const Multiplicities& k, int i, const Poly& f);

// Dunkl Dirac over A and the associated Cauchy-Riemann operator
//   D_A = d_0 + sum_{j not in A} v_j d_j + sum_{i in A} v_i T_i.
Poly dunkl_dirac_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);
Poly dunkl_CR_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

// Casimir operator S_A f = (x_A (D_A f) - D_A (x_A f) - f)/2; S_empty is
// multiplication by -1/2. When gamma_A = 1/2 it collapses to
// x_A D_A + E_A.
Poly casimir_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

// S~_A f = sum_{i in A} k_i (f - r_i f); S'_A applies it to the
// A-spherical value, S''_A to the weighted value of x_A f.
Poly s_tilde_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);
Poly s_prime_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);
Poly s_dprime_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

struct STriple {
  Poly S, Sprime, Sdprime;
  bool all_zero() const {
    return S.is_zero() && Sprime.is_zero() && Sdprime.is_zero();
  }
};

// The triple (S_A, S'_A, S''_A) whose joint kernel is the A-sliceness
// condition.
STriple script_S_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

// Gamma~_A = S_A composed with the reflection over all of A; it has the
// same kernel as S_A.
Poly gamma_tilde_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

// Partition versions: D_P = d_0 + sum_blocks Dunkl Dirac, and the list of
// per-block triples.
Poly dunkl_CR_P(const Multiplicities& k,
                const std::vector<std::vector<int>>& blocks, const Poly& f);
std::vector<STriple> script_S_P(const Multiplicities& k,
                                const std::vector<std::vector<int>>& blocks,
                                const Poly& f);

// Dunkl Laplacian d_0^2 + sum_i T_i^2, and the imaginary-only part
// sum_{i in A} T_i^2 that enters the osp(1|2) relations.
Poly dunkl_laplacian(const Multiplicities& k, const Poly& f);
Poly dunkl_laplacian_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);

// The integral rewriting of the full Dunkl-Cauchy-Riemann operator:
//   dbar f + 2 sum_i k_i v_i int_0^1 (d_i f)(x - 2 t x_i v_i) dt,
// integrated monomial-wise ((1-2t)^m has integral 1/(m+1) for even m and 0
// for odd m). Agrees with dunkl_CR_A over the full set by construction of
// the difference quotient.
Poly integral_form_D(const Multiplicities& k, const Poly& f);

// Helpers for operator-identity tests.
using PolyOp = std::function<Poly(const Poly&)>;
Poly commutator(const PolyOp& a, const PolyOp& b, const Poly& f);
Poly anticommutator(const PolyOp& a, const PolyOp& b, const Poly& f);

}  // namespace dunkl

#endif  // DUNKL_OPERATORS_HPP
