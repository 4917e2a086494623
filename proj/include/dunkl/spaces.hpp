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

// Partition-indexed function spaces and their decision procedures: slice
// and slice-regular polynomials over the full frame, the A-indexed and
// partition-indexed Dunkl-regular memberships, the multiplicity
// independence and permutation transport of the classification, partition
// enumeration, and the block-wise slice components.

#ifndef DUNKL_SPACES_HPP
#define DUNKL_SPACES_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dunkl/operators.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

// A set partition of {1..n} with an attached multiplicity sequence.
// Blocks are canonical: each sorted ascending, blocks ordered by minimum.
// Admissible means k_i <= 0 for all i, per block 2 sum_{i in A} k_i =
// 1 - |A|, and per block at most one k_i = 0.
struct PartitionSpec {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  Multiplicities k;
  bool admissible = false;
};

// Canonicalizes and validates; the one-argument form attaches the default
// multiplicities. Throws std::invalid_argument on a non-partition.
PartitionSpec make_partition(int n, std::vector<std::vector<int>> blocks);
PartitionSpec make_partition(int n, std::vector<std::vector<int>> blocks,
                             Multiplicities k);

// Default admissible choice k_i = -1/2 + 1/(2|A_j|) for i in A_j, and a
// second admissible choice (first index of each non-singleton block gets
// 0, the rest share the block sum) used to exercise multiplicity
// independence.
Multiplicities default_multiplicities(int n, const std::vector<std::vector<int>>& blocks);
Multiplicities second_multiplicities(int n, const std::vector<std::vector<int>>& blocks);
bool is_admissible(const std::vector<std::vector<int>>& blocks, const Multiplicities& k);

// Admissibility of k for the single block A: k_i <= 0 on A, at most one
// zero in A, and gamma_A = 1/2.
bool is_admissible_A(const std::vector<int>& A, const Multiplicities& k);
Multiplicities default_multiplicities_A(int n, const std::vector<int>& A);

// Membership answer with the nonzero operator outputs as evidence. A
// false verdict always carries at least one witness.
struct Verdict {
  bool member = true;
  std::vector<std::pair<std::string, Poly>> witnesses;
};

// Slice polynomials: kernel of the Casimir operator over the full frame
// with default admissible multiplicities (kappa = (1-n)/2). The
// gamma-tilde kernel is cross-checked; a disagreement is an internal
// error.
Verdict is_slice_poly(const Poly& f);

// Slice-regular polynomials: Dunkl monogenic and slice.
Verdict is_slice_regular_poly(const Poly& f);

// Coefficients a_j with f = sum_j x^j a_j, for slice-regular f; the
// reconstruction is verified exactly. Throws std::invalid_argument when f
// is not slice-regular.
std::vector<Element> slice_regular_coefficients(const Poly& f);

// Slice polynomial decomposition f = sum x_0^m x_^ell a, plus the
// monomial expansion sum x^alpha (x^c)^beta a_{alpha,beta}. Both
// reconstructions are verified exactly.
struct SliceDecomposition {
  std::vector<std::tuple<int, int, Element>> parts;     // (m, ell, a)
  std::vector<std::tuple<int, int, Element>> xc_parts;  // (alpha, beta, a)
};
SliceDecomposition slice_decompose(const Poly& f);

// x_0^m x_^ell a rendered through the closed forms x_^{2p} = (-q)^p and
// x_^{2p+1} = (-q)^p x_, and x^alpha (x^c)^beta a built by repeated left
// multiplication by x and x^c.
Poly slice_monomial_poly(const Frame& frame, int m, int ell, const Element& a);
Poly slice_xc_monomial_poly(const Frame& frame, int alpha, int beta, const Element& a);

// Membership in ker D_A cap ker script-S_A. k must be A-admissible.
Verdict membership_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f);
Verdict membership_A(const std::vector<int>& A, const Poly& f);

// Membership in ker D_A cap ker script-S_B; the two operators carry
// independent multiplicity sequences (kD A-admissible, kS B-admissible).
Verdict membership_AB(const Multiplicities& kD, const std::vector<int>& A,
                      const Multiplicities& kS, const std::vector<int>& B,
                      const Poly& f);
Verdict membership_AB(const std::vector<int>& A, const std::vector<int>& B,
                      const Poly& f);

// Membership in ker D_P cap ker script-S_P. P must be admissible.
Verdict membership_P(const PartitionSpec& P, const Poly& f);

// All set partitions of {1..n} in restricted-growth order; blocks come
// out canonical.
std::vector<std::vector<std::vector<int>>> enumerate_partitions(int n);

// Partition census: Bell number, integer partition count, and the count
// 2^n - n of distinct subset spaces.
struct Census {
  long long bell = 0;
  long long partition_count = 0;
  long long subset_spaces = 0;
};
Census census(int n);

// Block-size profile of P sorted descending; equal profiles mark
// equivalent spaces under frame permutation.
std::vector<int> equivalence_class_label(const PartitionSpec& P);

// Partition attached to a fan 0 <= t_0 < t_1 < ... < t_s = n: singleton
// blocks {1}..{t_0} plus the consecutive runs {t_{m-1}+1..t_m}.
PartitionSpec partition_from_fan(const std::vector<int>& fan);

// Checks that membership_P verdicts under k1 and k2 agree on every suite
// element; both must be admissible for the blocks.
struct IndependenceReport {
  bool agree = true;
  std::string detail;
};
IndependenceReport multiplicity_independence(const std::vector<std::vector<int>>& blocks,
                                             const Multiplicities& k1,
                                             const Multiplicities& k2,
                                             const std::vector<Poly>& suite);

// A polynomial x_B = x_0 + sum_{i in B} v_i x_i that is a member of
// exactly one of the two partition spaces, with the side recorded.
// Selection follows the classification proof: for a block A_i of P not in
// P' and an intersecting block B_j of P', the witness is x_{B_j} (member
// of the P' space only) when A_i is not contained in B_j, and x_{A_i}
// (member of the P space only) otherwise. Membership of both sides is
// verified; throws std::invalid_argument when P = P'.
struct SeparatingWitness {
  Poly witness;
  std::vector<int> block;
  bool in_first = false;  // true: member of F_P only; false: of F_P' only
};
SeparatingWitness separating_witness(const Frame& frame, const PartitionSpec& P,
                                     const PartitionSpec& Pprime);

// Permutation transport: frame units, blocks, multiplicities, and
// exponents relabeled through sigma (1-based, sigma[i-1] = sigma(i)).
Frame permute_frame(const Frame& frame, const std::vector<int>& sigma);
PartitionSpec permute_partition(const PartitionSpec& P, const std::vector<int>& sigma);
Poly permute_poly(const Frame& permuted, const std::vector<int>& sigma, const Poly& f);

// True when membership_P(P, f) and membership_P(P_sigma, f_sigma) agree;
// the transported verdicts coincide for every f.
bool permuted_equivalence(const PartitionSpec& P, const std::vector<int>& sigma,
                          const Poly& f);

// Slice components over the blocks of P: the recursion starts from f,
// and step m replaces level m-1 components g by the A_m-spherical values
// of g and of x_{A_m} g. Keys are bitmasks over block indices (bit i-1
// set means block i taken with the x_{A_i} factor). The x_{A_{m+1}}-
// multiplied level identity is asserted at every step; a violation is an
// internal error.
std::map<unsigned, Poly> p_slice_components(const PartitionSpec& P, const Poly& f);

// Kernel form of script-S_A: f = F + x_A G with F = sum_d q_A^d c_d and
// G = sum_d q_A^d g_d, where c_d, g_d contain no A-variables. The
// decomposition exists exactly when script_S_A(k, A, f) = 0 (with
// A-admissible k); sa_compose rebuilds the polynomial.
struct SAForm {
  std::map<int, Poly> F_q;  // d -> c_d
  std::map<int, Poly> G_q;  // d -> g_d
};
SAForm sa_decompose(const Multiplicities& k, const std::vector<int>& A, const Poly& f);
Poly sa_compose(const std::vector<int>& A, const SAForm& form);

// Rewrites an r_A-even, rotation-invariant polynomial as sum_d q_A^d c_d
// with c_d free of A-variables; throws std::invalid_argument when no such
// form exists.
std::map<int, Poly> extract_q_expansion(const std::vector<int>& A, const Poly& f);

// Text labels shared with the command line: "2,3" and "1|2,3".
std::string subset_label(const std::vector<int>& A);
std::string partition_label(const std::vector<std::vector<int>>& blocks);

}  // namespace dunkl

#endif  // DUNKL_SPACES_HPP
