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

#ifndef DUNKL_POINTCHECK_HPP
#define DUNKL_POINTCHECK_HPP

#include <map>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/spaces.hpp"

namespace dunkl {

// Stereographic rational point on the unit sphere in dimension u.size() + 1:
// ((1 - s) / (1 + s), 2 u_1 / (1 + s), ...) with s the squared norm of u.
std::vector<Rat> rational_sphere_point(const std::vector<Rat>& u);

// Pointwise form of the identity relating the Cauchy-Riemann operator, the
// radial derivative and the spherical operator.  The point must have nonzero
// imaginary part.
struct DifferenceReport {
  Element lhs;
  Element rhs;
  bool ok = false;
};
DifferenceReport check_difference_at(const Poly& f, const std::vector<Rat>& point);

// Substitute x_i -> J_i * beta for i in A, with the smallest index of A
// reused as the beta variable.  J must be a rational unit vector indexed
// along the sorted block.
Poly restrict_to_slice(const std::vector<int>& A, const std::vector<Rat>& J,
                       const Poly& f);

// Cauchy-Riemann operator of the slice through J: d/dx_0 plus the unit
// directions outside A plus (sum J_i v_i) d/dbeta.
Poly dbar_J(const std::vector<int>& A, const std::vector<Rat>& J, const Poly& g);

// Point whose block norms are exact squares: x_j = beta_i * (S_i)_j on block
// i, where each S_i is a rational sphere point of the block dimension.
std::vector<Rat> block_scaled_point(int n, const std::vector<std::vector<int>>& blocks,
                                    const Rat& x0, const std::vector<Rat>& betas,
                                    const std::vector<std::vector<Rat>>& sphere_points);

// Right-nested product J_{k_1} (J_{k_2} (... a)) over the 1-based block
// indices in order.
Element nested_block_product(const std::vector<Element>& J,
                             const std::vector<int>& order, const Element& a);

// Evaluate the partition-indexed spherical components at a point with exact
// block norms and reassemble the value of f from them.
struct PSliceReconstruction {
  std::vector<Rat> beta;
  std::vector<Element> J;
  std::map<unsigned, Element> fk;
  Element expected;
  Element reconstructed;
  bool ok = false;
};
PSliceReconstruction reconstruct_p_slice_at(const PartitionSpec& P, const Poly& f,
                                            const std::vector<Rat>& point);

}  // namespace dunkl

#endif  // DUNKL_POINTCHECK_HPP
