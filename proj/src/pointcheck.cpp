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

#include "dunkl/pointcheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "dunkl/operators.hpp"

namespace dunkl {

namespace {

Element imaginary_value(const Frame& fr, const std::vector<int>& A,
                        const std::vector<Rat>& point) {
  Element out(fr.tab());
  for (int i : A) out = out + fr.unit(i).scaled(point[static_cast<std::size_t>(i)]);
  return out;
}

void check_point_size(const Frame& fr, const std::vector<Rat>& point,
                      const char* where) {
  if (point.size() != static_cast<std::size_t>(fr.n()) + 1)
    throw std::invalid_argument(std::string(where) + ": point size does not match frame");
}

}  // namespace

std::vector<Rat> rational_sphere_point(const std::vector<Rat>& u) {
  Rat s(0);
  for (const Rat& v : u) s += v * v;
  Rat denom = 1 + s;
  std::vector<Rat> out;
  out.reserve(u.size() + 1);
  out.push_back((1 - s) / denom);
  for (const Rat& v : u) out.push_back(2 * v / denom);
  return out;
}

DifferenceReport check_difference_at(const Poly& f, const std::vector<Rat>& point) {
  const Frame& fr = f.frame();
  check_point_size(fr, point, "check_difference_at");
  Element xu = imaginary_value(fr, full_set(fr.n()), point);
  if (xu.is_zero())
    throw std::invalid_argument("check_difference_at: point lies on the real axis");
  Element xinv = inverse(fr, xu);

  Element d0 = eval(partial(0, f), point);
  Element euler = eval(euler_A(full_set(fr.n()), f), point);
  Element dbar = eval(cauchy_riemann(f), point);
  Element gamma = eval(gamma_spherical(f), point);

  DifferenceReport rep;
  rep.lhs = dbar + (mul(xinv, euler) - d0);
  rep.rhs = mul(xinv, gamma).scaled(Rat(-1));
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

Poly restrict_to_slice(const std::vector<int>& A, const std::vector<Rat>& J,
                       const Poly& f) {
  const Frame& fr = f.frame();
  check_subset(A, fr.n(), "restrict_to_slice");
  if (A.empty()) throw std::invalid_argument("restrict_to_slice: empty subset");
  if (J.size() != A.size())
    throw std::invalid_argument("restrict_to_slice: direction size does not match block");
  Rat norm(0);
  for (const Rat& v : J) norm += v * v;
  if (norm != 1)
    throw std::invalid_argument("restrict_to_slice: direction is not a unit vector");

  const int beta_var = A.front();
  Poly out(fr);
  for (const auto& [m, c] : f.terms()) {
    Monomial moved = m;
    int beta_exp = 0;
    Rat factor(1);
    for (std::size_t b = 0; b < A.size(); ++b) {
      int e = m[static_cast<std::size_t>(A[b])];
      if (e == 0) continue;
      beta_exp += e;
      for (int t = 0; t < e; ++t) factor *= J[b];
      moved[static_cast<std::size_t>(A[b])] = 0;
    }
    if (factor == 0) continue;
    moved[static_cast<std::size_t>(beta_var)] = beta_exp;
    out.add_term(moved, c.scaled(factor));
  }
  return out;
}

Poly dbar_J(const std::vector<int>& A, const std::vector<Rat>& J, const Poly& g) {
  const Frame& fr = g.frame();
  check_subset(A, fr.n(), "dbar_J");
  if (A.empty()) throw std::invalid_argument("dbar_J: empty subset");
  if (J.size() != A.size())
    throw std::invalid_argument("dbar_J: direction size does not match block");
  Element unit(fr.tab());
  for (std::size_t b = 0; b < A.size(); ++b)
    unit = unit + fr.unit(A[b]).scaled(J[b]);

  Poly out = partial(0, g);
  for (int j = 1; j <= fr.n(); ++j) {
    if (std::binary_search(A.begin(), A.end(), j)) continue;
    out = add(out, left_scale(fr.unit(j), partial(j, g)));
  }
  return add(out, left_scale(unit, partial(A.front(), g)));
}

std::vector<Rat> block_scaled_point(int n, const std::vector<std::vector<int>>& blocks,
                                    const Rat& x0, const std::vector<Rat>& betas,
                                    const std::vector<std::vector<Rat>>& sphere_points) {
  if (betas.size() != blocks.size() || sphere_points.size() != blocks.size())
    throw std::invalid_argument("block_scaled_point: per-block data size mismatch");
  std::vector<Rat> point(static_cast<std::size_t>(n) + 1, Rat(0));
  point[0] = x0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& A = blocks[b];
    if (sphere_points[b].size() != A.size())
      throw std::invalid_argument("block_scaled_point: sphere point dimension mismatch");
    for (std::size_t t = 0; t < A.size(); ++t) {
      int i = A[t];
      if (i < 1 || i > n)
        throw std::invalid_argument("block_scaled_point: index out of range");
      point[static_cast<std::size_t>(i)] = betas[b] * sphere_points[b][t];
    }
  }
  return point;
}

Element nested_block_product(const std::vector<Element>& J,
                             const std::vector<int>& order, const Element& a) {
  Element acc = a;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int idx = *it;
    if (idx < 1 || idx > static_cast<int>(J.size()))
      throw std::invalid_argument("nested_block_product: block index out of range");
    acc = mul(J[static_cast<std::size_t>(idx - 1)], acc);
  }
  return acc;
}

PSliceReconstruction reconstruct_p_slice_at(const PartitionSpec& P, const Poly& f,
                                            const std::vector<Rat>& point) {
  const Frame& fr = f.frame();
  check_point_size(fr, point, "reconstruct_p_slice_at");
  if (P.n != fr.n())
    throw std::invalid_argument("reconstruct_p_slice_at: partition size does not match frame");

  PSliceReconstruction rec;
  for (const auto& A : P.blocks) {
    Rat sq(0);
    for (int i : A) sq += point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    auto root = rat_sqrt_exact(sq);
    if (!root)
      throw std::invalid_argument(
          "reconstruct_p_slice_at: block norm is not a rational square");
    if (*root == 0)
      throw std::invalid_argument(
          "reconstruct_p_slice_at: point has a vanishing block");
    rec.beta.push_back(*root);
    rec.J.push_back(imaginary_value(fr, A, point).scaled(1 / *root));
  }

  std::map<unsigned, Poly> comps = p_slice_components(P, f);
  rec.expected = eval(f, point);
  rec.reconstructed = Element(fr.tab());
  for (const auto& [K, comp] : comps) {
    Element value = eval(comp, point);
    std::vector<int> order;
    for (std::size_t b = 0; b < P.blocks.size(); ++b) {
      if (!(K & (1u << b))) continue;
      value = value.scaled(Rat(-1) / rec.beta[b]);
      order.push_back(static_cast<int>(b) + 1);
    }
    rec.fk.emplace(K, value);
    rec.reconstructed = rec.reconstructed + nested_block_product(rec.J, order, value);
  }
  rec.ok = rec.expected == rec.reconstructed;
  return rec;
}

}  // namespace dunkl
