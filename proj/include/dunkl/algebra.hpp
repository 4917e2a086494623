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

// Exact arithmetic in real alternative *-algebras: complex numbers,
// quaternions, octonions, and the Clifford algebras Cl(0,n), together with
// hypercomplex frames (1, v_1, ..., v_n) spanning a subspace M on which the
// whole calculus lives.

#ifndef DUNKL_ALGEBRA_HPP
#define DUNKL_ALGEBRA_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

// A finite-dimensional real algebra given by structure constants over a
// named basis. Basis index 0 is always the unit. Conjugation acts
// diagonally on the basis (sign per basis element), which covers every
// algebra constructed here.
struct AlgebraTable {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis_names;
  // product[i][j] = sparse expansion of e_i * e_j as (basis index, coeff).
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> product;
  std::vector<int> conj_signs;  // +1 or -1 per basis element
  bool associative = false;

  // Index of a basis name, or -1 when unknown.
  int basis_index(const std::string& bname) const;
};

// A coordinate vector over an AlgebraTable basis. The table pointer is
// non-owning; keep the Algebra (or a Frame) alive while Elements built from
// it are in use. All arithmetic is exact.
class Element {
 public:
  Element() = default;
  explicit Element(const AlgebraTable* tab);
  static Element basis(const AlgebraTable* tab, int i);
  static Element scalar(const AlgebraTable* tab, const Rat& r);

  const AlgebraTable* table() const { return tab_; }
  int dim() const { return tab_ ? tab_->dim : 0; }
  const Rat& coord(int i) const { return c_[i]; }
  Rat& coord(int i) { return c_[i]; }

  bool is_zero() const;
  bool is_real() const;       // every coordinate except index 0 vanishes
  Rat real_part() const { return c_.empty() ? Rat(0) : c_[0]; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o);
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  Element scaled(const Rat& r) const;

  // Renders as a sum of "(r)*name" parts, "(0)*1" for zero.
  std::string str() const;

 private:
  const AlgebraTable* tab_ = nullptr;
  std::vector<Rat> c_;
};

// Bilinear product from the structure table. Throws std::invalid_argument
// on mismatched tables.
Element mul(const Element& a, const Element& b);

Element conjugate(const Element& a);
Element trace(const Element& a);      // a + conjugate(a)
Element norm_form(const Element& a);  // a * conjugate(a)
Element associator(const Element& a, const Element& b, const Element& c);

// A hypercomplex frame (1, v_1, ..., v_n): the units list holds the basis
// indices of v_1..v_n. The shared table pointer owns the algebra, so a
// Frame (and any Poly holding one) keeps its Elements valid.
struct Frame {
  std::shared_ptr<const AlgebraTable> table;
  std::vector<int> units;

  int n() const { return static_cast<int>(units.size()); }
  const AlgebraTable* tab() const { return table.get(); }
  Element unit(int i) const;  // v_i for 1 <= i <= n; i = 0 gives 1
  bool operator==(const Frame& o) const {
    return table.get() == o.table.get() && units == o.units;
  }
  bool operator!=(const Frame& o) const { return !(*this == o); }
};

struct Algebra {
  std::shared_ptr<const AlgebraTable> table;
  Frame frame;
};

// Builds one of the supported algebras with its canonical frame:
//   "C"        complex numbers, frame (1, i)
//   "H"        quaternions, frame (1, i, j, k)
//   "Hr"       reduced quaternions: the H table with frame (1, i, j)
//   "O"        octonions by Cayley-Dickson doubling of H, frame (1, v1..v7)
//   "Cl(0,n)"  Clifford algebra on n anticommuting generators with
//              e_i^2 = -1, paravector frame (1, e_1..e_n); 1 <= n <= 9
// Throws std::invalid_argument for unknown names or out-of-range n.
Algebra make_algebra(const std::string& spec);

struct FrameReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks the frame axioms exhaustively over the algebra basis:
// t(v_i) = 0 and n(v_i) = 1; v_i v_j = -v_j v_i for i != j; and the strong
// anticommutation v_i (v_j a) = -v_j (v_i a) for every basis element a.
FrameReport verify_frame(const Frame& frame);

// Checks the structure table itself: unit laws, conjugation anti-involution
// on all basis pairs, and alternativity of the associator on all basis
// triples (full associativity when the table claims it).
FrameReport verify_table(const AlgebraTable& tab);

// True when x has support only on the unit and the frame's units.
bool in_frame_span(const Frame& frame, const Element& x);

// x^k through the quadratic recurrence x^2 = t(x) x - n(x), which never
// reassociates a product, so it is valid in the octonions as well.
// Requires x in the frame span; power(x, 0) = 1.
Element power(const Frame& frame, const Element& x, int k);

// x^{-1} = conjugate(x) / n(x) for frame-span x with nonzero norm.
Element inverse(const Frame& frame, const Element& x);

}  // namespace dunkl

#endif  // DUNKL_ALGEBRA_HPP
