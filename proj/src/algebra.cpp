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

#include "dunkl/algebra.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

void require_same_table(const Element& a, const Element& b, const char* op) {
  if (a.table() != b.table())
    throw std::invalid_argument(std::string(op) + ": elements from different algebras");
}

// Sparse row for "e_i * e_j = sign * e_target".
std::vector<std::pair<int, Rat>> signed_entry(int target, int sign) {
  return {{target, Rat(sign)}};
}

AlgebraTable complex_table() {
  AlgebraTable t;
  t.name = "C";
  t.dim = 2;
  t.basis_names = {"1", "i"};
  t.conj_signs = {+1, -1};
  t.associative = true;
  t.product.assign(2, std::vector<std::vector<std::pair<int, Rat>>>(2));
  t.product[0][0] = signed_entry(0, +1);
  t.product[0][1] = signed_entry(1, +1);
  t.product[1][0] = signed_entry(1, +1);
  t.product[1][1] = signed_entry(0, -1);
  return t;
}

AlgebraTable quaternion_table() {
  AlgebraTable t;
  t.name = "H";
  t.dim = 4;
  t.basis_names = {"1", "i", "j", "k"};
  t.conj_signs = {+1, -1, -1, -1};
  t.associative = true;
  t.product.assign(4, std::vector<std::vector<std::pair<int, Rat>>>(4));
  // Signed index of e_i * e_j; row-major with 1, i, j, k.
  static const int tab[4][4][2] = {
      {{0, +1}, {1, +1}, {2, +1}, {3, +1}},
      {{1, +1}, {0, -1}, {3, +1}, {2, -1}},
      {{2, +1}, {3, -1}, {0, -1}, {1, +1}},
      {{3, +1}, {2, +1}, {1, -1}, {0, -1}},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      t.product[i][j] = signed_entry(tab[i][j][0], tab[i][j][1]);
  return t;
}

// Octonions by doubling pairs (q, q') of quaternions:
//   (q1, q1')(q2, q2') = (q1 q2 - conj(q2') q1', q2' q1 + q1' conj(q2))
// with basis v_h = (e_h, 0) for h <= 3 and v_h = (0, e_{h-4}) for h >= 4.
AlgebraTable octonion_table() {
  AlgebraTable h = quaternion_table();
  auto qmul = [&h](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(4, Rat(0));
    for (int i = 0; i < 4; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (b[j] == 0) continue;
        for (const auto& [idx, c] : h.product[i][j]) out[idx] += c * a[i] * b[j];
      }
    }
    return out;
  };
  auto qconj = [](std::vector<Rat> a) {
    for (int i = 1; i < 4; ++i) a[i] = -a[i];
    return a;
  };

  AlgebraTable t;
  t.name = "O";
  t.dim = 8;
  t.basis_names = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  t.conj_signs = {+1, -1, -1, -1, -1, -1, -1, -1};
  t.associative = false;
  t.product.assign(8, std::vector<std::vector<std::pair<int, Rat>>>(8));

  auto split = [](int hh) {
    std::vector<Rat> q(4, Rat(0)), qp(4, Rat(0));
    if (hh <= 3)
      q[hh] = 1;
    else
      qp[hh - 4] = 1;
    return std::make_pair(q, qp);
  };
  for (int a = 0; a < 8; ++a) {
    auto [q1, q1p] = split(a);
    for (int b = 0; b < 8; ++b) {
      auto [q2, q2p] = split(b);
      std::vector<Rat> left = qmul(q1, q2);
      std::vector<Rat> corr = qmul(qconj(q2p), q1p);
      std::vector<Rat> right1 = qmul(q2p, q1);
      std::vector<Rat> right2 = qmul(q1p, qconj(q2));
      std::vector<std::pair<int, Rat>> row;
      for (int i = 0; i < 4; ++i) {
        Rat c = left[i] - corr[i];
        if (c != 0) row.emplace_back(i, c);
      }
      for (int i = 0; i < 4; ++i) {
        Rat c = right1[i] + right2[i];
        if (c != 0) row.emplace_back(4 + i, c);
      }
      t.product[a][b] = std::move(row);
    }
  }
  return t;
}

std::string blade_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < 16; ++i)
    if (mask >> i & 1u) s += static_cast<char>('1' + i);
  return s;
}

// Cl(0,n) on blades indexed by bitmasks. The product e_A e_B lands on
// e_{A xor B}; the sign counts the transpositions needed to merge the two
// ascending generator lists plus one flip per common generator (e_i^2 = -1).
AlgebraTable clifford_table(int n) {
  if (n < 1) throw std::invalid_argument("Cl(0,n) requires n >= 1");
  if (n > 9)
    throw std::invalid_argument(
        "Cl(0,n) is limited to n <= 9 (single-digit blade names)");
  AlgebraTable t;
  t.name = "Cl(0," + std::to_string(n) + ")";
  t.dim = 1 << n;
  t.associative = true;
  t.basis_names.resize(t.dim);
  t.conj_signs.resize(t.dim);
  for (int m = 0; m < t.dim; ++m) {
    t.basis_names[m] = blade_name(static_cast<unsigned>(m));
    // Clifford conjugation negates grades g with g(g+1)/2 odd.
    int g = std::popcount(static_cast<unsigned>(m));
    t.conj_signs[m] = (g * (g + 1) / 2) % 2 == 0 ? +1 : -1;
  }
  t.product.assign(t.dim, std::vector<std::vector<std::pair<int, Rat>>>(t.dim));
  for (int a = 0; a < t.dim; ++a) {
    for (int b = 0; b < t.dim; ++b) {
      int swaps = 0;
      for (int i = 0; i < n; ++i) {
        if (!(b >> i & 1)) continue;
        // Generators of a strictly above generator i must move past it.
        unsigned above = static_cast<unsigned>(a) >> (i + 1);
        swaps += std::popcount(above);
      }
      int common = std::popcount(static_cast<unsigned>(a & b));
      int sign = (swaps + common) % 2 == 0 ? +1 : -1;
      t.product[a][b] = signed_entry(a ^ b, sign);
    }
  }
  return t;
}

// Every constructor above yields signed-monomial structure constants:
// each basis product is a single +/-1 multiple of a basis element. The
// general sparse representation stays, but this property is asserted once
// per table so the fast expectations in callers hold.
void check_table(const AlgebraTable& t) {
  if (t.dim <= 0 || static_cast<int>(t.basis_names.size()) != t.dim ||
      static_cast<int>(t.conj_signs.size()) != t.dim)
    throw std::logic_error("algebra table shape mismatch");
  if (t.conj_signs[0] != +1) throw std::logic_error("conjugation must fix the unit");
  for (int j = 0; j < t.dim; ++j) {
    const auto& left = t.product[0][j];
    const auto& right = t.product[j][0];
    if (left.size() != 1 || left[0].first != j || left[0].second != 1 ||
        right.size() != 1 || right[0].first != j || right[0].second != 1)
      throw std::logic_error("unit law violated in structure table");
  }
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      const auto& row = t.product[i][j];
      if (row.size() > 1 ||
          (row.size() == 1 && row[0].second != 1 && row[0].second != -1))
        throw std::logic_error("structure constants are not signed monomials");
    }
}

}  // namespace

int AlgebraTable::basis_index(const std::string& bname) const {
  for (int i = 0; i < dim; ++i)
    if (basis_names[i] == bname) return i;
  return -1;
}

Element::Element(const AlgebraTable* tab) : tab_(tab), c_(tab->dim, Rat(0)) {}

Element Element::basis(const AlgebraTable* tab, int i) {
  Element e(tab);
  e.c_[i] = 1;
  return e;
}

Element Element::scalar(const AlgebraTable* tab, const Rat& r) {
  Element e(tab);
  e.c_[0] = r;
  return e;
}

bool Element::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Element::is_real() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  require_same_table(*this, o, "add");
  Element out(*this);
  for (int i = 0; i < dim(); ++i) out.c_[i] += o.c_[i];
  return out;
}

Element Element::operator-(const Element& o) const {
  require_same_table(*this, o, "sub");
  Element out(*this);
  for (int i = 0; i < dim(); ++i) out.c_[i] -= o.c_[i];
  return out;
}

Element Element::operator-() const {
  Element out(*this);
  for (Rat& r : out.c_) r = -r;
  return out;
}

Element& Element::operator+=(const Element& o) {
  require_same_table(*this, o, "add");
  for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

bool Element::operator==(const Element& o) const {
  if (tab_ != o.tab_) return false;
  return c_ == o.c_;
}

Element Element::scaled(const Rat& r) const {
  Element out(*this);
  for (Rat& v : out.c_) v *= r;
  return out;
}

std::string Element::str() const {
  if (!tab_) return "(0)*1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << rat_to_string(c_[i]) << ")*" << tab_->basis_names[i];
    first = false;
  }
  if (first) os << "(0)*1";
  return os.str();
}

Element mul(const Element& a, const Element& b) {
  require_same_table(a, b, "mul");
  const AlgebraTable* t = a.table();
  Element out(t);
  for (int i = 0; i < t->dim; ++i) {
    if (a.coord(i) == 0) continue;
    for (int j = 0; j < t->dim; ++j) {
      if (b.coord(j) == 0) continue;
      Rat ab = a.coord(i) * b.coord(j);
      for (const auto& [idx, c] : t->product[i][j]) out.coord(idx) += c * ab;
    }
  }
  return out;
}

Element conjugate(const Element& a) {
  Element out(a);
  const AlgebraTable* t = a.table();
  for (int i = 0; i < t->dim; ++i)
    if (t->conj_signs[i] < 0) out.coord(i) = -out.coord(i);
  return out;
}

Element trace(const Element& a) { return a + conjugate(a); }

Element norm_form(const Element& a) { return mul(a, conjugate(a)); }

Element associator(const Element& a, const Element& b, const Element& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

Element Frame::unit(int i) const {
  if (i == 0) return Element::basis(tab(), 0);
  if (i < 1 || i > n()) throw std::invalid_argument("frame unit index out of range");
  return Element::basis(tab(), units[i - 1]);
}

Algebra make_algebra(const std::string& spec) {
  Algebra alg;
  std::vector<int> units;
  if (spec == "C") {
    alg.table = std::make_shared<AlgebraTable>(complex_table());
    units = {1};
  } else if (spec == "H") {
    alg.table = std::make_shared<AlgebraTable>(quaternion_table());
    units = {1, 2, 3};
  } else if (spec == "Hr") {
    alg.table = std::make_shared<AlgebraTable>(quaternion_table());
    units = {1, 2};
  } else if (spec == "O") {
    alg.table = std::make_shared<AlgebraTable>(octonion_table());
    units = {1, 2, 3, 4, 5, 6, 7};
  } else if (spec.rfind("Cl(0,", 0) == 0 && spec.back() == ')') {
    std::string num = spec.substr(5, spec.size() - 6);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed Clifford spec: " + spec);
    int n = std::stoi(num);
    alg.table = std::make_shared<AlgebraTable>(clifford_table(n));
    for (int i = 0; i < n; ++i) units.push_back(1 << i);
  } else {
    throw std::invalid_argument("unknown algebra spec: " + spec);
  }
  check_table(*alg.table);
  alg.frame = Frame{alg.table, units};
  return alg;
}

FrameReport verify_frame(const Frame& frame) {
  FrameReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  const AlgebraTable* t = frame.tab();
  const int n = frame.n();
  Element one = Element::basis(t, 0);
  for (int i = 1; i <= n; ++i) {
    Element v = frame.unit(i);
    if (!trace(v).is_zero()) fail("t(v" + std::to_string(i) + ") != 0");
    if (norm_form(v) != one) fail("n(v" + std::to_string(i) + ") != 1");
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Element vi = frame.unit(i), vj = frame.unit(j);
      if (!(mul(vi, vj) + mul(vj, vi)).is_zero())
        fail("v" + std::to_string(i) + " v" + std::to_string(j) +
             " does not anticommute");
      for (int b = 0; b < t->dim; ++b) {
        Element a = Element::basis(t, b);
        if (!(mul(vi, mul(vj, a)) + mul(vj, mul(vi, a))).is_zero()) {
          fail("strong anticommutation fails for v" + std::to_string(i) + ", v" +
               std::to_string(j) + " on " + t->basis_names[b]);
          break;
        }
      }
    }
  }
  return rep;
}

FrameReport verify_table(const AlgebraTable& tab) {
  FrameReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  for (int i = 0; i < tab.dim && rep.ok; ++i) {
    for (int j = 0; j < tab.dim; ++j) {
      Element a = Element::basis(&tab, i), b = Element::basis(&tab, j);
      if (conjugate(mul(a, b)) != mul(conjugate(b), conjugate(a))) {
        fail("(e_i e_j)^c != e_j^c e_i^c at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
        break;
      }
    }
  }
  for (int i = 0; i < tab.dim && rep.ok; ++i) {
    for (int j = 0; j < tab.dim && rep.ok; ++j) {
      for (int l = 0; l < tab.dim; ++l) {
        Element a = Element::basis(&tab, i);
        Element b = Element::basis(&tab, j);
        Element c = Element::basis(&tab, l);
        Element abc = associator(a, b, c);
        if (tab.associative && !abc.is_zero()) {
          fail("associator nonzero in associative table at (" + std::to_string(i) +
               "," + std::to_string(j) + "," + std::to_string(l) + ")");
          break;
        }
        // Alternativity: the associator alternates, so it must flip sign
        // under adjacent swaps and vanish on repeated arguments.
        if (abc + associator(b, a, c) != Element(&tab) ||
            abc + associator(a, c, b) != Element(&tab)) {
          fail("associator not alternating at (" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(l) + ")");
          break;
        }
      }
    }
  }
  return rep;
}

bool in_frame_span(const Frame& frame, const Element& x) {
  if (x.table() != frame.tab()) return false;
  std::vector<bool> allowed(x.dim(), false);
  allowed[0] = true;
  for (int u : frame.units) allowed[u] = true;
  for (int i = 0; i < x.dim(); ++i)
    if (!allowed[i] && x.coord(i) != 0) return false;
  return true;
}

Element power(const Frame& frame, const Element& x, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  if (!in_frame_span(frame, x))
    throw std::invalid_argument("power: element outside the frame span");
  const AlgebraTable* t = frame.tab();
  Element one = Element::basis(t, 0);
  if (k == 0) return one;
  Element tr = trace(x), nf = norm_form(x);
  if (!tr.is_real() || !nf.is_real())
    throw std::logic_error("trace or norm not real on a frame-span element");
  Rat tv = tr.real_part(), nv = nf.real_part();
  // x^m = t(x) x^{m-1} - n(x) x^{m-2}: powers of a single element never
  // need associativity.
  Element prev = one, cur = x;
  for (int m = 2; m <= k; ++m) {
    Element next = cur.scaled(tv) - prev.scaled(nv);
    prev = cur;
    cur = next;
  }
  return cur;
}

Element inverse(const Frame& frame, const Element& x) {
  if (!in_frame_span(frame, x))
    throw std::invalid_argument("inverse: element outside the frame span");
  Element nf = norm_form(x);
  if (!nf.is_real())
    throw std::logic_error("norm not real on a frame-span element");
  Rat nv = nf.real_part();
  if (nv == 0) throw std::invalid_argument("inverse: zero norm");
  return conjugate(x).scaled(Rat(1) / nv);
}

}  // namespace dunkl
