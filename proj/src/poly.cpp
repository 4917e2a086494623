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

#include "dunkl/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

void require_same_frame(const Poly& f, const Poly& g, const char* op) {
  if (f.frame() != g.frame())
    throw std::invalid_argument(std::string(op) + ": polynomials over different frames");
}

void check_var_index(int i, int n, const char* where) {
  if (i < 0 || i > n)
    throw std::invalid_argument(std::string(where) + ": variable index out of range");
}

}  // namespace

void check_subset(const std::vector<int>& A, int n, const char* where) {
  int prev = 0;
  for (int i : A) {
    if (i < 1 || i > n)
      throw std::invalid_argument(std::string(where) + ": subset index out of range");
    if (i <= prev)
      throw std::invalid_argument(std::string(where) +
                                  ": subset must be strictly increasing");
    prev = i;
  }
}

std::vector<int> subset_complement(const std::vector<int>& A, int n) {
  std::vector<int> out;
  std::size_t p = 0;
  for (int i = 1; i <= n; ++i) {
    if (p < A.size() && A[p] == i)
      ++p;
    else
      out.push_back(i);
  }
  return out;
}

std::vector<int> full_set(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

Poly::Poly(Frame frame) : frame_(std::move(frame)) {}

void Poly::add_term(const Monomial& m, const Element& coeff) {
  if (static_cast<int>(m.size()) != nvars())
    throw std::invalid_argument("add_term: monomial length mismatch");
  if (coeff.table() != frame_.tab())
    throw std::invalid_argument("add_term: coefficient from a different algebra");
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = std::accumulate(m.begin(), m.end(), 0);
    if (d > deg) deg = d;
  }
  return deg;
}

bool Poly::operator==(const Poly& o) const {
  return frame_ == o.frame_ && terms_ == o.terms_;
}

std::string Poly::str() const {
  if (terms_.empty()) return "(0)*1";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    int parts = 0;
    for (int i = 0; i < c.dim(); ++i)
      if (c.coord(i) != 0) ++parts;
    if (parts > 1)
      os << "(" << c.str() << ")";
    else
      os << c.str();
    // Variables follow as "* x0^2 x1 x3".
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << (any ? " " : " * ") << "x" << i;
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
  }
  return os.str();
}

Poly zero_poly(const Frame& frame) { return Poly(frame); }

Poly constant_poly(const Frame& frame, const Element& a) {
  Poly f(frame);
  f.add_term(Monomial(frame.n() + 1, 0), a);
  return f;
}

Poly monomial_poly(const Frame& frame, const Monomial& m, const Element& a) {
  Poly f(frame);
  f.add_term(m, a);
  return f;
}

Poly variable_poly(const Frame& frame, int i) {
  check_var_index(i, frame.n(), "variable_poly");
  Monomial m(frame.n() + 1, 0);
  m[i] = 1;
  return monomial_poly(frame, m, Element::basis(frame.tab(), 0));
}

Poly add(const Poly& f, const Poly& g) {
  require_same_frame(f, g, "add");
  Poly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

Poly sub(const Poly& f, const Poly& g) {
  require_same_frame(f, g, "sub");
  Poly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, -c);
  return out;
}

Poly neg(const Poly& f) {
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) out.add_term(m, -c);
  return out;
}

Poly scale(const Rat& r, const Poly& f) {
  Poly out(f.frame());
  if (r == 0) return out;
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.scaled(r));
  return out;
}

Poly left_scale(const Element& v, const Poly& f) {
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) out.add_term(m, mul(v, c));
  return out;
}

Poly right_scale(const Poly& f, const Element& v) {
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) out.add_term(m, mul(c, v));
  return out;
}

Poly real_mul(const Poly& p, const Poly& f) {
  require_same_frame(p, f, "real_mul");
  Poly out(f.frame());
  for (const auto& [mp, cp] : p.terms()) {
    if (!cp.is_real())
      throw std::invalid_argument("real_mul: left factor has non-real coefficients");
    Rat r = cp.real_part();
    for (const auto& [mf, cf] : f.terms()) {
      Monomial m(mp.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mf[i];
      out.add_term(m, cf.scaled(r));
    }
  }
  return out;
}

Poly partial(int i, const Poly& f) {
  check_var_index(i, f.frame().n(), "partial");
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    out.add_term(d, c.scaled(Rat(m[i])));
  }
  return out;
}

Poly reflect(int i, const Poly& f) {
  if (i < 1 || i > f.frame().n())
    throw std::invalid_argument("reflect: index must lie in 1..n");
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms())
    out.add_term(m, m[i] % 2 == 0 ? c : -c);
  return out;
}

Poly reflect_set(const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "reflect_set");
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    int odd = 0;
    for (int i : A) odd += m[i];
    out.add_term(m, odd % 2 == 0 ? c : -c);
  }
  return out;
}

Poly euler_A(const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "euler_A");
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    int deg = 0;
    for (int i : A) deg += m[i];
    if (deg != 0) out.add_term(m, c.scaled(Rat(deg)));
  }
  return out;
}

Poly divide_by_xi(int i, const Poly& f) {
  check_var_index(i, f.frame().n(), "divide_by_xi");
  Poly out(f.frame());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0)
      throw std::invalid_argument("divide_by_xi: term not divisible by x" +
                                  std::to_string(i));
    Monomial d = m;
    d[i] -= 1;
    out.add_term(d, c);
  }
  return out;
}

Element eval(const Poly& f, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("eval: point dimension mismatch");
  Element out(f.frame().tab());
  for (const auto& [m, c] : f.terms()) {
    Rat v(1);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) v *= point[i];
    out += c.scaled(v);
  }
  return out;
}

Poly spherical_value_A(const std::vector<int>& A, const Poly& f) {
  if (A.empty())
    throw std::invalid_argument("spherical_value_A: empty subset");
  return scale(rat(1, 2), add(f, reflect_set(A, f)));
}

Poly imag_weighted_value_A(const std::vector<int>& A, const Poly& f) {
  if (A.empty())
    throw std::invalid_argument("imag_weighted_value_A: empty subset");
  return spherical_value_A(A, imag_left_mul(A, f));
}

Poly imaginary_poly(const Frame& frame, const std::vector<int>& A) {
  check_subset(A, frame.n(), "imaginary_poly");
  Poly out(frame);
  for (int i : A) {
    Monomial m(frame.n() + 1, 0);
    m[i] = 1;
    out.add_term(m, frame.unit(i));
  }
  return out;
}

Poly imag_left_mul(const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "imag_left_mul");
  Poly out(f.frame());
  for (int i : A) {
    Element vi = f.frame().unit(i);
    for (const auto& [m, c] : f.terms()) {
      Monomial up = m;
      up[i] += 1;
      out.add_term(up, mul(vi, c));
    }
  }
  return out;
}

Poly slice_power_poly(const Frame& frame, int k) {
  if (k < 0) throw std::invalid_argument("slice_power_poly: negative exponent");
  const int n = frame.n();
  Element one = Element::basis(frame.tab(), 0);
  Poly p0 = constant_poly(frame, one);
  if (k == 0) return p0;
  Poly x0 = variable_poly(frame, 0);
  Poly p1 = add(x0, imaginary_poly(frame, full_set(n)));
  if (k == 1) return p1;
  // x_0^2 + q with q = sum_{i=1..n} x_i^2.
  Poly sq(frame);
  for (int i = 0; i <= n; ++i) {
    Monomial m(n + 1, 0);
    m[i] = 2;
    sq.add_term(m, one);
  }
  Poly two_x0 = scale(Rat(2), x0);
  Poly prev = p1, before = p0;
  for (int m = 2; m <= k; ++m) {
    Poly next = sub(real_mul(two_x0, prev), real_mul(sq, before));
    before = prev;
    prev = next;
  }
  return prev;
}

Poly slice_power_poly_A(const Frame& frame, const std::vector<int>& A, int k) {
  check_subset(A, frame.n(), "slice_power_poly_A");
  if (k < 0) throw std::invalid_argument("slice_power_poly_A: negative exponent");
  Poly p0 = constant_poly(frame, Element::basis(frame.tab(), 0));
  if (k == 0) return p0;
  Poly x0 = variable_poly(frame, 0);
  Poly p1 = add(x0, imaginary_poly(frame, A));
  if (k == 1) return p1;
  Poly sq = norm_square_poly(frame, A);
  {
    Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
    m[0] = 2;
    sq.add_term(m, Element::basis(frame.tab(), 0));
  }
  Poly two_x0 = scale(Rat(2), x0);
  Poly prev = p1, before = p0;
  for (int m = 2; m <= k; ++m) {
    Poly next = sub(real_mul(two_x0, prev), real_mul(sq, before));
    before = prev;
    prev = next;
  }
  return prev;
}

Poly norm_square_poly(const Frame& frame, const std::vector<int>& A) {
  check_subset(A, frame.n(), "norm_square_poly");
  Element one = Element::basis(frame.tab(), 0);
  Poly out(frame);
  for (int i : A) {
    Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
    m[static_cast<std::size_t>(i)] = 2;
    out.add_term(m, one);
  }
  return out;
}

Poly real_pow(const Poly& p, int d) {
  if (d < 0) throw std::invalid_argument("real_pow: negative exponent");
  Poly out = constant_poly(p.frame(), Element::basis(p.frame().tab(), 0));
  for (int i = 0; i < d; ++i) out = real_mul(p, out);
  return out;
}

std::map<int, Poly> homogeneous_components(const Poly& f) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : f.terms()) {
    int d = std::accumulate(m.begin(), m.end(), 0);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Poly(f.frame())).first;
    it->second.add_term(m, c);
  }
  return out;
}

}  // namespace dunkl
