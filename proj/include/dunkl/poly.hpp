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

// Sparse polynomials in x_0..x_n with algebra-valued coefficients sitting
// to the right of real monomials: f = sum_alpha x^alpha a_alpha. Left
// multiplication by frame units acts on the coefficients and is never
// reassociated, so everything stays valid over the octonions.

#ifndef DUNKL_POLY_HPP
#define DUNKL_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "dunkl/algebra.hpp"

namespace dunkl {

// Exponents of x_0..x_n; length n+1.
using Monomial = std::vector<int>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(Frame frame);

  const Frame& frame() const { return frame_; }
  int nvars() const { return frame_.n() + 1; }
  const std::map<Monomial, Element>& terms() const { return terms_; }

  // Accumulates coeff onto the monomial and drops the term when it
  // cancels to zero. The monomial length must match nvars().
  void add_term(const Monomial& m, const Element& coeff);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Frame frame_;
  std::map<Monomial, Element> terms_;
};

// Constructors.
Poly zero_poly(const Frame& frame);
Poly constant_poly(const Frame& frame, const Element& a);
Poly monomial_poly(const Frame& frame, const Monomial& m, const Element& a);
Poly variable_poly(const Frame& frame, int i);  // x_i

// Module operations. Binary operations require equal frames.
Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly neg(const Poly& f);
Poly scale(const Rat& r, const Poly& f);
// Multiplies every coefficient on the left (v * a_alpha) resp. right
// (a_alpha * v).
Poly left_scale(const Element& v, const Poly& f);
Poly right_scale(const Poly& f, const Element& v);
// Term-wise product with a real-coefficient polynomial; real scalars
// commute with the coefficients. Throws unless every coefficient of p is
// real.
Poly real_mul(const Poly& p, const Poly& f);

// Formal partial derivative in x_i, 0 <= i <= n.
Poly partial(int i, const Poly& f);

// Reflection r_i negates x_i (1 <= i <= n); reflect_set composes the
// commuting reflections over A. reflect_set over all of [n] realizes
// x -> x^c on the subspace spanned by the frame.
Poly reflect(int i, const Poly& f);
Poly reflect_set(const std::vector<int>& A, const Poly& f);

// Euler operator over A: sum_{i in A} x_i d/dx_i.
Poly euler_A(const std::vector<int>& A, const Poly& f);

// Exact division by x_i; every monomial must contain x_i.
Poly divide_by_xi(int i, const Poly& f);

// Evaluation at a rational point (length n+1).
Element eval(const Poly& f, const std::vector<Rat>& point);

// A-spherical value (f + r_A f)/2 and the weighted companion
// (x_A f + r_A(x_A f))/2 where x_A = sum_{i in A} x_i v_i. A nonempty.
Poly spherical_value_A(const std::vector<int>& A, const Poly& f);
Poly imag_weighted_value_A(const std::vector<int>& A, const Poly& f);

// x_A = sum_{i in A} x_i v_i as a polynomial, and left multiplication of a
// polynomial by it (coefficient-level products v_i * a_alpha).
Poly imaginary_poly(const Frame& frame, const std::vector<int>& A);
Poly imag_left_mul(const std::vector<int>& A, const Poly& f);

// The slice power x^k expanded through the quadratic recurrence
// x^2 = 2 x_0 x - (x_0^2 + q), q = sum_i x_i^2, so no general polynomial
// product is ever needed.
Poly slice_power_poly(const Frame& frame, int k);

// The same power for the sub-frame variable x_0 + x_A with q_A in the
// recurrence; A = [n] recovers slice_power_poly.
Poly slice_power_poly_A(const Frame& frame, const std::vector<int>& A, int k);

// q_A = sum_{i in A} x_i^2 with real coefficients.
Poly norm_square_poly(const Frame& frame, const std::vector<int>& A);

// p^d for a real-coefficient p via repeated real_mul; d >= 0.
Poly real_pow(const Poly& p, int d);

// Splits by total degree; only nonzero components appear.
std::map<int, Poly> homogeneous_components(const Poly& f);

// Validates that A is a strictly increasing subset of {1..n}; throws
// std::invalid_argument otherwise.
void check_subset(const std::vector<int>& A, int n, const char* where);

// Complement of A in {1..n}, ascending.
std::vector<int> subset_complement(const std::vector<int>& A, int n);

// {1, ..., n}.
std::vector<int> full_set(int n);

}  // namespace dunkl

#endif  // DUNKL_POLY_HPP
