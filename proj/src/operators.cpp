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

#include "dunkl/operators.hpp"

#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

// f -> sum_{i in A} v_i (d_i f), the imaginary part of a Cauchy-Riemann
// style operator restricted to A.
Poly imag_dirac(const std::vector<int>& A, const Poly& f) {
  Poly out(f.frame());
  for (int i : A)
    out = add(out, left_scale(f.frame().unit(i), partial(i, f)));
  return out;
}

}  // namespace

Multiplicities zero_multiplicities(int n) {
  Multiplicities k;
  k.k.assign(static_cast<std::size_t>(n), Rat(0));
  return k;
}

Rat kappa(const Multiplicities& k) {
  Rat s(0);
  for (const Rat& v : k.k) s += v;
  return s;
}

Rat gamma_A(const Multiplicities& k, const std::vector<int>& A) {
  Rat s = Rat(static_cast<long>(A.size())) / 2;
  for (int i : A) s += k.at(i);
  return s;
}

Poly cauchy_riemann(const Poly& f) {
  Poly out = partial(0, f);
  return add(out, imag_dirac(full_set(f.frame().n()), f));
}

Poly conj_cauchy_riemann(const Poly& f) {
  Poly out = partial(0, f);
  return sub(out, imag_dirac(full_set(f.frame().n()), f));
}

Poly laplacian(const Poly& f) {
  Poly out(f.frame());
  for (int i = 0; i <= f.frame().n(); ++i)
    out = add(out, partial(i, partial(i, f)));
  return out;
}

Poly gamma_spherical(const Poly& f) {
  const Frame& fr = f.frame();
  Poly out(fr);
  for (int i = 1; i <= fr.n(); ++i) {
    for (int j = i + 1; j <= fr.n(); ++j) {
      Poly ang = sub(real_mul(variable_poly(fr, i), partial(j, f)),
                     real_mul(variable_poly(fr, j), partial(i, f)));
      out = add(out, left_scale(fr.unit(i), left_scale(fr.unit(j), ang)));
    }
  }
  return neg(out);
}

Poly thetabar_mult(const Poly& f) {
  const Frame& fr = f.frame();
  Poly xd0 = imag_left_mul(full_set(fr.n()), partial(0, f));
  return sub(xd0, euler_A(full_set(fr.n()), f));
}

Poly theta_mult(const Poly& f) {
  const Frame& fr = f.frame();
  Poly xd0 = imag_left_mul(full_set(fr.n()), partial(0, f));
  return add(xd0, euler_A(full_set(fr.n()), f));
}

Poly dunkl_T(const Multiplicities& k, int i, const Poly& f) {
  if (i < 1 || i > f.frame().n())
    throw std::invalid_argument("dunkl_T: index out of range");
  if (k.n() != f.frame().n())
    throw std::invalid_argument("dunkl_T: multiplicity count does not match frame");
  Poly out = partial(i, f);
  if (k.at(i) == 0) return out;
  Poly diff = sub(f, reflect(i, f));
  Poly quot;
  try {
    quot = divide_by_xi(i, diff);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("dunkl_T: difference part not divisible by x" +
                           std::to_string(i));
  }
  return add(out, scale(k.at(i), quot));
}

Poly dunkl_dirac_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "dunkl_dirac_A");
  Poly out(f.frame());
  for (int i : A)
    out = add(out, left_scale(f.frame().unit(i), dunkl_T(k, i, f)));
  return out;
}

Poly dunkl_CR_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "dunkl_CR_A");
  Poly out = partial(0, f);
  out = add(out, imag_dirac(subset_complement(A, f.frame().n()), f));
  return add(out, dunkl_dirac_A(k, A, f));
}

Poly casimir_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "casimir_A");
  if (A.empty()) return scale(Rat(-1, 2), f);
  Poly xDf = imag_left_mul(A, dunkl_dirac_A(k, A, f));
  Poly Dxf = dunkl_dirac_A(k, A, imag_left_mul(A, f));
  return scale(Rat(1, 2), sub(sub(xDf, Dxf), f));
}

Poly s_tilde_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "s_tilde_A");
  Poly out(f.frame());
  for (int i : A)
    out = add(out, scale(k.at(i), sub(f, reflect(i, f))));
  return out;
}

Poly s_prime_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "s_prime_A");
  if (A.empty()) return Poly(f.frame());
  return s_tilde_A(k, A, spherical_value_A(A, f));
}

Poly s_dprime_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "s_dprime_A");
  if (A.empty()) return Poly(f.frame());
  return s_tilde_A(k, A, imag_weighted_value_A(A, f));
}

STriple script_S_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  STriple t;
  t.S = casimir_A(k, A, f);
  t.Sprime = s_prime_A(k, A, f);
  t.Sdprime = s_dprime_A(k, A, f);
  return t;
}

Poly gamma_tilde_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "gamma_tilde_A");
  return casimir_A(k, A, reflect_set(A, f));
}

Poly dunkl_CR_P(const Multiplicities& k,
                const std::vector<std::vector<int>>& blocks, const Poly& f) {
  Poly out = partial(0, f);
  std::vector<bool> seen(static_cast<std::size_t>(f.frame().n()) + 1, false);
  for (const auto& A : blocks) {
    check_subset(A, f.frame().n(), "dunkl_CR_P");
    for (int i : A) {
      if (seen[static_cast<std::size_t>(i)])
        throw std::invalid_argument("dunkl_CR_P: blocks overlap at index " +
                                    std::to_string(i));
      seen[static_cast<std::size_t>(i)] = true;
    }
    out = add(out, dunkl_dirac_A(k, A, f));
  }
  for (int i = 1; i <= f.frame().n(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("dunkl_CR_P: blocks do not cover index " +
                                  std::to_string(i));
  return out;
}

std::vector<STriple> script_S_P(const Multiplicities& k,
                                const std::vector<std::vector<int>>& blocks,
                                const Poly& f) {
  std::vector<STriple> out;
  out.reserve(blocks.size());
  for (const auto& A : blocks) out.push_back(script_S_A(k, A, f));
  return out;
}

Poly dunkl_laplacian(const Multiplicities& k, const Poly& f) {
  return add(partial(0, partial(0, f)),
             dunkl_laplacian_A(k, full_set(f.frame().n()), f));
}

Poly dunkl_laplacian_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "dunkl_laplacian_A");
  Poly out(f.frame());
  for (int i : A) out = add(out, dunkl_T(k, i, dunkl_T(k, i, f)));
  return out;
}

Poly integral_form_D(const Multiplicities& k, const Poly& f) {
  const Frame& fr = f.frame();
  if (k.n() != fr.n())
    throw std::invalid_argument("integral_form_D: multiplicity count does not match frame");
  Poly out = cauchy_riemann(f);
  for (int i = 1; i <= fr.n(); ++i) {
    if (k.at(i) == 0) continue;
    // int_0^1 g(x - 2 t x_i v_i) dt keeps the monomials of g with even
    // degree m in x_i, scaled by 1/(m+1); odd degrees integrate to zero.
    Poly integ(fr);
    const Poly di = partial(i, f);
    for (const auto& [mono, coeff] : di.terms()) {
      int m = mono[static_cast<std::size_t>(i)];
      if (m % 2 != 0) continue;
      integ.add_term(mono, coeff.scaled(Rat(1, m + 1)));
    }
    out = add(out, left_scale(fr.unit(i).scaled(2 * k.at(i)), integ));
  }
  return out;
}

Poly commutator(const PolyOp& a, const PolyOp& b, const Poly& f) {
  return sub(a(b(f)), b(a(f)));
}

Poly anticommutator(const PolyOp& a, const PolyOp& b, const Poly& f) {
  return add(a(b(f)), b(a(f)));
}

}  // namespace dunkl
