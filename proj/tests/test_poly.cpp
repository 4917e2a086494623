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

#include <map>
#include <vector>

#include "doctest.h"
#include "dunkl/poly.hpp"
#include "dunkl/selftest.hpp"

using namespace dunkl;

namespace {

Poly xpow_term(const Frame& fr, std::vector<int> exps, const Element& a) {
  Monomial m(exps.size(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i)
    m[i] = static_cast<unsigned>(exps[i]);
  return monomial_poly(fr, m, a);
}

}  // namespace

TEST_CASE("partial derivative basics") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 1) + Element::basis(fr.tab(), 0);

  CHECK(partial(0, xpow_term(fr, {2, 0, 0, 0}, a)) ==
        scale(Rat(2), xpow_term(fr, {1, 0, 0, 0}, a)));
  CHECK(partial(1, xpow_term(fr, {1, 1, 0, 0}, a)) ==
        xpow_term(fr, {1, 0, 0, 0}, a));
  CHECK(partial(2, xpow_term(fr, {0, 3, 0, 0}, a)).is_zero());
  CHECK_THROWS_AS(partial(4, variable_poly(fr, 0)), std::invalid_argument);
}

TEST_CASE("reflections are involutions and interact with partials") {
  Algebra alg = make_algebra("Cl(0,3)");
  const Frame& fr = alg.frame;
  Rng rng(101);
  for (int t = 0; t < 20; ++t) {
    Poly f = rng.poly(fr, 4, 6);
    CHECK(reflect(1, reflect(1, f)) == f);
    CHECK(reflect(2, reflect(3, f)) == reflect(3, reflect(2, f)));
    CHECK(partial(1, reflect(2, f)) == reflect(2, partial(1, f)));
    CHECK(partial(1, reflect(1, f)) == neg(reflect(1, partial(1, f))));
    CHECK(reflect_set({1, 2}, f) == reflect(1, reflect(2, f)));
  }
  CHECK_THROWS_AS(reflect(0, variable_poly(fr, 1)), std::invalid_argument);
}

TEST_CASE("reflect negates odd powers only") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 2);
  CHECK(reflect(1, xpow_term(fr, {0, 1, 0, 0}, a)) ==
        neg(xpow_term(fr, {0, 1, 0, 0}, a)));
  CHECK(reflect(1, xpow_term(fr, {1, 2, 0, 0}, a)) ==
        xpow_term(fr, {1, 2, 0, 0}, a));
}

TEST_CASE("euler operator multiplies by the partial degree") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 0);
  CHECK(euler_A({1, 2, 3}, xpow_term(fr, {0, 1, 1, 0}, a)) ==
        scale(Rat(2), xpow_term(fr, {0, 1, 1, 0}, a)));
  CHECK(euler_A({1}, xpow_term(fr, {0, 0, 3, 0}, a)).is_zero());
  CHECK(euler_A({1, 2, 3}, xpow_term(fr, {2, 0, 0, 0}, a)).is_zero());
}

TEST_CASE("exact division by a variable") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 3);
  Poly f = add(xpow_term(fr, {0, 3, 1, 0}, a), xpow_term(fr, {1, 1, 0, 0}, a));
  Poly q = divide_by_xi(1, f);
  CHECK(real_mul(variable_poly(fr, 1), q) == f);
  CHECK(q == add(xpow_term(fr, {0, 2, 1, 0}, a), xpow_term(fr, {1, 0, 0, 0}, a)));
  CHECK_THROWS(divide_by_xi(1, variable_poly(fr, 0)));
}

TEST_CASE("left scaling respects unit anticommutation") {
  for (const char* spec : {"H", "O"}) {
    CAPTURE(spec);
    Algebra alg = make_algebra(spec);
    const Frame& fr = alg.frame;
    Rng rng(202);
    Element v1 = fr.unit(1), v2 = fr.unit(2);
    for (int t = 0; t < 20; ++t) {
      Poly f = rng.poly(fr, 3, 5);
      CHECK(left_scale(v1, left_scale(v1, f)) == neg(f));
      CHECK(left_scale(v1, left_scale(v2, f)) ==
            neg(left_scale(v2, left_scale(v1, f))));
    }
  }
}

TEST_CASE("spherical values on simple terms") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 0) + Element::basis(fr.tab(), 3);
  Poly x0a = xpow_term(fr, {1, 0, 0, 0}, a);
  Poly x1a = xpow_term(fr, {0, 1, 0, 0}, a);

  CHECK(spherical_value_A({1, 2, 3}, x0a) == x0a);
  CHECK(spherical_value_A({1}, x1a).is_zero());
  CHECK(imag_weighted_value_A({1}, constant_poly(fr, a)).is_zero());
  CHECK(imag_weighted_value_A({1}, x1a) ==
        xpow_term(fr, {0, 2, 0, 0}, mul(fr.unit(1), a)));
  CHECK_THROWS_AS(spherical_value_A({}, x0a), std::invalid_argument);
}

TEST_CASE("slice power polynomials match the closed quadratic form") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element one = Element::basis(fr.tab(), 0);

  CHECK(slice_power_poly(fr, 0) == constant_poly(fr, one));
  CHECK(slice_power_poly(fr, 1) ==
        add(variable_poly(fr, 0), imaginary_poly(fr, {1, 2, 3})));

  Poly expect(fr);
  expect = add(expect, xpow_term(fr, {2, 0, 0, 0}, one));
  expect = sub(expect, xpow_term(fr, {0, 2, 0, 0}, one));
  expect = sub(expect, xpow_term(fr, {0, 0, 2, 0}, one));
  expect = sub(expect, xpow_term(fr, {0, 0, 0, 2}, one));
  expect = add(expect, xpow_term(fr, {1, 1, 0, 0}, fr.unit(1).scaled(Rat(2))));
  expect = add(expect, xpow_term(fr, {1, 0, 1, 0}, fr.unit(2).scaled(Rat(2))));
  expect = add(expect, xpow_term(fr, {1, 0, 0, 1}, fr.unit(3).scaled(Rat(2))));
  CHECK(slice_power_poly(fr, 2) == expect);
}

TEST_CASE("slice powers evaluate to algebra powers at rational points") {
  for (const char* spec : {"H", "Cl(0,4)", "O"}) {
    CAPTURE(spec);
    Algebra alg = make_algebra(spec);
    const Frame& fr = alg.frame;
    Rng rng(303);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rat> pt = rng.point(fr.n());
      Element x = Element::scalar(fr.tab(), pt[0]);
      for (int i = 1; i <= fr.n(); ++i)
        x = x + fr.unit(i).scaled(pt[static_cast<std::size_t>(i)]);
      int m = static_cast<int>(rng.pick(0, 6));
      CHECK(eval(slice_power_poly(fr, m), pt) == power(fr, x, m));
    }
  }
}

TEST_CASE("slice power evaluation reproduces the quaternion square") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<Rat> pt = {Rat(1), Rat(1), Rat(0), Rat(0)};
  Element x = Element::basis(fr.tab(), 0) + Element::basis(fr.tab(), 1);
  CHECK(eval(slice_power_poly(fr, 2), pt) == power(fr, x, 2));
  CHECK(power(fr, x, 2) == Element::basis(fr.tab(), 1).scaled(Rat(2)));
}

TEST_CASE("sub-frame slice powers restrict and extend the full ones") {
  Algebra alg = make_algebra("Cl(0,4)");
  const Frame& fr = alg.frame;
  Rng rng(404);
  std::vector<int> A = {2, 4};
  for (int m = 0; m <= 5; ++m) {
    CHECK(slice_power_poly_A(fr, full_set(fr.n()), m) == slice_power_poly(fr, m));
    for (int t = 0; t < 10; ++t) {
      std::vector<Rat> pt = rng.point(fr.n());
      Element x = Element::scalar(fr.tab(), pt[0]);
      for (int i : A) x = x + fr.unit(i).scaled(pt[static_cast<std::size_t>(i)]);
      std::vector<Rat> masked(pt.size(), Rat(0));
      masked[0] = pt[0];
      for (int i : A) masked[static_cast<std::size_t>(i)] = pt[static_cast<std::size_t>(i)];
      CHECK(eval(slice_power_poly_A(fr, A, m), masked) == power(fr, x, m));
    }
  }
}

TEST_CASE("homogeneous components partition the terms by degree") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 0);
  Poly f = add(variable_poly(fr, 0), xpow_term(fr, {0, 2, 0, 0}, a));
  std::map<int, Poly> parts = homogeneous_components(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == variable_poly(fr, 0));
  CHECK(parts.at(2) == xpow_term(fr, {0, 2, 0, 0}, a));
  CHECK(add(parts.at(1), parts.at(2)) == f);
}

TEST_CASE("zero pruning and degrees") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Rng rng(505);
  Poly f = rng.poly(fr, 4, 6);
  CHECK(sub(f, f).is_zero());
  CHECK(sub(f, f).terms().empty());
  CHECK(zero_poly(fr).total_degree() == -1);
  CHECK(scale(Rat(0), f).is_zero());
}

TEST_CASE("evaluation is linear and multiplicative over real monomials") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 1);
  std::vector<Rat> pt = {rat(2), rat(-1), rat(1, 2), rat(3)};
  CHECK(eval(xpow_term(fr, {1, 1, 0, 0}, a), pt) == a.scaled(rat(-2)));
  CHECK(eval(zero_poly(fr), pt).is_zero());
  CHECK(eval(constant_poly(fr, a), pt) == a);
}
