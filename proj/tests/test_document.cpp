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

#include <string>
#include <vector>

#include "doctest.h"
#include "dunkl/document.hpp"

using namespace dunkl;

TEST_CASE("documents parse headers, directives and polynomials") {
  const std::string text =
      "algebra: H\n"
      "k: 0,-1/4,-1/4\n"
      "partition: {1|2,3}\n"
      "\n"
      "poly f1 = (1)*x0 + (i)*x1\n"
      "poly f2 = (1)*x0 + (j)*x2 + (k)*x3\n";
  InputDocument doc = parse_document(text);
  CHECK(doc.algebra_spec == "H");
  CHECK(doc.algebra.frame.n() == 3);
  REQUIRE(doc.k.has_value());
  CHECK(doc.k->k == std::vector<Rat>{Rat(0), rat(-1, 4), rat(-1, 4)});
  REQUIRE(doc.partition.has_value());
  CHECK(*doc.partition == std::vector<std::vector<int>>{{1}, {2, 3}});
  REQUIRE(doc.polys.size() == 2);
  CHECK(doc.polys[0].first == "f1");

  const Frame& fr = doc.algebra.frame;
  Poly expect = add(variable_poly(fr, 0),
                    right_scale(variable_poly(fr, 1), Element::basis(fr.tab(), 1)));
  CHECK(doc.polys[0].second == expect);
}

TEST_CASE("serialization round trips to a fixed point") {
  const std::string text =
      "algebra: Cl(0,3)\n"
      "k: -1/3,-1/3,-1/3\n"
      "poly f = (1/2)*1 + (e12)*x1^2 + (-1)*e3 * x2 x3\n";
  InputDocument doc = parse_document(text);
  std::string s1 = serialize_document(doc);
  InputDocument doc2 = parse_document(s1);
  CHECK(serialize_document(doc2) == s1);
  REQUIRE(doc2.polys.size() == doc.polys.size());
  CHECK(doc2.polys[0].second.str() == doc.polys[0].second.str());
  CHECK(s1.find("algebra: Cl(0,3)") == 0);
  CHECK(s1.find("k: -1/3,-1/3,-1/3") != std::string::npos);
}

TEST_CASE("blade coefficients attach on the left of the monomial") {
  Algebra alg = make_algebra("Cl(0,3)");
  const Frame& fr = alg.frame;
  Poly p = parse_poly_text(fr, "(e12)*x1^2");
  Monomial m(static_cast<std::size_t>(fr.n()) + 1, 0);
  m[1] = 2;
  CHECK(p == monomial_poly(fr, m, Element::basis(fr.tab(), 3)));

  Poly q = parse_poly_text(fr, "2 x1 - (1/3)*e23 * x0");
  Monomial mx(static_cast<std::size_t>(fr.n()) + 1, 0);
  mx[1] = 1;
  Monomial m0(static_cast<std::size_t>(fr.n()) + 1, 0);
  m0[0] = 1;
  Poly expect = add(monomial_poly(fr, mx, Element::scalar(fr.tab(), Rat(2))),
                    monomial_poly(fr, m0, Element::basis(fr.tab(), 6).scaled(rat(-1, 3))));
  CHECK(q == expect);
}

TEST_CASE("parse errors carry source positions") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  try {
    parse_poly_text(fr, "(e5)*x0", 7);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 2);
    CHECK(std::string(e.what()).find("unknown basis name 'e5'") != std::string::npos);
  }
  try {
    parse_poly_text(fr, "(1)*x4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("variable index out of range") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly_text(fr, "((i)*x1)*((j)*x2)"), ParseError);
  CHECK_THROWS_AS(parse_poly_text(fr, "(1/0)*x0"), ParseError);
  CHECK_THROWS_AS(parse_poly_text(fr, "(1)*x0 +"), ParseError);
}

TEST_CASE("document level errors name the offending line") {
  CHECK_THROWS_AS(parse_document("poly f = (1)*x0\n"), ParseError);
  CHECK_THROWS_AS(parse_document(""), ParseError);
  CHECK_THROWS_AS(parse_document("algebra: X\n"), ParseError);
  CHECK_THROWS_AS(parse_document("algebra: H\nk: 0,-1/4\n"), ParseError);
  CHECK_THROWS_AS(parse_document("algebra: H\npartition: {1,2|2,3}\n"), ParseError);
  CHECK_THROWS_AS(parse_document("algebra: H\npartition: {1|3}\n"), ParseError);
  CHECK_THROWS_AS(parse_document("algebra: H\npartition: {1|2,3,4}\n"), ParseError);
  CHECK_THROWS_AS(
      parse_document("algebra: H\npoly f = (1)*x0\npoly f = (2)*x0\n"),
      ParseError);
  try {
    parse_document("algebra: H\n\n\npoly f = (e9)*x0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("directive fragments parse standalone") {
  CHECK(parse_partition_blocks("{1,2|3}") ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK_THROWS_AS(parse_partition_blocks("1,2|3"), std::invalid_argument);
  CHECK(parse_multiplicity_list("0,-1/4,-1/4") ==
        std::vector<Rat>{Rat(0), rat(-1, 4), rat(-1, 4)});
  CHECK_THROWS_AS(parse_multiplicity_list("0,,1"), std::invalid_argument);
  CHECK(parse_subset("3,2") == std::vector<int>{2, 3});
  CHECK_THROWS_AS(parse_subset("2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("0,1"), std::invalid_argument);
}
