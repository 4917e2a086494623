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
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "dunkl/selftest.hpp"
#include "dunkl/spaces.hpp"

using namespace dunkl;

TEST_CASE("partition construction canonicalizes and validates") {
  PartitionSpec P = make_partition(3, {{3, 1}, {2}});
  CHECK(P.blocks == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(P.k.k == std::vector<Rat>{rat(-1, 4), Rat(0), rat(-1, 4)});
  CHECK(P.admissible);
  CHECK_THROWS_AS(make_partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(3, {{1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(3, {{1, 2, 3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(3, {{}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("default and second multiplicity choices are admissible") {
  std::vector<std::vector<int>> blocks = {{1, 2}, {3}};
  Multiplicities k1 = default_multiplicities(3, blocks);
  CHECK(k1.k == std::vector<Rat>{rat(-1, 4), rat(-1, 4), Rat(0)});
  Multiplicities k2 = second_multiplicities(3, blocks);
  CHECK(k2.k == std::vector<Rat>{Rat(0), rat(-1, 2), Rat(0)});
  CHECK(is_admissible(blocks, k1));
  CHECK(is_admissible(blocks, k2));

  Multiplicities kfull = default_multiplicities_A(3, {1, 2, 3});
  CHECK(kfull.k == std::vector<Rat>{rat(-1, 3), rat(-1, 3), rat(-1, 3)});
  CHECK(is_admissible_A({1, 2, 3}, kfull));
  CHECK(gamma_A(kfull, {1, 2, 3}) == rat(1, 2));

  Multiplicities two_zeros;
  two_zeros.k = {Rat(0), Rat(0), Rat(-1)};
  CHECK_FALSE(is_admissible_A({1, 2, 3}, two_zeros));
  Multiplicities positive;
  positive.k = {rat(1, 2), Rat(-1), rat(-1, 2)};
  CHECK_FALSE(is_admissible_A({1, 2, 3}, positive));
  Multiplicities bad_sum;
  bad_sum.k = {rat(-1, 2), rat(-1, 2), rat(-1, 2)};
  CHECK_FALSE(is_admissible_A({1, 2, 3}, bad_sum));
}

TEST_CASE("slice polynomials sit in every block kernel") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Rng rng(7);
  std::vector<std::vector<int>> subsets = {{1},    {2},    {3},   {1, 2},
                                           {1, 3}, {2, 3}, {1, 2, 3}};
  for (int t = 0; t < 5; ++t) {
    Poly f = rng.slice_poly(fr, 4, 4);
    CHECK(is_slice_poly(f).member);
    for (const auto& A : subsets) {
      Multiplicities k = default_multiplicities_A(fr.n(), A);
      CHECK(script_S_A(k, A, f).all_zero());
    }
  }
}

TEST_CASE("non-slice witness names the violated operator") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Rng rng(8);
  Poly f = add(rng.slice_poly(fr, 3, 3),
               right_scale(variable_poly(fr, 1), rng.nonzero_element(fr.tab())));
  Verdict v = is_slice_poly(f);
  CHECK_FALSE(v.member);
  REQUIRE(!v.witnesses.empty());
  CHECK(v.witnesses.front().first == "S[1,2,3]");
  CHECK_FALSE(v.witnesses.front().second.is_zero());
}

TEST_CASE("slice-regular round trip recovers the coefficients") {
  for (const char* spec : {"H", "Cl(0,4)"}) {
    CAPTURE(spec);
    Algebra alg = make_algebra(spec);
    const Frame& fr = alg.frame;
    Rng rng(9);
    for (int t = 0; t < 5; ++t) {
      std::vector<Element> coeffs;
      Poly f = rng.slice_regular_poly(fr, 4, &coeffs);
      Verdict v = is_slice_regular_poly(f);
      CHECK(v.member);
      std::vector<Element> got = slice_regular_coefficients(f);
      REQUIRE(got.size() == coeffs.size());
      for (std::size_t j = 0; j < coeffs.size(); ++j) CHECK(got[j] == coeffs[j]);
    }
    Poly bad = right_scale(variable_poly(fr, 1), Element::basis(fr.tab(), 1));
    CHECK_FALSE(is_slice_regular_poly(bad).member);
    CHECK_THROWS_AS(slice_regular_coefficients(bad), std::invalid_argument);
  }
}

TEST_CASE("slice decomposition of a squared slice variable") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Element a = Element::basis(fr.tab(), 1) + Element::scalar(fr.tab(), Rat(2));
  Poly f = right_scale(slice_power_poly(fr, 2), a);

  SliceDecomposition dec = slice_decompose(f);
  std::map<std::pair<int, int>, Element> parts;
  for (const auto& [m, ell, c] : dec.parts) parts[{m, ell}] = c;
  REQUIRE(parts.size() == 3);
  CHECK(parts.at({2, 0}) == a);
  CHECK(parts.at({1, 1}) == a.scaled(Rat(2)));
  CHECK(parts.at({0, 2}) == a);
  for (const auto& [m, ell, c] : dec.parts)
    CHECK(slice_monomial_poly(fr, m, ell, c) ==
          right_scale(slice_monomial_poly(fr, m, ell, Element::scalar(fr.tab(), Rat(1))), c));

  SliceDecomposition lin = slice_decompose(right_scale(variable_poly(fr, 0), a));
  std::map<std::pair<int, int>, Element> xc;
  for (const auto& [alpha, beta, c] : lin.xc_parts) xc[{alpha, beta}] = c;
  REQUIRE(xc.size() == 2);
  CHECK(xc.at({1, 0}) == a.scaled(rat(1, 2)));
  CHECK(xc.at({0, 1}) == a.scaled(rat(1, 2)));
}

TEST_CASE("subset membership separates slice powers from plain variables") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<int> A = {2, 3};
  Multiplicities k = default_multiplicities_A(fr.n(), A);
  Rng rng(10);
  for (int m = 1; m <= 3; ++m) {
    Poly f = right_scale(slice_power_poly_A(fr, A, m), rng.nonzero_element(fr.tab()));
    CHECK(membership_A(k, A, f).member);
  }
  Verdict bad = membership_A(k, A, right_scale(variable_poly(fr, 2),
                                               rng.nonzero_element(fr.tab())));
  CHECK_FALSE(bad.member);
  CHECK(!bad.witnesses.empty());
  Multiplicities inadmissible;
  inadmissible.k = {Rat(0), Rat(-1), Rat(-1)};
  CHECK_THROWS_AS(membership_A(inadmissible, A, variable_poly(fr, 0)),
                  std::invalid_argument);
}

TEST_CASE("membership with split multiplicities for the two operators") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<int> A = {2, 3};
  Multiplicities kD = default_multiplicities_A(fr.n(), A);
  Multiplicities kS = second_multiplicities(fr.n(), {{2, 3}, {1}});
  REQUIRE(is_admissible_A(A, kS));
  Rng rng(11);
  Poly f = right_scale(slice_power_poly_A(fr, A, 2), rng.nonzero_element(fr.tab()));
  CHECK(membership_AB(kD, A, kS, A, f).member);
  CHECK(membership_AB(A, A, f).member);
  CHECK_FALSE(membership_AB(kD, A, kS, A, variable_poly(fr, 3)).member);
}

TEST_CASE("partition membership on paravector blocks") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  PartitionSpec P = make_partition(3, {{1}, {2, 3}});
  Poly f1 = add(variable_poly(fr, 0),
                right_scale(variable_poly(fr, 1), Element::basis(fr.tab(), 1)));
  Poly f2 = add(variable_poly(fr, 0),
                add(right_scale(variable_poly(fr, 2), Element::basis(fr.tab(), 2)),
                    right_scale(variable_poly(fr, 3), Element::basis(fr.tab(), 3))));
  CHECK(membership_P(P, f1).member);
  CHECK(membership_P(P, f2).member);
  Element c1 = Element::basis(fr.tab(), 2) + Element::scalar(fr.tab(), Rat(1));
  Element c2 = Element::basis(fr.tab(), 1).scaled(rat(-1, 2));
  CHECK(membership_P(P, add(right_scale(f1, c1), right_scale(f2, c2))).member);

  Verdict bad = membership_P(P, variable_poly(fr, 2));
  CHECK_FALSE(bad.member);
  REQUIRE(!bad.witnesses.empty());
  CHECK(bad.witnesses.front().first == "D{1|2,3}");
}

TEST_CASE("one multiplicity sequence can serve two partitions") {
  Algebra alg = make_algebra("Cl(0,4)");
  const Frame& fr = alg.frame;
  Multiplicities k;
  k.k = {Rat(0), rat(-1, 2), rat(-1, 4), rat(-1, 4)};
  std::vector<std::vector<int>> blocks1 = {{1}, {2, 3, 4}};
  std::vector<std::vector<int>> blocks2 = {{1, 2}, {3, 4}};
  CHECK(is_admissible(blocks1, k));
  CHECK(is_admissible(blocks2, k));

  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    Poly f = rng.poly(fr, 4, 5);
    CHECK(dunkl_CR_P(k, blocks1, f) == dunkl_CR_P(k, blocks2, f));
  }

  PartitionSpec P1 = make_partition(4, blocks1, k);
  PartitionSpec P2 = make_partition(4, blocks2, k);
  SeparatingWitness w = separating_witness(fr, P1, P2);
  CHECK(membership_P(P1, w.witness).member == w.in_first);
  CHECK(membership_P(P2, w.witness).member == !w.in_first);
  CHECK_THROWS_AS(separating_witness(fr, P1, P1), std::invalid_argument);
}

TEST_CASE("partition enumeration in restricted growth order") {
  auto parts = enumerate_partitions(4);
  REQUIRE(parts.size() == 15);
  CHECK(parts.front() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(parts.back() == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  bool found = false;
  for (const auto& blocks : parts)
    if (blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}}) found = true;
  CHECK(found);
  for (const auto& blocks : parts) CHECK_NOTHROW(make_partition(4, blocks));
}

TEST_CASE("census values for small frames") {
  const long long bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  const long long parts[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    Census c = census(n);
    CHECK(c.bell == bell[n - 1]);
    CHECK(c.partition_count == parts[n - 1]);
    CHECK(c.subset_spaces == (1LL << n) - n);
  }
}

TEST_CASE("fans expand to singleton prefixes plus runs") {
  PartitionSpec P = partition_from_fan({1, 3});
  CHECK(P.n == 3);
  CHECK(P.blocks == std::vector<std::vector<int>>{{1}, {2, 3}});
  PartitionSpec Q = partition_from_fan({0, 2, 4});
  CHECK(Q.blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  PartitionSpec R = partition_from_fan({3});
  CHECK(R.blocks == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK_THROWS_AS(partition_from_fan({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_fan(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("labels render subsets and partitions") {
  CHECK(subset_label({2, 3}) == "2,3");
  CHECK(subset_label({1}) == "1");
  CHECK(partition_label({{1}, {2, 3}}) == "1|2,3");
  CHECK(partition_label({{1, 2, 3}}) == "1,2,3");
  CHECK(equivalence_class_label(make_partition(3, {{1}, {2, 3}})) ==
        std::vector<int>{2, 1});
  CHECK(equivalence_class_label(make_partition(4, {{1, 2}, {3, 4}})) ==
        std::vector<int>{2, 2});
}

TEST_CASE("membership verdicts survive a change of admissible multiplicities") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<std::vector<int>> blocks = {{1}, {2, 3}};
  Rng rng(13);
  std::vector<Poly> suite;
  for (int t = 0; t < 4; ++t) suite.push_back(rng.poly(fr, 3, 4));
  suite.push_back(add(variable_poly(fr, 0),
                      right_scale(variable_poly(fr, 1), Element::basis(fr.tab(), 1))));
  IndependenceReport rep = multiplicity_independence(
      blocks, default_multiplicities(3, blocks), second_multiplicities(3, blocks),
      suite);
  CHECK(rep.agree);
}

TEST_CASE("membership verdicts transport along frame permutations") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  PartitionSpec P = make_partition(3, {{1}, {2, 3}});
  std::vector<int> sigma = {2, 3, 1};
  PartitionSpec Ps = permute_partition(P, sigma);
  CHECK(Ps.blocks == std::vector<std::vector<int>>{{1, 2}, {3}});
  Rng rng(14);
  for (int t = 0; t < 5; ++t) CHECK(permuted_equivalence(P, sigma, rng.poly(fr, 3, 4)));
  CHECK(permuted_equivalence(P, sigma,
                             add(variable_poly(fr, 0),
                                 right_scale(variable_poly(fr, 1),
                                             Element::basis(fr.tab(), 1)))));
}

TEST_CASE("block slice components are indexed by block masks") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  Rng rng(15);
  PartitionSpec single = make_partition(3, {{1, 2, 3}});
  auto comps = p_slice_components(single, rng.poly(fr, 3, 4));
  REQUIRE(comps.size() == 2);
  CHECK(comps.count(0u) == 1);
  CHECK(comps.count(1u) == 1);

  PartitionSpec two = make_partition(3, {{1}, {2, 3}});
  auto comps2 = p_slice_components(two, rng.poly(fr, 3, 4));
  REQUIRE(comps2.size() == 4);
  for (unsigned mask = 0; mask < 4; ++mask) CHECK(comps2.count(mask) == 1);
}

TEST_CASE("kernel form round trip in the block variables") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<int> A = {2, 3};
  Multiplicities k = default_multiplicities_A(fr.n(), A);
  Rng rng(16);

  SAForm form;
  form.F_q[0] = rng.real_poly_on(fr, {1}, true, 2, 3);
  form.F_q[1] = right_scale(variable_poly(fr, 1), rng.nonzero_element(fr.tab()));
  form.G_q[0] = constant_poly(fr, rng.nonzero_element(fr.tab()));
  Poly f = sa_compose(A, form);
  CHECK(script_S_A(k, A, f).all_zero());

  SAForm got = sa_decompose(k, A, f);
  REQUIRE(got.F_q.size() == form.F_q.size());
  REQUIRE(got.G_q.size() == form.G_q.size());
  for (const auto& [d, c] : form.F_q) CHECK(got.F_q.at(d) == c);
  for (const auto& [d, g] : form.G_q) CHECK(got.G_q.at(d) == g);

  CHECK_THROWS_AS(sa_decompose(k, A, variable_poly(fr, 2)), std::invalid_argument);
}

TEST_CASE("q expansion extraction on rotation invariant input") {
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  std::vector<int> A = {2, 3};
  Rng rng(17);
  Poly c = rng.real_poly_on(fr, {1}, true, 2, 2);
  Poly h = constant_poly(fr, rng.nonzero_element(fr.tab()));
  Poly f = add(real_mul(norm_square_poly(fr, A), h), c);
  auto expansion = extract_q_expansion(A, f);
  REQUIRE(expansion.size() == 2);
  CHECK(expansion.at(0) == c);
  CHECK(expansion.at(1) == h);
  CHECK_THROWS_AS(extract_q_expansion(A, variable_poly(fr, 2)),
                  std::invalid_argument);
}
