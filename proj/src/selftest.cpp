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

#include "dunkl/selftest.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "dunkl/operators.hpp"
#include "dunkl/pointcheck.hpp"
#include "dunkl/spaces.hpp"
#include "dunkl/spectral.hpp"

namespace dunkl {

long Rng::pick(long lo, long hi) {
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ULL;
  return lo + static_cast<long>(eng_() % span);
}

Rat Rng::small_rat(long max_abs, long max_den) {
  return rat(pick(-max_abs, max_abs), pick(1, max_den));
}

Element Rng::element(const AlgebraTable* tab, long max_abs) {
  Element out(tab);
  for (int i = 0; i < tab->dim; ++i) out.coord(i) = Rat(pick(-max_abs, max_abs));
  return out;
}

Element Rng::nonzero_element(const AlgebraTable* tab, long max_abs) {
  for (;;) {
    Element out = element(tab, max_abs);
    if (!out.is_zero()) return out;
  }
}

std::vector<Rat> Rng::point(int n, long max_abs, long max_den) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.push_back(small_rat(max_abs, max_den));
  return out;
}

Poly Rng::poly(const Frame& frame, int max_degree, int terms, long max_abs) {
  Poly out(frame);
  for (int t = 0; t < terms; ++t) {
    int d = static_cast<int>(pick(0, max_degree));
    Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
    for (int s = 0; s < d; ++s) ++m[static_cast<std::size_t>(pick(0, frame.n()))];
    out.add_term(m, element(frame.tab(), max_abs));
  }
  return out;
}

Poly Rng::real_poly_on(const Frame& frame, const std::vector<int>& vars, bool use_x0,
                       int max_degree, int terms) {
  std::vector<int> pool = vars;
  if (use_x0) pool.push_back(0);
  Poly out(frame);
  for (int t = 0; t < terms; ++t) {
    int d = static_cast<int>(pick(0, max_degree));
    Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
    for (int s = 0; s < d && !pool.empty(); ++s)
      ++m[static_cast<std::size_t>(pool[static_cast<std::size_t>(
          pick(0, static_cast<long>(pool.size()) - 1))])];
    out.add_term(m, Element::scalar(frame.tab(), Rat(pick(-2, 2))));
  }
  return out;
}

Poly Rng::slice_poly(const Frame& frame, int max_degree, int terms) {
  Poly out(frame);
  for (int t = 0; t < terms; ++t) {
    int m = static_cast<int>(pick(0, max_degree));
    int ell = static_cast<int>(pick(0, max_degree - m));
    out = add(out, slice_monomial_poly(frame, m, ell, element(frame.tab())));
  }
  return out;
}

Poly Rng::slice_regular_poly(const Frame& frame, int max_degree,
                             std::vector<Element>* coeffs) {
  Poly out(frame);
  for (int j = 0; j <= max_degree; ++j) {
    Element a = (j == max_degree) ? nonzero_element(frame.tab()) : element(frame.tab());
    out = add(out, right_scale(slice_power_poly(frame, j), a));
    if (coeffs) coeffs->push_back(a);
  }
  return out;
}

namespace {

Poly poly_on(Rng& rng, const Frame& frame, const std::vector<int>& vars, bool use_x0,
             int max_degree, int terms) {
  std::vector<int> pool = vars;
  if (use_x0) pool.push_back(0);
  Poly out(frame);
  for (int t = 0; t < terms; ++t) {
    int d = static_cast<int>(rng.pick(0, max_degree));
    Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
    for (int s = 0; s < d && !pool.empty(); ++s)
      ++m[static_cast<std::size_t>(pool[static_cast<std::size_t>(
          rng.pick(0, static_cast<long>(pool.size()) - 1))])];
    out.add_term(m, rng.element(frame.tab()));
  }
  return out;
}

Poly paravector_poly(const Frame& frame, const std::vector<int>& B) {
  return add(variable_poly(frame, 0), imaginary_poly(frame, B));
}

// x_j - x_0 v_j for j outside the Dunkl block: annihilated by the
// Cauchy-Riemann part.
Poly fueter_variable(const Frame& frame, int j) {
  Poly out = variable_poly(frame, j);
  Monomial m(static_cast<std::size_t>(frame.n()) + 1, 0);
  m[0] = 1;
  out.add_term(m, -frame.unit(j));
  return out;
}

// Symmetrized product of two such variables:
// x_a x_b - x_0 x_a v_b - x_0 x_b v_a - delta_ab x_0^2.
Poly fueter_pair(const Frame& frame, int a, int b) {
  const std::size_t len = static_cast<std::size_t>(frame.n()) + 1;
  Poly out(frame);
  Monomial m(len, 0);
  ++m[static_cast<std::size_t>(a)];
  ++m[static_cast<std::size_t>(b)];
  out.add_term(m, Element::basis(frame.tab(), 0));
  Monomial ma(len, 0);
  ma[0] = 1;
  ++ma[static_cast<std::size_t>(a)];
  out.add_term(ma, -frame.unit(b));
  Monomial mb(len, 0);
  mb[0] = 1;
  ++mb[static_cast<std::size_t>(b)];
  out.add_term(mb, -frame.unit(a));
  if (a == b) {
    Monomial m0(len, 0);
    m0[0] = 2;
    out.add_term(m0, -Element::basis(frame.tab(), 0));
  }
  return out;
}

struct Failure {
  bool hit = false;
  std::string what;

  void note(const std::string& msg) {
    if (!hit) {
      hit = true;
      what = msg;
    }
  }
};

// The seven superalgebra relations for the block A, with gamma computed
// from the multiplicities.
void check_osp_relations(const Multiplicities& k, const std::vector<int>& A,
                         const Poly& f, const std::string& tag, Failure& fail,
                         int& checked) {
  const Frame& fr = f.frame();
  Poly q = norm_square_poly(fr, A);
  auto X = [&](const Poly& g) { return imag_left_mul(A, g); };
  auto D = [&](const Poly& g) { return dunkl_dirac_A(k, A, g); };
  auto E = [&](const Poly& g) { return euler_A(A, g); };
  auto L = [&](const Poly& g) { return dunkl_laplacian_A(k, A, g); };
  auto Q = [&](const Poly& g) { return real_mul(q, g); };
  Rat gamma = gamma_A(k, A);

  struct Rel {
    const char* name;
    Poly lhs;
    Poly rhs;
  };
  std::vector<Rel> rels;
  rels.push_back({"x(xf) = -qf", X(X(f)), neg(Q(f))});
  rels.push_back({"D(Df) = -Lf", D(D(f)), neg(L(f))});
  rels.push_back({"[E,x] = x", sub(E(X(f)), X(E(f))), X(f)});
  rels.push_back({"{x,D} = -2(E+g)", add(X(D(f)), D(X(f))),
                  sub(scale(Rat(-2), E(f)), scale(2 * gamma, f))});
  rels.push_back({"[D,E] = D", sub(D(E(f)), E(D(f))), D(f)});
  rels.push_back({"[L,x] = 2D", sub(L(X(f)), X(L(f))), scale(Rat(2), D(f))});
  rels.push_back({"[D,q] = 2x", sub(D(Q(f)), Q(D(f))), scale(Rat(2), X(f))});
  for (const Rel& r : rels) {
    ++checked;
    if (r.lhs != r.rhs) fail.note(tag + ": relation " + r.name);
  }
}

struct SuiteAlgebra {
  std::string spec;
  int degree;
};

const std::vector<SuiteAlgebra> kSuite = {
    {"H", 4}, {"Cl(0,4)", 4}, {"O", 2}};

CriterionResult crit_algebra_axioms(unsigned long long) {
  CriterionResult r{1, "algebra-axioms", true, ""};
  const char* specs[] = {"C",       "H",       "O",       "Cl(0,1)",
                         "Cl(0,2)", "Cl(0,3)", "Cl(0,4)", "Cl(0,5)"};
  int checked = 0;
  Failure fail;
  for (const char* s : specs) {
    Algebra alg = make_algebra(s);
    FrameReport t = verify_table(*alg.table);
    FrameReport fr = verify_frame(alg.frame);
    ++checked;
    if (!t.ok) fail.note(std::string(s) + ": " + t.failures.front());
    if (!fr.ok) fail.note(std::string(s) + ": " + fr.failures.front());
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : "8 algebras, exhaustive table and frame axioms";
  return r;
}

CriterionResult crit_osp(unsigned long long seed) {
  CriterionResult r{2, "osp-relations", true, ""};
  Failure fail;
  int checked = 0;
  for (const auto& sa : kSuite) {
    Rng rng(seed + std::hash<std::string>{}(sa.spec));
    Algebra alg = make_algebra(sa.spec);
    const int n = alg.frame.n();
    Multiplicities kf = default_multiplicities_A(n, full_set(n));
    for (int t = 0; t < 100; ++t) {
      Poly f = rng.poly(alg.frame, sa.degree, 6);
      check_osp_relations(kf, full_set(n), f,
                          sa.spec + " full poly " + std::to_string(t), fail, checked);
    }
    std::vector<std::vector<int>> choices = {{1}, {2, 3}, full_set(n - 1)};
    for (const auto& A : choices) {
      Multiplicities kA = default_multiplicities_A(n, A);
      for (int t = 0; t < 30; ++t) {
        Poly f = rng.poly(alg.frame, sa.degree, 5);
        check_osp_relations(kA, A, f,
                            sa.spec + " A=" + subset_label(A) + " poly " +
                                std::to_string(t),
                            fail, checked);
      }
    }
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " operator identities";
  return r;
}

CriterionResult crit_difference(unsigned long long seed) {
  CriterionResult r{3, "difference-identity", true, ""};
  Failure fail;
  int checked = 0;
  for (const auto& sa : kSuite) {
    Rng rng(seed + std::hash<std::string>{}(sa.spec));
    Algebra alg = make_algebra(sa.spec);
    const int n = alg.frame.n();
    for (int t = 0; t < 100; ++t) {
      Poly f = rng.poly(alg.frame, sa.degree, 6);
      Poly lhs = sub(imag_left_mul(full_set(n), cauchy_riemann(f)),
                     thetabar_mult(f));
      ++checked;
      if (lhs != neg(gamma_spherical(f)))
        fail.note(sa.spec + " multiplied identity, poly " + std::to_string(t));
    }
    for (int t = 0; t < 50; ++t) {
      Poly f = rng.poly(alg.frame, std::min(sa.degree, 3), 5);
      std::vector<Rat> pt = rng.point(n);
      bool off_axis = false;
      for (int i = 1; i <= n; ++i)
        if (pt[static_cast<std::size_t>(i)] != 0) off_axis = true;
      if (!off_axis) pt[1] = 1;
      ++checked;
      if (!check_difference_at(f, pt).ok)
        fail.note(sa.spec + " pointwise identity, sample " + std::to_string(t));
    }
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " identity checks";
  return r;
}

CriterionResult crit_sliceness(unsigned long long seed) {
  CriterionResult r{4, "sliceness", true, ""};
  Failure fail;
  int checked = 0;
  for (const char* spec : {"H", "Cl(0,4)"}) {
    Rng rng(seed + std::hash<std::string>{}(spec));
    Algebra alg = make_algebra(spec);
    const int n = alg.frame.n();
    Multiplicities kf = default_multiplicities_A(n, full_set(n));
    for (int t = 0; t < 50; ++t) {
      Poly f = rng.slice_poly(alg.frame, 4, 4);
      Verdict v = is_slice_poly(f);
      ++checked;
      if (!v.member) fail.note(std::string(spec) + " slice poly rejected");
      if (gamma_tilde_A(kf, full_set(n), f).is_zero() != v.member)
        fail.note(std::string(spec) + " companion verdict disagrees (slice side)");
    }
    for (int t = 0; t < 50; ++t) {
      Poly f = rng.slice_poly(alg.frame, 4, 3);
      Monomial m(static_cast<std::size_t>(n) + 1, 0);
      m[static_cast<std::size_t>(rng.pick(1, n))] = 1;
      f.add_term(m, rng.nonzero_element(alg.frame.tab()));
      Verdict v = is_slice_poly(f);
      ++checked;
      if (v.member || v.witnesses.empty())
        fail.note(std::string(spec) + " non-slice poly accepted or witness missing");
      if (gamma_tilde_A(kf, full_set(n), f).is_zero() != v.member)
        fail.note(std::string(spec) + " companion verdict disagrees (non-slice side)");
    }
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : "200 polynomials, Casimir and companion verdicts agree";
  return r;
}

CriterionResult crit_slice_regular(unsigned long long seed) {
  CriterionResult r{5, "slice-regularity", true, ""};
  Failure fail;
  int checked = 0;
  for (const char* spec : {"H", "Cl(0,4)"}) {
    Rng rng(seed + std::hash<std::string>{}(spec));
    Algebra alg = make_algebra(spec);
    for (int t = 0; t < 50; ++t) {
      std::vector<Element> drawn;
      Poly f = rng.slice_regular_poly(alg.frame, 5, &drawn);
      ++checked;
      if (!is_slice_regular_poly(f).member) {
        fail.note(std::string(spec) + " regular poly rejected");
        continue;
      }
      if (slice_regular_coefficients(f) != drawn)
        fail.note(std::string(spec) + " coefficient round-trip mismatch");
    }
    Poly xa = imag_left_mul(full_set(alg.frame.n()),
                            constant_poly(alg.frame, rng.nonzero_element(alg.frame.tab())));
    ++checked;
    if (!is_slice_poly(xa).member || is_slice_regular_poly(xa).member)
      fail.note(std::string(spec) + " x-times-constant verdicts wrong");
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " round-trips";
  return r;
}

CriterionResult crit_harmonicity(unsigned long long seed) {
  CriterionResult r{6, "dunkl-harmonicity", true, ""};
  Failure fail;
  int checked = 0;
  for (const char* spec : {"H", "Cl(0,4)"}) {
    Rng rng(seed + std::hash<std::string>{}(spec));
    Algebra alg = make_algebra(spec);
    const int n = alg.frame.n();
    Multiplicities kf = default_multiplicities_A(n, full_set(n));
    for (int t = 0; t < 50; ++t) {
      Poly f = rng.slice_regular_poly(alg.frame, 5);
      ++checked;
      if (!dunkl_laplacian(kf, f).is_zero())
        fail.note(std::string(spec) + " harmonicity fails on poly " + std::to_string(t));
      Poly lhs = imag_left_mul(full_set(n), cauchy_riemann(f));
      Poly rhs = scale(rat(1 - n, 2), sub(f, reflect_set(full_set(n), f)));
      if (lhs != rhs)
        fail.note(std::string(spec) + " spherical-derivative identity fails");
    }
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " polynomials";
  return r;
}

CriterionResult crit_integral_form(unsigned long long seed) {
  CriterionResult r{7, "integral-form", true, ""};
  Failure fail;
  int checked = 0;
  for (const auto& sa : kSuite) {
    Rng rng(seed + std::hash<std::string>{}(sa.spec));
    Algebra alg = make_algebra(sa.spec);
    const int n = alg.frame.n();
    for (int t = 0; t < 50; ++t) {
      Multiplicities k = default_multiplicities_A(n, full_set(n));
      if (t >= 25)
        for (int i = 0; i < n; ++i)
          k.k[static_cast<std::size_t>(i)] = -rat(rng.pick(0, 3), rng.pick(1, 2));
      Poly f = rng.poly(alg.frame, sa.degree, 6);
      ++checked;
      if (integral_form_D(k, f) != dunkl_CR_A(k, full_set(n), f))
        fail.note(sa.spec + " integral form mismatch, poly " + std::to_string(t));
    }
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " cross-checks";
  return r;
}

CriterionResult crit_linear_example(unsigned long long seed) {
  CriterionResult r{8, "linear-example", true, ""};
  Failure fail;
  Rng rng(seed);
  Algebra alg = make_algebra("H");
  const Frame& fr = alg.frame;
  const AlgebraTable* tab = fr.tab();
  std::vector<int> A = {2, 3};
  Multiplicities k;
  k.k = {Rat(0), Rat(-1, 4), Rat(-1, 4)};

  Element one = Element::basis(tab, 0);
  Element i = Element::basis(tab, 1);
  Element j = Element::basis(tab, 2);
  Element kq = Element::basis(tab, 3);

  auto xpoly = [&](int idx, const Element& a) {
    Monomial m(4, 0);
    m[static_cast<std::size_t>(idx)] = 1;
    return monomial_poly(fr, m, a);
  };
  Poly f1 = add(xpoly(0, one), xpoly(1, i));
  Poly f2 = add(xpoly(0, one), add(xpoly(2, j), xpoly(3, kq)));

  if (!membership_A(k, A, f1).member) fail.note("f1 not a member");
  if (!membership_A(k, A, f2).member) fail.note("f2 not a member");

  const Element combos[4][2] = {{one, i}, {j, kq}, {i + j, kq}, {kq, one + i}};
  for (const auto& ab : combos) {
    Poly f = add(right_scale(f1, ab[0]), right_scale(f2, ab[1]));
    if (!membership_A(k, A, f).member) fail.note("right combination not a member");
  }

  for (int idx : {2, 3}) {
    Poly bad = xpoly(idx, fr.unit(idx));
    Verdict v = membership_A(k, A, bad);
    if (v.member || v.witnesses.empty())
      fail.note("v" + std::to_string(idx) + " x" + std::to_string(idx) +
                " wrongly accepted");
  }

  for (int t = 0; t < 10; ++t) {
    Element a0 = rng.element(tab), a1 = rng.element(tab);
    Element a2 = rng.element(tab), a3 = rng.element(tab);
    Poly f = add(add(xpoly(0, a0), xpoly(1, a1)), add(xpoly(2, a2), xpoly(3, a3)));
    Element expected = a0 + mul(i, a1) + mul(j, a2).scaled(Rat(1, 2)) +
                       mul(kq, a3).scaled(Rat(1, 2));
    if (dunkl_CR_A(k, A, f) != constant_poly(fr, expected))
      fail.note("closed form mismatch on draw " + std::to_string(t));
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : "members, non-members, and the closed form reproduced";
  return r;
}

std::vector<Poly> classification_suite(Rng& rng, const Frame& fr,
                                       const PartitionSpec& P) {
  std::vector<Poly> suite;
  for (int t = 0; t < 15; ++t) suite.push_back(rng.poly(fr, 3, 5));
  for (int t = 0; t < 10; ++t) suite.push_back(rng.slice_poly(fr, 3, 3));
  for (const auto& B : P.blocks) {
    suite.push_back(paravector_poly(fr, B));
    suite.push_back(slice_power_poly_A(fr, B, 2));
  }
  for (int t = 0; t < 5; ++t) suite.push_back(rng.slice_regular_poly(fr, 3));
  while (suite.size() < 40) suite.push_back(rng.poly(fr, 2, 4));
  suite.resize(40, zero_poly(fr));
  return suite;
}

CriterionResult crit_classification(unsigned long long seed) {
  CriterionResult r{9, "classification-independence", true, ""};
  Failure fail;
  int checked = 0;

  Algebra h = make_algebra("H");
  std::vector<std::vector<std::vector<int>>> parts3 = enumerate_partitions(3);
  Algebra cl = make_algebra("Cl(0,4)");
  std::vector<std::vector<std::vector<int>>> parts4 = {
      {{1, 2, 3, 4}},
      {{1}, {2, 3, 4}},
      {{1, 2}, {3, 4}},
      {{1}, {2}, {3, 4}},
      {{1}, {2}, {3}, {4}}};

  auto run = [&](const Algebra& alg, const std::vector<std::vector<int>>& blocks) {
    Rng rng(seed + static_cast<unsigned long long>(checked + 1));
    const int n = alg.frame.n();
    PartitionSpec P = make_partition(n, blocks);
    std::vector<Poly> suite = classification_suite(rng, alg.frame, P);
    Multiplicities k1 = default_multiplicities(n, blocks);
    Multiplicities k2 = second_multiplicities(n, blocks);
    IndependenceReport rep = multiplicity_independence(blocks, k1, k2, suite);
    ++checked;
    if (!rep.agree)
      fail.note("partition " + partition_label(P.blocks) + ": " + rep.detail);
  };
  for (const auto& blocks : parts3) run(h, blocks);
  for (const auto& blocks : parts4) run(cl, blocks);

  std::vector<PartitionSpec> specs3;
  for (const auto& blocks : parts3) specs3.push_back(make_partition(3, blocks));
  for (std::size_t a = 0; a < specs3.size(); ++a) {
    for (std::size_t b = a + 1; b < specs3.size(); ++b) {
      ++checked;
      try {
        separating_witness(h.frame, specs3[a], specs3[b]);
      } catch (const std::exception& e) {
        fail.note("pair " + partition_label(specs3[a].blocks) + " vs " +
                  partition_label(specs3[b].blocks) + ": " + e.what());
      }
    }
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : "10 partitions invariant, 10 separating witnesses";
  return r;
}

CriterionResult crit_permutation(unsigned long long seed) {
  CriterionResult r{10, "permutation-equivalence", true, ""};
  Failure fail;
  int checked = 0;

  struct Case {
    const char* spec;
    std::vector<std::vector<int>> blocks;
    std::vector<int> sigma;
  };
  std::vector<Case> cases = {
      {"H", {{1}, {2, 3}}, {2, 3, 1}},
      {"H", {{1, 2}, {3}}, {3, 2, 1}},
      {"H", {{1, 2, 3}}, {2, 1, 3}},
      {"Cl(0,4)", {{1}, {2, 3, 4}}, {2, 3, 4, 1}},
      {"Cl(0,4)", {{1, 2}, {3, 4}}, {3, 4, 1, 2}},
      {"Cl(0,4)", {{1}, {2}, {3, 4}}, {4, 3, 2, 1}}};

  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(seed + c);
    Algebra alg = make_algebra(cases[c].spec);
    PartitionSpec P = make_partition(alg.frame.n(), cases[c].blocks);
    std::vector<Poly> suite;
    for (int t = 0; t < 8; ++t) suite.push_back(rng.poly(alg.frame, 3, 5));
    for (int t = 0; t < 4; ++t) suite.push_back(rng.slice_poly(alg.frame, 3, 3));
    for (const auto& B : P.blocks) suite.push_back(paravector_poly(alg.frame, B));
    for (int t = 0; t < 4; ++t) suite.push_back(rng.slice_regular_poly(alg.frame, 3));
    suite.resize(20, zero_poly(alg.frame));
    for (std::size_t t = 0; t < suite.size(); ++t) {
      ++checked;
      if (!permuted_equivalence(P, cases[c].sigma, suite[t]))
        fail.note("case " + std::to_string(c) + " poly " + std::to_string(t));
    }
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " transported verdicts";
  return r;
}

CriterionResult crit_census(unsigned long long) {
  CriterionResult r{11, "census", true, ""};
  Failure fail;
  const long long bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  const long long parts[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    Census c = census(n);
    if (c.bell != bell[n - 1]) fail.note("Bell mismatch at n=" + std::to_string(n));
    if (c.partition_count != parts[n - 1])
      fail.note("partition count mismatch at n=" + std::to_string(n));
    if (c.subset_spaces != (1LL << n) - n)
      fail.note("subset count mismatch at n=" + std::to_string(n));
    if (static_cast<long long>(enumerate_partitions(n).size()) != c.bell)
      fail.note("enumeration size mismatch at n=" + std::to_string(n));
  }
  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : "n = 1..8 table reproduced";
  return r;
}

CriterionResult crit_perron(unsigned long long) {
  CriterionResult r{12, "perron", true, ""};
  Failure fail;
  int checked = 0;

  auto run = [&](int n, const std::vector<Rat>& ks, int i0) {
    Multiplicities k;
    k.k = ks;
    ReflectionMatrix M = build_reflection_matrix(k, i0);
    PerronReport rep = verify_perron(M);
    ++checked;
    if (!rep.ok() || rep.rank != (1 << (n - 1)) - 1)
      fail.note("n=" + std::to_string(n) + ", i0=" + std::to_string(i0));
  };

  run(3, {Rat(-1, 3), Rat(-1, 3), Rat(-1, 3)}, 3);
  run(3, {Rat(0), Rat(-1, 2), Rat(-1, 2)}, 1);
  run(3, {Rat(-1, 4), Rat(-3, 4), Rat(0)}, 3);
  run(4, {Rat(-3, 8), Rat(-3, 8), Rat(-3, 8), Rat(-3, 8)}, 4);
  run(4, {Rat(0), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}, 1);
  run(4, {Rat(-1, 4), Rat(-1, 2), Rat(-3, 4), Rat(0)}, 4);
  run(5, {Rat(-2, 5), Rat(-2, 5), Rat(-2, 5), Rat(-2, 5), Rat(-2, 5)}, 5);
  run(5, {Rat(0), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}, 1);
  run(5, {Rat(-1, 4), Rat(-1, 2), Rat(-3, 4), Rat(-1, 2), Rat(0)}, 5);

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " matrices verified";
  return r;
}

CriterionResult crit_sa_kernel(unsigned long long seed) {
  CriterionResult r{13, "sa-kernel", true, ""};
  Failure fail;
  int forward = 0, converse = 0, nests = 0;

  struct Case {
    const char* spec;
    std::vector<int> A;
    int rounds;
  };
  std::vector<Case> cases = {{"H", {2, 3}, 15}, {"H", {1, 2, 3}, 7},
                             {"Cl(0,4)", {3, 4}, 8}};

  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(seed + c);
    Algebra alg = make_algebra(cases[c].spec);
    const Frame& fr = alg.frame;
    const int n = fr.n();
    const std::vector<int>& A = cases[c].A;
    std::vector<int> others = subset_complement(A, n);
    Multiplicities kd = default_multiplicities_A(n, A);
    Multiplicities ks = zero_multiplicities(n);
    for (std::size_t t = 1; t < A.size(); ++t)
      ks.k[static_cast<std::size_t>(A[t] - 1)] = Rat(-1, 2);

    auto random_form = [&]() {
      SAForm form;
      int dmax = static_cast<int>(rng.pick(0, 2));
      for (int d = 0; d <= dmax; ++d) {
        Poly cd = poly_on(rng, fr, others, true, 2, 3);
        if (!cd.is_zero()) form.F_q.emplace(d, cd);
        Poly gd = poly_on(rng, fr, others, true, 2, 2);
        if (!gd.is_zero()) form.G_q.emplace(d, gd);
      }
      if (form.F_q.empty() && form.G_q.empty())
        form.F_q.emplace(0, constant_poly(fr, rng.nonzero_element(fr.tab())));
      return form;
    };

    auto check_nesting = [&](const Poly& f) {
      std::vector<std::vector<int>> subs;
      for (unsigned mask = 1; mask + 1 < (1u << A.size()); ++mask) {
        std::vector<int> B;
        for (std::size_t b = 0; b < A.size(); ++b)
          if (mask & (1u << b)) B.push_back(A[b]);
        subs.push_back(std::move(B));
      }
      for (const auto& B : subs) {
        ++nests;
        if (!script_S_A(default_multiplicities_A(n, B), B, f).all_zero())
          fail.note(std::string(cases[c].spec) + " nesting fails for B=" +
                    subset_label(B));
      }
    };

    for (int t = 0; t < cases[c].rounds; ++t) {
      // Forward: independently constructed kernel members decompose and
      // rebuild exactly.
      Poly f = sa_compose(A, random_form());
      f = add(f, right_scale(slice_power_poly_A(fr, A, static_cast<int>(rng.pick(1, 4))),
                             rng.element(fr.tab())));
      if (!others.empty())
        f = add(f, poly_on(rng, fr, others, true, 2, 2));
      ++forward;
      if (!script_S_A(kd, A, f).all_zero()) {
        fail.note(std::string(cases[c].spec) + " forward input left the kernel");
        continue;
      }
      SAForm form = sa_decompose(kd, A, f);
      if (sa_compose(A, form) != f)
        fail.note(std::string(cases[c].spec) + " decomposition round-trip");
      check_nesting(f);

      // Converse: synthesized even/odd forms land in the kernel for two
      // admissible multiplicity choices.
      Poly g = sa_compose(A, random_form());
      ++converse;
      if (!script_S_A(kd, A, g).all_zero() || !script_S_A(ks, A, g).all_zero())
        fail.note(std::string(cases[c].spec) + " converse form escapes the kernel");
      check_nesting(g);
    }
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : std::to_string(forward) + " forward, " +
                            std::to_string(converse) + " converse, " +
                            std::to_string(nests) + " nested kernels";
  return r;
}

CriterionResult crit_p_slice(unsigned long long seed) {
  CriterionResult r{14, "p-slice-reconstruction", true, ""};
  Failure fail;
  int checked = 0;

  struct Case {
    const char* spec;
    std::vector<std::vector<int>> blocks;
  };
  std::vector<Case> cases = {{"H", {{1, 2, 3}}},
                             {"H", {{1}, {2, 3}}},
                             {"Cl(0,4)", {{1, 2}, {3, 4}}}};

  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(seed + c);
    Algebra alg = make_algebra(cases[c].spec);
    const Frame& fr = alg.frame;
    const int n = fr.n();
    PartitionSpec P = make_partition(n, cases[c].blocks);

    auto kernel_member = [&]() {
      Poly out(fr);
      for (unsigned K = 0; K < (1u << P.blocks.size()); ++K) {
        Poly e = poly_on(rng, fr, {}, true, 2, 2);
        for (std::size_t b = 0; b < P.blocks.size(); ++b)
          e = real_mul(real_pow(norm_square_poly(fr, P.blocks[b]),
                                static_cast<int>(rng.pick(0, 1))),
                       e);
        for (std::size_t b = P.blocks.size(); b-- > 0;)
          if (K & (1u << b)) e = imag_left_mul(P.blocks[b], e);
        out = add(out, e);
      }
      return out;
    };

    for (int t = 0; t < 20; ++t) {
      Rat x0 = rng.small_rat();
      std::vector<Rat> betas;
      std::vector<std::vector<Rat>> dirs;
      for (const auto& B : P.blocks) {
        betas.push_back(rat(rng.pick(1, 3), rng.pick(1, 2)));
        std::vector<Rat> u;
        for (std::size_t d = 1; d < B.size(); ++d)
          u.push_back(rat(rng.pick(-2, 2), rng.pick(1, 2)));
        dirs.push_back(rational_sphere_point(u));
      }
      std::vector<Rat> pt = block_scaled_point(n, P.blocks, x0, betas, dirs);
      Poly f = (t % 2 == 0) ? rng.poly(fr, 3, 6) : kernel_member();
      ++checked;
      PSliceReconstruction rec = reconstruct_p_slice_at(P, f, pt);
      if (!rec.ok)
        fail.note(std::string(cases[c].spec) + " " + partition_label(P.blocks) +
                  " point " + std::to_string(t));
    }
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what
                      : std::to_string(checked) + " pointwise reconstructions";
  return r;
}

CriterionResult crit_slice_restriction(unsigned long long seed) {
  CriterionResult r{15, "slice-restriction", true, ""};
  Failure fail;
  int checked = 0;

  struct Case {
    const char* spec;
    std::vector<int> A;
  };
  std::vector<Case> cases = {
      {"H", {2, 3}}, {"Cl(0,4)", {3, 4}}, {"O", {3, 4, 5, 6, 7}}};

  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(seed + c);
    Algebra alg = make_algebra(cases[c].spec);
    const std::vector<int>& A = cases[c].A;
    std::vector<Poly> members = regular_member_pool(rng, alg.frame, A, 8);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rat> u;
      for (std::size_t d = 1; d < A.size(); ++d)
        u.push_back(rat(rng.pick(-2, 2), rng.pick(1, 2)));
      std::vector<Rat> J = rational_sphere_point(u);
      for (std::size_t m = 0; m < members.size(); ++m) {
        ++checked;
        Poly g = restrict_to_slice(A, J, members[m]);
        if (!dbar_J(A, J, g).is_zero())
          fail.note(std::string(cases[c].spec) + " member " + std::to_string(m) +
                    " direction " + std::to_string(t));
      }
    }
  }

  r.pass = !fail.hit;
  r.detail = fail.hit ? fail.what : std::to_string(checked) + " restrictions vanish";
  return r;
}

}  // namespace

std::vector<Poly> regular_member_pool(Rng& rng, const Frame& frame,
                                      const std::vector<int>& A, int count) {
  check_subset(A, frame.n(), "regular_member_pool");
  if (A.empty())
    throw std::invalid_argument("regular_member_pool: empty subset");
  std::vector<int> others = subset_complement(A, frame.n());

  std::vector<Poly> bases;
  bases.push_back(constant_poly(frame, rng.nonzero_element(frame.tab())));
  for (int m = 1; m <= 4; ++m) bases.push_back(slice_power_poly_A(frame, A, m));
  for (int j : others) bases.push_back(fueter_variable(frame, j));
  for (std::size_t a = 0; a < others.size(); ++a)
    for (std::size_t b = a; b < others.size(); ++b)
      bases.push_back(fueter_pair(frame, others[a], others[b]));

  const bool assoc = frame.tab()->associative;
  std::vector<Poly> out;
  for (int t = 0; t < count; ++t) {
    const Poly& base = bases[static_cast<std::size_t>(t) % bases.size()];
    Poly f = base;
    switch (t % 3) {
      case 0:
        break;
      case 1:
        f = assoc ? right_scale(base, rng.nonzero_element(frame.tab()))
                  : scale(rat(rng.pick(1, 3), rng.pick(1, 2)), base);
        break;
      default: {
        const Poly& other =
            bases[static_cast<std::size_t>(t + 1) % bases.size()];
        f = add(scale(rat(rng.pick(1, 2)), base), scale(rat(rng.pick(1, 2)), other));
        break;
      }
    }
    if (!membership_A(A, f).member)
      throw std::logic_error("regular_member_pool: generated a non-member");
    out.push_back(std::move(f));
  }
  return out;
}

bool AcceptanceReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

AcceptanceReport run_acceptance(const std::string& filter, unsigned long long seed) {
  using Fn = CriterionResult (*)(unsigned long long);
  const std::pair<const char*, Fn> table[] = {
      {"algebra-axioms", crit_algebra_axioms},
      {"osp-relations", crit_osp},
      {"difference-identity", crit_difference},
      {"sliceness", crit_sliceness},
      {"slice-regularity", crit_slice_regular},
      {"dunkl-harmonicity", crit_harmonicity},
      {"integral-form", crit_integral_form},
      {"linear-example", crit_linear_example},
      {"classification-independence", crit_classification},
      {"permutation-equivalence", crit_permutation},
      {"census", crit_census},
      {"perron", crit_perron},
      {"sa-kernel", crit_sa_kernel},
      {"p-slice-reconstruction", crit_p_slice},
      {"slice-restriction", crit_slice_restriction}};

  AcceptanceReport report;
  int id = 0;
  for (const auto& [name, fn] : table) {
    ++id;
    if (!filter.empty() && std::string(name).find(filter) == std::string::npos)
      continue;
    CriterionResult r = fn(seed + static_cast<unsigned long long>(id) * 1000ULL);
    r.id = id;
    r.name = name;
    report.results.push_back(std::move(r));
  }
  if (report.results.empty())
    throw std::invalid_argument("run_acceptance: filter matches no criterion");
  return report;
}

}  // namespace dunkl
