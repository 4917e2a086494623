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

#include "dunkl/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

Rat factorial(int m) {
  Rat out(1);
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

Rat binom(int m, int j) {
  Rat out(1);
  for (int i = 1; i <= j; ++i) out *= rat(m - i + 1, i);
  return out;
}

bool contains(const std::vector<int>& A, int i) {
  return std::binary_search(A.begin(), A.end(), i);
}

void check_partition(int n, const std::vector<std::vector<int>>& blocks,
                     const char* where) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& A : blocks) {
    if (A.empty())
      throw std::invalid_argument(std::string(where) + ": empty block");
    for (int i : A) {
      if (i < 1 || i > n)
        throw std::invalid_argument(std::string(where) + ": index out of range");
      if (seen[static_cast<std::size_t>(i)])
        throw std::invalid_argument(std::string(where) + ": blocks overlap at " +
                                    std::to_string(i));
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument(std::string(where) + ": index " +
                                  std::to_string(i) + " not covered");
}

void canonicalize_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& A : blocks) std::sort(A.begin(), A.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
}

void push_witness(Verdict& v, const std::string& name, const Poly& p) {
  if (p.is_zero()) return;
  v.member = false;
  v.witnesses.emplace_back(name, p);
}

void append_triple_witnesses(Verdict& v, const std::vector<int>& A, const STriple& t) {
  push_witness(v, "S[" + subset_label(A) + "]", t.S);
  push_witness(v, "Sprime[" + subset_label(A) + "]", t.Sprime);
  push_witness(v, "Sdprime[" + subset_label(A) + "]", t.Sdprime);
}

// Left multiplication by x = x_0 + x_ and by x^c = x_0 - x_.
Poly left_mul_x(const Poly& f, bool conj) {
  Poly real_part = real_mul(variable_poly(f.frame(), 0), f);
  Poly imag_part = imag_left_mul(full_set(f.frame().n()), f);
  return conj ? sub(real_part, imag_part) : add(real_part, imag_part);
}

}  // namespace

std::string subset_label(const std::vector<int>& A) {
  std::ostringstream os;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i) os << ",";
    os << A[i];
  }
  return os.str();
}

std::string partition_label(const std::vector<std::vector<int>>& blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "|";
    os << subset_label(blocks[i]);
  }
  return os.str();
}

Multiplicities default_multiplicities(int n, const std::vector<std::vector<int>>& blocks) {
  check_partition(n, blocks, "default_multiplicities");
  Multiplicities k = zero_multiplicities(n);
  for (const auto& A : blocks) {
    Rat v = Rat(-1, 2) + Rat(1, 2 * static_cast<long>(A.size()));
    for (int i : A) k.k[static_cast<std::size_t>(i - 1)] = v;
  }
  return k;
}

Multiplicities second_multiplicities(int n, const std::vector<std::vector<int>>& blocks) {
  check_partition(n, blocks, "second_multiplicities");
  Multiplicities k = zero_multiplicities(n);
  for (const auto& A : blocks) {
    if (A.size() == 1) continue;
    // First index takes 0, the rest split the block sum (1-|A|)/2 evenly,
    // which is -1/2 each.
    auto it = std::min_element(A.begin(), A.end());
    for (int i : A)
      if (i != *it) k.k[static_cast<std::size_t>(i - 1)] = Rat(-1, 2);
  }
  return k;
}

bool is_admissible(const std::vector<std::vector<int>>& blocks, const Multiplicities& k) {
  for (const Rat& v : k.k)
    if (v > 0) return false;
  for (const auto& A : blocks) {
    Rat sum(0);
    int zeros = 0;
    for (int i : A) {
      sum += k.at(i);
      if (k.at(i) == 0) ++zeros;
    }
    if (2 * sum != Rat(1 - static_cast<long>(A.size()))) return false;
    if (zeros > 1) return false;
  }
  return true;
}

bool is_admissible_A(const std::vector<int>& A, const Multiplicities& k) {
  if (A.empty()) return true;
  Rat sum(0);
  int zeros = 0;
  for (int i : A) {
    if (k.at(i) > 0) return false;
    sum += k.at(i);
    if (k.at(i) == 0) ++zeros;
  }
  return 2 * sum == Rat(1 - static_cast<long>(A.size())) && zeros <= 1;
}

Multiplicities default_multiplicities_A(int n, const std::vector<int>& A) {
  check_subset(A, n, "default_multiplicities_A");
  Multiplicities k = zero_multiplicities(n);
  if (A.empty()) return k;
  Rat v = Rat(-1, 2) + Rat(1, 2 * static_cast<long>(A.size()));
  for (int i : A) k.k[static_cast<std::size_t>(i - 1)] = v;
  return k;
}

PartitionSpec make_partition(int n, std::vector<std::vector<int>> blocks,
                             Multiplicities k) {
  if (n < 1) throw std::invalid_argument("make_partition: n must be >= 1");
  check_partition(n, blocks, "make_partition");
  if (k.n() != n)
    throw std::invalid_argument("make_partition: multiplicity count does not match n");
  canonicalize_blocks(blocks);
  PartitionSpec P;
  P.n = n;
  P.blocks = std::move(blocks);
  P.k = std::move(k);
  P.admissible = is_admissible(P.blocks, P.k);
  return P;
}

PartitionSpec make_partition(int n, std::vector<std::vector<int>> blocks) {
  Multiplicities k = default_multiplicities(n, blocks);
  return make_partition(n, std::move(blocks), std::move(k));
}

Verdict is_slice_poly(const Poly& f) {
  const int n = f.frame().n();
  Multiplicities k = default_multiplicities_A(n, full_set(n));
  Poly S = casimir_A(k, full_set(n), f);
  Poly G = gamma_tilde_A(k, full_set(n), f);
  if (S.is_zero() != G.is_zero())
    throw std::logic_error("is_slice_poly: Casimir and gamma-tilde kernels disagree");
  Verdict v;
  push_witness(v, "S[" + subset_label(full_set(n)) + "]", S);
  return v;
}

Verdict is_slice_regular_poly(const Poly& f) {
  const int n = f.frame().n();
  Multiplicities k = default_multiplicities_A(n, full_set(n));
  Verdict v = is_slice_poly(f);
  Poly D = dunkl_CR_A(k, full_set(n), f);
  push_witness(v, "D[" + subset_label(full_set(n)) + "]", D);
  return v;
}

std::vector<Element> slice_regular_coefficients(const Poly& f) {
  if (!is_slice_regular_poly(f).member)
    throw std::invalid_argument("slice_regular_coefficients: input is not slice-regular");
  const Frame& fr = f.frame();
  std::vector<Rat> origin(static_cast<std::size_t>(fr.n()) + 1, Rat(0));
  std::vector<Element> out;
  Poly g = f;
  for (int j = 0; j <= std::max(f.total_degree(), 0); ++j) {
    out.push_back(eval(g, origin).scaled(1 / factorial(j)));
    g = partial(0, g);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  Poly rebuilt(fr);
  for (std::size_t j = 0; j < out.size(); ++j)
    rebuilt = add(rebuilt, right_scale(slice_power_poly(fr, static_cast<int>(j)), out[j]));
  if (rebuilt != f)
    throw std::logic_error("slice_regular_coefficients: reconstruction mismatch");
  return out;
}

Poly slice_monomial_poly(const Frame& frame, int m, int ell, const Element& a) {
  if (m < 0 || ell < 0)
    throw std::invalid_argument("slice_monomial_poly: negative exponent");
  Poly q = norm_square_poly(frame, full_set(frame.n()));
  Poly core = constant_poly(frame, a);
  if (ell % 2 == 1) core = imag_left_mul(full_set(frame.n()), core);
  int p = ell / 2;
  core = scale(Rat((p % 2 == 0) ? 1 : -1), real_mul(real_pow(q, p), core));
  Poly x0m(frame);
  Monomial mono(static_cast<std::size_t>(frame.n()) + 1, 0);
  mono[0] = m;
  x0m.add_term(mono, Element::basis(frame.tab(), 0));
  return real_mul(x0m, core);
}

Poly slice_xc_monomial_poly(const Frame& frame, int alpha, int beta, const Element& a) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("slice_xc_monomial_poly: negative exponent");
  Poly out = constant_poly(frame, a);
  for (int i = 0; i < beta; ++i) out = left_mul_x(out, true);
  for (int i = 0; i < alpha; ++i) out = left_mul_x(out, false);
  return out;
}

SliceDecomposition slice_decompose(const Poly& f) {
  if (!is_slice_poly(f).member)
    throw std::invalid_argument("slice_decompose: input is not a slice polynomial");
  const Frame& fr = f.frame();
  const int n = fr.n();
  Multiplicities k = default_multiplicities_A(n, full_set(n));

  // Group terms by (x_0 degree, imaginary degree).
  std::map<std::pair<int, int>, Poly> groups;
  for (const auto& [m, c] : f.terms()) {
    int m0 = m[0];
    int ell = std::accumulate(m.begin() + 1, m.end(), 0);
    auto it = groups.find({m0, ell});
    if (it == groups.end()) it = groups.emplace(std::make_pair(m0, ell), Poly(fr)).first;
    Monomial stripped = m;
    stripped[0] = 0;
    it->second.add_term(stripped, c);
  }

  SliceDecomposition out;
  std::map<std::pair<int, int>, Element> xc;
  Poly rebuilt(fr);
  for (const auto& [key, Q] : groups) {
    const auto [m0, ell] = key;
    Poly c = Q;
    for (int i = 0; i < ell; ++i) c = dunkl_dirac_A(k, full_set(n), c);
    if (c.total_degree() > 0)
      throw std::logic_error("slice_decompose: repeated Dirac left a non-constant");
    std::vector<Rat> origin(static_cast<std::size_t>(n) + 1, Rat(0));
    Element a = eval(c, origin).scaled(Rat((ell % 2 == 0) ? 1 : -1) / factorial(ell));
    if (Q != slice_monomial_poly(fr, 0, ell, a))
      throw std::logic_error("slice_decompose: closed form mismatch");
    out.parts.emplace_back(m0, ell, a);
    rebuilt = add(rebuilt, slice_monomial_poly(fr, m0, ell, a));

    // x_0^m x_^ell = 2^{-(m+ell)} (x + x^c)^m (x - x^c)^ell expanded into
    // x^alpha (x^c)^beta.
    Rat scale_pow = Rat(1);
    for (int i = 0; i < m0 + ell; ++i) scale_pow /= 2;
    for (int a1 = 0; a1 <= m0; ++a1) {
      for (int a2 = 0; a2 <= ell; ++a2) {
        Rat coeff = scale_pow * binom(m0, a1) * binom(ell, a2);
        if ((ell - a2) % 2 == 1) coeff = -coeff;
        int alpha = a1 + a2;
        int beta = m0 + ell - alpha;
        Element add_part = a.scaled(coeff);
        auto it = xc.find({alpha, beta});
        if (it == xc.end())
          xc.emplace(std::make_pair(alpha, beta), add_part);
        else
          it->second = it->second + add_part;
      }
    }
  }
  if (rebuilt != f) throw std::logic_error("slice_decompose: reconstruction mismatch");

  Poly rebuilt_xc(fr);
  for (const auto& [key, a] : xc) {
    if (a.is_zero()) continue;
    out.xc_parts.emplace_back(key.first, key.second, a);
    rebuilt_xc = add(rebuilt_xc, slice_xc_monomial_poly(fr, key.first, key.second, a));
  }
  if (rebuilt_xc != f)
    throw std::logic_error("slice_decompose: monomial expansion mismatch");
  return out;
}

Verdict membership_A(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "membership_A");
  if (!is_admissible_A(A, k))
    throw std::invalid_argument("membership_A: multiplicities not admissible for the block");
  Verdict v;
  push_witness(v, "D[" + subset_label(A) + "]", dunkl_CR_A(k, A, f));
  append_triple_witnesses(v, A, script_S_A(k, A, f));
  return v;
}

Verdict membership_A(const std::vector<int>& A, const Poly& f) {
  return membership_A(default_multiplicities_A(f.frame().n(), A), A, f);
}

Verdict membership_AB(const Multiplicities& kD, const std::vector<int>& A,
                      const Multiplicities& kS, const std::vector<int>& B,
                      const Poly& f) {
  check_subset(A, f.frame().n(), "membership_AB");
  check_subset(B, f.frame().n(), "membership_AB");
  if (!is_admissible_A(A, kD) || !is_admissible_A(B, kS))
    throw std::invalid_argument("membership_AB: multiplicities not admissible for the blocks");
  Verdict v;
  push_witness(v, "D[" + subset_label(A) + "]", dunkl_CR_A(kD, A, f));
  append_triple_witnesses(v, B, script_S_A(kS, B, f));
  return v;
}

Verdict membership_AB(const std::vector<int>& A, const std::vector<int>& B,
                      const Poly& f) {
  const int n = f.frame().n();
  return membership_AB(default_multiplicities_A(n, A), A,
                       default_multiplicities_A(n, B), B, f);
}

Verdict membership_P(const PartitionSpec& P, const Poly& f) {
  if (P.n != f.frame().n())
    throw std::invalid_argument("membership_P: partition size does not match frame");
  if (!P.admissible)
    throw std::invalid_argument("membership_P: multiplicities not admissible for the partition");
  Verdict v;
  push_witness(v, "D{" + partition_label(P.blocks) + "}", dunkl_CR_P(P.k, P.blocks, f));
  for (const auto& A : P.blocks)
    append_triple_witnesses(v, A, script_S_A(P.k, A, f));
  return v;
}

std::vector<std::vector<std::vector<int>>> enumerate_partitions(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("enumerate_partitions: n out of range");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  for (;;) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < n; ++i)
      blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(blocks));

    // Next restricted-growth string.
    int i = n - 1;
    while (i > 0) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    rgs[static_cast<std::size_t>(i)] += 1;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

Census census(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("census: n out of range");
  Census c;

  // Bell triangle.
  std::vector<long long> row{1};
  for (int m = 1; m < n; ++m) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  c.bell = row.back();

  // Integer partitions by largest part.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total)
      p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
  c.partition_count = p[static_cast<std::size_t>(n)];

  c.subset_spaces = (1LL << n) - n;
  return c;
}

std::vector<int> equivalence_class_label(const PartitionSpec& P) {
  std::vector<int> sizes;
  sizes.reserve(P.blocks.size());
  for (const auto& A : P.blocks) sizes.push_back(static_cast<int>(A.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

PartitionSpec partition_from_fan(const std::vector<int>& fan) {
  if (fan.empty()) throw std::invalid_argument("partition_from_fan: empty fan");
  if (fan.front() < 0)
    throw std::invalid_argument("partition_from_fan: t0 must be >= 0");
  for (std::size_t i = 1; i < fan.size(); ++i)
    if (fan[i] <= fan[i - 1])
      throw std::invalid_argument("partition_from_fan: fan must be strictly increasing");
  const int n = fan.back();
  if (n < 1) throw std::invalid_argument("partition_from_fan: last entry must be >= 1");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= fan.front(); ++i) blocks.push_back({i});
  for (std::size_t m = 1; m < fan.size(); ++m) {
    std::vector<int> run;
    for (int i = fan[m - 1] + 1; i <= fan[m]; ++i) run.push_back(i);
    blocks.push_back(std::move(run));
  }
  return make_partition(n, std::move(blocks));
}

IndependenceReport multiplicity_independence(const std::vector<std::vector<int>>& blocks,
                                             const Multiplicities& k1,
                                             const Multiplicities& k2,
                                             const std::vector<Poly>& suite) {
  if (!is_admissible(blocks, k1) || !is_admissible(blocks, k2))
    throw std::invalid_argument("multiplicity_independence: inadmissible multiplicities");
  IndependenceReport rep;
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const Poly& f = suite[idx];
    PartitionSpec P1 = make_partition(f.frame().n(), blocks, k1);
    PartitionSpec P2 = make_partition(f.frame().n(), blocks, k2);
    bool m1 = membership_P(P1, f).member;
    bool m2 = membership_P(P2, f).member;
    if (m1 != m2) {
      rep.agree = false;
      rep.detail = "suite element " + std::to_string(idx) + " flips under the second k";
      return rep;
    }
  }
  return rep;
}

SeparatingWitness separating_witness(const Frame& frame, const PartitionSpec& P,
                                     const PartitionSpec& Pprime) {
  if (P.n != Pprime.n || P.n != frame.n())
    throw std::invalid_argument("separating_witness: size mismatch");
  const std::vector<int>* Ai = nullptr;
  for (const auto& A : P.blocks) {
    if (std::find(Pprime.blocks.begin(), Pprime.blocks.end(), A) == Pprime.blocks.end()) {
      Ai = &A;
      break;
    }
  }
  if (Ai == nullptr)
    throw std::invalid_argument("separating_witness: partitions are equal");
  const std::vector<int>* Bj = nullptr;
  for (const auto& B : Pprime.blocks) {
    bool meets = std::any_of(Ai->begin(), Ai->end(),
                             [&](int i) { return contains(B, i); });
    if (meets) {
      Bj = &B;
      break;
    }
  }
  bool Ai_escapes = std::any_of(Ai->begin(), Ai->end(),
                                [&](int i) { return !contains(*Bj, i); });
  SeparatingWitness w;
  w.block = Ai_escapes ? *Bj : *Ai;
  w.in_first = !Ai_escapes;
  w.witness = add(variable_poly(frame, 0), imaginary_poly(frame, w.block));
  bool in_P = membership_P(P, w.witness).member;
  bool in_Pp = membership_P(Pprime, w.witness).member;
  if (in_P != w.in_first || in_Pp != !w.in_first)
    throw std::logic_error("separating_witness: membership pattern violates the construction");
  return w;
}

Frame permute_frame(const Frame& frame, const std::vector<int>& sigma) {
  const int n = frame.n();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permute_frame: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument("permute_frame: not a permutation of 1..n");
    seen[static_cast<std::size_t>(s)] = true;
  }
  Frame out = frame;
  for (int i = 1; i <= n; ++i)
    out.units[static_cast<std::size_t>(i - 1)] =
        frame.units[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)];
  return out;
}

PartitionSpec permute_partition(const PartitionSpec& P, const std::vector<int>& sigma) {
  const int n = P.n;
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permute_partition: permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])] = i;
  std::vector<std::vector<int>> blocks;
  for (const auto& A : P.blocks) {
    std::vector<int> B;
    for (int a : A) B.push_back(inverse[static_cast<std::size_t>(a)]);
    std::sort(B.begin(), B.end());
    blocks.push_back(std::move(B));
  }
  Multiplicities k = zero_multiplicities(n);
  for (int i = 1; i <= n; ++i)
    k.k[static_cast<std::size_t>(i - 1)] =
        P.k.at(sigma[static_cast<std::size_t>(i - 1)]);
  return make_partition(n, std::move(blocks), std::move(k));
}

Poly permute_poly(const Frame& permuted, const std::vector<int>& sigma, const Poly& f) {
  const int n = f.frame().n();
  if (permuted.n() != n || static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permute_poly: size mismatch");
  Poly out(permuted);
  for (const auto& [m, c] : f.terms()) {
    Monomial moved(m.size(), 0);
    moved[0] = m[0];
    for (int i = 1; i <= n; ++i)
      moved[static_cast<std::size_t>(i)] =
          m[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])];
    out.add_term(moved, c);
  }
  return out;
}

bool permuted_equivalence(const PartitionSpec& P, const std::vector<int>& sigma,
                          const Poly& f) {
  Frame moved_frame = permute_frame(f.frame(), sigma);
  PartitionSpec Ps = permute_partition(P, sigma);
  Poly fs = permute_poly(moved_frame, sigma, f);
  return membership_P(P, f).member == membership_P(Ps, fs).member;
}

std::map<unsigned, Poly> p_slice_components(const PartitionSpec& P, const Poly& f) {
  if (P.n != f.frame().n())
    throw std::invalid_argument("p_slice_components: partition size does not match frame");
  std::map<unsigned, Poly> level{{0u, f}};
  for (std::size_t m = 0; m < P.blocks.size(); ++m) {
    const std::vector<int>& A = P.blocks[m];
    std::map<unsigned, Poly> next;
    for (const auto& [K, g] : level) {
      next.emplace(K, spherical_value_A(A, g));
      next.emplace(K | (1u << m), spherical_value_A(A, imag_left_mul(A, g)));
    }
    // x_A g = x_A (g)_s + (x_A g)_s, exactly, at every level.
    for (const auto& [K, g] : level) {
      Poly lhs = imag_left_mul(A, g);
      Poly rhs = add(imag_left_mul(A, next.at(K)), next.at(K | (1u << m)));
      if (lhs != rhs)
        throw std::logic_error("p_slice_components: level identity failed");
    }
    level = std::move(next);
  }
  return level;
}

std::map<int, Poly> extract_q_expansion(const std::vector<int>& A, const Poly& f) {
  check_subset(A, f.frame().n(), "extract_q_expansion");
  if (A.empty()) throw std::invalid_argument("extract_q_expansion: empty subset");
  const Frame& fr = f.frame();
  Poly q = norm_square_poly(fr, A);

  std::map<int, Poly> by_degree;
  for (const auto& [m, c] : f.terms()) {
    int deg = 0;
    for (int i : A) deg += m[static_cast<std::size_t>(i)];
    auto it = by_degree.find(deg);
    if (it == by_degree.end()) it = by_degree.emplace(deg, Poly(fr)).first;
    it->second.add_term(m, c);
  }

  std::map<int, Poly> out;
  for (const auto& [deg, comp] : by_degree) {
    if (deg % 2 != 0)
      throw std::invalid_argument("extract_q_expansion: odd degree in the block variables");
    int d = deg / 2;
    // In q^d c_d the monomials carrying the pure x_{a1}^{2d} factor are
    // exactly x_{a1}^{2d} times the monomials of c_d.
    const int a1 = A.front();
    Poly cd(fr);
    for (const auto& [m, c] : comp.terms()) {
      if (m[static_cast<std::size_t>(a1)] != deg) continue;
      bool pure = true;
      for (int i : A)
        if (i != a1 && m[static_cast<std::size_t>(i)] != 0) pure = false;
      if (!pure) continue;
      Monomial stripped = m;
      stripped[static_cast<std::size_t>(a1)] = 0;
      cd.add_term(stripped, c);
    }
    if (comp != real_mul(real_pow(q, d), cd))
      throw std::invalid_argument("extract_q_expansion: not a polynomial in the block norm");
    if (!cd.is_zero()) out.emplace(d, std::move(cd));
  }
  return out;
}

SAForm sa_decompose(const Multiplicities& k, const std::vector<int>& A, const Poly& f) {
  check_subset(A, k.n(), "sa_decompose");
  if (A.empty()) throw std::invalid_argument("sa_decompose: empty subset");
  if (!is_admissible_A(A, k))
    throw std::invalid_argument("sa_decompose: multiplicities not admissible for the block");
  if (!script_S_A(k, A, f).all_zero())
    throw std::invalid_argument("sa_decompose: input is not in the kernel");

  Poly P0 = spherical_value_A(A, f);
  Poly P1 = imag_weighted_value_A(A, f);
  Poly q = norm_square_poly(f.frame(), A);
  if (real_mul(q, f) != sub(real_mul(q, P0), imag_left_mul(A, P1)))
    throw std::logic_error("sa_decompose: spherical reconstruction failed");
  for (int i : A)
    if (reflect(i, P0) != P0 || reflect(i, P1) != P1)
      throw std::logic_error("sa_decompose: components are not reflection-invariant");

  SAForm form;
  std::map<int, Poly> m0, m1;
  try {
    m0 = extract_q_expansion(A, P0);
    m1 = extract_q_expansion(A, P1);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("sa_decompose: kernel component is not a block-norm polynomial");
  }
  if (m1.count(0))
    throw std::logic_error("sa_decompose: weighted component has a constant block part");
  form.F_q = std::move(m0);
  for (auto& [d, g] : m1) form.G_q.emplace(d - 1, neg(g));
  return form;
}

Poly sa_compose(const std::vector<int>& A, const SAForm& form) {
  const Frame* fr = nullptr;
  for (const auto& [d, g] : form.F_q) fr = &g.frame();
  for (const auto& [d, g] : form.G_q) fr = &g.frame();
  if (fr == nullptr) throw std::invalid_argument("sa_compose: empty form");
  Poly q = norm_square_poly(*fr, A);
  Poly F(*fr), G(*fr);
  for (const auto& [d, g] : form.F_q) F = add(F, real_mul(real_pow(q, d), g));
  for (const auto& [d, g] : form.G_q) G = add(G, real_mul(real_pow(q, d), g));
  return add(F, imag_left_mul(A, G));
}

}  // namespace dunkl
