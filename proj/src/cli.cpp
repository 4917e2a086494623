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

#include "dunkl/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dunkl/document.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/pointcheck.hpp"
#include "dunkl/selftest.hpp"
#include "dunkl/spaces.hpp"
#include "dunkl/spectral.hpp"

namespace dunkl {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr unsigned long long kDefaultSeed = 20260818ULL;

struct Emit {
  std::ostream& out;
  std::ostream& err;
  bool json_only = false;

  void human(const std::string& line) {
    if (!json_only) err << line << "\n";
  }
  void payload(Json j) { out << j.dump(2) << "\n"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json verdict_json(const Verdict& v) {
  Json witnesses = Json::array();
  for (const auto& [op, poly] : v.witnesses)
    witnesses.push_back(Json{{"operator", op}, {"value", poly.str()}});
  return Json{{"member", v.member}, {"witnesses", witnesses}};
}

Json rat_list_json(const std::vector<Rat>& xs) {
  Json arr = Json::array();
  for (const Rat& x : xs) arr.push_back(rat_to_string(x));
  return arr;
}

Multiplicities parse_k_flag(const std::string& text, int n, const char* what) {
  Multiplicities k;
  k.k = parse_multiplicity_list(text);
  if (k.n() != n)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n) + " multiplicities, got " +
                                std::to_string(k.n()));
  return k;
}

int parse_index(const std::string& digits, int n, const char* what) {
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(what) + ": malformed index '" +
                                digits + "'");
  long v = std::stol(digits);
  if (v < 1 || v > n)
    throw std::invalid_argument(std::string(what) + ": index " + digits +
                                " out of range 1.." + std::to_string(n));
  return static_cast<int>(v);
}

struct ResolvedOp {
  std::string label;
  std::function<Poly(const Poly&)> fn;
};

ResolvedOp resolve_operator(const std::string& spec, int n,
                            const std::optional<Multiplicities>& kover) {
  auto k_for = [&](const std::vector<int>& A) {
    if (kover) {
      if (kover->n() != n)
        throw std::invalid_argument("apply: expected " + std::to_string(n) +
                                    " multiplicities, got " +
                                    std::to_string(kover->n()));
      return *kover;
    }
    return default_multiplicities_A(n, A);
  };

  if (spec == "dbar")
    return {"dbar", [](const Poly& f) { return cauchy_riemann(f); }};
  if (spec == "laplace")
    return {"laplace", [](const Poly& f) { return laplacian(f); }};
  if (spec == "gamma")
    return {"gamma", [](const Poly& f) { return gamma_spherical(f); }};
  if (spec == "thetabar-mult")
    return {"thetabar-mult", [](const Poly& f) { return thetabar_mult(f); }};
  if (spec == "DunklLaplace") {
    Multiplicities k = k_for(full_set(n));
    return {"DunklLaplace",
            [k](const Poly& f) { return dunkl_laplacian(k, f); }};
  }
  if (spec.size() > 1 && spec[0] == 'T' &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    int i = parse_index(spec.substr(1), n, "apply T<i>");
    Multiplicities k = k_for({i});
    return {spec, [k, i](const Poly& f) { return dunkl_T(k, i, f); }};
  }
  if (spec.size() > 2 && spec[0] == 'D' && spec[1] == '{' && spec.back() == '}') {
    std::vector<std::vector<int>> blocks = parse_partition_blocks(spec.substr(1));
    PartitionSpec P = make_partition(n, blocks);
    Multiplicities k =
        kover ? *kover : default_multiplicities(n, P.blocks);
    if (k.n() != n)
      throw std::invalid_argument("apply: expected " + std::to_string(n) +
                                  " multiplicities, got " +
                                  std::to_string(k.n()));
    std::vector<std::vector<int>> bl = P.blocks;
    return {"D{" + partition_label(bl) + "}",
            [k, bl](const Poly& f) { return dunkl_CR_P(k, bl, f); }};
  }
  std::size_t open = spec.find('[');
  if (open != std::string::npos && spec.back() == ']') {
    std::string head = spec.substr(0, open);
    std::vector<int> A = parse_subset(spec.substr(open + 1, spec.size() - open - 2));
    check_subset(A, n, "apply");
    if (A.empty()) throw std::invalid_argument("apply: empty subset in " + spec);
    Multiplicities k = k_for(A);
    std::string label = head + "[" + subset_label(A) + "]";
    if (head == "D")
      return {label, [k, A](const Poly& f) { return dunkl_CR_A(k, A, f); }};
    if (head == "S")
      return {label, [k, A](const Poly& f) { return casimir_A(k, A, f); }};
    if (head == "Sprime")
      return {label, [k, A](const Poly& f) { return s_prime_A(k, A, f); }};
    if (head == "Sdprime")
      return {label, [k, A](const Poly& f) { return s_dprime_A(k, A, f); }};
    if (head == "GammaTilde")
      return {label, [k, A](const Poly& f) { return gamma_tilde_A(k, A, f); }};
  }
  throw std::invalid_argument("unknown operator: " + spec);
}

int cmd_classify(const std::string& path, const std::string& p_flag,
                 const std::string& a_flag, const std::string& k_flag,
                 bool all_partitions, Emit& em) {
  InputDocument doc = parse_document(read_file(path));
  const Frame& fr = doc.algebra.frame;
  const int n = fr.n();

  std::optional<std::vector<std::vector<int>>> blocks;
  if (!p_flag.empty())
    blocks = parse_partition_blocks(p_flag);
  else if (doc.partition)
    blocks = doc.partition;

  std::optional<std::vector<int>> A;
  if (!a_flag.empty()) {
    A = parse_subset(a_flag);
    check_subset(*A, n, "classify --A");
    if (A->empty()) throw std::invalid_argument("classify --A: empty subset");
  }

  std::optional<Multiplicities> kover;
  if (!k_flag.empty())
    kover = parse_k_flag(k_flag, n, "classify --k");
  else if (doc.k)
    kover = doc.k;

  std::vector<std::vector<std::vector<int>>> sweep;
  if (all_partitions) sweep = enumerate_partitions(n);

  bool negative = false;
  auto note = [&](const Verdict& v) {
    if (!v.member) negative = true;
    return verdict_json(v);
  };

  Json polys = Json::array();
  for (const auto& [name, f] : doc.polys) {
    Json entry;
    entry["name"] = name;
    Verdict slice = is_slice_poly(f);
    entry["slice"] = note(slice);
    Verdict regular = is_slice_regular_poly(f);
    entry["slice_regular"] = note(regular);
    if (regular.member) {
      Json cs = Json::array();
      for (const Element& a : slice_regular_coefficients(f)) cs.push_back(a.str());
      entry["coefficients"] = cs;
    }
    std::string line = name + ": slice=" + (slice.member ? "yes" : "no") +
                       " regular=" + (regular.member ? "yes" : "no");

    if (A) {
      Multiplicities kA = kover ? *kover : default_multiplicities_A(n, *A);
      Verdict v = membership_A(kA, *A, f);
      entry["A"] = subset_label(*A);
      entry["A_membership"] = note(v);
      line += " A[" + subset_label(*A) + "]=" +
              (v.member ? "member" : "non-member");
    }
    if (blocks) {
      PartitionSpec P = kover ? make_partition(n, *blocks, *kover)
                              : make_partition(n, *blocks);
      Verdict v = membership_P(P, f);
      entry["partition"] = partition_label(P.blocks);
      entry["equivalence_class"] = equivalence_class_label(P);
      entry["P_membership"] = note(v);
      line += " P" + partition_label(P.blocks) + "=" +
              (v.member ? "member" : "non-member");
    }
    if (all_partitions) {
      Json arr = Json::array();
      int members = 0;
      for (const auto& bl : sweep) {
        PartitionSpec P = make_partition(n, bl);
        Verdict v = membership_P(P, f);
        if (v.member)
          ++members;
        else
          negative = true;
        arr.push_back(Json{{"partition", partition_label(P.blocks)},
                           {"equivalence_class", equivalence_class_label(P)},
                           {"member", v.member}});
      }
      entry["all_partitions"] = arr;
      entry["all_partitions_count"] = sweep.size();
      line += " partitions=" + std::to_string(members) + "/" +
              std::to_string(sweep.size());
    }
    polys.push_back(entry);
    em.human(line);
  }

  em.payload(Json{{"schema_version", kSchemaVersion},
                  {"command", "classify"},
                  {"algebra", doc.algebra_spec},
                  {"n", n},
                  {"polys", polys}});
  return negative ? 1 : 0;
}

int cmd_apply(const std::string& op_spec, const std::string& path,
              const std::string& k_flag, Emit& em) {
  InputDocument doc = parse_document(read_file(path));
  const int n = doc.algebra.frame.n();
  std::optional<Multiplicities> kover;
  if (!k_flag.empty())
    kover = parse_k_flag(k_flag, n, "apply --k");
  else if (doc.k)
    kover = doc.k;

  ResolvedOp op = resolve_operator(op_spec, n, kover);
  Json polys = Json::array();
  for (const auto& [name, f] : doc.polys) {
    Poly result = op.fn(f);
    polys.push_back(Json{{"name", name},
                         {"result", result.str()},
                         {"zero", result.is_zero()}});
    em.human(name + ": " + op.label + " -> " + result.str());
  }
  em.payload(Json{{"schema_version", kSchemaVersion},
                  {"command", "apply"},
                  {"operator", op.label},
                  {"algebra", doc.algebra_spec},
                  {"n", n},
                  {"polys", polys}});
  return 0;
}

int cmd_enumerate(int n, const std::string& algebra, Emit& em) {
  if (n == 0) {
    if (algebra.empty())
      throw std::invalid_argument("enumerate: pass --n or --algebra");
    n = make_algebra(algebra).frame.n();
  }
  Census c = census(n);
  std::vector<std::vector<std::vector<int>>> parts = enumerate_partitions(n);
  Json arr = Json::array();
  for (const auto& bl : parts) {
    PartitionSpec P = make_partition(n, bl);
    arr.push_back(Json{{"partition", partition_label(P.blocks)},
                       {"equivalence_class", equivalence_class_label(P)},
                       {"default_k", rat_list_json(P.k.k)}});
  }
  em.payload(Json{{"schema_version", kSchemaVersion},
                  {"command", "enumerate"},
                  {"n", n},
                  {"census",
                   Json{{"bell", c.bell},
                        {"integer_partitions", c.partition_count},
                        {"subset_spaces", c.subset_spaces}}},
                  {"partitions", arr}});
  em.human("n=" + std::to_string(n) + ": " + std::to_string(c.bell) +
           " partitions in " + std::to_string(c.partition_count) +
           " equivalence classes, " + std::to_string(c.subset_spaces) +
           " subset spaces");
  return 0;
}

int cmd_perron(int n, const std::string& k_flag, int i0, Emit& em) {
  Multiplicities k = parse_k_flag(k_flag, n, "perron --k");
  if (i0 == 0) {
    i0 = n;
    for (int i = 1; i <= n; ++i)
      if (k.at(i) == 0) i0 = i;
  }
  ReflectionMatrix M = build_reflection_matrix(k, i0);
  PerronReport rep = verify_perron(M);

  Json root{{"schema_version", kSchemaVersion},
            {"command", "perron"},
            {"n", n},
            {"i0", i0},
            {"k", rat_list_json(k.k)},
            {"order", M.order},
            {"symmetric", rep.symmetric},
            {"doubly_stochastic", rep.doubly_stochastic},
            {"irreducible", rep.irreducible},
            {"corank_one", rep.corank_one},
            {"rank", rep.rank},
            {"ok", rep.ok()}};
  if (M.order <= 64) {
    Json rows = Json::array();
    for (const auto& row : M.entries) rows.push_back(rat_list_json(row));
    root["matrix"] = rows;
  }
  em.payload(root);
  em.human("order " + std::to_string(M.order) + ": symmetric=" +
           (rep.symmetric ? "yes" : "no") + " doubly_stochastic=" +
           (rep.doubly_stochastic ? "yes" : "no") + " irreducible=" +
           (rep.irreducible ? "yes" : "no") + " rank=" +
           std::to_string(rep.rank) + " (want " +
           std::to_string(M.order - 1) + ")");
  return rep.ok() ? 0 : 1;
}

int cmd_pointcheck(const std::string& theorem, const std::string& algebra,
                   const std::string& p_flag, const std::string& a_flag,
                   int samples, unsigned long long seed, Emit& em) {
  Algebra alg = make_algebra(algebra);
  const Frame& fr = alg.frame;
  const int n = fr.n();
  Rng rng(seed);
  int passed = 0;

  if (theorem == "difference") {
    for (int s = 0; s < samples; ++s) {
      Poly f = rng.poly(fr, 3, 5);
      std::vector<Rat> pt = rng.point(n);
      bool off_axis = false;
      for (int i = 1; i <= n; ++i)
        if (pt[static_cast<std::size_t>(i)] != 0) off_axis = true;
      if (!off_axis) pt[1] = 1;
      if (check_difference_at(f, pt).ok) ++passed;
    }
  } else if (theorem == "kerSP") {
    if (p_flag.empty())
      throw std::invalid_argument("pointcheck kerSP: pass --P");
    PartitionSpec P = make_partition(n, parse_partition_blocks(p_flag));
    for (int s = 0; s < samples; ++s) {
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
      Poly f = rng.poly(fr, 3, 5);
      if (reconstruct_p_slice_at(P, f, pt).ok) ++passed;
    }
  } else if (theorem == "slice-restriction") {
    if (a_flag.empty())
      throw std::invalid_argument("pointcheck slice-restriction: pass --A");
    std::vector<int> A = parse_subset(a_flag);
    check_subset(A, n, "pointcheck --A");
    std::vector<Poly> members = regular_member_pool(rng, fr, A, 4);
    for (int s = 0; s < samples; ++s) {
      std::vector<Rat> u;
      for (std::size_t d = 1; d < A.size(); ++d)
        u.push_back(rat(rng.pick(-2, 2), rng.pick(1, 2)));
      std::vector<Rat> J = rational_sphere_point(u);
      bool ok = true;
      for (const Poly& m : members)
        if (!dbar_J(A, J, restrict_to_slice(A, J, m)).is_zero()) ok = false;
      if (ok) ++passed;
    }
  } else {
    throw std::invalid_argument(
        "pointcheck: unknown theorem '" + theorem +
        "' (expected difference, kerSP, or slice-restriction)");
  }

  bool ok = passed == samples;
  em.payload(Json{{"schema_version", kSchemaVersion},
                  {"command", "pointcheck"},
                  {"theorem", theorem},
                  {"algebra", algebra},
                  {"samples", samples},
                  {"passed", passed},
                  {"seed", seed},
                  {"ok", ok}});
  em.human(theorem + ": " + std::to_string(passed) + "/" +
           std::to_string(samples) + " exact");
  return ok ? 0 : 1;
}

int cmd_selftest(const std::string& filter, unsigned long long seed, Emit& em) {
  AcceptanceReport rep = run_acceptance(filter, seed);
  Json arr = Json::array();
  for (const auto& r : rep.results) {
    arr.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail}});
    em.human("criterion " + std::to_string(r.id) + " " + r.name + ": " +
             (r.pass ? "PASS" : "FAIL") + " (" + r.detail + ")");
  }
  em.payload(Json{{"schema_version", kSchemaVersion},
                  {"command", "selftest"},
                  {"seed", seed},
                  {"criteria", arr},
                  {"all_pass", rep.all_pass()}});
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact calculus of Dunkl operators over alternative *-algebras"};
  app.name("dunkl");
  app.require_subcommand(1);

  std::string file, p_flag, a_flag, k_flag, algebra, op_spec, theorem, filter;
  bool all_partitions = false;
  bool json_only = false;
  int n = 0, i0 = 0, samples = 20;
  unsigned long long seed = kDefaultSeed;

  CLI::App* classify =
      app.add_subcommand("classify", "Verdicts for the polynomials of a document");
  classify->add_option("file", file, "input document")->required();
  classify->add_option("--P", p_flag, "partition, e.g. {1|2,3}");
  classify->add_option("--A", a_flag, "subset, e.g. 2,3");
  classify->add_option("--k", k_flag, "multiplicity override, e.g. 0,-1/4,-1/4");
  classify->add_flag("--all-partitions", all_partitions,
                     "membership for every partition of [n]");
  classify->add_flag("--json", json_only, "suppress the human summary");

  CLI::App* apply =
      app.add_subcommand("apply", "Apply a named operator to the document polynomials");
  apply->add_option("operator", op_spec,
                    "dbar | laplace | gamma | thetabar-mult | DunklLaplace | "
                    "T<i> | D[A] | S[A] | Sprime[A] | Sdprime[A] | "
                    "GammaTilde[A] | D{P}")
      ->required();
  apply->add_option("file", file, "input document")->required();
  apply->add_option("--k", k_flag, "multiplicity override");
  apply->add_flag("--json", json_only, "suppress the human summary");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Partitions of [n] with census counts");
  enumerate->add_option("--n", n, "number of imaginary directions");
  enumerate->add_option("--algebra", algebra, "take n from this algebra");
  enumerate->add_flag("--json", json_only, "suppress the human summary");

  CLI::App* perron =
      app.add_subcommand("perron", "Build and verify a reflection walk matrix");
  perron->add_option("--n", n, "number of directions")->required();
  perron->add_option("--k", k_flag, "multiplicities, e.g. -1/3,-1/3,-1/3")
      ->required();
  perron->add_option("--i0", i0, "distinguished direction (default: the zero slot)");
  perron->add_flag("--json", json_only, "suppress the human summary");

  CLI::App* pointcheck = app.add_subcommand(
      "pointcheck", "Pointwise identity checks at random rational points");
  pointcheck->add_option("--theorem", theorem,
                         "difference | kerSP | slice-restriction")
      ->required();
  pointcheck->add_option("--algebra", algebra, "algebra spec (default H)");
  pointcheck->add_option("--P", p_flag, "partition for kerSP");
  pointcheck->add_option("--A", a_flag, "subset for slice-restriction");
  pointcheck->add_option("--samples", samples, "sample count (default 20)");
  pointcheck->add_option("--seed", seed, "random seed");
  pointcheck->add_flag("--json", json_only, "suppress the human summary");

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--filter", filter, "substring filter on criterion names");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_flag("--json", json_only, "suppress the human summary");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Emit em{out, err, json_only};
    if (classify->parsed())
      return cmd_classify(file, p_flag, a_flag, k_flag, all_partitions, em);
    if (apply->parsed()) return cmd_apply(op_spec, file, k_flag, em);
    if (enumerate->parsed()) return cmd_enumerate(n, algebra, em);
    if (perron->parsed()) return cmd_perron(n, k_flag, i0, em);
    if (pointcheck->parsed())
      return cmd_pointcheck(theorem, algebra.empty() ? "H" : algebra, p_flag,
                            a_flag, samples, seed, em);
    if (selftest->parsed()) return cmd_selftest(filter, seed, em);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace dunkl
