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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "dunkl/cli.hpp"

using namespace dunkl;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_doc(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  f.close();
  return p.string();
}

const char* kRegularDoc =
    "algebra: H\n"
    "poly f = (1)*x0^2 + (-1/3)*1 + ((1)*i + (2)*k)*x0 x1 + "
    "((1)*i + (2)*k)*x0 x2 + ((1)*i + (2)*k)*x0 x3\n";

}  // namespace

TEST_CASE("classify reports slice regular polynomials with coefficients") {
  std::string path = write_doc(
      "cli_regular.dunkl",
      "algebra: H\n"
      "poly f = (1)*x0 + (i)*x1 + (j)*x2 + (k)*x3\n");
  RunResult r = run({"classify", path});
  CHECK(r.code == 0);
  CHECK(!r.err.empty());
  json j = json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "classify");
  CHECK(j.at("algebra") == "H");
  const json& poly = j.at("polys").at(0);
  CHECK(poly.at("slice").at("member") == true);
  CHECK(poly.at("slice_regular").at("member") == true);
  REQUIRE(poly.contains("coefficients"));
  CHECK(poly.at("coefficients").size() == 2);

  RunResult quiet = run({"classify", path, "--json"});
  CHECK(quiet.code == 0);
  CHECK(quiet.err.empty());
  CHECK(quiet.out == r.out);
}

TEST_CASE("classify flags non-slice input through the exit code") {
  std::string path = write_doc("cli_nonslice.dunkl",
                               "algebra: H\n"
                               "poly g = (1)*x1\n");
  RunResult r = run({"classify", path});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  const json& verdict = j.at("polys").at(0).at("slice");
  CHECK(verdict.at("member") == false);
  REQUIRE(!verdict.at("witnesses").empty());
  CHECK(verdict.at("witnesses").at(0).at("operator") == "S[1,2,3]");
}

TEST_CASE("classify evaluates partition membership from the document") {
  std::string path = write_doc(
      "cli_partition.dunkl",
      "algebra: H\n"
      "k: 0,-1/4,-1/4\n"
      "partition: {1|2,3}\n"
      "poly f1 = (1)*x0 + (i)*x1\n"
      "poly f2 = (1)*x0 + (j)*x2 + (k)*x3\n");
  RunResult r = run({"classify", path});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  for (const json& poly : j.at("polys")) {
    CHECK(poly.at("partition") == "1|2,3");
    CHECK(poly.at("P_membership").at("member") == true);
    CHECK(poly.at("equivalence_class") == json::array({2, 1}));
    CHECK(poly.at("slice").at("member") == false);
  }
}

TEST_CASE("classify sweeps every partition on request") {
  std::string path = write_doc("cli_sweep.dunkl",
                               "algebra: H\n"
                               "poly f1 = (1)*x0 + (i)*x1\n");
  RunResult r = run({"classify", path, "--all-partitions", "--json"});
  json j = json::parse(r.out);
  const json& poly = j.at("polys").at(0);
  CHECK(poly.at("all_partitions_count") == 5);
  CHECK(poly.at("all_partitions").size() == 5);
  int members = 0;
  for (const json& entry : poly.at("all_partitions"))
    if (entry.at("member") == true) ++members;
  CHECK(members >= 1);
}

TEST_CASE("classify checks subset membership with an explicit multiplicity") {
  std::string path = write_doc("cli_subset.dunkl",
                               "algebra: H\n"
                               "poly f = (1)*x0 + (j)*x2 + (k)*x3\n");
  RunResult r = run({"classify", path, "--A", "2,3", "--k", "0,-1/4,-1/4"});
  json j = json::parse(r.out);
  const json& poly = j.at("polys").at(0);
  CHECK(poly.at("A") == "2,3");
  CHECK(poly.at("A_membership").at("member") == true);

  std::string bad = write_doc("cli_subset_bad.dunkl",
                              "algebra: H\n"
                              "poly f = (1)*x1\n");
  RunResult nr = run({"classify", bad, "--A", "2,3"});
  CHECK(nr.code == 1);
  json nj = json::parse(nr.out);
  CHECK(nj.at("polys").at(0).at("A_membership").at("member") == false);
}

TEST_CASE("identical invocations produce identical bytes") {
  std::string path = write_doc("cli_repeat.dunkl", kRegularDoc);
  RunResult a = run({"classify", path, "--json"});
  RunResult b = run({"classify", path, "--json"});
  CHECK(a.out == b.out);
  RunResult s1 = run({"selftest", "--filter", "census", "--json"});
  RunResult s2 = run({"selftest", "--filter", "census", "--json"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("apply maps documents through named operators") {
  std::string path = write_doc(
      "cli_apply.dunkl",
      "algebra: H\n"
      "poly f = (1)*x0 + (i)*x1 + (j)*x2 + (k)*x3\n");
  RunResult r = run({"apply", "dbar", path, "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("operator") == "dbar");
  CHECK(j.at("polys").at(0).at("zero") == false);

  RunResult t = run({"apply", "T2", path, "--k", "0,-1/4,-1/4", "--json"});
  CHECK(t.code == 0);
  json tj = json::parse(t.out);
  CHECK(tj.at("operator") == "T2");
  CHECK(tj.at("polys").at(0).at("result") == "(1/2)*j");

  RunResult p = run({"apply", "D{1|2,3}", path, "--json"});
  CHECK(p.code == 0);
  CHECK(json::parse(p.out).at("operator") == "D{1|2,3}");

  RunResult s = run({"apply", "S[2,3]", path, "--json"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out).at("operator") == "S[2,3]");

  RunResult bad = run({"apply", "Q[1]", path});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown operator") != std::string::npos);
}

TEST_CASE("enumerate prints the census and the partition list") {
  RunResult r = run({"enumerate", "--n", "4", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("census").at("bell") == 15);
  CHECK(j.at("census").at("integer_partitions") == 5);
  CHECK(j.at("census").at("subset_spaces") == 12);
  CHECK(j.at("partitions").size() == 15);
  CHECK(j.at("partitions").at(0).contains("default_k"));

  RunResult byalg = run({"enumerate", "--algebra", "H", "--json"});
  json aj = json::parse(byalg.out);
  CHECK(aj.at("n") == 3);
  CHECK(aj.at("census").at("bell") == 5);

  RunResult none = run({"enumerate"});
  CHECK(none.code == 2);
}

TEST_CASE("perron verifies walk matrices end to end") {
  RunResult r = run({"perron", "--n", "3", "--k", "-1/3,-1/3,-1/3", "--i0", "3",
                     "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("order") == 4);
  CHECK(j.at("rank") == 3);
  CHECK(j.at("matrix").at(0).at(1) == "1/3");
  CHECK(j.at("matrix").at(0).at(0) == "0");

  RunResult zero_slot = run({"perron", "--n", "3", "--k", "0,-1/2,-1/2", "--json"});
  CHECK(zero_slot.code == 0);
  CHECK(json::parse(zero_slot.out).at("i0") == 1);

  RunResult bad = run({"perron", "--n", "3", "--k", "1/2,-1,-1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("pointcheck samples rational identities") {
  RunResult r = run({"pointcheck", "--theorem", "difference", "--samples", "4",
                     "--seed", "5", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("passed") == 4);

  RunResult ker = run({"pointcheck", "--theorem", "kerSP", "--P", "{1|2,3}",
                       "--samples", "2", "--json"});
  CHECK(ker.code == 0);

  RunResult slice = run({"pointcheck", "--theorem", "slice-restriction", "--A",
                         "2,3", "--samples", "2", "--json"});
  CHECK(slice.code == 0);

  CHECK(run({"pointcheck", "--theorem", "kerSP"}).code == 2);
  CHECK(run({"pointcheck", "--theorem", "bogus"}).code == 2);
}

TEST_CASE("selftest exposes single criteria through the filter") {
  RunResult r = run({"selftest", "--filter", "census"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.at("criteria").size() == 1);
  CHECK(j.at("criteria").at(0).at("name") == "census");
  CHECK(j.at("criteria").at(0).at("pass") == true);
  CHECK(j.at("all_pass") == true);
  CHECK(r.err.find("criterion 11 census: PASS") != std::string::npos);

  CHECK(run({"selftest", "--filter", "no-such-criterion"}).code == 2);
}

TEST_CASE("usage errors exit with the parse code") {
  CHECK(run({}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "/nonexistent/file.dunkl"}).code == 2);
  std::string bad = write_doc("cli_badsyntax.dunkl",
                              "algebra: H\n"
                              "poly f = (e9)*x0\n");
  RunResult r = run({"classify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
