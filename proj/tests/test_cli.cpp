//  Copyright 2026 The openq Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "openq/io.hpp"

namespace fs = std::filesystem;
using namespace openq;

namespace {

fs::path tmp_dir() {
  const char* env = std::getenv("OPENQ_TEST_TMP");
  fs::path d = env ? fs::path(env) : fs::temp_directory_path() / "openq_cli_test";
  fs::create_directories(d);
  return d;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name) { return (tmp_dir() / name).string(); }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitInput);
  CHECK(run({"no-such-command"}).code == cli::kExitInput);
  CHECK(run({"validate", file("does-not-exist.json")}).code == cli::kExitInput);
  CHECK(run({"example", "nope"}).code == cli::kExitInput);
  CHECK(run({"--version"}).code == cli::kExitPass);
}

TEST_CASE("validate: valid files pass, mutated tables fail") {
  REQUIRE(run({"example", "group", "Z2", "-o", file("pz2.json")}).code == 0);
  auto r = run({"validate", file("pz2.json")});
  CHECK(r.code == cli::kExitPass);
  auto doc = read_json_file(file("pz2.json"));
  for (auto& entry : doc["mult"])
    if (entry[0] == 1 && entry[1] == 2) entry[2] = 1;
  write_json_file(file("pz2_bad.json"), doc);
  auto bad = run({"validate", file("pz2_bad.json"), "--report", file("validate_bad.report.json")});
  CHECK(bad.code == cli::kExitViolation);
  CHECK(run({"report-verify", file("validate_bad.report.json")}).code == cli::kExitPass);
  write_json_file(file("garbage.json"), Json::parse(R"({"hello": 1})"));
  CHECK(run({"validate", file("garbage.json")}).code == cli::kExitInput);
}

TEST_CASE("check-map on locale examples") {
  REQUIRE(run({"example", "locale", "discrete-to-point", "2", "-o", file("d2.json")}).code == 0);
  auto r = run({"check-map", file("d2.json"), "--report", file("d2.report.json")});
  CHECK(r.code == cli::kExitViolation);
  auto report = read_json_file(file("d2.report.json"));
  CHECK(report["schema_version"] == 1);
  bool fr2_witness = false;
  for (const auto& c : report["checks"])
    if (c["kind"] == "frobenius" && !c["passed"].get<bool>()) fr2_witness = c.contains("witness");
  CHECK(fr2_witness);
  auto v = run({"report-verify", file("d2.report.json")});
  CHECK(v.code == cli::kExitPass);

  REQUIRE(run({"example", "locale", "inclusion", "2", "3", "-o", file("incl.json")}).code == 0);
  CHECK(run({"check-map", file("incl.json"), "--fr2", "--surjective"}).code == cli::kExitViolation);
  CHECK(run({"check-map", file("incl.json"), "--fr2"}).code == cli::kExitPass);
}

TEST_CASE("tampered reports are rejected") {
  REQUIRE(run({"example", "locale", "sierpinski-closed", "-o", file("sc.json")}).code == 0);
  REQUIRE(run({"check-map", file("sc.json"), "--report", file("sc.report.json")}).code == cli::kExitViolation);
  auto doc = read_json_file(file("sc.report.json"));
  doc["inputs"]["map"]["document"]["name"] = "edited";
  write_json_file(file("sc_tampered.report.json"), doc);
  CHECK(run({"report-verify", file("sc_tampered.report.json")}).code == cli::kExitViolation);
}

TEST_CASE("--wos on a non-unital target is an input error") {
  auto q = m3_zero();
  auto doc = map_to_json(identity_quantale_map(share(q)));
  write_json_file(file("m3id.json"), doc);
  CHECK(run({"check-map", file("m3id.json"), "--wos"}).code == cli::kExitInput);
}

TEST_CASE("quotient and tensor") {
  REQUIRE(run({"example", "group", "Z2", "-o", file("pz2.json")}).code == 0);
  write_json_file(file("rel.json"), Json::parse(R"({"pairs": [[1, 2]]})"));
  auto q = run({"quotient", file("pz2.json"), file("rel.json"), "-o", file("quo.json"), "--report",
                file("quo.report.json")});
  CHECK(q.code == cli::kExitPass);
  CHECK(quantale_from_json(read_json_file(file("quo.json"))).size() == 2);
  CHECK(run({"report-verify", file("quo.report.json")}).code == cli::kExitPass);
  auto t = run({"tensor", file("quo.json"), file("pz2.json")});
  CHECK(t.code == cli::kExitPass);
  CHECK(t.out.find("4 elements") != std::string::npos);
}

TEST_CASE("pullback-verify passes on the standard context and fails the negative control") {
  REQUIRE(run({"example", "omega-support", "Z2", "-o", file("p.json")}).code == 0);
  REQUIRE(run({"example", "omega-diagonal", "-o", file("f.json")}).code == 0);
  auto r = run({"pullback-verify", "--p", file("p.json"), "--f", file("f.json"), "--report", file("pb.report.json")});
  CHECK(r.code == cli::kExitPass);
  CHECK(run({"report-verify", file("pb.report.json")}).code == cli::kExitPass);

  REQUIRE(run({"example", "z2-finite-part", "-o", file("fp.json")}).code == 0);
  REQUIRE(run({"example", "z2-permutation", "-o", file("perm.json")}).code == 0);
  // Checked contexts refuse the finite part.
  CHECK(run({"pullback-verify", "--p", file("fp.json"), "--f", file("perm.json")}).code == cli::kExitViolation);
}

TEST_CASE("property suites of the effective examples") {
  auto m = run({"example", "matrix-max", "2", "--report", file("mm.report.json")});
  CHECK(m.code == cli::kExitPass);
  CHECK(run({"report-verify", file("mm.report.json")}).code == cli::kExitPass);
  auto g = run({"example", "group-algebra", "Z2", "--report", file("ga.report.json")});
  CHECK(g.code == cli::kExitPass);
  CHECK(run({"report-verify", file("ga.report.json")}).code == cli::kExitPass);
}
