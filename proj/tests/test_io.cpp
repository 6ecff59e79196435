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

#include <filesystem>
#include <fstream>

#include "openq/io.hpp"
#include "openq/openness.hpp"

using namespace openq;

namespace {

template <class F>
void expect_parse_error(F&& f) {
  try {
    f();
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("digests ignore key order") {
  Json a = Json::parse(R"({"x": 1, "y": [1, 2]})");
  Json b = Json::parse(R"({"y": [1, 2], "x": 1})");
  CHECK(json_digest(a) == json_digest(b));
  b["x"] = 2;
  CHECK(json_digest(a) != json_digest(b));
}

TEST_CASE("lattice round trip") {
  for (const auto& nq : finite_quantale_corpus()) {
    const auto& l = nq.q->lattice();
    auto back = lattice_from_json(lattice_to_json(l));
    CHECK(back == l);
    CHECK(back.names() == l.names());
  }
}

TEST_CASE("quantale round trip") {
  for (const auto& nq : finite_quantale_corpus()) {
    INFO(nq.name);
    auto back = quantale_from_json(quantale_to_json(*nq.q));
    CHECK(back == *nq.q);
    CHECK(back.name() == nq.q->name());
  }
}

TEST_CASE("map round trip") {
  for (const auto& nm : finite_map_corpus()) {
    INFO(nm.name);
    auto s = check_semiopen(nm.map);
    const auto& m = s.map ? *s.map : nm.map;
    auto back = finite_map_from_json(map_to_json(m));
    CHECK(inverse_table(back) == inverse_table(m));
    CHECK(back.has_direct_image() == m.has_direct_image());
    if (m.has_direct_image()) CHECK(direct_table(back) == direct_table(m));
  }
}

TEST_CASE("effective map documents") {
  EffectiveMapSpec spec{"matrix-support", 2, {}, {}};
  auto doc = effective_spec_to_json(spec);
  auto parsed = map_from_json(doc);
  REQUIRE(std::holds_alternative<EffectiveMapSpec>(parsed));
  CHECK(std::get<EffectiveMapSpec>(parsed).n == 2);
  CHECK(build_effective_map(std::get<EffectiveMapSpec>(parsed)).target->size() == 16);
  expect_parse_error([] { map_from_json(Json::parse(R"({"effective": "matrix-support", "n": 7})")); });
  expect_parse_error([] { map_from_json(Json::parse(R"({"effective": "nope"})")); });
}

TEST_CASE("groups by name") {
  CHECK(group_by_name("Z5").size() == 5);
  CHECK(group_by_name("S3").size() == 6);
  CHECK_THROWS_AS(group_by_name("Z0"), Error);
  CHECK_THROWS_AS(group_by_name("A5"), Error);
}

TEST_CASE("relation round trip and bounds") {
  const std::vector<ElemPair> r = {{1, 2}, {3, 0}};
  CHECK(relation_from_json(relation_to_json(r), 4) == r);
  expect_parse_error([&] { relation_from_json(relation_to_json(r), 3); });
  expect_parse_error([] { relation_from_json(Json::parse(R"({"pairs": [[1]]})"), 4); });
}

TEST_CASE("malformed quantale documents") {
  auto doc = quantale_to_json(omega_quantale());
  auto missing = doc;
  missing["mult"].erase(0);
  expect_parse_error([&] { quantale_from_json(missing); });
  auto duplicate = doc;
  duplicate["mult"].push_back(doc["mult"][0]);
  expect_parse_error([&] { quantale_from_json(duplicate); });
  auto range = doc;
  range["inv"][0][1] = 9;
  expect_parse_error([&] { quantale_from_json(range); });
  expect_parse_error([] { quantale_from_json(Json::parse("[1, 2]")); });
  expect_parse_error([] { lattice_from_json(Json::parse(R"({"elements": ["a"], "leq": [[0, 5]]})")); });
}

TEST_CASE("lattice documents still run the order validation") {
  try {
    lattice_from_json(Json::parse(R"({"elements": ["a", "b"], "leq": [[0, 1], [1, 0]]})"));
    FAIL("expected NotAPartialOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartialOrder);
  }
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "openq_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "omega.json";
  write_json_file(path, quantale_to_json(omega_quantale()));
  CHECK(quantale_from_json(read_json_file(path)) == omega_quantale());
  auto ref = quantale_from_ref(Json("omega.json"), dir);
  CHECK(*ref == omega_quantale());
  std::ofstream(dir / "bad.json") << "{ not json";
  expect_parse_error([&] { read_json_file(dir / "bad.json"); });
  expect_parse_error([&] { read_json_file(dir / "missing.json"); });
}
