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

#include <set>

#include "openq/examples.hpp"
#include "openq/pullback.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

QuantalePtr pz2() { return share(group_powerset_quantale(cyclic_group(2))); }

// p: P(Z2) -> Omega by support, f: Rel(2) -> Omega with f*(1) = Delta.
PullbackContext standard_context(std::size_t n = 8) {
  return make_pullback_context(omega_support_map(pz2()), omega_diagonal_map(), n);
}

// h on a word computed from the oracle left adjoint of p*.
Elem oracle_h(const PullbackContext& ctx, const Word& w) {
  auto lower = *oracle::left_adjoint(ctx.x(), ctx.q(), ctx.p_star);
  Elem acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Elem v = w[i].side == Side::Y ? w[i].value : ctx.f_star[lower[w[i].value]];
    acc = i == 0 ? v : ctx.y().mult(acc, v);
  }
  return acc;
}

}  // namespace

TEST_CASE("context tables") {
  auto ctx = standard_context();
  CHECK(ctx.checked);
  CHECK(ctx.p_star == std::vector<Elem>{0, 3});
  CHECK(ctx.p_lower == std::vector<Elem>{0, 1, 1, 1});
  CHECK(ctx.f_star == std::vector<Elem>{0, 9});
  CHECK(ctx.truncation() == 8);
}

TEST_CASE("hypotheses are enforced unless the context is unchecked") {
  auto fp = z2_algebra_finite_part();
  auto id = identity_quantale_map(fp.map.target);
  try {
    make_pullback_context(fp.map, id);
    FAIL("expected HypothesisFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFailure);
    CHECK(e.witness().size() == 3);
  }
  CHECK_FALSE(make_unchecked_pullback_context(fp.map, id).checked);
  try {
    make_pullback_context(sierpinski_closed_point(), identity_quantale_map(sierpinski_closed_point().target));
    FAIL("expected HypothesisFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFailure);
  }
  CHECK_THROWS_AS(make_pullback_context(omega_support_map(pz2()), identity_quantale_map(pz2())), Error);
}

TEST_CASE("h on words matches an independent evaluation") {
  auto ctx = standard_context();
  std::size_t words = 0;
  for_each_word(ctx.y(), ctx.q(), 1, 4, std::nullopt, std::nullopt, [&](const Word& w) {
    ++words;
    CHECK(h_word(ctx, w) == oracle_h(ctx, w));
  });
  CHECK(words > 1000);
}

TEST_CASE("h respects all nine families on the standard context") {
  auto ctx = standard_context();
  auto r = verify_h_respects(ctx, 4);
  CHECK(r.ok());
  REQUIRE(r.families.size() == kFamilyCount);
  for (const auto& f : r.families) {
    INFO(to_string(f.family));
    CHECK(f.instances > 0);
    CHECK(f.failures == 0);
  }
}

TEST_CASE("relation instances have the documented shapes") {
  auto ctx = standard_context(12);
  std::set<Family> seen_two_flanks;
  for_each_relation_instance(ctx, 6, [&](const RelationInstance& ri) {
    CHECK_NOTHROW(check_alternating(ri.left));
    CHECK_NOTHROW(check_alternating(ri.right));
    CHECK(std::max(ri.left.size(), ri.right.size()) <= 6);
    CHECK(grade_of(ri.left).n <= 12);
    if (ri.family >= Family::InnerQQ && ri.left.size() >= 5 && ri.right.size() >= 5) seen_two_flanks.insert(ri.family);
  });
  CHECK(seen_two_flanks.size() >= 1);
  CHECK_THROWS_AS(pullback_relation_instances(standard_context(8), 5), Error);
}

TEST_CASE("the negative control fails at an inner QQ instance") {
  auto fp = z2_algebra_finite_part();
  auto ctx = make_unchecked_pullback_context(fp.map, identity_quantale_map(fp.map.target));
  auto r = verify_h_respects(ctx, 4);
  CHECK_FALSE(r.ok());
  bool inner_qq_failed = false;
  for (const auto& f : r.families) {
    INFO(to_string(f.family));
    if (f.hypothesis != Hypothesis::FR2) CHECK(f.failures == 0);
    if (f.family != Family::InnerQQ) continue;
    REQUIRE(f.first_failure);
    inner_qq_failed = true;
    const auto& fail = *f.first_failure;
    CHECK(fail.h_left != fail.h_right);
    CHECK(h_word(ctx, fail.instance.left) == fail.h_left);
    CHECK(h_word(ctx, fail.instance.right) == fail.h_right);
  }
  CHECK(inner_qq_failed);
}

TEST_CASE("adjunction on words: unit chains end at h(w)") {
  auto ctx = standard_context();
  auto r = verify_adjunction_on_words(ctx, 4);
  CHECK(r.ok());
  CHECK(r.words > 1000);
  CHECK_FALSE(r.sample_traces.empty());
  std::size_t rewrites = 0;
  for (auto c : r.rewrite_counts) rewrites += c;
  CHECK(rewrites > 0);
  for (const auto& t : r.sample_traces) {
    CHECK_FALSE(t.failed_step);
    CHECK(t.result == h_word(ctx, t.word));
    REQUIRE_FALSE(t.steps.empty());
    CHECK(t.steps.front().kind == ChainStepKind::Unit);
  }
}

TEST_CASE("unit chain trace for ({g}, y)") {
  auto ctx = standard_context();
  for (Elem y = 1; y < 16; ++y) {
    const Word w = {{Side::Q, 2}, {Side::Y, y}};
    auto t = unit_chain(ctx, w);
    INFO(y);
    CHECK_FALSE(t.failed_step);
    CHECK(t.result == ctx.y().mult(9, y));
    REQUIRE(t.steps.size() >= 2);
    CHECK(t.steps[0].kind == ChainStepKind::Unit);
    CHECK(t.steps[0].after == Word{{Side::Q, 3}, {Side::Y, y}});
    CHECK(t.steps.back().after == Word{{Side::Y, t.result}});
  }
}

TEST_CASE("Beck-Chevalley rows") {
  auto ctx = standard_context();
  auto r = verify_beck_chevalley(ctx);
  CHECK(r.ok());
  REQUIRE(r.rows.size() == 4);
  for (const auto& row : r.rows) {
    const Elem expected = row.a == 0 ? 0 : 9;
    CHECK(row.by_word == expected);
    CHECK(row.by_graded == expected);
    CHECK(row.expected == expected);
  }
}

TEST_CASE("all sixteen Frobenius shapes hold on the standard context") {
  auto ctx = standard_context();
  auto r = verify_pullback_frobenius(ctx, 4);
  CHECK(r.ok());
  CHECK(r.one_sided_instances > 0);
  CHECK(r.one_sided_failures == 0);
  REQUIRE(r.cases.size() == 16);
  std::set<std::size_t> ids;
  for (const auto& c : r.cases) {
    INFO(c.shape.name());
    ids.insert(c.shape.id());
    CHECK(c.instances > 0);
    CHECK(c.failures == 0);
  }
  CHECK(ids.size() == 16);
}

TEST_CASE("case shapes are distinct and named") {
  auto shapes = all_case_shapes();
  std::set<std::string> names;
  for (const auto& s : shapes) names.insert(s.name());
  CHECK(names.size() == 16);
  CHECK(shapes[0].id() == 0);
}

TEST_CASE("with f the identity, h((a)) = p_!(a)") {
  auto p = omega_support_map(pz2());
  auto ctx = make_pullback_context(p, identity_quantale_map(p.target));
  for (Elem a = 0; a < 4; ++a) CHECK(h_word(ctx, Word{{Side::Q, a}}) == ctx.p_lower[a]);
  CHECK(verify_h_respects(ctx, 4).ok());
  CHECK(verify_adjunction_on_words(ctx, 4).ok());
}

TEST_CASE("h on graded elements is the join over generators") {
  auto ctx = standard_context();
  const auto& yq = *ctx.algebra;
  auto e = yq.join(yq.embed({{Side::Q, 1}}), yq.embed({{Side::Y, 6}, {Side::Q, 2}}));
  CHECK(h_graded(ctx, e) == ctx.y().join(h_word(ctx, {{Side::Q, 1}}), h_word(ctx, {{Side::Y, 6}, {Side::Q, 2}})));
}
