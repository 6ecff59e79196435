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

#include <algorithm>

#include "openq/examples.hpp"
#include "openq/openness.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

RationalSubspace span1(std::size_t n, RationalVector v) {
  return RationalSubspace::span(n, std::vector<RationalVector>{std::move(v)});
}

RationalSubspace coords(std::size_t n, std::initializer_list<std::size_t> cs) {
  BitSet b(n);
  for (auto c : cs) b.set(c);
  return RationalSubspace::coordinate(n, b);
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(kind));
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("groupoids") {
  CHECK_NOTHROW(validate_groupoid(cyclic_group(5)));
  CHECK_NOTHROW(validate_groupoid(symmetric_group3()));
  CHECK_NOTHROW(validate_groupoid(pair_groupoid(3)));
  CHECK(pair_groupoid(2).identities().indices() == std::vector<std::size_t>{0, 3});
  // Not associative: a 3-element table with e, and x y = y x = e but x x = y.
  expect_error(ErrorKind::InvalidGroupTable,
               [] { group_from_table("bad", {"e", "x", "y"}, {0, 1, 2, 1, 2, 0, 2, 0, 0}); });
}

TEST_CASE("stock quantales") {
  CHECK_FALSE(validate_quantale(rel_quantale(3)));
  CHECK(rel_quantale(3).size() == 512);
  CHECK_FALSE(validate_quantale(group_powerset_quantale(symmetric_group3())));
  expect_error(ErrorKind::TooLarge, [] { rel_quantale(4); });
  CHECK(is_locale(chain_frame(4)));
  CHECK_FALSE(is_locale(rel_quantale(2)));
  auto s = opens_quantale(sierpinski_space());
  CHECK(s.size() == 3);
  CHECK(s.lattice().name(1) == "m");
}

TEST_CASE("spaces and locale maps") {
  FiniteSpace bad{"bad", 2, {0, 1, 2}, {}};
  expect_error(ErrorKind::InvalidTopology, [&] { validate_space(bad); });
  FiniteSpace no_union{"no union", 2, {0, 1, 2, 3}, {}};
  CHECK_NOTHROW(validate_space(no_union));
  // Sierpinski -> discrete 2, identity on points, is not continuous.
  expect_error(ErrorKind::NotContinuous, [] { finite_locale_map(sierpinski_space(), discrete_space(2), {0, 1}); });
  // The closed point of Sierpinski is not an open map.
  expect_error(ErrorKind::NotOpen,
               [] { finite_locale_map(point_space(), sierpinski_space(), {1}, LocaleMapOptions{true}); });
  auto p = discrete_to_point(3);
  CHECK(p.has_direct_image());
  CHECK(inverse_table(p) == std::vector<Elem>{0, 7});
}

TEST_CASE("matrix support map: p_! p* = id on all 16 relations") {
  auto p = matrix_support_map(2);
  for (Elem u = 0; u < 16; ++u) CHECK(p.direct_image(p.inverse_image(u)) == u);
  CHECK(is_surjective(p).surjective);
}

TEST_CASE("matrix support map: an explicit two-sided Frobenius instance") {
  auto p = matrix_support_map(2);
  const auto& m = *p.source;
  auto e11 = coords(4, {0});
  auto e21 = coords(4, {2});
  const Elem x = 2;  // {(1,2)}
  auto [lhs, rhs] = frobenius_sides(p, FrobeniusLaw::TwoSided, e11, x, e21);
  CHECK(lhs == Elem{1});
  CHECK(rhs == Elem{1});
  CHECK(m.mult(m.mult(e11, p.inverse_image(x)), e21) == e11);
}

TEST_CASE("support adjunction on sampled subspaces") {
  auto p = matrix_support_map(2);
  CheckOptions opt;
  opt.samples = 100;
  auto s = check_semiopen(p, opt);
  CHECK(s.verdict.semiopen);
  CHECK(s.verdict.coverage.mode == CheckMode::Sampled);
  auto g = group_algebra_support_map(cyclic_group(2));
  CHECK(check_semiopen(g, opt).verdict.semiopen);
}

TEST_CASE("support is lax: supp(VW) is strictly below supp(V) supp(W)") {
  auto p = group_algebra_support_map(cyclic_group(2));
  const auto& q = *p.source;
  auto v = span1(2, {1, 1});
  auto w = span1(2, {1, -1});
  CHECK(q.mult(v, w) == q.bottom());
  CHECK(p.direct_image(q.mult(v, w)) == Elem{0});
  CHECK(p.target->mult(p.direct_image(v), p.direct_image(w)) == Elem{3});
}

TEST_CASE("matrix and group algebra Frobenius verdicts") {
  CheckOptions opt;
  auto m = frobenius_report(matrix_support_map(2), opt);
  CHECK(m.fr1->holds());
  CHECK(m.fr1_right->holds());
  CHECK(m.fr2->holds());
  CHECK(m.fr2->coverage.samples >= 200);
  auto z2 = frobenius_report(group_algebra_support_map(cyclic_group(2)), opt);
  CHECK(z2.fr1->holds());
  REQUIRE_FALSE(z2.fr2->holds());
  const auto& w = *z2.fr2->witness;
  REQUIRE(w.b);
  auto [lhs, rhs] = frobenius_sides(*check_semiopen(group_algebra_support_map(cyclic_group(2))).map,
                                    FrobeniusLaw::TwoSided, w.a, w.x, w.b);
  CHECK(lhs != rhs);
  auto s3 = frobenius_report(group_algebra_support_map(symmetric_group3()), opt);
  CHECK(s3.fr1->holds());
  CHECK_FALSE(s3.fr2->holds());
}

TEST_CASE("Z2 finite part: six elements, FR2 fails at (span{1+g}, {e}, span{1-g})") {
  auto fp = z2_algebra_finite_part();
  CHECK(fp.sub.quantale->size() == 6);
  CHECK_FALSE(validate_quantale(*fp.sub.quantale));
  auto v = span1(2, {1, 1});
  auto w = span1(2, {1, -1});
  auto sm = *check_semiopen(fp.map).map;
  auto [lhs, rhs] = frobenius_sides(sm, FrobeniusLaw::TwoSided, fp.sub.index_of(v), Elem{1}, fp.sub.index_of(w));
  CHECK(lhs == Elem{0});
  CHECK(rhs == Elem{3});
  auto r = frobenius_report(fp.map);
  CHECK(r.fr1->holds());
  CHECK_FALSE(r.fr2->holds());
  CHECK(r.fr2->coverage.mode == CheckMode::Exhaustive);
}

TEST_CASE("omega support") {
  auto q = share(group_powerset_quantale(cyclic_group(3)));
  auto p = omega_support_map(q);
  CHECK(inverse_table(p) == std::vector<Elem>{0, 7});
  expect_error(ErrorKind::HypothesisFailure, [] { omega_support_map(share(rel_quantale(2))); });
  expect_error(ErrorKind::HypothesisFailure, [] { omega_support_map(share(nilpotent_chain3())); });
}

TEST_CASE("permutation representation and diagonal") {
  auto perm = z2_permutation_representation();
  CHECK(inverse_table(perm) == std::vector<Elem>{0, 9, 6, 15});
  CHECK_FALSE(validate_hom(perm.inverse_image, *perm.target, *perm.source));
  auto diag = omega_diagonal_map();
  CHECK_FALSE(validate_hom(diag.inverse_image, *diag.target, *diag.source));
  CHECK_FALSE(check_semiopen(diag).verdict.semiopen);
}

TEST_CASE("corpus maps have homomorphic inverse images") {
  for (const auto& [name, p] : finite_map_corpus()) {
    INFO(name);
    CHECK_FALSE(validate_hom(p.inverse_image, *p.target, *p.source));
    if (p.target->size() > 4 || p.source->size() > 8) continue;
    auto homs = oracle::all_homs(*p.target, *p.source);
    CHECK(std::find(homs.begin(), homs.end(), inverse_table(p)) != homs.end());
  }
}
