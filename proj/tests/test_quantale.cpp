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

#include "openq/examples.hpp"
#include "openq/openness.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

QuantalePtr pz2() { return share(group_powerset_quantale(cyclic_group(2))); }

}  // namespace

TEST_CASE("validate_quantale examples") {
  CHECK_FALSE(validate_quantale(*pz2()));
  auto rel1 = rel_quantale(1);
  CHECK_FALSE(validate_quantale(rel1));
  CHECK(rel1.size() == 2);
  CHECK(rel1.lattice() == omega_quantale().lattice());
  CHECK(rel1.mult_table() == omega_quantale().mult_table());
  // {e}.{g} := {e}
  auto bad = pz2()->with_mult_entry(1, 2, 1);
  auto v = validate_quantale(bad);
  REQUIRE(v);
  CHECK((v->axiom == QuantaleAxiom::Associativity || v->axiom == QuantaleAxiom::DistributesLeft ||
         v->axiom == QuantaleAxiom::DistributesRight || v->axiom == QuantaleAxiom::InvolutionAntiMultiplicative ||
         v->axiom == QuantaleAxiom::Unit));
  CHECK_FALSE(oracle::quantale_valid(bad));
}

TEST_CASE("the example corpus is valid and agrees with the brute-force oracle") {
  for (const auto& [name, q] : finite_quantale_corpus()) {
    INFO(name);
    CHECK_FALSE(validate_quantale(*q));
    CHECK(oracle::quantale_valid(*q));
  }
}

TEST_CASE("single-entry mutations: the validator agrees with the oracle on every one") {
  std::size_t mutations = 0, rejected = 0;
  for (const auto& [name, q] : finite_quantale_corpus()) {
    if (q->size() > 8) continue;
    for (Elem a = 0; a < q->size(); ++a)
      for (Elem b = 0; b < q->size(); ++b)
        for (Elem v = 0; v < q->size(); ++v) {
          if (v == q->mult(a, b)) continue;
          auto m = q->with_mult_entry(a, b, v);
          ++mutations;
          const bool ok = !validate_quantale(m);
          rejected += !ok;
          if (ok != oracle::quantale_valid(m)) FAIL_CHECK(name << " mutation " << a << "*" << b << ":=" << v);
        }
  }
  CHECK(mutations > 500);
  // Some mutations are valid quantales again (Chain3 with a.a := 0 is Chain3-nil).
  CHECK(rejected < mutations);
  CHECK(rejected * 10 > mutations * 9);
  auto chain3 = chain_frame(3);
  CHECK_FALSE(validate_quantale(chain3.with_mult_entry(1, 1, 0)));
}

TEST_CASE("validate_hom examples") {
  auto q = pz2();
  auto id = identity_quantale_map(q);
  CHECK_FALSE(validate_hom(id.inverse_image, *q, *q));
  // U -> [e in U] from P(Z2) to Omega.
  auto omega = share(omega_quantale());
  auto h = [](Elem u) -> Elem { return u & 1u; };
  auto v = validate_hom(h, *q, *omega);
  REQUIRE(v);
  CHECK(v->law == HomLaw::Multiplication);
  CHECK(v->witness == std::vector<Elem>{2, 2});
}

TEST_CASE("the matrix inverse image is a homomorphism") {
  auto p = matrix_support_map(2);
  CHECK_FALSE(validate_hom(p.inverse_image, *p.target, *p.source));
}

TEST_CASE("compose_maps") {
  auto q = pz2();
  auto p = omega_support_map(q);
  auto id_q = identity_quantale_map(q);
  auto id_x = identity_quantale_map(p.target);
  auto a = compose_maps(p, id_q);
  auto b = compose_maps(id_x, p);
  for (Elem x = 0; x < 2; ++x) {
    CHECK(a.inverse_image(x) == p.inverse_image(x));
    CHECK(b.inverse_image(x) == p.inverse_image(x));
  }
  for (Elem e = 0; e < 4; ++e) CHECK(a.direct_image(e) == p.direct_image(e));
}

TEST_CASE("compose_maps with a finite map after an effective one") {
  auto rel = share(rel_quantale(2));
  auto s = matrix_support_map(2);
  auto omega = share(omega_quantale());
  auto collapse = make_finite_map(rel, omega, {0, 15}, "top");
  auto c = compose_maps(collapse, s);
  for (Elem x = 0; x < 2; ++x) CHECK(c.inverse_image(x) == s.inverse_image(collapse.inverse_image(x)));
  CHECK_FALSE(c.has_direct_image());
}

TEST_CASE("is_surjective examples") {
  auto p = matrix_support_map(2);
  CHECK(is_surjective(p).surjective);
  CHECK(is_surjective(identity_quantale_map(pz2())).surjective);
  auto first = omega_first_coordinate();
  auto s = check_semiopen(first);
  REQUIRE(s.map);
  auto v = is_surjective(*s.map);
  CHECK_FALSE(v.surjective);
  REQUIRE(v.witness);
  CHECK(s.map->direct_image(s.map->inverse_image(3)) == 2);
}

TEST_CASE("semiopen corpus maps: direct image preserves involution; round trip iff injective") {
  for (const auto& [name, p] : finite_map_corpus()) {
    INFO(name);
    auto s = check_semiopen(p);
    if (!s.map) continue;
    const auto& m = *s.map;
    for (Elem a = 0; a < m.source->size(); ++a)
      CHECK(m.direct_image(m.source->inv(a)) == m.target->inv(m.direct_image(a)));
    bool roundtrip = true, injective = true;
    for (Elem x = 0; x < m.target->size(); ++x) {
      roundtrip = roundtrip && m.direct_image(m.inverse_image(x)) == x;
      for (Elem y = 0; y < x; ++y) injective = injective && m.inverse_image(x) != m.inverse_image(y);
    }
    CHECK(roundtrip == injective);
  }
}

TEST_CASE("units are discovered when not declared") {
  auto m3 = m3_zero();
  CHECK_FALSE(m3.unit());
  auto q = pz2();
  CHECK(q->unit() == Elem{1});
}
