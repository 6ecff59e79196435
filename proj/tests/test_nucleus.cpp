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
#include "openq/nucleus.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

QuantalePtr pz2() { return share(group_powerset_quantale(cyclic_group(2))); }

std::vector<NamedQuantale> small_corpus() {
  std::vector<NamedQuantale> out;
  for (auto& nq : finite_quantale_corpus())
    if (nq.q->size() <= 5) out.push_back(nq);
  return out;
}

}  // namespace

TEST_CASE("quotient of P(Z2) by ({e},{g}) has two elements and is Omega") {
  auto q = pz2();
  const std::vector<ElemPair> rel = {{1, 2}};
  auto j = nucleus_from_relation(q, rel);
  CHECK(j.values == std::vector<Elem>{0, 3, 3, 3});
  auto quo = quotient(j);
  REQUIRE(quo.quantale->size() == 2);
  CHECK(quo.back_map == std::vector<Elem>{0, 3});
  auto omega = omega_quantale();
  CHECK(quo.quantale->lattice() == omega.lattice());
  CHECK(quo.quantale->mult_table() == omega.mult_table());
  CHECK(quo.quantale->inv_table() == omega.inv_table());
  CHECK(quo.quantale->unit() == omega.unit());
  CHECK_FALSE(validate_quantale(*quo.quantale));
  CHECK(nucleus_from_quotient(quo) == j);
}

TEST_CASE("saturation: left-only and two-sided modes give the same pair set") {
  for (const auto& [name, q] : finite_quantale_corpus()) {
    if (q->size() > 8) continue;
    INFO(name);
    for (Elem r = 0; r < q->size(); ++r)
      for (Elem s = 0; s < q->size(); ++s) {
        const std::vector<ElemPair> rel = {{r, s}};
        CHECK(saturate_relation(*q, rel, SaturationMode::LeftOnly) ==
              saturate_relation(*q, rel, SaturationMode::TwoSided));
      }
  }
}

TEST_CASE("relation nuclei agree with the brute-force least nucleus (single pairs)") {
  for (const auto& [name, q] : small_corpus()) {
    INFO(name);
    for (Elem r = 0; r < q->size(); ++r)
      for (Elem s = 0; s < q->size(); ++s) {
        const std::vector<ElemPair> rel = {{r, s}};
        auto expected = oracle::least_nucleus_identifying(*q, rel);
        REQUIRE(expected);
        auto j = nucleus_from_relation(q, rel);
        CHECK(j.values == *expected);
        CHECK_FALSE(check_nucleus(j));
      }
  }
}

TEST_CASE("relation nuclei agree with the brute-force least nucleus (pairs of pairs)") {
  for (const auto& [name, q] : small_corpus()) {
    INFO(name);
    const Elem n = static_cast<Elem>(q->size());
    for (Elem a = 0; a < n * n; ++a)
      for (Elem b = a + 1; b < n * n; ++b) {
        const std::vector<ElemPair> rel = {{a / n, a % n}, {b / n, b % n}};
        auto expected = oracle::least_nucleus_identifying(*q, rel);
        REQUIRE(expected);
        CHECK(nucleus_from_relation(q, rel).values == *expected);
      }
  }
}

TEST_CASE("every oracle nucleus is recovered from its closed set, its kernel and its quotient") {
  std::size_t total = 0;
  for (const auto& [name, q] : small_corpus()) {
    INFO(name);
    for (const auto& nu : oracle::all_nuclei(*q)) {
      ++total;
      BitSet closed(q->size());
      for (Elem a = 0; a < q->size(); ++a)
        if ((nu.closed >> a) & 1) closed.set(a);
      auto j = nucleus_from_closed_set(q, closed);
      CHECK(j.values == nu.values);
      CHECK_FALSE(check_nucleus(j));
      std::vector<ElemPair> kernel;
      for (Elem a = 0; a < q->size(); ++a) kernel.emplace_back(a, nu.values[a]);
      auto from_rel = nucleus_from_relation(q, kernel);
      CHECK(from_rel.values == nu.values);
      auto quo = quotient(j);
      CHECK_FALSE(validate_quantale(*quo.quantale));
      CHECK(nucleus_from_quotient(quo) == j);
    }
  }
  CHECK(total > 20);
}

TEST_CASE("quotient maps are homomorphisms onto the quotient") {
  for (const auto& [name, q] : small_corpus()) {
    INFO(name);
    for (const auto& nu : oracle::all_nuclei(*q)) {
      BitSet closed(q->size());
      for (Elem a = 0; a < q->size(); ++a)
        if ((nu.closed >> a) & 1) closed.set(a);
      auto quo = quotient(nucleus_from_closed_set(q, closed));
      auto project = [&](Elem a) { return quo.project[a]; };
      CHECK_FALSE(validate_hom(project, *q, *quo.quantale));
    }
  }
}

TEST_CASE("check_nucleus reports broken laws") {
  auto q = pz2();
  CHECK(check_nucleus(Nucleus{q, {0, 1, 1, 3}})->law == NucleusLaw::Inflationary);
  // Closure that is not multiplicative: close only {e} up to the top.
  auto v = check_nucleus(Nucleus{q, {0, 3, 2, 3}});
  REQUIRE(v);
  CHECK((v->law == NucleusLaw::Multiplicative || v->law == NucleusLaw::Involutive));
  auto chain = share(chain_frame(3));
  CHECK(check_nucleus(Nucleus{chain, {0, 2, 1}}).has_value());
}

TEST_CASE("nucleus_from_closed_set rejects families that are not meet-closed") {
  auto q = pz2();
  BitSet closed(4);
  closed.set(1);
  closed.set(2);
  closed.set(3);
  try {
    nucleus_from_closed_set(q, closed);
    FAIL("expected NotMeetClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMeetClosed);
  }
}

TEST_CASE("factoring a sup-map through the quotient") {
  auto q = pz2();
  const std::vector<ElemPair> rel = {{1, 2}};
  auto sat = saturate_relation(*q, rel);
  auto quo = quotient(nucleus_from_relation(q, rel));
  auto omega = share(omega_quantale());
  SupMap support{q->carrier(), omega->carrier(), {0, 1, 1, 1}};
  auto ok = factor_sup_map(support, quo, sat);
  REQUIRE(ok.ok());
  CHECK(ok.value().values == std::vector<Elem>{0, 1});
  // U -> [e in U] separates {e} and {g}.
  SupMap contains_e{q->carrier(), omega->carrier(), {0, 1, 0, 1}};
  auto bad = factor_sup_map(contains_e, quo, sat);
  REQUIRE_FALSE(bad.ok());
  CHECK(contains_e(bad.error().r) != contains_e(bad.error().s));
  CHECK(sat.contains(bad.error().r, bad.error().s));
}

TEST_CASE("equalizer of two maps P(Z2) -> Omega") {
  auto q = pz2();
  auto omega = share(omega_quantale());
  auto f = make_finite_map(q, omega, {0, 3}, "support");
  auto g = make_finite_map(q, omega, {0, 1}, "unit");
  auto eq = equalizer(f, g);
  CHECK(eq.relation == std::vector<ElemPair>{{0, 0}, {3, 1}});
  CHECK(eq.quotient.quantale->size() == 2);
  auto self = equalizer(f, f);
  CHECK(self.quotient.quantale->size() == q->size());
}
