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

#include <functional>
#include <vector>

#include "openq/examples.hpp"
#include "openq/suplattice.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

std::vector<LatticePtr> small_lattices() {
  std::vector<LatticePtr> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(share(chain_lattice(n)));
  out.push_back(share(powerset_lattice(2)));
  out.push_back(m3_zero().carrier());
  // N5: 0 < a < b < 1, 0 < c < 1.
  std::vector<std::pair<Elem, Elem>> n5{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}, {0, 2}, {0, 4}, {1, 4}};
  out.push_back(share(FiniteSupLattice::from_relation(5, n5)));
  return out;
}

// Calls visit on every function L -> M given as a value vector.
void for_each_function(std::size_t from, std::size_t to, const std::function<void(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> v(from, 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < from && ++v[i] == to) v[i++] = 0;
    if (i == from) return;
  }
}

std::vector<std::vector<bool>> order(const FiniteSupLattice& l) {
  std::vector<std::vector<bool>> m(l.size(), std::vector<bool>(l.size()));
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) m[a][b] = l.leq(a, b);
  return m;
}

}  // namespace

TEST_CASE("validate_lattice examples") {
  auto two = chain_lattice(2);
  CHECK(two.join(0, 1) == 1);
  CHECK(two.join(1, 1) == 1);
  const std::pair<Elem, Elem> bad[] = {{0, 1}, {1, 2}};
  try {
    FiniteSupLattice::from_relation(3, bad);
    FAIL("expected NotAPartialOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartialOrder);
  }
  auto p = powerset_lattice(2);
  CHECK(p.join(1, 2) == 3);
  CHECK(p.meet(1, 2) == 0);
}

TEST_CASE("missing bottom and missing join are reported") {
  // Two incomparable elements: no bottom.
  try {
    FiniteSupLattice::from_relation(2, std::span<const std::pair<Elem, Elem>>{});
    FAIL("expected NoBottom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoBottom);
  }
  // 0 < a, b < c, d: a and b have two minimal upper bounds.
  const std::pair<Elem, Elem> bowtie[] = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {0, 3}, {0, 4}};
  try {
    FiniteSupLattice::from_relation(5, bowtie);
    FAIL("expected MissingJoin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingJoin);
  }
}

TEST_CASE("joins of sets") {
  auto p = powerset_lattice(2);
  CHECK(p.join(std::span<const Elem>{}) == p.bottom());
  const Elem one[] = {2};
  CHECK(p.join(one) == 2);
  const Elem two[] = {1, 2};
  CHECK(p.join(two) == 3);
}

TEST_CASE("join and meet tables agree with the brute-force least upper bound") {
  for (const auto& l : small_lattices()) {
    const auto m = order(*l);
    for (Elem a = 0; a < l->size(); ++a)
      for (Elem b = 0; b < l->size(); ++b) {
        auto j = oracle::lub(m, a, b);
        REQUIRE(j);
        CHECK(l->join(a, b) == *j);
        // meet is the join of all common lower bounds
        Elem meet = l->bottom();
        for (Elem c = 0; c < l->size(); ++c)
          if (m[c][a] && m[c][b]) meet = *oracle::lub(m, meet, c);
        CHECK(l->meet(a, b) == meet);
      }
  }
}

TEST_CASE("is_sup_map examples") {
  auto l = share(chain_lattice(3));
  CHECK_FALSE(is_sup_map(identity_map(l)));
  auto omega = share(chain_lattice(2));
  CHECK_FALSE(is_sup_map(constant_map(l, omega, 0)));
  SupMap f{l, omega, {0, 1, 0}};
  auto v = is_sup_map(f);
  REQUIRE(v);
  CHECK_FALSE(v->bottom);
  CHECK(v->a == 1);
  CHECK(v->b == 2);
}

TEST_CASE("right adjoint examples") {
  auto two = share(chain_lattice(2)), three = share(chain_lattice(3));
  CHECK(right_adjoint(identity_map(three)) == identity_map(three));
  auto r = right_adjoint(constant_map(two, three, 0));
  CHECK(r.values == std::vector<Elem>{1, 1, 1});
  SupMap inc{two, three, {0, 2}};
  auto ri = right_adjoint(inc);
  CHECK(ri.values == std::vector<Elem>{0, 0, 1});
}

TEST_CASE("left adjoint examples") {
  auto two = share(chain_lattice(2)), three = share(chain_lattice(3));
  auto id = left_adjoint(identity_map(three));
  REQUIRE(id.ok());
  CHECK(id.value() == identity_map(three));
  SupMap inc{two, three, {0, 2}};
  auto g = left_adjoint(inc);
  REQUIRE(g.ok());
  CHECK(g.value().values == std::vector<Elem>{0, 1, 1});
  // Omega -> Rel(2), 1 -> diagonal: fails to preserve the empty meet.
  auto rel = rel_quantale(2).carrier();
  SupMap diag{two, rel, {0, 9}};
  CHECK_FALSE(left_adjoint(diag).ok());
}

TEST_CASE("left adjoint exists iff all meets are preserved, over all sup-maps") {
  auto lats = small_lattices();
  std::size_t checked = 0;
  for (const auto& l : lats)
    for (const auto& m : lats) {
      if (l->size() > 4 && m->size() > 4) continue;
      for_each_function(l->size(), m->size(), [&](const std::vector<Elem>& v) {
        SupMap f{l, m, v};
        if (is_sup_map(f)) return;
        ++checked;
        auto g = left_adjoint(f);
        CHECK(g.ok() == preserves_meets(f));
        if (g.ok())
          for (Elem y = 0; y < m->size(); ++y)
            for (Elem x = 0; x < l->size(); ++x) CHECK(l->leq(g.value()(y), x) == m->leq(y, f(x)));
        auto r = right_adjoint(f);
        for (Elem x = 0; x < l->size(); ++x)
          for (Elem y = 0; y < m->size(); ++y) CHECK(m->leq(f(x), y) == l->leq(x, r(y)));
      });
    }
  CHECK(checked > 100);
}

TEST_CASE("closure operators from closed families") {
  auto p = share(powerset_lattice(2));
  auto all = BitSet::full(4);
  CHECK(closure_from_closed_family(p, all).values == std::vector<Elem>{0, 1, 2, 3});
  BitSet top(4);
  top.set(3);
  CHECK(closure_from_closed_family(p, top).values == std::vector<Elem>{3, 3, 3, 3});
  BitSet c(4);
  c.set(0);
  c.set(3);
  auto j = closure_from_closed_family(p, c);
  CHECK(j(1) == 3);
  CHECK_FALSE(check_closure(j));
  BitSet not_meet_closed(4);
  not_meet_closed.set(1);
  not_meet_closed.set(2);
  not_meet_closed.set(3);
  CHECK_THROWS_AS(closure_from_closed_family(p, not_meet_closed), Error);
}

TEST_CASE("check_closure finds broken laws") {
  auto l = share(chain_lattice(3));
  auto v = check_closure(ClosureOperator{l, {0, 0, 2}});
  REQUIRE(v);
  CHECK(v->law == ClosureLaw::Inflationary);
  auto w = check_closure(ClosureOperator{l, {1, 2, 2}});
  REQUIRE(w);
  CHECK(w->law == ClosureLaw::Idempotent);
}
