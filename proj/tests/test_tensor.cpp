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

#include <random>

#include "openq/examples.hpp"
#include "openq/tensor.hpp"
#include "oracles/oracles.hpp"

using namespace openq;

namespace {

std::vector<std::vector<bool>> order_of(const FiniteSupLattice& l) {
  std::vector<std::vector<bool>> m(l.size(), std::vector<bool>(l.size()));
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) m[a][b] = l.leq(a, b);
  return m;
}

LatticePtr pentagon() {
  // 0 < a < c < 1, 0 < b < 1
  const std::vector<std::pair<Elem, Elem>> leq = {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}, {0, 3}, {0, 4}, {1, 4}};
  return share(FiniteSupLattice::from_relation(5, leq, {"0", "a", "b", "c", "1"}));
}

// Lattices with at most five elements.
std::vector<LatticePtr> small_lattices() {
  std::vector<LatticePtr> out;
  for (const auto& nq : finite_quantale_corpus())
    if (nq.q->size() <= 5) out.push_back(nq.q->carrier());
  out.push_back(pentagon());
  return out;
}

bool is_iso_pair(const TensorIso& iso) {
  if (is_sup_map(iso.forward) || is_sup_map(iso.backward)) return false;
  return compose(iso.backward, iso.forward) == identity_map(iso.forward.dom) &&
         compose(iso.forward, iso.backward) == identity_map(iso.backward.dom);
}

}  // namespace

TEST_CASE("Omega tensor Omega has two elements") {
  auto omega = omega_quantale().carrier();
  auto t = TensorLattice::of({omega, omega});
  CHECK(t.size() == 2);
  CHECK(oracle::all_bi_ideals(order_of(*omega), order_of(*omega)).size() == 2);
}

TEST_CASE("binary tensor products match the bi-ideal oracle") {
  auto lats = small_lattices();
  std::size_t pairs = 0;
  for (const auto& l : lats)
    for (const auto& m : lats) {
      if (l->size() * m->size() > 20) continue;
      ++pairs;
      auto expected = oracle::all_bi_ideals(order_of(*l), order_of(*m));
      auto t = TensorLattice::of({l, m});
      REQUIRE(t.size() == expected.size());
      for (std::uint64_t s : expected) {
        BitSet b(l->size() * m->size());
        for (std::size_t i = 0; i < b.size(); ++i)
          if ((s >> i) & 1) b.set(i);
        CHECK(t.space()->is_closed(b));
        CHECK(t.index_of(BiIdeal::closure_of(t.space(), b)) < t.size());
        CHECK(BiIdeal::closure_of(t.space(), b).members() == b);
      }
    }
  CHECK(pairs > 20);
}

TEST_CASE("Omega tensor L is isomorphic to L for every small lattice") {
  auto omega = omega_quantale().carrier();
  for (const auto& l : small_lattices()) {
    auto t = TensorLattice::of({omega, l});
    CHECK(t.size() == l->size());
    auto iso = unit_iso(t);
    CHECK(is_iso_pair(iso));
    for (Elem a = 0; a < l->size(); ++a) {
      const Elem pure[2] = {1, a};
      CHECK(iso.forward(t.pure(pure)) == a);
    }
  }
}

TEST_CASE("symmetry and associativity isomorphisms") {
  auto lats = small_lattices();
  for (const auto& l : lats)
    for (const auto& m : lats) {
      if (l->size() * m->size() > 16) continue;
      auto lm = TensorLattice::of({l, m});
      auto ml = TensorLattice::of({m, l});
      CHECK(is_iso_pair(symmetry_iso(lm, ml)));
    }
  auto c3 = share(chain_lattice(3));
  auto omega2 = share(powerset_lattice(2));
  auto inner = TensorLattice::of({c3, omega2});
  auto outer = TensorLattice::of({inner.lattice(), c3});
  auto flat = TensorLattice::of({c3, omega2, c3});
  CHECK(outer.size() == flat.size());
  CHECK(is_iso_pair(associativity_iso(inner, outer, flat)));
}

TEST_CASE("universal property on 100 seeded random bimorphisms") {
  std::vector<LatticePtr> factors;
  for (const auto& l : small_lattices())
    if (l->size() <= 4) factors.push_back(l);
  const auto cods = small_lattices();
  std::mt19937_64 rng(2026);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int trial = 0; trial < 100; ++trial) {
    auto l = factors[pick(factors.size())];
    auto m = factors[pick(factors.size())];
    auto c = cods[pick(cods.size())];
    // b(l, m) = join of c_i over terms with l not below a_i and m not below b_i.
    struct Term {
      Elem a, b, c;
    };
    std::vector<Term> terms(1 + pick(3));
    for (auto& t : terms)
      t = {static_cast<Elem>(pick(l->size())), static_cast<Elem>(pick(m->size())), static_cast<Elem>(pick(c->size()))};
    Multimorphism b = [&](std::span<const Elem> t) {
      Elem v = c->bottom();
      for (const auto& term : terms)
        if (!l->leq(t[0], term.a) && !m->leq(t[1], term.b)) v = c->join(v, term.c);
      return v;
    };
    auto t = TensorLattice::of({l, m});
    REQUIRE_FALSE(check_multimorphism(*t.space(), *c, b));
    auto induced = induced_from_multimorphism(t, c, b);
    CHECK_FALSE(is_sup_map(induced));
    for (Elem x = 0; x < l->size(); ++x)
      for (Elem y = 0; y < m->size(); ++y) {
        const Elem tuple[2] = {x, y};
        CHECK(induced(t.pure(tuple)) == b(tuple));
      }
    // Uniqueness: the value on a bi-ideal is the join of b over all members.
    for (Elem k = 0; k < t.size(); ++k) {
      Elem v = c->bottom();
      for (Elem x = 0; x < l->size(); ++x)
        for (Elem y = 0; y < m->size(); ++y) {
          const Elem tuple[2] = {x, y};
          if (t.element(k).contains(tuple)) v = c->join(v, b(tuple));
        }
      CHECK(induced(k) == v);
    }
  }
}

TEST_CASE("non-bimorphisms are rejected") {
  auto c3 = share(chain_lattice(3));
  auto t = TensorLattice::of({c3, c3});
  Multimorphism constant_top = [&](std::span<const Elem>) { return c3->top(); };
  auto v = check_multimorphism(*t.space(), *c3, constant_top);
  REQUIRE(v);
  CHECK_FALSE(v->other);
  try {
    induced_from_multimorphism(t, c3, constant_top);
    FAIL("expected NotBimorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBimorphism);
  }
  // Meet does not distribute over joins on M3.
  auto m3 = m3_zero().carrier();
  auto tm = TensorLattice::of({m3, m3});
  Multimorphism meet = [&](std::span<const Elem> x) { return m3->meet(x[0], x[1]); };
  CHECK(check_multimorphism(*tm.space(), *m3, meet).has_value());
}

TEST_CASE("enumeration limit") {
  auto p4 = share(powerset_lattice(2));
  try {
    TensorLattice::of({p4, p4, p4}, 3);
    FAIL("expected EnumerationBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EnumerationBoundExceeded);
  }
}

TEST_CASE("direct sums") {
  auto a = share(chain_lattice(3));
  auto b = share(powerset_lattice(2));
  auto s = direct_sum(a, b);
  CHECK(s.lattice->size() == 12);
  CHECK(compose(s.proj1, s.inj1) == identity_map(a));
  CHECK(compose(s.proj2, s.inj2) == identity_map(b));
  auto h = copair(s, identity_map(a), constant_map(b, a, a->bottom()));
  CHECK(compose(h, s.inj1) == identity_map(a));
  CHECK_FALSE(is_sup_map(h));
}

TEST_CASE("maximal members generate the element") {
  auto c3 = share(chain_lattice(3));
  auto p4 = share(powerset_lattice(2));
  auto t = TensorLattice::of({c3, p4});
  for (const auto& x : t.elements()) {
    auto gens = x.maximal_members();
    CHECK(BiIdeal::generated(t.space(), gens) == x);
  }
}
