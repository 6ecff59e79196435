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

#include "openq/subspace.hpp"

using namespace openq;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RationalVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("canonical form is independent of the spanning set") {
  const std::vector<RationalVector> a = {vec({1, 1, 0}), vec({1, -1, 0})};
  const std::vector<RationalVector> b = {vec({2, 0, 0}), vec({0, 3, 0}), vec({1, 1, 0})};
  auto sa = RationalSubspace::span(3, a);
  auto sb = RationalSubspace::span(3, b);
  CHECK(sa == sb);
  CHECK(sa.dimension() == 2);
  CHECK(sa.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(sa.basis()[0] == vec({1, 0, 0}));
}

TEST_CASE("row mixing preserves the canonical basis") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<RationalVector> gens;
    for (int i = 0; i < 1 + trial % 3; ++i) gens.push_back(random_vector(rng, n, 3));
    auto s = RationalSubspace::span(n, gens);
    // Random invertible mixing: add multiples of other rows and rescale.
    auto mixed = gens;
    for (std::size_t i = 0; i < mixed.size(); ++i) {
      Rational scale(1 + trial % 4, 1 + trial % 3);
      for (auto& x : mixed[i]) x *= scale;
      if (i + 1 < mixed.size())
        for (std::size_t k = 0; k < n; ++k) mixed[i][k] += Rational(trial % 5 - 2) * mixed[i + 1][k];
    }
    auto t = RationalSubspace::span(n, mixed);
    INFO(s.str() << " vs " << t.str());
    CHECK(s == t);
    for (const auto& g : gens) CHECK(s.contains(g));
    for (std::size_t r = 0; r < s.basis().size(); ++r) {
      const auto p = s.pivots()[r];
      CHECK(s.basis()[r][p] == 1);
      for (std::size_t r2 = 0; r2 < s.basis().size(); ++r2)
        if (r2 != r) CHECK(s.basis()[r2][p] == 0);
    }
  }
}

TEST_CASE("sums, containment and supports") {
  auto e0 = RationalSubspace::span(3, std::vector<RationalVector>{vec({1, 0, 0})});
  auto d = RationalSubspace::span(3, std::vector<RationalVector>{vec({1, -1, 0})});
  auto sum = e0 + d;
  CHECK(sum.dimension() == 2);
  CHECK(sum.contains(e0));
  CHECK(sum.contains(vec({0, 5, 0})));
  CHECK_FALSE(sum.contains(vec({0, 0, 1})));
  CHECK(d.support().indices() == std::vector<std::size_t>{0, 1});
  CHECK(RationalSubspace::zero(3).dimension() == 0);
  CHECK(RationalSubspace::full(3).dimension() == 3);
  CHECK(RationalSubspace::full(3).contains(sum));
  BitSet coords(3);
  coords.set(2);
  CHECK(RationalSubspace::coordinate(3, coords).basis()[0] == vec({0, 0, 1}));
  CHECK((RationalSubspace::zero(3) + d) == d);
}

TEST_CASE("exact rational arithmetic") {
  std::vector<RationalVector> g = {{Rational(1, 3), Rational(2, 7)}, {Rational(2, 3), Rational(4, 7)}};
  auto s = RationalSubspace::span(2, g);
  CHECK(s.dimension() == 1);
  CHECK(s.basis()[0][1] == Rational(6, 7));
}
