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

#include "openq/examples.hpp"

#include <algorithm>
#include <bit>

#include "openq/openness.hpp"

namespace openq {

namespace {

void require_valid(const FiniteInvQuantale& q) {
  if (auto v = validate_quantale(q))
    throw Error(ErrorKind::InternalInvariantViolation, q.name() + " fails " + std::string(to_string(v->axiom)));
}

template <class Map>
void require_hom(const Map& p) {
  if (auto v = validate_hom(p.inverse_image, *p.target, *p.source))
    throw Error(ErrorKind::InternalInvariantViolation, p.name + ": inverse image is not a homomorphism");
}

std::string set_name(std::uint64_t mask, std::size_t points) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < points; ++i)
    if (mask >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::vector<std::uint64_t> sorted_opens(const FiniteSpace& s) {
  auto opens = s.opens;
  std::sort(opens.begin(), opens.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return opens;
}

}  // namespace

FiniteInvQuantale groupoid_powerset_quantale(const FiniteGroupoid& g, std::string name) {
  validate_groupoid(g);
  const std::size_t k = g.size();
  auto lattice = share(powerset_lattice(k, g.names));
  std::vector<Elem> inv_mask(lattice->size());
  for (Elem a = 0; a < lattice->size(); ++a)
    for (std::size_t i = 0; i < k; ++i)
      if (a >> i & 1u) inv_mask[a] |= Elem{1} << g.inverse[i];
  std::vector<Elem> atom_prod(k * k, 0);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (auto c = g.mul(i, j)) atom_prod[i * k + j] = Elem{1} << *c;
  Elem unit = 0;
  g.identities().for_each([&](std::size_t i) { unit |= Elem{1} << i; });
  auto q = FiniteInvQuantale::tabulate(
      lattice,
      [&](Elem a, Elem b) {
        Elem out = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (a >> i & 1u)
            for (std::size_t j = 0; j < k; ++j)
              if (b >> j & 1u) out |= atom_prod[i * k + j];
        return out;
      },
      [&](Elem a) { return inv_mask[a]; }, unit, name.empty() ? "P(" + g.name + ")" : std::move(name));
  require_valid(q);
  return q;
}

FiniteInvQuantale rel_quantale(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Usage, "Rel(0) is not supported");
  if (n > 3) throw Error(ErrorKind::TooLarge, "Rel(n) tables are only built for n <= 3", {n});
  return groupoid_powerset_quantale(pair_groupoid(n), "Rel(" + std::to_string(n) + ")");
}

FiniteInvQuantale group_powerset_quantale(const FiniteGroupoid& g) {
  if (g.identities().count() != 1) throw Error(ErrorKind::InvalidGroupTable, "groupoid has more than one identity");
  return groupoid_powerset_quantale(g);
}

MaxAlgebraPtr matrix_max_quantale(std::size_t n, SubspaceSampler sampler) {
  auto a = groupoid_algebra(pair_groupoid(n));
  a.name = "M" + std::to_string(n) + "(Q)";
  return std::make_shared<const MaxAlgebraQuantale>(std::move(a), sampler);
}

MaxAlgebraPtr group_algebra_max_quantale(const FiniteGroupoid& g, SubspaceSampler sampler) {
  return std::make_shared<const MaxAlgebraQuantale>(groupoid_algebra(g), sampler);
}

SupportMap support_map(MaxAlgebraPtr max, QuantalePtr powerset) {
  const std::size_t d = max->dimension();
  if (powerset->size() != (std::size_t{1} << d))
    throw Error(ErrorKind::Usage, "powerset quantale does not match the algebra basis");
  SupportMap p;
  p.source = max;
  p.target = powerset;
  p.inverse_image = [max, d](const Elem& u) {
    BitSet coords(d);
    for (std::size_t i = 0; i < d; ++i)
      if (u >> i & 1u) coords.set(i);
    return max->coordinate(coords);
  };
  p.direct_image = [d](const RationalSubspace& v) {
    Elem mask = 0;
    v.support().for_each([&](std::size_t i) { mask |= Elem{1} << i; });
    (void)d;
    return mask;
  };
  p.name = "supp: " + max->name() + " -> " + powerset->name();
  return p;
}

SupportMap matrix_support_map(std::size_t n, SubspaceSampler sampler) {
  auto p = support_map(matrix_max_quantale(n, sampler), share(rel_quantale(n)));
  require_hom(p);
  return p;
}

SupportMap group_algebra_support_map(const FiniteGroupoid& g, SubspaceSampler sampler) {
  auto p = support_map(group_algebra_max_quantale(g, sampler), share(group_powerset_quantale(g)));
  require_hom(p);
  return p;
}

FiniteSupportMap finite_support_map(const SupportMap& p, std::vector<RationalSubspace> extra, std::size_t limit) {
  for (Elem u = 0; u < p.target->size(); ++u) extra.push_back(p.inverse_image(u));
  FiniteSupportMap out;
  out.sub = generate_subquantale(*p.source, std::move(extra), limit);
  std::vector<Elem> table;
  for (Elem u = 0; u < p.target->size(); ++u) table.push_back(out.sub.index_of(p.inverse_image(u)));
  out.map = make_finite_map(out.sub.quantale, p.target, std::move(table), p.name + " (finite part)");
  require_valid(*out.sub.quantale);
  require_hom(out.map);
  return out;
}

void validate_space(const FiniteSpace& s) {
  if (s.points > 63) throw Error(ErrorKind::TooLarge, "finite spaces are limited to 63 points");
  const std::uint64_t whole = (std::uint64_t{1} << s.points) - 1;
  auto has = [&](std::uint64_t u) { return std::find(s.opens.begin(), s.opens.end(), u) != s.opens.end(); };
  if (!has(0) || !has(whole)) throw Error(ErrorKind::InvalidTopology, "opens must include the empty set and the space");
  for (std::size_t i = 0; i < s.opens.size(); ++i) {
    if (s.opens[i] & ~whole) throw Error(ErrorKind::InvalidTopology, "open set mentions a missing point", {i});
    for (std::size_t j = 0; j < s.opens.size(); ++j) {
      if (j != i && s.opens[i] == s.opens[j]) throw Error(ErrorKind::InvalidTopology, "repeated open set", {i, j});
      if (!has(s.opens[i] | s.opens[j]) || !has(s.opens[i] & s.opens[j]))
        throw Error(ErrorKind::InvalidTopology, "opens not closed under union and intersection", {i, j});
    }
  }
  if (!s.open_names.empty() && s.open_names.size() != s.opens.size())
    throw Error(ErrorKind::InvalidTopology, "open_names must label every open");
}

FiniteSpace discrete_space(std::size_t n) {
  if (n > 10) throw Error(ErrorKind::TooLarge, "discrete spaces are limited to 10 points here");
  FiniteSpace s{"Discrete" + std::to_string(n), n, {}, {}};
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) s.opens.push_back(m);
  return s;
}

FiniteSpace point_space() { return FiniteSpace{"Point", 1, {0, 1}, {"0", "1"}}; }

FiniteSpace sierpinski_space() { return FiniteSpace{"Sierpinski", 2, {0, 1, 3}, {"0", "m", "1"}}; }

FiniteInvQuantale opens_quantale(const FiniteSpace& s) {
  validate_space(s);
  const auto opens = sorted_opens(s);
  std::vector<std::string> names;
  for (auto u : opens) {
    if (s.open_names.empty()) {
      names.push_back(set_name(u, s.points));
    } else {
      auto pos = std::find(s.opens.begin(), s.opens.end(), u) - s.opens.begin();
      names.push_back(s.open_names[static_cast<std::size_t>(pos)]);
    }
  }
  auto lattice = share(FiniteSupLattice::from_predicate(
      opens.size(), [&](Elem a, Elem b) { return (opens[a] & ~opens[b]) == 0; }, std::move(names)));
  return locale_quantale(lattice, "O(" + s.name + ")");
}

FiniteMap finite_locale_map(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f,
                            LocaleMapOptions opt) {
  auto ox = share(opens_quantale(x));
  auto oy = share(opens_quantale(y));
  if (f.size() != x.points) throw Error(ErrorKind::Usage, "point map has the wrong length");
  for (auto v : f)
    if (v >= y.points) throw Error(ErrorKind::Usage, "point map leaves the codomain");
  const auto xo = sorted_opens(x), yo = sorted_opens(y);
  auto index_in = [](const std::vector<std::uint64_t>& opens, std::uint64_t u) -> std::optional<Elem> {
    auto it = std::find(opens.begin(), opens.end(), u);
    if (it == opens.end()) return std::nullopt;
    return static_cast<Elem>(it - opens.begin());
  };
  std::vector<Elem> table;
  for (Elem v = 0; v < yo.size(); ++v) {
    std::uint64_t pre = 0;
    for (std::size_t i = 0; i < x.points; ++i)
      if (yo[v] >> f[i] & 1u) pre |= std::uint64_t{1} << i;
    auto idx = index_in(xo, pre);
    if (!idx) throw Error(ErrorKind::NotContinuous, "preimage of an open is not open", {v});
    table.push_back(*idx);
  }
  auto p = make_finite_map(ox, oy, std::move(table), "O(f): " + ox->name() + " -> " + oy->name());
  if (opt.direct_image) {
    std::vector<Elem> image;
    for (Elem u = 0; u < xo.size(); ++u) {
      std::uint64_t img = 0;
      for (std::size_t i = 0; i < x.points; ++i)
        if (xo[u] >> i & 1u) img |= std::uint64_t{1} << f[i];
      auto idx = index_in(yo, img);
      if (!idx) throw Error(ErrorKind::NotOpen, "image of an open is not open", {u});
      image.push_back(*idx);
    }
    p.direct_image = [image](const Elem& u) { return image[u]; };
  }
  return p;
}

FiniteMap discrete_to_point(std::size_t n) {
  return finite_locale_map(discrete_space(n), point_space(), std::vector<std::size_t>(n, 0), {true});
}

FiniteMap sierpinski_open_point() { return finite_locale_map(point_space(), sierpinski_space(), {0}, {true}); }

FiniteMap sierpinski_closed_point() { return finite_locale_map(point_space(), sierpinski_space(), {1}); }

FiniteMap discrete_inclusion(std::size_t n, std::size_t m) {
  if (n > m) throw Error(ErrorKind::Usage, "inclusion needs n <= m");
  std::vector<std::size_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = i;
  return finite_locale_map(discrete_space(n), discrete_space(m), f, {true});
}

FiniteMap omega_support_map(QuantalePtr q) {
  const Elem bot = q->bottom();
  for (Elem a = 0; a < q->size(); ++a)
    if (a != bot && q->mult(a, a) == bot)
      throw Error(ErrorKind::HypothesisFailure, "nonzero element with zero square", {a, a});
  for (Elem a = 0; a < q->size(); ++a)
    for (Elem b = 0; b < q->size(); ++b)
      if (a != bot && b != bot && q->mult(a, b) == bot)
        throw Error(ErrorKind::HypothesisFailure, "zero divisors", {a, b});
  if (q->mult(q->top(), q->top()) != q->top())
    throw Error(ErrorKind::HypothesisFailure, "top is not idempotent", {q->top(), q->top()});

  auto omega = share(omega_quantale());
  auto p = make_finite_map(q, omega, {bot, q->top()}, "supp: " + q->name() + " -> Omega");
  p.direct_image = [bot](const Elem& a) { return a == bot ? Elem{0} : Elem{1}; };
  require_hom(p);
  if (!check_semiopen(p).verdict.semiopen || !check_fr1(p).holds() || !check_fr1_right(p).holds() ||
      !check_fr2(p).holds() || !is_surjective(p).surjective)
    throw Error(ErrorKind::HypothesisFailure, "support map is not an FR1/FR2 semiopen surjection");
  return p;
}

FiniteMap omega_first_coordinate() {
  auto omega = share(omega_quantale());
  auto omega2 = share(product_quantale(*omega, *omega));
  return make_finite_map(omega, omega2, {0, 0, 1, 1}, "first: Omega -> Omega x Omega");
}

FiniteInvQuantale chain_frame(std::size_t n) {
  auto q = locale_quantale(share(chain_lattice(n)), "Chain" + std::to_string(n));
  require_valid(q);
  return q;
}

FiniteInvQuantale nilpotent_chain3() {
  auto l = share(FiniteSupLattice::from_predicate(3, [](Elem a, Elem b) { return a <= b; }, {"0", "a", "1"}));
  auto q = FiniteInvQuantale::tabulate(
      l,
      [](Elem a, Elem b) -> Elem {
        if (a == 0 || b == 0) return 0;
        if (a == 1 && b == 1) return 0;
        return std::min(a, b);
      },
      [](Elem a) { return a; }, Elem{2}, "Chain3-nil");
  require_valid(q);
  return q;
}

FiniteInvQuantale m3_zero() {
  std::vector<std::pair<Elem, Elem>> leq;
  for (Elem a = 1; a <= 3; ++a) {
    leq.emplace_back(0, a);
    leq.emplace_back(a, 4);
  }
  leq.emplace_back(0, 4);
  auto l = share(FiniteSupLattice::from_relation(5, leq, {"0", "a", "b", "c", "1"}));
  auto q = FiniteInvQuantale::tabulate(
      l, [](Elem, Elem) { return Elem{0}; }, [](Elem a) { return a; }, std::nullopt, "M3-zero");
  require_valid(q);
  return q;
}

std::vector<NamedQuantale> finite_quantale_corpus() {
  std::vector<NamedQuantale> c;
  auto add = [&](FiniteInvQuantale q) {
    auto name = q.name();
    c.push_back({std::move(name), share(std::move(q))});
  };
  add(trivial_quantale());
  add(omega_quantale());
  add(chain_frame(3));
  add(chain_frame(4));
  add(chain_frame(5));
  add(nilpotent_chain3());
  add(m3_zero());
  auto omega = omega_quantale();
  add(product_quantale(omega, omega));
  add(rel_quantale(1));
  add(group_powerset_quantale(cyclic_group(2)));
  add(opens_quantale(sierpinski_space()));
  add(group_powerset_quantale(cyclic_group(3)));
  add(rel_quantale(2));
  add(group_powerset_quantale(symmetric_group3()));
  return c;
}

std::vector<NamedMap> finite_map_corpus() {
  std::vector<NamedMap> c;
  auto add = [&](std::string name, FiniteMap m) { c.push_back({std::move(name), std::move(m)}); };
  auto pz2 = share(group_powerset_quantale(cyclic_group(2)));
  add("identity P(Z2)", identity_quantale_map(pz2));
  add("identity Rel(2)", identity_quantale_map(share(rel_quantale(2))));
  add("support P(Z2)", omega_support_map(pz2));
  add("support P(Z3)", omega_support_map(share(group_powerset_quantale(cyclic_group(3)))));
  add("support P(S3)", omega_support_map(share(group_powerset_quantale(symmetric_group3()))));
  add("support Omega", omega_support_map(share(omega_quantale())));
  add("discrete 2 to point", discrete_to_point(2));
  add("discrete 3 to point", discrete_to_point(3));
  add("discrete 2 into 3", discrete_inclusion(2, 3));
  add("Sierpinski open point", sierpinski_open_point());
  add("Sierpinski closed point", sierpinski_closed_point());
  add("Omega first coordinate", omega_first_coordinate());
  add("Z2 group algebra finite part", z2_algebra_finite_part().map);
  add("Z2 permutation representation", z2_permutation_representation());
  add("Omega diagonal", omega_diagonal_map());
  return c;
}

FiniteSupportMap z2_algebra_finite_part() {
  return finite_support_map(group_algebra_support_map(cyclic_group(2)),
                            {RationalSubspace::span(2, std::vector<RationalVector>{{1, 1}}),
                             RationalSubspace::span(2, std::vector<RationalVector>{{1, -1}})});
}

// Rel(2) indices are bitmasks over (1,1), (1,2), (2,1), (2,2).
FiniteMap z2_permutation_representation() {
  return make_finite_map(share(rel_quantale(2)), share(group_powerset_quantale(cyclic_group(2))), {0, 9, 6, 15},
                         "permutation representation");
}

FiniteMap omega_diagonal_map() {
  return make_finite_map(share(rel_quantale(2)), share(omega_quantale()), {0, 9}, "Omega -> Rel(2)");
}

}  // namespace openq
