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

#include "openq/suplattice.hpp"

#include <string>

namespace openq {
namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorKind::Parse, "element name count does not match lattice size");
  return names;
}

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Element of s maximizing |sets[u]|; the only possible extremum of s.
Elem extremal_candidate(const BitSet& s, const std::vector<BitSet>& sets) {
  Elem best = 0;
  std::size_t best_count = 0;
  bool found = false;
  s.for_each([&](std::size_t u) {
    std::size_t c = sets[u].count();
    if (!found || c > best_count) {
      best = static_cast<Elem>(u);
      best_count = c;
      found = true;
    }
  });
  return best;
}

}  // namespace

FiniteSupLattice FiniteSupLattice::from_relation(std::size_t n, std::span<const std::pair<Elem, Elem>> leq,
                                                 std::vector<std::string> names) {
  std::vector<BitSet> above(n, BitSet(n));
  for (auto [i, j] : leq) {
    if (i >= n || j >= n) throw Error(ErrorKind::Parse, "order pair " + pair_str(i, j) + " out of range");
    above[i].set(j);
  }
  return from_up_sets(std::move(above), std::move(names));
}

FiniteSupLattice FiniteSupLattice::from_up_sets(std::vector<BitSet> above, std::vector<std::string> names) {
  const std::size_t n = above.size();
  if (n == 0) throw Error(ErrorKind::NoBottom, "empty carrier has no bottom element");
  for (std::size_t i = 0; i < n; ++i) {
    if (above[i].size() != n) throw Error(ErrorKind::Parse, "order matrix is not square");
    above[i].set(i);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> bad;
    above[i].for_each([&](std::size_t j) {
      if (!bad && j != i && above[j].test(i)) bad = j;
    });
    if (bad) throw Error(ErrorKind::NotAPartialOrder, "antisymmetry fails at " + pair_str(i, *bad), {i, *bad});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    above[i].for_each([&](std::size_t j) {
      if (bad || above[j].is_subset_of(above[i])) return;
      BitSet stray = above[j];
      stray.subtract(above[i]);
      bad = std::pair{j, stray.first()};
    });
    if (bad)
      throw Error(ErrorKind::NotAPartialOrder,
                  "transitivity fails at (" + std::to_string(i) + ", " + std::to_string(bad->first) + ", " +
                      std::to_string(bad->second) + ")",
                  {i, bad->first, bad->second});
  }

  FiniteSupLattice l;
  l.n_ = n;
  l.names_ = default_names(n, std::move(names));
  l.below_.assign(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) above[i].for_each([&](std::size_t j) { l.below_[j].set(i); });

  std::optional<Elem> bottom;
  for (std::size_t i = 0; i < n && !bottom; ++i)
    if (above[i].count() == n) bottom = static_cast<Elem>(i);
  if (!bottom) throw Error(ErrorKind::NoBottom, "no element lies below every other element");
  l.bottom_ = *bottom;

  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BitSet ub = above[i] & above[j];
      if (ub.none()) throw Error(ErrorKind::MissingJoin, "no upper bound for " + pair_str(i, j), {i, j});
      Elem u = extremal_candidate(ub, above);
      if (!ub.is_subset_of(above[u]))
        throw Error(ErrorKind::MissingJoin, "no least upper bound for " + pair_str(i, j), {i, j});
      l.join_[i * n + j] = l.join_[j * n + i] = u;

      BitSet lb = l.below_[i] & l.below_[j];
      Elem d = extremal_candidate(lb, l.below_);
      if (!lb.is_subset_of(l.below_[d]))
        throw Error(ErrorKind::InternalInvariantViolation, "meet missing in a lattice with all joins", {i, j});
      l.meet_[i * n + j] = l.meet_[j * n + i] = d;
    }
  }
  Elem top = l.bottom_;
  for (std::size_t i = 0; i < n; ++i) top = l.join_[top * n + i];
  l.top_ = top;

  l.covers_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    above[a].for_each([&](std::size_t c) {
      if (c == a) return;
      BitSet interval = above[a] & l.below_[c];
      if (interval.count() == 2) l.covers_[a].push_back(static_cast<Elem>(c));
    });
  }
  l.above_ = std::move(above);
  return l;
}

Elem FiniteSupLattice::join(std::span<const Elem> s) const {
  Elem acc = bottom_;
  for (Elem e : s) acc = join(acc, e);
  return acc;
}

Elem FiniteSupLattice::meet(std::span<const Elem> s) const {
  Elem acc = top_;
  for (Elem e : s) acc = meet(acc, e);
  return acc;
}

Elem FiniteSupLattice::join(const BitSet& s) const {
  Elem acc = bottom_;
  s.for_each([&](std::size_t e) { acc = join(acc, static_cast<Elem>(e)); });
  return acc;
}

Elem FiniteSupLattice::meet(const BitSet& s) const {
  Elem acc = top_;
  s.for_each([&](std::size_t e) { acc = meet(acc, static_cast<Elem>(e)); });
  return acc;
}

std::vector<std::pair<Elem, Elem>> FiniteSupLattice::strict_order_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t i = 0; i < n_; ++i)
    above_[i].for_each([&](std::size_t j) {
      if (j != i) out.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
    });
  return out;
}

LatticePtr share(FiniteSupLattice lattice) { return std::make_shared<const FiniteSupLattice>(std::move(lattice)); }

SupMap identity_map(LatticePtr l) {
  SupMap f{l, l, std::vector<Elem>(l->size())};
  for (std::size_t i = 0; i < l->size(); ++i) f.values[i] = static_cast<Elem>(i);
  return f;
}

SupMap constant_map(LatticePtr dom, LatticePtr cod, Elem value) {
  const std::size_t n = dom->size();
  return SupMap{std::move(dom), std::move(cod), std::vector<Elem>(n, value)};
}

SupMap compose(const SupMap& g, const SupMap& f) {
  SupMap h{f.dom, g.cod, std::vector<Elem>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) h.values[i] = g(f(static_cast<Elem>(i)));
  return h;
}

std::optional<SupMapViolation> is_sup_map(const SupMap& f) {
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  if (f.values.size() != d.size()) throw Error(ErrorKind::Parse, "map table size does not match its domain");
  for (Elem v : f.values)
    if (v >= c.size()) throw Error(ErrorKind::Parse, "map value outside its codomain");
  if (f(d.bottom()) != c.bottom()) return SupMapViolation{true, 0, 0};
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (f(d.join(a, b)) != c.join(f(a), f(b))) return SupMapViolation{false, a, b};
  return std::nullopt;
}

SupMap right_adjoint(const SupMap& f) {
  if (auto v = is_sup_map(f))
    throw Error(ErrorKind::NotSupPreserving, "right adjoint requested for a map that is not join-preserving",
                {v->a, v->b});
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  SupMap r{f.cod, f.dom, std::vector<Elem>(c.size())};
  for (Elem m = 0; m < c.size(); ++m) {
    Elem acc = d.bottom();
    for (Elem l = 0; l < d.size(); ++l)
      if (c.leq(f(l), m)) acc = d.join(acc, l);
    r.values[m] = acc;
  }
  return r;
}

Result<SupMap, AdjunctionFailure> left_adjoint(const SupMap& f) {
  if (auto v = is_sup_map(f))
    throw Error(ErrorKind::NotSupPreserving, "left adjoint requested for a map that is not join-preserving",
                {v->a, v->b});
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  SupMap g{f.cod, f.dom, std::vector<Elem>(c.size())};
  for (Elem m = 0; m < c.size(); ++m) {
    Elem acc = d.top();
    for (Elem l = 0; l < d.size(); ++l)
      if (c.leq(m, f(l))) acc = d.meet(acc, l);
    g.values[m] = acc;
  }
  for (Elem m = 0; m < c.size(); ++m)
    for (Elem l = 0; l < d.size(); ++l)
      if (d.leq(g(m), l) != c.leq(m, f(l))) return AdjunctionFailure{m, l};
  return g;
}

bool preserves_meets(const SupMap& f) {
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  if (f(d.top()) != c.top()) return false;
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (f(d.meet(a, b)) != c.meet(f(a), f(b))) return false;
  return true;
}

BitSet ClosureOperator::fixed_points() const {
  BitSet out(values.size());
  for (std::size_t a = 0; a < values.size(); ++a)
    if (values[a] == a) out.set(a);
  return out;
}

ClosureOperator closure_from_closed_family(LatticePtr lattice, const BitSet& closed) {
  const auto& l = *lattice;
  if (closed.size() != l.size()) throw Error(ErrorKind::Parse, "closed family size does not match lattice");
  if (!closed.test(l.top())) throw Error(ErrorKind::NotMeetClosed, "top (the empty meet) is not closed", {l.top()});
  for (Elem a = 0; a < l.size(); ++a) {
    if (!closed.test(a)) continue;
    for (Elem b = a + 1; b < l.size(); ++b)
      if (closed.test(b) && !closed.test(l.meet(a, b)))
        throw Error(ErrorKind::NotMeetClosed, "meet of closed " + pair_str(a, b) + " is not closed", {a, b});
  }
  ClosureOperator j{lattice, std::vector<Elem>(l.size())};
  for (Elem a = 0; a < l.size(); ++a) j.values[a] = l.meet(closed & l.up_set(a));
  return j;
}

std::optional<ClosureViolation> check_closure(const ClosureOperator& j) {
  const auto& l = *j.lattice;
  for (Elem a = 0; a < l.size(); ++a)
    if (!l.leq(a, j(a))) return ClosureViolation{ClosureLaw::Inflationary, a, a};
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.leq(a, b) && !l.leq(j(a), j(b))) return ClosureViolation{ClosureLaw::Monotone, a, b};
  for (Elem a = 0; a < l.size(); ++a)
    if (j(j(a)) != j(a)) return ClosureViolation{ClosureLaw::Idempotent, a, a};
  return std::nullopt;
}

FiniteSupLattice chain_lattice(std::size_t n) {
  return FiniteSupLattice::from_predicate(n, [](Elem a, Elem b) { return a <= b; });
}

FiniteSupLattice powerset_lattice(std::size_t k, const std::vector<std::string>& atom_names) {
  if (k > 10) throw Error(ErrorKind::TooLarge, "powerset of more than 10 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (!first) s += ",";
      s += atom_names.empty() ? std::to_string(i) : atom_names.at(i);
      first = false;
    }
    names.push_back(s + "}");
  }
  return FiniteSupLattice::from_predicate(
      n, [](Elem a, Elem b) { return (a & ~b) == 0; }, std::move(names));
}

FiniteSupLattice product_lattice(const FiniteSupLattice& a, const FiniteSupLattice& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> names;
  for (Elem i = 0; i < a.size(); ++i)
    for (Elem j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  return FiniteSupLattice::from_predicate(
      a.size() * nb,
      [&](Elem x, Elem y) {
        return a.leq(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) &&
               b.leq(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      },
      std::move(names));
}

}  // namespace openq
