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

#include "openq/algebra.hpp"

#include <algorithm>
#include <array>

namespace openq {

BitSet FiniteGroupoid::identities() const {
  BitSet out(size());
  for (Elem a = 0; a < size(); ++a)
    if (auto u = mul(a, inverse[a])) out.set(*u);
  return out;
}

void validate_groupoid(const FiniteGroupoid& g) {
  const std::size_t n = g.size();
  if (g.product.size() != n * n || g.inverse.size() != n)
    throw Error(ErrorKind::InvalidGroupTable, "table shape does not match the element count");
  for (const auto& p : g.product)
    if (p && *p >= n) throw Error(ErrorKind::InvalidGroupTable, "product outside the carrier");
  for (Elem a = 0; a < n; ++a) {
    if (g.inverse[a] >= n || g.inverse[g.inverse[a]] != a)
      throw Error(ErrorKind::InvalidGroupTable, "inverse is not an involution", {a});
    const Elem ai = g.inverse[a];
    auto l = g.mul(a, ai), r = g.mul(ai, a);
    if (!l || !r || g.mul(*l, a) != a || g.mul(a, *r) != a)
      throw Error(ErrorKind::InvalidGroupTable, "inverse law fails", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        auto ab = g.mul(a, b), bc = g.mul(b, c);
        std::optional<Elem> left = ab ? g.mul(*ab, c) : std::nullopt;
        std::optional<Elem> right = bc ? g.mul(a, *bc) : std::nullopt;
        bool ok = left == right && (!left || (ab && bc)) && (!(ab && bc) || left);
        if (!ok) throw Error(ErrorKind::InvalidGroupTable, "composition is not associative", {a, b, c});
      }
}

FiniteGroupoid group_from_table(std::string name, std::vector<std::string> names, const std::vector<Elem>& table) {
  const std::size_t n = names.size();
  if (n == 0 || table.size() != n * n) throw Error(ErrorKind::InvalidGroupTable, "table shape does not match");
  FiniteGroupoid g;
  g.name = std::move(name);
  g.names = std::move(names);
  g.product.assign(table.begin(), table.end());
  std::optional<Elem> e;
  for (Elem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n; ++x) ok &= table[c * n + x] == x && table[x * n + c] == x;
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorKind::InvalidGroupTable, "no identity element");
  g.inverse.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (table[a * n + b] == *e && table[b * n + a] == *e) {
        g.inverse[a] = b;
        found = true;
      }
    if (!found) throw Error(ErrorKind::InvalidGroupTable, "element without inverse", {a});
  }
  validate_groupoid(g);
  return g;
}

FiniteGroupoid cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroupTable, "cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  return group_from_table("Z" + std::to_string(n), std::move(names), table);
}

namespace {

using Perm = std::array<int, 3>;

std::string cycle_name(const Perm& p) {
  std::string s;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroupoid symmetric_group3() {
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  std::vector<Elem> table(36);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a * 6 + b] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_from_table("S3", std::move(names), table);
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidGroupTable, "pair groupoid on no objects");
  FiniteGroupoid g;
  g.name = "Pair" + std::to_string(n);
  const std::size_t m = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.inverse.push_back(static_cast<Elem>(j * n + i));
    }
  g.product.assign(m * m, std::nullopt);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a % n == b / n) g.product[a * m + b] = static_cast<Elem>((a / n) * n + b % n);
  validate_groupoid(g);
  return g;
}

RationalVector MonomialAlgebra::multiply(const RationalVector& u, const RationalVector& v) const {
  const std::size_t d = dimension();
  RationalVector w(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] == 0) continue;
      if (auto k = product[i * d + j]) w[*k] += u[i] * v[j];
    }
  }
  return w;
}

RationalVector MonomialAlgebra::involute(const RationalVector& u) const {
  RationalVector w(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) w[star[i]] = u[i];
  return w;
}

MonomialAlgebra groupoid_algebra(const FiniteGroupoid& g) {
  validate_groupoid(g);
  MonomialAlgebra a;
  a.name = "Q[" + g.name + "]";
  a.basis_names = g.names;
  a.product = g.product;
  a.star = g.inverse;
  RationalVector unit(g.size());
  g.identities().for_each([&](std::size_t i) { unit[i] = 1; });
  a.unit = std::move(unit);
  return a;
}

MaxAlgebraQuantale::MaxAlgebraQuantale(MonomialAlgebra algebra, SubspaceSampler sampler)
    : algebra_(std::move(algebra)), sampler_(sampler), name_("Max " + algebra_.name) {
  if (algebra_.unit) {
    const RationalVector u[1] = {*algebra_.unit};
    unit_ = RationalSubspace::span(dimension(), u);
  }
}

RationalSubspace MaxAlgebraQuantale::mult(const RationalSubspace& a, const RationalSubspace& b) const {
  std::vector<RationalVector> prods;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) prods.push_back(algebra_.multiply(u, v));
  return RationalSubspace::span(dimension(), prods);
}

RationalSubspace MaxAlgebraQuantale::inv(const RationalSubspace& a) const {
  std::vector<RationalVector> rows;
  for (const auto& u : a.basis()) rows.push_back(algebra_.involute(u));
  return RationalSubspace::span(dimension(), rows);
}

std::string MaxAlgebraQuantale::describe(const RationalSubspace& a) const {
  if (a.dimension() == 0) return "0";
  std::string s = "span{";
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    if (r) s += ", ";
    bool first = true;
    for (std::size_t k = 0; k < dimension(); ++k) {
      const Rational& c = a.basis()[r][k];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (c < 0) s += "-";
      else if (!first) s += "+";
      if (mag != 1) s += mag.get_str() + "*";
      s += algebra_.basis_names[k];
      first = false;
    }
  }
  return s + "}";
}

nlohmann::json MaxAlgebraQuantale::element_json(const RationalSubspace& a) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.basis()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalSubspace MaxAlgebraQuantale::parse_element(const nlohmann::json& j) const {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "subspace must be an array of rows");
  std::vector<RationalVector> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dimension())
      throw Error(ErrorKind::Parse, "row length differs from the algebra dimension");
    RationalVector v;
    for (const auto& c : row) {
      if (c.is_number_integer()) {
        v.emplace_back(c.get<long>());
      } else if (c.is_string()) {
        Rational q;
        if (q.set_str(c.get<std::string>(), 10) != 0 || q.get_den() == 0)
          throw Error(ErrorKind::Parse, "bad rational " + c.dump());
        q.canonicalize();
        v.push_back(q);
      } else {
        throw Error(ErrorKind::Parse, "coefficients must be integers or rational strings");
      }
    }
    rows.push_back(std::move(v));
  }
  return RationalSubspace::span(dimension(), rows);
}

RationalSubspace MaxAlgebraQuantale::sample(std::mt19937_64& rng) const {
  const std::size_t dmax = std::min(sampler_.max_dimension, dimension());
  std::uniform_int_distribution<std::size_t> dim(0, dmax);
  std::uniform_int_distribution<int> coef(-sampler_.coefficient_bound, sampler_.coefficient_bound);
  std::vector<RationalVector> rows(dim(rng), RationalVector(dimension()));
  for (auto& row : rows)
    for (auto& c : row) c = coef(rng);
  return RationalSubspace::span(dimension(), rows);
}

Elem FiniteSubquantale::index_of(const RationalSubspace& s) const {
  for (Elem i = 0; i < elements.size(); ++i)
    if (elements[i] == s) return i;
  throw Error(ErrorKind::InternalInvariantViolation, "subspace outside the generated sub-quantale");
}

FiniteSubquantale generate_subquantale(const MaxAlgebraQuantale& q, std::vector<RationalSubspace> generators,
                                       std::size_t limit) {
  std::vector<RationalSubspace> elems;
  auto add = [&](RationalSubspace s) {
    if (std::find(elems.begin(), elems.end(), s) != elems.end()) return false;
    if (elems.size() >= limit) throw Error(ErrorKind::TooLarge, "generated sub-quantale exceeds the limit", {limit});
    elems.push_back(std::move(s));
    return true;
  };
  add(q.bottom());
  for (auto& g : generators) add(std::move(g));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      changed |= add(q.inv(elems[i]));
      for (std::size_t j = 0; j < elems.size(); ++j) {
        changed |= add(elems[i] + elems[j]);
        changed |= add(q.mult(elems[i], elems[j]));
      }
    }
  }
  // Order by dimension, then canonical form, so the result does not depend
  // on the closure order.
  std::sort(elems.begin(), elems.end(), [](const RationalSubspace& a, const RationalSubspace& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.basis() > b.basis();
  });
  FiniteSubquantale out;
  out.elements = elems;
  std::vector<std::string> names;
  for (const auto& s : elems) names.push_back(q.describe(s));
  const auto& es = out.elements;
  auto lattice = share(FiniteSupLattice::from_predicate(
      es.size(), [&](Elem a, Elem b) { return es[b].contains(es[a]); }, std::move(names)));
  auto find = [&](const RationalSubspace& s) { return out.index_of(s); };
  std::optional<Elem> unit;
  if (q.unit()) {
    auto it = std::find(es.begin(), es.end(), *q.unit());
    if (it != es.end()) unit = static_cast<Elem>(it - es.begin());
  }
  out.quantale = share(FiniteInvQuantale::tabulate(
      lattice, [&](Elem a, Elem b) { return find(q.mult(es[a], es[b])); }, [&](Elem a) { return find(q.inv(es[a])); },
      unit, "Sub(" + q.name() + ")"));
  return out;
}

}  // namespace openq
