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

#include "openq/nucleus.hpp"

#include <deque>

namespace openq {

std::vector<ElemPair> PairSet::pairs() const {
  std::vector<ElemPair> out;
  bits_.for_each([&](std::size_t i) { out.emplace_back(static_cast<Elem>(i / n_), static_cast<Elem>(i % n_)); });
  return out;
}

PairSet saturate_relation(const FiniteInvQuantale& q, std::span<const ElemPair> relation, SaturationMode mode) {
  const Elem n = static_cast<Elem>(q.size());
  PairSet out(n);
  std::deque<ElemPair> work;
  auto push = [&](Elem r, Elem s) {
    if (out.insert(r, s)) work.emplace_back(r, s);
  };
  for (auto [r, s] : relation) {
    if (r >= n || s >= n) throw Error(ErrorKind::Parse, "relation pair outside the carrier");
    push(r, s);
  }
  while (!work.empty()) {
    auto [r, s] = work.front();
    work.pop_front();
    push(q.inv(r), q.inv(s));
    for (Elem a = 0; a < n; ++a) {
      push(q.mult(a, r), q.mult(a, s));
      if (mode == SaturationMode::TwoSided) push(q.mult(r, a), q.mult(s, a));
    }
  }
  return out;
}

BitSet saturated_elements(const FiniteInvQuantale& q, const PairSet& saturated) {
  const auto pairs = saturated.pairs();
  BitSet out(q.size());
  for (Elem a = 0; a < q.size(); ++a) {
    bool ok = true;
    for (auto [r, s] : pairs)
      if (q.leq(r, a) != q.leq(s, a)) {
        ok = false;
        break;
      }
    if (ok) out.set(a);
  }
  return out;
}

BitSet Nucleus::closed_elements() const {
  BitSet out(values.size());
  for (Elem a = 0; a < values.size(); ++a)
    if (values[a] == a) out.set(a);
  return out;
}

std::optional<NucleusViolation> check_nucleus(const Nucleus& j) {
  const auto& q = *j.q;
  if (auto v = check_closure(ClosureOperator{q.carrier(), j.values})) {
    NucleusLaw law = v->law == ClosureLaw::Inflationary ? NucleusLaw::Inflationary
                     : v->law == ClosureLaw::Monotone   ? NucleusLaw::Monotone
                                                        : NucleusLaw::Idempotent;
    return NucleusViolation{law, v->a, v->b};
  }
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (!q.leq(q.mult(j(a), j(b)), j(q.mult(a, b)))) return NucleusViolation{NucleusLaw::Multiplicative, a, b};
  for (Elem a = 0; a < q.size(); ++a)
    if (j(q.inv(a)) != q.inv(j(a))) return NucleusViolation{NucleusLaw::Involutive, a, a};
  return std::nullopt;
}

Nucleus nucleus_from_closed_set(QuantalePtr q, const BitSet& closed) {
  ClosureOperator c = closure_from_closed_family(q->carrier(), closed);
  return Nucleus{std::move(q), std::move(c.values)};
}

Nucleus nucleus_from_relation(QuantalePtr q, std::span<const ElemPair> relation) {
  const PairSet sat = saturate_relation(*q, relation);
  const BitSet closed = saturated_elements(*q, sat);
  Nucleus j;
  try {
    j = nucleus_from_closed_set(q, closed);
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalInvariantViolation, std::string("saturated elements not meet-closed: ") + e.what());
  }
  if (auto v = check_nucleus(j))
    throw Error(ErrorKind::InternalInvariantViolation, "relation nucleus breaks a nucleus law", {v->a, v->b});
  for (auto [r, s] : relation)
    if (j(r) != j(s)) throw Error(ErrorKind::InternalInvariantViolation, "relation nucleus separates a pair", {r, s});
  return j;
}

Quotient quotient(const Nucleus& j) {
  const auto& q = *j.q;
  Quotient out;
  out.project.assign(q.size(), 0);
  std::vector<Elem> index_of(q.size(), 0);
  std::vector<std::string> names;
  for (Elem a = 0; a < q.size(); ++a)
    if (j(a) == a) {
      index_of[a] = static_cast<Elem>(out.back_map.size());
      out.back_map.push_back(a);
      names.push_back(q.lattice().name(a));
    }
  for (Elem a = 0; a < q.size(); ++a) out.project[a] = index_of[j(a)];

  const auto& back = out.back_map;
  auto lattice = share(FiniteSupLattice::from_predicate(
      back.size(), [&](Elem a, Elem b) { return q.leq(back[a], back[b]); }, std::move(names)));
  std::optional<Elem> unit;
  if (q.unit()) unit = out.project[*q.unit()];
  out.quantale = share(FiniteInvQuantale::tabulate(
      lattice, [&](Elem a, Elem b) { return out.project[q.mult(back[a], back[b])]; },
      [&](Elem a) { return out.project[q.inv(back[a])]; }, unit, q.name() + "/j"));
  out.inclusion = make_finite_map(out.quantale, j.q, out.project, "inclusion");
  return out;
}

Nucleus nucleus_from_quotient(const Quotient& quotient) {
  const auto& q = *quotient.inclusion.target;
  SupMap m_star{q.carrier(), quotient.quantale->carrier(), quotient.project};
  SupMap m_lower = right_adjoint(m_star);
  return Nucleus{quotient.inclusion.target, compose(m_lower, m_star).values};
}

Result<SupMap, FactorFailure> factor_sup_map(const SupMap& h, const Quotient& quotient, const PairSet& saturated) {
  for (auto [r, s] : saturated.pairs())
    if (h(r) != h(s)) return FactorFailure{r, s};
  SupMap hbar{quotient.quantale->carrier(), h.cod, std::vector<Elem>(quotient.back_map.size())};
  for (Elem c = 0; c < hbar.values.size(); ++c) hbar.values[c] = h(quotient.back_map[c]);
  for (Elem a = 0; a < h.values.size(); ++a)
    if (hbar(quotient.project[a]) != h(a))
      throw Error(ErrorKind::InternalInvariantViolation, "factored map disagrees with h", {a});
  return hbar;
}

Equalizer equalizer(const FiniteMap& f, const FiniteMap& g) {
  if (!(*f.source == *g.source) || !(*f.target == *g.target))
    throw Error(ErrorKind::Usage, "equalizer needs two maps with the same source and target");
  Equalizer out;
  for (Elem x = 0; x < f.target->size(); ++x) out.relation.emplace_back(f.inverse_image(x), g.inverse_image(x));
  out.nucleus = nucleus_from_relation(f.source, out.relation);
  out.quotient = quotient(out.nucleus);
  for (Elem x = 0; x < f.target->size(); ++x)
    if (out.quotient.project[f.inverse_image(x)] != out.quotient.project[g.inverse_image(x)])
      throw Error(ErrorKind::InternalInvariantViolation, "maps disagree after the equalizer", {x});
  return out;
}

}  // namespace openq
