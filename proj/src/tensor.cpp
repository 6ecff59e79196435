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

#include "openq/tensor.hpp"

#include <deque>

namespace openq {

TensorSpace::TensorSpace(std::vector<LatticePtr> factors, std::size_t grid_cap) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::Usage, "tensor product needs at least one factor");
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = grid_;
    grid_ *= factors_[i]->size();
    if (grid_ > grid_cap) throw Error(ErrorKind::TooLarge, "tensor grid exceeds the cap", {grid_cap});
  }
  axes_ = BitSet(grid_);
  line_bases_.resize(arity());
  for (std::size_t idx = 0; idx < grid_; ++idx)
    for (std::size_t i = 0; i < arity(); ++i) {
      const Elem c = coordinate(idx, i);
      if (c == factors_[i]->bottom()) axes_.set(idx);
      if (c == 0) line_bases_[i].push_back(static_cast<std::uint32_t>(idx));
    }
}

std::size_t TensorSpace::encode(std::span<const Elem> t) const {
  if (t.size() != arity()) throw Error(ErrorKind::Usage, "tuple arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (t[i] >= factors_[i]->size()) throw Error(ErrorKind::Usage, "tuple coordinate out of range", {i});
    idx += t[i] * strides_[i];
  }
  return idx;
}

Tuple TensorSpace::decode(std::size_t index) const {
  Tuple t(arity());
  for (std::size_t i = 0; i < arity(); ++i) t[i] = coordinate(index, i);
  return t;
}

// Sets every coordinate line to the down-set of the join of its members
// until nothing changes. Each step is forced, so the fixpoint is least.
BitSet TensorSpace::closure(BitSet s) const {
  s |= axes_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < arity(); ++i) {
      const auto& l = *factors_[i];
      const std::size_t stride = strides_[i];
      for (std::uint32_t base : line_bases_[i]) {
        Elem j = l.bottom();
        for (Elem c = 0; c < l.size(); ++c)
          if (s.test(base + c * stride)) j = l.join(j, c);
        l.down_set(j).for_each([&](std::size_t c) {
          const std::size_t idx = base + c * stride;
          if (!s.test(idx)) {
            s.set(idx);
            changed = true;
          }
        });
      }
    }
  }
  return s;
}

bool TensorSpace::is_closed(const BitSet& s) const { return closure(s) == s; }

BiIdeal BiIdeal::bottom(TensorSpacePtr space) {
  BitSet b = space->axes();
  return BiIdeal(std::move(space), std::move(b));
}

BiIdeal BiIdeal::top(TensorSpacePtr space) {
  BitSet b = BitSet::full(space->grid_size());
  return BiIdeal(std::move(space), std::move(b));
}

BiIdeal BiIdeal::pure(TensorSpacePtr space, std::span<const Elem> t) {
  BitSet seed(space->grid_size());
  seed.set(space->encode(t));
  return closure_of(std::move(space), std::move(seed));
}

BiIdeal BiIdeal::closure_of(TensorSpacePtr space, BitSet seed) {
  BitSet closed = space->closure(std::move(seed));
  return BiIdeal(std::move(space), std::move(closed));
}

BiIdeal BiIdeal::generated(TensorSpacePtr space, std::span<const Tuple> tuples) {
  BitSet seed(space->grid_size());
  for (const auto& t : tuples) seed.set(space->encode(t));
  return closure_of(std::move(space), std::move(seed));
}

BiIdeal BiIdeal::join(const BiIdeal& o) const { return closure_of(space_, members_ | o.members_); }

BiIdeal BiIdeal::meet(const BiIdeal& o) const { return BiIdeal(space_, members_ & o.members_); }

std::vector<Tuple> BiIdeal::maximal_members() const {
  std::vector<Tuple> out;
  const auto& sp = *space_;
  members_.for_each([&](std::size_t idx) {
    for (std::size_t i = 0; i < sp.arity(); ++i)
      for (Elem c : sp.factor(i).upper_covers(sp.coordinate(idx, i)))
        if (members_.test(sp.replace(idx, i, c))) return;
    out.push_back(sp.decode(idx));
  });
  return out;
}

std::string BiIdeal::str() const {
  std::string s;
  for (const auto& t : maximal_members()) {
    bool has_bottom = false;
    for (std::size_t i = 0; i < t.size(); ++i) has_bottom |= t[i] == space_->factor(i).bottom();
    if (has_bottom) continue;
    if (!s.empty()) s += " v ";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += "(x)";
      s += space_->factor(i).name(t[i]);
    }
  }
  return s.empty() ? "0" : s;
}

TensorLattice TensorLattice::enumerate(TensorSpacePtr space, std::size_t limit) {
  TensorLattice t;
  t.space_ = space;
  std::vector<BiIdeal> gens;
  for (std::size_t idx = 0; idx < space->grid_size(); ++idx) {
    if (space->axes().test(idx)) continue;
    gens.push_back(BiIdeal::pure(space, space->decode(idx)));
  }
  auto add = [&](BiIdeal b) {
    if (t.index_.contains(b.members())) return;
    if (t.elements_.size() >= limit)
      throw Error(ErrorKind::EnumerationBoundExceeded, "tensor product has more elements than the bound", {limit});
    t.index_.emplace(b.members(), static_cast<Elem>(t.elements_.size()));
    t.elements_.push_back(std::move(b));
  };
  add(BiIdeal::bottom(space));
  for (std::size_t k = 0; k < t.elements_.size(); ++k)
    for (const auto& g : gens) {
      if (g.leq(t.elements_[k])) continue;
      add(t.elements_[k].join(g));
    }
  return t;
}

TensorLattice TensorLattice::of(std::vector<LatticePtr> factors, std::size_t limit) {
  return enumerate(std::make_shared<const TensorSpace>(std::move(factors)), limit);
}

Elem TensorLattice::index_of(const BiIdeal& b) const {
  auto it = index_.find(b.members());
  if (it == index_.end()) throw Error(ErrorKind::InternalInvariantViolation, "bi-ideal missing from enumeration");
  return it->second;
}

const LatticePtr& TensorLattice::lattice() const {
  if (!lattice_) {
    std::vector<BitSet> above(size(), BitSet(size()));
    std::vector<std::string> names;
    for (Elem i = 0; i < size(); ++i) {
      names.push_back(elements_[i].str());
      for (Elem j = 0; j < size(); ++j)
        if (elements_[i].leq(elements_[j])) above[i].set(j);
    }
    lattice_ = share(FiniteSupLattice::from_up_sets(std::move(above), std::move(names)));
  }
  return lattice_;
}

std::optional<MultimorphismViolation> check_multimorphism(const TensorSpace& space, const FiniteSupLattice& cod,
                                                          const Multimorphism& b) {
  std::vector<Elem> value(space.grid_size());
  for (std::size_t idx = 0; idx < space.grid_size(); ++idx) {
    value[idx] = b(space.decode(idx));
    if (value[idx] >= cod.size()) throw Error(ErrorKind::Usage, "multimorphism value outside codomain");
  }
  for (std::size_t idx = 0; idx < space.grid_size(); ++idx)
    for (std::size_t i = 0; i < space.arity(); ++i) {
      const auto& l = space.factor(i);
      const Elem ti = space.coordinate(idx, i);
      if (ti == l.bottom() && value[idx] != cod.bottom())
        return MultimorphismViolation{i, space.decode(idx), std::nullopt};
      for (Elem c = 0; c < l.size(); ++c) {
        const Elem lhs = value[space.replace(idx, i, l.join(ti, c))];
        if (lhs != cod.join(value[idx], value[space.replace(idx, i, c)]))
          return MultimorphismViolation{i, space.decode(idx), c};
      }
    }
  return std::nullopt;
}

Elem induced_value(const BiIdeal& x, const FiniteSupLattice& cod, const Multimorphism& b) {
  Elem v = cod.bottom();
  for (const auto& t : x.maximal_members()) v = cod.join(v, b(t));
  return v;
}

SupMap induced_from_multimorphism(const TensorLattice& t, LatticePtr cod, const Multimorphism& b) {
  if (auto v = check_multimorphism(*t.space(), *cod, b)) {
    std::vector<std::size_t> w{v->axis};
    w.insert(w.end(), v->tuple.begin(), v->tuple.end());
    if (v->other) w.push_back(*v->other);
    throw Error(ErrorKind::NotBimorphism, "map does not preserve joins in each coordinate", std::move(w));
  }
  SupMap h{t.lattice(), cod, std::vector<Elem>(t.size())};
  for (Elem i = 0; i < t.size(); ++i) h.values[i] = induced_value(t.element(i), *cod, b);
  if (is_sup_map(h)) throw Error(ErrorKind::InternalInvariantViolation, "induced map is not a sup-map");
  return h;
}

TensorIso unit_iso(const TensorLattice& omega_l) {
  const auto& sp = *omega_l.space();
  if (sp.arity() != 2 || sp.factor(0).size() != 2)
    throw Error(ErrorKind::Usage, "unit isomorphism needs Omega as the first factor");
  LatticePtr l = sp.factors()[1];
  const Elem one = sp.factor(0).top();
  TensorIso iso;
  iso.forward = induced_from_multimorphism(omega_l, l, [&](std::span<const Elem> t) {
    return t[0] == one ? t[1] : l->bottom();
  });
  iso.backward = SupMap{l, omega_l.lattice(), std::vector<Elem>(l->size())};
  for (Elem a = 0; a < l->size(); ++a) {
    const Elem t[2] = {one, a};
    iso.backward.values[a] = omega_l.pure(t);
  }
  return iso;
}

TensorIso symmetry_iso(const TensorLattice& lm, const TensorLattice& ml) {
  auto swap_into = [](const TensorLattice& target) {
    return [&target](std::span<const Elem> t) {
      const Elem s[2] = {t[1], t[0]};
      return target.pure(s);
    };
  };
  return {induced_from_multimorphism(lm, ml.lattice(), swap_into(ml)),
          induced_from_multimorphism(ml, lm.lattice(), swap_into(lm))};
}

TensorIso associativity_iso(const TensorLattice& inner, const TensorLattice& outer, const TensorLattice& flat) {
  TensorIso iso;
  iso.forward = induced_from_multimorphism(outer, flat.lattice(), [&](std::span<const Elem> t) {
    const auto& fl = *flat.lattice();
    Elem v = fl.bottom();
    for (const auto& lm : inner.element(t[0]).maximal_members()) {
      const Elem s[3] = {lm[0], lm[1], t[1]};
      v = fl.join(v, flat.pure(s));
    }
    return v;
  });
  iso.backward = induced_from_multimorphism(flat, outer.lattice(), [&](std::span<const Elem> t) {
    const Elem lm[2] = {t[0], t[1]};
    const Elem s[2] = {inner.pure(lm), t[2]};
    return outer.pure(s);
  });
  return iso;
}

DirectSum direct_sum(LatticePtr a, LatticePtr b) {
  DirectSum s;
  s.lattice = share(product_lattice(*a, *b));
  const Elem nb = static_cast<Elem>(b->size());
  s.inj1 = SupMap{a, s.lattice, {}};
  s.inj2 = SupMap{b, s.lattice, {}};
  s.proj1 = SupMap{s.lattice, a, {}};
  s.proj2 = SupMap{s.lattice, b, {}};
  for (Elem i = 0; i < a->size(); ++i) s.inj1.values.push_back(i * nb + b->bottom());
  for (Elem j = 0; j < nb; ++j) s.inj2.values.push_back(a->bottom() * nb + j);
  for (Elem k = 0; k < s.lattice->size(); ++k) {
    s.proj1.values.push_back(k / nb);
    s.proj2.values.push_back(k % nb);
  }
  return s;
}

SupMap copair(const DirectSum& s, const SupMap& f, const SupMap& g) {
  SupMap h{s.lattice, f.cod, std::vector<Elem>(s.lattice->size())};
  for (Elem k = 0; k < s.lattice->size(); ++k) h.values[k] = f.cod->join(f(s.proj1(k)), g(s.proj2(k)));
  return h;
}

}  // namespace openq
