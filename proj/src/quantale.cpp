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

#include "openq/quantale.hpp"

namespace openq {

FiniteInvQuantale::FiniteInvQuantale(LatticePtr carrier, std::vector<Elem> mult, std::vector<Elem> inv,
                                     std::optional<Elem> declared_unit, std::string name)
    : carrier_(std::move(carrier)),
      mult_(std::move(mult)),
      inv_(std::move(inv)),
      declared_unit_(declared_unit),
      name_(std::move(name)) {
  const std::size_t n = carrier_->size();
  if (mult_.size() != n * n || inv_.size() != n)
    throw Error(ErrorKind::InvalidQuantale, "table sizes do not match the carrier");
  for (Elem v : mult_)
    if (v >= n) throw Error(ErrorKind::InvalidQuantale, "multiplication entry outside the carrier");
  for (Elem v : inv_)
    if (v >= n) throw Error(ErrorKind::InvalidQuantale, "involution entry outside the carrier");
  if (declared_unit_ && *declared_unit_ >= n) throw Error(ErrorKind::InvalidQuantale, "unit outside the carrier");
  if (!declared_unit_) {
    for (Elem e = 0; e < n && !found_unit_; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) ok = this->mult(e, a) == a && this->mult(a, e) == a;
      if (ok) found_unit_ = e;
    }
  }
}

Elem FiniteInvQuantale::parse_element(const nlohmann::json& j) const {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= size())
    throw Error(ErrorKind::Parse, "element index expected, got " + j.dump());
  return j.get<Elem>();
}

FiniteInvQuantale FiniteInvQuantale::with_mult_entry(Elem a, Elem b, Elem value) const {
  std::vector<Elem> m = mult_;
  m[a * size() + b] = value;
  return FiniteInvQuantale(carrier_, std::move(m), inv_, declared_unit_, name_ + "~mutated");
}

QuantalePtr share(FiniteInvQuantale q) { return std::make_shared<const FiniteInvQuantale>(std::move(q)); }

std::string_view to_string(QuantaleAxiom axiom) {
  switch (axiom) {
    case QuantaleAxiom::TableShape: return "table-shape";
    case QuantaleAxiom::BottomAbsorbsLeft: return "bottom-absorbs-left";
    case QuantaleAxiom::BottomAbsorbsRight: return "bottom-absorbs-right";
    case QuantaleAxiom::Associativity: return "associativity";
    case QuantaleAxiom::DistributesLeft: return "distributes-left";
    case QuantaleAxiom::DistributesRight: return "distributes-right";
    case QuantaleAxiom::InvolutionSelfInverse: return "involution-self-inverse";
    case QuantaleAxiom::InvolutionMonotone: return "involution-monotone";
    case QuantaleAxiom::InvolutionAntiMultiplicative: return "involution-anti-multiplicative";
    case QuantaleAxiom::InvolutionPreservesJoins: return "involution-preserves-joins";
    case QuantaleAxiom::Unit: return "unit";
  }
  return "unknown";
}

std::string_view to_string(HomLaw law) {
  switch (law) {
    case HomLaw::Bottom: return "bottom";
    case HomLaw::Joins: return "joins";
    case HomLaw::Multiplication: return "multiplication";
    case HomLaw::Involution: return "involution";
    case HomLaw::Unit: return "unit";
  }
  return "unknown";
}

std::optional<QuantaleViolation<Elem>> validate_quantale(const FiniteInvQuantale& q) {
  using V = QuantaleViolation<Elem>;
  const Elem n = static_cast<Elem>(q.size());
  const Elem bot = q.bottom();
  for (Elem a = 0; a < n; ++a) {
    if (q.mult(a, bot) != bot) return V{QuantaleAxiom::BottomAbsorbsRight, {a}};
    if (q.mult(bot, a) != bot) return V{QuantaleAxiom::BottomAbsorbsLeft, {a}};
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = q.mult(a, b);
      for (Elem c = 0; c < n; ++c)
        if (q.mult(ab, c) != q.mult(a, q.mult(b, c))) return V{QuantaleAxiom::Associativity, {a, b, c}};
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem bc = q.join(b, c);
        if (q.mult(a, bc) != q.join(q.mult(a, b), q.mult(a, c))) return V{QuantaleAxiom::DistributesLeft, {a, b, c}};
        if (q.mult(bc, a) != q.join(q.mult(b, a), q.mult(c, a)))
          return V{QuantaleAxiom::DistributesRight, {a, b, c}};
      }
  for (Elem a = 0; a < n; ++a)
    if (q.inv(q.inv(a)) != a) return V{QuantaleAxiom::InvolutionSelfInverse, {a}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (q.leq(a, b) && !q.leq(q.inv(a), q.inv(b))) return V{QuantaleAxiom::InvolutionMonotone, {a, b}};
      if (q.inv(q.mult(a, b)) != q.mult(q.inv(b), q.inv(a)))
        return V{QuantaleAxiom::InvolutionAntiMultiplicative, {a, b}};
      if (q.inv(q.join(a, b)) != q.join(q.inv(a), q.inv(b)))
        return V{QuantaleAxiom::InvolutionPreservesJoins, {a, b}};
    }
  if (auto e = q.declared_unit())
    for (Elem a = 0; a < n; ++a)
      if (q.mult(*e, a) != a || q.mult(a, *e) != a) return V{QuantaleAxiom::Unit, {*e, a}};
  return std::nullopt;
}

FiniteMap make_finite_map(QuantalePtr source, QuantalePtr target, std::vector<Elem> inverse_table, std::string name) {
  if (inverse_table.size() != target->size())
    throw Error(ErrorKind::InvalidHomomorphism, "inverse image table must cover every target element");
  for (Elem v : inverse_table)
    if (v >= source->size()) throw Error(ErrorKind::InvalidHomomorphism, "inverse image value outside the source");
  FiniteMap p;
  p.source = std::move(source);
  p.target = std::move(target);
  p.inverse_image = [t = std::move(inverse_table)](const Elem& x) { return t[x]; };
  p.name = std::move(name);
  return p;
}

FiniteMap identity_quantale_map(QuantalePtr q) {
  FiniteMap p;
  p.source = q;
  p.target = q;
  p.inverse_image = [](const Elem& x) { return x; };
  p.direct_image = [](const Elem& a) { return a; };
  p.name = "id";
  return p;
}

std::vector<Elem> inverse_table(const FiniteMap& p) {
  std::vector<Elem> t(p.target->size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = p.inverse_image(x);
  return t;
}

std::vector<Elem> direct_table(const FiniteMap& p) {
  if (!p.has_direct_image()) throw Error(ErrorKind::MissingDirectImage, "map has no direct image");
  std::vector<Elem> t(p.source->size());
  for (Elem a = 0; a < t.size(); ++a) t[a] = p.direct_image(a);
  return t;
}

SupMap inverse_image_sup_map(const FiniteMap& p) {
  return SupMap{p.target->carrier(), p.source->carrier(), inverse_table(p)};
}

FiniteInvQuantale omega_quantale() {
  auto l = share(FiniteSupLattice::from_predicate(2, [](Elem a, Elem b) { return a <= b; }, {"0", "1"}));
  return FiniteInvQuantale::tabulate(
      l, [](Elem a, Elem b) { return a & b; }, [](Elem a) { return a; }, Elem{1}, "Omega");
}

FiniteInvQuantale trivial_quantale() {
  auto l = share(FiniteSupLattice::from_predicate(1, [](Elem, Elem) { return true; }, {"0"}));
  return FiniteInvQuantale::tabulate(
      l, [](Elem, Elem) { return Elem{0}; }, [](Elem) { return Elem{0}; }, Elem{0}, "trivial");
}

FiniteInvQuantale product_quantale(const FiniteInvQuantale& a, const FiniteInvQuantale& b) {
  auto l = share(product_lattice(a.lattice(), b.lattice()));
  const Elem nb = static_cast<Elem>(b.size());
  std::optional<Elem> unit;
  if (a.unit() && b.unit()) unit = *a.unit() * nb + *b.unit();
  return FiniteInvQuantale::tabulate(
      l, [&](Elem x, Elem y) { return a.mult(x / nb, y / nb) * nb + b.mult(x % nb, y % nb); },
      [&](Elem x) { return a.inv(x / nb) * nb + b.inv(x % nb); }, unit, a.name() + "x" + b.name());
}

FiniteInvQuantale locale_quantale(LatticePtr lattice, std::string name) {
  const auto& l = *lattice;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      for (Elem c = 0; c < l.size(); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          throw Error(ErrorKind::NotALocale, "lattice is not distributive", {a, b, c});
  Elem top = l.top();
  return FiniteInvQuantale::tabulate(
      lattice, [&](Elem a, Elem b) { return l.meet(a, b); }, [](Elem a) { return a; }, top, std::move(name));
}

bool is_locale(const FiniteInvQuantale& q) {
  for (Elem a = 0; a < q.size(); ++a) {
    if (q.inv(a) != a) return false;
    for (Elem b = 0; b < q.size(); ++b)
      if (q.mult(a, b) != q.meet(a, b)) return false;
  }
  return true;
}

}  // namespace openq
