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

#ifndef OPENQ_OPENNESS_HPP_
#define OPENQ_OPENNESS_HPP_

#include <optional>
#include <random>
#include <vector>

#include "openq/quantale.hpp"

namespace openq {

// Elements of Q and X over which a law is checked. A law with q_arity
// arguments from Q is exhaustive when both carriers are finite and
// |Q|^q_arity * |X| stays below the cap. Otherwise the Q arguments are
// drawn from a seeded sampler and X is enumerated when finite.
template <InvQuantale Q, InvQuantale X>
struct CheckPlan {
  std::vector<typename Q::element_type> qs;
  std::vector<typename X::element_type> xs;
  bool exhaustive = true;
  Coverage coverage;
};

template <InvQuantale Q, InvQuantale X>
CheckPlan<Q, X> plan_check(const Q& q, const X& x, int q_arity, const CheckOptions& opt) {
  CheckPlan<Q, X> plan;
  if constexpr (FiniteCarrier<Q> && FiniteCarrier<X>) {
    std::size_t evals = x.size();
    for (int i = 0; i < q_arity; ++i) evals *= q.size();
    if (evals <= opt.exhaustive_cap) {
      for (Elem a = 0; a < q.size(); ++a) plan.qs.push_back(a);
      for (Elem e = 0; e < x.size(); ++e) plan.xs.push_back(e);
      plan.coverage = Coverage{CheckMode::Exhaustive, evals, 0, 0};
      return plan;
    }
  }
  plan.exhaustive = false;
  std::mt19937_64 rng(opt.seed);
  if constexpr (SampledCarrier<Q>) {
    for (std::size_t i = 0; i < opt.samples * static_cast<std::size_t>(q_arity); ++i) plan.qs.push_back(q.sample(rng));
  } else {
    throw Error(ErrorKind::TooLarge, "source too large to check exhaustively and has no sampler");
  }
  if constexpr (FiniteCarrier<X>) {
    for (Elem e = 0; e < x.size(); ++e) plan.xs.push_back(e);
  } else {
    for (std::size_t i = 0; i < opt.samples; ++i) plan.xs.push_back(x.sample(rng));
  }
  plan.coverage = Coverage{CheckMode::Sampled, opt.samples * plan.xs.size(), opt.samples, opt.seed};
  return plan;
}

// p_!(a) <= x iff a <= p*(x), failing at (a, x).
template <class QE, class XE>
struct SemiopenWitness {
  QE a;
  XE x;
};

template <InvQuantale Q, InvQuantale X>
struct SemiopenVerdict {
  bool semiopen = false;
  // Only set when no direct image was supplied and none could be derived.
  bool missing_direct_image = false;
  std::optional<SemiopenWitness<typename Q::element_type, typename X::element_type>> witness;
  Coverage coverage;
};

template <InvQuantale Q, InvQuantale X>
struct SemiopenOutcome {
  SemiopenVerdict<Q, X> verdict;
  // p with its direct image filled in, when semiopen.
  std::optional<QuantaleMap<Q, X>> map;
};

// Decides whether p* has a left adjoint. For finite carriers without a
// supplied direct image the candidate is computed; a supplied direct image
// is verified against the adjunction.
template <InvQuantale Q, InvQuantale X>
SemiopenOutcome<Q, X> check_semiopen(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  SemiopenOutcome<Q, X> out;
  const Q& q = *p.source;
  const X& x = *p.target;
  QuantaleMap<Q, X> m = p;
  if (!p.has_direct_image()) {
    if constexpr (std::same_as<Q, FiniteInvQuantale> && std::same_as<X, FiniteInvQuantale>) {
      auto g = left_adjoint(inverse_image_sup_map(p));
      out.verdict.coverage = Coverage{CheckMode::Exhaustive, q.size() * x.size(), 0, 0};
      if (!g.ok()) {
        out.verdict.witness = SemiopenWitness<Elem, Elem>{g.error().m, g.error().l};
        return out;
      }
      m.direct_image = [vals = g.value().values](const Elem& a) { return vals[a]; };
      out.verdict.semiopen = true;
      out.map = std::move(m);
      return out;
    } else {
      out.verdict.missing_direct_image = true;
      return out;
    }
  }
  auto plan = plan_check(q, x, 1, opt);
  out.verdict.coverage = plan.coverage;
  std::vector<typename Q::element_type> pstar;
  for (const auto& e : plan.xs) pstar.push_back(p.inverse_image(e));
  for (const auto& a : plan.qs) {
    const auto pa = p.direct_image(a);
    for (std::size_t i = 0; i < plan.xs.size(); ++i)
      if (x.leq(pa, plan.xs[i]) != q.leq(a, pstar[i])) {
        out.verdict.witness = SemiopenWitness<typename Q::element_type, typename X::element_type>{a, plan.xs[i]};
        return out;
      }
  }
  out.verdict.semiopen = true;
  out.map = std::move(m);
  return out;
}

enum class FrobeniusLaw {
  Left,      // p_!(a p*(x)) = p_!(a) x
  Right,     // p_!(p*(x) a) = x p_!(a)
  TwoSided,  // p_!(a p*(x) b) = p_!(a) x p_!(b)
};
std::string_view to_string(FrobeniusLaw law);

template <class QE, class XE>
struct FrobeniusWitness {
  QE a;
  XE x;
  std::optional<QE> b;  // second argument of the two-sided law
};

template <InvQuantale Q, InvQuantale X>
struct FrobeniusVerdict {
  FrobeniusLaw law = FrobeniusLaw::Left;
  std::optional<FrobeniusWitness<typename Q::element_type, typename X::element_type>> witness;
  Coverage coverage;

  bool holds() const { return !witness.has_value(); }
};

// Both sides of a Frobenius law at a point; equal iff the law holds there.
template <InvQuantale Q, InvQuantale X>
std::pair<typename X::element_type, typename X::element_type> frobenius_sides(
    const QuantaleMap<Q, X>& p, FrobeniusLaw law, const typename Q::element_type& a,
    const typename X::element_type& x, const std::optional<typename Q::element_type>& b = std::nullopt) {
  if (!p.has_direct_image()) throw Error(ErrorKind::MissingDirectImage, "Frobenius laws need p_!");
  const Q& q = *p.source;
  const X& xq = *p.target;
  const auto px = p.inverse_image(x);
  switch (law) {
    case FrobeniusLaw::Left:
      return {p.direct_image(q.mult(a, px)), xq.mult(p.direct_image(a), x)};
    case FrobeniusLaw::Right:
      return {p.direct_image(q.mult(px, a)), xq.mult(x, p.direct_image(a))};
    case FrobeniusLaw::TwoSided:
      if (!b) throw Error(ErrorKind::Usage, "two-sided law needs a second element");
      return {p.direct_image(q.mult(q.mult(a, px), *b)), xq.mult(xq.mult(p.direct_image(a), x), p.direct_image(*b))};
  }
  throw Error(ErrorKind::Usage, "unknown law");
}

// Search in lexicographic order (a, then b, then x), so an exhaustive
// check reports the least witness. The witness is re-evaluated before it
// is returned.
template <InvQuantale Q, InvQuantale X>
FrobeniusVerdict<Q, X> check_frobenius(const QuantaleMap<Q, X>& p, FrobeniusLaw law, const CheckOptions& opt = {}) {
  if (!p.has_direct_image()) throw Error(ErrorKind::MissingDirectImage, "Frobenius laws need p_!");
  using QE = typename Q::element_type;
  using XE = typename X::element_type;
  const Q& q = *p.source;
  const X& x = *p.target;
  const int arity = law == FrobeniusLaw::TwoSided ? 2 : 1;
  auto plan = plan_check(q, x, arity, opt);
  FrobeniusVerdict<Q, X> out;
  out.law = law;
  out.coverage = plan.coverage;

  std::vector<QE> pstar;
  for (const auto& e : plan.xs) pstar.push_back(p.inverse_image(e));
  auto found = [&](const QE& a, const XE& e, std::optional<QE> b) {
    auto [l, r] = frobenius_sides(p, law, a, e, b);
    if (l == r) throw Error(ErrorKind::InternalInvariantViolation, "Frobenius witness does not replay");
    out.witness = FrobeniusWitness<QE, XE>{a, e, std::move(b)};
  };

  if (arity == 1) {
    for (const auto& a : plan.qs) {
      const XE pa = p.direct_image(a);
      for (std::size_t i = 0; i < plan.xs.size(); ++i) {
        const XE& e = plan.xs[i];
        bool ok = law == FrobeniusLaw::Left ? p.direct_image(q.mult(a, pstar[i])) == x.mult(pa, e)
                                            : p.direct_image(q.mult(pstar[i], a)) == x.mult(e, pa);
        if (!ok) {
          found(a, e, std::nullopt);
          return out;
        }
      }
    }
    return out;
  }

  auto check_pair = [&](const QE& a, const QE& b) {
    const XE pa = p.direct_image(a), pb = p.direct_image(b);
    for (std::size_t i = 0; i < plan.xs.size(); ++i) {
      const XE& e = plan.xs[i];
      if (!(p.direct_image(q.mult(q.mult(a, pstar[i]), b)) == x.mult(x.mult(pa, e), pb))) {
        found(a, e, b);
        return false;
      }
    }
    return true;
  };
  if (plan.exhaustive) {
    for (const auto& a : plan.qs)
      for (const auto& b : plan.qs)
        if (!check_pair(a, b)) return out;
  } else {
    for (std::size_t i = 0; i + 1 < plan.qs.size(); i += 2)
      if (!check_pair(plan.qs[i], plan.qs[i + 1])) return out;
  }
  return out;
}

template <InvQuantale Q, InvQuantale X>
FrobeniusVerdict<Q, X> check_fr1(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  return check_frobenius(p, FrobeniusLaw::Left, opt);
}
template <InvQuantale Q, InvQuantale X>
FrobeniusVerdict<Q, X> check_fr1_right(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  return check_frobenius(p, FrobeniusLaw::Right, opt);
}
template <InvQuantale Q, InvQuantale X>
FrobeniusVerdict<Q, X> check_fr2(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  return check_frobenius(p, FrobeniusLaw::TwoSided, opt);
}

// p_!(p*(e)) = e for the unit of X. Throws NotUnital when X has none.
template <InvQuantale Q, InvQuantale X>
bool unit_roundtrip(const QuantaleMap<Q, X>& p) {
  if (!p.has_direct_image()) throw Error(ErrorKind::MissingDirectImage, "unit round trip needs p_!");
  auto e = p.target->unit();
  if (!e) throw Error(ErrorKind::NotUnital, "target quantale has no unit");
  return p.direct_image(p.inverse_image(*e)) == *e;
}

// For a semiopen map satisfying FR1: surjective iff p_!(p*(e)) = e.
struct WosReport {
  bool applicable = false;  // semiopen and FR1 hold
  bool unit_roundtrip = false;
  bool surjective = false;
  bool holds = true;  // the biconditional, vacuous when not applicable
};

template <InvQuantale Q, FiniteCarrier X>
WosReport check_wos(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  WosReport r;
  auto s = check_semiopen(p, opt);
  if (!s.map) return r;
  r.applicable = check_fr1(*s.map, opt).holds();
  r.unit_roundtrip = unit_roundtrip(*s.map);
  r.surjective = is_surjective(*s.map).surjective;
  if (r.applicable) r.holds = r.unit_roundtrip == r.surjective;
  return r;
}

// FR2 together with p_!(p*(e)) = e gives FR1.
struct Fr2ImpliesFr1Report {
  bool applicable = false;
  bool fr1 = false;
  bool holds = true;
};

template <InvQuantale Q, InvQuantale X>
Fr2ImpliesFr1Report check_fr2_implies_fr1(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  Fr2ImpliesFr1Report r;
  auto s = check_semiopen(p, opt);
  if (!s.map) return r;
  r.applicable = check_fr2(*s.map, opt).holds() && unit_roundtrip(*s.map);
  r.fr1 = check_fr1(*s.map, opt).holds() && check_fr1_right(*s.map, opt).holds();
  if (r.applicable) r.holds = r.fr1;
  return r;
}

// For locales: FR2 with a = b gives p_!(a ^ p*(x)) = p_!(a) ^ x, the
// classical Frobenius condition.
struct LocaleMeetReport {
  bool applicable = false;  // both ends locales and FR2 holds
  std::optional<std::pair<Elem, Elem>> witness;
  bool holds = true;
};

LocaleMeetReport check_locale_meet_lemma(const FiniteMap& p);

// Semiopen, FR1 on both sides, FR2, surjectivity. The map is open in the
// dual category when it is a weakly open surjection satisfying FR2.
template <InvQuantale Q, FiniteCarrier X>
struct FrobeniusReport {
  std::string map_name;
  SemiopenVerdict<Q, X> semiopen;
  std::optional<FrobeniusVerdict<Q, X>> fr1, fr1_right, fr2;
  std::optional<SurjectivityVerdict> surjective;
  std::optional<bool> unit_roundtrip;
  bool open_by_sufficient_condition = false;
};

template <InvQuantale Q, FiniteCarrier X>
FrobeniusReport<Q, X> frobenius_report(const QuantaleMap<Q, X>& p, const CheckOptions& opt = {}) {
  FrobeniusReport<Q, X> r;
  r.map_name = p.name;
  auto s = check_semiopen(p, opt);
  r.semiopen = s.verdict;
  r.surjective = is_surjective(s.map ? *s.map : p);
  if (!s.map) return r;
  r.fr1 = check_fr1(*s.map, opt);
  r.fr1_right = check_fr1_right(*s.map, opt);
  r.fr2 = check_fr2(*s.map, opt);
  if (p.target->unit()) r.unit_roundtrip = unit_roundtrip(*s.map);
  r.open_by_sufficient_condition = r.fr1->holds() && r.fr2->holds() && r.surjective->surjective;
  return r;
}

}  // namespace openq

#endif  // OPENQ_OPENNESS_HPP_
