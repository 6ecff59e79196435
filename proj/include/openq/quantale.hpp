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

#ifndef OPENQ_QUANTALE_HPP_
#define OPENQ_QUANTALE_HPP_

#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "openq/suplattice.hpp"

namespace openq {

// What every involutive quantale carrier offers: canonical element handles
// (operator== is element equality), order test, binary join, multiplication,
// involution, bottom and an optional unit.
template <class Q>
concept InvQuantale = requires(const Q& q, const typename Q::element_type& a, const typename Q::element_type& b,
                               const nlohmann::json& j) {
  typename Q::element_type;
  { a == b } -> std::convertible_to<bool>;
  { q.leq(a, b) } -> std::convertible_to<bool>;
  { q.join(a, b) } -> std::same_as<typename Q::element_type>;
  { q.mult(a, b) } -> std::same_as<typename Q::element_type>;
  { q.inv(a) } -> std::same_as<typename Q::element_type>;
  { q.bottom() } -> std::same_as<typename Q::element_type>;
  { q.unit() } -> std::same_as<std::optional<typename Q::element_type>>;
  { q.describe(a) } -> std::convertible_to<std::string>;
  { q.element_json(a) } -> std::same_as<nlohmann::json>;
  { q.parse_element(j) } -> std::same_as<typename Q::element_type>;
};

// Carriers that can be enumerated, elements being 0..size()-1.
template <class Q>
concept FiniteCarrier = InvQuantale<Q> && std::same_as<typename Q::element_type, Elem> && requires(const Q& q) {
  { q.size() } -> std::convertible_to<std::size_t>;
};

// Carriers with a seeded sampler. Finite carriers sample uniformly.
template <class Q>
concept SampledCarrier = InvQuantale<Q> && requires(const Q& q, std::mt19937_64& rng) {
  { q.sample(rng) } -> std::same_as<typename Q::element_type>;
};

struct CheckOptions {
  // Exhaustive checks run only when the evaluation count stays below this.
  std::size_t exhaustive_cap = 1'000'000;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

enum class CheckMode { Exhaustive, Sampled };

struct Coverage {
  CheckMode mode = CheckMode::Exhaustive;
  std::size_t evaluations = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Involutive quantale stored as full tables over a validated finite lattice.
// Tables are not checked here; validate_quantale does that.
class FiniteInvQuantale {
 public:
  using element_type = Elem;

  FiniteInvQuantale(LatticePtr carrier, std::vector<Elem> mult, std::vector<Elem> inv,
                    std::optional<Elem> declared_unit = std::nullopt, std::string name = {});

  template <class Mult, class Inv>
  static FiniteInvQuantale tabulate(LatticePtr carrier, Mult&& mult, Inv&& inv,
                                    std::optional<Elem> declared_unit = std::nullopt, std::string name = {}) {
    const std::size_t n = carrier->size();
    std::vector<Elem> m(n * n), iv(n);
    for (Elem a = 0; a < n; ++a) {
      iv[a] = inv(a);
      for (Elem b = 0; b < n; ++b) m[a * n + b] = mult(a, b);
    }
    return FiniteInvQuantale(std::move(carrier), std::move(m), std::move(iv), declared_unit, std::move(name));
  }

  const FiniteSupLattice& lattice() const { return *carrier_; }
  const LatticePtr& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_->size(); }
  const std::string& name() const { return name_; }

  bool leq(Elem a, Elem b) const { return carrier_->leq(a, b); }
  Elem join(Elem a, Elem b) const { return carrier_->join(a, b); }
  Elem meet(Elem a, Elem b) const { return carrier_->meet(a, b); }
  Elem bottom() const { return carrier_->bottom(); }
  Elem top() const { return carrier_->top(); }
  Elem mult(Elem a, Elem b) const { return mult_[a * size() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }

  // Declared unit if any, otherwise the one found by search.
  std::optional<Elem> unit() const { return declared_unit_ ? declared_unit_ : found_unit_; }
  std::optional<Elem> declared_unit() const { return declared_unit_; }

  std::string describe(Elem a) const { return carrier_->name(a); }
  nlohmann::json element_json(Elem a) const { return a; }
  Elem parse_element(const nlohmann::json& j) const;
  Elem sample(std::mt19937_64& rng) const {
    return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, size() - 1)(rng));
  }

  const std::vector<Elem>& mult_table() const { return mult_; }
  const std::vector<Elem>& inv_table() const { return inv_; }

  // Copy with one multiplication entry replaced (mutation testing).
  FiniteInvQuantale with_mult_entry(Elem a, Elem b, Elem value) const;

  friend bool operator==(const FiniteInvQuantale& x, const FiniteInvQuantale& y) {
    return *x.carrier_ == *y.carrier_ && x.mult_ == y.mult_ && x.inv_ == y.inv_ && x.unit() == y.unit();
  }

 private:
  LatticePtr carrier_;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
  std::optional<Elem> declared_unit_;
  std::optional<Elem> found_unit_;
  std::string name_;
};

using QuantalePtr = std::shared_ptr<const FiniteInvQuantale>;
QuantalePtr share(FiniteInvQuantale q);

enum class QuantaleAxiom {
  TableShape,
  BottomAbsorbsLeft,
  BottomAbsorbsRight,
  Associativity,
  DistributesLeft,   // a(b v c) = ab v ac
  DistributesRight,  // (b v c)a = ba v ca
  InvolutionSelfInverse,
  InvolutionMonotone,
  InvolutionAntiMultiplicative,
  InvolutionPreservesJoins,
  Unit,
};

std::string_view to_string(QuantaleAxiom axiom);

template <class E>
struct QuantaleViolation {
  QuantaleAxiom axiom;
  std::vector<E> witness;
};

// Exhaustive check of every quantale law on a finite table.
std::optional<QuantaleViolation<Elem>> validate_quantale(const FiniteInvQuantale& q);

// Same laws on seeded random tuples; for carriers that cannot be enumerated.
template <SampledCarrier Q>
std::optional<QuantaleViolation<typename Q::element_type>> validate_quantale_sampled(const Q& q,
                                                                                     const CheckOptions& opt) {
  using E = typename Q::element_type;
  std::mt19937_64 rng(opt.seed);
  const E bot = q.bottom();
  const std::optional<E> e = q.unit();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    E a = q.sample(rng), b = q.sample(rng), c = q.sample(rng);
    if (!(q.mult(a, bot) == bot)) return QuantaleViolation<E>{QuantaleAxiom::BottomAbsorbsRight, {a}};
    if (!(q.mult(bot, a) == bot)) return QuantaleViolation<E>{QuantaleAxiom::BottomAbsorbsLeft, {a}};
    if (!(q.mult(q.mult(a, b), c) == q.mult(a, q.mult(b, c))))
      return QuantaleViolation<E>{QuantaleAxiom::Associativity, {a, b, c}};
    if (!(q.mult(a, q.join(b, c)) == q.join(q.mult(a, b), q.mult(a, c))))
      return QuantaleViolation<E>{QuantaleAxiom::DistributesLeft, {a, b, c}};
    if (!(q.mult(q.join(b, c), a) == q.join(q.mult(b, a), q.mult(c, a))))
      return QuantaleViolation<E>{QuantaleAxiom::DistributesRight, {a, b, c}};
    if (!(q.inv(q.inv(a)) == a)) return QuantaleViolation<E>{QuantaleAxiom::InvolutionSelfInverse, {a}};
    if (q.leq(a, q.join(a, b)) && !q.leq(q.inv(a), q.inv(q.join(a, b))))
      return QuantaleViolation<E>{QuantaleAxiom::InvolutionMonotone, {a, b}};
    if (!(q.inv(q.mult(a, b)) == q.mult(q.inv(b), q.inv(a))))
      return QuantaleViolation<E>{QuantaleAxiom::InvolutionAntiMultiplicative, {a, b}};
    if (!(q.inv(q.join(a, b)) == q.join(q.inv(a), q.inv(b))))
      return QuantaleViolation<E>{QuantaleAxiom::InvolutionPreservesJoins, {a, b}};
    if (e && (!(q.mult(*e, a) == a) || !(q.mult(a, *e) == a)))
      return QuantaleViolation<E>{QuantaleAxiom::Unit, {a}};
  }
  return std::nullopt;
}

// A map p: Q -> X in the dual category, carried by its inverse image
// p*: X -> Q and, when semiopen, its direct image p_!: Q -> X.
template <InvQuantale Source, InvQuantale Target>
struct QuantaleMap {
  using source_type = Source;
  using target_type = Target;
  using source_element = typename Source::element_type;
  using target_element = typename Target::element_type;

  std::shared_ptr<const Source> source;
  std::shared_ptr<const Target> target;
  std::function<source_element(const target_element&)> inverse_image;
  std::function<target_element(const source_element&)> direct_image;
  std::string name;

  bool has_direct_image() const { return static_cast<bool>(direct_image); }
};

using FiniteMap = QuantaleMap<FiniteInvQuantale, FiniteInvQuantale>;

// inverse_table[x] = p*(x) for every x in the target.
FiniteMap make_finite_map(QuantalePtr source, QuantalePtr target, std::vector<Elem> inverse_table,
                          std::string name = {});
FiniteMap identity_quantale_map(QuantalePtr q);
std::vector<Elem> inverse_table(const FiniteMap& p);
std::vector<Elem> direct_table(const FiniteMap& p);
// p* as a sup-lattice map X -> Q.
SupMap inverse_image_sup_map(const FiniteMap& p);

// p after f, for f: R -> Q and p: Q -> X. Inverse images compose in reverse
// order; direct images compose when both are present.
template <InvQuantale R, InvQuantale Q, InvQuantale X>
QuantaleMap<R, X> compose_maps(const QuantaleMap<Q, X>& p, const QuantaleMap<R, Q>& f) {
  QuantaleMap<R, X> out;
  out.source = f.source;
  out.target = p.target;
  out.inverse_image = [pi = p.inverse_image, fi = f.inverse_image](const typename X::element_type& x) {
    return fi(pi(x));
  };
  if (p.has_direct_image() && f.has_direct_image())
    out.direct_image = [pd = p.direct_image, fd = f.direct_image](const typename R::element_type& r) {
      return pd(fd(r));
    };
  out.name = p.name + " . " + f.name;
  return out;
}

enum class HomLaw { Bottom, Joins, Multiplication, Involution, Unit };
std::string_view to_string(HomLaw law);

template <class E>
struct HomViolation {
  HomLaw law;
  std::vector<E> witness;  // elements of the domain of h
};

// Checks that h: X -> Q preserves bottom, binary joins, multiplication and
// involution: exhaustively when X is finite and within the cap, on seeded
// samples otherwise. Unit preservation is not required.
template <InvQuantale X, InvQuantale Q, class H>
std::optional<HomViolation<typename X::element_type>> validate_hom(const H& h, const X& x, const Q& q,
                                                                   const CheckOptions& opt = {},
                                                                   Coverage* coverage = nullptr) {
  using E = typename X::element_type;
  auto check_single = [&](const E& a) -> std::optional<HomViolation<E>> {
    if (!(h(x.inv(a)) == q.inv(h(a)))) return HomViolation<E>{HomLaw::Involution, {a}};
    return std::nullopt;
  };
  auto check_pair = [&](const E& a, const E& b) -> std::optional<HomViolation<E>> {
    if (!(h(x.join(a, b)) == q.join(h(a), h(b)))) return HomViolation<E>{HomLaw::Joins, {a, b}};
    if (!(h(x.mult(a, b)) == q.mult(h(a), h(b)))) return HomViolation<E>{HomLaw::Multiplication, {a, b}};
    return std::nullopt;
  };
  if (!(h(x.bottom()) == q.bottom())) return HomViolation<E>{HomLaw::Bottom, {x.bottom()}};
  if constexpr (FiniteCarrier<X>) {
    const std::size_t n = x.size();
    if (n * n <= opt.exhaustive_cap) {
      if (coverage) *coverage = Coverage{CheckMode::Exhaustive, n * n + n, 0, 0};
      for (Elem a = 0; a < n; ++a)
        if (auto v = check_single(a)) return v;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (auto v = check_pair(a, b)) return v;
      return std::nullopt;
    }
  }
  if constexpr (SampledCarrier<X>) {
    std::mt19937_64 rng(opt.seed);
    if (coverage) *coverage = Coverage{CheckMode::Sampled, 3 * opt.samples, opt.samples, opt.seed};
    for (std::size_t i = 0; i < opt.samples; ++i) {
      E a = x.sample(rng), b = x.sample(rng);
      if (auto v = check_single(a)) return v;
      if (auto v = check_pair(a, b)) return v;
    }
    return std::nullopt;
  } else {
    throw Error(ErrorKind::TooLarge, "carrier too large to check exhaustively and has no sampler");
  }
}

enum class SurjectivityMethod { DirectImageRoundTrip, InverseImageInjective };

struct SurjectivityVerdict {
  bool surjective = false;
  SurjectivityMethod method = SurjectivityMethod::DirectImageRoundTrip;
  // First x with p_!(p*(x)) != x, or the second of two x with equal p*(x).
  std::optional<std::size_t> witness;
};

// Surjection in the dual category. With a direct image: p_! p* = id on X;
// without one: p* injective. X must be finite.
template <InvQuantale Q, FiniteCarrier X>
SurjectivityVerdict is_surjective(const QuantaleMap<Q, X>& p) {
  const X& x = *p.target;
  if (p.has_direct_image()) {
    for (Elem e = 0; e < x.size(); ++e)
      if (p.direct_image(p.inverse_image(e)) != e)
        return {false, SurjectivityMethod::DirectImageRoundTrip, e};
    return {true, SurjectivityMethod::DirectImageRoundTrip, std::nullopt};
  }
  std::vector<typename Q::element_type> images;
  images.reserve(x.size());
  for (Elem e = 0; e < x.size(); ++e) images.push_back(p.inverse_image(e));
  for (Elem a = 0; a < x.size(); ++a)
    for (Elem b = a + 1; b < x.size(); ++b)
      if (images[a] == images[b]) return {false, SurjectivityMethod::InverseImageInjective, b};
  return {true, SurjectivityMethod::InverseImageInjective, std::nullopt};
}

// Small stock quantales.
FiniteInvQuantale omega_quantale();
FiniteInvQuantale trivial_quantale();
// Coordinatewise structure on the product lattice.
FiniteInvQuantale product_quantale(const FiniteInvQuantale& a, const FiniteInvQuantale& b);
// Meet as multiplication, identity involution; throws if the lattice is not a frame.
FiniteInvQuantale locale_quantale(LatticePtr lattice, std::string name = {});
bool is_locale(const FiniteInvQuantale& q);

}  // namespace openq

#endif  // OPENQ_QUANTALE_HPP_
