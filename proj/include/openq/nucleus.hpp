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

#ifndef OPENQ_NUCLEUS_HPP_
#define OPENQ_NUCLEUS_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "openq/quantale.hpp"

namespace openq {

using ElemPair = std::pair<Elem, Elem>;

// A relation on Q stored as an n*n bit matrix, bit r*n+s for the pair (r, s).
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t n) : n_(n), bits_(n * n) {}

  std::size_t carrier_size() const { return n_; }
  bool contains(Elem r, Elem s) const { return bits_.test(r * n_ + s); }
  bool insert(Elem r, Elem s) {
    if (contains(r, s)) return false;
    bits_.set(r * n_ + s);
    return true;
  }
  std::size_t size() const { return bits_.count(); }
  // Lexicographic order.
  std::vector<ElemPair> pairs() const;

  friend bool operator==(const PairSet& a, const PairSet& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::size_t n_ = 0;
  BitSet bits_;
};

enum class SaturationMode {
  // Involution and left multiplication only.
  LeftOnly,
  // Also right multiplication; yields the same pair set since right products
  // are reachable through the involution.
  TwoSided,
};

// Least relation containing R closed under (r,s) -> (r*,s*) and (r,s) -> (ar,as)
// (and (ra,sa) in TwoSided mode). Worklist fixpoint.
PairSet saturate_relation(const FiniteInvQuantale& q, std::span<const ElemPair> relation,
                          SaturationMode mode = SaturationMode::TwoSided);

// Elements a with r <= a iff s <= a for every saturated pair.
BitSet saturated_elements(const FiniteInvQuantale& q, const PairSet& saturated);

struct Nucleus {
  QuantalePtr q;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
  BitSet closed_elements() const;
  friend bool operator==(const Nucleus& a, const Nucleus& b) { return a.values == b.values; }
};

enum class NucleusLaw { Inflationary, Monotone, Idempotent, Multiplicative, Involutive };

struct NucleusViolation {
  NucleusLaw law;
  Elem a = 0, b = 0;
};

// Closure laws, j(a)j(b) <= j(ab) and j(a*) = j(a)*.
std::optional<NucleusViolation> check_nucleus(const Nucleus& j);

// Meet of saturated elements above each a. Throws InternalInvariantViolation
// if the result is not an involutive quantic nucleus identifying R.
Nucleus nucleus_from_relation(QuantalePtr q, std::span<const ElemPair> relation);

// Nucleus whose closed elements are exactly closed. Throws NotMeetClosed.
Nucleus nucleus_from_closed_set(QuantalePtr q, const BitSet& closed);

struct Quotient {
  QuantalePtr quantale;        // closed elements, densely relabelled
  std::vector<Elem> back_map;  // quotient index -> element of Q
  std::vector<Elem> project;   // element of Q -> quotient index, i.e. j
  // Regular mono Q_j -> Q in the dual category; its inverse image is j.
  FiniteMap inclusion;
};

Quotient quotient(const Nucleus& j);

// Nucleus recovered from the quotient hom m* = j: Q -> Q_j as m_* . m*.
Nucleus nucleus_from_quotient(const Quotient& quotient);

struct FactorFailure {
  Elem r = 0, s = 0;  // saturated pair with h(r) != h(s)
};

// For a sup-map h: Q -> L, the map hbar on the quotient with hbar . j = h,
// which exists iff h identifies every saturated pair.
Result<SupMap, FactorFailure> factor_sup_map(const SupMap& h, const Quotient& quotient, const PairSet& saturated);

struct Equalizer {
  std::vector<ElemPair> relation;  // (f*(x), g*(x)) for x in X
  Nucleus nucleus;
  Quotient quotient;
};

// Equalizer of f, g: Q -> X as the quantic subspace presented by
// { (f*(x), g*(x)) }.
Equalizer equalizer(const FiniteMap& f, const FiniteMap& g);

}  // namespace openq

#endif  // OPENQ_NUCLEUS_HPP_
