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

#ifndef OPENQ_TENSOR_HPP_
#define OPENQ_TENSOR_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "openq/suplattice.hpp"

namespace openq {

using Tuple = std::vector<Elem>;

// The grid L1 x ... x Ln of a tensor product, tuples encoded in mixed radix
// with the first coordinate most significant.
class TensorSpace {
 public:
  static constexpr std::size_t kDefaultGridCap = std::size_t{1} << 20;

  explicit TensorSpace(std::vector<LatticePtr> factors, std::size_t grid_cap = kDefaultGridCap);

  std::size_t arity() const { return factors_.size(); }
  const FiniteSupLattice& factor(std::size_t i) const { return *factors_[i]; }
  const std::vector<LatticePtr>& factors() const { return factors_; }
  std::size_t grid_size() const { return grid_; }

  std::size_t encode(std::span<const Elem> t) const;
  Tuple decode(std::size_t index) const;
  Elem coordinate(std::size_t index, std::size_t axis) const {
    return static_cast<Elem>((index / strides_[axis]) % factors_[axis]->size());
  }
  // index with coordinate axis replaced by c
  std::size_t replace(std::size_t index, std::size_t axis, Elem c) const {
    return index - coordinate(index, axis) * strides_[axis] + c * strides_[axis];
  }

  // Tuples with some bottom coordinate; every bi-ideal contains them.
  const BitSet& axes() const { return axes_; }
  // Least bi-ideal containing seed.
  BitSet closure(BitSet seed) const;
  bool is_closed(const BitSet& s) const;

 private:
  std::vector<LatticePtr> factors_;
  std::vector<std::size_t> strides_;
  std::size_t grid_ = 1;
  BitSet axes_;
  std::vector<std::vector<std::uint32_t>> line_bases_;  // per axis: indices with that coordinate 0
};

using TensorSpacePtr = std::shared_ptr<const TensorSpace>;

// Element of a tensor product of sup-lattices: a subset of the grid that is
// down-closed, contains the axes, and is closed under joins in each
// coordinate with the others fixed.
class BiIdeal {
 public:
  static BiIdeal bottom(TensorSpacePtr space);
  static BiIdeal top(TensorSpacePtr space);
  static BiIdeal pure(TensorSpacePtr space, std::span<const Elem> t);
  static BiIdeal closure_of(TensorSpacePtr space, BitSet seed);
  static BiIdeal generated(TensorSpacePtr space, std::span<const Tuple> tuples);

  const TensorSpace& space() const { return *space_; }
  const TensorSpacePtr& space_ptr() const { return space_; }
  const BitSet& members() const { return members_; }
  bool contains(std::span<const Elem> t) const { return members_.test(space_->encode(t)); }

  BiIdeal join(const BiIdeal& o) const;
  BiIdeal meet(const BiIdeal& o) const;
  bool leq(const BiIdeal& o) const { return members_.is_subset_of(o.members_); }
  // Members with no member strictly above, in index order. Their pure
  // tensors join to this element.
  std::vector<Tuple> maximal_members() const;
  std::string str() const;

  friend bool operator==(const BiIdeal& a, const BiIdeal& b) { return a.members_ == b.members_; }

 private:
  BiIdeal(TensorSpacePtr space, BitSet members) : space_(std::move(space)), members_(std::move(members)) {}
  TensorSpacePtr space_;
  BitSet members_;
};

// All elements of a tensor product, found as joins of pure tensors.
class TensorLattice {
 public:
  static constexpr std::size_t kDefaultLimit = 4096;

  // Throws EnumerationBoundExceeded once more than limit elements appear.
  static TensorLattice enumerate(TensorSpacePtr space, std::size_t limit = kDefaultLimit);
  static TensorLattice of(std::vector<LatticePtr> factors, std::size_t limit = kDefaultLimit);

  const TensorSpacePtr& space() const { return space_; }
  std::size_t size() const { return elements_.size(); }
  const BiIdeal& element(Elem i) const { return elements_[i]; }
  const std::vector<BiIdeal>& elements() const { return elements_; }
  Elem index_of(const BiIdeal& b) const;
  Elem pure(std::span<const Elem> t) const { return index_of(BiIdeal::pure(space_, t)); }
  // Inclusion order as a validated lattice, built on first use.
  const LatticePtr& lattice() const;

 private:
  TensorSpacePtr space_;
  std::vector<BiIdeal> elements_;
  std::unordered_map<BitSet, Elem, BitSetHash> index_;
  mutable LatticePtr lattice_;
};

// A map L1 x ... x Ln -> M preserving joins in each coordinate separately.
using Multimorphism = std::function<Elem(std::span<const Elem>)>;

struct MultimorphismViolation {
  std::size_t axis = 0;
  Tuple tuple;
  // Empty when b(tuple) should be bottom because tuple[axis] is bottom.
  std::optional<Elem> other;
};

std::optional<MultimorphismViolation> check_multimorphism(const TensorSpace& space, const FiniteSupLattice& cod,
                                                          const Multimorphism& b);

// Join of b over the maximal members of an element.
Elem induced_value(const BiIdeal& x, const FiniteSupLattice& cod, const Multimorphism& b);

// The sup-map T -> M with pure(t) |-> b(t). Throws NotBimorphism.
SupMap induced_from_multimorphism(const TensorLattice& t, LatticePtr cod, const Multimorphism& b);

// Omega (x) L -> L and back; mutually inverse.
struct TensorIso {
  SupMap forward, backward;
};
TensorIso unit_iso(const TensorLattice& omega_l);
// L (x) M -> M (x) L.
TensorIso symmetry_iso(const TensorLattice& lm, const TensorLattice& ml);
// (L (x) M) (x) N -> L (x) M (x) N; outer is a binary product whose first
// factor is inner.lattice().
TensorIso associativity_iso(const TensorLattice& inner, const TensorLattice& outer, const TensorLattice& flat);

// Biproduct of two sup-lattices with injections and projections.
struct DirectSum {
  LatticePtr lattice;
  SupMap inj1, inj2, proj1, proj2;
};
DirectSum direct_sum(LatticePtr a, LatticePtr b);
SupMap copair(const DirectSum& s, const SupMap& f, const SupMap& g);

}  // namespace openq

#endif  // OPENQ_TENSOR_HPP_
