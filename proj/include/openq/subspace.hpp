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

#ifndef OPENQ_SUBSPACE_HPP_
#define OPENQ_SUBSPACE_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "openq/bitset.hpp"

namespace openq {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Subspace of Q^n kept in reduced row echelon form, so equal subspaces
// have identical bases.
class RationalSubspace {
 public:
  RationalSubspace() = default;

  static RationalSubspace zero(std::size_t ambient);
  static RationalSubspace full(std::size_t ambient);
  static RationalSubspace span(std::size_t ambient, std::span<const RationalVector> vectors);
  // span { e_i : i in coords }
  static RationalSubspace coordinate(std::size_t ambient, const BitSet& coords);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<RationalVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& o) const;
  RationalSubspace operator+(const RationalSubspace& o) const;
  // Coordinates that are nonzero on some vector of the subspace.
  BitSet support() const;
  std::string str() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  explicit RationalSubspace(std::size_t ambient) : ambient_(ambient) {}
  // Reduces v against the basis; returns true if it was independent.
  bool insert(RationalVector v);

  std::size_t ambient_ = 0;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace openq

#endif  // OPENQ_SUBSPACE_HPP_
