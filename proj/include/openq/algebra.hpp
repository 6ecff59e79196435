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

#ifndef OPENQ_ALGEBRA_HPP_
#define OPENQ_ALGEBRA_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "openq/quantale.hpp"
#include "openq/subspace.hpp"

namespace openq {

// Finite groupoid as a partial multiplication table.
struct FiniteGroupoid {
  std::string name;
  std::vector<std::string> names;
  std::vector<std::optional<Elem>> product;  // row-major, empty when not composable
  std::vector<Elem> inverse;

  std::size_t size() const { return names.size(); }
  std::optional<Elem> mul(Elem a, Elem b) const { return product[a * size() + b]; }
  // Arrows of the form a a^-1.
  BitSet identities() const;
};

// Throws InvalidGroupTable unless composition is associative where defined,
// (a^-1)^-1 = a, and (a a^-1) a = a = a (a^-1 a).
void validate_groupoid(const FiniteGroupoid& g);

FiniteGroupoid cyclic_group(std::size_t n);
// Permutations of {1,2,3} in lexicographic order, cycle notation names.
FiniteGroupoid symmetric_group3();
// Arrows (i,j), i,j in 1..n, composing (i,j)(j,k) = (i,k); index (i-1)n+(j-1).
FiniteGroupoid pair_groupoid(std::size_t n);
// Full multiplication table; inverses are derived. Throws InvalidGroupTable.
FiniteGroupoid group_from_table(std::string name, std::vector<std::string> names, const std::vector<Elem>& table);

// Algebra over Q with a basis closed under multiplication up to zero and an
// involution permuting the basis.
struct MonomialAlgebra {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<std::optional<Elem>> product;  // e_i e_j = e_k or 0
  std::vector<Elem> star;
  std::optional<RationalVector> unit;

  std::size_t dimension() const { return basis_names.size(); }
  RationalVector multiply(const RationalVector& u, const RationalVector& v) const;
  RationalVector involute(const RationalVector& u) const;
};

// Groupoid algebra Q[G]: matrices for the pair groupoid, the group algebra
// for a group.
MonomialAlgebra groupoid_algebra(const FiniteGroupoid& g);

struct SubspaceSampler {
  std::size_t max_dimension = 3;
  int coefficient_bound = 1;  // entries drawn from [-bound, bound]
};

// Max A: subspaces of A under sum, span of products and the involution.
// The carrier is infinite; checks sample it.
class MaxAlgebraQuantale {
 public:
  using element_type = RationalSubspace;

  explicit MaxAlgebraQuantale(MonomialAlgebra algebra, SubspaceSampler sampler = {});

  const MonomialAlgebra& algebra() const { return algebra_; }
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return algebra_.dimension(); }

  bool leq(const RationalSubspace& a, const RationalSubspace& b) const { return b.contains(a); }
  RationalSubspace join(const RationalSubspace& a, const RationalSubspace& b) const { return a + b; }
  RationalSubspace mult(const RationalSubspace& a, const RationalSubspace& b) const;
  RationalSubspace inv(const RationalSubspace& a) const;
  RationalSubspace bottom() const { return RationalSubspace::zero(dimension()); }
  RationalSubspace top() const { return RationalSubspace::full(dimension()); }
  std::optional<RationalSubspace> unit() const { return unit_; }

  RationalSubspace span(std::span<const RationalVector> vectors) const {
    return RationalSubspace::span(dimension(), vectors);
  }
  RationalSubspace coordinate(const BitSet& coords) const { return RationalSubspace::coordinate(dimension(), coords); }

  // Rows written as combinations of basis names, e.g. span{e+g}.
  std::string describe(const RationalSubspace& a) const;
  nlohmann::json element_json(const RationalSubspace& a) const;
  // Array of rows, each an array of integers or rational strings.
  RationalSubspace parse_element(const nlohmann::json& j) const;
  RationalSubspace sample(std::mt19937_64& rng) const;

 private:
  MonomialAlgebra algebra_;
  SubspaceSampler sampler_;
  std::string name_;
  std::optional<RationalSubspace> unit_;
};

// Finite sub-quantale of Max A generated by the given subspaces under sums,
// products and the involution, together with its elements. Throws TooLarge
// past limit elements.
struct FiniteSubquantale {
  QuantalePtr quantale;
  std::vector<RationalSubspace> elements;

  Elem index_of(const RationalSubspace& s) const;
};

FiniteSubquantale generate_subquantale(const MaxAlgebraQuantale& q, std::vector<RationalSubspace> generators,
                                       std::size_t limit = 256);

}  // namespace openq

#endif  // OPENQ_ALGEBRA_HPP_
