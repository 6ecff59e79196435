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

#ifndef OPENQ_SUPLATTICE_HPP_
#define OPENQ_SUPLATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "openq/bitset.hpp"
#include "openq/error.hpp"

namespace openq {

// Dense element index into a finite carrier.
using Elem = std::uint32_t;

// A finite complete lattice given by its order. Construction validates the
// partial-order axioms and the existence of a bottom and all binary joins,
// then precomputes join and meet tables. Immutable afterwards.
class FiniteSupLattice {
 public:
  // leq pairs (i, j) mean i <= j; reflexive pairs are added. Throws Error with
  // kind NotAPartialOrder, NoBottom or MissingJoin, witness attached.
  static FiniteSupLattice from_relation(std::size_t n, std::span<const std::pair<Elem, Elem>> leq,
                                        std::vector<std::string> names = {});

  // above[i] = { j : i <= j }. Same validation as from_relation.
  static FiniteSupLattice from_up_sets(std::vector<BitSet> above, std::vector<std::string> names = {});

  template <class Leq>
  static FiniteSupLattice from_predicate(std::size_t n, Leq&& leq, std::vector<std::string> names = {}) {
    std::vector<BitSet> above(n, BitSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(static_cast<Elem>(i), static_cast<Elem>(j))) above[i].set(j);
    return from_up_sets(std::move(above), std::move(names));
  }

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return above_[a].test(b); }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(std::span<const Elem> s) const;
  Elem meet(std::span<const Elem> s) const;
  Elem join(const BitSet& s) const;
  Elem meet(const BitSet& s) const;
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  const BitSet& up_set(Elem a) const { return above_[a]; }
  const BitSet& down_set(Elem a) const { return below_[a]; }
  const std::vector<Elem>& upper_covers(Elem a) const { return covers_[a]; }

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  // Pairs (i, j), i != j, with i <= j.
  std::vector<std::pair<Elem, Elem>> strict_order_pairs() const;

  // Same order on the same indices; names are labels only.
  friend bool operator==(const FiniteSupLattice& a, const FiniteSupLattice& b) {
    return a.n_ == b.n_ && a.above_ == b.above_;
  }

 private:
  FiniteSupLattice() = default;

  std::size_t n_ = 0;
  std::vector<BitSet> above_, below_;
  std::vector<Elem> join_, meet_;
  std::vector<std::vector<Elem>> covers_;
  std::vector<std::string> names_;
  Elem bottom_ = 0, top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteSupLattice>;

LatticePtr share(FiniteSupLattice lattice);

// Elementwise map between finite lattices. Not necessarily join-preserving;
// is_sup_map decides.
struct SupMap {
  LatticePtr dom, cod;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
  friend bool operator==(const SupMap& f, const SupMap& g) { return f.values == g.values; }
};

SupMap identity_map(LatticePtr l);
SupMap constant_map(LatticePtr dom, LatticePtr cod, Elem value);
// g after f
SupMap compose(const SupMap& g, const SupMap& f);

struct SupMapViolation {
  bool bottom = false;  // f(bottom) != bottom; a and b unused
  Elem a = 0, b = 0;    // f(a v b) != f(a) v f(b)
};

// Lexicographically least violating pair, if any.
std::optional<SupMapViolation> is_sup_map(const SupMap& f);

// f_*(m) = join { l : f(l) <= m }. Throws NotSupPreserving.
SupMap right_adjoint(const SupMap& f);

// g(m) <= l iff m <= f(l) fails at (m, l).
struct AdjunctionFailure {
  Elem m = 0;
  Elem l = 0;
};

// Candidate g(m) = meet { l : m <= f(l) }, then verified on all pairs.
// Throws NotSupPreserving if f is not a sup-map.
Result<SupMap, AdjunctionFailure> left_adjoint(const SupMap& f);

// Whether f preserves all meets (empty meet included).
bool preserves_meets(const SupMap& f);

struct ClosureOperator {
  LatticePtr lattice;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
  BitSet fixed_points() const;
};

// j(a) = meet of members of closed above a. Throws NotMeetClosed with the
// offending pair (or the missing top as a single-element witness).
ClosureOperator closure_from_closed_family(LatticePtr lattice, const BitSet& closed);

enum class ClosureLaw { Inflationary, Monotone, Idempotent };
struct ClosureViolation {
  ClosureLaw law;
  Elem a = 0, b = 0;
};
std::optional<ClosureViolation> check_closure(const ClosureOperator& j);

// Stock lattices.
FiniteSupLattice chain_lattice(std::size_t n);
// Subsets of {0..k-1}, element index = bitmask.
FiniteSupLattice powerset_lattice(std::size_t k, const std::vector<std::string>& atom_names = {});
FiniteSupLattice product_lattice(const FiniteSupLattice& a, const FiniteSupLattice& b);

}  // namespace openq

#endif  // OPENQ_SUPLATTICE_HPP_
