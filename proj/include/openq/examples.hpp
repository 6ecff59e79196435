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

#ifndef OPENQ_EXAMPLES_HPP_
#define OPENQ_EXAMPLES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "openq/algebra.hpp"
#include "openq/quantale.hpp"

namespace openq {

// Subsets of a groupoid under setwise product and inverse, unit the set of
// identities. Element index = bitmask over arrows.
FiniteInvQuantale groupoid_powerset_quantale(const FiniteGroupoid& g, std::string name = {});
// Relations on {1..n} under composition and converse. n <= 3.
FiniteInvQuantale rel_quantale(std::size_t n);
FiniteInvQuantale group_powerset_quantale(const FiniteGroupoid& g);

using MaxAlgebraPtr = std::shared_ptr<const MaxAlgebraQuantale>;
using SupportMap = QuantaleMap<MaxAlgebraQuantale, FiniteInvQuantale>;

MaxAlgebraPtr matrix_max_quantale(std::size_t n, SubspaceSampler sampler = {});
MaxAlgebraPtr group_algebra_max_quantale(const FiniteGroupoid& g, SubspaceSampler sampler = {});

// p: Max Q[G] -> P(G) with p*(U) = span U and p_!(V) the support of V.
SupportMap support_map(MaxAlgebraPtr max, QuantalePtr powerset);
SupportMap matrix_support_map(std::size_t n, SubspaceSampler sampler = {});
SupportMap group_algebra_support_map(const FiniteGroupoid& g, SubspaceSampler sampler = {});

// The support map restricted to the finite sub-quantale generated by the
// coordinate subspaces and extra generators.
struct FiniteSupportMap {
  FiniteSubquantale sub;
  FiniteMap map;
};
FiniteSupportMap finite_support_map(const SupportMap& p, std::vector<RationalSubspace> extra, std::size_t limit = 256);

// Six elements of Max Q[Z2]: 0, span{e}, span{g}, span{e+g}, span{e-g}, A.
FiniteSupportMap z2_algebra_finite_part();
// Rel(2) -> P(Z2): the permutation representation, {e} -> Delta, {g} -> swap.
FiniteMap z2_permutation_representation();
// Omega -> Rel(2) with 1 -> Delta.
FiniteMap omega_diagonal_map();

// Finite topological space with opens as point bitmasks.
struct FiniteSpace {
  std::string name;
  std::size_t points = 0;
  std::vector<std::uint64_t> opens;
  // Optional labels for opens, keyed by position in opens.
  std::vector<std::string> open_names;
};

// Throws InvalidTopology unless the opens contain the empty set and the
// whole space and are closed under union and intersection.
void validate_space(const FiniteSpace& s);
FiniteSpace discrete_space(std::size_t n);
FiniteSpace point_space();
// Points 1 (open) and 2 (closed); opens 0 < m = {1} < 1.
FiniteSpace sierpinski_space();

// Frame of opens as a quantale; opens ordered by (size, mask).
FiniteInvQuantale opens_quantale(const FiniteSpace& s);

struct LocaleMapOptions {
  // Build p_! as the image map and throw NotOpen if some image is not open.
  bool direct_image = false;
};

// For continuous f: X -> Y, the map O(X) -> O(Y) with p* = f^-1.
// Throws NotContinuous with the offending open of Y.
FiniteMap finite_locale_map(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f,
                            LocaleMapOptions opt = {});

FiniteMap discrete_to_point(std::size_t n);
// The open point and the closed point of the Sierpinski space.
FiniteMap sierpinski_open_point();
FiniteMap sierpinski_closed_point();
// Inclusion of the discrete n-point space into the discrete m-point space.
FiniteMap discrete_inclusion(std::size_t n, std::size_t m);

// p: Q -> Omega with p*(1) = top and p_!(a) = [a != bottom]. Throws
// HypothesisFailure (nilpotent squares are reported before other zero
// divisors) unless the result is a semiopen surjection with FR1 and FR2.
FiniteMap omega_support_map(QuantalePtr q);

// Omega -> Omega x Omega with p*(x1, x2) = x1: FR1 holds, not surjective.
FiniteMap omega_first_coordinate();

struct NamedQuantale {
  std::string name;
  QuantalePtr q;
};
struct NamedMap {
  std::string name;
  FiniteMap map;
};

// Finite quantales used across tests and the acceptance suite.
std::vector<NamedQuantale> finite_quantale_corpus();
std::vector<NamedMap> finite_map_corpus();

// Stock small quantales.
FiniteInvQuantale chain_frame(std::size_t n);
// 0 < a < 1 with a a = 0, 1 the unit.
FiniteInvQuantale nilpotent_chain3();
// M3 lattice with all products zero.
FiniteInvQuantale m3_zero();

}  // namespace openq

#endif  // OPENQ_EXAMPLES_HPP_
