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

#ifndef OPENQ_FREEPROD_HPP_
#define OPENQ_FREEPROD_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "openq/quantale.hpp"
#include "openq/tensor.hpp"

namespace openq {

// Which factor of Y*Q a letter comes from.
enum class Side : std::uint8_t { Y, Q };

inline Side other(Side s) { return s == Side::Y ? Side::Q : Side::Y; }
inline char side_char(Side s) { return s == Side::Y ? 'Y' : 'Q'; }

template <class V>
struct BasicLetter {
  Side side;
  V value;
  friend bool operator==(const BasicLetter&, const BasicLetter&) = default;
  friend auto operator<=>(const BasicLetter&, const BasicLetter&) = default;
};

// Pure tensor y (x) a (x) y' (x) ... as an alternating letter sequence.
template <class V>
using BasicWord = std::vector<BasicLetter<V>>;

using Letter = BasicLetter<Elem>;
using Word = BasicWord<Elem>;
// Letters as names; products of Y-letters (or Q-letters) are juxtaposed.
using SymbolicWord = BasicWord<std::string>;

// Summand T_n: length 2k+1 gives n = 4k+1 (starts with Y) or 4k+2
// (starts with Q); length 2k+2 gives 4k+3 (Y...Q) or 4k+4 (Q...Y).
struct GradeIndex {
  std::size_t n = 0;
  Side start = Side::Y;
  Side end = Side::Y;
  std::size_t length = 0;
};

GradeIndex grade_index(std::size_t n);
GradeIndex grade_for(Side start, std::size_t length);
// Grade of the product of an element of T_m and an element of T_n.
std::size_t product_grade(std::size_t m, std::size_t n);

template <class V>
void check_alternating(const BasicWord<V>& w) {
  if (w.empty()) throw Error(ErrorKind::NotAlternating, "empty word");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].side == w[i - 1].side) throw Error(ErrorKind::NotAlternating, "adjacent letters share a side", {i});
}

template <class V>
GradeIndex grade_of(const BasicWord<V>& w) {
  check_alternating(w);
  return grade_for(w.front().side, w.size());
}

// Concatenation; equal-sided boundary letters merge through the product of
// their quantale.
template <class V, class MergeY, class MergeQ>
BasicWord<V> word_multiply(const BasicWord<V>& u, const BasicWord<V>& v, MergeY&& merge_y, MergeQ&& merge_q) {
  check_alternating(u);
  check_alternating(v);
  BasicWord<V> w = u;
  auto it = v.begin();
  if (w.back().side == it->side) {
    w.back().value = it->side == Side::Y ? merge_y(w.back().value, it->value) : merge_q(w.back().value, it->value);
    ++it;
  }
  w.insert(w.end(), it, v.end());
  return w;
}

// Reverse and apply the involutions letterwise.
template <class V, class InvY, class InvQ>
BasicWord<V> word_involution(const BasicWord<V>& u, InvY&& inv_y, InvQ&& inv_q) {
  BasicWord<V> w(u.rbegin(), u.rend());
  for (auto& l : w) l.value = l.side == Side::Y ? inv_y(l.value) : inv_q(l.value);
  return w;
}

SymbolicWord symbolic_multiply(const SymbolicWord& u, const SymbolicWord& v);
SymbolicWord symbolic_involution(const SymbolicWord& u);
std::string to_string(const SymbolicWord& w);

// One tensor element per grade 1..N.
struct GradedElement {
  std::vector<BiIdeal> components;  // components[n-1] lies in T_n

  const BiIdeal& at(std::size_t n) const { return components.at(n - 1); }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.components == b.components; }
};

// Y*Q cut off above grade N. Products landing above N throw
// TruncationOverflow; nothing is folded into a top element.
class TruncatedFreeProduct {
 public:
  static constexpr std::size_t kDefaultTruncation = 8;

  TruncatedFreeProduct(QuantalePtr y, QuantalePtr q, std::size_t truncation = kDefaultTruncation);

  const FiniteInvQuantale& y() const { return *y_; }
  const FiniteInvQuantale& q() const { return *q_; }
  const QuantalePtr& y_ptr() const { return y_; }
  const QuantalePtr& q_ptr() const { return q_; }
  std::size_t truncation() const { return n_; }
  // Longest word whose grade stays within the truncation.
  std::size_t max_length() const { return n_ / 2; }

  Word multiply(const Word& u, const Word& v) const;
  Word involution(const Word& u) const;
  // A word with a bottom letter is the zero tensor.
  bool is_zero(const Word& w) const;
  std::string str(const Word& w) const;

  // Factors of T_n, built on first use.
  const TensorSpacePtr& space(std::size_t n) const;
  Word word_of(std::size_t n, std::span<const Elem> tuple) const;

  GradedElement bottom() const;
  // Pure tensor in its grade. Throws TruncationOverflow above N.
  GradedElement embed(const Word& w) const;
  GradedElement join(const GradedElement& a, const GradedElement& b) const;
  bool leq(const GradedElement& a, const GradedElement& b) const;
  GradedElement multiply(const GradedElement& a, const GradedElement& b) const;
  GradedElement involution(const GradedElement& a) const;
  // Nonzero pure tensors whose join is a, by grade.
  std::vector<Word> generators(const GradedElement& a) const;

  // Inverse images of the two coprojections: pi1*(y) = (y), pi2*(a) = (a).
  GradedElement pi1(Elem y) const { return embed({{Side::Y, y}}); }
  GradedElement pi2(Elem a) const { return embed({{Side::Q, a}}); }

 private:
  QuantalePtr y_, q_;
  std::size_t n_;
  mutable std::map<std::size_t, TensorSpacePtr> spaces_;
};

// <f,g>* on a word: f*(y) g*(a) f*(y') ... multiplied out in R.
Elem pairing(const FiniteInvQuantale& r, const std::function<Elem(Elem)>& f_star,
             const std::function<Elem(Elem)>& g_star, const Word& w);
// Join of the pairing over the generators of a graded element.
Elem pairing(const FiniteInvQuantale& r, const std::function<Elem(Elem)>& f_star,
             const std::function<Elem(Elem)>& g_star, const TruncatedFreeProduct& yq, const GradedElement& a);

}  // namespace openq

#endif  // OPENQ_FREEPROD_HPP_
