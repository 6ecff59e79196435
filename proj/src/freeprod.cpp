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

#include "openq/freeprod.hpp"

namespace openq {

GradeIndex grade_for(Side start, std::size_t length) {
  if (length == 0) throw Error(ErrorKind::NotAlternating, "empty word");
  GradeIndex g;
  g.start = start;
  g.length = length;
  if (length % 2 == 1) {
    const std::size_t k = (length - 1) / 2;
    g.n = 4 * k + (start == Side::Y ? 1 : 2);
    g.end = start;
  } else {
    const std::size_t k = (length - 2) / 2;
    g.n = 4 * k + (start == Side::Y ? 3 : 4);
    g.end = other(start);
  }
  return g;
}

GradeIndex grade_index(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Usage, "grades start at 1");
  const std::size_t k = (n - 1) / 4;
  switch (n % 4) {
    case 1: return grade_for(Side::Y, 2 * k + 1);
    case 2: return grade_for(Side::Q, 2 * k + 1);
    case 3: return grade_for(Side::Y, 2 * k + 2);
    default: return grade_for(Side::Q, 2 * k + 2);
  }
}

std::size_t product_grade(std::size_t m, std::size_t n) {
  const GradeIndex a = grade_index(m), b = grade_index(n);
  const std::size_t len = a.length + b.length - (a.end == b.start ? 1 : 0);
  return grade_for(a.start, len).n;
}

SymbolicWord symbolic_multiply(const SymbolicWord& u, const SymbolicWord& v) {
  auto cat = [](const std::string& a, const std::string& b) { return a + b; };
  return word_multiply(u, v, cat, cat);
}

SymbolicWord symbolic_involution(const SymbolicWord& u) {
  auto star = [](const std::string& a) { return a + "*"; };
  return word_involution(u, star, star);
}

std::string to_string(const SymbolicWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].value;
  }
  return s + ")";
}

TruncatedFreeProduct::TruncatedFreeProduct(QuantalePtr y, QuantalePtr q, std::size_t truncation)
    : y_(std::move(y)), q_(std::move(q)), n_(truncation) {
  if (n_ == 0) throw Error(ErrorKind::Usage, "truncation grade must be positive");
}

Word TruncatedFreeProduct::multiply(const Word& u, const Word& v) const {
  return word_multiply(
      u, v, [&](Elem a, Elem b) { return y_->mult(a, b); }, [&](Elem a, Elem b) { return q_->mult(a, b); });
}

Word TruncatedFreeProduct::involution(const Word& u) const {
  return word_involution(u, [&](Elem a) { return y_->inv(a); }, [&](Elem a) { return q_->inv(a); });
}

bool TruncatedFreeProduct::is_zero(const Word& w) const {
  for (const auto& l : w)
    if (l.value == (l.side == Side::Y ? y_->bottom() : q_->bottom())) return true;
  return false;
}

std::string TruncatedFreeProduct::str(const Word& w) const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].side == Side::Y ? y_->describe(w[i].value) : q_->describe(w[i].value);
  }
  return s + ")";
}

const TensorSpacePtr& TruncatedFreeProduct::space(std::size_t n) const {
  if (n == 0 || n > n_) throw Error(ErrorKind::TruncationOverflow, "grade outside the truncation", {n});
  auto it = spaces_.find(n);
  if (it == spaces_.end()) {
    const GradeIndex g = grade_index(n);
    std::vector<LatticePtr> factors;
    Side s = g.start;
    for (std::size_t i = 0; i < g.length; ++i, s = other(s))
      factors.push_back(s == Side::Y ? y_->carrier() : q_->carrier());
    it = spaces_.emplace(n, std::make_shared<const TensorSpace>(std::move(factors))).first;
  }
  return it->second;
}

Word TruncatedFreeProduct::word_of(std::size_t n, std::span<const Elem> tuple) const {
  const GradeIndex g = grade_index(n);
  if (tuple.size() != g.length) throw Error(ErrorKind::Usage, "tuple does not match the grade");
  Word w;
  Side s = g.start;
  for (Elem v : tuple) {
    w.push_back({s, v});
    s = other(s);
  }
  return w;
}

GradedElement TruncatedFreeProduct::bottom() const {
  GradedElement e;
  for (std::size_t n = 1; n <= n_; ++n) e.components.push_back(BiIdeal::bottom(space(n)));
  return e;
}

GradedElement TruncatedFreeProduct::embed(const Word& w) const {
  const GradeIndex g = grade_of(w);
  if (g.n > n_) throw Error(ErrorKind::TruncationOverflow, "word lies above the truncation", {g.n});
  GradedElement e = bottom();
  Tuple t;
  for (const auto& l : w) t.push_back(l.value);
  e.components[g.n - 1] = BiIdeal::pure(space(g.n), t);
  return e;
}

GradedElement TruncatedFreeProduct::join(const GradedElement& a, const GradedElement& b) const {
  GradedElement e;
  for (std::size_t i = 0; i < n_; ++i) e.components.push_back(a.components[i].join(b.components[i]));
  return e;
}

bool TruncatedFreeProduct::leq(const GradedElement& a, const GradedElement& b) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!a.components[i].leq(b.components[i])) return false;
  return true;
}

std::vector<Word> TruncatedFreeProduct::generators(const GradedElement& a) const {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= n_; ++n)
    for (const auto& t : a.at(n).maximal_members()) {
      Word w = word_of(n, t);
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  return out;
}

// Products distribute over joins in each factor, so multiplying the
// generators pairwise and closing gives the product.
GradedElement TruncatedFreeProduct::multiply(const GradedElement& a, const GradedElement& b) const {
  std::vector<BitSet> seeds;
  for (std::size_t n = 1; n <= n_; ++n) seeds.emplace_back(space(n)->grid_size());
  const auto ga = generators(a), gb = generators(b);
  for (const auto& u : ga)
    for (const auto& v : gb) {
      Word w = multiply(u, v);
      if (is_zero(w)) continue;
      const GradeIndex g = grade_of(w);
      if (g.n > n_)
        throw Error(ErrorKind::TruncationOverflow, "product lies above the truncation",
                    {grade_of(u).n, grade_of(v).n});
      Tuple t;
      for (const auto& l : w) t.push_back(l.value);
      seeds[g.n - 1].set(space(g.n)->encode(t));
    }
  GradedElement e;
  for (std::size_t n = 1; n <= n_; ++n) e.components.push_back(BiIdeal::closure_of(space(n), std::move(seeds[n - 1])));
  return e;
}

GradedElement TruncatedFreeProduct::involution(const GradedElement& a) const {
  std::vector<BitSet> seeds;
  for (std::size_t n = 1; n <= n_; ++n) seeds.emplace_back(space(n)->grid_size());
  for (const auto& u : generators(a)) {
    Word w = involution(u);
    const GradeIndex g = grade_of(w);
    if (g.n > n_) throw Error(ErrorKind::TruncationOverflow, "involution leaves the truncation", {g.n});
    Tuple t;
    for (const auto& l : w) t.push_back(l.value);
    seeds[g.n - 1].set(space(g.n)->encode(t));
  }
  GradedElement e;
  for (std::size_t n = 1; n <= n_; ++n) e.components.push_back(BiIdeal::closure_of(space(n), std::move(seeds[n - 1])));
  return e;
}

Elem pairing(const FiniteInvQuantale& r, const std::function<Elem(Elem)>& f_star,
             const std::function<Elem(Elem)>& g_star, const Word& w) {
  check_alternating(w);
  Elem acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Elem v = w[i].side == Side::Y ? f_star(w[i].value) : g_star(w[i].value);
    acc = i == 0 ? v : r.mult(acc, v);
  }
  return acc;
}

Elem pairing(const FiniteInvQuantale& r, const std::function<Elem(Elem)>& f_star,
             const std::function<Elem(Elem)>& g_star, const TruncatedFreeProduct& yq, const GradedElement& a) {
  Elem acc = r.bottom();
  for (const auto& w : yq.generators(a)) acc = r.join(acc, pairing(r, f_star, g_star, w));
  return acc;
}

}  // namespace openq
