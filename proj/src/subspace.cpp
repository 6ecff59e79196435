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

#include "openq/subspace.hpp"

#include "openq/error.hpp"

namespace openq {

RationalSubspace RationalSubspace::zero(std::size_t ambient) { return RationalSubspace(ambient); }

RationalSubspace RationalSubspace::full(std::size_t ambient) { return coordinate(ambient, BitSet::full(ambient)); }

RationalSubspace RationalSubspace::span(std::size_t ambient, std::span<const RationalVector> vectors) {
  RationalSubspace s(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorKind::Parse, "vector length differs from the ambient dimension");
    s.insert(v);
  }
  return s;
}

RationalSubspace RationalSubspace::coordinate(std::size_t ambient, const BitSet& coords) {
  RationalSubspace s(ambient);
  coords.for_each([&](std::size_t i) {
    RationalVector v(ambient);
    v[i] = 1;
    s.insert(std::move(v));
  });
  return s;
}

bool RationalSubspace::insert(RationalVector v) {
  // Two-argument mpq construction leaves fractions unreduced.
  for (auto& x : v) x.canonicalize();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (rows_[r][k] != 0) v[k] -= c * rows_[r][k];
  }
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  const Rational lead = v[p];
  for (auto& x : v) x /= lead;
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (c == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (v[k] != 0) row[k] -= c * v[k];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) return false;
  RationalSubspace copy = *this;
  return !copy.insert(v);
}

bool RationalSubspace::contains(const RationalSubspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

RationalSubspace RationalSubspace::operator+(const RationalSubspace& o) const {
  if (o.ambient_ != ambient_) throw Error(ErrorKind::Usage, "subspaces of different spaces");
  RationalSubspace s = *this;
  for (const auto& v : o.rows_) s.insert(v);
  return s;
}

BitSet RationalSubspace::support() const {
  BitSet s(ambient_);
  for (const auto& row : rows_)
    for (std::size_t k = 0; k < ambient_; ++k)
      if (row[k] != 0) s.set(k);
  return s;
}

std::string RationalSubspace::str() const {
  std::string s = "span{";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ", ";
    s += "(";
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (k) s += ",";
      s += rows_[r][k].get_str();
    }
    s += ")";
  }
  return s + "}";
}

}  // namespace openq
