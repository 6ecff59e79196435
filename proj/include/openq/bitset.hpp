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

#ifndef OPENQ_BITSET_HPP_
#define OPENQ_BITSET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "openq/kernels.hpp"

namespace openq {

// Fixed-size dynamic bitset. Bulk operations go through the kernel table;
// bits past size() are kept zero so word-level comparisons stay exact.
class BitSet {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitSet full(std::size_t size) {
    BitSet b(size);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  BitSet& operator|=(const BitSet& o) {
    assert(size_ == o.size_);
    kernels::active().or_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    assert(size_ == o.size_);
    kernels::active().and_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  BitSet& subtract(const BitSet& o) {
    assert(size_ == o.size_);
    kernels::active().andnot_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

  bool is_subset_of(const BitSet& o) const {
    assert(size_ == o.size_);
    return kernels::active().is_subset(words_.data(), o.words_.data(), words_.size());
  }
  bool intersects(const BitSet& o) const {
    assert(size_ == o.size_);
    return kernels::active().intersects(words_.data(), o.words_.data(), words_.size());
  }
  bool any() const { return kernels::active().any(words_.data(), words_.size()); }
  bool none() const { return !any(); }
  std::size_t count() const { return kernels::active().popcount(words_.data(), words_.size()); }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.size_ == b.size_ && kernels::active().equal(a.words_.data(), b.words_.data(), a.words_.size());
  }

  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ size_;
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

}  // namespace openq

#endif  // OPENQ_BITSET_HPP_
