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

#ifndef OPENQ_KERNELS_HPP_
#define OPENQ_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

// Word-array kernels behind every bitset in the library. A scalar reference
// table is always present; an AVX2 table is compiled on x86-64 and picked at
// runtime when the CPU reports support. Setting OPENQ_KERNELS=scalar in the
// environment pins the reference table.
namespace openq::kernels {

using Word = std::uint64_t;

struct KernelTable {
  const char* name;
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t n);
  // a is a subset of b
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
  bool (*any)(const Word* a, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the binary was built without the AVX2 translation unit or the
// running CPU lacks AVX2.
const KernelTable* avx2_table();

// The table used by BitSet. Chosen once, on first use.
const KernelTable& active();

// Overrides the runtime choice; tests use this to run both paths.
void select(const KernelTable& table);

}  // namespace openq::kernels

#endif  // OPENQ_KERNELS_HPP_
