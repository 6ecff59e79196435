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

#ifndef OPENQ_IO_HPP_
#define OPENQ_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "openq/examples.hpp"
#include "openq/nucleus.hpp"

namespace openq {

using Json = nlohmann::json;

// All loaders throw Error(Parse) on malformed documents. Loading never runs
// the algebraic validators; callers decide what to check.

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

// {"elements": [names], "leq": [[i, j], ...]}; reflexive pairs optional.
Json lattice_to_json(const FiniteSupLattice& l);
FiniteSupLattice lattice_from_json(const Json& doc);

// {"lattice": doc, "mult": [[i, j, k], ...], "inv": [[i, j], ...],
//  "unit": i?, "name": s?}. Every product must be listed exactly once.
Json quantale_to_json(const FiniteInvQuantale& q);
FiniteInvQuantale quantale_from_json(const Json& doc);

// A quantale document, or a path to one relative to base.
QuantalePtr quantale_from_ref(const Json& ref, const std::filesystem::path& base);

// {"source": q, "target": q, "inverse_image": [[x, q], ...],
//  "direct_image": [[q, x], ...]?, "name": s?}
Json map_to_json(const FiniteMap& p);

// Effective maps are named, not tabulated:
// {"effective": "matrix-support", "n": 2} or
// {"effective": "group-algebra-support", "group": "Z2"}.
struct EffectiveMapSpec {
  std::string kind;
  std::size_t n = 0;
  std::string group;
  SubspaceSampler sampler;
};
Json effective_spec_to_json(const EffectiveMapSpec& spec);
SupportMap build_effective_map(const EffectiveMapSpec& spec);

using MapDocument = std::variant<FiniteMap, EffectiveMapSpec>;
MapDocument map_from_json(const Json& doc, const std::filesystem::path& base = {});
FiniteMap finite_map_from_json(const Json& doc, const std::filesystem::path& base = {});

// "Z<n>" for cyclic groups (n <= 8) and "S3".
FiniteGroupoid group_by_name(std::string_view name);

// {"pairs": [[r, s], ...]} with indices below n.
Json relation_to_json(std::span<const ElemPair> pairs);
std::vector<ElemPair> relation_from_json(const Json& doc, std::size_t n);

// 64-bit FNV-1a, as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);
// Digest of the compact serialization; keys are sorted, so it is stable.
std::string json_digest(const Json& doc);

}  // namespace openq

#endif  // OPENQ_IO_HPP_
