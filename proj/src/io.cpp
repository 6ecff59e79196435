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

#include "openq/io.hpp"

#include <cstdio>
#include <fstream>

namespace openq {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_error("expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

Elem index(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) parse_error(std::string(what) + " index is not an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    parse_error(std::string(what) + " index " + std::to_string(v) + " out of range");
  return static_cast<Elem>(v);
}

std::vector<Elem> tuple(const Json& j, std::size_t arity, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != arity)
    parse_error(std::string(what) + " entries must have " + std::to_string(arity) + " indices");
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(index(e, n, what));
  return out;
}

const Json& array_field(const Json& doc, const char* key) {
  const Json& a = field(doc, key);
  if (!a.is_array()) parse_error(std::string("field '") + key + "' must be an array");
  return a;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Json lattice_to_json(const FiniteSupLattice& l) {
  Json leq = Json::array();
  for (auto [a, b] : l.strict_order_pairs()) leq.push_back({a, b});
  return {{"elements", l.names()}, {"leq", leq}};
}

FiniteSupLattice lattice_from_json(const Json& doc) {
  const Json& el = array_field(doc, "elements");
  std::vector<std::string> names;
  for (const auto& e : el) {
    if (!e.is_string()) parse_error("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  if (names.empty()) parse_error("a lattice needs at least one element");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& p : array_field(doc, "leq")) {
    auto t = tuple(p, 2, names.size(), "leq");
    pairs.emplace_back(t[0], t[1]);
  }
  const std::size_t n = names.size();
  return FiniteSupLattice::from_relation(n, pairs, std::move(names));
}

Json quantale_to_json(const FiniteInvQuantale& q) {
  const std::size_t n = q.size();
  Json mult = Json::array(), inv = Json::array();
  for (Elem a = 0; a < n; ++a) {
    inv.push_back({a, q.inv(a)});
    for (Elem b = 0; b < n; ++b) mult.push_back({a, b, q.mult(a, b)});
  }
  Json doc{{"lattice", lattice_to_json(q.lattice())}, {"mult", mult}, {"inv", inv}};
  if (q.declared_unit()) doc["unit"] = *q.declared_unit();
  if (!q.name().empty()) doc["name"] = q.name();
  return doc;
}

FiniteInvQuantale quantale_from_json(const Json& doc) {
  auto lat = share(lattice_from_json(field(doc, "lattice")));
  const std::size_t n = lat->size();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> mult(n * n, kUnset), inv(n, kUnset);
  for (const auto& e : array_field(doc, "mult")) {
    auto t = tuple(e, 3, n, "mult");
    Elem& slot = mult[t[0] * n + t[1]];
    if (slot != kUnset) parse_error("product " + std::to_string(t[0]) + "*" + std::to_string(t[1]) + " listed twice");
    slot = t[2];
  }
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] == kUnset) parse_error("product " + std::to_string(i / n) + "*" + std::to_string(i % n) + " missing");
  for (const auto& e : array_field(doc, "inv")) {
    auto t = tuple(e, 2, n, "inv");
    if (inv[t[0]] != kUnset) parse_error("involution of " + std::to_string(t[0]) + " listed twice");
    inv[t[0]] = t[1];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (inv[i] == kUnset) parse_error("involution of " + std::to_string(i) + " missing");
  std::optional<Elem> unit;
  if (auto it = doc.find("unit"); it != doc.end() && !it->is_null()) unit = index(*it, n, "unit");
  std::string name;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) name = it->get<std::string>();
  return FiniteInvQuantale(std::move(lat), std::move(mult), std::move(inv), unit, std::move(name));
}

QuantalePtr quantale_from_ref(const Json& ref, const std::filesystem::path& base) {
  if (ref.is_string()) {
    auto path = std::filesystem::path(ref.get<std::string>());
    if (path.is_relative()) path = base / path;
    return share(quantale_from_json(read_json_file(path)));
  }
  return share(quantale_from_json(ref));
}

Json map_to_json(const FiniteMap& p) {
  Json inv = Json::array();
  for (Elem x = 0; x < p.target->size(); ++x) inv.push_back({x, p.inverse_image(x)});
  Json doc{{"source", quantale_to_json(*p.source)},
           {"target", quantale_to_json(*p.target)},
           {"inverse_image", inv}};
  if (p.has_direct_image()) {
    Json dir = Json::array();
    for (Elem a = 0; a < p.source->size(); ++a) dir.push_back({a, p.direct_image(a)});
    doc["direct_image"] = dir;
  }
  if (!p.name.empty()) doc["name"] = p.name;
  return doc;
}

Json effective_spec_to_json(const EffectiveMapSpec& spec) {
  Json doc{{"effective", spec.kind}};
  if (spec.kind == "matrix-support") doc["n"] = spec.n;
  if (spec.kind == "group-algebra-support") doc["group"] = spec.group;
  doc["sampler"] = {{"max_dimension", spec.sampler.max_dimension},
                    {"coefficient_bound", spec.sampler.coefficient_bound}};
  return doc;
}

SupportMap build_effective_map(const EffectiveMapSpec& spec) {
  if (spec.kind == "matrix-support") return matrix_support_map(spec.n, spec.sampler);
  if (spec.kind == "group-algebra-support") return group_algebra_support_map(group_by_name(spec.group), spec.sampler);
  throw Error(ErrorKind::Parse, "unknown effective map '" + spec.kind + "'");
}

MapDocument map_from_json(const Json& doc, const std::filesystem::path& base) {
  if (!doc.is_object()) parse_error("a map document must be an object");
  if (auto it = doc.find("effective"); it != doc.end()) {
    if (!it->is_string()) parse_error("'effective' must be a string");
    EffectiveMapSpec spec;
    spec.kind = it->get<std::string>();
    if (spec.kind == "matrix-support") {
      const Json& n = field(doc, "n");
      if (!n.is_number_unsigned() || n.get<std::size_t>() == 0 || n.get<std::size_t>() > 3)
        parse_error("'n' must be 1, 2 or 3");
      spec.n = n.get<std::size_t>();
    } else if (spec.kind == "group-algebra-support") {
      const Json& g = field(doc, "group");
      if (!g.is_string()) parse_error("'group' must be a string");
      spec.group = g.get<std::string>();
      group_by_name(spec.group);
    } else {
      parse_error("unknown effective map '" + spec.kind + "'");
    }
    if (auto s = doc.find("sampler"); s != doc.end()) {
      try {
        spec.sampler.max_dimension = s->value("max_dimension", spec.sampler.max_dimension);
        spec.sampler.coefficient_bound = s->value("coefficient_bound", spec.sampler.coefficient_bound);
      } catch (const Json::exception& e) {
        parse_error(std::string("sampler: ") + e.what());
      }
    }
    return spec;
  }
  auto source = quantale_from_ref(field(doc, "source"), base);
  auto target = quantale_from_ref(field(doc, "target"), base);
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> table(target->size(), kUnset);
  for (const auto& e : array_field(doc, "inverse_image")) {
    if (!e.is_array() || e.size() != 2) parse_error("inverse_image entries must be [x, q]");
    const Elem x = index(e[0], target->size(), "inverse_image target");
    if (table[x] != kUnset) parse_error("inverse image of " + std::to_string(x) + " listed twice");
    table[x] = index(e[1], source->size(), "inverse_image source");
  }
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x] == kUnset) parse_error("inverse image of " + std::to_string(x) + " missing");
  std::string name = doc.value("name", std::string());
  FiniteMap m = make_finite_map(source, target, std::move(table), std::move(name));
  if (auto it = doc.find("direct_image"); it != doc.end()) {
    if (!it->is_array()) parse_error("'direct_image' must be an array");
    std::vector<Elem> dir(source->size(), kUnset);
    for (const auto& e : *it) {
      if (!e.is_array() || e.size() != 2) parse_error("direct_image entries must be [q, x]");
      const Elem a = index(e[0], source->size(), "direct_image source");
      if (dir[a] != kUnset) parse_error("direct image of " + std::to_string(a) + " listed twice");
      dir[a] = index(e[1], target->size(), "direct_image target");
    }
    for (std::size_t a = 0; a < dir.size(); ++a)
      if (dir[a] == kUnset) parse_error("direct image of " + std::to_string(a) + " missing");
    m.direct_image = [dir](const Elem& a) { return dir[a]; };
  }
  return m;
}

FiniteMap finite_map_from_json(const Json& doc, const std::filesystem::path& base) {
  auto m = map_from_json(doc, base);
  if (auto* f = std::get_if<FiniteMap>(&m)) return std::move(*f);
  parse_error("expected a tabulated map, got an effective one");
}

FiniteGroupoid group_by_name(std::string_view name) {
  if (name == "S3") return symmetric_group3();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') parse_error("unknown group '" + std::string(name) + "'");
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 8) parse_error("cyclic groups are supported up to Z8");
    }
    if (n == 0) parse_error("Z0 is not a group");
    return cyclic_group(n);
  }
  parse_error("unknown group '" + std::string(name) + "'");
}

Json relation_to_json(std::span<const ElemPair> pairs) {
  Json a = Json::array();
  for (auto [r, s] : pairs) a.push_back({r, s});
  return {{"pairs", a}};
}

std::vector<ElemPair> relation_from_json(const Json& doc, std::size_t n) {
  std::vector<ElemPair> out;
  for (const auto& p : array_field(doc, "pairs")) {
    auto t = tuple(p, 2, n, "pairs");
    out.emplace_back(t[0], t[1]);
  }
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string json_digest(const Json& doc) { return fnv1a_hex(doc.dump()); }

}  // namespace openq
