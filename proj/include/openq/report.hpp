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

#ifndef OPENQ_REPORT_HPP_
#define OPENQ_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "openq/io.hpp"
#include "openq/openness.hpp"
#include "openq/pullback.hpp"

namespace openq {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

// Machine-readable run record. Everything except "timing" is a function of
// the inputs and the seed; "content_digest" covers exactly that part.
struct RunReport {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t seed = 0;
  Json inputs = Json::object();   // name -> {"digest", "document"}
  Json checks = Json::array();    // see make_check
  Json outputs = Json::object();  // name -> {"digest", "document"}
  Json timing = Json::object();

  void add_input(const std::string& name, const Json& doc);
  void add_output(const std::string& name, const Json& doc);
  void add_check(Json check) { checks.push_back(std::move(check)); }
  bool passed() const;
  Json to_json() const;
};

// {"name", "kind", "subject", "passed"}; witness and detail are attached by
// the helpers below.
Json make_check(const std::string& name, const std::string& kind, const std::string& subject, bool passed);
Json coverage_json(const Coverage& c);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
std::string word_text(const PullbackContext& ctx, const Word& w);

template <InvQuantale Q, InvQuantale X>
Json semiopen_check(const QuantaleMap<Q, X>& p, const SemiopenVerdict<Q, X>& v, const std::string& subject) {
  Json c = make_check("semiopen", "semiopen", subject, v.semiopen);
  c["coverage"] = coverage_json(v.coverage);
  c["has_direct_image"] = p.has_direct_image();
  if (v.witness) {
    c["witness"] = {{"a", p.source->element_json(v.witness->a)},
                    {"x", p.target->element_json(v.witness->x)},
                    {"text", p.source->describe(v.witness->a) + " / " + p.target->describe(v.witness->x)}};
  }
  if (v.missing_direct_image) c["error"] = "an effective map must supply its direct image";
  return c;
}

template <InvQuantale Q, InvQuantale X>
Json frobenius_check(const QuantaleMap<Q, X>& p, const FrobeniusVerdict<Q, X>& v, const std::string& subject) {
  const std::string law(to_string(v.law));
  Json c = make_check(law, "frobenius", subject, v.holds());
  c["law"] = law;
  c["coverage"] = coverage_json(v.coverage);
  if (v.witness) {
    const auto& w = *v.witness;
    Json wj{{"a", p.source->element_json(w.a)}, {"x", p.target->element_json(w.x)}};
    std::string text = "a = " + p.source->describe(w.a) + ", x = " + p.target->describe(w.x);
    if (w.b) {
      wj["b"] = p.source->element_json(*w.b);
      text += ", b = " + p.source->describe(*w.b);
    }
    auto [l, r] = frobenius_sides(p, v.law, w.a, w.x, w.b);
    wj["lhs"] = p.target->describe(l);
    wj["rhs"] = p.target->describe(r);
    wj["text"] = text;
    c["witness"] = wj;
  }
  return c;
}

Json surjectivity_check(const FiniteInvQuantale& x, const SurjectivityVerdict& v, const std::string& subject);

// Replays a Frobenius witness from a check entry: true when the two sides
// still differ.
template <InvQuantale Q, InvQuantale X>
bool replay_frobenius(const QuantaleMap<Q, X>& p, const Json& check) {
  const auto& w = check.at("witness");
  FrobeniusLaw law = FrobeniusLaw::Left;
  const std::string name = check.at("law").get<std::string>();
  if (name == to_string(FrobeniusLaw::Right)) law = FrobeniusLaw::Right;
  if (name == to_string(FrobeniusLaw::TwoSided)) law = FrobeniusLaw::TwoSided;
  auto a = p.source->parse_element(w.at("a"));
  auto x = p.target->parse_element(w.at("x"));
  std::optional<typename Q::element_type> b;
  if (w.contains("b")) b = p.source->parse_element(w.at("b"));
  auto [l, r] = frobenius_sides(p, law, a, x, b);
  return !(l == r);
}

// Pullback verification as report checks, one per family, one for the
// adjunction chain, one for Beck-Chevalley and one per case shape.
void add_pullback_checks(RunReport& report, const PullbackContext& ctx, const HRespectReport& h,
                         const AdjunctionReport& adj, const BeckChevalleyReport& bc,
                         const PullbackFrobeniusReport& pf);

struct VerifyOutcome {
  std::size_t checks = 0;
  std::size_t replayed = 0;  // witnesses or traces re-evaluated
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Re-checks a report without repeating any search: input digests, the
// overall verdict, every failing witness and every emitted rewrite trace.
VerifyOutcome verify_report(const Json& report);

}  // namespace openq

#endif  // OPENQ_REPORT_HPP_
