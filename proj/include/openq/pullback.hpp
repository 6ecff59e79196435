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

#ifndef OPENQ_PULLBACK_HPP_
#define OPENQ_PULLBACK_HPP_

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "openq/freeprod.hpp"
#include "openq/openness.hpp"

namespace openq {

// Data for the pullback of p: Q -> X along f: Y -> X, presented as a
// quotient of Y*Q.
struct PullbackContext {
  FiniteMap p;  // with direct image
  FiniteMap f;
  std::shared_ptr<const TruncatedFreeProduct> algebra;
  std::vector<Elem> p_star, p_lower, f_star;
  // False for contexts built without the FR1/FR2/surjectivity check.
  bool checked = false;

  const FiniteInvQuantale& x() const { return *p.target; }
  const FiniteInvQuantale& y() const { return *f.source; }
  const FiniteInvQuantale& q() const { return *p.source; }
  std::size_t truncation() const { return algebra->truncation(); }
};

// Throws HypothesisFailure unless p is a semiopen surjection satisfying FR1
// and FR2; a missing p_! is derived. Both inverse images must be
// homomorphisms and f must land in the target of p.
PullbackContext make_pullback_context(const FiniteMap& p, const FiniteMap& f,
                                      std::size_t truncation = TruncatedFreeProduct::kDefaultTruncation);
// Only semiopenness is required. For negative controls.
PullbackContext make_unchecked_pullback_context(const FiniteMap& p, const FiniteMap& f,
                                                std::size_t truncation = TruncatedFreeProduct::kDefaultTruncation);

// The nine shapes of generating relations. In each, the left word carries
// p*(x) and the right word f*(x); tau and tau' are pure-tensor flanks.
enum class Family {
  Bare,     // (p*x) ~ (f*x)
  LeadQ,    // (p*x a) tau ~ (f*x, a) tau
  LeadY,    // (p*x, y) tau ~ (f*x y) tau
  TrailQ,   // tau (a p*x) ~ tau (a, f*x)
  TrailY,   // tau (y, p*x) ~ tau (y f*x)
  InnerQQ,  // tau (a p*x a') tau' ~ tau (a, f*x, a') tau'
  InnerYQ,  // tau (y, p*x a) tau' ~ tau (y f*x, a) tau'
  InnerQY,  // tau (a p*x, y) tau' ~ tau (a, f*x y) tau'
  InnerYY,  // tau (y, p*x, y') tau' ~ tau (y f*x y') tau'
};
inline constexpr std::size_t kFamilyCount = 9;
inline constexpr std::array<Family, kFamilyCount> kFamilies = {
    Family::Bare,    Family::LeadQ,   Family::LeadY,   Family::TrailQ, Family::TrailY,
    Family::InnerQQ, Family::InnerYQ, Family::InnerQY, Family::InnerYY};

enum class Hypothesis { Surjectivity, FR1, FR2 };

std::string_view to_string(Family f);
std::string_view to_string(Hypothesis h);
std::string_view family_shape(Family f);
// Hypothesis on p that makes h respect the family.
Hypothesis family_hypothesis(Family f);

struct RelationInstance {
  Family family;
  Elem x = 0;
  Word left, right;
};

// Visits every instance whose longer side has at most maxlen letters, over
// all x in X, all letters and all flanks. Throws TruncationOverflow if such
// words can leave the truncation (2 * maxlen > N).
void for_each_relation_instance(const PullbackContext& ctx, std::size_t maxlen,
                                const std::function<void(const RelationInstance&)>& visit);
std::vector<RelationInstance> pullback_relation_instances(const PullbackContext& ctx, std::size_t maxlen);

// h on words: Y-letters stay, a Q-letter a becomes f*(p_!(a)), multiplied in Y.
Elem h_word(const PullbackContext& ctx, const Word& w);
// h on a graded element: join over its generators.
Elem h_graded(const PullbackContext& ctx, const GradedElement& a);

struct FamilyReport {
  Family family;
  Hypothesis hypothesis;
  std::size_t instances = 0;
  std::size_t failures = 0;
  struct Failure {
    RelationInstance instance;
    Elem h_left = 0, h_right = 0;
  };
  std::optional<Failure> first_failure;
};

struct HRespectReport {
  std::size_t maxlen = 0;
  std::vector<FamilyReport> families;
  bool ok() const;
};

HRespectReport verify_h_respects(const PullbackContext& ctx, std::size_t maxlen);

enum class ChainStepKind { Unit, Rewrite };

struct ChainStep {
  ChainStepKind kind;
  std::optional<Family> family;  // for rewrites
  Elem x = 0;                    // the p*(x) letter rewritten
  Word before, after;
};

struct ChainTrace {
  Word word;
  std::vector<ChainStep> steps;
  Elem result = 0;  // the final single Y-letter
  std::optional<std::size_t> failed_step;
  std::string failure;
};

struct AdjunctionReport {
  std::size_t maxlen = 0;
  bool counit_ok = true;
  std::optional<Elem> counit_failure;
  std::size_t words = 0;
  std::size_t failures = 0;
  struct Failure {
    Word word;
    std::size_t step = 0;
    std::string reason;
  };
  std::optional<Failure> first_failure;
  std::array<std::size_t, kFamilyCount> rewrite_counts{};
  // Traces for the first few words of each length, kept for reports.
  std::vector<ChainTrace> sample_traces;
  // Scope: the chain is checked for words (pure tensors) only.
  static constexpr std::string_view kScope = "pure tensors within the length budget";
  bool ok() const { return counit_ok && failures == 0; }
};

// The unit chain: w <= w' with each Q-letter a replaced by p*(p_!(a))
// (componentwise and as bi-ideals), then w' rewritten to a single Y-letter
// by relation instances; the letter must be h(w).
ChainTrace unit_chain(const PullbackContext& ctx, const Word& w);
AdjunctionReport verify_adjunction_on_words(const PullbackContext& ctx, std::size_t maxlen,
                                            std::size_t traces_per_length = 4);

struct BeckChevalleyReport {
  struct Row {
    Elem a = 0;
    Elem by_word = 0, by_graded = 0, expected = 0;
  };
  std::vector<Row> rows;
  std::optional<Elem> failure;
  bool ok() const { return !failure; }
};

BeckChevalleyReport verify_beck_chevalley(const PullbackContext& ctx);

// Two-sided case shape: [tau] z pi1*(y) z' [tau'].
struct CaseShape {
  Side z = Side::Y, z_prime = Side::Y;
  bool left_flank = false, right_flank = false;
  std::size_t id() const;
  std::string name() const;
};
std::array<CaseShape, 16> all_case_shapes();

struct CaseReport {
  CaseShape shape;
  std::size_t instances = 0;
  std::size_t failures = 0;
  struct Failure {
    Word alpha, beta;
    Elem y = 0;
    Elem lhs = 0, rhs = 0;
  };
  std::optional<Failure> first_failure;
};

struct PullbackFrobeniusReport {
  std::size_t maxlen = 0;
  std::size_t flank_max = 0;
  std::size_t one_sided_instances = 0;
  std::size_t one_sided_failures = 0;
  std::optional<CaseReport::Failure> one_sided_failure;
  std::vector<CaseReport> cases;
  // Every shape must have been exercised.
  bool ok() const;
};

// h(w pi1*(y)) = h(w) y and h(pi1*(y) w) = y h(w) for words of length
// <= maxlen, and the sixteen two-sided shapes with present flanks of
// 1..flank_max letters. h is evaluated on words, so these products are not
// truncated.
PullbackFrobeniusReport verify_pullback_frobenius(const PullbackContext& ctx, std::size_t maxlen,
                                                  std::size_t flank_max = 1);

// All alternating words with length in [min_len, max_len]; first/last side
// constraints optional.
void for_each_word(const FiniteInvQuantale& y, const FiniteInvQuantale& q, std::size_t min_len, std::size_t max_len,
                   std::optional<Side> first, std::optional<Side> last, const std::function<void(const Word&)>& visit);

}  // namespace openq

#endif  // OPENQ_PULLBACK_HPP_
