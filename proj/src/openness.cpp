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

#include "openq/openness.hpp"

namespace openq {

std::string_view to_string(FrobeniusLaw law) {
  switch (law) {
    case FrobeniusLaw::Left: return "FR1";
    case FrobeniusLaw::Right: return "FR1-right";
    case FrobeniusLaw::TwoSided: return "FR2";
  }
  return "?";
}

LocaleMeetReport check_locale_meet_lemma(const FiniteMap& p) {
  const auto& q = *p.source;
  const auto& x = *p.target;
  if (!is_locale(q) || !is_locale(x)) throw Error(ErrorKind::NotALocale, "meet lemma needs locales on both ends");
  LocaleMeetReport r;
  auto s = check_semiopen(p);
  if (!s.map) return r;
  const auto& m = *s.map;
  r.applicable = check_fr2(m).holds();
  for (Elem a = 0; a < q.size() && !r.witness; ++a)
    for (Elem e = 0; e < x.size(); ++e)
      if (m.direct_image(q.meet(a, m.inverse_image(e))) != x.meet(m.direct_image(a), e)) {
        r.witness = std::make_pair(a, e);
        break;
      }
  if (r.applicable) r.holds = !r.witness;
  return r;
}

}  // namespace openq
