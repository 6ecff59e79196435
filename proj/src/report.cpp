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

#include "openq/report.hpp"

#include <functional>
#include <map>

namespace openq {

void RunReport::add_input(const std::string& name, const Json& doc) {
  inputs[name] = {{"digest", json_digest(doc)}, {"document", doc}};
}

void RunReport::add_output(const std::string& name, const Json& doc) {
  outputs[name] = {{"digest", json_digest(doc)}, {"document", doc}};
}

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.at("passed").get<bool>()) return false;
  return true;
}

Json RunReport::to_json() const {
  Json doc{{"schema_version", kReportSchemaVersion},
           {"tool", {{"name", "openq"}, {"version", kToolVersion}}},
           {"command", command},
           {"arguments", arguments},
           {"seed", seed},
           {"inputs", inputs},
           {"checks", checks},
           {"outputs", outputs},
           {"passed", passed()}};
  doc["content_digest"] = json_digest(doc);
  doc["timing"] = timing;
  return doc;
}

Json make_check(const std::string& name, const std::string& kind, const std::string& subject, bool passed) {
  return {{"name", name}, {"kind", kind}, {"subject", subject}, {"passed", passed}};
}

Json coverage_json(const Coverage& c) {
  Json j{{"mode", c.mode == CheckMode::Exhaustive ? "exhaustive" : "sampled"}, {"evaluations", c.evaluations}};
  if (c.mode == CheckMode::Sampled) {
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  }
  return j;
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (const auto& l : w) a.push_back({std::string(1, side_char(l.side)), l.value});
  return a;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "a word must be an array of letters");
  Word w;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_unsigned())
      throw Error(ErrorKind::Parse, "a letter must be [\"Y\"|\"Q\", index]");
    const auto s = l[0].get<std::string>();
    if (s != "Y" && s != "Q") throw Error(ErrorKind::Parse, "letter side must be Y or Q");
    w.push_back({s == "Y" ? Side::Y : Side::Q, l[1].get<Elem>()});
  }
  return w;
}

std::string word_text(const PullbackContext& ctx, const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += (w[i].side == Side::Y ? ctx.y() : ctx.q()).describe(w[i].value);
  }
  return s + ")";
}

Json surjectivity_check(const FiniteInvQuantale& x, const SurjectivityVerdict& v, const std::string& subject) {
  Json c = make_check("surjective", "surjectivity", subject, v.surjective);
  c["method"] = v.method == SurjectivityMethod::DirectImageRoundTrip ? "direct-image-round-trip"
                                                                      : "inverse-image-injective";
  if (v.witness) c["witness"] = {{"x", *v.witness}, {"text", x.describe(static_cast<Elem>(*v.witness))}};
  return c;
}

namespace {

Json trace_json(const PullbackContext& ctx, const ChainTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j{{"kind", s.kind == ChainStepKind::Unit ? "unit" : "rewrite"},
           {"before", word_to_json(s.before)},
           {"after", word_to_json(s.after)},
           {"text", word_text(ctx, s.before) + " -> " + word_text(ctx, s.after)}};
    if (s.family) {
      j["family"] = std::string(to_string(*s.family));
      j["x"] = s.x;
    }
    steps.push_back(std::move(j));
  }
  return {{"word", word_to_json(t.word)}, {"steps", steps}, {"result", t.result},
          {"result_text", ctx.y().describe(t.result)}};
}

}  // namespace

void add_pullback_checks(RunReport& report, const PullbackContext& ctx, const HRespectReport& h,
                         const AdjunctionReport& adj, const BeckChevalleyReport& bc,
                         const PullbackFrobeniusReport& pf) {
  const Json ctx_detail{{"truncation", ctx.truncation()}, {"checked", ctx.checked}};
  for (const auto& fr : h.families) {
    Json c = make_check(std::string("h-respects ") + std::string(to_string(fr.family)), "pullback-family", "p,f",
                        fr.failures == 0);
    c["context"] = ctx_detail;
    c["family"] = std::string(to_string(fr.family));
    c["shape"] = std::string(family_shape(fr.family));
    c["hypothesis"] = std::string(to_string(fr.hypothesis));
    c["maxlen"] = h.maxlen;
    c["instances"] = fr.instances;
    c["failures"] = fr.failures;
    if (fr.first_failure) {
      const auto& f = *fr.first_failure;
      c["witness"] = {{"x", f.instance.x},
                      {"left", word_to_json(f.instance.left)},
                      {"right", word_to_json(f.instance.right)},
                      {"h_left", f.h_left},
                      {"h_right", f.h_right},
                      {"text", "x = " + ctx.x().describe(f.instance.x) + ": " + word_text(ctx, f.instance.left) +
                                   " ~ " + word_text(ctx, f.instance.right) + ", h = " + ctx.y().describe(f.h_left) +
                                   " vs " + ctx.y().describe(f.h_right)}};
    }
    report.add_check(std::move(c));
  }

  Json c = make_check("adjunction on words", "pullback-adjunction", "p,f", adj.ok());
  c["context"] = ctx_detail;
  c["maxlen"] = adj.maxlen;
  c["scope"] = std::string(AdjunctionReport::kScope);
  c["counit_ok"] = adj.counit_ok;
  if (adj.counit_failure) c["counit_failure"] = *adj.counit_failure;
  c["words"] = adj.words;
  c["failures"] = adj.failures;
  Json counts = Json::object();
  for (Family f : kFamilies)
    if (adj.rewrite_counts[static_cast<std::size_t>(f)])
      counts[std::string(to_string(f))] = adj.rewrite_counts[static_cast<std::size_t>(f)];
  c["rewrite_counts"] = counts;
  Json traces = Json::array();
  for (const auto& t : adj.sample_traces) traces.push_back(trace_json(ctx, t));
  c["traces"] = traces;
  if (adj.first_failure)
    c["witness"] = {{"word", word_to_json(adj.first_failure->word)},
                    {"step", adj.first_failure->step},
                    {"reason", adj.first_failure->reason},
                    {"text", word_text(ctx, adj.first_failure->word)}};
  report.add_check(std::move(c));

  Json b = make_check("Beck-Chevalley", "beck-chevalley", "p,f", bc.ok());
  b["context"] = ctx_detail;
  Json rows = Json::array();
  for (const auto& r : bc.rows)
    rows.push_back({{"a", r.a}, {"by_word", r.by_word}, {"by_graded", r.by_graded}, {"expected", r.expected}});
  b["rows"] = rows;
  if (bc.failure) b["witness"] = {{"a", *bc.failure}, {"text", ctx.q().describe(*bc.failure)}};
  report.add_check(std::move(b));

  auto case_witness = [&](const CaseReport::Failure& f) {
    return Json{{"alpha", word_to_json(f.alpha)},
                {"beta", word_to_json(f.beta)},
                {"y", f.y},
                {"lhs", f.lhs},
                {"rhs", f.rhs},
                {"text", word_text(ctx, f.alpha) + " . " + ctx.y().describe(f.y) + " . " + word_text(ctx, f.beta)}};
  };
  Json o = make_check("pullback Frobenius one-sided", "pullback-one-sided", "p,f", pf.one_sided_failures == 0);
  o["context"] = ctx_detail;
  o["maxlen"] = pf.maxlen;
  o["instances"] = pf.one_sided_instances;
  o["failures"] = pf.one_sided_failures;
  if (pf.one_sided_failure) o["witness"] = case_witness(*pf.one_sided_failure);
  report.add_check(std::move(o));
  for (const auto& cr : pf.cases) {
    Json k = make_check("pullback Frobenius " + cr.shape.name(), "pullback-case", "p,f",
                        cr.failures == 0 && cr.instances > 0);
    k["context"] = ctx_detail;
    k["shape_id"] = cr.shape.id();
    k["flank_max"] = pf.flank_max;
    k["instances"] = cr.instances;
    k["failures"] = cr.failures;
    if (cr.first_failure) k["witness"] = case_witness(*cr.first_failure);
    report.add_check(std::move(k));
  }
}

namespace {

std::optional<QuantaleAxiom> axiom_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(QuantaleAxiom::Unit); ++i)
    if (to_string(static_cast<QuantaleAxiom>(i)) == s) return static_cast<QuantaleAxiom>(i);
  return std::nullopt;
}

// True when the recorded elements still violate the axiom.
bool axiom_violated(const FiniteInvQuantale& q, QuantaleAxiom ax, const std::vector<Elem>& w) {
  auto at = [&](std::size_t i) {
    if (i >= w.size() || w[i] >= q.size()) throw Error(ErrorKind::Parse, "axiom witness has bad elements");
    return w[i];
  };
  switch (ax) {
    case QuantaleAxiom::TableShape: return false;
    case QuantaleAxiom::BottomAbsorbsLeft: return q.mult(q.bottom(), at(0)) != q.bottom();
    case QuantaleAxiom::BottomAbsorbsRight: return q.mult(at(0), q.bottom()) != q.bottom();
    case QuantaleAxiom::Associativity:
      return q.mult(q.mult(at(0), at(1)), at(2)) != q.mult(at(0), q.mult(at(1), at(2)));
    case QuantaleAxiom::DistributesLeft:
      return q.mult(at(0), q.join(at(1), at(2))) != q.join(q.mult(at(0), at(1)), q.mult(at(0), at(2)));
    case QuantaleAxiom::DistributesRight:
      return q.mult(q.join(at(1), at(2)), at(0)) != q.join(q.mult(at(1), at(0)), q.mult(at(2), at(0)));
    case QuantaleAxiom::InvolutionSelfInverse: return q.inv(q.inv(at(0))) != at(0);
    case QuantaleAxiom::InvolutionMonotone: return q.leq(at(0), at(1)) && !q.leq(q.inv(at(0)), q.inv(at(1)));
    case QuantaleAxiom::InvolutionAntiMultiplicative:
      return q.inv(q.mult(at(0), at(1))) != q.mult(q.inv(at(1)), q.inv(at(0)));
    case QuantaleAxiom::InvolutionPreservesJoins:
      return q.inv(q.join(at(0), at(1))) != q.join(q.inv(at(0)), q.inv(at(1)));
    case QuantaleAxiom::Unit: return q.mult(at(0), at(1)) != at(1) || q.mult(at(1), at(0)) != at(1);
  }
  return false;
}

struct Verifier {
  const Json& report;
  VerifyOutcome out;
  std::map<std::string, MapDocument> maps;

  void problem(const std::string& check, const std::string& what) { out.problems.push_back(check + ": " + what); }

  const Json& input(const std::string& name) {
    const auto& in = report.at("inputs");
    if (!in.contains(name)) throw Error(ErrorKind::Parse, "report lacks input '" + name + "'");
    return in.at(name).at("document");
  }

  const MapDocument& map(const std::string& name) {
    auto it = maps.find(name);
    if (it == maps.end()) it = maps.emplace(name, map_from_json(input(name))).first;
    return it->second;
  }

  template <class F>
  void with_map(const std::string& name, F&& f) {
    const MapDocument& m = map(name);
    if (const auto* fm = std::get_if<FiniteMap>(&m)) {
      f(*fm);
    } else {
      f(build_effective_map(std::get<EffectiveMapSpec>(m)));
    }
  }

  PullbackContext context(const Json& c) {
    const auto& d = c.at("context");
    auto p = finite_map_from_json(input("p"));
    auto f = finite_map_from_json(input("f"));
    const auto n = d.at("truncation").get<std::size_t>();
    return d.at("checked").get<bool>() ? make_pullback_context(p, f, n) : make_unchecked_pullback_context(p, f, n);
  }

  void replayed(bool reproduced, const std::string& name) {
    ++out.replayed;
    if (!reproduced) problem(name, "witness does not reproduce");
  }

  void check_trace(const PullbackContext& ctx, const Json& t, const std::string& name) {
    const Word w = word_from_json(t.at("word"));
    const auto& steps = t.at("steps");
    if (steps.empty()) return problem(name, "empty trace");
    Word cur = w;
    for (const auto& s : steps) {
      const Word before = word_from_json(s.at("before")), after = word_from_json(s.at("after"));
      if (before != cur) return problem(name, "trace steps do not chain");
      if (s.at("kind") == "unit") {
        for (std::size_t i = 0; i < before.size(); ++i)
          if (after.size() != before.size() || after[i].side != before[i].side ||
              !(before[i].side == Side::Y ? ctx.y() : ctx.q()).leq(before[i].value, after[i].value))
            return problem(name, "unit step is not componentwise increasing");
      } else if (h_word(ctx, before) != h_word(ctx, after)) {
        return problem(name, "rewrite step changes h");
      }
      cur = after;
    }
    if (cur.size() != 1 || cur[0].side != Side::Y || cur[0].value != t.at("result").get<Elem>() ||
        cur[0].value != h_word(ctx, w))
      problem(name, "trace does not end at h(w)");
    ++out.replayed;
  }

  void verify_check(const Json& c) {
    ++out.checks;
    const std::string name = c.at("name").get<std::string>();
    const std::string kind = c.at("kind").get<std::string>();
    const std::string subject = c.at("subject").get<std::string>();
    const bool passed = c.at("passed").get<bool>();
    const bool has_witness = c.contains("witness");
    if (kind == "lattice") {
      if (passed) return;
      try {
        lattice_from_json(input(subject).contains("lattice") ? input(subject).at("lattice") : input(subject));
        replayed(false, name);
      } catch (const Error& e) {
        replayed(std::string(to_string(e.kind())) == c.at("error_kind").get<std::string>(), name);
      }
      return;
    }
    if (kind == "quantale-axioms") {
      if (passed) return;
      auto q = quantale_from_json(input(subject));
      auto ax = axiom_from_string(c.at("witness").at("axiom").get<std::string>());
      if (!ax) return problem(name, "unknown axiom");
      replayed(axiom_violated(q, *ax, c.at("witness").at("elements").get<std::vector<Elem>>()), name);
      return;
    }
    if (kind == "hom") {
      if (passed) return;
      with_map(subject, [&](const auto& p) {
        const auto& w = c.at("witness");
        const auto law = w.at("law").get<std::string>();
        auto el = w.at("elements");
        const auto& x = *p.target;
        const auto& q = *p.source;
        auto a = x.parse_element(el.at(0));
        bool bad = false;
        if (law == "bottom") bad = !(p.inverse_image(x.bottom()) == q.bottom());
        if (law == "involution") bad = !(p.inverse_image(x.inv(a)) == q.inv(p.inverse_image(a)));
        if (law == "joins" || law == "multiplication") {
          auto b = x.parse_element(el.at(1));
          bad = law == "joins" ? !(p.inverse_image(x.join(a, b)) == q.join(p.inverse_image(a), p.inverse_image(b)))
                               : !(p.inverse_image(x.mult(a, b)) == q.mult(p.inverse_image(a), p.inverse_image(b)));
        }
        replayed(bad, name);
      });
      return;
    }
    if (kind == "semiopen") {
      if (passed || !has_witness) return;
      with_map(subject, [&](const auto& p) {
        const auto& w = c.at("witness");
        auto a = p.source->parse_element(w.at("a"));
        auto x = p.target->parse_element(w.at("x"));
        if (p.has_direct_image()) {
          replayed(p.target->leq(p.direct_image(a), x) != p.source->leq(a, p.inverse_image(x)), name);
        } else if constexpr (std::is_same_v<std::decay_t<decltype(p)>, FiniteMap>) {
          // (m, l) with the candidate g(m) = meet { l : m <= p*(l) }.
          const auto& xq = *p.target;
          Elem g = xq.top();
          for (Elem l = 0; l < xq.size(); ++l)
            if (p.source->leq(a, p.inverse_image(l))) g = xq.meet(g, l);
          replayed(xq.leq(g, x) != p.source->leq(a, p.inverse_image(x)), name);
        }
      });
      return;
    }
    if (kind == "frobenius" || kind == "frobenius-expected-failure") {
      if (!has_witness) {
        if (kind != "frobenius" && passed) problem(name, "expected failure recorded without a witness");
        return;
      }
      with_map(subject, [&](const auto& p) {
        auto s = check_semiopen(p);
        if (!s.map) return problem(name, "map is not semiopen on replay");
        replayed(replay_frobenius(*s.map, c), name);
      });
      return;
    }
    if (kind == "surjectivity") {
      if (passed) return;
      with_map(subject, [&](const auto& p) {
        auto s = check_semiopen(p);
        const Elem x = c.at("witness").at("x").get<Elem>();
        if (s.map) {
          replayed(!(s.map->direct_image(s.map->inverse_image(x)) == x), name);
        } else {
          bool dup = false;
          for (Elem y = 0; y < x; ++y) dup = dup || p.inverse_image(y) == p.inverse_image(x);
          replayed(dup, name);
        }
      });
      return;
    }
    if (kind == "wos" || kind == "fr2-implies-fr1") {
      const bool applicable = c.at("applicable").get<bool>();
      const bool expected =
          kind == "wos" ? (!applicable || c.at("unit_roundtrip").get<bool>() == c.at("surjective").get<bool>())
                        : (!applicable || c.at("fr1").get<bool>());
      if (expected != passed) problem(name, "verdict inconsistent with its recorded parts");
      return;
    }
    if (kind == "locale-meet") {
      if (!has_witness) return;
      const auto& p = std::get<FiniteMap>(map(subject));
      auto s = check_semiopen(p);
      if (!s.map) return problem(name, "map is not semiopen on replay");
      const Elem a = c.at("witness").at("a").get<Elem>(), x = c.at("witness").at("x").get<Elem>();
      const auto& m = *s.map;
      replayed(m.direct_image(m.source->meet(a, m.inverse_image(x))) != m.target->meet(m.direct_image(a), x), name);
      return;
    }
    if (kind == "pullback-hypotheses") {
      const auto& d = c.at("context");
      try {
        make_pullback_context(finite_map_from_json(input("p")), finite_map_from_json(input("f")),
                              d.at("truncation").get<std::size_t>());
        replayed(false, name);
      } catch (const Error& e) {
        replayed(e.kind() == ErrorKind::HypothesisFailure, name);
      }
      return;
    }
    if (kind == "quotient") {
      auto q = share(quantale_from_json(input("quantale")));
      auto rel = relation_from_json(input("relation"), q->size());
      const Json doc = quantale_to_json(*quotient(nucleus_from_relation(q, rel)).quantale);
      const auto& outs = report.at("outputs");
      if (!outs.contains("quotient") || outs.at("quotient").at("digest").get<std::string>() != json_digest(doc))
        problem(name, "quotient does not recompute");
      ++out.replayed;
      return;
    }
    if (kind == "pullback-family") {
      if (!has_witness) return;
      auto ctx = context(c);
      const auto& w = c.at("witness");
      replayed(h_word(ctx, word_from_json(w.at("left"))) != h_word(ctx, word_from_json(w.at("right"))), name);
      return;
    }
    if (kind == "pullback-adjunction") {
      auto ctx = context(c);
      for (const auto& t : c.at("traces")) check_trace(ctx, t, name);
      if (has_witness) replayed(unit_chain(ctx, word_from_json(c.at("witness").at("word"))).failed_step.has_value(),
                                name);
      return;
    }
    if (kind == "beck-chevalley") {
      auto ctx = context(c);
      for (const auto& r : c.at("rows")) {
        const Elem a = r.at("a").get<Elem>();
        const Elem expected = ctx.f_star[ctx.p_lower[a]];
        if (r.at("expected").get<Elem>() != expected || r.at("by_word").get<Elem>() != h_word(ctx, {{Side::Q, a}}))
          problem(name, "row for " + std::to_string(a) + " does not recompute");
        ++out.replayed;
      }
      return;
    }
    if (kind == "pullback-one-sided" || kind == "pullback-case") {
      if (!has_witness) return;
      auto ctx = context(c);
      const auto& w = c.at("witness");
      const Word alpha = word_from_json(w.at("alpha")), beta = word_from_json(w.at("beta"));
      const Elem y = w.at("y").get<Elem>();
      const auto& alg = *ctx.algebra;
      const Elem lhs = h_word(ctx, alg.multiply(alg.multiply(alpha, {{Side::Y, y}}), beta));
      const Elem rhs = ctx.y().mult(ctx.y().mult(h_word(ctx, alpha), y), h_word(ctx, beta));
      replayed(lhs != rhs, name);
      return;
    }
    // Remaining kinds carry counts only; nothing to replay.
    if (!passed && !has_witness && kind != "tensor" && kind != "example")
      problem(name, "failing check without a witness");
  }
};

}  // namespace

VerifyOutcome verify_report(const Json& report) {
  Verifier v{report, {}, {}};
  try {
    if (report.at("schema_version").get<int>() != kReportSchemaVersion) {
      v.out.problems.push_back("unsupported schema version");
      return v.out;
    }
    for (const auto& [name, in] : report.at("inputs").items())
      if (json_digest(in.at("document")) != in.at("digest").get<std::string>())
        v.problem("input " + name, "digest mismatch");
    for (const auto& [name, o] : report.at("outputs").items())
      if (json_digest(o.at("document")) != o.at("digest").get<std::string>())
        v.problem("output " + name, "digest mismatch");
    Json content = report;
    content.erase("timing");
    content.erase("content_digest");
    if (json_digest(content) != report.at("content_digest").get<std::string>())
      v.problem("report", "content digest mismatch");
    bool all = true;
    for (const auto& c : report.at("checks")) {
      all = all && c.at("passed").get<bool>();
      v.verify_check(c);
    }
    if (all != report.at("passed").get<bool>()) v.problem("report", "overall verdict inconsistent with checks");
  } catch (const Json::exception& e) {
    v.out.problems.push_back(std::string("malformed report: ") + e.what());
  }
  return v.out;
}

}  // namespace openq
