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

#include "openq/pullback.hpp"

#include <unordered_map>

namespace openq {

namespace {

PullbackContext build_context(const FiniteMap& p, const FiniteMap& f, std::size_t truncation, bool check) {
  if (!(*p.target == *f.target)) throw Error(ErrorKind::Usage, "f and p must share their target");
  if (auto v = validate_hom(p.inverse_image, *p.target, *p.source))
    throw Error(ErrorKind::InvalidHomomorphism, "p* is not a homomorphism", {v->witness.begin(), v->witness.end()});
  if (auto v = validate_hom(f.inverse_image, *f.target, *f.source))
    throw Error(ErrorKind::InvalidHomomorphism, "f* is not a homomorphism", {v->witness.begin(), v->witness.end()});
  auto s = check_semiopen(p);
  if (!s.map) {
    std::vector<std::size_t> w;
    if (s.verdict.witness) w = {s.verdict.witness->a, s.verdict.witness->x};
    throw Error(ErrorKind::HypothesisFailure, "p is not semiopen", std::move(w));
  }
  PullbackContext ctx;
  ctx.p = *s.map;
  ctx.f = f;
  ctx.checked = check;
  if (check) {
    if (auto v = check_fr1(ctx.p).witness) throw Error(ErrorKind::HypothesisFailure, "p fails FR1", {v->a, v->x});
    if (auto v = check_fr2(ctx.p).witness)
      throw Error(ErrorKind::HypothesisFailure, "p fails FR2", {v->a, v->x, *v->b});
    auto sv = is_surjective(ctx.p);
    if (!sv.surjective) throw Error(ErrorKind::HypothesisFailure, "p is not surjective", {*sv.witness});
  }
  ctx.p_star = inverse_table(ctx.p);
  ctx.p_lower = direct_table(ctx.p);
  ctx.f_star = inverse_table(ctx.f);
  ctx.algebra = std::make_shared<const TruncatedFreeProduct>(f.source, p.source, truncation);
  return ctx;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

void require_budget(const PullbackContext& ctx, std::size_t maxlen) {
  if (maxlen == 0) throw Error(ErrorKind::Usage, "maxlen must be positive");
  if (2 * maxlen > ctx.truncation())
    throw Error(ErrorKind::TruncationOverflow, "words of maxlen letters can leave the truncation",
                {2 * maxlen, ctx.truncation()});
}

// Flank words grouped by length, each with an optional side at the joint.
std::vector<std::vector<Word>> flanks(const PullbackContext& ctx, std::size_t max_len, std::optional<Side> first,
                                      std::optional<Side> last) {
  std::vector<std::vector<Word>> out(max_len + 1);
  out[0].push_back({});
  if (max_len == 0) return out;
  for_each_word(ctx.y(), ctx.q(), 1, max_len, first, last, [&](const Word& w) { out[w.size()].push_back(w); });
  return out;
}

}  // namespace

PullbackContext make_pullback_context(const FiniteMap& p, const FiniteMap& f, std::size_t truncation) {
  return build_context(p, f, truncation, true);
}

PullbackContext make_unchecked_pullback_context(const FiniteMap& p, const FiniteMap& f, std::size_t truncation) {
  return build_context(p, f, truncation, false);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Bare: return "bare";
    case Family::LeadQ: return "lead-Q";
    case Family::LeadY: return "lead-Y";
    case Family::TrailQ: return "trail-Q";
    case Family::TrailY: return "trail-Y";
    case Family::InnerQQ: return "inner-QQ";
    case Family::InnerYQ: return "inner-YQ";
    case Family::InnerQY: return "inner-QY";
    case Family::InnerYY: return "inner-YY";
  }
  return "?";
}

std::string_view family_shape(Family f) {
  switch (f) {
    case Family::Bare: return "(p*x) ~ (f*x)";
    case Family::LeadQ: return "(p*x a) tau ~ (f*x, a) tau";
    case Family::LeadY: return "(p*x, y) tau ~ (f*x y) tau";
    case Family::TrailQ: return "tau (a p*x) ~ tau (a, f*x)";
    case Family::TrailY: return "tau (y, p*x) ~ tau (y f*x)";
    case Family::InnerQQ: return "tau (a p*x a') tau' ~ tau (a, f*x, a') tau'";
    case Family::InnerYQ: return "tau (y, p*x a) tau' ~ tau (y f*x, a) tau'";
    case Family::InnerQY: return "tau (a p*x, y) tau' ~ tau (a, f*x y) tau'";
    case Family::InnerYY: return "tau (y, p*x, y') tau' ~ tau (y f*x y') tau'";
  }
  return "?";
}

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Surjectivity: return "surjectivity";
    case Hypothesis::FR1: return "FR1";
    case Hypothesis::FR2: return "FR2";
  }
  return "?";
}

Hypothesis family_hypothesis(Family f) {
  switch (f) {
    case Family::Bare:
    case Family::LeadY:
    case Family::TrailY:
    case Family::InnerYY: return Hypothesis::Surjectivity;
    case Family::InnerQQ: return Hypothesis::FR2;
    default: return Hypothesis::FR1;
  }
}

void for_each_word(const FiniteInvQuantale& y, const FiniteInvQuantale& q, std::size_t min_len, std::size_t max_len,
                   std::optional<Side> first, std::optional<Side> last, const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void(Side)> extend = [&](Side s) {
    const std::size_t n = s == Side::Y ? y.size() : q.size();
    for (Elem v = 0; v < n; ++v) {
      w.push_back({s, v});
      if (w.size() >= min_len && (!last || *last == s)) visit(w);
      if (w.size() < max_len) extend(other(s));
      w.pop_back();
    }
  };
  for (Side s : {Side::Y, Side::Q})
    if ((!first || *first == s) && max_len > 0) extend(s);
}

void for_each_relation_instance(const PullbackContext& ctx, std::size_t maxlen,
                                const std::function<void(const RelationInstance&)>& visit) {
  require_budget(ctx, maxlen);
  const auto& Y = ctx.y();
  const auto& Q = ctx.q();
  const Elem nx = static_cast<Elem>(ctx.x().size()), ny = static_cast<Elem>(Y.size()),
             nq = static_cast<Elem>(Q.size());
  auto yl = [](Elem v) { return Letter{Side::Y, v}; };
  auto ql = [](Elem v) { return Letter{Side::Q, v}; };

  // Left flanks end on the given side, right flanks start on it.
  const auto left_y = flanks(ctx, maxlen, std::nullopt, Side::Y);
  const auto left_q = flanks(ctx, maxlen, std::nullopt, Side::Q);
  const auto right_y = flanks(ctx, maxlen, Side::Y, std::nullopt);
  const auto right_q = flanks(ctx, maxlen, Side::Q, std::nullopt);
  const std::vector<std::vector<Word>> none{{Word{}}};

  RelationInstance inst;
  auto emit = [&](Family fam, Elem x, const Word& cl, const Word& cr, const std::vector<std::vector<Word>>& lf,
                  const std::vector<std::vector<Word>>& rf) {
    const std::size_t core = std::max(cl.size(), cr.size());
    if (core > maxlen) return;
    const std::size_t budget = maxlen - core;
    inst.family = fam;
    inst.x = x;
    for (std::size_t i = 0; i < lf.size() && i <= budget; ++i)
      for (const auto& tl : lf[i])
        for (std::size_t j = 0; j < rf.size() && i + j <= budget; ++j)
          for (const auto& tr : rf[j]) {
            inst.left = concat(tl, cl, tr);
            inst.right = concat(tl, cr, tr);
            visit(inst);
          }
  };

  for (Elem x = 0; x < nx; ++x) {
    const Elem px = ctx.p_star[x], fx = ctx.f_star[x];
    emit(Family::Bare, x, {ql(px)}, {yl(fx)}, none, none);
    for (Elem a = 0; a < nq; ++a) {
      emit(Family::LeadQ, x, {ql(Q.mult(px, a))}, {yl(fx), ql(a)}, none, right_y);
      emit(Family::TrailQ, x, {ql(Q.mult(a, px))}, {ql(a), yl(fx)}, left_y, none);
      for (Elem a2 = 0; a2 < nq; ++a2)
        emit(Family::InnerQQ, x, {ql(Q.mult(Q.mult(a, px), a2))}, {ql(a), yl(fx), ql(a2)}, left_y, right_y);
    }
    for (Elem y = 0; y < ny; ++y) {
      emit(Family::LeadY, x, {ql(px), yl(y)}, {yl(Y.mult(fx, y))}, none, right_q);
      emit(Family::TrailY, x, {yl(y), ql(px)}, {yl(Y.mult(y, fx))}, left_q, none);
      for (Elem a = 0; a < nq; ++a) {
        emit(Family::InnerYQ, x, {yl(y), ql(Q.mult(px, a))}, {yl(Y.mult(y, fx)), ql(a)}, left_q, right_y);
        emit(Family::InnerQY, x, {ql(Q.mult(a, px)), yl(y)}, {ql(a), yl(Y.mult(fx, y))}, left_y, right_q);
      }
      for (Elem y2 = 0; y2 < ny; ++y2)
        emit(Family::InnerYY, x, {yl(y), ql(px), yl(y2)}, {yl(Y.mult(Y.mult(y, fx), y2))}, left_q, right_q);
    }
  }
}

std::vector<RelationInstance> pullback_relation_instances(const PullbackContext& ctx, std::size_t maxlen) {
  std::vector<RelationInstance> out;
  for_each_relation_instance(ctx, maxlen, [&](const RelationInstance& r) { out.push_back(r); });
  return out;
}

Elem h_word(const PullbackContext& ctx, const Word& w) {
  check_alternating(w);
  const auto& Y = ctx.y();
  Elem acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Elem v = w[i].side == Side::Y ? w[i].value : ctx.f_star[ctx.p_lower[w[i].value]];
    acc = i == 0 ? v : Y.mult(acc, v);
  }
  return acc;
}

Elem h_graded(const PullbackContext& ctx, const GradedElement& a) {
  const auto& Y = ctx.y();
  Elem acc = Y.bottom();
  for (const auto& w : ctx.algebra->generators(a)) acc = Y.join(acc, h_word(ctx, w));
  return acc;
}

bool HRespectReport::ok() const {
  for (const auto& f : families)
    if (f.failures) return false;
  return true;
}

HRespectReport verify_h_respects(const PullbackContext& ctx, std::size_t maxlen) {
  HRespectReport r;
  r.maxlen = maxlen;
  for (Family f : kFamilies) r.families.push_back(FamilyReport{f, family_hypothesis(f), 0, 0, std::nullopt});
  for_each_relation_instance(ctx, maxlen, [&](const RelationInstance& inst) {
    auto& fr = r.families[static_cast<std::size_t>(inst.family)];
    ++fr.instances;
    const Elem hl = h_word(ctx, inst.left), hr = h_word(ctx, inst.right);
    if (hl != hr) {
      ++fr.failures;
      if (!fr.first_failure) fr.first_failure = FamilyReport::Failure{inst, hl, hr};
    }
  });
  return r;
}

namespace {

using PureCache = std::unordered_map<std::string, BiIdeal>;

std::string word_key(const Word& w) {
  std::string k;
  for (const auto& l : w) {
    k += side_char(l.side);
    k += std::to_string(l.value);
    k += ',';
  }
  return k;
}

const BiIdeal& cached_pure(const PullbackContext& ctx, PureCache& cache, const Word& w) {
  auto key = word_key(w);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ctx.algebra->embed(w).at(grade_of(w).n)).first;
  return it->second;
}

ChainTrace unit_chain_impl(const PullbackContext& ctx, const Word& w, PureCache* cache) {
  ChainTrace t;
  t.word = w;
  const auto& Y = ctx.y();
  const auto& Q = ctx.q();
  auto fail = [&](std::string why) {
    t.failed_step = t.steps.size();
    t.failure = std::move(why);
    return t;
  };

  Word cur = w;
  std::vector<Elem> xs;
  for (auto& l : cur)
    if (l.side == Side::Q) {
      const Elem x = ctx.p_lower[l.value];
      if (!Q.leq(l.value, ctx.p_star[x])) return fail("a is not below p*(p_!(a))");
      xs.push_back(x);
      l.value = ctx.p_star[x];
    }
  if (cache && grade_of(w).n <= ctx.truncation()) {
    const BiIdeal& lo = cached_pure(ctx, *cache, w);
    const BiIdeal& hi = cached_pure(ctx, *cache, cur);
    if (!lo.leq(hi)) return fail("pure tensor not below its unit image");
  }
  t.steps.push_back({ChainStepKind::Unit, std::nullopt, 0, w, cur});

  std::size_t next_x = 0;
  while (true) {
    std::size_t i = 0;
    while (i < cur.size() && cur[i].side != Side::Q) ++i;
    if (i == cur.size()) break;
    const Elem x = xs[next_x++];
    const Elem fx = ctx.f_star[x];
    Word nxt;
    Family fam;
    if (cur.size() == 1) {
      fam = Family::Bare;
      nxt = {{Side::Y, fx}};
    } else if (i == 0) {
      fam = Family::LeadY;
      nxt = {{Side::Y, Y.mult(fx, cur[1].value)}};
      nxt.insert(nxt.end(), cur.begin() + 2, cur.end());
    } else if (i + 1 == cur.size()) {
      fam = Family::TrailY;
      nxt.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i - 1));
      nxt.push_back({Side::Y, Y.mult(cur[i - 1].value, fx)});
    } else {
      fam = Family::InnerYY;
      nxt.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i - 1));
      nxt.push_back({Side::Y, Y.mult(Y.mult(cur[i - 1].value, fx), cur[i + 1].value)});
      nxt.insert(nxt.end(), cur.begin() + static_cast<std::ptrdiff_t>(i + 2), cur.end());
    }
    if (h_word(ctx, cur) != h_word(ctx, nxt)) return fail("rewrite step changes h");
    t.steps.push_back({ChainStepKind::Rewrite, fam, x, cur, nxt});
    cur = std::move(nxt);
  }
  if (cur.size() != 1 || cur[0].side != Side::Y) return fail("chain did not end in a single Y-letter");
  t.result = cur[0].value;
  if (t.result != h_word(ctx, w)) return fail("chain result differs from h(w)");
  return t;
}

}  // namespace

ChainTrace unit_chain(const PullbackContext& ctx, const Word& w) {
  PureCache cache;
  return unit_chain_impl(ctx, w, &cache);
}

AdjunctionReport verify_adjunction_on_words(const PullbackContext& ctx, std::size_t maxlen,
                                            std::size_t traces_per_length) {
  require_budget(ctx, maxlen);
  AdjunctionReport r;
  r.maxlen = maxlen;
  for (Elem y = 0; y < ctx.y().size(); ++y)
    if (h_word(ctx, {{Side::Y, y}}) != y) {
      r.counit_ok = false;
      if (!r.counit_failure) r.counit_failure = y;
    }
  PureCache cache;
  std::vector<std::size_t> kept(maxlen + 1, 0);
  for_each_word(ctx.y(), ctx.q(), 1, maxlen, std::nullopt, std::nullopt, [&](const Word& w) {
    ++r.words;
    ChainTrace t = unit_chain_impl(ctx, w, &cache);
    for (const auto& s : t.steps)
      if (s.family) ++r.rewrite_counts[static_cast<std::size_t>(*s.family)];
    if (t.failed_step) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = AdjunctionReport::Failure{w, *t.failed_step, t.failure};
      return;
    }
    // Prefer traces of words without zero letters; they show every step.
    if (!ctx.algebra->is_zero(w) && kept[w.size()] < traces_per_length) {
      ++kept[w.size()];
      r.sample_traces.push_back(std::move(t));
    }
  });
  return r;
}

BeckChevalleyReport verify_beck_chevalley(const PullbackContext& ctx) {
  BeckChevalleyReport r;
  for (Elem a = 0; a < ctx.q().size(); ++a) {
    BeckChevalleyReport::Row row{a, 0, 0, 0};
    row.by_word = h_word(ctx, {{Side::Q, a}});
    row.by_graded = h_graded(ctx, ctx.algebra->pi2(a));
    row.expected = ctx.f.inverse_image(ctx.p.direct_image(a));
    r.rows.push_back(row);
    if ((row.by_word != row.expected || row.by_graded != row.expected) && !r.failure) r.failure = a;
  }
  return r;
}

std::size_t CaseShape::id() const {
  return (z == Side::Q ? 8u : 0u) + (z_prime == Side::Q ? 4u : 0u) + (left_flank ? 2u : 0u) + (right_flank ? 1u : 0u);
}

std::string CaseShape::name() const {
  std::string s;
  if (left_flank) s += "tau.";
  s += side_char(z);
  s += ".pi1(y).";
  s += side_char(z_prime);
  if (right_flank) s += ".tau'";
  return s;
}

std::array<CaseShape, 16> all_case_shapes() {
  std::array<CaseShape, 16> out{};
  for (std::size_t i = 0; i < 16; ++i) {
    out[i].z = (i & 8) ? Side::Q : Side::Y;
    out[i].z_prime = (i & 4) ? Side::Q : Side::Y;
    out[i].left_flank = (i & 2) != 0;
    out[i].right_flank = (i & 1) != 0;
  }
  return out;
}

bool PullbackFrobeniusReport::ok() const {
  if (one_sided_failures || cases.size() != 16) return false;
  for (const auto& c : cases)
    if (c.failures || c.instances == 0) return false;
  return true;
}

PullbackFrobeniusReport verify_pullback_frobenius(const PullbackContext& ctx, std::size_t maxlen,
                                                  std::size_t flank_max) {
  PullbackFrobeniusReport r;
  r.maxlen = maxlen;
  r.flank_max = flank_max;
  const auto& Y = ctx.y();
  const auto& alg = *ctx.algebra;

  for_each_word(Y, ctx.q(), 1, maxlen, std::nullopt, std::nullopt, [&](const Word& w) {
    const Elem hw = h_word(ctx, w);
    for (Elem y = 0; y < Y.size(); ++y) {
      const Word py{{Side::Y, y}};
      r.one_sided_instances += 2;
      const Elem l1 = h_word(ctx, alg.multiply(w, py)), r1 = Y.mult(hw, y);
      const Elem l2 = h_word(ctx, alg.multiply(py, w)), r2 = Y.mult(y, hw);
      if (l1 != r1 || l2 != r2) {
        ++r.one_sided_failures;
        if (!r.one_sided_failure) {
          r.one_sided_failure =
              l1 != r1 ? CaseReport::Failure{w, py, y, l1, r1} : CaseReport::Failure{py, w, y, l2, r2};
        }
      }
    }
  });

  for (const CaseShape& shape : all_case_shapes()) {
    CaseReport cr;
    cr.shape = shape;
    std::vector<Word> alphas, betas;
    const std::size_t nz = shape.z == Side::Y ? Y.size() : ctx.q().size();
    const std::size_t nz2 = shape.z_prime == Side::Y ? Y.size() : ctx.q().size();
    for (Elem v = 0; v < nz; ++v) {
      const Letter z{shape.z, v};
      if (!shape.left_flank) {
        alphas.push_back({z});
        continue;
      }
      for_each_word(Y, ctx.q(), 1, flank_max, std::nullopt, other(shape.z), [&](const Word& tau) {
        Word a = tau;
        a.push_back(z);
        alphas.push_back(std::move(a));
      });
    }
    for (Elem v = 0; v < nz2; ++v) {
      const Letter z2{shape.z_prime, v};
      if (!shape.right_flank) {
        betas.push_back({z2});
        continue;
      }
      for_each_word(Y, ctx.q(), 1, flank_max, other(shape.z_prime), std::nullopt, [&](const Word& tau) {
        Word b{z2};
        b.insert(b.end(), tau.begin(), tau.end());
        betas.push_back(std::move(b));
      });
    }
    std::vector<Elem> hb;
    for (const auto& b : betas) hb.push_back(h_word(ctx, b));
    for (const auto& a : alphas) {
      const Elem ha = h_word(ctx, a);
      for (Elem y = 0; y < Y.size(); ++y) {
        const Word ay = alg.multiply(a, {{Side::Y, y}});
        const Elem hay = Y.mult(ha, y);
        for (std::size_t j = 0; j < betas.size(); ++j) {
          ++cr.instances;
          const Elem lhs = h_word(ctx, alg.multiply(ay, betas[j]));
          const Elem rhs = Y.mult(hay, hb[j]);
          if (lhs != rhs) {
            ++cr.failures;
            if (!cr.first_failure) cr.first_failure = CaseReport::Failure{a, betas[j], y, lhs, rhs};
          }
        }
      }
    }
    r.cases.push_back(std::move(cr));
  }
  return r;
}

}  // namespace openq
