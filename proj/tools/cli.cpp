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

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "openq/report.hpp"

namespace openq::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
  std::string report;
  std::uint64_t seed = 0;
  std::size_t samples = 200;

  CheckOptions options() const {
    CheckOptions o;
    o.seed = seed;
    o.samples = samples;
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--report", c.report, "Write a JSON run report to this path");
  app->add_option("--seed", c.seed, "Seed for sampled checks")->capture_default_str();
  app->add_option("--samples", c.samples, "Samples per sampled check")->capture_default_str();
}

void print_check(std::ostream& out, const Json& c) {
  out << (c.at("passed").get<bool>() ? "pass  " : "FAIL  ") << c.at("name").get<std::string>();
  if (c.contains("coverage")) {
    const auto& cov = c.at("coverage");
    out << "  (" << cov.at("mode").get<std::string>() << ", " << cov.at("evaluations").get<std::size_t>()
        << " evaluations)";
  } else if (c.contains("instances")) {
    out << "  (" << c.at("instances").get<std::size_t>() << " instances)";
  }
  if (c.contains("witness") && c.at("witness").contains("text"))
    out << "\n      witness: " << c.at("witness").at("text").get<std::string>();
  out << '\n';
}

class Session {
 public:
  Session(std::string command, const std::vector<std::string>& args, const Common& common, std::ostream& out)
      : common_(common), out_(out), start_(std::chrono::steady_clock::now()) {
    report.command = std::move(command);
    report.arguments = args;
    report.seed = common.seed;
  }

  void check(Json c) {
    print_check(out_, c);
    report.add_check(std::move(c));
  }

  int finish() {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    report.timing["wall_ms"] = ms;
    if (!common_.report.empty()) write_json_file(common_.report, report.to_json());
    out_ << (report.passed() ? "result: pass" : "result: FAIL") << '\n';
    return report.passed() ? kExitPass : kExitViolation;
  }

  RunReport report;

 private:
  const Common& common_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

void emit(const Json& doc, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(output, doc);
    out << "wrote " << output << '\n';
  }
}

bool is_lattice_error(ErrorKind k) {
  return k == ErrorKind::NotAPartialOrder || k == ErrorKind::NoBottom || k == ErrorKind::MissingJoin;
}

Json lattice_failure(const std::string& subject, const Error& e) {
  Json c = make_check("lattice", "lattice", subject, false);
  c["error_kind"] = std::string(to_string(e.kind()));
  c["witness"] = {{"elements", e.witness()}, {"text", e.what()}};
  return c;
}

template <class E, class X>
Json hom_check(const std::optional<HomViolation<E>>& v, const X& x, const Coverage& cov, const std::string& subject) {
  Json c = make_check("homomorphism", "hom", subject, !v);
  c["coverage"] = coverage_json(cov);
  if (v) {
    Json el = Json::array();
    std::string text = std::string(to_string(v->law)) + " at";
    for (const auto& e : v->witness) {
      el.push_back(x.element_json(e));
      text += " " + x.describe(e);
    }
    c["witness"] = {{"law", std::string(to_string(v->law))}, {"elements", el}, {"text", text}};
  }
  return c;
}

Json axioms_check(const FiniteInvQuantale& q, const std::string& subject) {
  auto v = validate_quantale(q);
  Json c = make_check("quantale axioms " + (q.name().empty() ? subject : q.name()), "quantale-axioms", subject, !v);
  if (v) {
    std::string text = std::string(to_string(v->axiom)) + " at";
    for (Elem e : v->witness) text += " " + q.describe(e);
    c["witness"] = {{"axiom", std::string(to_string(v->axiom))}, {"elements", v->witness}, {"text", text}};
  }
  return c;
}

// validate

int cmd_validate(const std::vector<std::string>& paths, Session& s, const Common& common) {
  for (const auto& path : paths) {
    const Json doc = read_json_file(path);
    if (!doc.is_object()) throw Error(ErrorKind::Parse, path + ": expected an object");
    if (doc.contains("effective") || doc.contains("inverse_image")) {
      auto m = map_from_json(doc, fs::path(path).parent_path());
      if (auto* fm = std::get_if<FiniteMap>(&m)) {
        s.report.add_input(path, map_to_json(*fm));
        s.check(axioms_check(*fm->source, path));
        s.check(axioms_check(*fm->target, path));
        Coverage cov;
        auto v = validate_hom(fm->inverse_image, *fm->target, *fm->source, common.options(), &cov);
        s.check(hom_check(v, *fm->target, cov, path));
      } else {
        const auto& spec = std::get<EffectiveMapSpec>(m);
        s.report.add_input(path, effective_spec_to_json(spec));
        auto p = build_effective_map(spec);
        auto qv = validate_quantale_sampled(*p.source, common.options());
        Json qc = make_check("quantale axioms " + p.source->name() + " (sampled)", "sampled-axioms", path, !qv);
        if (qv) qc["witness"] = {{"axiom", std::string(to_string(qv->axiom))}, {"text", to_string(qv->axiom)}};
        s.check(std::move(qc));
        s.check(axioms_check(*p.target, path));
        Coverage cov;
        auto v = validate_hom(p.inverse_image, *p.target, *p.source, common.options(), &cov);
        s.check(hom_check(v, *p.target, cov, path));
      }
    } else if (doc.contains("mult")) {
      s.report.add_input(path, doc);
      try {
        lattice_from_json(doc.at("lattice"));
      } catch (const Error& e) {
        if (!is_lattice_error(e.kind())) throw;
        s.check(lattice_failure(path, e));
        continue;
      }
      s.check(axioms_check(quantale_from_json(doc), path));
    } else if (doc.contains("elements")) {
      s.report.add_input(path, doc);
      try {
        auto l = lattice_from_json(doc);
        Json c = make_check("lattice", "lattice", path, true);
        c["size"] = l.size();
        s.check(std::move(c));
      } catch (const Error& e) {
        if (!is_lattice_error(e.kind())) throw;
        s.check(lattice_failure(path, e));
      }
    } else if (doc.contains("pairs")) {
      s.report.add_input(path, doc);
      auto pairs = relation_from_json(doc, std::numeric_limits<Elem>::max());
      Json c = make_check("relation", "relation", path, true);
      c["pairs"] = pairs.size();
      s.check(std::move(c));
    } else {
      throw Error(ErrorKind::Parse, path + ": not a lattice, quantale, map or relation document");
    }
  }
  return s.finish();
}

// check-map

struct MapFlags {
  bool semiopen = false, fr1 = false, fr1_right = false, fr2 = false, surjective = false, wos = false,
       fr2_fr1 = false, locale_meet = false;
  bool any() const { return semiopen || fr1 || fr1_right || fr2 || surjective || wos || fr2_fr1 || locale_meet; }
};

template <InvQuantale Q>
void run_map_checks(const QuantaleMap<Q, FiniteInvQuantale>& p, const MapFlags& flags, const CheckOptions& opt,
                    Session& s) {
  Coverage cov;
  auto hv = validate_hom(p.inverse_image, *p.target, *p.source, opt, &cov);
  s.check(hom_check(hv, *p.target, cov, "map"));
  if (hv) return;
  auto so = check_semiopen(p, opt);
  if (flags.semiopen || !so.map) s.check(semiopen_check(p, so.verdict, "map"));
  if (!so.map) return;
  const auto& m = *so.map;
  if (flags.fr1) s.check(frobenius_check(m, check_fr1(m, opt), "map"));
  if (flags.fr1_right) s.check(frobenius_check(m, check_fr1_right(m, opt), "map"));
  if (flags.fr2) s.check(frobenius_check(m, check_fr2(m, opt), "map"));
  if (flags.surjective) s.check(surjectivity_check(*m.target, is_surjective(m), "map"));
  if (flags.wos) {
    auto w = check_wos(p, opt);
    Json c = make_check("weakly open surjection lemma", "wos", "map", w.holds);
    c["applicable"] = w.applicable;
    c["unit_roundtrip"] = w.unit_roundtrip;
    c["surjective"] = w.surjective;
    s.check(std::move(c));
  }
  if (flags.fr2_fr1) {
    auto w = check_fr2_implies_fr1(p, opt);
    Json c = make_check("FR2 and unit round trip give FR1", "fr2-implies-fr1", "map", w.holds);
    c["applicable"] = w.applicable;
    c["fr1"] = w.fr1;
    s.check(std::move(c));
  }
  if (flags.locale_meet) {
    if constexpr (std::same_as<Q, FiniteInvQuantale>) {
      auto w = check_locale_meet_lemma(p);
      Json c = make_check("locale meet lemma", "locale-meet", "map", w.holds);
      c["applicable"] = w.applicable;
      if (w.witness)
        c["witness"] = {{"a", w.witness->first},
                        {"x", w.witness->second},
                        {"text", p.source->describe(w.witness->first) + " / " + p.target->describe(w.witness->second)}};
      s.check(std::move(c));
    } else {
      throw Error(ErrorKind::NotALocale, "effective maps are not locale maps");
    }
  }
}

int cmd_check_map(const std::string& path, MapFlags flags, Session& s, const Common& common) {
  if (!flags.any()) flags.semiopen = flags.fr1 = flags.fr2 = true;
  auto m = map_from_json(read_json_file(path), fs::path(path).parent_path());
  if (auto* fm = std::get_if<FiniteMap>(&m)) {
    s.report.add_input("map", map_to_json(*fm));
    run_map_checks(*fm, flags, common.options(), s);
  } else {
    const auto& spec = std::get<EffectiveMapSpec>(m);
    s.report.add_input("map", effective_spec_to_json(spec));
    run_map_checks(build_effective_map(spec), flags, common.options(), s);
  }
  return s.finish();
}

// quotient

int cmd_quotient(const std::string& qpath, const std::string& rpath, const std::string& output, Session& s,
                 std::ostream& out) {
  const Json qdoc = read_json_file(qpath);
  auto q = share(quantale_from_json(qdoc));
  if (auto v = validate_quantale(*q))
    throw Error(ErrorKind::InvalidQuantale, std::string("input violates ") + std::string(to_string(v->axiom)),
                {v->witness.begin(), v->witness.end()});
  const Json rdoc = read_json_file(rpath);
  auto rel = relation_from_json(rdoc, q->size());
  s.report.add_input("quantale", quantale_to_json(*q));
  s.report.add_input("relation", relation_to_json(rel));

  Nucleus j = nucleus_from_relation(q, rel);
  auto nv = check_nucleus(j);
  Json nc = make_check("nucleus laws", "nucleus", "quantale", !nv);
  if (nv) nc["witness"] = {{"a", nv->a}, {"b", nv->b}, {"text", "a = " + q->describe(nv->a)}};
  s.check(std::move(nc));
  bool identified = true;
  for (auto [r, t] : rel) identified = identified && j(r) == j(t);
  s.check(make_check("relation identified", "quotient-relation", "quantale", identified));
  Quotient qt = quotient(j);
  s.check(axioms_check(*qt.quantale, "quotient"));
  Json qc = make_check("quotient", "quotient", "quantale,relation", true);
  qc["size"] = qt.quantale->size();
  s.check(std::move(qc));
  out << "quotient: " << qt.quantale->size() << " elements:";
  for (Elem e : qt.back_map) out << ' ' << q->describe(e);
  out << '\n';
  const Json doc = quantale_to_json(*qt.quantale);
  s.report.add_output("quotient", doc);
  if (!output.empty()) emit(doc, output, out);
  return s.finish();
}

// tensor

LatticePtr load_lattice(const std::string& path) {
  const Json doc = read_json_file(path);
  if (doc.contains("mult")) return quantale_from_json(doc).carrier();
  return share(lattice_from_json(doc));
}

bool roundtrip(const TensorIso& iso) {
  return compose(iso.backward, iso.forward) == identity_map(iso.forward.dom) &&
         compose(iso.forward, iso.backward) == identity_map(iso.backward.dom);
}

int cmd_tensor(const std::vector<std::string>& paths, const std::string& output, std::size_t limit, Session& s,
               std::ostream& out) {
  std::vector<LatticePtr> factors;
  for (const auto& p : paths) {
    factors.push_back(load_lattice(p));
    s.report.add_input(p, lattice_to_json(*factors.back()));
  }
  auto t = TensorLattice::of(factors, limit);
  out << "factors:";
  for (const auto& f : factors) out << ' ' << f->size();
  out << "\ntensor product: " << t.size() << " elements\n";
  Json c = make_check("tensor product", "tensor", "factors", true);
  c["size"] = t.size();
  s.check(std::move(c));
  if (factors.size() == 2) {
    auto ml = TensorLattice::of({factors[1], factors[0]}, limit);
    Json sc = make_check("symmetry isomorphism", "tensor", "factors", roundtrip(symmetry_iso(t, ml)));
    s.check(std::move(sc));
    if (factors[0]->size() == 2) {
      Json uc = make_check("unit isomorphism", "tensor", "factors", roundtrip(unit_iso(t)));
      s.check(std::move(uc));
    }
  }
  const Json doc = lattice_to_json(*t.lattice());
  s.report.add_output("tensor", doc);
  if (!output.empty()) emit(doc, output, out);
  return s.finish();
}

// pullback-verify

struct PullbackOptions {
  std::string p, f;
  std::size_t maxlen = 4;
  std::size_t truncation = 0;  // 0: max(8, 2 maxlen)
  std::size_t flank_max = 1;
  std::size_t traces = 4;
  bool unchecked = false;
};

int cmd_pullback(const PullbackOptions& o, Session& s, std::ostream& out) {
  auto p = finite_map_from_json(read_json_file(o.p), fs::path(o.p).parent_path());
  auto f = finite_map_from_json(read_json_file(o.f), fs::path(o.f).parent_path());
  s.report.add_input("p", map_to_json(p));
  s.report.add_input("f", map_to_json(f));
  const std::size_t n = o.truncation ? o.truncation : std::max<std::size_t>(TruncatedFreeProduct::kDefaultTruncation,
                                                                            2 * o.maxlen);
  std::optional<PullbackContext> ctx;
  try {
    ctx = o.unchecked ? make_unchecked_pullback_context(p, f, n) : make_pullback_context(p, f, n);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisFailure) throw;
    Json c = make_check("hypotheses on p", "pullback-hypotheses", "p,f", false);
    c["context"] = {{"truncation", n}, {"checked", !o.unchecked}};
    c["witness"] = {{"elements", e.witness()}, {"text", e.what()}};
    s.check(std::move(c));
    return s.finish();
  }
  out << "context: Q = " << ctx->q().name() << ", X = " << ctx->x().name() << ", Y = " << ctx->y().name()
      << ", truncation " << n << ", maxlen " << o.maxlen << (ctx->checked ? "" : ", hypotheses not checked")
      << '\n';
  auto h = verify_h_respects(*ctx, o.maxlen);
  auto adj = verify_adjunction_on_words(*ctx, o.maxlen, o.traces);
  auto bc = verify_beck_chevalley(*ctx);
  auto pf = verify_pullback_frobenius(*ctx, o.maxlen, o.flank_max);
  const std::size_t first = s.report.checks.size();
  add_pullback_checks(s.report, *ctx, h, adj, bc, pf);
  for (std::size_t i = first; i < s.report.checks.size(); ++i) print_check(out, s.report.checks[i]);
  std::size_t shown = 0;
  for (const auto& t : adj.sample_traces) {
    if (t.steps.size() < 3 || shown++ == 2) continue;
    out << "trace " << word_text(*ctx, t.word) << ":\n";
    for (const auto& st : t.steps)
      out << "  " << (st.family ? std::string(to_string(*st.family)) : std::string("unit")) << ": "
          << word_text(*ctx, st.before) << " -> " << word_text(*ctx, st.after) << '\n';
  }
  return s.finish();
}

// example

template <InvQuantale Q>
void property_suite(const QuantaleMap<Q, FiniteInvQuantale>& p, bool expect_fr2, const CheckOptions& opt,
                    Session& s) {
  Coverage cov;
  auto hv = validate_hom(p.inverse_image, *p.target, *p.source, opt, &cov);
  s.check(hom_check(hv, *p.target, cov, "map"));
  auto so = check_semiopen(p, opt);
  s.check(semiopen_check(p, so.verdict, "map"));
  if (!so.map) return;
  const auto& m = *so.map;
  s.check(surjectivity_check(*m.target, is_surjective(m), "map"));
  s.check(frobenius_check(m, check_fr1(m, opt), "map"));
  s.check(frobenius_check(m, check_fr1_right(m, opt), "map"));
  auto fr2 = check_fr2(m, opt);
  Json c = frobenius_check(m, fr2, "map");
  if (!expect_fr2) {
    c["name"] = "FR2 fails (expected)";
    c["kind"] = "frobenius-expected-failure";
    c["passed"] = !fr2.holds();
  }
  s.check(std::move(c));
}

std::string param(const std::vector<std::string>& params, std::size_t i, std::string fallback) {
  return i < params.size() ? params[i] : std::move(fallback);
}

std::size_t number(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "expected a number, got '" + s + "'");
  }
}

int cmd_example(const std::string& name, const std::vector<std::string>& params, const std::string& output,
                Session& s, const Common& common, std::ostream& out) {
  if (name == "rel") {
    auto q = rel_quantale(number(param(params, 0, "2")));
    emit(quantale_to_json(q), output, out);
    out << q.name() << ": " << q.size() << " elements\n";
    return kExitPass;
  }
  if (name == "group") {
    auto q = group_powerset_quantale(group_by_name(param(params, 0, "Z2")));
    emit(quantale_to_json(q), output, out);
    return kExitPass;
  }
  if (name == "locale") {
    const std::string kind = param(params, 0, "discrete-to-point");
    FiniteMap m;
    if (kind == "discrete-to-point") {
      m = discrete_to_point(number(param(params, 1, "2")));
    } else if (kind == "inclusion") {
      m = discrete_inclusion(number(param(params, 1, "2")), number(param(params, 2, "3")));
    } else if (kind == "sierpinski-open") {
      m = sierpinski_open_point();
    } else if (kind == "sierpinski-closed") {
      m = sierpinski_closed_point();
    } else {
      throw Error(ErrorKind::Usage, "locale examples: discrete-to-point N, inclusion N M, sierpinski-open, "
                                    "sierpinski-closed");
    }
    emit(map_to_json(m), output, out);
    return kExitPass;
  }
  if (name == "omega-support") {
    const std::string what = param(params, 0, "Z2");
    QuantalePtr q;
    if (what == "omega") {
      q = share(omega_quantale());
    } else if (fs::exists(what)) {
      q = share(quantale_from_json(read_json_file(what)));
    } else {
      q = share(group_powerset_quantale(group_by_name(what)));
    }
    emit(map_to_json(omega_support_map(q)), output, out);
    return kExitPass;
  }
  if (name == "omega-diagonal") {
    emit(map_to_json(omega_diagonal_map()), output, out);
    return kExitPass;
  }
  if (name == "z2-finite-part") {
    emit(map_to_json(z2_algebra_finite_part().map), output, out);
    return kExitPass;
  }
  if (name == "z2-permutation") {
    emit(map_to_json(z2_permutation_representation()), output, out);
    return kExitPass;
  }
  if (name == "matrix-max" || name == "group-algebra") {
    EffectiveMapSpec spec;
    if (name == "matrix-max") {
      spec.kind = "matrix-support";
      spec.n = number(param(params, 0, "2"));
    } else {
      spec.kind = "group-algebra-support";
      spec.group = param(params, 0, "Z2");
    }
    const Json sdoc = effective_spec_to_json(spec);
    map_from_json(sdoc);
    s.report.add_input("map", sdoc);
    if (!output.empty()) emit(sdoc, output, out);
    auto p = build_effective_map(spec);
    out << "property suite for " << p.name << " (seed " << common.seed << ", " << common.samples
        << " samples)\n";
    property_suite(p, name == "matrix-max", common.options(), s);
    return s.finish();
  }
  throw Error(ErrorKind::Usage, "unknown example '" + name +
                                    "'; try rel, group, locale, omega-support, omega-diagonal, z2-finite-part, "
                                    "z2-permutation, matrix-max, group-algebra");
}

int cmd_report_verify(const std::string& path, std::ostream& out) {
  auto v = verify_report(read_json_file(path));
  out << "checks: " << v.checks << ", replayed: " << v.replayed << '\n';
  for (const auto& p : v.problems) out << "problem: " << p << '\n';
  out << (v.ok() ? "result: pass" : "result: FAIL") << '\n';
  return v.ok() ? kExitPass : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open maps of involutive quantales: checkers and verifiers", "openq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Common common;

  auto* validate = app.add_subcommand("validate", "Validate lattice, quantale, map or relation files");
  std::vector<std::string> validate_paths;
  validate->add_option("paths", validate_paths)->required();
  add_common(validate, common);

  auto* check_map = app.add_subcommand("check-map", "Check openness conditions of a map");
  std::string map_path;
  MapFlags flags;
  check_map->add_option("map", map_path)->required();
  check_map->add_flag("--semiopen", flags.semiopen);
  check_map->add_flag("--fr1", flags.fr1);
  check_map->add_flag("--fr1-right", flags.fr1_right);
  check_map->add_flag("--fr2", flags.fr2);
  check_map->add_flag("--surjective", flags.surjective);
  check_map->add_flag("--wos", flags.wos, "Weakly open surjection lemma; needs a unital target");
  check_map->add_flag("--fr2-fr1", flags.fr2_fr1, "FR2 with unit round trip gives FR1");
  check_map->add_flag("--locale-meet", flags.locale_meet, "Meet lemma; needs locales");
  add_common(check_map, common);

  auto* quot = app.add_subcommand("quotient", "Quotient a quantale by the nucleus generated by a relation");
  std::string q_path, r_path, output;
  quot->add_option("quantale", q_path)->required();
  quot->add_option("relation", r_path)->required();
  quot->add_option("-o,--output", output, "Write the quotient quantale here");
  add_common(quot, common);

  auto* tensor = app.add_subcommand("tensor", "Tensor product of lattice or quantale files");
  std::vector<std::string> tensor_paths;
  std::size_t tensor_limit = TensorLattice::kDefaultLimit;
  tensor->add_option("factors", tensor_paths)->required();
  tensor->add_option("-o,--output", output, "Write the product lattice here");
  tensor->add_option("--limit", tensor_limit, "Element bound for enumeration")->capture_default_str();
  add_common(tensor, common);

  auto* pull = app.add_subcommand("pullback-verify", "Verify the pullback construction on an instance");
  PullbackOptions po;
  pull->add_option("--p", po.p, "Map p: Q -> X")->required();
  pull->add_option("--f", po.f, "Map f: Y -> X")->required();
  pull->add_option("--maxlen", po.maxlen, "Word length budget")->capture_default_str();
  pull->add_option("--truncation", po.truncation, "Grade bound N (default max(8, 2 maxlen))");
  pull->add_option("--flank-max", po.flank_max, "Flank length for the two-sided shapes")->capture_default_str();
  pull->add_option("--traces", po.traces, "Rewrite traces kept per word length")->capture_default_str();
  pull->add_flag("--unchecked", po.unchecked, "Skip the FR1/FR2/surjectivity hypotheses");
  add_common(pull, common);

  auto* example = app.add_subcommand("example", "Materialize an example or run its property suite");
  std::string example_name;
  std::vector<std::string> example_params;
  example->add_option("name", example_name)->required();
  example->add_option("params", example_params);
  example->add_option("-o,--output", output, "Write the example file here");
  add_common(example, common);

  auto* verify = app.add_subcommand("report-verify", "Re-check a run report");
  std::string report_path;
  verify->add_option("report", report_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty() && e.get_exit_code() == 0) {
      out << app.get_subcommands().front()->help();
      return kExitPass;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    auto* sub = app.get_subcommands().front();
    Session s(sub->get_name(), args, common, out);
    if (sub == validate) return cmd_validate(validate_paths, s, common);
    if (sub == check_map) return cmd_check_map(map_path, flags, s, common);
    if (sub == quot) return cmd_quotient(q_path, r_path, output, s, out);
    if (sub == tensor) return cmd_tensor(tensor_paths, output, tensor_limit, s, out);
    if (sub == pull) return cmd_pullback(po, s, out);
    if (sub == example) return cmd_example(example_name, example_params, output, s, common, out);
    if (sub == verify) return cmd_report_verify(report_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace openq::cli
