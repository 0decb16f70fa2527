#include "mstar/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "mstar/equivariant.hpp"
#include "mstar/error.hpp"
#include "mstar/free_star.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/model.hpp"
#include "mstar/simplicial.hpp"

namespace mstar {

using nlohmann::json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::bound_exceeded: return "bound-exceeded";
  }
  return "fail";
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return std::size_t(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

std::vector<const Check*> SuiteReport::of_kind(const std::string& suite, const std::string& kind) const {
  std::vector<const Check*> out;
  const std::string prefix = kind + ":";
  for (const Check& c : checks) {
    if (c.suite == suite && c.name.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
  }
  return out;
}

int SuiteReport::exit_code() const {
  if (count(CheckStatus::fail) > 0) return 1;
  if (count(CheckStatus::bound_exceeded) > 0) return 3;
  return 0;
}

json SuiteReport::to_json(const SuiteOptions& o) const {
  json j;
  j["options"] = {{"max_objects", o.max_objects},
                  {"max_morphisms", o.max_morphisms},
                  {"word_length", o.word_length},
                  {"bound", o.bound},
                  {"seed", o.seed}};
  j["checks"] = json::array();
  for (const Check& c : checks) {
    j["checks"].push_back({{"suite", c.suite}, {"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  }
  j["summary"] = {{"total", checks.size()},
                  {"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"skipped", count(CheckStatus::skipped)},
                  {"bound_exceeded", count(CheckStatus::bound_exceeded)}};
  return j;
}

std::string SuiteReport::table() const {
  std::size_t ws = 5, wn = 5;
  for (const Check& c : checks) {
    ws = std::max(ws, c.suite.size());
    wn = std::max(wn, c.name.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("suite", ws) << pad("check", wn) << "status\n";
  for (const Check& c : checks) out << pad(c.suite, ws) << pad(c.name, wn) << to_string(c.status) << "\n";
  out << "total " << checks.size() << "  pass " << count(CheckStatus::pass) << "  fail " << count(CheckStatus::fail)
      << "  skipped " << count(CheckStatus::skipped) << "  bound-exceeded " << count(CheckStatus::bound_exceeded)
      << "\n";
  return out.str();
}

std::string SuiteReport::to_dot() const {
  std::ostringstream out;
  out << "digraph report {\n  rankdir=LR;\n";
  std::vector<std::string> suites;
  for (const Check& c : checks) {
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) suites.push_back(c.suite);
  }
  for (const std::string& s : suites) out << "  " << json(s).dump() << " [shape=box];\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    const char* color = c.status == CheckStatus::pass ? "green" : c.status == CheckStatus::skipped ? "gray" : "red";
    out << "  c" << i << " [label=" << json(c.name).dump() << ", color=" << color << "];\n";
    out << "  " << json(c.suite).dump() << " -> c" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"representability", "equivalence", "exponential-law",
                                              "factorization",    "model",       "fixed-points",
                                              "orbits",           "controlled",  "pi"};
  return names;
}

Verdict validate_report(const json& j) {
  if (!j.is_object() || !j.contains("checks") || !j["checks"].is_array()) {
    return {false, {{"reason", "checks must be an array"}}};
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& c : j["checks"]) {
    if (!c.is_object() || !c.contains("suite") || !c["suite"].is_string() || !c.contains("name") ||
        !c["name"].is_string() || !c.contains("status") || !c["status"].is_string()) {
      return {false, {{"reason", "malformed check"}, {"check", c}}};
    }
    const std::string s = c["status"];
    if (s != "pass" && s != "fail" && s != "skipped" && s != "bound-exceeded") {
      return {false, {{"reason", "unknown status"}, {"status", s}}};
    }
    ++counts[s];
  }
  if (j.contains("summary")) {
    const json& s = j["summary"];
    const std::pair<const char*, const char*> keys[] = {
        {"pass", "pass"}, {"fail", "fail"}, {"skipped", "skipped"}, {"bound_exceeded", "bound-exceeded"}};
    if (!s.is_object() || s.value("total", std::size_t(0)) != j["checks"].size()) {
      return {false, {{"reason", "summary total does not match"}}};
    }
    for (auto [key, status] : keys) {
      if (s.value(key, std::size_t(0)) != counts[status]) {
        return {false, {{"reason", "summary does not match the checks"}, {"field", key}}};
      }
    }
  }
  return {true, {}};
}

namespace {

class Runner {
 public:
  Runner(std::string suite, SuiteReport& report) : suite_(std::move(suite)), report_(report) {}

  void run(const std::string& name, const std::function<Verdict()>& fn) {
    Check c{suite_, name, CheckStatus::pass, nullptr};
    try {
      Verdict v = fn();
      c.status = v.ok ? CheckStatus::pass : CheckStatus::fail;
      c.witness = v.witness.is_null() ? json(nullptr) : v.witness;
    } catch (const Error& e) {
      c.status = e.kind() == ErrorKind::bound_exceeded ? CheckStatus::bound_exceeded : CheckStatus::fail;
      c.witness = {{"error", to_string(e.kind())}, {"message", e.what()}, {"detail", e.witness()}};
    }
    report_.checks.push_back(std::move(c));
  }
  void skip(const std::string& name, json why) {
    report_.checks.push_back({suite_, name, CheckStatus::skipped, std::move(why)});
  }

 private:
  std::string suite_;
  SuiteReport& report_;
};

bool within(const StarCategory& A, const SuiteOptions& o) {
  return A.num_objects() <= o.max_objects && A.num_morphisms() <= o.max_morphisms;
}

bool within(const LinearStarCategory& A, const SuiteOptions& o) {
  std::size_t dims = 0;
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    for (ObjId b = 0; b < A.num_objects(); ++b) dims += A.dim(a, b);
  }
  return A.num_objects() <= o.max_objects && dims <= o.max_morphisms;
}

json too_large(std::size_t objects, std::size_t morphisms) {
  return {{"reason", "exceeds size limits"}, {"objects", objects}, {"morphisms", morphisms}};
}

// ---- representability ----

std::string_view kind_name(RepresentedKind k) {
  switch (k) {
    case RepresentedKind::object: return "objects";
    case RepresentedKind::unitary: return "unitaries";
    case RepresentedKind::marked: return "marked";
    case RepresentedKind::morphism: return "morphisms";
  }
  return "";
}

Verdict representable(const StarCategory& B, std::uint64_t bound) {
  json w;
  for (RepresentedKind k : {RepresentedKind::object, RepresentedKind::unitary, RepresentedKind::marked}) {
    const StarCategory R = representing_object(k, B);
    const std::vector<std::uint32_t> elems = represented_hom(k, B);
    const std::vector<Functor> homs = enumerate_star_functors(R, B, bound);
    const std::string key(kind_name(k));
    w[key] = {{"hom", homs.size()}, {"elements", elems.size()}};
    if (homs.size() != elems.size()) return {false, w};
    for (std::uint32_t e : elems) {
      Functor F = classifying_functor(k, B, e);
      if (!is_star_functor(R, B, F) || classified_element(k, B, F) != e) {
        return {false, {{"kind", key}, {"element", e}, {"reason", "element does not round-trip"}}};
      }
    }
    for (const Functor& F : homs) {
      if (classifying_functor(k, B, classified_element(k, B, F)) != F) {
        return {false, {{"kind", key}, {"functor", F.on_morphisms}, {"reason", "functor does not round-trip"}}};
      }
    }
  }
  return {true, w};
}

Verdict morphism_classifier_check(const StarCategory& B, std::size_t length, std::uint64_t bound) {
  const FreeStarPresentation P = morphism_classifier();
  const std::vector<Functor> homs = free_star_homs(P, B, bound);
  json w = {{"hom", homs.size()}, {"morphisms", B.num_morphisms()}};
  if (homs.size() != B.num_morphisms()) return {false, w};
  // The generator is the non-identity arrow of the walking arrow.
  MorId gen = 0;
  while (P.generators().is_identity(gen)) ++gen;
  std::vector<bool> seen(B.num_morphisms(), false);
  for (const Functor& F : homs) {
    FreeStarEvaluation ev(P, B, F);
    Verdict v = ev.check(length);
    if (!v) return {false, {{"morphism", F.on_morphisms[gen]}, {"detail", v.witness}}};
    if (seen[F.on_morphisms[gen]]) return {false, {{"reason", "two homs classify one morphism"}}};
    seen[F.on_morphisms[gen]] = true;
  }
  return {true, w};
}

void representability_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("representability", r);
  for (const auto& [name, B] : c.categories) {
    if (!within(B, o)) {
      run.skip("representable:" + name, too_large(B.num_objects(), B.num_morphisms()));
      continue;
    }
    run.run("representable:" + name, [&] { return representable(B, o.bound); });
    run.run("morphism-classifier:" + name, [&] { return morphism_classifier_check(B, o.word_length, o.bound); });
  }
}

// ---- equivalence ----

void equivalence_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("equivalence", r);
  for (const NamedMorphism& m : c.morphisms) {
    if (!within(m.source, o) || !within(m.target, o)) {
      run.skip("agree:" + m.name, too_large(m.source.num_objects(), m.source.num_morphisms()));
      continue;
    }
    run.run("agree:" + m.name, [&]() -> Verdict {
      Verdict characterization = is_weak_equivalence(m.source, m.target, m.map);
      Verdict search = weak_equivalence_by_search(m.source, m.target, m.map, o.bound);
      return {characterization.ok == search.ok, {{"characterization", characterization.ok}, {"search", search.ok}}};
    });
  }
  // Linearized morphisms between *-groupoids with everything marked.
  auto all_marked = [](const StarCategory& A) {
    return A.flavor() == Flavor::marked && A.marked_list().size() == A.num_morphisms();
  };
  for (const NamedMorphism& m : c.morphisms) {
    if (!all_marked(m.source) || !all_marked(m.target) || !within(m.source, o) || !within(m.target, o)) continue;
    run.run("linear-agree:" + m.name, [&]() -> Verdict {
      LinearStarCategory A = linearize(m.source), B = linearize(m.target);
      LinearFunctor F = linearize(m.source, m.target, m.map);
      Verdict characterization = is_linear_weak_equivalence(A, B, F);
      Verdict search = linear_weak_equivalence_by_search(A, B, F, o.bound);
      Verdict plain = is_weak_equivalence(m.source, m.target, m.map);
      return {characterization.ok == search.ok,
              {{"characterization", characterization.ok}, {"search", search.ok}, {"unlinearized", plain.ok}}};
    });
  }
}

// ---- exponential law ----

Verdict from_exponential(const ExponentialReport& e) {
  return {e.bijective && e.left == e.right, {{"left", e.left}, {"right", e.right}, {"detail", e.witness}}};
}

void exponential_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("exponential-law", r);
  for (const ExponentialTriple& t : c.triples) {
    if (!within(t.C, o) || !within(t.A, o)) {
      run.skip("sharp:" + t.name, too_large(t.A.num_objects(), t.A.num_morphisms()));
      continue;
    }
    run.run("sharp:" + t.name, [&] { return from_exponential(verify_exponential_law(t.C, t.groupoid, t.A, o.bound)); });
  }
  for (const LinearExponentialTriple& t : c.linear_triples) {
    if (!within(t.C, o) || !within(t.A, o)) {
      run.skip("tensor:" + t.name, json{{"reason", "exceeds size limits"}});
      continue;
    }
    run.run("tensor:" + t.name, [&] { return from_exponential(verify_exponential_law(t.C, t.groupoid, t.A, o.bound)); });
  }
}

// ---- factorization ----

void factorization_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("factorization", r);
  for (const NamedMorphism& m : c.morphisms) {
    if (!within(m.source, o) || !within(m.target, o)) {
      run.skip("cylinder:" + m.name, too_large(m.source.num_objects(), m.source.num_morphisms()));
      continue;
    }
    Factorization Z;
    run.run("cylinder:" + m.name, [&]() -> Verdict {
      Z = cylinder_factorize(m.source, m.target, m.map);
      return {Z.certified, Z.certificates};
    });
    run.run("path:" + m.name, [&]() -> Verdict {
      Factorization P = path_factorize(m.source, m.target, m.map, o.bound);
      return {P.certified, P.certificates};
    });
    run.run("universal:" + m.name, [&]() -> Verdict {
      if (!Z.certified) return {false, {{"reason", "no certified cylinder"}}};
      std::size_t targets = 0;
      for (const auto& [dname, D] : c.categories) {
        if (D.flavor() != m.source.flavor() || !within(D, o)) continue;
        Verdict v = verify_cylinder_universal_property(m.source, m.target, m.map, Z, D, o.bound);
        if (!v) return {false, {{"target", dname}, {"detail", v.witness}}};
        ++targets;
      }
      return {true, {{"targets", targets}}};
    });
  }
}

// ---- model axioms ----

void model_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("model", r);
  std::vector<const NamedMorphism*> ms;
  for (const NamedMorphism& m : c.morphisms) {
    if (within(m.source, o) && within(m.target, o)) ms.push_back(&m);
  }

  for (const NamedMorphism* f : ms) {
    for (const NamedMorphism* g : ms) {
      if (!(f->target == g->source)) continue;
      run.run("two-of-three:" + f->name + "|" + g->name,
              [&] { return two_out_of_three(f->source, f->target, g->target, f->map, g->map); });
    }
  }

  // Retract diagrams: f ⊔ pt and f × C with C drawn from the small corpus
  // categories of the same flavor.
  std::mt19937_64 rng(o.seed);
  for (const NamedMorphism* f : ms) {
    if (f->source.num_objects() == 0) continue;
    run.run("retract-coproduct:" + f->name,
            [&] { return retract_closure(coproduct_retract(f->source, f->target, f->map)); });
    std::vector<const NamedCategory*> factors;
    for (const NamedCategory& X : c.categories) {
      if (X.category.flavor() == f->source.flavor() && X.category.num_objects() > 0 && X.category.num_morphisms() <= 4) {
        factors.push_back(&X);
      }
    }
    if (factors.empty()) continue;
    const NamedCategory* C = factors[rng() % factors.size()];
    run.run("retract-product:" + f->name + "x" + C->name,
            [&] { return retract_closure(product_retract(f->source, f->target, f->map, C->category)); });
  }

  // Fibrations against a generated family versus goodness.
  std::map<Flavor, std::vector<LeftMap>> family;
  for (Flavor fl : {Flavor::marked, Flavor::unmarked}) {
    std::vector<std::pair<std::string, StarCategory>> extra;
    for (const NamedCategory& X : c.categories) {
      if (X.category.flavor() == fl && X.category.num_objects() <= 2 && X.category.num_morphisms() <= 4) {
        extra.emplace_back(X.name, X.category);
      }
    }
    family[fl] = generating_trivial_cofibrations(fl, extra);
  }
  for (const NamedMorphism* f : ms) {
    run.run("fibration:" + f->name, [&]() -> Verdict {
      Verdict good = is_good(f->source, f->target, f->map);
      Verdict lifts = has_right_lifting(f->source, f->target, f->map, family[f->source.flavor()], o.bound);
      return {good.ok == lifts.ok, {{"good", good.ok}, {"lifting", lifts.ok}, {"detail", lifts.witness}}};
    });
  }

  for (const NamedCategory& X : c.categories) {
    if (!within(X.category, o)) continue;
    run.run("fibrant-cofibrant:" + X.name, [&] { return fibrant_and_cofibrant(X.category); });
  }

  // −♯𝔾 preserves cofibrations and weak equivalences; A♯(pt → 𝕀) is a
  // trivial cofibration.
  const std::vector<std::pair<std::string, FinCategory>> groupoids{
      {"I", indiscrete_category(2)}, {"BZ2", delooping(cyclic_group(2)).base()}};
  for (const NamedMorphism* f : ms) {
    if (!is_cofibration(f->map)) continue;
    for (const auto& [gname, G] : groupoids) {
      if (f->target.num_morphisms() * G.num_morphisms() > 4 * o.max_morphisms) continue;
      run.run("sharp-preserves:" + f->name + "#" + gname, [&]() -> Verdict {
        SharpResult S = sharp(f->source, G), T = sharp(f->target, G);
        Functor F = sharp_functor(S, T, f->map, identity_functor(G));
        const bool weq = is_weak_equivalence(f->source, f->target, f->map).ok;
        const bool cof = is_cofibration(F), weq2 = is_weak_equivalence(S.category, T.category, F).ok;
        return {cof && weq == weq2, {{"cofibration", cof}, {"weak_equivalence", weq}, {"sharp_weak_equivalence", weq2}}};
      });
    }
  }
  for (const NamedCategory& X : c.categories) {
    if (!within(X.category, o)) continue;
    run.run("sharp-interval:" + X.name, [&]() -> Verdict {
      SharpResult S = sharp(X.category, indiscrete_category(2));
      Functor i = sharp_inclusion(X.category, S, 0);
      const bool cof = is_cofibration(i);
      Verdict weq = is_weak_equivalence(X.category, S.category, i);
      return {cof && weq.ok, {{"cofibration", cof}, {"weak_equivalence", weq.ok}}};
    });
  }
}

// ---- fixed points ----

json fixed_point_witness(const FixedPointReport& f) {
  return {{"cocycles", f.cocycles},
          {"closed", f.closed},
          {"isomorphic", f.isomorphic},
          {"unit_weak_equivalence", f.unit_weak_equivalence},
          {"fixed_objects", f.fixed_objects},
          {"fixed_morphisms", f.fixed_morphisms},
          {"detail", f.witness}};
}

void fixed_points_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("fixed-points", r);
  for (const NamedAction& a : c.actions) {
    const StarCategory& A = a.action.base;
    if (!within(A, o)) {
      run.skip("fixed-points:" + a.name, too_large(A.num_objects(), A.num_morphisms()));
      continue;
    }
    run.run("fixed-points:" + a.name, [&]() -> Verdict {
      FixedPointReport f = verify_fixed_points(a.action, o.bound);
      return {f.ok(), fixed_point_witness(f)};
    });
    run.run("injective:" + a.name, [&]() -> Verdict {
      Resolution R = resolution(a.action, o.bound);
      auto left = equivariant_trivial_cofibrations(a.action.group, A.flavor(), {{a.name, a.action}});
      Verdict v = is_injectively_fibrant(R.action, left, o.bound);
      return {v.ok, {{"left_maps", left.size()}, {"detail", v.witness}}};
    });
    run.run("exponential:" + a.name, [&] {
      return from_exponential(verify_equivariant_exponential_law(point(A.flavor()), a.action, o.bound));
    });
  }
  for (const NamedLinearAction& a : c.linear_actions) {
    if (!within(a.action.base, o)) {
      run.skip("fixed-points:" + a.name, json{{"reason", "exceeds size limits"}});
      continue;
    }
    run.run("fixed-points:" + a.name, [&]() -> Verdict {
      FixedPointReport f = verify_fixed_points(a.action, o.bound);
      return {f.ok(), fixed_point_witness(f)};
    });
    run.run("injective:" + a.name, [&]() -> Verdict {
      LinearResolution R = resolution(a.action, o.bound);
      auto left = equivariant_trivial_cofibrations(a.action.group, Flavor::marked, {{a.name, marked_action(a.action)}});
      Verdict v = is_injectively_fibrant(R.action, left, o.bound);
      return {v.ok, {{"left_maps", left.size()}, {"detail", v.witness}}};
    });
  }
}

// ---- orbits ----

/// Structure constants of Q(i)[G] straight from the multiplication table.
Verdict group_algebra_matches(const FinGroup& G) {
  LinearSharpResult S = sharp(linear_point(), delooping(G).base());
  const LinearStarCategory& E = S.category;
  const std::size_t n = G.order();
  json w = {{"dimension", E.dim(0, 0)}, {"order", n}};
  if (E.num_objects() != 1 || E.dim(0, 0) != n) return {false, w};
  // Basis element k is (k, 1) with k the k-th element of Hom_BG(*,*) = G.
  const FinCategory& bg = S.groupoid;
  std::vector<GroupElem> elem(n);
  for (MorId m = 0; m < n; ++m) elem[bg.hom_position(m)] = GroupElem(m);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[elem[k]] = k;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vec expected = unit_vec(n, pos[G.mul(elem[a], elem[b])]);
      if (E.basis_product(0, 0, 0, a, b) != expected) {
        w["product"] = {G.name(elem[a]), G.name(elem[b])};
        return {false, w};
      }
    }
    if (E.basis_star(0, 0, a) != unit_vec(n, pos[G.inv(elem[a])])) {
      w["star"] = G.name(elem[a]);
      return {false, w};
    }
  }
  if (E.identity(0) != unit_vec(n, pos[G.unit()])) return {false, w};
  return {true, w};
}

void orbits_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("orbits", r);
  const std::vector<std::pair<std::string, FinGroup>> groups{{"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}};
  for (const NamedCategory& K : c.categories) {
    if (!is_groupoid(K.category.base())) continue;
    if (!within(K.category, o)) {
      run.skip("colimit:" + K.name, too_large(K.category.num_objects(), K.category.num_morphisms()));
      continue;
    }
    for (const auto& [gname, G] : groups) {
      run.run("colimit:" + K.name + ":" + gname, [&]() -> Verdict {
        ColimitCertificate cert = verify_orbit_colimit(G, K.category.base(), o.bound);
        return {cert.bijective && cert.left == cert.right,
                {{"left", cert.left}, {"right", cert.right}, {"detail", cert.witness}}};
      });
    }
  }
  for (const auto& [gname, G] : groups) {
    run.run("orbit-pt:" + gname, [&]() -> Verdict {
      SharpResult S = orbit(point(), G);
      auto iso = find_star_isomorphism(S.category, delooping(G), o.bound);
      return {iso.has_value(), {{"morphisms", S.category.num_morphisms()}}};
    });
    run.run("group-algebra:" + gname, [&] { return group_algebra_matches(G); });
  }
  // Inducing along the trivial subgroup gives C♯pt ≅ C.
  for (const NamedCategory& C : c.categories) {
    if (C.category.num_morphisms() > 4) continue;
    run.run("induction-trivial:" + C.name, [&]() -> Verdict {
      const FinGroup G = cyclic_group(2);
      SharpResult S = induction_value(C.category, G, {G.unit()});
      return {find_star_isomorphism(S.category, C.category, o.bound).has_value(), nullptr};
    });
  }
  // Orbit cofibrancy against trivial fibrations from cylinder factorizations.
  for (Flavor fl : {Flavor::marked, Flavor::unmarked}) {
    std::vector<TrivialFibration> fibs;
    for (const NamedMorphism& m : c.morphisms) {
      if (m.source.flavor() != fl || m.source.num_morphisms() > 4 || m.target.num_morphisms() > 4) continue;
      if (fibs.size() >= 6) break;
      try {
        Factorization Z = cylinder_factorize(m.source, m.target, m.map);
        fibs.push_back({m.name, Z.middle, m.target, Z.second});
      } catch (const Error&) {
        // Reported by the factorization suite.
      }
    }
    if (fibs.empty()) continue;
    for (const NamedCategory& C : c.categories) {
      if (C.category.flavor() != fl || C.category.num_objects() > 2 || C.category.num_morphisms() > 4) continue;
      run.run("cofibrant:" + C.name + ":Z2",
              [&] { return verify_orbit_cofibrancy(C.category, cyclic_group(2), fibs, o.bound); });
    }
  }
}

// ---- controlled ----

void controlled_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("controlled", r);
  for (const NamedSpace& s : c.spaces) {
    run.run("controlled:" + s.name, [&]() -> Verdict {
      ControlledReport rep = verify_controlled(s.space, {0, 1, 2}, o.bound);
      json w = {{"measures", rep.measures},
                {"control_definition", rep.control_definition},
                {"composition", rep.composition},
                {"marked", rep.marked},
                {"isomorphic", rep.isomorphic},
                {"equivariant", s.space.group.has_value()},
                {"objects", rep.objects},
                {"morphisms", rep.morphisms},
                {"equivariant_objects", rep.equivariant_objects},
                {"detail", rep.witness}};
      return {rep.ok(), w};
    });
  }
}

// ---- Π ----

/// Simplicial maps K → N(H) by direct search over edge images.
std::uint64_t count_simplicial_maps(const SimplicialSet& K, const FinCategory& H, std::uint64_t bound) {
  SearchBudget budget(bound);
  const auto& edges = K.edges();
  std::vector<ObjId> v(K.vertices().size(), kNone);
  std::vector<MorId> e(edges.size(), kNone);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> assign_vertex;
  std::function<void(std::size_t)> assign_edge = [&](std::size_t i) {
    if (i == edges.size()) {
      for (const Triangle& t : K.triangles()) {
        if (H.compose(e[t.d0], e[t.d2]) != e[t.d1]) return;
      }
      ++count;
      return;
    }
    const Edge& ed = edges[i];
    for (MorId f : H.hom(v[ed.d1], v[ed.d0])) {
      budget.tick();
      if (ed.degenerate && f != H.identity(v[ed.d1])) continue;
      e[i] = f;
      assign_edge(i + 1);
    }
  };
  assign_vertex = [&](std::size_t i) {
    if (i == v.size()) return assign_edge(0);
    for (ObjId x = 0; x < H.num_objects(); ++x) {
      budget.tick();
      v[i] = x;
      assign_vertex(i + 1);
    }
  };
  assign_vertex(0);
  return count;
}

void pi_suite(const Corpus& c, const SuiteOptions& o, SuiteReport& r) {
  Runner run("pi", r);
  const GroupoidPresentation p0 = fundamental_groupoid(standard_simplex(0));
  const GroupoidPresentation p1 = fundamental_groupoid(standard_simplex(1));
  for (const NamedCategory& K : c.categories) {
    const FinCategory& k = K.category.base();
    if (!is_groupoid(k)) continue;
    if (!within(K.category, o)) {
      run.skip("delta0:" + K.name, too_large(k.num_objects(), k.num_morphisms()));
      continue;
    }
    run.run("delta0:" + K.name, [&]() -> Verdict {
      const std::uint64_t pi = hom_into(p0, k, o.bound).size();
      const std::uint64_t pt = count_functors(terminal_category(), k, {}, o.bound);
      return {pi == pt && pt == k.num_objects(), {{"pi", pi}, {"pt", pt}}};
    });
    run.run("delta1:" + K.name, [&]() -> Verdict {
      const std::uint64_t pi = hom_into(p1, k, o.bound).size();
      const std::uint64_t interval = count_functors(indiscrete_category(2), k, {}, o.bound);
      return {pi == interval, {{"pi", pi}, {"interval", interval}}};
    });
    for (const NamedCategory& C : c.categories) {
      const FinCategory& cc = C.category.base();
      if (!is_groupoid(cc) || cc.num_morphisms() > 8) continue;
      run.run("nerve:" + C.name + ":" + K.name, [&]() -> Verdict {
        const std::uint64_t pi = hom_into(fundamental_groupoid(nerve(cc)), k, o.bound).size();
        const std::uint64_t direct = count_functors(cc, k, {}, o.bound);
        return {pi == direct, {{"pi", pi}, {"functors", direct}}};
      });
    }
    for (const NamedSimplicial& S : c.simplicial) {
      run.run("simplicial:" + S.name + ":" + K.name, [&]() -> Verdict {
        const std::uint64_t pi = hom_into(fundamental_groupoid(S.complex), k, o.bound).size();
        const std::uint64_t direct = count_simplicial_maps(S.complex, k, o.bound);
        return {pi == direct, {{"pi", pi}, {"simplicial_maps", direct}}};
      });
    }
  }
  run.run("nerve-bz2-into-bz2", [&]() -> Verdict {
    const FinCategory bz2 = delooping(cyclic_group(2)).base();
    const std::size_t n = hom_into(fundamental_groupoid(nerve(bz2)), bz2, o.bound).size();
    return {n == 2, {{"homs", n}}};
  });
  // Simplicial identities of Map(A, B) on small pairs.
  std::vector<const NamedCategory*> small;
  for (const NamedCategory& X : c.categories) {
    if (X.category.num_objects() <= 2 && X.category.num_morphisms() <= 4) small.push_back(&X);
  }
  for (const NamedCategory* A : small) {
    for (const NamedCategory* B : small) {
      if (A->category.flavor() != B->category.flavor() || A->category.num_morphisms() > 2) continue;
      run.run("mapping-space:" + A->name + ":" + B->name,
              [&] { return check_mapping_space(A->category, B->category, o.bound); });
    }
  }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& options) {
  using Fn = void (*)(const Corpus&, const SuiteOptions&, SuiteReport&);
  static const std::vector<std::pair<std::string, Fn>> table{
      {"representability", representability_suite}, {"equivalence", equivalence_suite},
      {"exponential-law", exponential_suite},       {"factorization", factorization_suite},
      {"model", model_suite},                       {"fixed-points", fixed_points_suite},
      {"orbits", orbits_suite},                     {"controlled", controlled_suite},
      {"pi", pi_suite}};
  SuiteReport r;
  bool found = name == "all";
  for (const auto& [n, fn] : table) {
    if (name != "all" && name != n) continue;
    found = true;
    // Checks that need no corpus input are still tied to a nonempty corpus,
    // so an empty corpus yields an empty report.
    if (!corpus.empty()) fn(corpus, options, r);
  }
  if (!found) throw Error(ErrorKind::invalid_argument, "unknown suite " + name);
  return r;
}

}  // namespace mstar
