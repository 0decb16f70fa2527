#include "mstar/model.hpp"

#include <map>
#include <set>

#include "mstar/error.hpp"
#include "mstar/limits.hpp"

namespace mstar {

using nlohmann::json;

bool is_cofibration(const Functor& F) { return is_injective_on_objects(F); }

Verdict is_good(const StarCategory& C, const StarCategory& D, const Functor& F) {
  const FinCategory &c = C.base(), &d = D.base();
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (MorId u : d.out(F.on_objects[x])) {
      if (!D.is_marked(u)) continue;
      bool lifted = false;
      for (MorId v : c.out(x)) {
        if (C.is_marked(v) && F.on_morphisms[v] == u) {
          lifted = true;
          break;
        }
      }
      if (!lifted) return {false, {{"object", c.object_name(x)}, {"morphism", d.morphism_name(u)}}};
    }
  }
  return {true, {}};
}

Verdict is_trivial_fibration(const StarCategory& C, const StarCategory& D, const Functor& F) {
  const FinCategory &c = C.base(), &d = D.base();
  std::vector<bool> hit(d.num_objects(), false);
  for (ObjId x : F.on_objects) hit[x] = true;
  for (ObjId y = 0; y < d.num_objects(); ++y) {
    if (!hit[y]) return {false, {{"reason", "not surjective on objects"}, {"object", d.object_name(y)}}};
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      auto src = c.hom(x, y);
      auto tgt = d.hom(F.on_objects[x], F.on_objects[y]);
      std::set<MorId> images;
      for (MorId m : src) images.insert(F.on_morphisms[m]);
      if (images.size() != src.size()) return {false, {{"reason", "not faithful"}, {"objects", {x, y}}}};
      if (images.size() != tgt.size()) return {false, {{"reason", "not full"}, {"objects", {x, y}}}};
      for (MorId m : src) {
        if (D.is_marked(F.on_morphisms[m]) && !C.is_marked(m)) {
          return {false, {{"reason", "not full on marked morphisms"}, {"morphism", c.morphism_name(m)}}};
        }
      }
    }
  }
  return {true, {}};
}

std::optional<Functor> solve_lifting(const LiftingProblem& p, std::uint64_t bound) {
  const StarCategory &A = *p.A, &B = *p.B, &C = *p.C;
  if (compose(p.f, p.top) != compose(p.bottom, p.i)) {
    throw Error(ErrorKind::invalid_argument, "lifting square does not commute");
  }
  SearchConstraints c = star_constraints(B, C);
  c.fixed_objects.assign(B.num_objects(), kNone);
  c.fixed_morphisms.assign(B.num_morphisms(), kNone);
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    ObjId& slot = c.fixed_objects[p.i.on_objects[a]];
    if (slot != kNone && slot != p.top.on_objects[a]) return std::nullopt;
    slot = p.top.on_objects[a];
  }
  for (MorId m = 0; m < A.num_morphisms(); ++m) {
    MorId& slot = c.fixed_morphisms[p.i.on_morphisms[m]];
    if (slot != kNone && slot != p.top.on_morphisms[m]) return std::nullopt;
    slot = p.top.on_morphisms[m];
  }
  c.allow_object = [&p](ObjId b, ObjId x) { return p.f.on_objects[x] == p.bottom.on_objects[b]; };
  c.allow_morphism = [&p](MorId m, MorId n) { return p.f.on_morphisms[n] == p.bottom.on_morphisms[m]; };
  return find_functor(B.base(), C.base(), c, bound);
}

std::vector<LeftMap> generating_trivial_cofibrations(Flavor flavor,
                                                     const std::vector<std::pair<std::string, StarCategory>>& extra) {
  std::vector<std::pair<std::string, StarCategory>> sources{{"pt", point(flavor)}};
  for (const auto& e : extra) {
    if (e.second.flavor() != flavor) throw Error(ErrorKind::invalid_argument, "mixed flavors in the family");
    sources.push_back(e);
  }
  const FinCategory I = indiscrete_category(2);
  std::vector<LeftMap> out;
  for (const auto& [name, X] : sources) {
    SharpResult S = sharp(X, I);
    Functor inc = sharp_inclusion(X, S, 0);
    out.push_back({name + " -> " + name + "#I", X, S.category, std::move(inc)});
  }
  return out;
}

Verdict has_right_lifting(const StarCategory& C, const StarCategory& D, const Functor& f,
                          const std::vector<LeftMap>& left, std::uint64_t bound) {
  for (const LeftMap& l : left) {
    std::vector<Functor> tops = enumerate_star_functors(l.source, C, bound);
    for (const Functor& top : tops) {
      Functor ft = compose(f, top);
      SearchConstraints c = star_constraints(l.target, D);
      c.fixed_objects.assign(l.target.num_objects(), kNone);
      c.fixed_morphisms.assign(l.target.num_morphisms(), kNone);
      for (ObjId a = 0; a < l.source.num_objects(); ++a) c.fixed_objects[l.map.on_objects[a]] = ft.on_objects[a];
      for (MorId m = 0; m < l.source.num_morphisms(); ++m) c.fixed_morphisms[l.map.on_morphisms[m]] = ft.on_morphisms[m];
      SearchBudget budget(bound);
      std::optional<Verdict> failure;
      for_each_functor(l.target.base(), D.base(), c, budget, [&](const Functor& bottom) {
        LiftingProblem p{&l.source, &l.target, &C, &D, l.map, f, top, bottom};
        if (solve_lifting(p, bound)) return true;
        failure = Verdict{false, {{"left_map", l.name}, {"top", top.on_objects}, {"bottom", bottom.on_objects}}};
        return false;
      });
      if (failure) return *failure;
    }
  }
  return {true, {}};
}

// ---- Cylinder ----

namespace {

struct CylinderShape {
  std::size_t na = 0, nz = 0;
  std::vector<ObjId> qbar;
};

CylinderShape cylinder_shape(const StarCategory& A, const StarCategory& B, const Functor& a) {
  CylinderShape s;
  s.na = A.num_objects();
  s.nz = s.na + B.num_objects();
  for (ObjId x = 0; x < s.na; ++x) s.qbar.push_back(a.on_objects[x]);
  for (ObjId y = 0; y < B.num_objects(); ++y) s.qbar.push_back(y);
  return s;
}

// Morphisms of Z between x and y listed in the order of Hom_B(q̄x, q̄y).
MorId cylinder_morphism(const FinCategory& Z, const FinCategory& b, ObjId x, ObjId y, MorId m) {
  return Z.hom(x, y)[b.hom_position(m)];
}

}  // namespace

Factorization cylinder_factorize(const StarCategory& A, const StarCategory& B, const Functor& a) {
  if (A.flavor() != B.flavor()) throw Error(ErrorKind::invalid_argument, "factorization needs one flavor");
  const FinCategory &ca = A.base(), &b = B.base();
  CylinderShape s = cylinder_shape(A, B, a);
  CategoryBuilder zb;
  for (ObjId x = 0; x < s.na; ++x) zb.add_object("A:" + ca.object_name(x));
  for (ObjId y = 0; y < b.num_objects(); ++y) zb.add_object("B:" + b.object_name(y));
  std::vector<MorId> under;  // Z morphism → B morphism
  std::vector<std::vector<MorId>> hom_start(s.nz, std::vector<MorId>(s.nz));
  for (ObjId x = 0; x < s.nz; ++x) {
    for (ObjId y = 0; y < s.nz; ++y) {
      hom_start[x][y] = MorId(under.size());
      for (MorId m : b.hom(s.qbar[x], s.qbar[y])) {
        zb.add_morphism(x, y, b.morphism_name(m) + "@" + std::to_string(x) + ">" + std::to_string(y));
        under.push_back(m);
      }
    }
  }
  std::vector<ObjId> zsrc, ztgt;
  for (ObjId x = 0; x < s.nz; ++x) {
    for (ObjId y = 0; y < s.nz; ++y) {
      for (std::size_t k = 0; k < b.hom(s.qbar[x], s.qbar[y]).size(); ++k) {
        zsrc.push_back(x);
        ztgt.push_back(y);
      }
    }
  }
  auto lift = [&](ObjId x, ObjId y, MorId m) { return MorId(hom_start[x][y] + b.hom_position(m)); };
  for (ObjId x = 0; x < s.nz; ++x) zb.set_identity(x, lift(x, x, b.identity(s.qbar[x])));
  zb.fill_compose([&](MorId g, MorId f) { return lift(zsrc[f], ztgt[g], b.compose(under[g], under[f])); });
  FinCategory Z = zb.build();
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId m = 0; m < under.size(); ++m) {
    star.push_back(lift(ztgt[m], zsrc[m], B.star(under[m])));
    marked.push_back(B.is_marked(under[m]));
  }
  Factorization r;
  r.middle = StarCategory::make(std::move(Z), std::move(star), std::move(marked), A.flavor());
  for (ObjId x = 0; x < s.na; ++x) r.first.on_objects.push_back(x);
  for (MorId f = 0; f < ca.num_morphisms(); ++f) {
    r.first.on_morphisms.push_back(lift(ca.src(f), ca.tgt(f), a.on_morphisms[f]));
  }
  r.second.on_objects = s.qbar;
  r.second.on_morphisms = under;

  const StarCategory& M = r.middle;
  Verdict jf = star_functor_violation(A, M, r.first) ? Verdict{false, {}} : Verdict{true, {}};
  Verdict qf = star_functor_violation(M, B, r.second) ? Verdict{false, {}} : Verdict{true, {}};
  bool composite = compose(r.second, r.first) == a;
  bool cof = is_cofibration(r.first);
  Verdict good = is_good(M, B, r.second);
  Verdict weq = is_weak_equivalence(M, B, r.second);
  Verdict triv = is_trivial_fibration(M, B, r.second);
  r.certificates = {{"j_functor", jf.ok},         {"q_functor", qf.ok},         {"composite", composite},
                    {"j_cofibration", cof},        {"q_good", good.ok},          {"q_weak_equivalence", weq.ok},
                    {"q_trivial_fibration", triv.ok}};
  r.certified = jf.ok && qf.ok && composite && cof && good.ok && weq.ok && triv.ok;
  return r;
}

Verdict verify_cylinder_universal_property(const StarCategory& A, const StarCategory& B, const Functor& a,
                                           const Factorization& Z, const StarCategory& D, std::uint64_t bound) {
  if (A.flavor() != D.flavor()) return {true, {{"skipped", "flavor mismatch"}}};
  const FinCategory &ca = A.base(), &b = B.base(), &z = Z.middle.base();
  const FinCategory I = indiscrete_category(2);
  SharpResult S = sharp(A, I);
  CylinderShape s = cylinder_shape(A, B, a);

  // a': A♯𝕀 → Z with (x,0) ↦ x, (x,1) ↦ a(x), (f,φ) ↦ a(f); β: B → Z.
  Functor ap, beta;
  for (ObjId x = 0; x < S.category.num_objects(); ++x) {
    ObjId base = S.base_object(x);
    ap.on_objects.push_back(S.groupoid_object(x) == 0 ? base : ObjId(s.na + a.on_objects[base]));
  }
  for (MorId m = 0; m < S.category.num_morphisms(); ++m) {
    const FinCategory& sc = S.category.base();
    ap.on_morphisms.push_back(cylinder_morphism(z, b, ap.on_objects[sc.src(m)], ap.on_objects[sc.tgt(m)],
                                                a.on_morphisms[S.base_morphism(m)]));
  }
  for (ObjId y = 0; y < b.num_objects(); ++y) beta.on_objects.push_back(ObjId(s.na + y));
  for (MorId m = 0; m < b.num_morphisms(); ++m) {
    beta.on_morphisms.push_back(cylinder_morphism(z, b, ObjId(s.na + b.src(m)), ObjId(s.na + b.tgt(m)), m));
  }
  if (auto v = star_functor_violation(S.category, Z.middle, ap)) return {false, {{"reason", "a' invalid"}, {"detail", *v}}};
  if (auto v = star_functor_violation(B, Z.middle, beta)) return {false, {{"reason", "beta invalid"}, {"detail", *v}}};
  Functor at1 = sharp_inclusion(A, S, 1);
  if (compose(ap, at1) != compose(beta, a)) return {false, {{"reason", "pushout square does not commute"}}};

  std::vector<Functor> homs = enumerate_star_functors(Z.middle, D, bound);
  std::set<std::pair<Functor, Functor>> restricted;
  for (const Functor& H : homs) restricted.emplace(compose(H, ap), compose(H, beta));
  if (restricted.size() != homs.size()) return {false, {{"reason", "restriction is not injective"}}};

  std::uint64_t pairs = 0;
  for (const Functor& psi : enumerate_star_functors(B, D, bound)) {
    Functor target = compose(psi, a);
    SearchConstraints c = star_constraints(S.category, D);
    c.fixed_objects.assign(S.category.num_objects(), kNone);
    c.fixed_morphisms.assign(S.category.num_morphisms(), kNone);
    for (ObjId x = 0; x < ca.num_objects(); ++x) c.fixed_objects[at1.on_objects[x]] = target.on_objects[x];
    for (MorId f = 0; f < ca.num_morphisms(); ++f) c.fixed_morphisms[at1.on_morphisms[f]] = target.on_morphisms[f];
    pairs += count_functors(S.category.base(), D.base(), c, bound);
  }
  if (pairs != homs.size()) {
    return {false, {{"reason", "hom count differs from compatible pairs"}, {"homs", homs.size()}, {"pairs", pairs}}};
  }
  return {true, {{"homs", homs.size()}}};
}

// ---- Path object ----

Factorization path_factorize(const StarCategory& A, const StarCategory& B, const Functor& a, std::uint64_t bound) {
  if (A.flavor() != B.flavor()) throw Error(ErrorKind::invalid_argument, "factorization needs one flavor");
  const FinCategory I = indiscrete_category(2);  // morphisms: 0→0, 0→1, 1→0, 1→1
  const FinCategory& b = B.base();
  const FinCategory& ca = A.base();
  FunuResult F = funu(I, B, bound);
  const FinCategory& f = F.category.base();
  Functor ev0 = evaluation(F, 0), ev1 = evaluation(F, 1);
  LimitResult L = pullback(f, ca, b, ev1, a);

  std::map<std::pair<MorId, MorId>, MorId> mor_of;
  std::map<std::pair<ObjId, ObjId>, ObjId> obj_of;
  for (ObjId k = 0; k < L.object_tuples.size(); ++k) obj_of[{L.object_tuples[k][0], L.object_tuples[k][1]}] = k;
  for (MorId k = 0; k < L.morphism_tuples.size(); ++k) {
    mor_of[{L.morphism_tuples[k][0], L.morphism_tuples[k][1]}] = k;
  }
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (const auto& t : L.morphism_tuples) {
    star.push_back(mor_of.at({F.category.star(t[0]), A.star(t[1])}));
    marked.push_back(F.category.is_marked(t[0]) && A.is_marked(t[1]));
  }
  Factorization r;
  r.middle = StarCategory::make(L.category, std::move(star), std::move(marked), A.flavor());
  const StarCategory& P = r.middle;

  auto constant = [&](ObjId y) {
    return *F.find_object(Functor{{y, y}, std::vector<MorId>(4, b.identity(y))});
  };
  for (ObjId x = 0; x < ca.num_objects(); ++x) r.first.on_objects.push_back(obj_of.at({constant(a.on_objects[x]), x}));
  for (MorId m = 0; m < ca.num_morphisms(); ++m) {
    ObjId s = constant(a.on_objects[ca.src(m)]), t = constant(a.on_objects[ca.tgt(m)]);
    MorId tr = *F.find_morphism(s, t, {{a.on_morphisms[m], a.on_morphisms[m]}});
    r.first.on_morphisms.push_back(mor_of.at({tr, m}));
  }
  r.second = compose(ev0, L.cone[0]);

  // Explicit lifts: (φ,x) with u: φ(0) → y marked lifts to ((y, φ(1); φ(0→1)∘u*), x).
  bool lifts = true;
  json lift_witness;
  for (ObjId o = 0; o < P.num_objects() && lifts; ++o) {
    const Functor& phi = F.objects[L.object_tuples[o][0]];
    ObjId x = L.object_tuples[o][1];
    for (MorId u : b.out(phi.on_objects[0])) {
      if (!B.is_marked(u)) continue;
      ObjId y = b.tgt(u);
      MorId fwd = b.compose(phi.on_morphisms[1], B.star(u));
      Functor psi{{y, phi.on_objects[1]}, {b.identity(y), fwd, B.star(fwd), b.identity(phi.on_objects[1])}};
      auto pi = F.find_object(psi);
      std::optional<MorId> t;
      if (pi) t = F.find_morphism(L.object_tuples[o][0], *pi, {{u, b.identity(phi.on_objects[1])}});
      auto v = t ? mor_of.find({*t, ca.identity(x)}) : mor_of.end();
      if (v == mor_of.end() || !P.is_marked(v->second) || r.second.on_morphisms[v->second] != u) {
        lifts = false;
        lift_witness = {{"object", o}, {"morphism", b.morphism_name(u)}};
        break;
      }
    }
  }

  Verdict jf = star_functor_violation(A, P, r.first) ? Verdict{false, {}} : Verdict{true, {}};
  Verdict pf = star_functor_violation(P, B, r.second) ? Verdict{false, {}} : Verdict{true, {}};
  bool composite = compose(r.second, r.first) == a;
  bool cof = is_cofibration(r.first);
  Verdict weq = jf.ok ? is_weak_equivalence(A, P, r.first) : Verdict{false, {}};
  Verdict good = pf.ok ? is_good(P, B, r.second) : Verdict{false, {}};
  r.certificates = {{"j_functor", jf.ok},       {"p_functor", pf.ok}, {"composite", composite},
                    {"j_cofibration", cof},      {"j_weak_equivalence", weq.ok},
                    {"p_good", good.ok},         {"explicit_lifts", lifts}};
  if (!lifts) r.certificates["lift_witness"] = lift_witness;
  r.certified = jf.ok && pf.ok && composite && cof && weq.ok && good.ok && lifts;
  return r;
}

// ---- Axioms ----

Verdict two_out_of_three(const StarCategory& A, const StarCategory& B, const StarCategory& C, const Functor& f,
                         const Functor& g) {
  Functor gf = compose(g, f);
  bool wf = is_weak_equivalence(A, B, f).ok, wg = is_weak_equivalence(B, C, g).ok,
       wgf = is_weak_equivalence(A, C, gf).ok;
  int count = int(wf) + int(wg) + int(wgf);
  if (count == 2) return {false, {{"f", wf}, {"g", wg}, {"gf", wgf}}};
  return {true, {{"f", wf}, {"g", wg}, {"gf", wgf}}};
}

Verdict retract_closure(const RetractDiagram& d) {
  const auto bad = [](const char* what) { return Verdict{false, {{"reason", what}}}; };
  if (!is_star_functor(d.A, d.B, d.f) || !is_star_functor(d.A2, d.B2, d.g)) return bad("maps are not *-functors");
  if (!is_star_functor(d.A, d.A2, d.iA) || !is_star_functor(d.A2, d.A, d.rA) || !is_star_functor(d.B, d.B2, d.iB) ||
      !is_star_functor(d.B2, d.B, d.rB)) {
    return bad("retraction maps are not *-functors");
  }
  if (compose(d.rA, d.iA) != identity_functor(d.A.base()) || compose(d.rB, d.iB) != identity_functor(d.B.base())) {
    return bad("not a retraction");
  }
  if (compose(d.g, d.iA) != compose(d.iB, d.f) || compose(d.f, d.rA) != compose(d.rB, d.g)) {
    return bad("diagram does not commute");
  }
  json w;
  bool ok = true;
  auto check = [&](const char* name, bool of_g, bool of_f) {
    w[name] = {{"g", of_g}, {"f", of_f}};
    if (of_g && !of_f) ok = false;
  };
  check("cofibration", is_cofibration(d.g), is_cofibration(d.f));
  check("fibration", is_good(d.A2, d.B2, d.g).ok, is_good(d.A, d.B, d.f).ok);
  check("weak_equivalence", is_weak_equivalence(d.A2, d.B2, d.g).ok, is_weak_equivalence(d.A, d.B, d.f).ok);
  return {ok, w};
}

StarProduct star_product(const StarCategory& A, const StarCategory& B) {
  if (A.flavor() != B.flavor()) throw Error(ErrorKind::invalid_argument, "product of mixed flavors");
  LimitResult L = product(A.base(), B.base());
  std::map<std::pair<MorId, MorId>, MorId> mor_of;
  for (MorId k = 0; k < L.morphism_tuples.size(); ++k) mor_of[{L.morphism_tuples[k][0], L.morphism_tuples[k][1]}] = k;
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (const auto& t : L.morphism_tuples) {
    star.push_back(mor_of.at({A.star(t[0]), B.star(t[1])}));
    marked.push_back(A.is_marked(t[0]) && B.is_marked(t[1]));
  }
  StarProduct r;
  r.category = StarCategory::make(L.category, std::move(star), std::move(marked), A.flavor());
  r.left = L.cone[0];
  r.right = L.cone[1];
  r.object_pairs = L.object_tuples;
  r.morphism_pairs = L.morphism_tuples;
  return r;
}

RetractDiagram coproduct_retract(const StarCategory& A, const StarCategory& B, const Functor& f) {
  if (A.num_objects() == 0) throw Error(ErrorKind::invalid_argument, "retract needs a nonempty domain");
  const StarCategory pt = point(A.flavor());
  StarCoproduct A2 = star_coproduct(A, pt), B2 = star_coproduct(B, pt);
  RetractDiagram d{"coproduct", A, B, A2.category, B2.category, f, {}, A2.left, {}, B2.left, {}};
  const ObjId a0 = 0, b0 = f.on_objects[a0];
  d.g.on_objects.resize(A2.category.num_objects());
  d.g.on_morphisms.resize(A2.category.num_morphisms());
  for (ObjId x = 0; x < A.num_objects(); ++x) d.g.on_objects[A2.left.on_objects[x]] = B2.left.on_objects[f.on_objects[x]];
  for (MorId m = 0; m < A.num_morphisms(); ++m) {
    d.g.on_morphisms[A2.left.on_morphisms[m]] = B2.left.on_morphisms[f.on_morphisms[m]];
  }
  d.g.on_objects[A2.right.on_objects[0]] = B2.right.on_objects[0];
  d.g.on_morphisms[A2.right.on_morphisms[0]] = B2.right.on_morphisms[0];
  auto fold = [](const StarCoproduct& S, const StarCategory& X, ObjId at) {
    Functor r;
    r.on_objects.resize(S.category.num_objects());
    r.on_morphisms.resize(S.category.num_morphisms());
    for (ObjId x = 0; x < X.num_objects(); ++x) r.on_objects[S.left.on_objects[x]] = x;
    for (MorId m = 0; m < X.num_morphisms(); ++m) r.on_morphisms[S.left.on_morphisms[m]] = m;
    r.on_objects[S.right.on_objects[0]] = at;
    r.on_morphisms[S.right.on_morphisms[0]] = X.base().identity(at);
    return r;
  };
  d.rA = fold(A2, A, a0);
  d.rB = fold(B2, B, b0);
  return d;
}

RetractDiagram product_retract(const StarCategory& A, const StarCategory& B, const Functor& f, const StarCategory& C) {
  if (C.num_objects() == 0) throw Error(ErrorKind::invalid_argument, "retract needs a nonempty factor");
  StarProduct A2 = star_product(A, C), B2 = star_product(B, C);
  auto index = [](const StarProduct& P) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> objs, mors;
    for (std::uint32_t k = 0; k < P.object_pairs.size(); ++k) objs[{P.object_pairs[k][0], P.object_pairs[k][1]}] = k;
    for (std::uint32_t k = 0; k < P.morphism_pairs.size(); ++k) {
      mors[{P.morphism_pairs[k][0], P.morphism_pairs[k][1]}] = k;
    }
    return std::make_pair(objs, mors);
  };
  auto [ao, am] = index(A2);
  auto [bo, bm] = index(B2);
  RetractDiagram d{"product", A, B, A2.category, B2.category, f, {}, {}, A2.left, {}, B2.left};
  for (const auto& p : A2.object_pairs) d.g.on_objects.push_back(bo.at({f.on_objects[p[0]], p[1]}));
  for (const auto& p : A2.morphism_pairs) d.g.on_morphisms.push_back(bm.at({f.on_morphisms[p[0]], p[1]}));
  const ObjId c0 = 0;
  const MorId idc = C.base().identity(c0);
  for (ObjId x = 0; x < A.num_objects(); ++x) d.iA.on_objects.push_back(ao.at({x, c0}));
  for (MorId m = 0; m < A.num_morphisms(); ++m) d.iA.on_morphisms.push_back(am.at({m, idc}));
  for (ObjId x = 0; x < B.num_objects(); ++x) d.iB.on_objects.push_back(bo.at({x, c0}));
  for (MorId m = 0; m < B.num_morphisms(); ++m) d.iB.on_morphisms.push_back(bm.at({m, idc}));
  return d;
}

Verdict fibrant_and_cofibrant(const StarCategory& X) {
  const StarCategory pt = point(X.flavor());
  Functor to_pt{std::vector<ObjId>(X.num_objects(), 0), std::vector<MorId>(X.num_morphisms(), 0)};
  Verdict fib = is_good(X, pt, to_pt);
  if (!fib) return {false, {{"reason", "map to pt is not good"}, {"detail", fib.witness}}};
  if (!is_cofibration(Functor{})) return {false, {{"reason", "empty map is not a cofibration"}}};
  return {true, {}};
}

}  // namespace mstar
