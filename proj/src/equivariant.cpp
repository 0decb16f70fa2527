#include "mstar/equivariant.hpp"

#include <map>
#include <set>

#include "mstar/error.hpp"
#include "mstar/model.hpp"

namespace mstar {

using nlohmann::json;

GAction build_gtilde(const FinGroup& G, Flavor flavor) {
  const std::size_t n = G.order();
  FinCategory I = indiscrete_category(n);
  GAction a{G, star_groupoid(I, flavor), {}};
  for (GroupElem g = 0; g < n; ++g) {
    Functor F;
    for (GroupElem h = 0; h < n; ++h) F.on_objects.push_back(G.mul(g, h));
    for (GroupElem h = 0; h < n; ++h) {
      for (GroupElem k = 0; k < n; ++k) F.on_morphisms.push_back(MorId(G.mul(g, h) * n + G.mul(g, k)));
    }
    a.act.push_back(std::move(F));
  }
  validate_action(a);
  return a;
}

GAction sharp_action(const GAction& A, const SharpResult& S) {
  GAction r{A.group, S.category, {}};
  for (const Functor& g : A.act) r.act.push_back(sharp_functor(S, S, g, identity_functor(S.groupoid)));
  return r;
}

GAction sharp_gtilde_action(const StarCategory& C, const FinGroup& G, const SharpResult& S) {
  GAction t = build_gtilde(G);
  GAction r{G, S.category, {}};
  for (const Functor& g : t.act) r.act.push_back(sharp_functor(S, S, identity_functor(C.base()), g));
  return r;
}

// ---- Resolution ----

namespace {

MorId gtilde_morphism(const FinGroup& G, GroupElem h, GroupElem k) { return MorId(h * G.order() + k); }

// (g·a)(h) = g(a(g⁻¹h)); (g·a)(h→k) = g(a(g⁻¹h→g⁻¹k)).
Functor act_on_functor(const FinGroup& G, const Functor& g_act, GroupElem g, const Functor& a) {
  const std::size_t n = G.order();
  GroupElem gi = G.inv(g);
  Functor r;
  for (GroupElem h = 0; h < n; ++h) r.on_objects.push_back(g_act.on_objects[a.on_objects[G.mul(gi, h)]]);
  for (GroupElem h = 0; h < n; ++h) {
    for (GroupElem k = 0; k < n; ++k) {
      r.on_morphisms.push_back(g_act.on_morphisms[a.on_morphisms[gtilde_morphism(G, G.mul(gi, h), G.mul(gi, k))]]);
    }
  }
  return r;
}

}  // namespace

Resolution resolution(const GAction& A, std::uint64_t bound) {
  validate_action(A);
  const FinGroup& G = A.group;
  const std::size_t n = G.order();
  Resolution R;
  R.funu = funu(indiscrete_category(n), A.base, bound);
  const FunuResult& F = R.funu;
  R.action.group = G;
  R.action.base = F.category;
  for (GroupElem g = 0; g < n; ++g) {
    Functor act;
    for (const Functor& a : F.objects) act.on_objects.push_back(*F.find_object(act_on_functor(G, A.act[g], g, a)));
    const FinCategory& f = F.category.base();
    for (MorId m = 0; m < f.num_morphisms(); ++m) {
      const auto& t = F.morphisms[m].components;
      NatTransformation gt;
      for (GroupElem h = 0; h < n; ++h) gt.components.push_back(A.act[g].on_morphisms[t[G.mul(G.inv(g), h)]]);
      act.on_morphisms.push_back(*F.find_morphism(act.on_objects[f.src(m)], act.on_objects[f.tgt(m)], gt));
    }
    R.action.act.push_back(std::move(act));
  }
  validate_action(R.action);
  R.unit = constant_embedding(A.base, F);
  R.eval = evaluation(F, G.unit());
  return R;
}

Verdict verify_resolution_unit(const GAction& A, const Resolution& R) {
  const FinGroup& G = A.group;
  const FunuResult& F = R.funu;
  const FinCategory &a = A.base.base(), &f = F.category.base();
  if (!is_star_functor(A.base, F.category, R.unit)) return {false, {{"reason", "r is not a *-functor"}}};
  if (!is_star_functor(F.category, A.base, R.eval)) return {false, {{"reason", "e is not a *-functor"}}};
  if (compose(R.eval, R.unit) != identity_functor(a)) return {false, {{"reason", "e∘r is not the identity"}}};
  for (GroupElem g = 0; g < G.order(); ++g) {
    if (compose(R.action.act[g], R.unit) != compose(R.unit, A.act[g])) return {false, {{"reason", "r not equivariant"}}};
  }
  // η_x: r(e(x)) → x with components x(1→g).
  std::vector<MorId> eta;
  for (ObjId x = 0; x < f.num_objects(); ++x) {
    NatTransformation t;
    for (GroupElem g = 0; g < G.order(); ++g) {
      t.components.push_back(F.objects[x].on_morphisms[gtilde_morphism(G, G.unit(), g)]);
    }
    auto m = F.find_morphism(R.unit.on_objects[R.eval.on_objects[x]], x, t);
    if (!m || !F.category.is_marked(*m)) return {false, {{"reason", "component is not a marked morphism"}, {"object", x}}};
    eta.push_back(*m);
  }
  Functor re = compose(R.unit, R.eval);
  for (MorId m = 0; m < f.num_morphisms(); ++m) {
    if (f.compose(m, eta[f.src(m)]) != f.compose(eta[f.tgt(m)], re.on_morphisms[m])) {
      return {false, {{"reason", "η is not natural"}, {"morphism", m}}};
    }
  }
  Verdict w = is_weak_equivalence(A.base, F.category, R.unit);
  if (!w) return {false, {{"reason", "characterization rejects r"}, {"detail", w.witness}}};
  return {true, {}};
}

InvariantSubcategory invariant_subcategory(const GAction& a) {
  const FinCategory& c = a.base.base();
  InvariantSubcategory r;
  std::vector<ObjId> new_obj(c.num_objects(), kNone);
  std::vector<MorId> new_mor(c.num_morphisms(), kNone);
  auto fixed_obj = [&](ObjId x) {
    for (const Functor& g : a.act) {
      if (g.on_objects[x] != x) return false;
    }
    return true;
  };
  auto fixed_mor = [&](MorId m) {
    for (const Functor& g : a.act) {
      if (g.on_morphisms[m] != m) return false;
    }
    return true;
  };
  CategoryBuilder b;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (!fixed_obj(x)) continue;
    new_obj[x] = b.add_object(c.object_name(x));
    r.objects.push_back(x);
  }
  for (ObjId x : r.objects) {
    for (ObjId y : r.objects) {
      for (MorId m : c.hom(x, y)) {
        if (!fixed_mor(m)) continue;
        new_mor[m] = b.add_morphism(new_obj[x], new_obj[y], c.morphism_name(m));
        r.morphisms.push_back(m);
      }
    }
  }
  for (ObjId x : r.objects) b.set_identity(new_obj[x], new_mor[c.identity(x)]);
  b.fill_compose([&](MorId g, MorId f) { return new_mor[c.compose(r.morphisms[g], r.morphisms[f])]; });
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId m : r.morphisms) {
    star.push_back(new_mor[a.base.star(m)]);
    marked.push_back(a.base.is_marked(m));
  }
  r.category = StarCategory::make(b.build(), std::move(star), std::move(marked), a.base.flavor());
  r.inclusion.on_objects = r.objects;
  r.inclusion.on_morphisms = r.morphisms;
  return r;
}

// ---- Fixed points ----

FixedPointCategory fixed_points(const GAction& A, std::uint64_t bound) {
  validate_action(A);
  const FinGroup& G = A.group;
  const StarCategory& S = A.base;
  const FinCategory& c = S.base();
  const std::size_t n = G.order();
  SearchBudget budget(bound);
  FixedPointCategory P;

  auto cocycle = [&](const FixedPointObject& o) {
    for (GroupElem g = 0; g < n; ++g) {
      for (GroupElem h = 0; h < n; ++h) {
        if (c.compose(A.act[g].on_morphisms[o.rho[h]], o.rho[g]) != o.rho[G.mul(g, h)]) return false;
      }
    }
    return true;
  };
  for (ObjId b = 0; b < c.num_objects(); ++b) {
    FixedPointObject cur{b, std::vector<MorId>(n, kNone)};
    cur.rho[G.unit()] = c.identity(b);
    auto rec = [&](auto&& self, GroupElem g) -> void {
      if (g == n) {
        if (cocycle(cur)) P.objects.push_back(cur);
        return;
      }
      if (g == G.unit()) return self(self, g + 1);
      for (MorId u : c.hom(b, A.act[g].on_objects[b])) {
        budget.tick();
        if (!S.is_marked(u)) continue;
        cur.rho[g] = u;
        self(self, g + 1);
      }
    };
    rec(rec, 0);
  }

  auto intertwines = [&](const FixedPointObject& s, const FixedPointObject& t, MorId f) {
    for (GroupElem g = 0; g < n; ++g) {
      if (c.compose(t.rho[g], f) != c.compose(A.act[g].on_morphisms[f], s.rho[g])) return false;
    }
    return true;
  };
  CategoryBuilder b;
  for (std::size_t i = 0; i < P.objects.size(); ++i) b.add_object("(" + c.object_name(P.objects[i].base) + "," +
                                                                   std::to_string(i) + ")");
  const std::size_t no = P.objects.size();
  std::map<std::tuple<std::size_t, std::size_t, MorId>, MorId> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < no; ++i) {
    for (std::size_t j = 0; j < no; ++j) {
      for (MorId f : c.hom(P.objects[i].base, P.objects[j].base)) {
        budget.tick();
        if (!intertwines(P.objects[i], P.objects[j], f)) continue;
        index[{i, j, f}] = b.add_morphism(ObjId(i), ObjId(j), c.morphism_name(f));
        P.underlying.push_back(f);
        ends.emplace_back(i, j);
      }
    }
  }
  auto find = [&](std::size_t i, std::size_t j, MorId f) {
    auto it = index.find({i, j, f});
    if (it == index.end()) {
      throw Error(ErrorKind::invalid_argument, "intertwiners not closed", {{"morphism", c.morphism_name(f)}});
    }
    return it->second;
  };
  for (std::size_t i = 0; i < no; ++i) b.set_identity(ObjId(i), find(i, i, c.identity(P.objects[i].base)));
  b.fill_compose([&](MorId g, MorId f) {
    return find(ends[f].first, ends[g].second, c.compose(P.underlying[g], P.underlying[f]));
  });
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId m = 0; m < P.underlying.size(); ++m) {
    star.push_back(find(ends[m].second, ends[m].first, S.star(P.underlying[m])));
    marked.push_back(S.is_marked(P.underlying[m]));
  }
  P.category = StarCategory::make(b.build(), std::move(star), std::move(marked), S.flavor());
  return P;
}

Functor fixed_points_to_limit(const GAction& A, const FixedPointCategory& P, const Resolution& R,
                              const InvariantSubcategory& L) {
  const FinGroup& G = A.group;
  const std::size_t n = G.order();
  std::map<ObjId, ObjId> lim_obj;
  std::map<MorId, MorId> lim_mor;
  for (ObjId k = 0; k < L.objects.size(); ++k) lim_obj[L.objects[k]] = k;
  for (MorId k = 0; k < L.morphisms.size(); ++k) lim_mor[L.morphisms[k]] = k;
  auto lookup = [](const auto& map, auto key, const char* what) {
    auto it = map.find(key);
    if (it == map.end()) throw Error(ErrorKind::invalid_functor, std::string(what) + " is not invariant");
    return it->second;
  };
  Functor out;
  std::vector<ObjId> funu_obj;
  for (const FixedPointObject& o : P.objects) {
    Functor a;
    for (GroupElem h = 0; h < n; ++h) a.on_objects.push_back(A.act[h].on_objects[o.base]);
    for (GroupElem h = 0; h < n; ++h) {
      for (GroupElem k = 0; k < n; ++k) a.on_morphisms.push_back(A.act[h].on_morphisms[o.rho[G.mul(G.inv(h), k)]]);
    }
    auto x = R.funu.find_object(a);
    if (!x) throw Error(ErrorKind::invalid_functor, "fixed point does not give a functor out of G̃");
    funu_obj.push_back(*x);
    out.on_objects.push_back(lookup(lim_obj, *x, "object"));
  }
  const FinCategory& p = P.category.base();
  for (MorId m = 0; m < p.num_morphisms(); ++m) {
    NatTransformation t;
    for (GroupElem h = 0; h < n; ++h) t.components.push_back(A.act[h].on_morphisms[P.underlying[m]]);
    auto x = R.funu.find_morphism(funu_obj[p.src(m)], funu_obj[p.tgt(m)], t);
    if (!x) throw Error(ErrorKind::invalid_functor, "intertwiner does not give a transformation");
    out.on_morphisms.push_back(lookup(lim_mor, *x, "morphism"));
  }
  return out;
}

FixedPointReport verify_fixed_points(const GAction& A, std::uint64_t bound) {
  FixedPointReport rep;
  const FinGroup& G = A.group;
  const FinCategory& c = A.base.base();
  FixedPointCategory P = fixed_points(A, bound);
  rep.fixed_objects = P.category.num_objects();
  rep.fixed_morphisms = P.category.num_morphisms();
  rep.cocycles = true;
  for (const FixedPointObject& o : P.objects) {
    if (o.rho[G.unit()] != c.identity(o.base)) rep.cocycles = false;
    for (GroupElem g = 0; g < G.order(); ++g) {
      if (!A.base.is_marked(o.rho[g])) rep.cocycles = false;
      for (GroupElem h = 0; h < G.order(); ++h) {
        if (c.compose(A.act[g].on_morphisms[o.rho[h]], o.rho[g]) != o.rho[G.mul(g, h)]) rep.cocycles = false;
      }
    }
  }
  // fixed_points throws when composites or stars leave the intertwiners.
  rep.closed = true;
  Resolution R = resolution(A, bound);
  InvariantSubcategory L = invariant_subcategory(R.action);
  Functor iso = fixed_points_to_limit(A, P, R, L);
  rep.isomorphic = is_star_isomorphism(P.category, L.category, iso);
  Verdict unit = verify_resolution_unit(A, R);
  rep.unit_weak_equivalence = unit.ok;
  rep.witness = {{"limit_objects", L.category.num_objects()}, {"limit_morphisms", L.category.num_morphisms()}};
  if (!unit) rep.witness["unit"] = unit.witness;
  return rep;
}

// ---- Injective fibrancy ----

std::vector<EquivariantLeftMap> equivariant_trivial_cofibrations(
    const FinGroup& G, Flavor flavor, const std::vector<std::pair<std::string, GAction>>& extra) {
  std::vector<std::pair<std::string, GAction>> sources{{"pt", trivial_action(G, point(flavor))},
                                                       {"G~", build_gtilde(G, flavor)}};
  for (const auto& e : extra) sources.push_back(e);
  const FinCategory I = indiscrete_category(2);
  std::vector<EquivariantLeftMap> out;
  for (const auto& [name, X] : sources) {
    if (X.base.flavor() != flavor) throw Error(ErrorKind::invalid_argument, "mixed flavors in the family");
    SharpResult S = sharp(X.base, I);
    GAction target = sharp_action(X, S);
    for (ObjId end = 0; end < 2; ++end) {
      out.push_back({name + " -> " + name + "#I at " + std::to_string(end), X, target, sharp_inclusion(X.base, S, end)});
    }
  }
  return out;
}

namespace {

std::vector<Equivariance> equivariance(const GAction& dom, const GAction& cod) {
  std::vector<Equivariance> eq;
  for (GroupElem g = 0; g < dom.group.order(); ++g) eq.push_back({dom.act[g], cod.act[g]});
  return eq;
}

}  // namespace

Verdict is_injectively_fibrant(const GAction& R, const std::vector<EquivariantLeftMap>& left, std::uint64_t bound) {
  std::uint64_t squares = 0;
  for (const EquivariantLeftMap& l : left) {
    if (!(l.source.group == R.group)) throw Error(ErrorKind::invalid_argument, "groups differ");
    SearchConstraints top = star_constraints(l.source.base, R.base);
    top.equivariance = equivariance(l.source, R);
    std::vector<Functor> tops = enumerate_functors(l.source.base.base(), R.base.base(), top, bound);
    for (const Functor& t : tops) {
      ++squares;
      SearchConstraints c = star_constraints(l.target.base, R.base);
      c.equivariance = equivariance(l.target, R);
      c.fixed_objects.assign(l.target.base.num_objects(), kNone);
      c.fixed_morphisms.assign(l.target.base.num_morphisms(), kNone);
      for (ObjId x = 0; x < t.on_objects.size(); ++x) c.fixed_objects[l.map.on_objects[x]] = t.on_objects[x];
      for (MorId m = 0; m < t.on_morphisms.size(); ++m) c.fixed_morphisms[l.map.on_morphisms[m]] = t.on_morphisms[m];
      if (!find_functor(l.target.base.base(), R.base.base(), c, bound)) {
        return {false, {{"left_map", l.name}, {"top", t.on_objects}}};
      }
    }
  }
  return {true, {{"squares", squares}}};
}

ExponentialReport verify_equivariant_exponential_law(const StarCategory& C, const GAction& A, std::uint64_t bound) {
  const FinGroup& G = A.group;
  ExponentialReport rep;
  if (C.flavor() != A.base.flavor()) throw Error(ErrorKind::invalid_argument, "exponential law needs one flavor");
  SharpResult S = sharp(C, indiscrete_category(G.order()));
  GAction left_action = sharp_gtilde_action(C, G, S);
  Resolution R = resolution(A, bound);
  InvariantSubcategory L = invariant_subcategory(R.action);
  std::set<ObjId> inv_obj(L.objects.begin(), L.objects.end());
  std::set<MorId> inv_mor(L.morphisms.begin(), L.morphisms.end());

  SearchConstraints c = star_constraints(S.category, A.base);
  c.equivariance = equivariance(left_action, A);
  std::vector<Functor> lefts = enumerate_functors(S.category.base(), A.base.base(), c, bound);
  rep.left = lefts.size();
  rep.right = count_star_functors(C, L.category, bound);
  std::set<Functor> images;
  for (const Functor& Phi : lefts) {
    Functor Psi = exponential_transport(C, S, R.funu, Phi);
    for (ObjId x : Psi.on_objects) {
      if (!inv_obj.count(x)) {
        rep.witness = {{"reason", "transport leaves the invariants"}, {"object", x}};
        return rep;
      }
    }
    for (MorId m : Psi.on_morphisms) {
      if (!inv_mor.count(m)) {
        rep.witness = {{"reason", "transport leaves the invariants"}, {"morphism", m}};
        return rep;
      }
    }
    if (exponential_transport_inverse(C, S, A.base, R.funu, Psi) != Phi) {
      rep.witness = {{"reason", "round trip fails"}};
      return rep;
    }
    images.insert(Psi);
  }
  rep.bijective = images.size() == rep.left && rep.left == rep.right;
  if (!rep.bijective) rep.witness = {{"reason", "counts differ"}};
  return rep;
}

// ---- Orbits ----

SharpResult orbit(const StarCategory& C, const FinGroup& G) { return sharp(C, delooping(G).base()); }

SharpResult induction_value(const StarCategory& C, const FinGroup& G, const std::vector<GroupElem>& H) {
  return sharp(C, delooping(subgroup(G, H)).base());
}

ColimitCertificate verify_orbit_colimit(const FinGroup& G, const FinCategory& K, std::uint64_t bound) {
  groupoid_inverses(K);
  ColimitCertificate rep;
  const std::size_t n = G.order();
  GAction t = build_gtilde(G);
  SearchConstraints c;
  for (const Functor& g : t.act) c.equivariance.push_back({g, identity_functor(K)});
  std::vector<Functor> lefts = enumerate_functors(t.base.base(), K, c, bound);
  FinCategory BG = delooping(G).base();
  std::vector<Functor> rights = enumerate_functors(BG, K, {}, bound);
  rep.left = lefts.size();
  rep.right = rights.size();

  auto to_bg = [&](const Functor& Phi) {
    Functor Psi{{Phi.on_objects[G.unit()]}, {}};
    for (GroupElem g = 0; g < n; ++g) Psi.on_morphisms.push_back(Phi.on_morphisms[gtilde_morphism(G, G.unit(), g)]);
    return Psi;
  };
  auto from_bg = [&](const Functor& Psi) {
    Functor Phi{std::vector<ObjId>(n, Psi.on_objects[0]), {}};
    for (GroupElem g = 0; g < n; ++g) {
      for (GroupElem h = 0; h < n; ++h) Phi.on_morphisms.push_back(Psi.on_morphisms[G.mul(G.inv(g), h)]);
    }
    return Phi;
  };
  std::set<Functor> right_set(rights.begin(), rights.end()), hit;
  for (const Functor& Phi : lefts) {
    Functor Psi = to_bg(Phi);
    if (!right_set.count(Psi) || from_bg(Psi) != Phi) {
      rep.witness = {{"reason", "Ψ is not a functor or the round trip fails"}, {"phi", Phi.on_morphisms}};
      return rep;
    }
    hit.insert(Psi);
  }
  for (const Functor& Psi : rights) {
    Functor Phi = from_bg(Psi);
    if (!is_functor(t.base.base(), K, Phi) || to_bg(Phi) != Psi) {
      rep.witness = {{"reason", "Φ is not a functor or the round trip fails"}, {"psi", Psi.on_morphisms}};
      return rep;
    }
    for (const Functor& g : t.act) {
      if (compose(Phi, g) != Phi) {
        rep.witness = {{"reason", "Φ is not equivariant"}};
        return rep;
      }
    }
  }
  rep.bijective = hit.size() == rights.size() && rep.left == rep.right;
  return rep;
}

Verdict verify_orbit_cofibrancy(const StarCategory& C, const FinGroup& G, const std::vector<TrivialFibration>& fibs,
                                std::uint64_t bound) {
  SharpResult S = sharp(C, indiscrete_category(G.order()));
  GAction action = sharp_gtilde_action(C, G, S);
  Functor proj = sharp_projection(S);
  Verdict w = is_weak_equivalence(S.category, C, proj);
  if (!w) return {false, {{"reason", "projection is not a weak equivalence"}, {"detail", w.witness}}};
  std::uint64_t squares = 0;
  for (const TrivialFibration& t : fibs) {
    if (t.B.flavor() != C.flavor()) continue;
    if (!is_trivial_fibration(t.E, t.B, t.p)) return {false, {{"reason", "not a trivial fibration"}, {"map", t.name}}};
    GAction Bt = trivial_action(G, t.B), Et = trivial_action(G, t.E);
    SearchConstraints cb = star_constraints(S.category, t.B);
    cb.equivariance = equivariance(action, Bt);
    for (const Functor& bottom : enumerate_functors(S.category.base(), t.B.base(), cb, bound)) {
      ++squares;
      SearchConstraints ce = star_constraints(S.category, t.E);
      ce.equivariance = equivariance(action, Et);
      ce.allow_object = [&](ObjId x, ObjId e) { return t.p.on_objects[e] == bottom.on_objects[x]; };
      ce.allow_morphism = [&](MorId m, MorId e) { return t.p.on_morphisms[e] == bottom.on_morphisms[m]; };
      if (!find_functor(S.category.base(), t.E.base(), ce, bound)) {
        return {false, {{"reason", "no equivariant lift"}, {"map", t.name}, {"bottom", bottom.on_objects}}};
      }
    }
  }
  return {true, {{"squares", squares}}};
}

}  // namespace mstar
