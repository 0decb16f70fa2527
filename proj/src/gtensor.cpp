#include "mstar/gtensor.hpp"

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

SharpResult sharp(const StarCategory& A, const FinCategory& G) {
  const std::vector<MorId> ginv = groupoid_inverses(G);
  const FinCategory& a = A.base();
  SharpResult r;
  r.groupoid = G;
  r.groupoid_objects = G.num_objects();
  r.groupoid_morphisms = G.num_morphisms();
  CategoryBuilder b;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId g = 0; g < G.num_objects(); ++g) b.add_object("(" + a.object_name(x) + "," + G.object_name(g) + ")");
  }
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId f = 0; f < a.num_morphisms(); ++f) {
    for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
      b.add_morphism(r.object(a.src(f), G.src(phi)), r.object(a.tgt(f), G.tgt(phi)),
                     "(" + a.morphism_name(f) + "," + G.morphism_name(phi) + ")");
      star.push_back(r.morphism(A.star(f), ginv[phi]));
      marked.push_back(A.is_marked(f));
    }
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId g = 0; g < G.num_objects(); ++g) b.set_identity(r.object(x, g), r.morphism(a.identity(x), G.identity(g)));
  }
  b.fill_compose([&](MorId g, MorId f) {
    return r.morphism(a.compose(r.base_morphism(g), r.base_morphism(f)),
                      G.compose(r.groupoid_morphism(g), r.groupoid_morphism(f)));
  });
  r.category = StarCategory::make(b.build(), std::move(star), std::move(marked), A.flavor());
  return r;
}

Functor sharp_functor(const SharpResult& s, const SharpResult& t, const Functor& F, const Functor& H) {
  Functor out;
  for (ObjId x = 0; x < s.category.num_objects(); ++x) {
    out.on_objects.push_back(t.object(F.on_objects[s.base_object(x)], H.on_objects[s.groupoid_object(x)]));
  }
  for (MorId m = 0; m < s.category.num_morphisms(); ++m) {
    out.on_morphisms.push_back(
        t.morphism(F.on_morphisms[s.base_morphism(m)], H.on_morphisms[s.groupoid_morphism(m)]));
  }
  return out;
}

Functor sharp_inclusion(const StarCategory& A, const SharpResult& S, ObjId g) {
  Functor F;
  MorId idg = S.groupoid.identity(g);
  for (ObjId x = 0; x < A.num_objects(); ++x) F.on_objects.push_back(S.object(x, g));
  for (MorId f = 0; f < A.num_morphisms(); ++f) F.on_morphisms.push_back(S.morphism(f, idg));
  return F;
}

Functor sharp_projection(const SharpResult& S) {
  Functor F;
  for (ObjId x = 0; x < S.category.num_objects(); ++x) F.on_objects.push_back(S.base_object(x));
  for (MorId m = 0; m < S.category.num_morphisms(); ++m) F.on_morphisms.push_back(S.base_morphism(m));
  return F;
}

std::optional<ObjId> FunuResult::find_object(const Functor& F) const {
  auto it = object_index.find(F);
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FunuResult::find_morphism(ObjId s, ObjId t, const NatTransformation& n) const {
  auto it = morphism_index.find({s, t, n.components});
  if (it == morphism_index.end()) return std::nullopt;
  return it->second;
}

FunuResult funu(const FinCategory& G, const StarCategory& A, std::uint64_t bound) {
  groupoid_inverses(G);
  const FinCategory& a = A.base();
  FunuResult r;
  SearchConstraints c;
  c.allow_morphism = [&A](MorId, MorId img) { return A.is_marked(img); };
  r.objects = enumerate_functors(G, a, c, bound);
  for (ObjId i = 0; i < r.objects.size(); ++i) r.object_index.emplace(r.objects[i], i);

  CategoryBuilder b;
  for (ObjId i = 0; i < r.objects.size(); ++i) b.add_object("F" + std::to_string(i));
  std::vector<ObjId> src, tgt;
  SearchBudget budget(bound);
  for (ObjId i = 0; i < r.objects.size(); ++i) {
    for (ObjId j = 0; j < r.objects.size(); ++j) {
      for_each_transformation(G, a, r.objects[i], r.objects[j], {}, budget, [&](const NatTransformation& t) {
        MorId id = b.add_morphism(i, j, "t" + std::to_string(r.morphisms.size()));
        r.morphism_index.emplace(std::make_tuple(i, j, t.components), id);
        r.morphisms.push_back(t);
        src.push_back(i);
        tgt.push_back(j);
        return true;
      });
    }
  }
  auto lookup = [&](ObjId s, ObjId t, std::vector<MorId> comps) {
    auto it = r.morphism_index.find({s, t, comps});
    if (it == r.morphism_index.end()) throw Error(ErrorKind::invalid_argument, "transformation not enumerated");
    return it->second;
  };
  for (ObjId i = 0; i < r.objects.size(); ++i) {
    std::vector<MorId> comps;
    for (ObjId g = 0; g < G.num_objects(); ++g) comps.push_back(a.identity(r.objects[i].on_objects[g]));
    b.set_identity(i, lookup(i, i, comps));
  }
  b.fill_compose([&](MorId g, MorId f) {
    std::vector<MorId> comps;
    for (ObjId x = 0; x < G.num_objects(); ++x) {
      comps.push_back(a.compose(r.morphisms[g].components[x], r.morphisms[f].components[x]));
    }
    return lookup(src[f], tgt[g], std::move(comps));
  });
  FinCategory cat = b.build();
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId m = 0; m < r.morphisms.size(); ++m) {
    std::vector<MorId> comps;
    bool all_marked = true;
    for (MorId x : r.morphisms[m].components) {
      comps.push_back(A.star(x));
      all_marked = all_marked && A.is_marked(x);
    }
    star.push_back(lookup(tgt[m], src[m], std::move(comps)));
    marked.push_back(all_marked);
  }
  r.category = StarCategory::make(std::move(cat), std::move(star), std::move(marked), A.flavor());
  return r;
}

Functor evaluation(const FunuResult& F, ObjId g) {
  Functor e;
  for (const Functor& x : F.objects) e.on_objects.push_back(x.on_objects[g]);
  for (const NatTransformation& t : F.morphisms) e.on_morphisms.push_back(t.components[g]);
  return e;
}

Functor constant_embedding(const StarCategory& A, const FunuResult& F) {
  const FinCategory& a = A.base();
  const std::size_t ng = F.objects.empty() ? 0 : F.objects[0].on_objects.size();
  const std::size_t mg = F.objects.empty() ? 0 : F.objects[0].on_morphisms.size();
  Functor r;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    Functor c{std::vector<ObjId>(ng, x), std::vector<MorId>(mg, a.identity(x))};
    auto id = F.find_object(c);
    if (!id) throw Error(ErrorKind::invalid_argument, "constant functor missing from the functor category");
    r.on_objects.push_back(*id);
  }
  for (MorId f = 0; f < a.num_morphisms(); ++f) {
    auto id = F.find_morphism(r.on_objects[a.src(f)], r.on_objects[a.tgt(f)], {std::vector<MorId>(ng, f)});
    if (!id) throw Error(ErrorKind::invalid_argument, "constant transformation missing from the functor category");
    r.on_morphisms.push_back(*id);
  }
  return r;
}

Functor exponential_transport(const StarCategory& C, const SharpResult& CG, const FunuResult& F,
                              const Functor& Phi) {
  const FinCategory& c = C.base();
  const std::size_t ng = CG.groupoid_objects, mg = CG.groupoid_morphisms;
  Functor Psi;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    Functor at_x;
    for (ObjId g = 0; g < ng; ++g) at_x.on_objects.push_back(Phi.on_objects[CG.object(x, g)]);
    for (MorId phi = 0; phi < mg; ++phi) at_x.on_morphisms.push_back(Phi.on_morphisms[CG.morphism(c.identity(x), phi)]);
    Psi.on_objects.push_back(F.find_object(at_x).value_or(kNone));
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    NatTransformation t;
    for (ObjId g = 0; g < ng; ++g) {
      t.components.push_back(Phi.on_morphisms[CG.morphism(f, CG.groupoid.identity(g))]);
    }
    ObjId s = Psi.on_objects[c.src(f)], d = Psi.on_objects[c.tgt(f)];
    Psi.on_morphisms.push_back(s == kNone || d == kNone ? kNone : F.find_morphism(s, d, t).value_or(kNone));
  }
  return Psi;
}

Functor exponential_transport_inverse(const StarCategory& C, const SharpResult& CG, const StarCategory& A,
                                      const FunuResult& F, const Functor& Psi) {
  const FinCategory& cg = CG.category.base();
  (void)C;
  Functor Phi;
  for (ObjId x = 0; x < cg.num_objects(); ++x) {
    Phi.on_objects.push_back(F.objects[Psi.on_objects[CG.base_object(x)]].on_objects[CG.groupoid_object(x)]);
  }
  for (MorId m = 0; m < cg.num_morphisms(); ++m) {
    MorId f = CG.base_morphism(m), phi = CG.groupoid_morphism(m);
    ObjId g = CG.groupoid_object(cg.src(m));
    const Functor& target = F.objects[Psi.on_objects[CG.base_object(cg.tgt(m))]];
    Phi.on_morphisms.push_back(
        A.base().compose(target.on_morphisms[phi], F.morphisms[Psi.on_morphisms[f]].components[g]));
  }
  return Phi;
}

ExponentialReport verify_exponential_law(const StarCategory& C, const FinCategory& G, const StarCategory& A,
                                         std::uint64_t bound) {
  if (C.flavor() != A.flavor()) throw Error(ErrorKind::invalid_argument, "exponential law needs one flavor");
  SharpResult CG = sharp(C, G);
  FunuResult F = funu(G, A, bound);
  std::vector<Functor> left = enumerate_star_functors(CG.category, A, bound);
  std::vector<Functor> right = enumerate_star_functors(C, F.category, bound);
  ExponentialReport rep;
  rep.left = left.size();
  rep.right = right.size();
  rep.bijective = rep.left == rep.right;
  if (!rep.bijective) rep.witness = {{"reason", "hom-set sizes differ"}};
  for (std::size_t k = 0; k < left.size() && rep.bijective; ++k) {
    Functor Psi = exponential_transport(C, CG, F, left[k]);
    if (!is_star_functor(C, F.category, Psi)) {
      rep.bijective = false;
      rep.witness = {{"reason", "transport is not a *-functor"}, {"index", k}};
    } else if (exponential_transport_inverse(C, CG, A, F, Psi) != left[k]) {
      rep.bijective = false;
      rep.witness = {{"reason", "round trip from the tensor side fails"}, {"index", k}};
    }
  }
  for (std::size_t k = 0; k < right.size() && rep.bijective; ++k) {
    Functor Phi = exponential_transport_inverse(C, CG, A, F, right[k]);
    if (!is_star_functor(CG.category, A, Phi)) {
      rep.bijective = false;
      rep.witness = {{"reason", "inverse transport is not a *-functor"}, {"index", k}};
    } else if (exponential_transport(C, CG, F, Phi) != right[k]) {
      rep.bijective = false;
      rep.witness = {{"reason", "round trip from the cotensor side fails"}, {"index", k}};
    }
  }
  return rep;
}

}  // namespace mstar
