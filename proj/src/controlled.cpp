#include "mstar/controlled.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

Relation identity_relation(std::uint32_t n) {
  Relation r{n, n, 0};
  for (std::uint32_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation compose(const Relation& V, const Relation& U) {
  if (V.cols != U.rows) throw Error(ErrorKind::invalid_argument, "relations are not composable");
  Relation r{V.rows, U.cols, 0};
  for (std::uint32_t z = 0; z < V.rows; ++z) {
    for (std::uint32_t y = 0; y < V.cols; ++y) {
      if (!V.has(z, y)) continue;
      for (std::uint32_t x = 0; x < U.cols; ++x) {
        if (U.has(y, x)) r.set(z, x);
      }
    }
  }
  return r;
}

Relation transpose(const Relation& U) {
  Relation r{U.cols, U.rows, 0};
  for (std::uint32_t a = 0; a < U.rows; ++a) {
    for (std::uint32_t b = 0; b < U.cols; ++b) {
      if (U.has(a, b)) r.set(b, a);
    }
  }
  return r;
}

Relation relation_union(const Relation& a, const Relation& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorKind::invalid_argument, "relations of different shape");
  return {a.rows, a.cols, a.bits | b.bits};
}

bool is_bijection(const Relation& R) {
  return R.rows == R.cols && compose(transpose(R), R) == identity_relation(R.cols) &&
         compose(R, transpose(R)) == identity_relation(R.rows);
}

// ---- Spaces ----

bool BornCoarseSpace::is_bounded(std::uint32_t subset) const {
  if (!bornology) return true;
  for (std::uint32_t b : *bornology) {
    if ((subset & ~b) == 0) return true;
  }
  return false;
}

std::uint32_t thicken(const Relation& U, std::uint32_t B) {
  std::uint32_t out = 0;
  for (std::uint32_t x = 0; x < U.rows; ++x) {
    for (std::uint32_t b = 0; b < U.cols; ++b) {
      if (((B >> b) & 1u) && U.has(x, b)) out |= 1u << x;
    }
  }
  return out;
}

BornCoarseSpace validate_space(std::vector<std::string> points,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> generators,
                               std::optional<std::vector<std::vector<std::uint32_t>>> bornology,
                               std::optional<FinGroup> group, std::vector<std::vector<std::uint32_t>> action) {
  const std::uint32_t n = std::uint32_t(points.size());
  if (n > 8) throw Error(ErrorKind::invalid_argument, "spaces have at most 8 points");
  BornCoarseSpace X;
  X.points = std::move(points);
  X.coarse = identity_relation(n);
  for (auto [a, b] : generators) {
    if (a >= n || b >= n) throw Error(ErrorKind::invalid_argument, "entourage generator out of range");
    X.coarse.set(a, b);
    X.coarse.set(b, a);
  }
  X.generators = std::move(generators);
  for (;;) {
    Relation next = relation_union(X.coarse, compose(X.coarse, X.coarse));
    if (next == X.coarse) break;
    X.coarse = next;
  }
  if (bornology) {
    std::vector<std::uint32_t> masks;
    for (const auto& set : *bornology) {
      std::uint32_t m = 0;
      for (std::uint32_t p : set) {
        if (p >= n) throw Error(ErrorKind::invalid_argument, "bounded set mentions an unknown point");
        m |= 1u << p;
      }
      masks.push_back(m);
    }
    X.bornology = masks;
    for (std::uint32_t p = 0; p < n; ++p) {
      if (!X.is_bounded(1u << p)) {
        throw Error(ErrorKind::incompatible_structures, "a singleton is not bounded", {{"point", X.points[p]}});
      }
    }
    for (std::uint32_t b : masks) {
      if (!X.is_bounded(thicken(X.coarse, b))) {
        throw Error(ErrorKind::incompatible_structures, "thickening of a bounded set is unbounded", {{"set", b}});
      }
    }
  }
  if (group) {
    if (action.size() != group->order()) throw Error(ErrorKind::invalid_action, "one permutation per element expected");
    for (GroupElem g = 0; g < group->order(); ++g) {
      std::vector<std::uint32_t> sorted = action[g];
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::uint32_t> iota(n);
      std::iota(iota.begin(), iota.end(), 0u);
      if (sorted != iota) throw Error(ErrorKind::invalid_action, "not a permutation", {{"element", group->name(g)}});
    }
    for (GroupElem g = 0; g < group->order(); ++g) {
      for (GroupElem h = 0; h < group->order(); ++h) {
        for (std::uint32_t p = 0; p < n; ++p) {
          if (action[group->mul(g, h)][p] != action[g][action[h][p]]) {
            throw Error(ErrorKind::invalid_action, "action is not multiplicative", {{"pair", {g, h}}});
          }
        }
      }
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (X.coarse.has(a, b) && !X.coarse.has(action[g][a], action[g][b])) {
            throw Error(ErrorKind::not_cofinal, "invariant entourages are not cofinal",
                        {{"element", group->name(g)}, {"pair", {X.points[a], X.points[b]}}});
          }
        }
      }
    }
    X.group = std::move(group);
    X.action = std::move(action);
  }
  return X;
}

// ---- Controlled objects ----

Relation measure(const ControlledObject& M, std::uint32_t Y) {
  Relation r{M.carrier(), M.carrier(), 0};
  for (std::uint32_t i = 0; i < M.carrier(); ++i) {
    if ((Y >> M.over[i]) & 1u) r.set(i, i);
  }
  return r;
}

std::uint32_t image_of(const Relation& e) {
  std::uint32_t out = 0;
  for (std::uint32_t a = 0; a < e.rows; ++a) {
    for (std::uint32_t b = 0; b < e.cols; ++b) {
      if (!e.has(a, b)) continue;
      if (a != b) throw Error(ErrorKind::invalid_argument, "only partial identities have an image here");
      out |= 1u << a;
    }
  }
  return out;
}

Verdict check_measure_axioms(const BornCoarseSpace& X, const ControlledObject& M) {
  const std::uint32_t n = std::uint32_t(X.size()), full = (1u << n) - 1;
  const std::uint32_t m = M.carrier();
  for (std::uint32_t p : M.over) {
    if (p >= n) return {false, {{"reason", "carrier element over an unknown point"}}};
  }
  if (measure(M, full) != identity_relation(m)) return {false, {{"axiom", "φ(X) = id"}}};
  if (measure(M, 0).bits != 0) return {false, {{"axiom", "φ(∅) = 0"}}};
  for (std::uint32_t Y = 0; Y <= full; ++Y) {
    Relation py = measure(M, Y);
    if (transpose(py) != py || compose(py, py) != py) return {false, {{"axiom", "selfadjoint idempotent"}, {"Y", Y}}};
    for (std::uint32_t Z = 0; Z <= full; ++Z) {
      Relation pz = measure(M, Z);
      if (compose(py, pz) != measure(M, Y & Z)) return {false, {{"axiom", "φ(Y)φ(Z) = φ(Y∩Z)"}, {"Y", Y}, {"Z", Z}}};
      if (relation_union(measure(M, Y | Z), measure(M, Y & Z)) != relation_union(py, pz)) {
        return {false, {{"axiom", "φ(Y∪Z) + φ(Y∩Z) = φ(Y) + φ(Z)"}, {"Y", Y}, {"Z", Z}}};
      }
    }
  }
  // ⊔ φ({x})(M) → M is a bijection: the images are disjoint and cover M.
  std::uint32_t seen = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t img = image_of(measure(M, 1u << x));
    if (img & seen) return {false, {{"axiom", "determined on points"}, {"point", x}}};
    seen |= img;
  }
  if (seen != (m == 0 ? 0u : (1u << m) - 1)) return {false, {{"axiom", "determined on points"}}};
  return {true, {}};
}

bool is_controlled(const BornCoarseSpace& X, const ControlledObject& M, const ControlledObject& N, const Relation& A,
                   const Relation& U) {
  const std::uint32_t n = std::uint32_t(X.size());
  if (n > 6) throw Error(ErrorKind::bound_exceeded, "control is scanned exhaustively only up to 6 points");
  if (A.cols != M.carrier() || A.rows != N.carrier()) throw Error(ErrorKind::ill_typed_assignment, "relation shape");
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t B = 0; B <= full; ++B) {
    std::uint32_t UB = thicken(U, B);
    for (std::uint32_t B2 = 0; B2 <= full; ++B2) {
      if (UB & B2) continue;
      if (compose(compose(measure(N, B2), A), measure(M, B)).bits != 0) return false;
    }
  }
  return true;
}

Relation support(const ControlledObject& M, const ControlledObject& N, const Relation& A, std::uint32_t points) {
  Relation s{points, points, 0};
  for (std::uint32_t r = 0; r < A.rows; ++r) {
    for (std::uint32_t c = 0; c < A.cols; ++c) {
      if (A.has(r, c)) s.set(N.over[r], M.over[c]);
    }
  }
  return s;
}

namespace {

bool contained(const Relation& a, const Relation& b) { return (a.bits & ~b.bits) == 0; }

std::vector<ControlledObject> all_objects(std::uint32_t points, const std::vector<std::uint32_t>& sizes,
                                          SearchBudget& budget) {
  std::vector<std::uint32_t> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ControlledObject> out;
  for (std::uint32_t m : sorted) {
    if (m > 8) throw Error(ErrorKind::invalid_argument, "carriers have at most 8 elements");
    if (m > 0 && points == 0) continue;
    ControlledObject cur{std::vector<std::uint32_t>(m, 0)};
    for (;;) {
      budget.tick();
      out.push_back(cur);
      std::uint32_t k = m;
      while (k > 0 && cur.over[k - 1] + 1 == points) cur.over[--k] = 0;
      if (k == 0) break;
      ++cur.over[k - 1];
    }
  }
  return out;
}

// All relations N ← M whose support lies in U, in increasing bit order.
std::vector<Relation> controlled_relations(const ControlledObject& M, const ControlledObject& N, const Relation& U,
                                           SearchBudget& budget) {
  std::uint64_t allowed = 0;
  Relation shape{N.carrier(), M.carrier(), 0};
  for (std::uint32_t r = 0; r < shape.rows; ++r) {
    for (std::uint32_t c = 0; c < shape.cols; ++c) {
      if (U.has(N.over[r], M.over[c])) allowed |= std::uint64_t(1) << (r * shape.cols + c);
    }
  }
  std::vector<std::uint64_t> subsets{0};
  for (std::uint64_t s = allowed; s != 0; s = (s - 1) & allowed) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end());
  std::vector<Relation> out;
  for (std::uint64_t s : subsets) {
    budget.tick();
    out.push_back({shape.rows, shape.cols, s});
  }
  return out;
}

std::string relation_name(const Relation& R) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t r = 0; r < R.rows; ++r) {
    for (std::uint32_t c = 0; c < R.cols; ++c) {
      if (!R.has(r, c)) continue;
      if (!first) s += ",";
      s += std::to_string(r) + "<" + std::to_string(c);
      first = false;
    }
  }
  return s + "}";
}

std::string object_name(const ControlledObject& M) {
  std::string s = "[";
  for (std::size_t i = 0; i < M.over.size(); ++i) s += (i ? "," : "") + std::to_string(M.over[i]);
  return s + "]";
}

// Builds a category whose morphisms are relations between the given objects,
// hom by hom in the order of `homs`.
struct RelationCategory {
  StarCategory category;
  std::vector<Relation> relations;
};

RelationCategory relation_category(const std::vector<std::string>& names,
                                   const std::vector<std::vector<Relation>>& homs,
                                   const std::vector<ControlledObject>& carriers,
                                   const std::function<bool(std::size_t, std::size_t, const Relation&)>& marked) {
  const std::size_t n = names.size();
  CategoryBuilder b;
  for (const auto& name : names) b.add_object(name);
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, MorId> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  RelationCategory out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const Relation& R : homs[i * n + j]) {
        index[{i, j, R.bits}] = b.add_morphism(ObjId(i), ObjId(j), relation_name(R));
        out.relations.push_back(R);
        ends.emplace_back(i, j);
      }
    }
  }
  auto find = [&](std::size_t i, std::size_t j, const Relation& R) {
    auto it = index.find({i, j, R.bits});
    if (it == index.end()) throw Error(ErrorKind::dangling_composite, "relations not closed", {{"relation", relation_name(R)}});
    return it->second;
  };
  for (std::size_t i = 0; i < n; ++i) b.set_identity(ObjId(i), find(i, i, identity_relation(carriers[i].carrier())));
  b.fill_compose([&](MorId g, MorId f) {
    return find(ends[f].first, ends[g].second, compose(out.relations[g], out.relations[f]));
  });
  std::vector<MorId> star;
  std::vector<bool> mk;
  for (MorId m = 0; m < out.relations.size(); ++m) {
    star.push_back(find(ends[m].second, ends[m].first, transpose(out.relations[m])));
    mk.push_back(marked(ends[m].first, ends[m].second, out.relations[m]));
  }
  out.category = StarCategory::make(b.build(), std::move(star), std::move(mk), Flavor::marked);
  return out;
}

bool diag_controlled(const ControlledObject& M, const ControlledObject& N, const Relation& R) {
  for (std::uint32_t r = 0; r < R.rows; ++r) {
    for (std::uint32_t c = 0; c < R.cols; ++c) {
      if (R.has(r, c) && N.over[r] != M.over[c]) return false;
    }
  }
  return true;
}

// Bijection σ on [m] as the relation {(σ(i), i)}.
Relation permutation_relation(const std::vector<std::uint32_t>& sigma) {
  Relation r{std::uint32_t(sigma.size()), std::uint32_t(sigma.size()), 0};
  for (std::uint32_t i = 0; i < sigma.size(); ++i) r.set(sigma[i], i);
  return r;
}

}  // namespace

VPlus build_vplus(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes, std::uint64_t bound) {
  SearchBudget budget(bound);
  VPlus V;
  V.objects = all_objects(std::uint32_t(X.size()), carrier_sizes, budget);
  const std::size_t n = V.objects.size();
  std::vector<std::vector<Relation>> homs(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(object_name(V.objects[i]));
    for (std::size_t j = 0; j < n; ++j) homs[i * n + j] = controlled_relations(V.objects[i], V.objects[j], X.coarse, budget);
  }
  auto marked = [&](std::size_t i, std::size_t j, const Relation& R) {
    return is_bijection(R) && diag_controlled(V.objects[i], V.objects[j], R);
  };
  RelationCategory rc = relation_category(names, homs, V.objects, marked);
  V.category = std::move(rc.category);
  V.relations = std::move(rc.relations);
  return V;
}

GAction vplus_action(const BornCoarseSpace& X, const VPlus& V) {
  if (!X.group) throw Error(ErrorKind::invalid_argument, "the space carries no action");
  const FinGroup& G = *X.group;
  std::map<ControlledObject, ObjId> obj;
  for (ObjId k = 0; k < V.objects.size(); ++k) obj[V.objects[k]] = k;
  const FinCategory& c = V.category.base();
  GAction a{G, V.category, {}};
  for (GroupElem g = 0; g < G.order(); ++g) {
    Functor F;
    for (const ControlledObject& M : V.objects) F.on_objects.push_back(obj.at(pushforward(X.action[g], M)));
    for (MorId m = 0; m < c.num_morphisms(); ++m) {
      auto hom = c.hom(F.on_objects[c.src(m)], F.on_objects[c.tgt(m)]);
      auto it = std::find_if(hom.begin(), hom.end(), [&](MorId k) { return V.relations[k] == V.relations[m]; });
      if (it == hom.end()) throw Error(ErrorKind::invalid_action, "translated relation is not controlled");
      F.on_morphisms.push_back(*it);
    }
    a.act.push_back(std::move(F));
  }
  validate_action(a);
  return a;
}

ControlledObject pushforward(const std::vector<std::uint32_t>& f, const ControlledObject& M) {
  ControlledObject r;
  for (std::uint32_t p : M.over) r.over.push_back(f[p]);
  return r;
}

EquivariantVPlus equivariant_vplus(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes,
                                   std::uint64_t bound) {
  if (!X.group) throw Error(ErrorKind::invalid_argument, "the space carries no action");
  const FinGroup& G = *X.group;
  SearchBudget budget(bound);
  std::vector<ControlledObject> base = all_objects(std::uint32_t(X.size()), carrier_sizes, budget);
  EquivariantVPlus E;
  for (const ControlledObject& M : base) {
    const std::uint32_t m = M.carrier();
    // Candidate ρ(g): permutations σ with p∘σ = g∘p.
    std::vector<std::vector<Relation>> options(G.order());
    std::vector<std::uint32_t> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0u);
    do {
      budget.tick();
      for (GroupElem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (std::uint32_t i = 0; i < m && ok; ++i) ok = M.over[sigma[i]] == X.action[g][M.over[i]];
        if (ok) options[g].push_back(permutation_relation(sigma));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (auto& o : options) std::sort(o.begin(), o.end());
    std::vector<Relation> rho(G.order());
    auto rec = [&](auto&& self, GroupElem g) -> void {
      if (g == G.order()) {
        if (rho[G.unit()] != identity_relation(m)) return;
        for (GroupElem a = 0; a < G.order(); ++a) {
          for (GroupElem b = 0; b < G.order(); ++b) {
            if (compose(rho[a], rho[b]) != rho[G.mul(a, b)]) return;
          }
        }
        E.objects.push_back({M, rho});
        return;
      }
      for (const Relation& r : options[g]) {
        budget.tick();
        rho[g] = r;
        self(self, g + 1);
      }
    };
    rec(rec, 0);
  }
  const std::size_t n = E.objects.size();
  std::vector<std::vector<Relation>> homs(n * n);
  std::vector<std::string> names;
  std::vector<ControlledObject> carriers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(object_name(E.objects[i].object) + "#" + std::to_string(i));
    carriers.push_back(E.objects[i].object);
    for (std::size_t j = 0; j < n; ++j) {
      for (const Relation& A : controlled_relations(E.objects[i].object, E.objects[j].object, X.coarse, budget)) {
        bool equivariant = true;
        for (GroupElem g = 0; g < G.order() && equivariant; ++g) {
          equivariant = compose(A, E.objects[i].rho[g]) == compose(E.objects[j].rho[g], A);
        }
        if (equivariant) homs[i * n + j].push_back(A);
      }
    }
  }
  auto marked = [&](std::size_t i, std::size_t j, const Relation& R) {
    return is_bijection(R) && diag_controlled(E.objects[i].object, E.objects[j].object, R);
  };
  RelationCategory rc = relation_category(names, homs, carriers, marked);
  E.category = std::move(rc.category);
  E.relations = std::move(rc.relations);
  return E;
}

Functor equivariant_to_fixed_points(const BornCoarseSpace& X, const EquivariantVPlus& E, const VPlus& V,
                                    const FixedPointCategory& P) {
  const FinGroup& G = *X.group;
  std::map<ControlledObject, ObjId> vobj;
  for (ObjId k = 0; k < V.objects.size(); ++k) vobj[V.objects[k]] = k;
  const FinCategory& v = V.category.base();
  auto morphism_of = [&](ObjId s, ObjId t, const Relation& R) {
    for (MorId k : v.hom(s, t)) {
      if (V.relations[k] == R) return k;
    }
    throw Error(ErrorKind::invalid_functor, "relation is not a morphism of V+", {{"relation", relation_name(R)}});
  };
  std::map<std::pair<ObjId, std::vector<MorId>>, ObjId> pobj;
  for (ObjId k = 0; k < P.objects.size(); ++k) pobj[{P.objects[k].base, P.objects[k].rho}] = k;

  Functor F;
  for (const EquivariantObject& o : E.objects) {
    ObjId b = vobj.at(o.object);
    std::vector<MorId> rho;
    for (GroupElem g = 0; g < G.order(); ++g) {
      rho.push_back(morphism_of(b, vobj.at(pushforward(X.action[g], o.object)), transpose(o.rho[g])));
    }
    auto it = pobj.find({b, rho});
    if (it == pobj.end()) throw Error(ErrorKind::invalid_functor, "triple has no fixed point");
    F.on_objects.push_back(it->second);
  }
  const FinCategory &e = E.category.base(), &p = P.category.base();
  for (MorId m = 0; m < e.num_morphisms(); ++m) {
    MorId under = morphism_of(P.objects[F.on_objects[e.src(m)]].base, P.objects[F.on_objects[e.tgt(m)]].base,
                              E.relations[m]);
    MorId image = kNone;
    for (MorId k : p.hom(F.on_objects[e.src(m)], F.on_objects[e.tgt(m)])) {
      if (P.underlying[k] == under) image = k;
    }
    if (image == kNone) throw Error(ErrorKind::invalid_functor, "equivariant relation is not an intertwiner");
    F.on_morphisms.push_back(image);
  }
  return F;
}

ControlledReport verify_controlled(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes,
                                   std::uint64_t bound) {
  ControlledReport rep;
  const std::uint32_t np = std::uint32_t(X.size());
  VPlus V = build_vplus(X, carrier_sizes, bound);
  rep.objects = V.category.num_objects();
  rep.morphisms = V.category.num_morphisms();
  const FinCategory& c = V.category.base();

  rep.measures = true;
  for (const ControlledObject& M : V.objects) {
    Verdict v = check_measure_axioms(X, M);
    if (!v) {
      rep.measures = false;
      rep.witness["measures"] = v.witness;
      break;
    }
  }

  // Control by the subset scan agrees with support ⊆ U for every entourage U ⊆ X×X.
  rep.control_definition = true;
  SearchBudget budget(bound);
  const std::uint32_t pairs = np * np;
  for (std::size_t i = 0; i < V.objects.size() && rep.control_definition; ++i) {
    for (std::size_t j = 0; j < V.objects.size() && rep.control_definition; ++j) {
      const ControlledObject &M = V.objects[i], &N = V.objects[j];
      Relation all{np, np, pairs == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << pairs) - 1};
      for (const Relation& A : controlled_relations(M, N, all, budget)) {
        Relation s = support(M, N, A, np);
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << pairs); ++u) {
          budget.tick();
          Relation U{np, np, u};
          if (is_controlled(X, M, N, A, U) != contained(s, U)) {
            rep.control_definition = false;
            rep.witness["control"] = {{"relation", relation_name(A)}, {"entourage", u}};
            break;
          }
        }
        if (!rep.control_definition) break;
      }
    }
  }

  rep.composition = true;
  for (MorId f = 0; f < c.num_morphisms() && rep.composition; ++f) {
    const ControlledObject &M = V.objects[c.src(f)], &N = V.objects[c.tgt(f)];
    Relation sf = support(M, N, V.relations[f], np);
    if (support(N, M, transpose(V.relations[f]), np) != transpose(sf)) {
      rep.composition = false;
      rep.witness["transpose"] = relation_name(V.relations[f]);
    }
    for (MorId g : c.out(c.tgt(f))) {
      const ControlledObject& L = V.objects[c.tgt(g)];
      Relation sg = support(N, L, V.relations[g], np);
      Relation sgf = support(M, L, compose(V.relations[g], V.relations[f]), np);
      if (!contained(sgf, compose(sg, sf))) {
        rep.composition = false;
        rep.witness["composite"] = {relation_name(V.relations[g]), relation_name(V.relations[f])};
        break;
      }
    }
  }

  rep.marked = true;
  for (MorId f : V.category.marked_list()) {
    if (!V.category.is_unitary(f) || !V.category.is_marked(V.category.star(f))) rep.marked = false;
    for (MorId g : c.out(c.tgt(f))) {
      if (V.category.is_marked(g) && !V.category.is_marked(c.compose(g, f))) rep.marked = false;
    }
  }

  if (X.group) {
    EquivariantVPlus E = equivariant_vplus(X, carrier_sizes, bound);
    rep.equivariant_objects = E.category.num_objects();
    GAction action = vplus_action(X, V);
    FixedPointCategory P = fixed_points(action, bound);
    Functor F = equivariant_to_fixed_points(X, E, V, P);
    rep.isomorphic = is_star_isomorphism(E.category, P.category, F);
    rep.witness["fixed_point_objects"] = P.category.num_objects();
  } else {
    rep.isomorphic = true;
  }
  return rep;
}

}  // namespace mstar
