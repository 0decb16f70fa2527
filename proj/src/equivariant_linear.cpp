#include <map>

#include "mstar/equivariant.hpp"
#include "mstar/error.hpp"
#include "mstar/linalg.hpp"

namespace mstar {

using nlohmann::json;

namespace {

Vec block(const Vec& v, std::size_t off, std::size_t d) { return Vec(v.begin() + off, v.begin() + off + d); }

MorId gtilde_morphism(const FinGroup& G, GroupElem h, GroupElem k) { return MorId(h * G.order() + k); }

}  // namespace

GAction marked_action(const LinearGAction& A) {
  GAction r{A.group, marked_groupoid(A.base), {}};
  for (const LinearFunctor& g : A.act) r.act.push_back(restrict_to_marked(A.base, A.base, g));
  return r;
}

LinearResolution resolution(const LinearGAction& A, std::uint64_t bound) {
  validate_action(A);
  const FinGroup& G = A.group;
  const LinearStarCategory& B = A.base;
  const std::size_t n = G.order();
  LinearResolution R;
  R.funu = funu(indiscrete_category(n), B, bound);
  const LinearFunuResult& F = R.funu;
  const LinearStarCategory& FC = F.category();
  const std::size_t N = F.objects.size();
  GAction M = marked_action(A);

  R.action.group = G;
  R.action.base = FC;
  for (GroupElem g = 0; g < n; ++g) {
    const GroupElem gi = G.inv(g);
    LinearFunctor act;
    for (const Functor& a : F.objects) {
      Functor ga;
      for (GroupElem h = 0; h < n; ++h) ga.on_objects.push_back(M.act[g].on_objects[a.on_objects[G.mul(gi, h)]]);
      for (GroupElem h = 0; h < n; ++h) {
        for (GroupElem k = 0; k < n; ++k) {
          ga.on_morphisms.push_back(
              M.act[g].on_morphisms[a.on_morphisms[gtilde_morphism(G, G.mul(gi, h), G.mul(gi, k))]]);
        }
      }
      act.on_objects.push_back(F.object_index.at(ga));
    }
    act.on_basis.resize(N * N);
    for (ObjId s = 0; s < N; ++s) {
      for (ObjId t = 0; t < N; ++t) {
        const Functor &fs = F.objects[s], &ft = F.objects[t];
        ObjId gs = act.on_objects[s], gt = act.on_objects[t];
        for (const Vec& x : F.sub.basis[s * N + t]) {
          Vec y;
          for (GroupElem h = 0; h < n; ++h) {
            GroupElem src = G.mul(gi, h);
            ObjId a = fs.on_objects[src], b = ft.on_objects[src];
            Vec part = apply(B, B, A.act[g], a, b, block(x, F.block_offset(B, s, t, src), B.dim(a, b)));
            y.insert(y.end(), part.begin(), part.end());
          }
          act.on_basis[s * N + t].push_back(F.sub.coordinates(gs, gt, y));
        }
      }
    }
    R.action.act.push_back(std::move(act));
  }
  validate_action(R.action);

  // r: x ↦ constant functor, f ↦ (f)_h.
  StarCategory Bg = marked_groupoid(B);
  const std::size_t nb = B.num_objects();
  R.unit.on_basis.resize(nb * nb);
  for (ObjId x = 0; x < nb; ++x) {
    Functor c{std::vector<ObjId>(n, x), std::vector<MorId>(n * n, Bg.base().identity(x))};
    R.unit.on_objects.push_back(F.object_index.at(c));
  }
  for (ObjId x = 0; x < nb; ++x) {
    for (ObjId y = 0; y < nb; ++y) {
      for (std::size_t k = 0; k < B.dim(x, y); ++k) {
        Vec amb;
        Vec e = unit_vec(B.dim(x, y), k);
        for (GroupElem h = 0; h < n; ++h) amb.insert(amb.end(), e.begin(), e.end());
        R.unit.on_basis[x * nb + y].push_back(F.sub.coordinates(R.unit.on_objects[x], R.unit.on_objects[y], amb));
      }
    }
  }
  return R;
}

LinearInvariantSubcategory invariant_subcategory(const LinearGAction& a) {
  const LinearStarCategory& B = a.base;
  LinearInvariantSubcategory r;
  for (ObjId x = 0; x < B.num_objects(); ++x) {
    bool fixed = true;
    for (const LinearFunctor& g : a.act) fixed = fixed && g.on_objects[x] == x;
    if (fixed) r.objects.push_back(x);
  }
  const std::size_t m = r.objects.size();
  std::vector<std::vector<Vec>> kernels(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ObjId x = r.objects[i], y = r.objects[j];
      const std::size_t d = B.dim(x, y);
      if (d == 0) continue;
      std::vector<Vec> columns;
      for (std::size_t k = 0; k < d; ++k) {
        Vec col;
        Vec e = unit_vec(d, k);
        for (const LinearFunctor& g : a.act) {
          Vec diff = apply(B, B, g, x, y, e) - e;
          col.insert(col.end(), diff.begin(), diff.end());
        }
        columns.push_back(std::move(col));
      }
      kernels[i * m + j] = nullspace(columns, d * a.act.size());
    }
  }
  std::map<ObjId, ObjId> local;
  for (std::size_t i = 0; i < m; ++i) local[r.objects[i]] = ObjId(i);
  AmbientStructure s;
  s.num_objects = m;
  for (ObjId x : r.objects) s.object_names.push_back(B.object_name(x));
  s.basis = [&](ObjId i, ObjId j) { return kernels[i * m + j]; };
  s.compose = [&](ObjId i, ObjId j, ObjId k, const Vec& g, const Vec& f) {
    return B.compose(r.objects[i], r.objects[j], r.objects[k], g, f);
  };
  s.star = [&](ObjId i, ObjId j, const Vec& v) { return B.star(r.objects[i], r.objects[j], v); };
  s.identity = [&](ObjId i) { return B.identity(r.objects[i]); };
  for (const LinMor& u : B.marked()) {
    if (!local.count(u.src) || !local.count(u.tgt)) continue;
    bool fixed = true;
    for (const LinearFunctor& g : a.act) fixed = fixed && apply(B, B, g, u) == u;
    if (fixed) s.marked.push_back({local[u.src], local[u.tgt], u.v});
  }
  r.sub = build_linear_subcategory(s);
  return r;
}

LinearFixedPointCategory fixed_points(const LinearGAction& A, std::uint64_t bound) {
  validate_action(A);
  const FinGroup& G = A.group;
  const LinearStarCategory& B = A.base;
  const std::size_t n = G.order();
  GAction M = marked_action(A);
  const FinCategory& mg = M.base.base();
  const auto& ms = B.marked();
  SearchBudget budget(bound);
  LinearFixedPointCategory P;

  for (ObjId b = 0; b < B.num_objects(); ++b) {
    std::vector<std::size_t> rho(n, 0);
    rho[G.unit()] = mg.identity(b);
    auto rec = [&](auto&& self, GroupElem g) -> void {
      if (g == n) {
        for (GroupElem x = 0; x < n; ++x) {
          for (GroupElem y = 0; y < n; ++y) {
            if (mg.compose(M.act[x].on_morphisms[rho[y]], MorId(rho[x])) != rho[G.mul(x, y)]) return;
          }
        }
        P.base.push_back(b);
        P.rho.push_back(rho);
        return;
      }
      if (g == G.unit()) return self(self, g + 1);
      for (MorId u : mg.hom(b, M.act[g].on_objects[b])) {
        budget.tick();
        rho[g] = u;
        self(self, g + 1);
      }
    };
    rec(rec, 0);
  }

  const std::size_t m = P.base.size();
  // f: b → b' with ρ'(g)∘f = g(f)∘ρ(g) for all g, as a kernel.
  auto defect = [&](std::size_t i, std::size_t j, const Vec& f) {
    ObjId b = P.base[i], c = P.base[j];
    Vec out;
    for (GroupElem g = 0; g < n; ++g) {
      ObjId gc = M.act[g].on_objects[c];
      Vec lhs = B.compose(b, c, gc, ms[P.rho[j][g]].v, f);
      Vec rhs = B.compose(b, M.act[g].on_objects[b], gc, apply(B, B, A.act[g], b, c, f), ms[P.rho[i][g]].v);
      Vec diff = lhs - rhs;
      out.insert(out.end(), diff.begin(), diff.end());
    }
    return out;
  };
  std::vector<std::vector<Vec>> kernels(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t d = B.dim(P.base[i], P.base[j]);
      if (d == 0) continue;
      std::vector<Vec> columns;
      for (std::size_t k = 0; k < d; ++k) columns.push_back(defect(i, j, unit_vec(d, k)));
      std::size_t codim = columns[0].size();
      kernels[i * m + j] = nullspace(columns, codim);
    }
  }
  AmbientStructure s;
  s.num_objects = m;
  for (std::size_t i = 0; i < m; ++i) s.object_names.push_back("(" + B.object_name(P.base[i]) + "," + std::to_string(i) + ")");
  s.basis = [&](ObjId i, ObjId j) { return kernels[i * m + j]; };
  s.compose = [&](ObjId i, ObjId j, ObjId k, const Vec& g, const Vec& f) {
    return B.compose(P.base[i], P.base[j], P.base[k], g, f);
  };
  s.star = [&](ObjId i, ObjId j, const Vec& v) { return B.star(P.base[i], P.base[j], v); };
  s.identity = [&](ObjId i) { return B.identity(P.base[i]); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const LinMor& u : ms) {
        if (u.src == P.base[i] && u.tgt == P.base[j] && is_zero(defect(i, j, u.v))) {
          s.marked.push_back({ObjId(i), ObjId(j), u.v});
        }
      }
    }
  }
  P.sub = build_linear_subcategory(s);
  return P;
}

LinearFunctor fixed_points_to_limit(const LinearGAction& A, const LinearFixedPointCategory& P,
                                    const LinearResolution& R, const LinearInvariantSubcategory& L) {
  const FinGroup& G = A.group;
  const LinearStarCategory& B = A.base;
  const std::size_t n = G.order(), m = P.base.size();
  GAction M = marked_action(A);
  std::map<ObjId, ObjId> lim_obj;
  for (ObjId k = 0; k < L.objects.size(); ++k) lim_obj[L.objects[k]] = k;

  LinearFunctor out;
  std::vector<ObjId> funu_obj;
  for (std::size_t i = 0; i < m; ++i) {
    Functor a;
    for (GroupElem h = 0; h < n; ++h) a.on_objects.push_back(M.act[h].on_objects[P.base[i]]);
    for (GroupElem h = 0; h < n; ++h) {
      for (GroupElem k = 0; k < n; ++k) {
        a.on_morphisms.push_back(M.act[h].on_morphisms[P.rho[i][G.mul(G.inv(h), k)]]);
      }
    }
    auto it = R.funu.object_index.find(a);
    if (it == R.funu.object_index.end()) throw Error(ErrorKind::invalid_functor, "fixed point is not a functor out of G̃");
    auto lim = lim_obj.find(it->second);
    if (lim == lim_obj.end()) throw Error(ErrorKind::invalid_functor, "object is not invariant");
    funu_obj.push_back(it->second);
    out.on_objects.push_back(lim->second);
  }
  out.on_basis.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const Vec& f : P.sub.basis[i * m + j]) {
        Vec amb;
        for (GroupElem h = 0; h < n; ++h) {
          Vec part = apply(B, B, A.act[h], P.base[i], P.base[j], f);
          amb.insert(amb.end(), part.begin(), part.end());
        }
        Vec coords = R.funu.sub.coordinates(funu_obj[i], funu_obj[j], amb);
        out.on_basis[i * m + j].push_back(L.sub.coordinates(out.on_objects[i], out.on_objects[j], coords));
      }
    }
  }
  return out;
}

FixedPointReport verify_fixed_points(const LinearGAction& A, std::uint64_t bound) {
  FixedPointReport rep;
  const FinGroup& G = A.group;
  const LinearStarCategory& B = A.base;
  LinearFixedPointCategory P = fixed_points(A, bound);
  const auto& ms = B.marked();
  rep.fixed_objects = P.base.size();
  rep.cocycles = true;
  for (std::size_t i = 0; i < P.base.size(); ++i) {
    if (!(ms[P.rho[i][G.unit()]] == B.identity_mor(P.base[i]))) rep.cocycles = false;
    for (GroupElem g = 0; g < G.order(); ++g) {
      for (GroupElem h = 0; h < G.order(); ++h) {
        LinMor lhs = B.compose(apply(B, B, A.act[g], ms[P.rho[i][h]]), ms[P.rho[i][g]]);
        if (!(lhs == ms[P.rho[i][G.mul(g, h)]])) rep.cocycles = false;
      }
    }
  }
  // build_linear_subcategory rejects spans that are not closed.
  rep.closed = true;
  const std::size_t m = P.base.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rep.fixed_morphisms += P.sub.category.dim(ObjId(i), ObjId(j));
  }
  LinearResolution R = resolution(A, bound);
  LinearInvariantSubcategory L = invariant_subcategory(R.action);
  LinearFunctor iso = fixed_points_to_limit(A, P, R, L);
  rep.isomorphic = is_linear_isomorphism(P.sub.category, L.sub.category, iso);
  Verdict unit = is_linear_functor(B, R.funu.category(), R.unit)
                     ? is_linear_weak_equivalence(B, R.funu.category(), R.unit)
                     : Verdict{false, {{"reason", "r is not a linear *-functor"}}};
  rep.unit_weak_equivalence = unit.ok;
  rep.witness = {{"limit_objects", L.objects.size()}};
  if (!unit) rep.witness["unit"] = unit.witness;
  return rep;
}

Verdict is_injectively_fibrant(const LinearGAction& R, const std::vector<EquivariantLeftMap>& left,
                               std::uint64_t bound) {
  return is_injectively_fibrant(marked_action(R), left, bound);
}

}  // namespace mstar
