#include "mstar/error.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/linalg.hpp"

namespace mstar {

using nlohmann::json;

Vec LinearSharpResult::element(const LinearStarCategory& A, MorId phi, ObjId a, ObjId b, const Vec& v) const {
  const std::size_t d = A.dim(a, b);
  Vec out(groupoid.hom(groupoid.src(phi), groupoid.tgt(phi)).size() * d);
  const std::size_t off = groupoid.hom_position(phi) * d;
  for (std::size_t i = 0; i < d; ++i) out[off + i] = v[i];
  return out;
}

LinearSharpResult sharp(const LinearStarCategory& A, const FinCategory& G) {
  const std::vector<MorId> ginv = groupoid_inverses(G);
  LinearSharpResult r;
  r.groupoid = G;
  r.base_objects = A.num_objects();
  const std::size_t na = A.num_objects(), ng = G.num_objects();
  LinearBuilder b;
  for (ObjId a = 0; a < na; ++a) {
    for (ObjId g = 0; g < ng; ++g) b.add_object("(" + A.object_name(a) + "," + G.object_name(g) + ")");
  }
  for (ObjId a = 0; a < na; ++a) {
    for (ObjId g = 0; g < ng; ++g) {
      for (ObjId a2 = 0; a2 < na; ++a2) {
        for (ObjId g2 = 0; g2 < ng; ++g2) {
          std::vector<std::string> names;
          for (MorId phi : G.hom(g, g2)) {
            for (std::size_t i = 0; i < A.dim(a, a2); ++i) {
              names.push_back("(" + G.morphism_name(phi) + "," + A.basis_name(a, a2, i) + ")");
            }
          }
          if (!names.empty()) b.set_basis(r.object(a, g), r.object(a2, g2), std::move(names));
        }
      }
    }
  }
  for (ObjId a = 0; a < na; ++a) {
    for (ObjId g = 0; g < ng; ++g) {
      if (A.dim(a, a) > 0) b.set_identity(r.object(a, g), r.element(A, G.identity(g), a, a, A.identity(a)));
    }
  }
  // Structure constants on basis pairs (ψ, e_j)∘(φ, e_i) = (ψφ, e_j e_i).
  for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
    for (ObjId a = 0; a < na; ++a) {
      for (ObjId a2 = 0; a2 < na; ++a2) {
        const std::size_t d = A.dim(a, a2);
        const ObjId x = r.object(a, G.src(phi)), y = r.object(a2, G.tgt(phi));
        for (std::size_t i = 0; i < d; ++i) {
          const std::size_t fi = G.hom_position(phi) * d + i;
          b.set_basis_star(x, y, fi, r.element(A, ginv[phi], a2, a, A.basis_star(a, a2, i)));
          for (MorId psi : G.out(G.tgt(phi))) {
            for (ObjId a3 = 0; a3 < na; ++a3) {
              const std::size_t d2 = A.dim(a2, a3);
              const ObjId z = r.object(a3, G.tgt(psi));
              for (std::size_t j = 0; j < d2; ++j) {
                b.set_basis_product(x, y, z, G.hom_position(psi) * d2 + j, fi,
                                    r.element(A, G.compose(psi, phi), a, a3, A.basis_product(a, a2, a3, j, i)));
              }
            }
          }
        }
      }
    }
  }
  for (const LinMor& m : A.marked()) {
    for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
      b.add_marked({r.object(m.src, G.src(phi)), r.object(m.tgt, G.tgt(phi)), r.element(A, phi, m.src, m.tgt, m.v)});
    }
  }
  r.category = b.build();
  return r;
}

std::size_t LinearFunuResult::block_offset(const LinearStarCategory& A, ObjId s, ObjId t, ObjId g) const {
  std::size_t off = 0;
  for (ObjId x = 0; x < g; ++x) off += A.dim(objects[s].on_objects[x], objects[t].on_objects[x]);
  return off;
}

namespace {

std::size_t ambient_dim(const LinearStarCategory& A, const Functor& F, const Functor& H) {
  std::size_t d = 0;
  for (std::size_t x = 0; x < F.on_objects.size(); ++x) d += A.dim(F.on_objects[x], H.on_objects[x]);
  return d;
}

Vec block(const Vec& v, std::size_t off, std::size_t d) {
  return Vec(v.begin() + std::ptrdiff_t(off), v.begin() + std::ptrdiff_t(off + d));
}

}  // namespace

LinearFunuResult funu(const FinCategory& G, const LinearStarCategory& A, std::uint64_t bound) {
  groupoid_inverses(G);
  LinearFunuResult r;
  r.groupoid = G;
  StarCategory Ag = marked_groupoid(A);
  r.objects = enumerate_functors(G, Ag.base(), {}, bound);
  for (ObjId i = 0; i < r.objects.size(); ++i) r.object_index.emplace(r.objects[i], i);
  const auto& ms = A.marked();
  const std::size_t n = r.objects.size(), ng = G.num_objects();

  auto obj = [&](ObjId s, ObjId x) { return r.objects[s].on_objects[x]; };
  auto offsets = [&](ObjId s, ObjId t) {
    std::vector<std::size_t> off(ng + 1, 0);
    for (ObjId x = 0; x < ng; ++x) off[x + 1] = off[x] + A.dim(obj(s, x), obj(t, x));
    return off;
  };

  // Naturality t_{g'}∘F(φ) = F'(φ)∘t_g for every φ: g → g', as a kernel.
  std::vector<std::vector<Vec>> naturals(n * n);
  for (ObjId s = 0; s < n; ++s) {
    for (ObjId t = 0; t < n; ++t) {
      auto off = offsets(s, t);
      std::size_t codim = 0;
      std::vector<std::size_t> roff;
      for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
        roff.push_back(codim);
        codim += A.dim(obj(s, G.src(phi)), obj(t, G.tgt(phi)));
      }
      std::vector<Vec> columns;
      for (ObjId x = 0; x < ng; ++x) {
        for (std::size_t k = 0; k < off[x + 1] - off[x]; ++k) {
          Vec col(codim);
          Vec e = unit_vec(off[x + 1] - off[x], k);
          for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
            ObjId g = G.src(phi), g2 = G.tgt(phi);
            const LinMor& Fs = ms[r.objects[s].on_morphisms[phi]];
            const LinMor& Ft = ms[r.objects[t].on_morphisms[phi]];
            Vec contrib(A.dim(obj(s, g), obj(t, g2)));
            if (x == g) contrib = contrib + A.compose(obj(s, g), obj(t, g), obj(t, g2), Ft.v, e);
            if (x == g2) contrib = contrib - A.compose(obj(s, g), obj(s, g2), obj(t, g2), e, Fs.v);
            for (std::size_t i = 0; i < contrib.size(); ++i) col[roff[phi] + i] = contrib[i];
          }
          columns.push_back(std::move(col));
        }
      }
      naturals[s * n + t] = columns.empty() ? std::vector<Vec>{} : nullspace(columns, codim);
    }
  }

  AmbientStructure amb;
  amb.num_objects = n;
  for (ObjId i = 0; i < n; ++i) amb.object_names.push_back("F" + std::to_string(i));
  amb.basis = [&](ObjId s, ObjId t) { return naturals[s * n + t]; };
  amb.compose = [&](ObjId a, ObjId b, ObjId c, const Vec& g, const Vec& f) {
    auto oab = offsets(a, b), obc = offsets(b, c);
    Vec out;
    for (ObjId x = 0; x < ng; ++x) {
      Vec h = A.compose(obj(a, x), obj(b, x), obj(c, x), block(g, obc[x], obc[x + 1] - obc[x]),
                        block(f, oab[x], oab[x + 1] - oab[x]));
      out.insert(out.end(), h.begin(), h.end());
    }
    return out;
  };
  amb.star = [&](ObjId a, ObjId b, const Vec& v) {
    auto oab = offsets(a, b);
    Vec out;
    for (ObjId x = 0; x < ng; ++x) {
      Vec h = A.star(obj(a, x), obj(b, x), block(v, oab[x], oab[x + 1] - oab[x]));
      out.insert(out.end(), h.begin(), h.end());
    }
    return out;
  };
  amb.identity = [&](ObjId a) {
    Vec out;
    for (ObjId x = 0; x < ng; ++x) {
      const Vec& h = A.identity(obj(a, x));
      out.insert(out.end(), h.begin(), h.end());
    }
    return out;
  };

  // Componentwise marked transformations, by backtracking over components.
  SearchBudget budget(bound);
  std::vector<std::vector<std::size_t>> by_hom(A.num_objects() * A.num_objects());
  for (std::size_t k = 0; k < ms.size(); ++k) by_hom[ms[k].src * A.num_objects() + ms[k].tgt].push_back(k);
  for (ObjId s = 0; s < n; ++s) {
    for (ObjId t = 0; t < n; ++t) {
      std::vector<std::size_t> pick(ng);
      auto square_ok = [&](ObjId upto) {
        for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
          ObjId g = G.src(phi), g2 = G.tgt(phi);
          if (g > upto || g2 > upto || (g != upto && g2 != upto)) continue;
          const LinMor lhs = A.compose(ms[r.objects[t].on_morphisms[phi]], ms[pick[g]]);
          const LinMor rhs = A.compose(ms[pick[g2]], ms[r.objects[s].on_morphisms[phi]]);
          if (lhs != rhs) return false;
        }
        return true;
      };
      auto rec = [&](auto&& self, ObjId x) -> void {
        if (x == ng) {
          Vec v;
          for (ObjId y = 0; y < ng; ++y) v.insert(v.end(), ms[pick[y]].v.begin(), ms[pick[y]].v.end());
          amb.marked.push_back({s, t, std::move(v)});
          return;
        }
        for (std::size_t k : by_hom[obj(s, x) * A.num_objects() + obj(t, x)]) {
          budget.tick();
          pick[x] = k;
          if (square_ok(x)) self(self, x + 1);
        }
      };
      rec(rec, 0);
    }
  }
  r.sub = build_linear_subcategory(amb);
  return r;
}

LinearFunctor exponential_transport(const LinearStarCategory& C, const LinearSharpResult& CG,
                                    const LinearStarCategory& A, const LinearFunuResult& F, const LinearFunctor& Phi) {
  const FinCategory& G = CG.groupoid;
  const std::size_t nc = C.num_objects(), ng = G.num_objects();
  LinearFunctor Psi;
  Psi.on_basis.resize(nc * nc);
  for (ObjId c = 0; c < nc; ++c) {
    Functor at_c;
    bool ok = true;
    for (ObjId g = 0; g < ng; ++g) at_c.on_objects.push_back(Phi.on_objects[CG.object(c, g)]);
    for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
      ObjId x = CG.object(c, G.src(phi)), y = CG.object(c, G.tgt(phi));
      Vec img = apply(CG.category, A, Phi, x, y, CG.element(C, phi, c, c, C.identity(c)));
      auto k = A.marked_index({Phi.on_objects[x], Phi.on_objects[y], img});
      ok = ok && k.has_value();
      at_c.on_morphisms.push_back(k ? MorId(*k) : kNone);
    }
    auto it = F.object_index.find(at_c);
    Psi.on_objects.push_back(ok && it != F.object_index.end() ? it->second : kNone);
  }
  for (ObjId c = 0; c < nc; ++c) {
    for (ObjId c2 = 0; c2 < nc; ++c2) {
      for (std::size_t i = 0; i < C.dim(c, c2); ++i) {
        if (Psi.on_objects[c] == kNone || Psi.on_objects[c2] == kNone) {
          Psi.on_basis[c * nc + c2].push_back({});
          continue;
        }
        Vec amb;
        for (ObjId g = 0; g < ng; ++g) {
          ObjId x = CG.object(c, g), y = CG.object(c2, g);
          Vec h = apply(CG.category, A, Phi, x, y, CG.element(C, G.identity(g), c, c2, unit_vec(C.dim(c, c2), i)));
          amb.insert(amb.end(), h.begin(), h.end());
        }
        Vec coords;
        try {
          coords = F.sub.coordinates(Psi.on_objects[c], Psi.on_objects[c2], amb);
        } catch (const Error&) {
          coords = {};
        }
        Psi.on_basis[c * nc + c2].push_back(std::move(coords));
      }
    }
  }
  return Psi;
}

LinearFunctor exponential_transport_inverse(const LinearStarCategory& C, const LinearSharpResult& CG,
                                            const LinearStarCategory& A, const LinearFunuResult& F,
                                            const LinearFunctor& Psi) {
  const FinCategory& G = CG.groupoid;
  const std::size_t nc = C.num_objects(), ng = G.num_objects(), ncg = CG.category.num_objects();
  LinearFunctor Phi;
  Phi.on_basis.resize(ncg * ncg);
  for (ObjId x = 0; x < ncg; ++x) Phi.on_objects.push_back(F.objects[Psi.on_objects[x / ng]].on_objects[x % ng]);
  for (ObjId c = 0; c < nc; ++c) {
    for (ObjId g = 0; g < ng; ++g) {
      for (ObjId c2 = 0; c2 < nc; ++c2) {
        for (ObjId g2 = 0; g2 < ng; ++g2) {
          ObjId s = Psi.on_objects[c], t = Psi.on_objects[c2];
          const std::size_t off = F.block_offset(A, s, t, g);
          const std::size_t d = A.dim(F.objects[s].on_objects[g], F.objects[t].on_objects[g]);
          auto& out = Phi.on_basis[CG.object(c, g) * ncg + CG.object(c2, g2)];
          for (MorId phi : G.hom(g, g2)) {
            const LinMor& u = A.marked()[F.objects[t].on_morphisms[phi]];
            for (std::size_t i = 0; i < C.dim(c, c2); ++i) {
              Vec amb = F.sub.ambient(s, t, Psi.on_basis[c * nc + c2][i]);
              if (amb.empty()) amb = zero_vec(ambient_dim(A, F.objects[s], F.objects[t]));
              LinMor comp{F.objects[s].on_objects[g], F.objects[t].on_objects[g], block(amb, off, d)};
              out.push_back(A.compose(u, comp).v);
            }
          }
        }
      }
    }
  }
  return Phi;
}

ExponentialReport verify_exponential_law(const LinearStarCategory& C, const FinCategory& G,
                                         const LinearStarCategory& A, std::uint64_t bound) {
  LinearSharpResult CG = sharp(C, G);
  LinearFunuResult F = funu(G, A, bound);
  std::vector<LinearFunctor> left = enumerate_linear_functors(CG.category, A, bound);
  std::vector<LinearFunctor> right = enumerate_linear_functors(C, F.category(), bound);
  ExponentialReport rep;
  rep.left = left.size();
  rep.right = right.size();
  rep.bijective = rep.left == rep.right;
  if (!rep.bijective) rep.witness = {{"reason", "hom-set sizes differ"}};
  for (std::size_t k = 0; k < left.size() && rep.bijective; ++k) {
    LinearFunctor Psi = exponential_transport(C, CG, A, F, left[k]);
    if (!is_linear_functor(C, F.category(), Psi)) {
      rep.bijective = false;
      rep.witness = {{"reason", "transport is not a linear *-functor"}, {"index", k}};
    } else if (exponential_transport_inverse(C, CG, A, F, Psi) != left[k]) {
      rep.bijective = false;
      rep.witness = {{"reason", "round trip from the tensor side fails"}, {"index", k}};
    }
  }
  for (std::size_t k = 0; k < right.size() && rep.bijective; ++k) {
    LinearFunctor Phi = exponential_transport_inverse(C, CG, A, F, right[k]);
    if (!is_linear_functor(CG.category, A, Phi)) {
      rep.bijective = false;
      rep.witness = {{"reason", "inverse transport is not a linear *-functor"}, {"index", k}};
    } else if (exponential_transport(C, CG, A, F, Phi) != right[k]) {
      rep.bijective = false;
      rep.witness = {{"reason", "round trip from the cotensor side fails"}, {"index", k}};
    }
  }
  return rep;
}

}  // namespace mstar
