#include <map>

#include "mstar/error.hpp"
#include "mstar/linalg.hpp"
#include "mstar/linear.hpp"

namespace mstar {

using nlohmann::json;

Vec apply(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F, ObjId a, ObjId b,
          const Vec& v) {
  const std::size_t n = A.num_objects();
  Vec r(B.dim(F.on_objects[a], F.on_objects[b]));
  const auto& imgs = F.on_basis[a * n + b];
  for (std::size_t k = 0; k < v.size(); ++k) axpy(r, v[k], imgs[k]);
  return r;
}

LinMor apply(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F, const LinMor& f) {
  return {F.on_objects[f.src], F.on_objects[f.tgt], apply(A, B, F, f.src, f.tgt, f.v)};
}

LinearFunctor compose(const LinearStarCategory& A, const LinearStarCategory& B, const LinearStarCategory& C,
                      const LinearFunctor& G, const LinearFunctor& F) {
  const std::size_t n = A.num_objects();
  LinearFunctor H;
  for (ObjId a : F.on_objects) H.on_objects.push_back(G.on_objects[a]);
  H.on_basis.resize(n * n);
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (const Vec& v : F.on_basis[a * n + b]) {
        H.on_basis[a * n + b].push_back(apply(B, C, G, F.on_objects[a], F.on_objects[b], v));
      }
    }
  }
  return H;
}

LinearFunctor identity_functor(const LinearStarCategory& A) {
  const std::size_t n = A.num_objects();
  LinearFunctor F;
  F.on_basis.resize(n * n);
  for (ObjId a = 0; a < n; ++a) {
    F.on_objects.push_back(a);
    for (ObjId b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < A.dim(a, b); ++k) F.on_basis[a * n + b].push_back(unit_vec(A.dim(a, b), k));
    }
  }
  return F;
}

std::optional<json> linear_functor_violation(const LinearStarCategory& A, const LinearStarCategory& B,
                                             const LinearFunctor& F) {
  const std::size_t n = A.num_objects();
  if (F.on_objects.size() != n || F.on_basis.size() != n * n) return json{{"reason", "size mismatch"}};
  for (ObjId a : F.on_objects) {
    if (a >= B.num_objects()) return json{{"reason", "object out of range"}};
  }
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      const auto& imgs = F.on_basis[a * n + b];
      if (imgs.size() != A.dim(a, b)) return json{{"reason", "basis image count"}, {"hom", {a, b}}};
      for (const Vec& v : imgs) {
        if (v.size() != B.dim(F.on_objects[a], F.on_objects[b])) {
          return json{{"reason", "basis image has the wrong length"}, {"hom", {a, b}}};
        }
      }
    }
  }
  for (ObjId a = 0; a < n; ++a) {
    if (apply(A, B, F, a, a, A.identity(a)) != B.identity(F.on_objects[a])) {
      return json{{"reason", "identity not preserved"}, {"object", a}};
    }
  }
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      ObjId fa = F.on_objects[a], fb = F.on_objects[b];
      for (std::size_t k = 0; k < A.dim(a, b); ++k) {
        Vec e = unit_vec(A.dim(a, b), k);
        if (apply(A, B, F, b, a, A.star(a, b, e)) != B.star(fa, fb, F.on_basis[a * n + b][k])) {
          return json{{"reason", "star not preserved"}, {"hom", {a, b}}, {"basis", k}};
        }
        for (ObjId c = 0; c < n; ++c) {
          ObjId fc = F.on_objects[c];
          for (std::size_t g = 0; g < A.dim(b, c); ++g) {
            Vec lhs = apply(A, B, F, a, c, A.basis_product(a, b, c, g, k));
            Vec rhs = B.compose(fa, fb, fc, F.on_basis[b * n + c][g], F.on_basis[a * n + b][k]);
            if (lhs != rhs) return json{{"reason", "composition not preserved"}, {"objects", {a, b, c}}};
          }
        }
      }
    }
  }
  for (const LinMor& m : A.marked()) {
    if (!B.is_marked(apply(A, B, F, m))) return json{{"reason", "marking not preserved"}, {"element", to_string(m.v)}};
  }
  return std::nullopt;
}

bool is_linear_isomorphism(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F) {
  const std::size_t n = A.num_objects();
  if (n != B.num_objects() || A.marked().size() != B.marked().size()) return false;
  if (!is_linear_functor(A, B, F)) return false;
  std::vector<bool> hit(n, false);
  for (ObjId a : F.on_objects) {
    if (hit[a]) return false;
    hit[a] = true;
  }
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      if (A.dim(a, b) != B.dim(F.on_objects[a], F.on_objects[b])) return false;
      if (rank(F.on_basis[a * n + b]) != A.dim(a, b)) return false;
    }
  }
  return true;
}

StarCategory marked_groupoid(const LinearStarCategory& A) {
  const auto& ms = A.marked();
  CategoryBuilder b;
  for (ObjId a = 0; a < A.num_objects(); ++a) b.add_object(A.object_name(a));
  for (std::size_t k = 0; k < ms.size(); ++k) b.add_morphism(ms[k].src, ms[k].tgt, "u" + std::to_string(k));
  for (ObjId a = 0; a < A.num_objects(); ++a) b.set_identity(a, MorId(*A.marked_index(A.identity_mor(a))));
  b.fill_compose([&](MorId g, MorId f) { return MorId(*A.marked_index(A.compose(ms[g], ms[f]))); });
  std::vector<MorId> star;
  for (const LinMor& m : ms) star.push_back(MorId(*A.marked_index(A.star(m))));
  return StarCategory::make(b.build(), star, std::vector<bool>(ms.size(), true), Flavor::marked);
}

Functor restrict_to_marked(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F) {
  Functor R;
  R.on_objects = F.on_objects;
  for (const LinMor& m : A.marked()) {
    auto k = B.marked_index(apply(A, B, F, m));
    if (!k) throw Error(ErrorKind::invalid_functor, "marked element sent to an unmarked one");
    R.on_morphisms.push_back(MorId(*k));
  }
  return R;
}

namespace {

// How each basis element of each hom is written through marked elements.
struct MarkedExpansion {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> chosen;  // marked indices per hom
  std::vector<std::vector<Vec>> coeffs;          // per hom, per basis element: coefficients over `chosen`

  explicit MarkedExpansion(const LinearStarCategory& A) : n(A.num_objects()) {
    chosen.resize(n * n);
    coeffs.resize(n * n);
    std::vector<std::vector<std::size_t>> by_hom(n * n);
    for (std::size_t k = 0; k < A.marked().size(); ++k) {
      by_hom[A.marked()[k].src * n + A.marked()[k].tgt].push_back(k);
    }
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b) {
        std::vector<Vec> vs;
        for (auto k : by_hom[a * n + b]) vs.push_back(A.marked()[k].v);
        std::vector<Vec> sel;
        for (auto j : independent_subset(vs)) {
          chosen[a * n + b].push_back(by_hom[a * n + b][j]);
          sel.push_back(vs[j]);
        }
        for (std::size_t k = 0; k < A.dim(a, b); ++k) {
          auto c = solve_in_span(sel, unit_vec(A.dim(a, b), k));
          if (!c) {
            throw Error(ErrorKind::not_marked_generated, "hom is not spanned by marked elements",
                        {{"hom", {A.object_name(a), A.object_name(b)}}});
          }
          coeffs[a * n + b].push_back(*c);
        }
      }
    }
  }

  std::optional<LinearFunctor> extend(const LinearStarCategory& A, const LinearStarCategory& B,
                                      const Functor& G) const {
    LinearFunctor F;
    F.on_objects = G.on_objects;
    F.on_basis.resize(n * n);
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b) {
        const std::size_t d = B.dim(G.on_objects[a], G.on_objects[b]);
        for (const Vec& c : coeffs[a * n + b]) {
          Vec img(d);
          for (std::size_t j = 0; j < c.size(); ++j) axpy(img, c[j], B.marked()[G.on_morphisms[chosen[a * n + b][j]]].v);
          F.on_basis[a * n + b].push_back(std::move(img));
        }
      }
    }
    for (std::size_t k = 0; k < A.marked().size(); ++k) {
      if (apply(A, B, F, A.marked()[k]).v != B.marked()[G.on_morphisms[k]].v) return std::nullopt;
    }
    if (linear_functor_violation(A, B, F)) return std::nullopt;
    return F;
  }
};

}  // namespace

std::optional<LinearFunctor> extend_from_marked(const LinearStarCategory& A, const LinearStarCategory& B,
                                                const Functor& on_marked) {
  return MarkedExpansion(A).extend(A, B, on_marked);
}

std::uint64_t for_each_linear_functor(const LinearStarCategory& A, const LinearStarCategory& B,
                                      SearchConstraints constraints, SearchBudget& budget,
                                      const std::function<bool(const LinearFunctor&)>& visit) {
  MarkedExpansion expansion(A);
  StarCategory Ag = marked_groupoid(A), Bg = marked_groupoid(B);
  SearchConstraints base = star_constraints(Ag, Bg);
  constraints.dom_star = base.dom_star;
  constraints.cod_star = base.cod_star;
  constraints.dom_marked = base.dom_marked;
  constraints.cod_marked = base.cod_marked;
  std::uint64_t count = 0;
  for_each_functor(Ag.base(), Bg.base(), constraints, budget, [&](const Functor& G) {
    auto F = expansion.extend(A, B, G);
    if (!F) return true;
    ++count;
    return visit(*F);
  });
  return count;
}

std::vector<LinearFunctor> enumerate_linear_functors(const LinearStarCategory& A, const LinearStarCategory& B,
                                                     std::uint64_t bound) {
  SearchBudget budget(bound);
  std::vector<LinearFunctor> out;
  for_each_linear_functor(A, B, {}, budget, [&](const LinearFunctor& F) {
    out.push_back(F);
    return true;
  });
  return out;
}

Verdict is_linear_weak_equivalence(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F) {
  const std::size_t n = A.num_objects();
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      std::size_t r = rank(F.on_basis[a * n + b]);
      if (r != A.dim(a, b)) return {false, {{"part", "underlying"}, {"reason", "not faithful"}, {"hom", {a, b}}}};
      if (r != B.dim(F.on_objects[a], F.on_objects[b])) {
        return {false, {{"part", "underlying"}, {"reason", "not full"}, {"hom", {a, b}}}};
      }
    }
  }
  StarCategory Ag = marked_groupoid(A), Bg = marked_groupoid(B);
  Verdict plus = is_equivalence(Ag.base(), Bg.base(), restrict_to_marked(A, B, F));
  if (!plus) return {false, {{"part", "marked"}, {"detail", plus.witness}}};
  return {true, {}};
}

std::optional<std::vector<std::size_t>> find_marked_linear_isomorphism(const LinearStarCategory& A,
                                                                       const LinearStarCategory& B,
                                                                       const LinearFunctor& F,
                                                                       const LinearFunctor& G) {
  const std::size_t n = A.num_objects();
  std::vector<std::size_t> t(n, 0);
  const auto& ms = B.marked();
  auto square_ok = [&](ObjId a, ObjId b) {
    for (std::size_t k = 0; k < A.dim(a, b); ++k) {
      LinMor Fe{F.on_objects[a], F.on_objects[b], F.on_basis[a * n + b][k]};
      LinMor Ge{G.on_objects[a], G.on_objects[b], G.on_basis[a * n + b][k]};
      if (B.compose(Ge, ms[t[a]]) != B.compose(ms[t[b]], Fe)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, ObjId a) -> bool {
    if (a == n) return true;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (ms[k].src != F.on_objects[a] || ms[k].tgt != G.on_objects[a]) continue;
      t[a] = k;
      bool ok = true;
      for (ObjId b = 0; b <= a && ok; ++b) ok = square_ok(a, b) && square_ok(b, a);
      if (ok && self(self, a + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return t;
}

Verdict linear_weak_equivalence_by_search(const LinearStarCategory& A, const LinearStarCategory& B,
                                          const LinearFunctor& F, std::uint64_t bound) {
  SearchBudget budget(bound);
  LinearFunctor idA = identity_functor(A), idB = identity_functor(B);
  std::optional<LinearFunctor> inverse;
  for_each_linear_functor(B, A, {}, budget, [&](const LinearFunctor& g) {
    if (!find_marked_linear_isomorphism(B, B, compose(B, A, B, F, g), idB)) return true;
    if (!find_marked_linear_isomorphism(A, A, compose(A, B, A, g, F), idA)) return true;
    inverse = g;
    return false;
  });
  if (!inverse) return {false, {{"reason", "no inverse up to marked isomorphism"}}};
  return {true, {{"inverse_objects", inverse->on_objects}}};
}

std::optional<LinearFunctor> find_linear_isomorphism(const LinearStarCategory& A, const LinearStarCategory& B,
                                                     std::uint64_t bound) {
  if (A.num_objects() != B.num_objects() || A.marked().size() != B.marked().size()) return std::nullopt;
  SearchBudget budget(bound);
  SearchConstraints c;
  c.injective_objects = true;
  c.bijective_homs = true;
  c.precheck = false;
  std::optional<LinearFunctor> out;
  for_each_linear_functor(A, B, c, budget, [&](const LinearFunctor& F) {
    if (!is_linear_isomorphism(A, B, F)) return true;
    out = F;
    return false;
  });
  return out;
}

}  // namespace mstar
