#include "mstar/simplicial.hpp"

#include <map>

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

SimplicialSet SimplicialSet::make(std::vector<std::string> vertices, std::vector<Edge> edges,
                                  std::vector<Triangle> triangles) {
  const std::size_t nv = vertices.size(), ne = edges.size();
  for (const Edge& e : edges) {
    if (e.d0 >= nv || e.d1 >= nv) throw Error(ErrorKind::invalid_argument, "edge face out of range", {{"edge", e.name}});
    if (e.degenerate && e.d0 != e.d1) {
      throw Error(ErrorKind::invalid_argument, "degenerate edge is not a loop", {{"edge", e.name}});
    }
  }
  for (const Triangle& t : triangles) {
    if (t.d0 >= ne || t.d1 >= ne || t.d2 >= ne) {
      throw Error(ErrorKind::invalid_argument, "triangle face out of range", {{"triangle", t.name}});
    }
    const Edge &a = edges[t.d0], &b = edges[t.d1], &c = edges[t.d2];
    // d_i d_j = d_{j-1} d_i for i < j.
    if (a.d0 != b.d0 || c.d1 != b.d1 || c.d0 != a.d1) {
      throw Error(ErrorKind::invalid_argument, "simplicial identity fails", {{"triangle", t.name}});
    }
  }
  SimplicialSet K;
  K.vertices_ = std::move(vertices);
  K.edges_ = std::move(edges);
  K.triangles_ = std::move(triangles);
  return K;
}

SimplicialSet standard_simplex(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i <= n; ++i) v.push_back(std::to_string(i));
  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> edge_id;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      edge_id[{i, j}] = std::uint32_t(edges.size());
      edges.push_back({std::to_string(i) + std::to_string(j), std::uint32_t(j), std::uint32_t(i), i == j});
    }
  }
  std::vector<Triangle> tris;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      for (std::size_t k = j; k <= n; ++k) {
        tris.push_back({std::to_string(i) + std::to_string(j) + std::to_string(k), edge_id[{j, k}], edge_id[{i, k}],
                        edge_id[{i, j}]});
      }
    }
  }
  return SimplicialSet::make(std::move(v), std::move(edges), std::move(tris));
}

SimplicialSet nerve(const FinCategory& c) {
  std::vector<std::string> v;
  for (ObjId a = 0; a < c.num_objects(); ++a) v.push_back(c.object_name(a));
  std::vector<Edge> edges;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    edges.push_back({c.morphism_name(f), c.tgt(f), c.src(f), c.is_identity(f)});
  }
  std::vector<Triangle> tris;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.out(c.tgt(f))) {
      tris.push_back({"(" + c.morphism_name(g) + "|" + c.morphism_name(f) + ")", g, c.compose(g, f), f});
    }
  }
  return SimplicialSet::make(std::move(v), std::move(edges), std::move(tris));
}

GroupoidPresentation fundamental_groupoid(const SimplicialSet& K) {
  GroupoidPresentation P;
  P.complex = K;
  for (std::uint32_t e = 0; e < K.edges().size(); ++e) {
    if (!K.edges()[e].degenerate) P.generators.push_back(e);
  }
  for (const Triangle& t : K.triangles()) P.relations.push_back({t.d0, t.d2, t.d1});
  return P;
}

std::vector<PiAssignment> hom_into(const GroupoidPresentation& P, const FinCategory& H, std::uint64_t bound) {
  groupoid_inverses(H);
  const SimplicialSet& K = P.complex;
  const auto& edges = K.edges();
  const std::size_t nv = K.vertices().size();
  SearchBudget budget(bound);

  // Relations are checked as soon as their last generator is assigned.
  std::vector<std::size_t> gen_pos(edges.size(), SIZE_MAX);
  for (std::size_t k = 0; k < P.generators.size(); ++k) gen_pos[P.generators[k]] = k;
  std::vector<std::vector<std::size_t>> check_at(P.generators.size() + 1);
  for (std::size_t r = 0; r < P.relations.size(); ++r) {
    std::size_t last = 0;
    for (std::uint32_t e : P.relations[r]) {
      if (gen_pos[e] != SIZE_MAX) last = std::max(last, gen_pos[e] + 1);
    }
    check_at[last].push_back(r);
  }

  PiAssignment cur;
  cur.on_vertices.assign(nv, 0);
  cur.on_edges.assign(edges.size(), kNone);
  std::vector<PiAssignment> out;
  auto relations_hold = [&](std::size_t level) {
    for (std::size_t r : check_at[level]) {
      const auto& rel = P.relations[r];
      if (H.compose(cur.on_edges[rel[0]], cur.on_edges[rel[1]]) != cur.on_edges[rel[2]]) return false;
    }
    return true;
  };
  auto edges_rec = [&](auto&& self, std::size_t k) -> void {
    if (k == P.generators.size()) {
      out.push_back(cur);
      return;
    }
    const Edge& e = edges[P.generators[k]];
    for (MorId m : H.hom(cur.on_vertices[e.d1], cur.on_vertices[e.d0])) {
      budget.tick();
      cur.on_edges[P.generators[k]] = m;
      if (relations_hold(k + 1)) self(self, k + 1);
    }
    cur.on_edges[P.generators[k]] = kNone;
  };
  auto vertices_rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      for (std::uint32_t e = 0; e < edges.size(); ++e) {
        if (edges[e].degenerate) cur.on_edges[e] = H.identity(cur.on_vertices[edges[e].d0]);
      }
      if (relations_hold(0)) edges_rec(edges_rec, 0);
      return;
    }
    for (ObjId x = 0; x < H.num_objects(); ++x) {
      budget.tick();
      cur.on_vertices[v] = x;
      self(self, v + 1);
    }
  };
  vertices_rec(vertices_rec, 0);
  return out;
}

Functor coface(std::size_t n, std::size_t i) {
  const std::size_t m = n;  // I_{n-1} has n objects, I_n has n+1
  Functor F;
  auto d = [&](std::size_t k) { return ObjId(k < i ? k : k + 1); };
  for (std::size_t k = 0; k < m; ++k) F.on_objects.push_back(d(k));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) F.on_morphisms.push_back(MorId(d(x) * (n + 1) + d(y)));
  }
  return F;
}

Functor codegeneracy(std::size_t n, std::size_t i) {
  const std::size_t m = n + 2;  // I_{n+1} has n+2 objects, I_n has n+1
  Functor F;
  auto s = [&](std::size_t k) { return ObjId(k <= i ? k : k - 1); };
  for (std::size_t k = 0; k < m; ++k) F.on_objects.push_back(s(k));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) F.on_morphisms.push_back(MorId(s(x) * (n + 1) + s(y)));
  }
  return F;
}

namespace {

SharpResult level(const StarCategory& A, std::size_t n) { return sharp(A, indiscrete_category(n + 1)); }

}  // namespace

std::vector<Functor> mapping_simplices(const StarCategory& A, const StarCategory& B, std::size_t n,
                                       std::uint64_t bound) {
  return enumerate_star_functors(level(A, n).category, B, bound);
}

Functor mapping_face(const StarCategory& A, std::size_t n, std::size_t i, const Functor& sigma) {
  SharpResult lo = level(A, n - 1), hi = level(A, n);
  return compose(sigma, sharp_functor(lo, hi, identity_functor(A.base()), coface(n, i)));
}

Functor mapping_degeneracy(const StarCategory& A, std::size_t n, std::size_t i, const Functor& sigma) {
  SharpResult hi = level(A, n + 1), lo = level(A, n);
  return compose(sigma, sharp_functor(hi, lo, identity_functor(A.base()), codegeneracy(n, i)));
}

Verdict check_mapping_space(const StarCategory& A, const StarCategory& B, std::uint64_t bound) {
  std::vector<std::vector<Functor>> S;
  for (std::size_t n = 0; n <= 2; ++n) S.push_back(mapping_simplices(A, B, n, bound));
  auto fail = [](const char* what, std::size_t n, std::size_t i, std::size_t j) {
    return Verdict{false, {{"identity", what}, {"level", n}, {"i", i}, {"j", j}}};
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const Functor& x : S[n]) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (!is_star_functor(level(A, n - 1).category, B, mapping_face(A, n, i, x))) return fail("face", n, i, i);
      }
      if (n == 2) {
        for (std::size_t j = 1; j <= 2; ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            if (mapping_face(A, 1, i, mapping_face(A, 2, j, x)) != mapping_face(A, 1, j - 1, mapping_face(A, 2, i, x))) {
              return fail("d_i d_j = d_{j-1} d_i", n, i, j);
            }
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n <= 1; ++n) {
    for (const Functor& x : S[n]) {
      for (std::size_t j = 0; j <= n; ++j) {
        Functor s = mapping_degeneracy(A, n, j, x);
        if (!is_star_functor(level(A, n + 1).category, B, s)) return fail("degeneracy", n, j, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          Functor lhs = mapping_face(A, n + 1, i, s);
          if (i == j || i == j + 1) {
            if (lhs != x) return fail("d_j s_j = id = d_{j+1} s_j", n, i, j);
          } else if (i < j) {
            if (lhs != mapping_degeneracy(A, n - 1, j - 1, mapping_face(A, n, i, x))) {
              return fail("d_i s_j = s_{j-1} d_i", n, i, j);
            }
          } else if (lhs != mapping_degeneracy(A, n - 1, j, mapping_face(A, n, i - 1, x))) {
            return fail("d_i s_j = s_j d_{i-1}", n, i, j);
          }
        }
        if (n == 0) {
          Functor ss0 = mapping_degeneracy(A, 1, 0, s), ss1 = mapping_degeneracy(A, 1, 1, s);
          if (ss0 != ss1) return fail("s_0 s_0 = s_1 s_0", n, 0, 0);
        }
      }
    }
  }
  return {true, {{"simplices", {S[0].size(), S[1].size(), S[2].size()}}}};
}

}  // namespace mstar
