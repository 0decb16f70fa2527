#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/search.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

/// 1-simplex e with d1 e = source vertex and d0 e = target vertex.
struct Edge {
  std::string name;
  std::uint32_t d0 = 0, d1 = 0;
  bool degenerate = false;  // s0 of its vertex; presents an identity
};

/// 2-simplex σ on vertices v0, v1, v2: d0σ = [v1,v2], d1σ = [v0,v2], d2σ = [v0,v1].
struct Triangle {
  std::string name;
  std::uint32_t d0 = 0, d1 = 0, d2 = 0;  // edge indices
};

/// Simplicial set truncated at dimension 2.
class SimplicialSet {
 public:
  /// Errors: InvalidArgument for dangling faces or broken simplicial identities.
  static SimplicialSet make(std::vector<std::string> vertices, std::vector<Edge> edges,
                            std::vector<Triangle> triangles);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

/// Δⁿ up to dimension 2: all non-decreasing vertex sequences of length ≤ 3.
SimplicialSet standard_simplex(std::size_t n);
/// N(C) truncated at dimension 2; identities are the degenerate edges.
SimplicialSet nerve(const FinCategory& c);

/// Π(K): generated by the edges, formally inverted, subject to
/// (d0σ)∘(d2σ) = d1σ for each 2-simplex σ. Degenerate edges are identities.
struct GroupoidPresentation {
  SimplicialSet complex;
  std::vector<std::uint32_t> generators;               // non-degenerate edges
  std::vector<std::array<std::uint32_t, 3>> relations;  // (g, f, h): g∘f = h, as edge indices
};

GroupoidPresentation fundamental_groupoid(const SimplicialSet& K);

/// A functor Π(K) → H, recorded on vertices and on every edge.
struct PiAssignment {
  std::vector<ObjId> on_vertices;
  std::vector<MorId> on_edges;
  friend bool operator==(const PiAssignment&, const PiAssignment&) = default;
};

/// All functors Π(K) → H for a finite groupoid H, i.e. simplicial maps
/// K → N(H). Errors: NotAGroupoid, BoundExceeded.
std::vector<PiAssignment> hom_into(const GroupoidPresentation& P, const FinCategory& H,
                                   std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Map(A,B)[n] = Hom(A♯Iₙ, B), Iₙ indiscrete on n+1 objects ----

/// δ^i: I_{n-1} → I_n skipping i.
Functor coface(std::size_t n, std::size_t i);
/// σ^i: I_{n+1} → I_n hitting i twice.
Functor codegeneracy(std::size_t n, std::size_t i);

std::vector<Functor> mapping_simplices(const StarCategory& A, const StarCategory& B, std::size_t n,
                                       std::uint64_t bound = SearchBudget::kDefaultLimit);
/// d_i: Map[n] → Map[n-1].
Functor mapping_face(const StarCategory& A, std::size_t n, std::size_t i, const Functor& sigma);
/// s_i: Map[n] → Map[n+1].
Functor mapping_degeneracy(const StarCategory& A, std::size_t n, std::size_t i, const Functor& sigma);

/// Simplicial identities on levels ≤ 2 over all simplices.
Verdict check_mapping_space(const StarCategory& A, const StarCategory& B,
                            std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
