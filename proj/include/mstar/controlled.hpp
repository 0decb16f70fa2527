#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstar/equivariant.hpp"
#include "mstar/group.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

/// Relation from a set of size `cols` to a set of size `rows`: bit r·cols + c
/// says (r, c) ∈ R. Sizes are at most 8 on either side.
struct Relation {
  std::uint32_t rows = 0, cols = 0;
  std::uint64_t bits = 0;
  bool has(std::uint32_t r, std::uint32_t c) const { return (bits >> (r * cols + c)) & 1u; }
  void set(std::uint32_t r, std::uint32_t c) { bits |= std::uint64_t(1) << (r * cols + c); }
  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

Relation identity_relation(std::uint32_t n);
/// V∘U = {(z,x) | ∃y: (z,y) ∈ V, (y,x) ∈ U}.
Relation compose(const Relation& V, const Relation& U);
Relation transpose(const Relation& U);
Relation relation_union(const Relation& a, const Relation& b);
bool is_bijection(const Relation& R);

/// A finite bornological coarse space. Entourages are the subsets of the
/// equivalence relation generated by the generators; bounded sets are the
/// subsets of the listed ones (or everything).
struct BornCoarseSpace {
  std::vector<std::string> points;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> generators;
  Relation coarse;                      // the maximal entourage, points × points
  std::optional<std::vector<std::uint32_t>> bornology;  // generating bounded sets as bitmasks; nullopt = all
  // Optional action by permutations of the points.
  std::optional<FinGroup> group;
  std::vector<std::vector<std::uint32_t>> action;

  std::size_t size() const { return points.size(); }
  bool is_bounded(std::uint32_t subset) const;
};

/// Computes the closures and checks compatibility (U[B] bounded for bounded B)
/// and that singletons are bounded. With an action, the maximal entourage must
/// be invariant. Errors: InvalidArgument, IncompatibleStructures, NotCofinal, InvalidAction.
BornCoarseSpace validate_space(std::vector<std::string> points,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> generators,
                               std::optional<std::vector<std::vector<std::uint32_t>>> bornology,
                               std::optional<FinGroup> group = std::nullopt,
                               std::vector<std::vector<std::uint32_t>> action = {});

/// U[B] = {x | ∃b ∈ B: (x,b) ∈ U} on bitmasks.
std::uint32_t thicken(const Relation& U, std::uint32_t B);

/// An object determined on points: carrier {0..m-1} with a point p(i) for each i.
struct ControlledObject {
  std::vector<std::uint32_t> over;  // p
  std::uint32_t carrier() const { return std::uint32_t(over.size()); }
  friend bool operator==(const ControlledObject&, const ControlledObject&) = default;
  friend auto operator<=>(const ControlledObject&, const ControlledObject&) = default;
};

/// φ(Y) = diagonal on p⁻¹(Y).
Relation measure(const ControlledObject& M, std::uint32_t Y);
/// The image of a selfadjoint idempotent relation, as a bitmask. Only partial
/// identities are supported. Errors: InvalidArgument.
std::uint32_t image_of(const Relation& e);
/// Measure axioms over all pairs of subsets, and that ⊔ φ({x})(M) → M is a bijection.
Verdict check_measure_axioms(const BornCoarseSpace& X, const ControlledObject& M);

/// φ'(B')∘A∘φ(B) = 0 for every pair with U[B] ∩ B' = ∅, by scanning all
/// subset pairs. Errors: BoundExceeded when |X| > 6.
bool is_controlled(const BornCoarseSpace& X, const ControlledObject& M, const ControlledObject& N, const Relation& A,
                   const Relation& U);
/// The smallest entourage controlling A: {(p'(i'), p(i)) | (i', i) ∈ A}.
Relation support(const ControlledObject& M, const ControlledObject& N, const Relation& A, std::uint32_t points);

struct VPlus {
  StarCategory category;  // marked flavor
  std::vector<ControlledObject> objects;
  std::vector<Relation> relations;  // per morphism
};
/// Objects: every p: [m] → X for m ∈ carrier_sizes (each ≤ 8), ordered by (m, p).
/// Morphisms: relations controlled by the maximal entourage; star is the
/// transpose; marked are the diag-controlled bijections. Errors: BoundExceeded.
VPlus build_vplus(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes,
                  std::uint64_t bound = SearchBudget::kDefaultLimit);

/// (M, p) ↦ (M, g∘p), relations unchanged. Errors: InvalidArgument without an action.
GAction vplus_action(const BornCoarseSpace& X, const VPlus& V);

/// Pushforward along f: X → Y on points: (M, p) ↦ (M, f∘p).
ControlledObject pushforward(const std::vector<std::uint32_t>& f, const ControlledObject& M);

/// Triples (M, φ, ρ) with ρ a homomorphism to bijections of M and
/// p∘ρ(g) = g∘p. Morphisms are controlled relations with A∘ρ(g) = ρ'(g)∘A;
/// marked are the invariant diag-controlled bijections.
struct EquivariantObject {
  ControlledObject object;
  std::vector<Relation> rho;  // per group element
};
struct EquivariantVPlus {
  StarCategory category;
  std::vector<EquivariantObject> objects;
  std::vector<Relation> relations;
};
EquivariantVPlus equivariant_vplus(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes,
                                   std::uint64_t bound = SearchBudget::kDefaultLimit);

/// (M, p, ρ) ↦ ((M, p), g ↦ ρ(g)⁻¹) into fixed_points(vplus_action(V)).
Functor equivariant_to_fixed_points(const BornCoarseSpace& X, const EquivariantVPlus& E, const VPlus& V,
                                    const FixedPointCategory& P);

struct ControlledReport {
  bool measures = false;
  bool control_definition = false;  // the scan agrees with support ⊆ U
  bool composition = false;         // supp(B∘A) ⊆ supp(B)∘supp(A), supp(A*) = supp(A)⁻¹
  bool marked = false;              // marked closed under ∘ and *, all unitary
  bool isomorphic = false;          // equivariant_vplus ≅ fixed_points(build_vplus)
  std::size_t objects = 0, morphisms = 0, equivariant_objects = 0;
  nlohmann::json witness;
  bool ok() const { return measures && control_definition && composition && marked && isomorphic; }
};
ControlledReport verify_controlled(const BornCoarseSpace& X, const std::vector<std::uint32_t>& carrier_sizes,
                                   std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
