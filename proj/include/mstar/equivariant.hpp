#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/group.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/linear.hpp"
#include "mstar/search.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

/// G̃: indiscrete *-groupoid on the elements of G (morphism h→k has id h·|G|+k),
/// acted on by left multiplication.
GAction build_gtilde(const FinGroup& G, Flavor flavor = Flavor::marked);

/// The action g ↦ act[g] on A♯𝔾 induced by an action on A (𝔾 acted on trivially).
GAction sharp_action(const GAction& A, const SharpResult& S);
/// The action on C♯G̃ through G̃ alone (C acted on trivially).
GAction sharp_gtilde_action(const StarCategory& C, const FinGroup& G, const SharpResult& S);

/// Fun^u(G̃, A) with (g·a)(h) = g(a(g⁻¹h)) and (g·t)_h = g(t_{g⁻¹h}).
struct Resolution {
  FunuResult funu;
  GAction action;
  Functor unit;  // r: x ↦ constant functor
  Functor eval;  // e: a ↦ a(1)
};
/// Errors: BoundExceeded, InvalidAction.
Resolution resolution(const GAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

/// r is a weak equivalence: e∘r = id, the characterization for r, and the marked
/// natural isomorphism r∘e ⇒ id with components (a(1→g))_g.
Verdict verify_resolution_unit(const GAction& A, const Resolution& R);

/// Strict limit over BG: the subcategory of objects and morphisms fixed by every g.
struct InvariantSubcategory {
  StarCategory category;
  std::vector<ObjId> objects;     // ambient ids
  std::vector<MorId> morphisms;   // ambient ids
  Functor inclusion;
};
InvariantSubcategory invariant_subcategory(const GAction& a);

/// Objects (b, ρ) with ρ(g): b → g(b) marked and g(ρ(h))∘ρ(g) = ρ(gh);
/// morphisms f: b → b' with ρ'(g)∘f = g(f)∘ρ(g); marked when marked in A.
struct FixedPointObject {
  ObjId base = 0;
  std::vector<MorId> rho;  // indexed by group element
};
struct FixedPointCategory {
  StarCategory category;
  std::vector<FixedPointObject> objects;  // ordered by (b, ρ)
  std::vector<MorId> underlying;          // morphism of A per morphism
};
FixedPointCategory fixed_points(const GAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

/// (b,ρ) ↦ a with a(h) = h(b), a(h→k) = h(ρ(h⁻¹k)); f ↦ (h(f))_h.
Functor fixed_points_to_limit(const GAction& A, const FixedPointCategory& P, const Resolution& R,
                              const InvariantSubcategory& L);

struct FixedPointReport {
  bool cocycles = false;       // ρ(e) = id and the cocycle identity on every object
  bool closed = false;         // intertwiners closed under composition and star
  bool isomorphic = false;     // the canonical functor is a *-isomorphism onto lim_BG
  bool unit_weak_equivalence = false;
  std::size_t fixed_objects = 0, fixed_morphisms = 0;
  nlohmann::json witness;
  bool ok() const { return cocycles && closed && isomorphic && unit_weak_equivalence; }
};
FixedPointReport verify_fixed_points(const GAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Injective fibrancy ----

struct EquivariantLeftMap {
  std::string name;
  GAction source, target;
  Functor map;
};
/// X → X♯𝕀 at either end for X = pt, G̃ and each given action, G acting on the X factor.
std::vector<EquivariantLeftMap> equivariant_trivial_cofibrations(const FinGroup& G, Flavor flavor,
                                                                 const std::vector<std::pair<std::string, GAction>>& extra = {});
/// Every equivariant X → R extends equivariantly along each left map.
Verdict is_injectively_fibrant(const GAction& R, const std::vector<EquivariantLeftMap>& left,
                               std::uint64_t bound = SearchBudget::kDefaultLimit);

/// |Hom_G(C♯G̃, A)| = |Hom(C, lim_BG Fun^u(G̃,A))| with transport landing in the invariants.
ExponentialReport verify_equivariant_exponential_law(const StarCategory& C, const GAction& A,
                                                     std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Orbits ----

/// C♯BG.
SharpResult orbit(const StarCategory& C, const FinGroup& G);
/// C♯BH for a subgroup H ⊆ G given by its elements. Errors: InvalidGroup.
SharpResult induction_value(const StarCategory& C, const FinGroup& G, const std::vector<GroupElem>& H);

/// Hom_G(G̃, K) ≅ Hom(BG, K) for a groupoid K with trivial action, via
/// Ψ(g) = Φ(1→g) and Φ(g→h) = Ψ(g⁻¹h).
struct ColimitCertificate {
  std::uint64_t left = 0, right = 0;
  bool bijective = false;
  nlohmann::json witness;
};
ColimitCertificate verify_orbit_colimit(const FinGroup& G, const FinCategory& K,
                                        std::uint64_t bound = SearchBudget::kDefaultLimit);

/// A trivial fibration p: E → B, both acted on trivially.
struct TrivialFibration {
  std::string name;
  StarCategory E, B;
  Functor p;
};
/// C♯G̃ → C is a weak equivalence, and every equivariant C♯G̃ → B lifts
/// equivariantly through each p.
Verdict verify_orbit_cofibrancy(const StarCategory& C, const FinGroup& G, const std::vector<TrivialFibration>& fibs,
                                std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Linear flavor ----

struct LinearResolution {
  LinearFunuResult funu;
  LinearGAction action;
  LinearFunctor unit;
};
LinearResolution resolution(const LinearGAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

struct LinearInvariantSubcategory {
  SubcategoryResult sub;        // ambient coordinates are those of the acted-on category
  std::vector<ObjId> objects;   // ambient ids
};
LinearInvariantSubcategory invariant_subcategory(const LinearGAction& a);

struct LinearFixedPointCategory {
  SubcategoryResult sub;  // ambient coordinates are those of A
  std::vector<ObjId> base;
  std::vector<std::vector<std::size_t>> rho;  // marked indices of A, per group element
};
LinearFixedPointCategory fixed_points(const LinearGAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

LinearFunctor fixed_points_to_limit(const LinearGAction& A, const LinearFixedPointCategory& P,
                                    const LinearResolution& R, const LinearInvariantSubcategory& L);

FixedPointReport verify_fixed_points(const LinearGAction& A, std::uint64_t bound = SearchBudget::kDefaultLimit);

/// The action induced on the marked groupoid.
GAction marked_action(const LinearGAction& A);
/// Maps out of linearize(X) with X marked-generated are functors into the
/// marked groupoid, so fibrancy is checked there.
Verdict is_injectively_fibrant(const LinearGAction& R, const std::vector<EquivariantLeftMap>& left,
                               std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
