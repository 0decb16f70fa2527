#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/search.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

/// Injective on objects.
bool is_cofibration(const Functor& F);

/// Every marked u: F(c) → d lifts to a marked v out of c with F(v) = u.
/// Witness: the object c and the morphism u that do not lift.
Verdict is_good(const StarCategory& C, const StarCategory& D, const Functor& F);

/// Surjective on objects, full and faithful, and full on marked morphisms.
Verdict is_trivial_fibration(const StarCategory& C, const StarCategory& D, const Functor& F);

/// Square  A --top--> C
///         i|         |f
///          v         v
///         B --bot--> D
struct LiftingProblem {
  const StarCategory* A = nullptr;
  const StarCategory* B = nullptr;
  const StarCategory* C = nullptr;
  const StarCategory* D = nullptr;
  Functor i, f, top, bottom;
};

/// First lift B → C in search order, if any. Errors: InvalidArgument when the
/// square does not commute, BoundExceeded.
std::optional<Functor> solve_lifting(const LiftingProblem& p, std::uint64_t bound = SearchBudget::kDefaultLimit);

struct LeftMap {
  std::string name;
  StarCategory source, target;
  Functor map;
};

/// pt → pt♯𝕀 and X → X♯𝕀 at 0 for each named X; all of the given flavor.
std::vector<LeftMap> generating_trivial_cofibrations(
    Flavor flavor, const std::vector<std::pair<std::string, StarCategory>>& extra = {});

/// Right lifting property of f: C → D against every square over every left map.
Verdict has_right_lifting(const StarCategory& C, const StarCategory& D, const Functor& f,
                          const std::vector<LeftMap>& left, std::uint64_t bound = SearchBudget::kDefaultLimit);

struct Factorization {
  StarCategory middle;
  Functor first, second;
  nlohmann::json certificates;
  bool certified = false;
};

/// Z(a): Ob A ⊔ Ob B with Hom_Z(x,y) = Hom_B(q̄x, q̄y), q̄ = a on A and the
/// identity on B. j is the inclusion of A, q collapses onto B.
Factorization cylinder_factorize(const StarCategory& A, const StarCategory& B, const Functor& a);

/// Checks that restriction along A♯𝕀 → Z(a) ← B is a bijection from
/// Hom(Z(a), D) onto the compatible pairs (φ: A♯𝕀 → D, ψ: B → D).
Verdict verify_cylinder_universal_property(const StarCategory& A, const StarCategory& B, const Functor& a,
                                           const Factorization& Z, const StarCategory& D,
                                           std::uint64_t bound = SearchBudget::kDefaultLimit);

/// P(a) = Fun^u(𝕀,B) ×_B A along evaluation at 1; j(x) = (const a(x), x),
/// p = evaluation at 0. Errors: BoundExceeded.
Factorization path_factorize(const StarCategory& A, const StarCategory& B, const Functor& a,
                             std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Axioms ----

Verdict two_out_of_three(const StarCategory& A, const StarCategory& B, const StarCategory& C, const Functor& f,
                         const Functor& g);

/// f: A → B is a retract of g: A' → B' through (iA, rA) and (iB, rB).
struct RetractDiagram {
  std::string name;
  StarCategory A, B, A2, B2;
  Functor f, g, iA, rA, iB, rB;
};

/// Validates the diagram, then checks that each of the three classes
/// containing g also contains f.
Verdict retract_closure(const RetractDiagram& d);

struct StarProduct {
  StarCategory category;
  Functor left, right;  // projections
  std::vector<std::vector<ObjId>> object_pairs;
  std::vector<std::vector<MorId>> morphism_pairs;
};
StarProduct star_product(const StarCategory& A, const StarCategory& B);

/// f ⊔ id_pt with retractions folding pt onto a chosen object. Needs A nonempty.
RetractDiagram coproduct_retract(const StarCategory& A, const StarCategory& B, const Functor& f);
/// f × id_C, retracted along the projection; needs C nonempty.
RetractDiagram product_retract(const StarCategory& A, const StarCategory& B, const Functor& f, const StarCategory& C);

/// Unique map to pt is good; ∅ → X is injective on objects.
Verdict fibrant_and_cofibrant(const StarCategory& X);

}  // namespace mstar
