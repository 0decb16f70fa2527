#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/search.hpp"

namespace mstar {

enum class Flavor { unmarked, marked };

/// A finite *-category with a marking. In the unmarked flavor the marked set
/// is always the set of all unitaries, which is exactly ma of the underlying
/// *-category; that way every algorithm can read `is_marked` uniformly.
class StarCategory {
 public:
  StarCategory() = default;

  /// Errors: InvalidStar, InvalidMarking, each naming a witness.
  static StarCategory make(FinCategory base, std::vector<MorId> star, std::vector<bool> marked, Flavor flavor);
  static StarCategory make_marked(FinCategory base, std::vector<MorId> star, const std::vector<MorId>& marked);
  static StarCategory make_unmarked(FinCategory base, std::vector<MorId> star);

  const FinCategory& base() const { return base_; }
  Flavor flavor() const { return flavor_; }
  MorId star(MorId f) const { return star_[f]; }
  const std::vector<MorId>& star_table() const { return star_; }
  bool is_marked(MorId f) const { return marked_[f]; }
  const std::vector<bool>& marked_mask() const { return marked_; }

  bool is_unitary(MorId f) const;
  std::vector<MorId> unitaries() const;
  std::vector<MorId> marked_list() const;
  std::size_t num_objects() const { return base_.num_objects(); }
  std::size_t num_morphisms() const { return base_.num_morphisms(); }

  friend bool operator==(const StarCategory& a, const StarCategory& b) {
    return a.flavor_ == b.flavor_ && a.base_ == b.base_ && a.star_ == b.star_ && a.marked_ == b.marked_;
  }

 private:
  FinCategory base_;
  std::vector<MorId> star_;
  std::vector<bool> marked_;
  Flavor flavor_ = Flavor::marked;
};

/// *-groupoid with g* = g⁻¹. The marked flavor marks every morphism.
StarCategory star_groupoid(const FinCategory& groupoid, Flavor flavor = Flavor::marked);

// Adjunctions between the flavors.
StarCategory mi(const StarCategory& A);
StarCategory ma(const StarCategory& A);
StarCategory forget_marking(const StarCategory& A);
inline const FinCategory& forget_star(const StarCategory& A) { return A.base(); }
/// Same *-category marked by the given subset (validated).
StarCategory with_marking(const StarCategory& A, const std::vector<MorId>& marked);

struct MarkedSubcategory {
  FinCategory groupoid;
  std::vector<MorId> to_ambient;    // subcategory id → ambient id
  std::vector<MorId> from_ambient;  // ambient id → subcategory id or kNone
};
/// Wide subcategory on the marked morphisms; always a groupoid.
MarkedSubcategory marked_subcategory(const StarCategory& A);
/// The functor A⁺ → B⁺ induced by a marked *-functor.
Functor restrict_to_marked(const MarkedSubcategory& a, const MarkedSubcategory& b, const Functor& F);

/// Functor plus star and marking preservation.
std::optional<nlohmann::json> star_functor_violation(const StarCategory& A, const StarCategory& B, const Functor& F);
inline bool is_star_functor(const StarCategory& A, const StarCategory& B, const Functor& F) {
  return !star_functor_violation(A, B, F).has_value();
}

/// Search constraints that enforce star and marking preservation.
SearchConstraints star_constraints(const StarCategory& A, const StarCategory& B);
std::vector<Functor> enumerate_star_functors(const StarCategory& A, const StarCategory& B,
                                             std::uint64_t bound = SearchBudget::kDefaultLimit);
std::uint64_t count_star_functors(const StarCategory& A, const StarCategory& B,
                                  std::uint64_t bound = SearchBudget::kDefaultLimit);

enum class ClassifierKind { object, invertible, unitary, marked_unitary };

/// Δ⁰, 𝕀 (as a *-groupoid), 𝟙 and 𝟙⁺. The morphism classifier is infinite
/// in *-categories and only exists as a free presentation.
StarCategory classifier(ClassifierKind kind);

enum class RepresentedKind { object, morphism, unitary, marked };

/// Ob(B), Mor(B), unitaries(B) or marked(B), as ids in B.
std::vector<std::uint32_t> represented_hom(RepresentedKind kind, const StarCategory& B);
/// The classifier used to represent `kind` against B, adjusted to B's flavor
/// (Δ⁰, mi(𝟙) or 𝟙, 𝟙⁺). Not available for the morphism kind.
StarCategory representing_object(RepresentedKind kind, const StarCategory& B);
/// Element ↦ functor out of the representing object, and back.
Functor classifying_functor(RepresentedKind kind, const StarCategory& B, std::uint32_t element);
std::uint32_t classified_element(RepresentedKind kind, const StarCategory& B, const Functor& F);

/// Characterization: the underlying functor and the functor on marked
/// subcategories are both equivalences.
Verdict is_weak_equivalence(const StarCategory& A, const StarCategory& B, const Functor& F);
/// Definition route: search for g: B → A with f∘g and g∘f markedly isomorphic
/// to the identities. Exponential; for small inputs only.
Verdict weak_equivalence_by_search(const StarCategory& A, const StarCategory& B, const Functor& F,
                                   std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Natural transformation with all components marked, if any.
std::optional<NatTransformation> find_marked_isomorphism(const StarCategory& A, const StarCategory& B,
                                                         const Functor& F, const Functor& G,
                                                         std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Isomorphism of marked *-categories, by exhaustive search.
std::optional<Functor> find_star_isomorphism(const StarCategory& A, const StarCategory& B,
                                             std::uint64_t bound = SearchBudget::kDefaultLimit);
bool is_star_isomorphism(const StarCategory& A, const StarCategory& B, const Functor& F);

struct StarCoproduct {
  StarCategory category;
  Functor left, right;
};
StarCoproduct star_coproduct(const StarCategory& A, const StarCategory& B);
StarCategory empty_star_category(Flavor flavor = Flavor::marked);
StarCategory point(Flavor flavor = Flavor::marked);

}  // namespace mstar
