#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mstar/fincat.hpp"

namespace mstar {

/// Caps the number of candidate assignments tried by one search. Running
/// out is an error, never a silent truncation.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000;

  explicit SearchBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}
  void tick();
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// A pair of automorphisms that a searched functor F must intertwine:
/// F∘on_domain = on_codomain∘F.
struct Equivariance {
  Functor on_domain;
  Functor on_codomain;
};

struct SearchConstraints {
  // Star preservation, when both are set.
  const std::vector<MorId>* dom_star = nullptr;
  const std::vector<MorId>* cod_star = nullptr;
  // Marked morphisms must land in marked morphisms.
  const std::vector<bool>* dom_marked = nullptr;
  const std::vector<bool>* cod_marked = nullptr;
  // Either empty or one entry per domain id; kNone leaves the entry free.
  std::vector<ObjId> fixed_objects;
  std::vector<MorId> fixed_morphisms;
  std::function<bool(ObjId, ObjId)> allow_object;
  std::function<bool(MorId, MorId)> allow_morphism;
  std::vector<Equivariance> equivariance;
  bool injective_objects = false;
  // Hom-set sizes must agree and morphisms map injectively (isomorphism search).
  bool bijective_homs = false;
  // Reject up front when |Ob B|^(free objects) exceeds the budget.
  bool precheck = true;
};

/// Calls `visit` on every functor A→B satisfying the constraints, in
/// lexicographic order of (object images, morphism images). Returning false
/// from `visit` stops the search. Returns the number of functors visited.
std::uint64_t for_each_functor(const FinCategory& A, const FinCategory& B, const SearchConstraints& constraints,
                               SearchBudget& budget, const std::function<bool(const Functor&)>& visit);

std::vector<Functor> enumerate_functors(const FinCategory& A, const FinCategory& B,
                                        const SearchConstraints& constraints = {},
                                        std::uint64_t bound = SearchBudget::kDefaultLimit);
std::optional<Functor> find_functor(const FinCategory& A, const FinCategory& B,
                                    const SearchConstraints& constraints = {},
                                    std::uint64_t bound = SearchBudget::kDefaultLimit);
std::uint64_t count_functors(const FinCategory& A, const FinCategory& B, const SearchConstraints& constraints = {},
                             std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Natural transformations F ⇒ G whose components pass `allow` (all, if empty).
std::uint64_t for_each_transformation(const FinCategory& A, const FinCategory& B, const Functor& F,
                                      const Functor& G, const std::function<bool(MorId)>& allow,
                                      SearchBudget& budget,
                                      const std::function<bool(const NatTransformation&)>& visit);
std::optional<NatTransformation> find_transformation(const FinCategory& A, const FinCategory& B, const Functor& F,
                                                     const Functor& G, const std::function<bool(MorId)>& allow = {},
                                                     std::uint64_t bound = SearchBudget::kDefaultLimit);
std::vector<NatTransformation> enumerate_transformations(const FinCategory& A, const FinCategory& B,
                                                         const Functor& F, const Functor& G,
                                                         const std::function<bool(MorId)>& allow = {},
                                                         std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Isomorphism A→B respecting the extra constraints (star, marking, ...).
/// Marked sets must additionally have equal size for a marked isomorphism;
/// callers compare those counts.
std::optional<Functor> find_isomorphism(const FinCategory& A, const FinCategory& B,
                                        SearchConstraints constraints = {},
                                        std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
