#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

struct Letter {
  MorId mor;
  bool starred;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A composable word, letters in the order they are applied. The empty word
/// is the identity of `start`.
struct Word {
  ObjId start = 0;
  std::vector<Letter> letters;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// The free *-category on a finite category X in which the marked morphisms
/// (isomorphisms of X) satisfy f* = f⁻¹. Never materialized: it is infinite
/// as soon as X has a non-invertible arrow.
class FreeStarPresentation {
 public:
  /// Errors: InvalidMarking when a marked generator is not invertible in X.
  explicit FreeStarPresentation(FinCategory X, std::vector<MorId> marked = {});

  const FinCategory& generators() const { return X_; }
  bool is_marked(MorId m) const { return marked_[m]; }
  const std::vector<bool>& marked_mask() const { return marked_; }

  ObjId src(const Letter& l) const { return l.starred ? X_.tgt(l.mor) : X_.src(l.mor); }
  ObjId tgt(const Letter& l) const { return l.starred ? X_.src(l.mor) : X_.tgt(l.mor); }
  ObjId src(const Word& w) const { return w.start; }
  ObjId tgt(const Word& w) const { return w.letters.empty() ? w.start : tgt(w.letters.back()); }
  bool well_typed(const Word& w) const;

  /// Normal form: drop identities, replace starred marked letters by inverses,
  /// merge adjacent plain letters through X and adjacent starred letters via
  /// g*∘f* = (f∘g)*.
  Word reduce(Word w) const;
  Word identity(ObjId a) const { return {a, {}}; }
  Word letter(MorId m, bool starred = false) const;
  /// g∘f, reduced.
  Word compose(const Word& g, const Word& f) const;
  Word star(const Word& w) const;

  /// Distinct normal forms of all words with at most `length` letters.
  std::vector<Word> words_up_to(std::size_t length) const;

 private:
  FinCategory X_;
  std::vector<bool> marked_;
  std::vector<MorId> inverse_;
};

/// Free_*(walking arrow): represents morphisms of *-categories.
FreeStarPresentation morphism_classifier();

/// The *-functor Free_*(X) → B extending a functor X → B.
class FreeStarEvaluation {
 public:
  /// Errors: IllTypedAssignment when `assignment` is not a functor X → B or
  /// sends a marked generator to an unmarked morphism.
  FreeStarEvaluation(const FreeStarPresentation& P, const StarCategory& B, Functor assignment);

  MorId evaluate(const Word& w) const;
  ObjId evaluate_object(ObjId a) const { return assignment_.on_objects[a]; }
  const Functor& assignment() const { return assignment_; }

  /// Composition, star and identities preserved on all words of bounded length.
  Verdict check(std::size_t length) const;

 private:
  const FreeStarPresentation* P_;
  const StarCategory* B_;
  Functor assignment_;
};

/// Hom(Free_*(X), B), realized as the functors X → F_*(B).
std::vector<Functor> free_star_homs(const FreeStarPresentation& P, const StarCategory& B,
                                    std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
