#pragma once

#include <vector>

#include "mstar/fincat.hpp"

namespace mstar {

/// A functor from a finite index category into finite categories, given by
/// one category per index object and one functor per index morphism.
struct Diagram {
  FinCategory index;
  std::vector<FinCategory> categories;
  std::vector<Functor> maps;
};

/// Limit computed componentwise: objects and morphisms are the compatible
/// tuples, ordered lexicographically.
struct LimitResult {
  FinCategory category;
  std::vector<Functor> cone;
  std::vector<std::vector<ObjId>> object_tuples;
  std::vector<std::vector<MorId>> morphism_tuples;
};

LimitResult finite_limit(const Diagram& d);

LimitResult product(const FinCategory& A, const FinCategory& B);
/// A →f C ←g B.
LimitResult pullback(const FinCategory& A, const FinCategory& B, const FinCategory& C, const Functor& f,
                     const Functor& g);
/// Equalizer of F, G: A ⇉ B.
LimitResult equalizer(const FinCategory& A, const FinCategory& B, const Functor& F, const Functor& G);

/// Index shapes for the helpers above.
FinCategory cospan_shape();
FinCategory parallel_pair_shape();

}  // namespace mstar
