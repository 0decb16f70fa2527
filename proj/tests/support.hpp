#pragma once

// Brute-force oracles shared by the unit tests. They enumerate raw maps and
// check the axioms directly, without the search engine.

#include <doctest.h>

#include <cstdint>
#include <functional>
#include <optional>

#include "mstar/error.hpp"
#include "mstar/fincat.hpp"
#include "mstar/starcat.hpp"

namespace oracle {

using namespace mstar;

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline bool functor_laws(const FinCategory& A, const FinCategory& B, const Functor& F) {
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    const MorId g = F.on_morphisms[f];
    if (B.src(g) != F.on_objects[A.src(f)] || B.tgt(g) != F.on_objects[A.tgt(f)]) return false;
  }
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    if (F.on_morphisms[A.identity(a)] != B.identity(F.on_objects[a])) return false;
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    for (MorId g = 0; g < A.num_morphisms(); ++g) {
      if (A.tgt(f) != A.src(g)) continue;
      if (F.on_morphisms[A.compose(g, f)] != B.compose(F.on_morphisms[g], F.on_morphisms[f])) return false;
    }
  }
  return true;
}

/// Every object map times every morphism map into B, filtered by the laws.
inline void for_each_raw_functor(const FinCategory& A, const FinCategory& B,
                                 const std::function<void(const Functor&)>& visit) {
  Functor F{std::vector<ObjId>(A.num_objects(), 0), std::vector<MorId>(A.num_morphisms(), 0)};
  std::function<void(std::size_t)> mors = [&](std::size_t f) {
    if (f == A.num_morphisms()) {
      if (functor_laws(A, B, F)) visit(F);
      return;
    }
    for (MorId g = 0; g < B.num_morphisms(); ++g) {
      if (B.src(g) != F.on_objects[A.src(f)] || B.tgt(g) != F.on_objects[A.tgt(f)]) continue;
      F.on_morphisms[f] = g;
      mors(f + 1);
    }
  };
  std::function<void(std::size_t)> objs = [&](std::size_t a) {
    if (a == A.num_objects()) return mors(0);
    for (ObjId b = 0; b < B.num_objects(); ++b) {
      F.on_objects[a] = b;
      objs(a + 1);
    }
  };
  objs(0);
}

inline std::uint64_t count_functors(const FinCategory& A, const FinCategory& B) {
  std::uint64_t n = 0;
  for_each_raw_functor(A, B, [&](const Functor&) { ++n; });
  return n;
}

inline bool star_laws(const StarCategory& A, const StarCategory& B, const Functor& F) {
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    if (F.on_morphisms[A.star(f)] != B.star(F.on_morphisms[f])) return false;
    if (A.is_marked(f) && !B.is_marked(F.on_morphisms[f])) return false;
  }
  return true;
}

inline std::uint64_t count_star_functors(const StarCategory& A, const StarCategory& B) {
  std::uint64_t n = 0;
  for_each_raw_functor(A.base(), B.base(), [&](const Functor& F) { n += star_laws(A, B, F); });
  return n;
}

inline std::size_t count_unitaries(const StarCategory& B) {
  const FinCategory& c = B.base();
  std::size_t n = 0;
  for (MorId u = 0; u < c.num_morphisms(); ++u) {
    n += c.compose(B.star(u), u) == c.identity(c.src(u)) && c.compose(u, B.star(u)) == c.identity(c.tgt(u));
  }
  return n;
}

}  // namespace oracle
