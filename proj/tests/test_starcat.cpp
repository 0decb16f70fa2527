#include <doctest.h>

#include <functional>

#include "mstar/corpus.hpp"
#include "mstar/free_star.hpp"
#include "mstar/group.hpp"
#include "mstar/starcat.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

// Brute-force natural transformation F ⇒ G with every component marked.
bool markedly_isomorphic(const StarCategory& A, const StarCategory& B, const Functor& F, const Functor& G) {
  const FinCategory &a = A.base(), &b = B.base();
  std::vector<MorId> comp(a.num_objects());
  std::function<bool(std::size_t)> go = [&](std::size_t x) {
    if (x == a.num_objects()) {
      for (MorId f = 0; f < a.num_morphisms(); ++f) {
        if (b.compose(G.on_morphisms[f], comp[a.src(f)]) != b.compose(comp[a.tgt(f)], F.on_morphisms[f]))
          return false;
      }
      return true;
    }
    for (MorId c : b.hom(F.on_objects[x], G.on_objects[x])) {
      if (!B.is_marked(c)) continue;
      comp[x] = c;
      if (go(x + 1)) return true;
    }
    return false;
  };
  return go(0);
}

bool weak_equivalence_oracle(const StarCategory& A, const StarCategory& B, const Functor& F) {
  bool found = false;
  oracle::for_each_raw_functor(B.base(), A.base(), [&](const Functor& G) {
    if (found || !oracle::star_laws(B, A, G)) return;
    found = markedly_isomorphic(A, A, identity_functor(A.base()), compose(G, F)) &&
            markedly_isomorphic(B, B, identity_functor(B.base()), compose(F, G));
  });
  return found;
}

std::vector<NamedCategory> small_categories() {
  std::vector<NamedCategory> out;
  for (auto& c : default_corpus().categories) {
    if (c.category.num_morphisms() <= 8) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("star and marking validation") {
  const FinCategory I = indiscrete_category(2);
  SUBCASE("star must reverse morphisms") {
    std::vector<MorId> star(I.num_morphisms());
    for (MorId f = 0; f < I.num_morphisms(); ++f) star[f] = f;
    CHECK(oracle::error_kind([&] { StarCategory::make_unmarked(I, star); }) == ErrorKind::invalid_star);
  }
  SUBCASE("star table size") {
    CHECK(oracle::error_kind([&] { StarCategory::make_unmarked(I, {0}); }) == ErrorKind::invalid_star);
  }
  SUBCASE("marked morphisms are unitary") {
    const StarCategory P = partial_isometry(Flavor::marked);
    const MorId v = *P.base().find_morphism("v");
    CHECK(oracle::error_kind([&] { with_marking(P, {0, 1, v}); }) == ErrorKind::invalid_marking);
  }
  SUBCASE("identities are marked") {
    const StarCategory B = delooping(cyclic_group(2));
    CHECK(oracle::error_kind([&] { with_marking(B, {}); }) == ErrorKind::invalid_marking);
  }
  SUBCASE("marking closed under composition") {
    const StarCategory B = delooping(klein_group());
    CHECK(oracle::error_kind([&] { with_marking(B, {0, 1, 2}); }) == ErrorKind::invalid_marking);
    CHECK_NOTHROW(with_marking(B, {0, 1}));
  }
}

TEST_CASE("classifiers") {
  const StarCategory pt = classifier(ClassifierKind::object);
  CHECK(pt.num_objects() == 1);
  CHECK(pt.num_morphisms() == 1);
  const StarCategory one = classifier(ClassifierKind::unitary);
  CHECK(one.num_objects() == 2);
  CHECK(one.num_morphisms() == 4);
  CHECK(oracle::count_unitaries(one) == 4);
  const StarCategory I = classifier(ClassifierKind::invertible);
  CHECK(I.num_objects() == 2);
  CHECK(I.num_morphisms() == 4);
  const StarCategory one_plus = classifier(ClassifierKind::marked_unitary);
  CHECK(one_plus.marked_list().size() == 4);
  CHECK(find_star_isomorphism(one_plus, ma(one)).has_value());
  CHECK_FALSE(find_star_isomorphism(one_plus, mi(one)).has_value());
  CHECK_THROWS_AS(representing_object(RepresentedKind::morphism, one), Error);
}

TEST_CASE("representable functors against direct counts") {
  for (const auto& [name, B] : small_categories()) {
    CAPTURE(name);
    std::size_t marked = 0;
    for (MorId f = 0; f < B.num_morphisms(); ++f) marked += B.is_marked(f);
    const std::vector<std::pair<RepresentedKind, std::size_t>> kinds{
        {RepresentedKind::object, B.num_objects()},
        {RepresentedKind::unitary, oracle::count_unitaries(B)},
        {RepresentedKind::marked, marked}};
    for (const auto& [kind, expected] : kinds) {
      const auto elems = represented_hom(kind, B);
      CHECK(elems.size() == expected);
      const StarCategory R = representing_object(kind, B);
      CHECK(oracle::count_star_functors(R, B) == expected);
      for (auto x : elems) {
        const Functor F = classifying_functor(kind, B, x);
        CHECK(is_star_functor(R, B, F));
        CHECK(classified_element(kind, B, F) == x);
      }
    }
  }
}

TEST_CASE("star functor counts agree with raw enumeration") {
  const auto cats = small_categories();
  for (const auto& A : cats) {
    for (const auto& B : cats) {
      if (A.category.flavor() != B.category.flavor()) continue;
      CAPTURE(A.name);
      CAPTURE(B.name);
      CHECK(count_star_functors(A.category, B.category) == oracle::count_star_functors(A.category, B.category));
    }
  }
}

TEST_CASE("unitaries and markings of small examples") {
  const StarCategory bz2 = delooping(cyclic_group(2), Flavor::unmarked);
  CHECK(bz2.unitaries().size() == 2);
  CHECK(bz2.marked_list().size() == 2);
  const StarCategory m = mi(delooping(cyclic_group(2)));
  CHECK(m.marked_list() == std::vector<MorId>{m.base().identity(0)});
  const StarCategory P = partial_isometry(Flavor::unmarked);
  CHECK(P.unitaries().size() == 2);
  CHECK(oracle::count_unitaries(P) == 2);
  CHECK(ma(partial_isometry(Flavor::marked)).marked_list() == P.unitaries());
  CHECK(forget_marking(m).flavor() == Flavor::unmarked);
  CHECK(is_groupoid(marked_subcategory(P).groupoid));
}

TEST_CASE("weak equivalences: both routes against the definition") {
  const StarCategory pt_u = point(Flavor::unmarked), one = classifier(ClassifierKind::unitary);
  const Functor at0 = {{0}, {0}};
  CHECK(is_weak_equivalence(pt_u, one, at0));
  const StarCategory pt = point(Flavor::marked), mi_one = mi(one);
  CHECK_FALSE(is_weak_equivalence(pt, mi_one, at0));
  CHECK(is_equivalence(pt.base(), mi_one.base(), at0));

  std::size_t checked = 0;
  for (const auto& m : default_corpus().morphisms) {
    if (m.source.num_morphisms() > 6 || m.target.num_morphisms() > 6) continue;
    CAPTURE(m.name);
    const bool expected = weak_equivalence_oracle(m.source, m.target, m.map);
    CHECK(bool(is_weak_equivalence(m.source, m.target, m.map)) == expected);
    CHECK(bool(weak_equivalence_by_search(m.source, m.target, m.map)) == expected);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("star coproducts") {
  const StarCategory A = delooping(cyclic_group(2)), B = classifier(ClassifierKind::marked_unitary);
  const auto c = star_coproduct(A, B);
  CHECK(c.category.num_objects() == 3);
  CHECK(is_star_functor(A, c.category, c.left));
  CHECK(is_star_functor(B, c.category, c.right));
  const StarCategory T = delooping(cyclic_group(3));
  CHECK(oracle::count_star_functors(c.category, T) ==
        oracle::count_star_functors(A, T) * oracle::count_star_functors(B, T));
  CHECK_THROWS_AS(star_coproduct(A, point(Flavor::unmarked)), Error);
}

TEST_CASE("free *-category on the walking arrow") {
  const FreeStarPresentation P = morphism_classifier();
  const auto words = P.words_up_to(4);
  for (const Word& w : words) {
    CHECK(P.well_typed(w));
    CHECK(P.reduce(w) == w);
    CHECK(P.star(P.star(w)) == w);
    CHECK(P.compose(w, P.identity(P.src(w))) == w);
    CHECK(P.compose(P.identity(P.tgt(w)), w) == w);
  }
  for (const Word& h : words) {
    for (const Word& g : words) {
      if (P.src(h) != P.tgt(g)) continue;
      CHECK(P.star(P.compose(h, g)) == P.compose(P.star(g), P.star(h)));
      for (const Word& f : words) {
        if (P.src(g) != P.tgt(f)) continue;
        CHECK(P.compose(h, P.compose(g, f)) == P.compose(P.compose(h, g), f));
      }
    }
  }
  // f, f*f and ff* are distinct: nothing forces the arrow to be invertible.
  const Word f = P.letter(2);
  CHECK(P.compose(P.star(f), f) != P.identity(P.src(f)));
}

TEST_CASE("the free *-category represents morphisms") {
  const FreeStarPresentation P = morphism_classifier();
  for (const auto& [name, B] : small_categories()) {
    CAPTURE(name);
    const auto homs = free_star_homs(P, B);
    CHECK(homs.size() == B.num_morphisms());
    for (const auto& F : homs) {
      FreeStarEvaluation e(P, B, F);
      CHECK(e.check(4));
    }
  }
}

TEST_CASE("free presentations validate their inputs") {
  CHECK(oracle::error_kind([] { FreeStarPresentation(walking_arrow(), {2}); }) == ErrorKind::invalid_marking);
  const StarCategory B = delooping(cyclic_group(2));
  const FreeStarPresentation P = morphism_classifier();
  CHECK(oracle::error_kind([&] { FreeStarEvaluation(P, B, Functor{{0, 0}, {0, 0, 5}}); }) ==
        ErrorKind::ill_typed_assignment);
}
