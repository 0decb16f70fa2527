#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/group.hpp"
#include "mstar/gtensor.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

// Upper bound on the raw enumeration tree, to keep brute-force oracles cheap.
double raw_size(const FinCategory& A, const FinCategory& B) {
  std::size_t widest = 1;
  for (ObjId a = 0; a < B.num_objects(); ++a) {
    for (ObjId b = 0; b < B.num_objects(); ++b) widest = std::max(widest, B.hom(a, b).size());
  }
  double n = 1;
  for (std::size_t k = 0; k < A.num_objects(); ++k) n *= double(B.num_objects());
  for (std::size_t k = 0; k < A.num_morphisms(); ++k) n *= double(widest);
  return n;
}

}  // namespace

TEST_CASE("point sharp interval is the unitary classifier") {
  const FinCategory I = indiscrete_category(2);
  const SharpResult m = sharp(point(Flavor::marked), I);
  CHECK(m.category.num_objects() == 2);
  CHECK(m.category.num_morphisms() == 4);
  CHECK(find_star_isomorphism(m.category, classifier(ClassifierKind::marked_unitary)).has_value());
  const SharpResult u = sharp(point(Flavor::unmarked), I);
  CHECK(find_star_isomorphism(u.category, classifier(ClassifierKind::unitary)).has_value());
  CHECK(oracle::error_kind([] { sharp(point(), walking_arrow()); }) == ErrorKind::not_a_groupoid);
}

TEST_CASE("sharp structure maps") {
  const StarCategory A = partial_isometry(Flavor::marked);
  const FinCategory G = delooping(cyclic_group(2)).base();
  const SharpResult S = sharp(A, G);
  CHECK(S.category.num_objects() == A.num_objects());
  CHECK(S.category.num_morphisms() == A.num_morphisms() * 2);
  CHECK(S.category.marked_list().size() == A.marked_list().size() * 2);
  CHECK(is_star_functor(S.category, A, sharp_projection(S)));
  CHECK(is_star_functor(A, S.category, sharp_inclusion(A, S, 0)));
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    for (MorId phi = 0; phi < G.num_morphisms(); ++phi) {
      const MorId m = S.morphism(f, phi);
      CHECK(S.base_morphism(m) == f);
      CHECK(S.groupoid_morphism(m) == phi);
      CHECK(S.base_morphism(S.category.star(m)) == A.star(f));
    }
  }
}

TEST_CASE("unitary functor categories") {
  const StarCategory bz2 = delooping(cyclic_group(2));
  const FunuResult F = funu(bz2.base(), bz2);
  CHECK(F.category.num_objects() == 2);
  CHECK(is_star_functor(bz2, F.category, constant_embedding(bz2, F)));
  CHECK(is_star_functor(F.category, bz2, evaluation(F, 0)));

  // Functors out of the interval with marked values are the marked morphisms.
  const FinCategory I = indiscrete_category(2);
  for (const auto& [name, B] : default_corpus().categories) {
    CAPTURE(name);
    const FunuResult FI = funu(I, B);
    CHECK(FI.category.num_objects() == B.marked_list().size());
    for (ObjId x = 0; x < FI.category.num_objects(); ++x) CHECK(FI.find_object(FI.objects[x]) == x);
  }
}

TEST_CASE("exponential law against brute-force counts") {
  std::size_t checked = 0;
  for (const auto& t : default_corpus().triples) {
    const SharpResult S = sharp(t.C, t.groupoid);
    const FunuResult F = funu(t.groupoid, t.A);
    if (raw_size(S.category.base(), t.A.base()) > 2e5 || raw_size(t.C.base(), F.category.base()) > 2e5) continue;
    CAPTURE(t.name);
    const auto left = oracle::count_star_functors(S.category, t.A);
    const auto right = oracle::count_star_functors(t.C, F.category);
    CHECK(left == right);
    const ExponentialReport r = verify_exponential_law(t.C, t.groupoid, t.A);
    CHECK(r.bijective);
    CHECK(r.left == left);
    CHECK(r.right == right);
    ++checked;
  }
  CHECK(checked >= 4);
}

TEST_CASE("exponential transport is inverse to its inverse") {
  const StarCategory C = partial_isometry(Flavor::marked), A = delooping(cyclic_group(2));
  const FinCategory G = indiscrete_category(2);
  const SharpResult S = sharp(C, G);
  const FunuResult F = funu(G, A);
  for (const Functor& Phi : enumerate_star_functors(S.category, A)) {
    const Functor Psi = exponential_transport(C, S, F, Phi);
    CHECK(is_star_functor(C, F.category, Psi));
    CHECK(exponential_transport_inverse(C, S, A, F, Psi) == Phi);
  }
}

TEST_CASE("linear exponential law") {
  const auto corpus = default_corpus();
  REQUIRE(!corpus.linear_triples.empty());
  for (const auto& t : corpus.linear_triples) {
    CAPTURE(t.name);
    const ExponentialReport r = verify_exponential_law(t.C, t.groupoid, t.A);
    CHECK(r.bijective);
    CHECK(r.left == r.right);
    const LinearSharpResult S = sharp(t.C, t.groupoid);
    CHECK(r.left == enumerate_linear_functors(S.category, t.A).size());
  }
}

TEST_CASE("linear sharp dimensions") {
  const LinearStarCategory L = linearize(delooping(cyclic_group(3)));
  const FinCategory I = indiscrete_category(2);
  const LinearSharpResult S = sharp(L, I);
  for (ObjId g = 0; g < 2; ++g) {
    for (ObjId h = 0; h < 2; ++h) CHECK(S.category.dim(S.object(0, g), S.object(0, h)) == 3);
  }
  // Fun^u(I, lin BZ/3): one object per marked element, homs of dimension 3.
  const LinearFunuResult F = funu(I, L);
  CHECK(F.category().num_objects() == L.marked().size());
  CHECK(F.category().dim(0, 0) == 3);
}
