#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/group.hpp"
#include "mstar/linear.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

std::vector<NamedCategory> marked_groupoids() {
  std::vector<NamedCategory> out;
  for (auto& c : default_corpus().categories) {
    const StarCategory& A = c.category;
    if (A.flavor() == Flavor::marked && A.marked_list().size() == A.num_morphisms() && A.num_morphisms() <= 6) {
      out.push_back(c);
    }
  }
  return out;
}

LinearStarCategory scaled_identity_marking(const Gaussian& c) {
  LinearBuilder b;
  ObjId x = b.add_object("x");
  b.set_basis(x, x, {"1"});
  b.set_identity(x, {1});
  b.set_basis_product(x, x, x, 0, 0, {1});
  b.set_basis_star(x, x, 0, {1});
  b.add_marked({x, x, {c}});
  return b.build();
}

}  // namespace

TEST_CASE("linearization of BZ/2") {
  const StarCategory bz2 = delooping(cyclic_group(2));
  const LinearStarCategory L = linearize(bz2);
  REQUIRE(L.num_objects() == 1);
  CHECK(L.dim(0, 0) == 2);
  CHECK(L.marked().size() == 2);
  CHECK(L.is_marked_generated());
  // s* = s⁻¹ = s, and the star is anti-linear.
  const Vec s = unit_vec(2, 1);
  CHECK(L.star(0, 0, s) == s);
  CHECK(L.star(0, 0, scale(Gaussian::i(), s)) == scale(-Gaussian::i(), s));
  CHECK(L.compose(0, 0, 0, s, s) == L.identity(0));
  CHECK(L.is_unitary({0, 0, s}));
  CHECK_FALSE(L.is_unitary({0, 0, scale(2, s)}));
  // The unit circle is not marked: only the images of marked morphisms are.
  CHECK_FALSE(L.is_marked({0, 0, scale(Gaussian::i(), s)}));
  CHECK(L.is_unitary({0, 0, scale(Gaussian::i(), s)}));
}

TEST_CASE("linearized structure constants follow the category") {
  for (const auto& [name, A] : default_corpus().categories) {
    CAPTURE(name);
    const LinearStarCategory L = linearize(A);
    const FinCategory& c = A.base();
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      for (ObjId b = 0; b < c.num_objects(); ++b) CHECK(L.dim(a, b) == c.hom(a, b).size());
    }
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      const Vec ef = unit_vec(L.dim(c.src(f), c.tgt(f)), c.hom_position(f));
      const MorId fs = A.star(f);
      CHECK(L.star(c.src(f), c.tgt(f), ef) == unit_vec(L.dim(c.tgt(f), c.src(f)), c.hom_position(fs)));
      for (MorId g : c.out(c.tgt(f))) {
        const Vec eg = unit_vec(L.dim(c.src(g), c.tgt(g)), c.hom_position(g));
        const MorId gf = c.compose(g, f);
        CHECK(L.compose(c.src(f), c.tgt(f), c.tgt(g), eg, ef) ==
              unit_vec(L.dim(c.src(gf), c.tgt(gf)), c.hom_position(gf)));
      }
    }
    CHECK(L.marked().size() == A.marked_list().size());
  }
}

TEST_CASE("linear builder validation") {
  CHECK_NOTHROW(scaled_identity_marking(1));
  CHECK(oracle::error_kind([] { scaled_identity_marking(2); }) == ErrorKind::invalid_marking);
  CHECK(oracle::error_kind([] {
          LinearBuilder b;
          ObjId x = b.add_object("x");
          b.set_basis(x, x, {"1"});
          b.set_identity(x, {1});
          b.set_basis_product(x, x, x, 0, 0, {2});
          b.set_basis_star(x, x, 0, {1});
          b.build();
        }) == ErrorKind::inconsistent_linear);
  CHECK(oracle::error_kind([] {
          LinearBuilder b;
          ObjId x = b.add_object("x");
          b.set_basis(x, x, {"1"});
          b.set_identity(x, {1});
          b.set_basis_product(x, x, x, 0, 0, {1});
          b.set_basis_star(x, x, 0, {2});
          b.build();
        }) == ErrorKind::invalid_star);
}

TEST_CASE("linear functors out of a linearized groupoid are *-functors") {
  const auto gs = marked_groupoids();
  for (const auto& A : gs) {
    for (const auto& B : gs) {
      CAPTURE(A.name);
      CAPTURE(B.name);
      const LinearStarCategory LA = linearize(A.category), LB = linearize(B.category);
      const auto fs = enumerate_linear_functors(LA, LB);
      CHECK(fs.size() == oracle::count_star_functors(A.category, B.category));
      for (const auto& F : fs) CHECK(is_linear_functor(LA, LB, F));
    }
  }
}

TEST_CASE("linearize is functorial") {
  const StarCategory bz2 = delooping(cyclic_group(2)), bz4 = delooping(cyclic_group(4)), pt = point();
  const Functor inc{{0}, {0, 2}};
  const Functor to_pt{{0}, {0, 0, 0, 0}};
  REQUIRE(is_star_functor(bz2, bz4, inc));
  const LinearStarCategory L2 = linearize(bz2), L4 = linearize(bz4), L1 = linearize(pt);
  const LinearFunctor Li = linearize(bz2, bz4, inc), Lp = linearize(bz4, pt, to_pt);
  CHECK(is_linear_functor(L2, L4, Li));
  CHECK(compose(L2, L4, L1, Lp, Li) == linearize(bz2, pt, compose(to_pt, inc)));
  CHECK(linearize(bz2, bz2, identity_functor(bz2.base())) == identity_functor(L2));
}

TEST_CASE("linearization adjunction round trip") {
  const auto corpus = default_corpus();
  for (const auto& A : marked_groupoids()) {
    for (const auto& B : corpus.linear) {
      CAPTURE(A.name);
      CAPTURE(B.name);
      const LinearStarCategory LA = linearize(A.category);
      const auto phis = enumerate_underlying_functors(A.category, B.category);
      CHECK(phis.size() == enumerate_linear_functors(LA, B.category).size());
      for (const auto& phi : phis) {
        CHECK(is_underlying_functor(A.category, B.category, phi));
        const LinearFunctor psi = linearize_transport(A.category, B.category, phi);
        CHECK(is_linear_functor(LA, B.category, psi));
        CHECK(linearize_transport_inverse(A.category, B.category, psi) == phi);
      }
    }
  }
}

TEST_CASE("marked generation is required for enumeration") {
  const LinearStarCategory L = linearize(partial_isometry(Flavor::marked));
  CHECK_FALSE(L.is_marked_generated());
  CHECK(oracle::error_kind([&] { enumerate_linear_functors(L, L); }) == ErrorKind::not_marked_generated);
}

TEST_CASE("linear weak equivalences: both routes agree") {
  const auto corpus = default_corpus();
  std::size_t seen = 0;
  for (const auto& A : corpus.linear) {
    if (!A.category.is_marked_generated()) continue;
    for (const auto& B : corpus.linear) {
      for (const auto& F : enumerate_linear_functors(A.category, B.category)) {
        CAPTURE(A.name);
        CAPTURE(B.name);
        if (!B.category.is_marked_generated()) {
          CHECK(oracle::error_kind([&] { linear_weak_equivalence_by_search(A.category, B.category, F); }) ==
                ErrorKind::not_marked_generated);
          continue;
        }
        CHECK(bool(is_linear_weak_equivalence(A.category, B.category, F)) ==
              bool(linear_weak_equivalence_by_search(A.category, B.category, F)));
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
  CHECK(is_linear_weak_equivalence(linear_point(), linear_point(), identity_functor(linear_point())));
}
