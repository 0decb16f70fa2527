#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/group.hpp"
#include "mstar/model.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

// Marked arrows out of F(c) lift to marked arrows out of c.
bool good_oracle(const StarCategory& C, const StarCategory& D, const Functor& F) {
  for (ObjId c = 0; c < C.num_objects(); ++c) {
    for (MorId u = 0; u < D.num_morphisms(); ++u) {
      if (D.base().src(u) != F.on_objects[c] || !D.is_marked(u)) continue;
      bool found = false;
      for (MorId v = 0; v < C.num_morphisms(); ++v) {
        found = found || (C.base().src(v) == c && C.is_marked(v) && F.on_morphisms[v] == u);
      }
      if (!found) return false;
    }
  }
  return true;
}

bool trivial_fibration_oracle(const StarCategory& C, const StarCategory& D, const Functor& F) {
  const FinCategory &c = C.base(), &d = D.base();
  for (ObjId y = 0; y < d.num_objects(); ++y) {
    bool hit = false;
    for (ObjId x : F.on_objects) hit = hit || x == y;
    if (!hit) return false;
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      for (MorId u = 0; u < d.num_morphisms(); ++u) {
        if (d.src(u) != F.on_objects[x] || d.tgt(u) != F.on_objects[y]) continue;
        std::size_t pre = 0, marked_pre = 0;
        for (MorId v = 0; v < c.num_morphisms(); ++v) {
          if (c.src(v) != x || c.tgt(v) != y || F.on_morphisms[v] != u) continue;
          ++pre;
          marked_pre += C.is_marked(v);
        }
        if (pre != 1) return false;
        if (D.is_marked(u) && marked_pre != 1) return false;
      }
    }
  }
  return true;
}

Functor at(const StarCategory& A, ObjId b) { return constant_functor(A.base(), A.base(), b); }

}  // namespace

TEST_CASE("cylinder of a point into the unitary classifier") {
  const StarCategory pt = point(Flavor::unmarked), one = classifier(ClassifierKind::unitary);
  const Functor a{{0}, {0}};
  const Factorization Z = cylinder_factorize(pt, one, a);
  CHECK(Z.middle.num_objects() == 3);
  CHECK(Z.certified);
  CHECK(is_cofibration(Z.first));
  CHECK(is_trivial_fibration(Z.middle, one, Z.second));
  CHECK(compose(Z.second, Z.first) == a);
}

TEST_CASE("path object of a point into BZ/2") {
  const StarCategory pt = point(), bz2 = delooping(cyclic_group(2));
  const Functor a{{0}, {0}};
  const Factorization P = path_factorize(pt, bz2, a);
  CHECK(P.middle.num_objects() == 2);
  CHECK(P.certified);
  CHECK(is_good(P.middle, bz2, P.second));
  CHECK(is_weak_equivalence(pt, P.middle, P.first));
  CHECK(compose(P.second, P.first) == a);
}

TEST_CASE("a marked arrow that does not lift") {
  const StarCategory pt = point(), one_plus = classifier(ClassifierKind::marked_unitary);
  const Verdict v = is_good(pt, one_plus, Functor{{0}, {0}});
  CHECK_FALSE(v.ok);
  CHECK(v.witness["object"] == pt.base().object_name(0));
  CHECK(v.witness["morphism"] == one_plus.base().morphism_name(2));
  // mi(𝟙) has nothing marked to lift.
  CHECK(is_good(pt, mi(classifier(ClassifierKind::unitary)), Functor{{0}, {0}}));
}

TEST_CASE("factorizations over the corpus") {
  for (const auto& m : default_corpus().morphisms) {
    CAPTURE(m.name);
    const Factorization Z = cylinder_factorize(m.source, m.target, m.map);
    CHECK(Z.certified);
    CHECK(is_cofibration(Z.first));
    CHECK(trivial_fibration_oracle(Z.middle, m.target, Z.second));
    CHECK(compose(Z.second, Z.first) == m.map);
    const Factorization P = path_factorize(m.source, m.target, m.map);
    CHECK(P.certified);
    CHECK(good_oracle(P.middle, m.target, P.second));
    CHECK(compose(P.second, P.first) == m.map);
    CHECK(is_weak_equivalence(m.source, P.middle, P.first));
  }
}

TEST_CASE("good maps and trivial fibrations against the definitions") {
  for (const auto& m : default_corpus().morphisms) {
    CAPTURE(m.name);
    CHECK(bool(is_good(m.source, m.target, m.map)) == good_oracle(m.source, m.target, m.map));
    CHECK(bool(is_trivial_fibration(m.source, m.target, m.map)) ==
          trivial_fibration_oracle(m.source, m.target, m.map));
  }
}

TEST_CASE("good maps have the lifting property against the generators") {
  std::size_t tried = 0;
  for (const auto& m : default_corpus().morphisms) {
    if (m.source.num_morphisms() > 6 || m.target.num_morphisms() > 6) continue;
    CAPTURE(m.name);
    const auto left = generating_trivial_cofibrations(m.source.flavor());
    CHECK(bool(has_right_lifting(m.source, m.target, m.map, left)) == good_oracle(m.source, m.target, m.map));
    ++tried;
  }
  CHECK(tried >= 20);
}

TEST_CASE("lifting problems") {
  const StarCategory pt = point(), one_plus = classifier(ClassifierKind::marked_unitary);
  const StarCategory bz2 = delooping(cyclic_group(2));
  // pt → 𝟙⁺ against the good map bz2 → pt.
  LiftingProblem p{&pt, &one_plus, &bz2, &pt, Functor{{0}, {0}}, Functor{{0}, {0, 0}}, Functor{{0}, {0}},
                   Functor{{0, 0}, {0, 0, 0, 0}}};
  const auto lift = solve_lifting(p);
  REQUIRE(lift.has_value());
  CHECK(is_star_functor(one_plus, bz2, *lift));
  CHECK(compose(*lift, p.i) == p.top);
  CHECK(compose(p.f, *lift) == p.bottom);
  // A square that does not commute is rejected.
  const StarCategory two = star_coproduct(pt, pt).category;
  LiftingProblem bad{&pt, &one_plus, &two, &two, Functor{{0}, {0}}, identity_functor(two.base()),
                     Functor{{0}, {0}}, Functor{{1, 1}, {1, 1, 1, 1}}};
  CHECK(oracle::error_kind([&] { solve_lifting(bad); }) == ErrorKind::invalid_argument);
}

TEST_CASE("cylinder universal property") {
  const StarCategory pt = point(), bz2 = delooping(cyclic_group(2));
  const Functor a{{0}, {0}};
  const Factorization Z = cylinder_factorize(pt, bz2, a);
  for (const StarCategory& D : {bz2, classifier(ClassifierKind::marked_unitary), partial_isometry(Flavor::marked)}) {
    CHECK(verify_cylinder_universal_property(pt, bz2, a, Z, D));
  }
}

TEST_CASE("model axioms on small examples") {
  const auto corpus = default_corpus();
  std::size_t pairs = 0;
  for (const auto& f : corpus.morphisms) {
    for (const auto& g : corpus.morphisms) {
      if (!(f.target == g.source) || f.target.num_morphisms() > 4) continue;
      CHECK(two_out_of_three(f.source, f.target, g.target, f.map, g.map));
      ++pairs;
    }
    if (f.source.num_objects() > 0) {
      const RetractDiagram d = coproduct_retract(f.source, f.target, f.map);
      CHECK(retract_closure(d));
    }
  }
  CHECK(pairs > 0);
  for (const auto& c : corpus.categories) CHECK(fibrant_and_cofibrant(c.category));
}

TEST_CASE("star products") {
  const StarCategory A = delooping(cyclic_group(2)), B = classifier(ClassifierKind::marked_unitary);
  const StarProduct P = star_product(A, B);
  CHECK(P.category.num_objects() == 2);
  CHECK(P.category.num_morphisms() == 8);
  CHECK(is_star_functor(P.category, A, P.left));
  CHECK(is_star_functor(P.category, B, P.right));
  const StarCategory T = partial_isometry(Flavor::marked);
  CHECK(oracle::count_star_functors(T, P.category) ==
        oracle::count_star_functors(T, A) * oracle::count_star_functors(T, B));
  const RetractDiagram d = product_retract(A, A, at(A, 0), B);
  CHECK(retract_closure(d));
}
