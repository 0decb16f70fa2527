#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/equivariant.hpp"
#include "mstar/group.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

// Homomorphisms G → Aut⁺(b), counted over all maps of elements.
std::size_t count_homomorphisms(const FinGroup& G, const StarCategory& A, ObjId b) {
  std::vector<MorId> loops;
  for (MorId f : A.base().hom(b, b)) {
    if (A.is_marked(f)) loops.push_back(f);
  }
  std::size_t n = 0;
  std::vector<MorId> rho(G.order());
  std::function<void(std::size_t)> go = [&](std::size_t g) {
    if (g == G.order()) {
      for (GroupElem x = 0; x < G.order(); ++x) {
        for (GroupElem y = 0; y < G.order(); ++y) {
          if (rho[G.mul(x, y)] != A.base().compose(rho[x], rho[y])) return;
        }
      }
      ++n;
      return;
    }
    for (MorId f : loops) {
      rho[g] = f;
      go(g + 1);
    }
  };
  go(0);
  return n;
}

Functor swap_interval() { return {{1, 0}, {3, 2, 1, 0}}; }

}  // namespace

TEST_CASE("actions are validated") {
  const StarCategory disc2 = star_coproduct(point(), point()).category;
  const Functor swap{{1, 0}, {1, 0}};
  const FinGroup z3 = cyclic_group(3);
  GAction bad{z3, disc2, {identity_functor(disc2.base()), swap, swap}};
  CHECK(oracle::error_kind([&] { validate_action(bad); }) == ErrorKind::invalid_action);
  GAction good{cyclic_group(2), disc2, {identity_functor(disc2.base()), swap}};
  CHECK_NOTHROW(validate_action(good));
  CHECK(oracle::error_kind([] {
          FinGroup::from_table({{0, 1}, {1, 1}});
        }) == ErrorKind::invalid_group);
}

TEST_CASE("the free transitive groupoid of Z/2 is the interval with the swap") {
  const GAction t = build_gtilde(cyclic_group(2));
  CHECK(t.base.num_objects() == 2);
  CHECK(t.base.num_morphisms() == 4);
  CHECK(find_star_isomorphism(t.base, star_groupoid(indiscrete_category(2))).has_value());
  CHECK(t.act[1].on_objects == std::vector<ObjId>{1, 0});
  CHECK(t.act[0] == identity_functor(t.base.base()));
  const GAction t3 = build_gtilde(cyclic_group(3));
  CHECK(t3.base.num_morphisms() == 9);
  // Free action: no object fixed by a nontrivial element.
  for (GroupElem g = 1; g < 3; ++g) {
    for (ObjId x = 0; x < 3; ++x) CHECK(t3.act[g].on_objects[x] != x);
  }
}

TEST_CASE("fixed points of trivial actions count homomorphisms") {
  const FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  const StarCategory bz2 = delooping(z2);
  const FixedPointCategory P = fixed_points(trivial_action(z2, bz2));
  CHECK(P.category.num_objects() == 2);
  for (const auto& [name, A] : default_corpus().categories) {
    if (A.num_morphisms() > 8) continue;
    CAPTURE(name);
    for (const FinGroup& G : {z2, z3}) {
      std::size_t expected = 0;
      for (ObjId b = 0; b < A.num_objects(); ++b) expected += count_homomorphisms(G, A, b);
      CHECK(fixed_points(trivial_action(G, A)).category.num_objects() == expected);
    }
  }
}

TEST_CASE("fixed points of the corpus actions") {
  const auto corpus = default_corpus();
  for (const auto& [name, a] : corpus.actions) {
    CAPTURE(name);
    const FixedPointReport r = verify_fixed_points(a);
    CHECK(r.ok());
    CHECK(r.fixed_objects == fixed_points(a).category.num_objects());
  }
  for (const auto& [name, a] : corpus.linear_actions) {
    CAPTURE(name);
    CHECK(verify_fixed_points(a).ok());
  }
}

TEST_CASE("resolution of a discrete category") {
  const StarCategory disc2 = star_coproduct(point(), point()).category;
  const GAction a = trivial_action(cyclic_group(2), disc2);
  const Resolution R = resolution(a);
  CHECK(R.funu.category.num_objects() == 2);
  CHECK(R.funu.category.num_morphisms() == 2);
  CHECK(is_star_isomorphism(disc2, R.funu.category, R.unit));
  CHECK(verify_resolution_unit(a, R));
}

TEST_CASE("resolutions are injectively fibrant") {
  const FinGroup z2 = cyclic_group(2);
  const auto left = equivariant_trivial_cofibrations(z2, Flavor::marked);
  for (const auto& [name, a] : default_corpus().actions) {
    if (a.group.order() != 2 || a.base.flavor() != Flavor::marked || a.base.num_morphisms() > 4) continue;
    CAPTURE(name);
    const Resolution R = resolution(a);
    CHECK(verify_resolution_unit(a, R));
    CHECK(is_injectively_fibrant(R.action, left));
  }
}

TEST_CASE("equivariant exponential law with a point") {
  for (const auto& [name, a] : default_corpus().actions) {
    CAPTURE(name);
    const ExponentialReport r = verify_equivariant_exponential_law(point(a.base.flavor()), a);
    CHECK(r.bijective);
    CHECK(r.left == r.right);
  }
}

TEST_CASE("group algebras") {
  std::vector<FinGroup> groups{cyclic_group(2), cyclic_group(3), klein_group()};
  for (const FinGroup& G : groups) {
    const LinearSharpResult S = sharp(linear_point(), delooping(G).base());
    const LinearStarCategory& L = S.category;
    REQUIRE(L.num_objects() == 1);
    REQUIRE(L.dim(0, 0) == G.order());
    const FinCategory BG = delooping(G).base();
    auto e = [&](GroupElem g) { return unit_vec(G.order(), BG.hom_position(g)); };
    for (GroupElem g = 0; g < G.order(); ++g) {
      CHECK(L.star(0, 0, e(g)) == e(G.inv(g)));
      for (GroupElem h = 0; h < G.order(); ++h) CHECK(L.compose(0, 0, 0, e(g), e(h)) == e(G.mul(g, h)));
    }
    CHECK(L.identity(0) == e(G.unit()));
  }
  // Klein four from its XOR table.
  const FinGroup V = klein_group();
  for (GroupElem g = 0; g < 4; ++g) {
    for (GroupElem h = 0; h < 4; ++h) CHECK(V.mul(g, h) == (g ^ h));
  }
}

TEST_CASE("orbits") {
  const FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  for (const auto& [name, A] : default_corpus().categories) {
    if (!is_groupoid(A.base()) || A.num_morphisms() > 6) continue;
    CAPTURE(name);
    for (const FinGroup& G : {z2, z3}) {
      const ColimitCertificate c = verify_orbit_colimit(G, A.base());
      CHECK(c.bijective);
      CHECK(c.left == oracle::count_functors(delooping(G).base(), A.base()));
    }
  }
  const StarCategory bz2 = delooping(z2);
  const SharpResult O = orbit(point(), z2);
  CHECK(find_star_isomorphism(O.category, bz2).has_value());
  const SharpResult trivial = induction_value(bz2, z2, {0});
  CHECK(find_star_isomorphism(trivial.category, bz2).has_value());
  CHECK(oracle::error_kind([&] { induction_value(bz2, z3, {0, 1}); }) == ErrorKind::invalid_group);
}

TEST_CASE("orbit cofibrancy") {
  const StarCategory pt = point(), bz2 = delooping(cyclic_group(2));
  const std::vector<TrivialFibration> fibs{
      {"interval-to-pt", star_groupoid(indiscrete_category(2)), pt, Functor{{0, 0}, {0, 0, 0, 0}}},
      {"id-bz2", bz2, bz2, identity_functor(bz2.base())}};
  CHECK(verify_orbit_cofibrancy(pt, cyclic_group(2), fibs));
  CHECK(verify_orbit_cofibrancy(bz2, cyclic_group(2), fibs));
}

TEST_CASE("the interval swap is an involution") {
  const StarCategory I = star_groupoid(indiscrete_category(2));
  const Functor s = swap_interval();
  REQUIRE(is_star_functor(I, I, s));
  CHECK(compose(s, s) == identity_functor(I.base()));
}
