#include <doctest.h>

#include <algorithm>
#include <array>

#include "mstar/corpus.hpp"
#include "mstar/limits.hpp"
#include "mstar/search.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

// One object with identity e and two more endomorphisms; `table[g-1][f-1]` is g∘f.
std::optional<ErrorKind> build_monoid(const std::array<std::array<MorId, 2>, 2>& table) {
  return oracle::error_kind([&] {
    CategoryBuilder b;
    ObjId x = b.add_object("x");
    MorId e = b.add_identity(x, "e");
    b.add_morphism(x, x, "a");
    b.add_morphism(x, x, "b");
    b.fill_compose([&](MorId g, MorId f) -> MorId {
      if (g == e) return f;
      if (f == e) return g;
      return table[g - 1][f - 1];
    });
    b.build();
  });
}

bool associative(const std::array<std::array<MorId, 2>, 2>& table) {
  auto mul = [&](MorId g, MorId f) -> MorId { return g == 0 ? f : (f == 0 ? g : table[g - 1][f - 1]); };
  for (MorId h = 0; h < 3; ++h) {
    for (MorId g = 0; g < 3; ++g) {
      for (MorId f = 0; f < 3; ++f) {
        if (mul(h, mul(g, f)) != mul(mul(h, g), f)) return false;
      }
    }
  }
  return true;
}

std::vector<FinCategory> small_bases() {
  std::vector<FinCategory> out{empty_category(), terminal_category(), discrete_category(2), indiscrete_category(2),
                               walking_arrow()};
  for (const auto& c : default_corpus().categories) {
    if (c.category.num_morphisms() <= 6) out.push_back(c.category.base());
  }
  return out;
}

// Brute-force natural isomorphism F ≅ G: every choice of invertible components.
bool naturally_isomorphic(const FinCategory& A, const FinCategory& B, const Functor& F, const Functor& G) {
  NatTransformation t{std::vector<MorId>(A.num_objects())};
  std::function<bool(std::size_t)> go = [&](std::size_t a) {
    if (a == A.num_objects()) {
      for (MorId f = 0; f < A.num_morphisms(); ++f) {
        if (B.compose(G.on_morphisms[f], t.components[A.src(f)]) !=
            B.compose(t.components[A.tgt(f)], F.on_morphisms[f]))
          return false;
      }
      return true;
    }
    for (MorId c : B.hom(F.on_objects[a], G.on_objects[a])) {
      if (!inverse_of(B, c)) continue;
      t.components[a] = c;
      if (go(a + 1)) return true;
    }
    return false;
  };
  return go(0);
}

bool equivalence_by_quasi_inverse(const FinCategory& A, const FinCategory& B, const Functor& F) {
  bool found = false;
  oracle::for_each_raw_functor(B, A, [&](const Functor& G) {
    if (found) return;
    found = naturally_isomorphic(A, A, identity_functor(A), compose(G, F)) &&
            naturally_isomorphic(B, B, identity_functor(B), compose(F, G));
  });
  return found;
}

}  // namespace

TEST_CASE("builder rejects malformed tables") {
  SUBCASE("missing identity") {
    auto k = oracle::error_kind([] {
      CategoryBuilder b;
      ObjId x = b.add_object("x");
      b.add_morphism(x, x, "f");
      b.build();
    });
    CHECK(k == ErrorKind::missing_identity);
  }
  SUBCASE("composite of the wrong type") {
    auto k = oracle::error_kind([] {
      CategoryBuilder b;
      ObjId x = b.add_object("x"), y = b.add_object("y");
      MorId ix = b.add_identity(x), iy = b.add_identity(y);
      MorId f = b.add_morphism(x, y, "f");
      b.fill_compose([&](MorId g, MorId h) { return g == ix || g == iy ? h : g; });
      b.set_compose(iy, f, ix);
      b.build();
    });
    CHECK(k == ErrorKind::dangling_composite);
  }
  SUBCASE("composable pair without a composite") {
    auto k = oracle::error_kind([] {
      CategoryBuilder b;
      ObjId x = b.add_object("x"), y = b.add_object("y");
      MorId ix = b.add_identity(x), iy = b.add_identity(y);
      MorId f = b.add_morphism(x, y, "f");
      MorId g = b.add_morphism(y, x, "g");
      for (MorId i : {ix, iy}) b.set_compose(i, i, i);
      b.set_compose(f, ix, f);
      b.set_compose(iy, f, f);
      b.set_compose(g, iy, g);
      b.set_compose(ix, g, g);
      b.build();
    });
    CHECK(k == ErrorKind::dangling_composite);
  }
  SUBCASE("identity law") {
    auto k = oracle::error_kind([] {
      CategoryBuilder b;
      ObjId x = b.add_object("x");
      MorId e = b.add_identity(x);
      MorId a = b.add_morphism(x, x, "a");
      b.fill_compose([&](MorId, MorId) { return a; });
      (void)e;
      b.build();
    });
    CHECK(k == ErrorKind::missing_identity);
  }
  SUBCASE("undeclared object") {
    auto k = oracle::error_kind([] {
      CategoryBuilder b;
      b.add_object("x");
      b.add_morphism(0, 5, "f");
      b.build();
    });
    CHECK(k == ErrorKind::dangling_composite);
  }
}

TEST_CASE("builder accepts exactly the associative monoid tables") {
  std::size_t accepted = 0;
  for (int code = 0; code < 81; ++code) {
    std::array<std::array<MorId, 2>, 2> table{};
    int c = code;
    for (auto& row : table) {
      for (auto& v : row) {
        v = MorId(c % 3);
        c /= 3;
      }
    }
    const auto k = build_monoid(table);
    const bool assoc = associative(table);
    CHECK(assoc == !k.has_value());
    if (k) CHECK(*k == ErrorKind::non_associative);
    accepted += assoc;
  }
  CHECK(accepted > 0);
  CHECK(accepted < 81);
}

TEST_CASE("functor search agrees with raw enumeration") {
  const auto bases = small_bases();
  for (const auto& A : bases) {
    for (const auto& B : bases) {
      std::vector<Functor> raw;
      oracle::for_each_raw_functor(A, B, [&](const Functor& F) { raw.push_back(F); });
      const auto found = enumerate_functors(A, B);
      CHECK(found.size() == raw.size());
      CHECK(std::is_sorted(found.begin(), found.end()));
      std::sort(raw.begin(), raw.end());
      CHECK(found == raw);
      for (const auto& F : found) CHECK(is_functor(A, B, F));
    }
  }
}

TEST_CASE("equivalences match the quasi-inverse definition") {
  const auto bases = small_bases();
  std::size_t yes = 0, no = 0;
  for (const auto& A : bases) {
    for (const auto& B : bases) {
      if (A.num_objects() > 3 || B.num_objects() > 3) continue;
      for (const auto& F : enumerate_functors(A, B)) {
        const bool lib = bool(is_equivalence(A, B, F));
        CHECK(lib == equivalence_by_quasi_inverse(A, B, F));
        (lib ? yes : no) += 1;
      }
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("small equivalence examples") {
  const FinCategory pt = terminal_category(), I = indiscrete_category(2), two = discrete_category(2);
  CHECK(is_equivalence(pt, I, constant_functor(pt, I, 0)));
  CHECK(is_equivalence(I, pt, constant_functor(I, pt, 0)));
  CHECK_FALSE(is_equivalence(two, pt, constant_functor(two, pt, 0)));
  CHECK_FALSE(is_equivalence(pt, walking_arrow(), constant_functor(pt, walking_arrow(), 0)));
  CHECK_FALSE(is_isomorphism(pt, I, constant_functor(pt, I, 0)));
}

TEST_CASE("the swap of the interval is naturally isomorphic to the identity") {
  const FinCategory I = indiscrete_category(2);
  const Functor id = identity_functor(I);
  Functor swap;
  for (const auto& F : enumerate_functors(I, I)) {
    if (F.on_objects == std::vector<ObjId>{1, 0}) swap = F;
  }
  REQUIRE(swap.on_objects.size() == 2);
  const NatTransformation t{{I.hom(0, 1)[0], I.hom(1, 0)[0]}};
  CHECK(check_natural(I, I, id, swap, t));
  const NatTransformation bad{{I.identity(0), I.identity(1)}};
  CHECK_FALSE(check_natural(I, I, id, swap, bad));
}

TEST_CASE("groupoid detection and inverses") {
  CHECK(is_groupoid(indiscrete_category(3)));
  CHECK(is_groupoid(discrete_category(2)));
  CHECK_FALSE(is_groupoid(walking_arrow()));
  CHECK(oracle::error_kind([] { groupoid_inverses(walking_arrow()); }) == ErrorKind::not_a_groupoid);
  const FinCategory I = indiscrete_category(3);
  const auto inv = groupoid_inverses(I);
  for (MorId f = 0; f < I.num_morphisms(); ++f) CHECK(I.compose(inv[f], f) == I.identity(I.src(f)));
}

TEST_CASE("limits") {
  SUBCASE("equalizer of the identity and the swap is empty") {
    const FinCategory I = indiscrete_category(2);
    Functor swap;
    for (const auto& F : enumerate_functors(I, I)) {
      if (F.on_objects == std::vector<ObjId>{1, 0}) swap = F;
    }
    const auto e = equalizer(I, I, identity_functor(I), swap);
    CHECK(e.category.num_objects() == 0);
    CHECK(e.category.num_morphisms() == 0);
  }
  SUBCASE("products count pairs") {
    const auto bases = small_bases();
    for (const auto& A : bases) {
      for (const auto& B : bases) {
        const auto p = product(A, B);
        CHECK(p.category.num_objects() == A.num_objects() * B.num_objects());
        CHECK(p.category.num_morphisms() == A.num_morphisms() * B.num_morphisms());
        // Functors out of a point into A×B are pairs of functors.
        CHECK(oracle::count_functors(terminal_category(), p.category) ==
              oracle::count_functors(terminal_category(), A) * oracle::count_functors(terminal_category(), B));
      }
    }
  }
  SUBCASE("pullback over a point is the product") {
    const FinCategory A = walking_arrow(), B = indiscrete_category(2), pt = terminal_category();
    const auto pb = pullback(A, B, pt, constant_functor(A, pt, 0), constant_functor(B, pt, 0));
    const auto p = product(A, B);
    CHECK(pb.category.num_objects() == p.category.num_objects());
    CHECK(pb.category.num_morphisms() == p.category.num_morphisms());
  }
}

TEST_CASE("coproducts") {
  const FinCategory A = walking_arrow(), B = indiscrete_category(2);
  const auto c = coproduct(A, B);
  CHECK(c.category.num_objects() == 4);
  CHECK(c.category.num_morphisms() == A.num_morphisms() + B.num_morphisms());
  CHECK(is_functor(A, c.category, c.left));
  CHECK(is_functor(B, c.category, c.right));
  // Functors out of a coproduct are pairs of functors.
  const FinCategory T = indiscrete_category(2);
  CHECK(oracle::count_functors(c.category, T) == oracle::count_functors(A, T) * oracle::count_functors(B, T));
}

TEST_CASE("search budget is enforced") {
  const FinCategory big = discrete_category(12);
  auto k = oracle::error_kind([&] { count_functors(big, big, {}, 1000); });
  CHECK(k == ErrorKind::bound_exceeded);
}
