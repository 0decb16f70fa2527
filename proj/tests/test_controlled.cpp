#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mstar/controlled.hpp"
#include "mstar/corpus.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

std::vector<ControlledObject> objects_over(std::uint32_t points, const std::vector<std::uint32_t>& sizes) {
  std::vector<ControlledObject> out;
  for (std::uint32_t m : sizes) {
    std::vector<std::uint32_t> p(m, 0);
    while (true) {
      out.push_back({p});
      std::size_t k = 0;
      while (k < m && ++p[k] == points) p[k++] = 0;
      if (k == m) break;
    }
  }
  return out;
}

// Pairs (i', i) whose points are related by the maximal entourage.
std::size_t controlled_pairs(const BornCoarseSpace& X, const ControlledObject& M, const ControlledObject& N) {
  std::size_t n = 0;
  for (std::uint32_t j : N.over) {
    for (std::uint32_t i : M.over) n += X.coarse.has(j, i);
  }
  return n;
}

std::size_t diagonal_bijections(const ControlledObject& M, const ControlledObject& N) {
  if (M.carrier() != N.carrier()) return 0;
  std::vector<std::uint32_t> s(M.carrier());
  std::iota(s.begin(), s.end(), 0);
  std::size_t n = 0;
  do {
    bool ok = true;
    for (std::uint32_t i = 0; i < M.carrier(); ++i) ok = ok && N.over[s[i]] == M.over[i];
    n += ok;
  } while (std::next_permutation(s.begin(), s.end()));
  return n;
}

Relation random_relation(std::mt19937& rng, std::uint32_t rows, std::uint32_t cols) {
  Relation r{rows, cols, 0};
  for (std::uint32_t a = 0; a < rows; ++a) {
    for (std::uint32_t b = 0; b < cols; ++b) {
      if (rng() & 1u) r.set(a, b);
    }
  }
  return r;
}

// Equivariant objects (p, ρ) counted by brute force over maps and permutations.
std::size_t equivariant_objects_oracle(const BornCoarseSpace& X, const std::vector<std::uint32_t>& sizes) {
  const FinGroup& G = *X.group;
  std::size_t total = 0;
  for (const auto& M : objects_over(std::uint32_t(X.size()), sizes)) {
    const std::uint32_t m = M.carrier();
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> s(m);
    std::iota(s.begin(), s.end(), 0);
    do perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    std::vector<std::size_t> rho(G.order(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t g) {
      if (g == G.order()) {
        for (GroupElem x = 0; x < G.order(); ++x) {
          for (std::uint32_t i = 0; i < m; ++i) {
            if (M.over[perms[rho[x]][i]] != X.action[x][M.over[i]]) return;
          }
          for (GroupElem y = 0; y < G.order(); ++y) {
            for (std::uint32_t i = 0; i < m; ++i) {
              if (perms[rho[G.mul(x, y)]][i] != perms[rho[x]][perms[rho[y]][i]]) return;
            }
          }
        }
        ++total;
        return;
      }
      for (std::size_t k = 0; k < perms.size(); ++k) {
        rho[g] = k;
        go(g + 1);
      }
    };
    go(0);
  }
  return total;
}

}  // namespace

TEST_CASE("space validation") {
  CHECK_NOTHROW(validate_space({"x", "y"}, {{0, 1}}, std::nullopt));
  CHECK(oracle::error_kind([] { validate_space({"x", "y"}, {{0, 1}}, std::vector<std::vector<std::uint32_t>>{{0}}); }) ==
        ErrorKind::incompatible_structures);
  CHECK(oracle::error_kind([] {
          validate_space({"x", "y", "z"}, {{0, 1}}, std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});
        }) == ErrorKind::incompatible_structures);
  CHECK(oracle::error_kind([] { validate_space({"x"}, {{0, 3}}, std::nullopt); }) == ErrorKind::invalid_argument);
  // Swapping y and z moves the entourage {x, y} off itself.
  CHECK(oracle::error_kind([] {
          validate_space({"x", "y", "z"}, {{0, 1}}, std::nullopt, cyclic_group(2), {{0, 1, 2}, {0, 2, 1}});
        }) == ErrorKind::not_cofinal);
  CHECK(oracle::error_kind([] {
          validate_space({"x", "y"}, {}, std::nullopt, cyclic_group(2), {{0, 1}, {0, 0}});
        }) == ErrorKind::invalid_action);
  const BornCoarseSpace X = validate_space({"x", "y", "z"}, {{0, 1}, {1, 2}}, std::nullopt);
  CHECK(X.coarse.has(0, 2));
  CHECK(X.coarse.has(2, 0));
}

TEST_CASE("relation algebra") {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Relation U = random_relation(rng, 3, 2), V = random_relation(rng, 2, 3), W = random_relation(rng, 3, 3);
    const Relation VU = compose(V, U);
    for (std::uint32_t z = 0; z < 2; ++z) {
      for (std::uint32_t x = 0; x < 2; ++x) {
        bool expected = false;
        for (std::uint32_t y = 0; y < 3; ++y) expected = expected || (V.has(z, y) && U.has(y, x));
        CHECK(VU.has(z, x) == expected);
      }
    }
    CHECK(transpose(transpose(U)) == U);
    CHECK(transpose(compose(V, U)) == compose(transpose(U), transpose(V)));
    CHECK(compose(W, compose(U, V)) == compose(compose(W, U), V));
    CHECK(compose(identity_relation(3), U) == U);
  }
}

TEST_CASE("control is the support condition") {
  const BornCoarseSpace X = validate_space({"x", "y"}, {}, std::nullopt);
  const Relation diag = identity_relation(2);
  std::mt19937 rng(5);
  const auto objs = objects_over(2, {1, 2});
  for (const auto& M : objs) {
    for (const auto& N : objs) {
      for (int k = 0; k < 8; ++k) {
        const Relation A = random_relation(rng, N.carrier(), M.carrier());
        bool diagonal = true;
        for (std::uint32_t j = 0; j < N.carrier(); ++j) {
          for (std::uint32_t i = 0; i < M.carrier(); ++i) diagonal = diagonal && (!A.has(j, i) || N.over[j] == M.over[i]);
        }
        CHECK(is_controlled(X, M, N, A, diag) == diagonal);
        CHECK(is_controlled(X, M, N, A, X.coarse) == diagonal);
        const BornCoarseSpace Y = validate_space({"x", "y"}, {{0, 1}}, std::nullopt);
        CHECK(is_controlled(Y, M, N, A, Y.coarse));
      }
    }
  }
}

TEST_CASE("measures") {
  const BornCoarseSpace X = validate_space({"x", "y"}, {}, std::nullopt);
  for (const auto& M : objects_over(2, {0, 1, 2, 3})) {
    CHECK(check_measure_axioms(X, M));
    for (std::uint32_t Y = 0; Y < 4; ++Y) {
      const Relation phi = measure(M, Y);
      CHECK(compose(phi, phi) == phi);
      CHECK(transpose(phi) == phi);
      std::uint32_t expected = 0;
      for (std::uint32_t i = 0; i < M.carrier(); ++i) {
        if ((Y >> M.over[i]) & 1u) expected |= 1u << i;
      }
      CHECK(image_of(phi) == expected);
    }
  }
}

TEST_CASE("V+ against direct counts") {
  const std::vector<std::uint32_t> sizes{0, 1, 2};
  for (const auto& [name, X] : default_corpus().spaces) {
    CAPTURE(name);
    const VPlus V = build_vplus(X, sizes);
    const auto objs = objects_over(std::uint32_t(X.size()), sizes);
    auto sorted = V.objects;
    std::sort(sorted.begin(), sorted.end());
    auto expected = objs;
    std::sort(expected.begin(), expected.end());
    CHECK(sorted == expected);
    CHECK(std::is_sorted(V.objects.begin(), V.objects.end(), [](const ControlledObject& a, const ControlledObject& b) {
      return std::pair(a.carrier(), a.over) < std::pair(b.carrier(), b.over);
    }));
    std::size_t morphisms = 0, marked = 0;
    for (const auto& M : objs) {
      for (const auto& N : objs) {
        morphisms += std::size_t(1) << controlled_pairs(X, M, N);
        marked += diagonal_bijections(M, N);
      }
    }
    CHECK(V.category.num_morphisms() == morphisms);
    CHECK(V.category.marked_list().size() == marked);
    if (X.group) {
      CHECK(equivariant_vplus(X, sizes).category.num_objects() == equivariant_objects_oracle(X, sizes));
    }
  }
}

TEST_CASE("V+ of Z/2") {
  const Corpus corpus = default_corpus();
  const BornCoarseSpace* X = nullptr;
  for (const auto& s : corpus.spaces) {
    if (s.name == "z2") X = &s.space;
  }
  REQUIRE(X != nullptr);
  const VPlus V = build_vplus(*X, {0, 1, 2});
  CHECK(V.category.num_objects() == 7);
  const EquivariantVPlus E = equivariant_vplus(*X, {0, 1, 2});
  CHECK(E.category.num_objects() == 3);
  const ControlledReport r = verify_controlled(*X, {0, 1, 2});
  CHECK(r.ok());
  CHECK(r.isomorphic);
  CHECK(r.equivariant_objects == 3);
}

TEST_CASE("every corpus space verifies") {
  for (const auto& [name, X] : default_corpus().spaces) {
    CAPTURE(name);
    CHECK(verify_controlled(X, {0, 1, 2}).ok());
  }
}

TEST_CASE("pushforward and action") {
  const BornCoarseSpace X = validate_space({"e", "g"}, {}, std::nullopt, cyclic_group(2), {{0, 1}, {1, 0}});
  const ControlledObject M{{0, 0, 1}};
  CHECK(pushforward({1, 0}, M) == ControlledObject{{1, 1, 0}});
  const VPlus V = build_vplus(X, {1});
  const GAction a = vplus_action(X, V);
  CHECK_NOTHROW(validate_action(a));
  CHECK(oracle::error_kind([] {
          const BornCoarseSpace Y = validate_space({"x"}, {}, std::nullopt);
          vplus_action(Y, build_vplus(Y, {1}));
        }) == ErrorKind::invalid_argument);
}
