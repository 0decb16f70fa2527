#include <doctest.h>

#include <random>

#include "mstar/error.hpp"
#include "mstar/linalg.hpp"
#include "mstar/scalar.hpp"

using namespace mstar;

namespace {

Gaussian random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gaussian field laws on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Gaussian a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).im() == 0);
    CHECK((a * a.conj()).re() == a.norm());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("gaussian text form round-trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Gaussian a = random_gaussian(rng);
    CHECK(Gaussian::parse(a.to_string()) == a);
  }
  CHECK(Gaussian::parse("i") == Gaussian::i());
  CHECK(Gaussian::parse("-3/4*i") == Gaussian(mpq_class(0), mpq_class(-3, 4)));
  CHECK(Gaussian::parse("2-i") == Gaussian(mpq_class(2), mpq_class(-1)));
  CHECK(Gaussian::parse("1/2+1/3*i") == Gaussian(mpq_class(1, 2), mpq_class(1, 3)));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK_THROWS_AS(Gaussian::parse("x"), Error);
  CHECK_THROWS_AS(Gaussian::parse("1/0"), Error);
}

TEST_CASE("nullspace vectors are in the kernel and rank plus nullity is the width") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
    std::vector<Vec> columns(cols, zero_vec(rows));
    for (auto& col : columns) {
      for (auto& x : col) x = Gaussian(mpq_class(small(rng)), mpq_class(trial % 3 == 0 ? small(rng) : 0));
    }
    auto kernel = nullspace(columns, rows);
    CHECK(rank(columns) + kernel.size() == cols);
    for (const Vec& v : kernel) {
      Vec image = zero_vec(rows);
      for (std::size_t k = 0; k < cols; ++k) axpy(image, v[k], columns[k]);
      CHECK(is_zero(image));
    }
    auto basis = independent_subset(columns);
    CHECK(basis.size() == rank(columns));
    // Every column lies in the span of the chosen subset.
    std::vector<Vec> chosen;
    for (std::size_t k : basis) chosen.push_back(columns[k]);
    for (const Vec& col : columns) {
      auto coeffs = solve_in_span(chosen, col);
      REQUIRE(coeffs.has_value());
      Vec back = zero_vec(rows);
      for (std::size_t k = 0; k < chosen.size(); ++k) axpy(back, (*coeffs)[k], chosen[k]);
      CHECK(back == col);
    }
  }
}

TEST_CASE("solve_in_span rejects vectors outside the span") {
  std::vector<Vec> vs{unit_vec(3, 0), unit_vec(3, 1)};
  CHECK_FALSE(solve_in_span(vs, unit_vec(3, 2)).has_value());
  Vec t = scale(Gaussian::i(), unit_vec(3, 1));
  auto c = solve_in_span(vs, t);
  REQUIRE(c.has_value());
  CHECK((*c)[1] == Gaussian::i());
}
