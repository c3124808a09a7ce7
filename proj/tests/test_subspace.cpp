#include <doctest.h>

#include "flagpath/subspace.hpp"
#include "support/oracles.hpp"

using namespace flagpath;

namespace {

std::vector<int> e(int i, int n) {
  std::vector<int> v(std::size_t(n), 0);
  v[std::size_t(i - 1)] = 1;
  return v;
}

}  // namespace

TEST_CASE("dim_sum") {
  PrimeField f(2);
  Subspace u = Subspace::span(f, 6, {e(1, 6)});
  CHECK(dim_sum(u, u) == u.dim());

  Subspace v = Subspace::span(f, 6, {e(5, 6)});
  CHECK(dim_sum(u, v) == 2);

  PrimeField f5(5);
  Subspace a = Subspace::span(f5, 5, {e(1, 5), e(2, 5), e(3, 5)});
  Subspace b = Subspace::span(f5, 5, {e(2, 5), e(3, 5), e(4, 5)});
  CHECK(dim_sum(a, b) == 4);
  CHECK(dim_intersection(a, b) == 2);
}

TEST_CASE("dim_intersection") {
  PrimeField f(2);
  Subspace u = Subspace::span(f, 6, {e(1, 6), e(2, 6), e(3, 6)});
  Subspace v = Subspace::span(f, 6, {e(4, 6), e(5, 6), e(6, 6)});
  CHECK(dim_intersection(u, u) == 3);
  CHECK(dim_intersection(u, v) == 0);
}

TEST_CASE("injection distance") {
  PrimeField f(2);
  Subspace e5 = Subspace::span(f, 6, {e(5, 6)});
  Subspace e6 = Subspace::span(f, 6, {e(6, 6)});
  CHECK(injection_distance(e5, e6) == 1);
  CHECK(injection_distance(e5, e5) == 0);

  Subspace u = Subspace::span(f, 6, {e(1, 6), e(2, 6), e(3, 6)});
  Subspace v = Subspace::span(f, 6, {e(4, 6), e(5, 6), e(6, 6)});
  CHECK(injection_distance(u, v) == 3);
}

TEST_CASE("subspace distance") {
  PrimeField f(2);
  Subspace u = Subspace::span(f, 3, {e(1, 3)});
  Subspace v = Subspace::span(f, 3, {e(2, 3)});
  CHECK(subspace_distance(u, u) == 0);
  CHECK(subspace_distance(u, v) == 2);

  Subspace a = Subspace::span(f, 6, {e(1, 6), e(2, 6), e(3, 6)});
  Subspace b = Subspace::span(f, 6, {e(4, 6), e(5, 6), e(6, 6)});
  CHECK(subspace_distance(a, b) == 6);
}

TEST_CASE("ambient mismatch is rejected") {
  PrimeField f(2);
  Subspace u = Subspace::span(f, 3, {e(1, 3)});
  Subspace v = Subspace::span(f, 4, {e(1, 4)});
  CHECK_THROWS_AS(dim_sum(u, v), DimensionMismatchError);
  CHECK_THROWS_AS(injection_distance(u, v), DimensionMismatchError);
}

TEST_CASE("containment") {
  PrimeField f(2);
  Subspace plane = Subspace::span(f, 4, {e(1, 4), e(2, 4)});
  Subspace line = Subspace::span(f, 4, {{1, 1, 0, 0}});
  CHECK(plane.contains(line));
  CHECK(!line.contains(plane));
  CHECK(plane.contains(std::vector<std::uint16_t>{1, 1, 0, 0}));
  CHECK(!plane.contains(std::vector<std::uint16_t>{0, 0, 1, 0}));
  Subspace zero(f, 4);
  CHECK(plane.contains(zero));
  CHECK(zero.contains(zero));
}

TEST_CASE("canonical equality ignores the generating set") {
  PrimeField f(3);
  Subspace a = Subspace::span(f, 3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(f, 3, {{2, 2, 0}, {1, 2, 1}});
  CHECK(a == b);
  Subspace c = Subspace::span(f, 3, {{1, 0, 0}, {0, 1, 1}});
  CHECK(a != c);
}

TEST_CASE("metric laws on enumerated Grassmannians over F_2, n <= 5") {
  PrimeField f(2);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      auto spaces = oracles::all_subspaces(f, n, k);
      REQUIRE(spaces.size() == oracles::gaussian_binomial(n, k, 2));
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        for (std::size_t j = i; j < spaces.size(); ++j) {
          std::size_t dij = injection_distance(spaces[i], spaces[j]);
          CHECK(dij == injection_distance(spaces[j], spaces[i]));
          CHECK((dij == 0) == (spaces[i] == spaces[j]));
          CHECK(subspace_distance(spaces[i], spaces[j]) == 2 * dij);
          CHECK(dij <= std::size_t(std::min(k, n - k)));
        }
      }
    }
  }
}
