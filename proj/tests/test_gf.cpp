#include <doctest.h>

#include <random>

#include "flagpath/gf.hpp"

using namespace flagpath;

namespace {

Matrix random_matrix(std::mt19937& rng, PrimeField f, std::size_t rows,
                     std::size_t cols) {
  std::uniform_int_distribution<std::uint32_t> entry(0, f.modulus() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, std::uint16_t(entry(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK(!is_prime(1));
  CHECK(!is_prime(65536));

  CHECK_THROWS_AS(PrimeField(6), DimensionMismatchError);
  CHECK_THROWS_AS(PrimeField(1), DimensionMismatchError);
  CHECK_THROWS_AS(PrimeField(1 << 16), DimensionMismatchError);

  for (std::uint32_t q : {2u, 3u, 5u, 7u, 251u, 65521u}) {
    PrimeField f(q);
    std::uint32_t step = q < 100 ? 1 : q / 97;
    for (std::uint32_t a = 1; a < q; a += step) {
      CHECK(f.mul(std::uint16_t(a), f.inv(std::uint16_t(a))) == 1);
    }
    CHECK(f.add(std::uint16_t(q - 1), 1) == 0);
    CHECK(f.sub(0, 1) == q - 1);
  }
}

TEST_CASE("rref on identity is the identity") {
  PrimeField f(2);
  Matrix id = Matrix::from_rows(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto [m, r] = rref(id);
  CHECK(r == 3);
  CHECK(m == id);
}

TEST_CASE("rref drops duplicate rows") {
  PrimeField f(2);
  Matrix m = Matrix::from_rows(f, 4, {{1, 0, 0, 0}, {1, 0, 0, 0}});
  auto res = rref(m);
  CHECK(res.rank == 1);
  CHECK(res.matrix == Matrix::from_rows(f, 4, {{1, 0, 0, 0}}));
}

TEST_CASE("rref reduces above the pivots") {
  PrimeField f(2);
  Matrix m = Matrix::from_rows(f, 3, {{1, 1, 0}, {0, 1, 0}});
  auto res = rref(m);
  CHECK(res.rank == 2);
  CHECK(res.matrix == Matrix::from_rows(f, 3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("empty matrix has rank 0") {
  PrimeField f(5);
  Matrix m(f, 0, 4);
  CHECK(rref(m).rank == 0);
  CHECK(rank(m) == 0);
}

TEST_CASE("stack_rank examples") {
  PrimeField f(2);
  Matrix id2 = Matrix::from_rows(f, 2, {{1, 0}, {0, 1}});
  CHECK(stack_rank(id2, id2) == 2);

  Matrix e1 = Matrix::from_rows(f, 4, {{1, 0, 0, 0}});
  Matrix e2 = Matrix::from_rows(f, 4, {{0, 1, 0, 0}});
  CHECK(stack_rank(e1, e2) == 2);

  Matrix a = Matrix::from_rows(f, 6, {{1, 0, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 0}});
  Matrix b = Matrix::from_rows(f, 6, {{0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 0, 0, 1}});
  CHECK(stack_rank(a, b) == 6);
}

TEST_CASE("stack_rank rejects mismatched shapes") {
  PrimeField f(2);
  Matrix a(f, 1, 3), b(f, 1, 4);
  CHECK_THROWS_AS(stack_rank(a, b), DimensionMismatchError);
  Matrix c(PrimeField(3), 1, 3);
  CHECK_THROWS_AS(stack_rank(a, c), DimensionMismatchError);
}

TEST_CASE("from_rows validates entries") {
  PrimeField f(3);
  CHECK_THROWS_AS(Matrix::from_rows(f, 2, {{0, 3}}), DimensionMismatchError);
  CHECK_THROWS_AS(Matrix::from_rows(f, 2, {{0, -1}}), DimensionMismatchError);
  CHECK_THROWS_AS(Matrix::from_rows(f, 2, {{0, 1, 2}}), DimensionMismatchError);
}

TEST_CASE("rref is idempotent and rank is bounded") {
  std::mt19937 rng(20240811);
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 65521u}) {
    PrimeField f(q);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 8);
      std::size_t rows = dim(rng), cols = dim(rng);
      Matrix m = random_matrix(rng, f, rows, cols);
      auto res = rref(m);
      CHECK(res.rank <= std::min(rows, cols));
      CHECK(res.matrix.rows() == res.rank);
      auto again = rref(res.matrix);
      CHECK(again.rank == res.rank);
      CHECK(again.matrix == res.matrix);
    }
  }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
  std::mt19937 rng(7);
  PrimeField f(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, f, 5, 6);
    std::size_t before = rank(m);

    Matrix permuted(f, 5, 6);
    std::vector<std::size_t> perm{4, 2, 0, 3, 1};
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 6; ++c) permuted.set(r, c, m.at(perm[r], c));
    }
    CHECK(rank(permuted) == before);

    Matrix scaled = m;
    std::uniform_int_distribution<std::uint32_t> nz(1, 6);
    for (std::size_t r = 0; r < 5; ++r) {
      std::uint16_t s = std::uint16_t(nz(rng));
      for (std::size_t c = 0; c < 6; ++c) scaled.set(r, c, f.mul(s, m.at(r, c)));
    }
    CHECK(rank(scaled) == before);
  }
}

TEST_CASE("stack_rank respects the subspace sum bounds") {
  std::mt19937 rng(99);
  for (std::uint32_t q : {2u, 5u}) {
    PrimeField f(q);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(0, 5);
      Matrix a = random_matrix(rng, f, dim(rng), 6);
      Matrix b = random_matrix(rng, f, dim(rng), 6);
      std::size_t ra = rank(a), rb = rank(b), sr = stack_rank(a, b);
      CHECK(sr >= std::max(ra, rb));
      CHECK(sr <= ra + rb);
    }
  }
}

TEST_CASE("bit-packed GF(2) elimination agrees with the generic path") {
  std::mt19937 rng(123);
  PrimeField f(2);
  for (std::size_t cols : {3u, 17u, 64u, 65u, 130u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 10);
      Matrix m = random_matrix(rng, f, dim(rng), cols);
      auto fast = detail::rref_gf2(m);
      auto slow = detail::rref_generic(m);
      CHECK(fast.rank == slow.rank);
      CHECK(fast.matrix == slow.matrix);
    }
  }
}

TEST_CASE("reduce_row decides membership against an RREF basis") {
  PrimeField f(3);
  auto basis = rref(Matrix::from_rows(f, 4, {{1, 0, 2, 0}, {0, 1, 1, 0}})).matrix;
  CHECK(in_row_space(basis, std::vector<std::uint16_t>{1, 1, 0, 0}));
  CHECK(in_row_space(basis, std::vector<std::uint16_t>{2, 0, 1, 0}));
  CHECK(!in_row_space(basis, std::vector<std::uint16_t>{0, 0, 0, 1}));
  CHECK(!in_row_space(basis, std::vector<std::uint16_t>{1, 0, 0, 0}));
}
