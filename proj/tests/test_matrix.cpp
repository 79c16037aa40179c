#include <doctest.h>

#include <random>

#include "cartier/matrix.hpp"

using namespace cartier;

namespace {

MatFp random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::uint64_t p) {
  MatFp m(rows, cols, p);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("rank of simple matrices") {
  CHECK(mat_rank(MatFp::identity(3, 5)) == 3);
  CHECK(mat_rank(MatFp(4, 4, 7)) == 0);

  MatFp m(2, 2, 5);  // second row is twice the first
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  CHECK(mat_rank(m) == 1);
  CHECK(mat_rank_colpivot(m) == 1);
}

TEST_CASE("rank leaves the input untouched") {
  std::mt19937 rng(42);
  const MatFp m = random_matrix(rng, 6, 6, 5);
  const MatFp copy = m;
  (void)mat_rank(m);
  CHECK(m == copy);
}

TEST_CASE("product basics") {
  std::mt19937 rng(7);
  const MatFp a = random_matrix(rng, 5, 5, 3);
  CHECK(mat_mul(a, MatFp::identity(5, 3)) == a);
  CHECK(mat_mul(MatFp::identity(5, 3), a) == a);

  MatFp nil(2, 2, 2);
  nil.set(0, 1, 1);
  CHECK(mat_mul(nil, nil).is_zero());
}

TEST_CASE("product shape and modulus errors") {
  CHECK_THROWS_AS(mat_mul(MatFp(2, 3, 5), MatFp(2, 3, 5)), shape_error);
  CHECK_THROWS_AS(mat_mul(MatFp(2, 2, 5), MatFp(2, 2, 7)), shape_error);
}

TEST_CASE("parallel product equals the serial reference") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const MatFp a = random_matrix(rng, 40, 33, 7);
    const MatFp b = random_matrix(rng, 33, 47, 7);
    CHECK(mat_mul(a, b) == mat_mul_serial(a, b));
  }
}

TEST_CASE("rank of a product is at most the smaller factor rank") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    const MatFp a = random_matrix(rng, 10, 10, 7);
    const MatFp b = random_matrix(rng, 10, 10, 7);
    const std::size_t ra = mat_rank(a), rb = mat_rank(b);
    CHECK(mat_rank(mat_mul(a, b)) <= std::min(ra, rb));
  }
}

TEST_CASE("row-echelon and column-pivot ranks agree on random matrices") {
  std::mt19937 rng(1234);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    for (int t = 0; t < 1000; ++t) {
      const MatFp m = random_matrix(rng, dim(rng), dim(rng), p);
      CAPTURE(p);
      CHECK(mat_rank(m) == mat_rank_colpivot(m));
    }
  }
}

TEST_CASE("stable rank and index") {
  CHECK(stable_rank_and_index(MatFp(6, 6, 5), 6) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(stable_rank_and_index(MatFp::identity(4, 3), 4) ==
        std::pair<std::size_t, std::size_t>{4, 0});
  CHECK_THROWS_AS(stable_rank_and_index(MatFp(2, 3, 5), 2), shape_error);
  CHECK_THROWS_AS(stable_rank_and_index(MatFp(2, 2, 5), 0), std::invalid_argument);
}

TEST_CASE("power ranks never increase and stabilize by the dimension") {
  std::mt19937 rng(555);
  for (int t = 0; t < 50; ++t) {
    const MatFp m = random_matrix(rng, 8, 8, 3);
    MatFp power = MatFp::identity(8, 3);
    std::size_t prev = 8;
    for (int k = 1; k <= 8; ++k) {
      power = mat_mul(power, m);
      const std::size_t rk = mat_rank(power);
      CHECK(rk <= prev);
      prev = rk;
    }
    const auto [stable, index] = stable_rank_and_index(m, 8);
    CHECK(stable == prev);
    CHECK(index <= 8);
  }
}

TEST_SUITE_END();
