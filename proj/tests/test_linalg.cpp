#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hypercover/linalg.hpp>
#include <hypercover/matrix.hpp>

#include "oracles.hpp"

#include <random>

using namespace hypercover;

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

// The 3x6 matrix assembled from differences of the S_3 construction,
// used across suites as a nontrivial fixture.
IntMatrix example_sensing_matrix() {
  return IntMatrix::from_rows({
      {1, -1, 1, -1, 1, -1},
      {-1, -1, -1, -1, -2, -2},
      {-1, -1, -2, -2, 0, 0},
  });
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
  CHECK(rank_exact(identity(3)) == 3);
  CHECK(rank_exact(IntMatrix(3, 3)) == 0);
  CHECK(rank_exact(IntMatrix(0, 4)) == 0);
  CHECK(rank_exact(IntMatrix(4, 0)) == 0);
}

TEST_CASE("rank of the 3x6 fixture is 3") {
  CHECK(rank_exact(example_sensing_matrix()) == 3);
}

TEST_CASE("rank agrees with rank of the transpose") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 500; ++it) {
    std::size_t r = 1 + static_cast<std::size_t>(rng() % 5);
    std::size_t c = 1 + static_cast<std::size_t>(rng() % 5);
    IntMatrix m = hypercover::testing::random_matrix(rng, r, c, -3, 3);
    CHECK(rank_exact(m) == rank_exact(m.transpose()));
  }
}

TEST_CASE("determinant of simple matrices") {
  CHECK(determinant_exact(identity(1)) == 1);
  CHECK(determinant_exact(identity(4)) == 1);
  CHECK(determinant_exact(IntMatrix(0, 0)) == 1);
  CHECK(determinant_exact(IntMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
  IntMatrix repeated = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
  CHECK(determinant_exact(repeated) == 0);
}

TEST_CASE("determinant rejects non-square input") {
  CHECK_THROWS_AS(determinant_exact(IntMatrix(2, 3)), usage_error);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937 rng(777);
  for (int it = 0; it < 1200; ++it) {
    std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    IntMatrix m = hypercover::testing::random_matrix(rng, n, n, -3, 3);
    CHECK(determinant_exact(m) == hypercover::testing::determinant_cofactor(m));
  }
}

TEST_CASE("kernel vector of a 1x2 difference row") {
  IntMatrix m = IntMatrix::from_rows({{1, -1}});
  auto kv = kernel_vector(m);
  REQUIRE(kv.has_value());
  CHECK(kv->coords() == std::vector<Int>{1, 1});
}

TEST_CASE("kernel vector of difference rows from a candidate partition") {
  // Differences within the blocks {(0,0),(2,2)} and {(2,1),(1,2),(3,1)}
  // written against the first member of each block; the system has full
  // column rank so the partition admits no common normal.
  IntMatrix m = IntMatrix::from_rows({
      {2, 2},
      {-1, 1},
      {1, 0},
  });
  CHECK_FALSE(kernel_vector(m).has_value());
  // Parallel difference rows share the normal (1,-1).
  IntMatrix ok = IntMatrix::from_rows({
      {2, 2},
      {-1, -1},
  });
  auto kv = kernel_vector(ok);
  REQUIRE(kv.has_value());
  CHECK(kv->coords() == std::vector<Int>{1, -1});
}

TEST_CASE("kernel vector of an empty row system spans everything") {
  auto kv = kernel_vector(IntMatrix(0, 3));
  REQUIRE(kv.has_value());
  CHECK(kv->coords() == std::vector<Int>{1, 0, 0});
}

TEST_CASE("full column rank matrices have no kernel vector") {
  CHECK_FALSE(kernel_vector(identity(3)).has_value());
  CHECK_FALSE(kernel_vector(IntMatrix::from_rows({{2, 0}, {0, 3}, {1, 1}})).has_value());
}

TEST_CASE("kernel vectors are canonical and exact") {
  std::mt19937 rng(424242);
  int found = 0;
  for (int it = 0; it < 800; ++it) {
    std::size_t r = 1 + static_cast<std::size_t>(rng() % 4);
    std::size_t c = 2 + static_cast<std::size_t>(rng() % 4);
    IntMatrix m = hypercover::testing::random_matrix(rng, r, c, -3, 3);
    auto kv = kernel_vector(m);
    if (!kv.has_value()) {
      CHECK(rank_exact(m) == c);
      continue;
    }
    ++found;
    const auto& v = kv->coords();
    REQUIRE(v.size() == c);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Int> row(c);
      for (std::size_t j = 0; j < c; ++j) row[j] = m.at(i, j);
      CHECK(dot(row, v) == 0);
    }
    Int g = 0;
    bool nonzero = false;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    for (const auto& x : v) {
      if (x != 0) {
        CHECK(x > 0);
        nonzero = true;
        break;
      }
    }
    CHECK(nonzero);
    CHECK(g == 1);
  }
  CHECK(found > 100);
}

TEST_CASE("column independence checks") {
  IntMatrix m = example_sensing_matrix();
  CHECK(columns_independent(m, {1, 2, 3}));
  CHECK(columns_independent(m, {0}));
  CHECK_FALSE(columns_independent(m, {0, 1, 2, 3}));
  CHECK_THROWS_AS(columns_independent(m, {0, 6}), usage_error);
}

TEST_CASE("column independence matches rank of the selected submatrix") {
  std::mt19937 rng(99);
  for (int it = 0; it < 400; ++it) {
    std::size_t r = 1 + static_cast<std::size_t>(rng() % 4);
    std::size_t c = 1 + static_cast<std::size_t>(rng() % 5);
    IntMatrix m = hypercover::testing::random_matrix(rng, r, c, -2, 2);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 2) cols.push_back(j);
    if (cols.empty()) cols.push_back(rng() % c);
    IntMatrix sub = m.select_columns(cols);
    CHECK(columns_independent(m, cols) == (rank_exact(sub) == cols.size()));
  }
}

TEST_CASE("solve_particular finds exact rational solutions") {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 4}});
  auto sol = solve_particular(m, {Int(3), Int(2)});
  REQUIRE(sol.has_value());
  REQUIRE(sol->size() == 2);
  CHECK((*sol)[0] == Rat(3, 2));
  CHECK((*sol)[1] == Rat(1, 2));
}

TEST_CASE("solve_particular reports inconsistency") {
  IntMatrix m = IntMatrix::from_rows({{1, 1}, {1, 1}});
  auto sol = solve_particular(m, {Int(0), Int(1)});
  CHECK_FALSE(sol.has_value());
}

TEST_CASE("solve_particular on random consistent systems") {
  std::mt19937 rng(31337);
  for (int it = 0; it < 400; ++it) {
    std::size_t r = 1 + static_cast<std::size_t>(rng() % 4);
    std::size_t c = 1 + static_cast<std::size_t>(rng() % 4);
    IntMatrix m = hypercover::testing::random_matrix(rng, r, c, -3, 3);
    std::vector<Int> x(c);
    for (auto& v : x) v = Int(static_cast<long>(rng() % 7)) - 3;
    std::vector<Int> b(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += m.at(i, j) * x[j];
    auto sol = solve_particular(m, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < r; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < c; ++j) acc += Rat(m.at(i, j)) * (*sol)[j];
      CHECK(acc == Rat(b[i]));
    }
  }
}

TEST_CASE("matrix utilities behave") {
  IntMatrix m = example_sensing_matrix();
  CHECK(m.sup_norm() == 2);
  IntMatrix t = m.transpose();
  CHECK(t.rows() == 6);
  CHECK(t.cols() == 3);
  CHECK(t.at(4, 1) == -2);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), usage_error);
  CHECK_THROWS_AS(m.select_columns({9}), usage_error);
}
