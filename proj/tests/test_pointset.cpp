#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hypercover/pointset.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace hypercover;

namespace {

PointSet five_point_set() {
  return PointSet(2, {{0, 0}, {2, 1}, {1, 2}, {3, 1}, {2, 2}});
}

}  // namespace

TEST_CASE("point set construction validates input") {
  CHECK_THROWS_AS(PointSet(0, {}), usage_error);
  CHECK_THROWS_AS(PointSet(2, {{1, 2}, {1}}), usage_error);
  CHECK_THROWS_AS(PointSet(2, {{1, 2}, {1, 2}}), usage_error);
  PointSet ok(2, {{0, 0}, {1, 0}});
  CHECK(ok.size() == 2);
  CHECK(ok.dimension() == 2);
}

TEST_CASE("the extremal family in low dimensions") {
  PointSet s1 = build_sn(1);
  CHECK(s1.points() == std::vector<std::vector<Int>>{{0}, {-1}, {1}});

  PointSet s2 = build_sn(2);
  CHECK(s2.points() == std::vector<std::vector<Int>>{
                           {0, 0}, {0, -1}, {-1, 1}, {1, 1}});

  PointSet s4 = build_sn(4);
  CHECK(s4.size() == 6);
  CHECK(s4.points() == std::vector<std::vector<Int>>{
                           {0, 0, 0, 0},
                           {0, 0, 0, -1},
                           {0, 0, -1, 1},
                           {0, -1, 1, 1},
                           {-1, 1, 1, 1},
                           {1, 1, 1, 1}});
}

TEST_CASE("extremal family size, entries, and cube membership") {
  for (std::size_t n = 1; n <= 8; ++n) {
    PointSet s = build_sn(n);
    CHECK(s.size() == n + 2);
    CHECK(s.dimension() == n);
    CHECK(in_cube(s, Int(1)));
  }
  CHECK_THROWS_AS(build_sn(0), usage_error);
}

TEST_CASE("a single point is covered by one hyperplane") {
  PointSet s(3, {{5, -2, 7}});
  auto cert = coverable_by(s, 1);
  REQUIRE(cert.has_value());
  CHECK(cert->t() == 1);
  CHECK(cert->normal.coords() == std::vector<Int>{1, 0, 0});
  CHECK(certificate_valid(s, *cert));
}

TEST_CASE("two planes never suffice for the three-dimensional family") {
  CHECK_FALSE(coverable_by(build_sn(3), 2).has_value());
}

TEST_CASE("the five-point plane set needs three lines") {
  PointSet s = five_point_set();
  CHECK_FALSE(coverable_by(s, 1).has_value());
  CHECK_FALSE(coverable_by(s, 2).has_value());
  auto cert = coverable_by(s, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->t() == 3);
  CHECK(cert->normal.coords() == std::vector<Int>{1, 1});
  REQUIRE(cert->classes.size() == 3);
  CHECK(cert->classes[0].value == 0);
  CHECK(cert->classes[1].value == 3);
  CHECK(cert->classes[2].value == 4);
  CHECK(certificate_valid(s, *cert));

  auto num = covering_number(s);
  CHECK(num.first == 3);
  CHECK(certificate_valid(s, num.second));
}

TEST_CASE("covering number is 1 when points do not outnumber dimension") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 1 + rng() % 4;
    std::size_t k = 1 + rng() % n;
    PointSet s = testing::random_pointset(rng, n, k, -3, 3);
    auto num = covering_number(s);
    CHECK(num.first == 1);
    CHECK(certificate_valid(s, num.second));
  }
}

TEST_CASE("covering number of the extremal family is 3") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto num = covering_number(build_sn(n));
    CHECK(num.first == 3);
  }
}

TEST_CASE("covering number never exceeds the general upper bound") {
  std::mt19937 rng(555);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 1 + rng() % 3;
    std::size_t k = 1 + rng() % 6;
    PointSet s = testing::random_pointset(rng, n, k, -3, 3);
    auto num = covering_number(s);
    std::size_t bound = std::max<std::size_t>(
        1, s.size() > s.dimension() ? s.size() - s.dimension() + 1 : 1);
    CHECK(num.first <= bound);
    CHECK(certificate_valid(s, num.second));
    CHECK(num.second.t() == num.first);
  }
}

TEST_CASE("covering number matches the planar direction oracle") {
  std::mt19937 rng(909);
  for (int it = 0; it < 80; ++it) {
    std::size_t k = 1 + rng() % 6;
    PointSet s = testing::random_pointset(rng, 2, k, -2, 2);
    auto num = covering_number(s);
    CHECK(num.first == testing::covering_oracle_2d(s));
  }
}

TEST_CASE("coverability is monotone in the plane budget") {
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    std::size_t k = 2 + rng() % 5;
    PointSet s = testing::random_pointset(rng, 2, k, -2, 2);
    for (std::size_t t = 1; t + 1 <= k; ++t) {
      if (coverable_by(s, t).has_value()) {
        CHECK(coverable_by(s, t + 1).has_value());
      }
    }
  }
}

TEST_CASE("covering number is invariant under relabeling, translation, unimodular maps") {
  std::mt19937 rng(31415);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 1 + rng() % 3;
    std::size_t k = 2 + rng() % 5;
    PointSet s = testing::random_pointset(rng, n, k, -3, 3);
    std::size_t base = covering_number(s).first;

    auto pts = s.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(covering_number(PointSet(n, pts)).first == base);

    std::vector<Int> shift(n);
    for (auto& v : shift) v = Int(static_cast<long>(rng() % 9)) - 4;
    IntMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
    CHECK(covering_number(testing::apply_affine(s, id, shift)).first == base);

    IntMatrix u = testing::random_unimodular(rng, n, 6);
    std::vector<Int> zero(n, 0);
    CHECK(covering_number(testing::apply_affine(s, u, zero)).first == base);
  }
}

TEST_CASE("certificate validation rejects tampering") {
  PointSet s = five_point_set();
  auto num = covering_number(s);
  CoveringCertificate good = num.second;
  REQUIRE(certificate_valid(s, good));

  CoveringCertificate bad = good;
  bad.classes[1].value += 1;
  CHECK_FALSE(certificate_valid(s, bad));

  bad = good;
  bad.classes[0].members.clear();
  CHECK_FALSE(certificate_valid(s, bad));

  bad = good;
  std::swap(bad.classes[0], bad.classes[1]);
  CHECK_FALSE(certificate_valid(s, bad));

  bad = good;
  bad.normal = KernelVector::canonical({1, 2});
  CHECK_FALSE(certificate_valid(s, bad));
}

TEST_CASE("partition search refuses oversized inputs") {
  std::vector<std::vector<Int>> line;
  for (long i = 0; i < 23; ++i) line.push_back({Int(i)});
  PointSet s23(1, line);
  CHECK_THROWS_AS(coverable_by(s23, 2), capacity_error);

  line.resize(17);
  PointSet s17(1, line);
  CHECK(coverable_by(s17, 2).has_value() == false);
  CHECK_THROWS_AS(coverable_by(s17, 3), capacity_error);
}

TEST_CASE("cube membership checks") {
  CHECK(in_cube(build_sn(5), Int(1)));
  CHECK_FALSE(in_cube(PointSet(2, {{2, 0}}), Int(1)));
  CHECK(in_cube(PointSet(3, {{0, 0, 0}}), Int(1)));
  CHECK(in_cube(PointSet(3, {{0, 0, 0}}), Int(100)));
  CHECK_THROWS_AS(in_cube(build_sn(2), Int(0)), usage_error);
}

TEST_CASE("grid bound report on the extremal family") {
  GridBoundReport rep = grid_bound_check(build_sn(3), Int(1));
  CHECK(rep.k == 5);
  CHECK(rep.n == 3);
  CHECK(rep.covering == 3);
  CHECK(rep.lower_applicable);
  CHECK(rep.lower_holds);
  CHECK(rep.upper_applicable);
  CHECK(rep.upper_holds);
  CHECK(rep.pass);
}

TEST_CASE("grid bound report is vacuous for a single point") {
  GridBoundReport rep = grid_bound_check(PointSet(2, {{1, 1}}), Int(1));
  CHECK(rep.covering == 1);
  CHECK_FALSE(rep.lower_applicable);
  CHECK_FALSE(rep.upper_applicable);
  CHECK(rep.pass);
}

TEST_CASE("grid bound implications hold on random small sets") {
  std::mt19937 rng(60601);
  for (int it = 0; it < 60; ++it) {
    PointSet s = testing::random_pointset(rng, 2, 4, -2, 2);
    GridBoundReport rep = grid_bound_check(s, Int(2));
    CHECK(rep.pass);
  }
}

TEST_CASE("grid bound check requires the set to lie in the cube") {
  CHECK_THROWS_AS(grid_bound_check(PointSet(1, {{3}}), Int(2)), usage_error);
}
