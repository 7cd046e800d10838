#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hypercover/graphs.hpp>

#include "oracles.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace hypercover;

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{2, 0}}), usage_error);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 2}}), usage_error);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 0}, {0, 0}}), usage_error);
  BipartiteGraph g(2, 3, {{0, 0}, {1, 2}});
  CHECK(g.left_size() == 2);
  CHECK(g.right_size() == 3);
}

TEST_CASE("girth of standard graphs") {
  CHECK(girth(complete_bipartite(2, 2)) == 4);
  CHECK(girth(complete_bipartite(3, 2)) == 4);
  CHECK(girth(complete_bipartite(5, 5)) == 4);

  BipartiteGraph path(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  CHECK_FALSE(girth(path).has_value());

  BipartiteGraph hexagon(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
  CHECK(girth(hexagon) == 6);

  CHECK_FALSE(girth(BipartiteGraph(4, 4, {})).has_value());
}

TEST_CASE("girth matches exhaustive cycle enumeration") {
  std::mt19937 rng(1111);
  for (int it = 0; it < 300; ++it) {
    std::size_t m = 1 + rng() % 5;
    std::size_t l = 1 + rng() % 5;
    std::size_t cap = m * l;
    std::size_t e = rng() % (cap + 1);
    BipartiteGraph g = testing::random_graph(rng, m, l, e);
    CHECK(girth(g) == testing::girth_exhaustive(g));
  }
}

TEST_CASE("girth is even when it exists") {
  std::mt19937 rng(22);
  for (int it = 0; it < 200; ++it) {
    std::size_t m = 1 + rng() % 5;
    std::size_t l = 1 + rng() % 5;
    BipartiteGraph g = testing::random_graph(rng, m, l, rng() % (m * l + 1));
    auto gv = girth(g);
    if (gv.has_value()) {
      CHECK(*gv % 2 == 0);
      CHECK(*gv >= 4);
    }
  }
}

TEST_CASE("complete bipartite edges are left-major ordered") {
  BipartiteGraph g = complete_bipartite(2, 3);
  std::vector<BipartiteGraph::Edge> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(g.edges() == want);
  CHECK_THROWS_AS(complete_bipartite(0, 3), usage_error);
}

TEST_CASE("greedy construction at ell = 4 on a 2x2 grid keeps 3 edges") {
  BipartiteGraph g = greedy_girth_graph(2, 2, 4);
  CHECK(g.edges().size() == 3);
  std::vector<BipartiteGraph::Edge> want{{0, 0}, {0, 1}, {1, 0}};
  CHECK(g.edges() == want);
  auto gv = girth(g);
  CHECK_FALSE(gv.has_value());
}

TEST_CASE("greedy construction at ell = 2 keeps everything") {
  BipartiteGraph g = greedy_girth_graph(3, 4, 2);
  CHECK(g.edges().size() == 12);
  CHECK(girth(g) == 4);
}

TEST_CASE("greedy output girth exceeds the threshold") {
  for (std::size_t ell : {2u, 3u, 4u, 5u, 6u}) {
    for (std::size_t m : {2u, 4u, 6u}) {
      BipartiteGraph g = greedy_girth_graph(m, m, ell);
      auto gv = girth(g);
      if (gv.has_value()) CHECK(*gv > ell);
    }
  }
}

TEST_CASE("greedy output is maximal: every absent edge closes a short cycle") {
  for (std::size_t ell : {4u, 6u}) {
    BipartiteGraph g = greedy_girth_graph(4, 4, ell);
    std::set<BipartiteGraph::Edge> present(g.edges().begin(), g.edges().end());
    for (std::size_t u = 0; u < 4; ++u) {
      for (std::size_t w = 0; w < 4; ++w) {
        if (present.count({u, w})) continue;
        auto edges = g.edges();
        edges.push_back({u, w});
        BipartiteGraph extended(4, 4, edges);
        auto gv = girth(extended);
        REQUIRE(gv.has_value());
        CHECK(*gv <= ell);
      }
    }
  }
}

TEST_CASE("right-major greedy differs but satisfies the same girth contract") {
  BipartiteGraph a = greedy_girth_graph(3, 5, 4, EdgeOrder::left_major);
  BipartiteGraph b = greedy_girth_graph(3, 5, 4, EdgeOrder::right_major);
  auto ga = girth(a);
  auto gb = girth(b);
  if (ga.has_value()) CHECK(*ga > 4);
  if (gb.has_value()) CHECK(*gb > 4);
}

TEST_CASE("edge count benchmark values") {
  CHECK(edge_bound(2, 1) == doctest::Approx(1.0));
  CHECK(edge_bound(8, 2) == doctest::Approx(8.0));
  CHECK(edge_bound(12, 3) == doctest::Approx(std::pow(6.0, 1.0 + 2.0 / 7.0)));
  CHECK(edge_bound(12, 3) == doctest::Approx(10.0111).epsilon(1e-4));
  CHECK_THROWS_AS(edge_bound(1, 1), usage_error);
  CHECK_THROWS_AS(edge_bound(4, 0), usage_error);
}

TEST_CASE("support enumeration agrees with the girth criterion where it should") {
  CHECK(support_check_bruteforce(complete_bipartite(3, 2), 3));
  CHECK_FALSE(support_check_bruteforce(complete_bipartite(2, 2), 4));

  BipartiteGraph tree(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
  for (std::size_t ell = 1; ell <= 5; ++ell) {
    CHECK(support_check_bruteforce(tree, ell));
  }
}

TEST_CASE("support enumeration is vacuous beyond the edge count") {
  BipartiteGraph g(2, 2, {{0, 0}});
  CHECK(support_check_bruteforce(g, 2));
  CHECK(support_check_bruteforce(g, 100));
}

TEST_CASE("support enumeration respects the budget") {
  BipartiteGraph g = complete_bipartite(6, 6);
  CHECK_THROWS_AS(support_check_bruteforce(g, 18, 1000), capacity_error);
}

TEST_CASE("girth criterion equivalence on connected graphs") {
  std::mt19937 rng(4242);
  int connected_seen = 0;
  for (int it = 0; it < 400; ++it) {
    std::size_t m = 1 + rng() % 4;
    std::size_t l = 1 + rng() % 4;
    BipartiteGraph g = testing::random_graph(rng, m, l, rng() % (m * l + 1));
    auto gv = girth(g);
    for (std::size_t ell = 1; ell <= g.edges().size() && ell <= 6; ++ell) {
      bool all_supports = true;
      for (std::size_t j = 1; j <= ell; ++j) {
        if (!support_check_bruteforce(g, j)) {
          all_supports = false;
          break;
        }
      }
      bool girth_ok = !gv.has_value() || *gv > ell;
      CHECK(all_supports == girth_ok);
      if (testing::is_connected(g) && g.edges().size() >= ell) {
        ++connected_seen;
        CHECK(support_check_bruteforce(g, ell) == girth_ok);
      }
    }
  }
  CHECK(connected_seen > 50);
}
