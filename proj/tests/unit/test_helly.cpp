#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hellylat/catalog.hpp"
#include "hellylat/errors.hpp"
#include "hellylat/helly.hpp"
#include "oracles.hpp"

using namespace hellylat;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(names(n));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(names(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph random_tree(std::mt19937_64& rng, std::size_t n) {
  SimpleGraph g(names(n));
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v);
  return g;
}

// King graph on [-r, r]^2; vertex (x, y) has index (x + r) * (2r + 1) + (y + r).
SimpleGraph king(int r) {
  const int side = 2 * r + 1;
  SimpleGraph g(names(static_cast<std::size_t>(side * side)));
  for (int a = 0; a < side * side; ++a)
    for (int b = a + 1; b < side * side; ++b)
      if (std::abs(a / side - b / side) <= 1 && std::abs(a % side - b % side) <= 1)
        g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return g;
}

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("graph construction") {
  SimpleGraph g({"a", "b", "c"});
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.index_of("c") == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  CHECK_THROWS_AS(g.index_of("z"), InputError);
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}), InputError);
}

TEST_CASE("balls") {
  const auto c6 = cycle(6);
  CHECK(ball_vertices(c6, {0, 0}) == std::vector<std::size_t>{0});
  CHECK(ball_vertices(c6, {0, 1}) == std::vector<std::size_t>{0, 1, 5});
  CHECK(ball_vertices(c6, {0, 3}).size() == 6);
  SimpleGraph two({"a", "b"});
  CHECK(ball_vertices(two, {0, 5}) == std::vector<std::size_t>{0});
  CHECK(bfs_distances(two, 0)[1] == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("balls agree with all-pairs distances") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 14;
    SimpleGraph g(names(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 4 == 0) g.add_edge(a, b);
    const auto d = oracle::all_pairs(g);
    for (std::size_t v = 0; v < n; ++v) {
      CHECK(bfs_distances(g, v) == d[v]);
      for (std::size_t r = 0; r <= 3; ++r) {
        std::vector<std::size_t> expect;
        for (std::size_t w = 0; w < n; ++w)
          if (d[v][w] <= r) expect.push_back(w);
        CHECK(ball_vertices(g, {v, r}) == expect);
      }
    }
  }
}

TEST_CASE("six-cycle is not ball-Helly") {
  const auto c6 = cycle(6);
  const std::vector<BallSpec> fam{{0, 1}, {2, 1}, {4, 1}};
  const auto r = helly_check(c6, fam);
  CHECK_FALSE(r.pass);
  CHECK(r.violation.size() == 3);
  CHECK_FALSE(helly_check(c6, HellyWindow{{0, 1, 2, 3, 4, 5}, 3}).pass);
  const std::vector<BallSpec> two{{0, 1}, {2, 1}};
  CHECK(helly_check(c6, two).pass);
}

TEST_CASE("trees and king grids are Helly") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_tree(rng, 2 + rng() % 20);
    HellyWindow w;
    for (std::size_t v = 0; v < g.size(); ++v) w.core.push_back(v);
    w.max_radius = 3;
    CHECK(helly_check(g, w).pass);
  }
  const auto k = king(5);
  HellyWindow w;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) w.core.push_back(static_cast<std::size_t>((x + 5) * 11 + (y + 5)));
  w.max_radius = 2;
  CHECK(helly_check(k, w).pass);
}

TEST_CASE("Helly checker agrees with subset enumeration") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t universe = 3 + rng() % 6, k = 2 + rng() % 5;
    std::vector<Bits> sets;
    std::vector<std::set<std::size_t>> plain;
    for (std::size_t i = 0; i < k; ++i) {
      Bits b(universe);
      std::set<std::size_t> s;
      for (std::size_t x = 0; x < universe; ++x)
        if (rng() % 2) {
          b.set(x);
          s.insert(x);
        }
      sets.push_back(b);
      plain.push_back(s);
    }
    const auto r = set_family_helly(sets);
    CHECK(r.pass == oracle::helly_by_subsets(plain));
    if (!r.pass) {
      std::vector<std::set<std::size_t>> sub;
      for (auto i : r.violation) sub.push_back(plain[i]);
      CHECK_FALSE(oracle::helly_by_subsets(sub));
    }
  }
}

TEST_CASE("subfamilies of Helly families are Helly") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_tree(rng, 12);
    std::vector<BallSpec> fam;
    for (int i = 0; i < 6; ++i) fam.push_back({rng() % 12, rng() % 3});
    REQUIRE(helly_check(g, fam).pass);
    for (std::size_t drop = 0; drop < fam.size(); ++drop) {
      auto sub = fam;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(helly_check(g, sub).pass);
    }
  }
}

TEST_CASE("clique Helly") {
  std::vector<std::vector<std::size_t>> cl;
  CHECK(clique_helly_check(complete(5), 1000, &cl).pass);
  CHECK(cl.size() == 1);
  CHECK(clique_helly_check(cycle(6), 1000, &cl).pass);
  CHECK(cl.size() == 6);
  // Hajos graph: three outer triangles meet pairwise but not jointly.
  SimpleGraph hajos(names(6));
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}})
    hajos.add_edge(a, b);
  const auto r = clique_helly_check(hajos, 1000, &cl);
  REQUIRE_FALSE(r.pass);
  std::vector<std::set<std::size_t>> bad;
  for (auto i : r.violation) bad.push_back(as_set(cl[i]));
  CHECK(bad.size() >= 3);
  CHECK_FALSE(oracle::helly_by_subsets(bad));
  CHECK_THROWS_AS(maximal_cliques(cycle(30), 5), CapExceeded);
}

TEST_CASE("epsilon graphs") {
  const auto tri = MetricSample::from_function({"a", "b", "c"}, [](std::size_t, std::size_t) { return 1.0; });
  CHECK(epsilon_graph(tri, 1.0).edge_count() == 3);
  CHECK(epsilon_graph(tri, 0.5).edge_count() == 0);
  const auto path = MetricSample::from_function(
      names(4), [](std::size_t i, std::size_t j) { return std::abs(double(i) - double(j)); });
  CHECK(epsilon_graph(path, 1.0).edge_count() == 3);
  CHECK(epsilon_graph(path, 2.0).edge_count() == 5);
  // l_inf on a 3x3 grid gives the king graph.
  const auto grid = MetricSample::from_function(names(9), [](std::size_t i, std::size_t j) {
    return std::max(std::abs(double(i / 3) - double(j / 3)), std::abs(double(i % 3) - double(j % 3)));
  });
  CHECK(epsilon_graph(grid, 1.0) == [] {
    SimpleGraph g(names(9));
    for (std::size_t a = 0; a < 9; ++a)
      for (std::size_t b = a + 1; b < 9; ++b)
        if (std::max(std::abs(int(a / 3) - int(b / 3)), std::abs(int(a % 3) - int(b % 3))) <= 1) g.add_edge(a, b);
    return g;
  }());
  CHECK_THROWS_AS(MetricSample({"a", "b"}, {0, 1, 2, 0}), InputError);
  CHECK_THROWS_AS(MetricSample({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0}), InputError);
}

TEST_CASE("coarse injectivity") {
  const auto path = MetricSample::from_function(
      names(5), [](std::size_t i, std::size_t j) { return std::abs(double(i) - double(j)); });
  const std::vector<MetricBall> single{{2, 0.0}};
  CHECK(coarse_injectivity_check(path, single, 0.0) == std::optional<std::size_t>{2});

  // Corners of an l_inf square: the centre is within 1 of all of them.
  std::vector<std::pair<double, double>> sq{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  const auto linf = MetricSample::from_function(names(5), [&](std::size_t i, std::size_t j) {
    return std::max(std::abs(sq[i].first - sq[j].first), std::abs(sq[i].second - sq[j].second));
  });
  const std::vector<MetricBall> corners{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  CHECK(coarse_injectivity_check(linf, corners, 0.0) == std::optional<std::size_t>{4});

  // Three pairwise tangent Euclidean disks: no common point, but eps repairs it.
  const double h = std::sqrt(3.0);
  std::vector<std::pair<double, double>> pts{{0, 0}, {2, 0}, {1, h}, {1, h / 3}};
  const auto l2 = MetricSample::from_function(names(4), [&](std::size_t i, std::size_t j) {
    return std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
  });
  const std::vector<MetricBall> disks{{0, 1}, {1, 1}, {2, 1}};
  CHECK_FALSE(coarse_injectivity_check(l2, disks, 0.0));
  CHECK(coarse_injectivity_check(l2, disks, 0.2) == std::optional<std::size_t>{3});

  const std::vector<MetricBall> far{{0, 0.5}, {4, 0.5}};
  CHECK_THROWS_AS(coarse_injectivity_check(path, far, 0.0), InputError);
}

TEST_CASE("thickening of order complexes") {
  const auto b3 = boolean_lattice(3);
  CHECK(thickening_from_poset(b3).edge_count() == 8 * 7 / 2);

  SimpleGraph path({"s", "t", "u"});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto p = fc_local_poset(path);
  const auto g = thickening_from_poset(p);
  const auto s = p.index_of("s"), t = p.index_of("t"), u = p.index_of("u");
  CHECK(g.adjacent(s, t));
  CHECK_FALSE(g.adjacent(s, u));
  CHECK(g.adjacent(p.index_of("1"), p.index_of("tu")));

  // Adjacency oracle: both endpoints in some interval [a, b].
  for (const auto& q : {p, partition_lattice(4), polar_space(2, 4)}) {
    const auto th = thickening_from_poset(q);
    for (Elem x = 0; x < q.size(); ++x)
      for (Elem y = x + 1; y < q.size(); ++y) {
        bool expect = false;
        for (Elem a = 0; a < q.size() && !expect; ++a)
          for (Elem b = 0; b < q.size() && !expect; ++b)
            expect = q.leq(a, x) && q.leq(a, y) && q.leq(x, b) && q.leq(y, b);
        CHECK(th.adjacent(x, y) == expect);
      }
  }
}

TEST_CASE("ball and clique checks agree with the oracle on small graphs") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng() % 6;
    SimpleGraph g(names(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 2) g.add_edge(a, b);
    std::vector<std::vector<std::size_t>> cl;
    const auto r = clique_helly_check(g, 1000, &cl);
    std::vector<std::set<std::size_t>> fam;
    for (const auto& c : cl) fam.push_back(as_set(c));
    CHECK(r.pass == oracle::helly_by_subsets(fam));

    std::vector<BallSpec> balls;
    std::vector<std::set<std::size_t>> ball_sets;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k <= 1; ++k) {
        balls.push_back({v, k});
        ball_sets.push_back(as_set(ball_vertices(g, {v, k})));
      }
    CHECK(helly_check(g, balls).pass == oracle::helly_by_subsets(ball_sets));
  }
}
