#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hellylat/affine.hpp"
#include "hellylat/catalog.hpp"
#include "hellylat/errors.hpp"
#include "hellylat/helly.hpp"

using namespace hellylat;
using namespace hellylat::affine;

namespace {

MPoint pt(const AffineContext& ctx, std::vector<Elem> chain, std::vector<std::int64_t> u) {
  return make_point_units(ctx, chain, std::move(u));
}

// Boolean_2 elements: {} = 0, {1} = 1, {2} = 2, {1,2} = 3.
const std::vector<Elem> kChain1{0, 1, 3};
const std::vector<Elem> kChain2{0, 2, 3};

struct Window {
  std::string name;
  AffineContext ctx;
  std::vector<MPoint> pts;
};

std::vector<Window> windows() {
  std::vector<Window> out;
  for (auto& [name, base] : std::vector<std::pair<std::string, FinitePoset>>{
           {"boolean:2", boolean_lattice(2)},
           {"boolean:3", boolean_lattice(3)},
           {"weak_order:3", weak_order(3)},
           {"chain:2", chain(2)}}) {
    AffineContext ctx(base);
    auto pts = window_points(ctx, 0, 3);
    out.push_back({name, std::move(ctx), std::move(pts)});
  }
  return out;
}

}  // namespace

TEST_CASE("context preconditions") {
  CHECK_THROWS_AS(AffineContext(polar_space(2, 4)), InputError);
  CHECK_THROWS_AS(AffineContext(chain(0)), InputError);
  CHECK_THROWS_AS(AffineContext(boolean_lattice(2), 0), InputError);
  const AffineContext ctx(weak_order(3));
  CHECK(ctx.rank() == 3);
  CHECK(ctx.dual().rank() == 3);
}

TEST_CASE("make_point canonicalizes chains") {
  const AffineContext ctx(boolean_lattice(2));
  CHECK(pt(ctx, kChain1, {0, 0}) == pt(ctx, kChain2, {0, 0}));
  CHECK(pt(ctx, kChain1, {0, 0}).jumps().empty());
  const auto p = pt(ctx, kChain1, {0, 1});
  REQUIRE(p.jumps().size() == 1);
  CHECK(p.jumps().at(1) == 1);
  CHECK(p != pt(ctx, kChain2, {0, 1}));

  const AffineContext w(weak_order(3));
  const auto chains = maximal_chains(w.base());
  for (const auto& c : chains) CHECK(make_point_units(w, c, {2, 2, 2}) == constant_point(w, 2));

  CHECK_THROWS_AS(pt(ctx, kChain1, {1, 0}), InputError);
  CHECK_THROWS_AS(pt(ctx, {0, 3}, {0, 1}), InputError);
  const AffineContext half(boolean_lattice(2), 2);
  const std::vector<Rational> u{Rational(1, 2), Rational(1)};
  CHECK(make_point(half, kChain1, u).u == std::vector<std::int64_t>{1, 2});
  const std::vector<Rational> third{Rational(1, 3), Rational(1)};
  CHECK_THROWS_AS(make_point(half, kChain1, third), InputError);
}

TEST_CASE("order examples") {
  const AffineContext ctx(boolean_lattice(2));
  const auto a = pt(ctx, kChain1, {0, 1}), b = pt(ctx, kChain2, {0, 1});
  for (auto mode : {LeqMode::criterion, LeqMode::oracle}) {
    CHECK(leq(ctx, a, a, mode));
    CHECK_FALSE(leq(ctx, a, b, mode));
    CHECK_FALSE(leq(ctx, b, a, mode));
    CHECK(leq(ctx, constant_point(ctx, 0), constant_point(ctx, 1), mode));
  }
}

TEST_CASE("elementary superiors") {
  const AffineContext b2(boolean_lattice(2));
  const auto sup = elementary_superiors(b2, constant_point(b2, 0));
  CHECK(sup.size() == 3);
  CHECK(std::count(sup.begin(), sup.end(), constant_point(b2, 1)) == 1);
  CHECK(std::count(sup.begin(), sup.end(), pt(b2, kChain1, {0, 1})) == 1);
  CHECK(std::count(sup.begin(), sup.end(), pt(b2, kChain2, {0, 1})) == 1);

  const AffineContext c1(chain(1));
  const auto s1 = elementary_superiors(c1, constant_point(c1, 0));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0] == constant_point(c1, 1));

  const AffineContext b3(boolean_lattice(3));
  const auto s3 = elementary_superiors(b3, constant_point(b3, 0));
  CHECK(s3.size() == 7);
  std::set<std::vector<std::int64_t>> images;
  for (const auto& p : s3) images.insert(boolean_model_units(b3, p));
  CHECK(images.size() == 7);
  for (const auto& x : images) {
    CHECK(*std::max_element(x.begin(), x.end()) == 1);
    CHECK(*std::min_element(x.begin(), x.end()) >= 0);
  }
  for (const auto& p : s3) {
    const auto st = step_between(b3, constant_point(b3, 0), p);
    REQUIRE(st);
    CHECK(apply_step(b3, constant_point(b3, 0), *st) == p);
  }
}

TEST_CASE("criterion and oracle agree and define a partial order") {
  for (const auto& w : windows()) {
    const auto& pts = w.pts;
    const std::size_t m = pts.size();
    std::vector<std::uint8_t> le(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        le[a * m + b] = leq(w.ctx, pts[a], pts[b], LeqMode::criterion);
        CHECK(le[a * m + b] == leq(w.ctx, pts[a], pts[b], LeqMode::oracle));
      }
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(le[a * m + a]);
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b) CHECK_FALSE((le[a * m + b] && le[b * m + a]));
        for (std::size_t c = 0; c < m; ++c)
          if (le[a * m + b] && le[b * m + c]) CHECK(le[a * m + c]);
      }
    }
  }
}

TEST_CASE("join examples") {
  const AffineContext ctx(boolean_lattice(2));
  const auto a = pt(ctx, kChain1, {0, 1}), b = pt(ctx, kChain2, {0, 1});
  CHECK(join(ctx, a, a) == a);
  CHECK(join(ctx, a, b) == constant_point(ctx, 1));
  CHECK(meet(ctx, a, b) == constant_point(ctx, 0));
  // Disjoint blocks in either order.
  const auto x = boolean_model_inverse(ctx, std::vector<std::int64_t>{1, 0});
  const auto y = boolean_model_inverse(ctx, std::vector<std::int64_t>{0, 2});
  CHECK(join(ctx, x, y) == join(ctx, y, x));
  CHECK(boolean_model_units(ctx, join(ctx, x, y)) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("join and meet are the brute-force bounds on windows") {
  for (const auto& w : windows()) {
    const auto& pts = w.pts;
    for (const auto& b : pts)
      for (const auto& c : pts) {
        const auto j = join(w.ctx, b, c), m = meet(w.ctx, b, c);
        CHECK(leq(w.ctx, b, j, LeqMode::oracle));
        CHECK(leq(w.ctx, c, j, LeqMode::oracle));
        CHECK(leq(w.ctx, m, b, LeqMode::oracle));
        CHECK(leq(w.ctx, m, c, LeqMode::oracle));
        for (const auto& z : pts) {
          if (leq(w.ctx, b, z) && leq(w.ctx, c, z)) CHECK(leq(w.ctx, j, z, LeqMode::oracle));
          if (leq(w.ctx, z, b) && leq(w.ctx, z, c)) CHECK(leq(w.ctx, z, m, LeqMode::oracle));
        }
        CHECK(j == join(w.ctx, c, b));
      }
  }
}

TEST_CASE("join is associative on sampled triples") {
  std::mt19937_64 rng(3);
  for (const auto& w : windows()) {
    const auto& pts = w.pts;
    for (int t = 0; t < 300; ++t) {
      const auto& a = pts[rng() % pts.size()];
      const auto& b = pts[rng() % pts.size()];
      const auto& c = pts[rng() % pts.size()];
      CHECK(join(w.ctx, a, join(w.ctx, b, c)) == join(w.ctx, join(w.ctx, a, b), c));
      CHECK(meet(w.ctx, a, meet(w.ctx, b, c)) == meet(w.ctx, meet(w.ctx, a, b), c));
    }
  }
}

TEST_CASE("join of two elementary superiors is one step away") {
  for (const auto& w : windows()) {
    for (const auto& a : w.pts) {
      if (a.u.back() > 1) continue;
      const auto sup = elementary_superiors(w.ctx, a);
      for (const auto& b : sup)
        for (const auto& c : sup) {
          const auto j = join(w.ctx, b, c);
          for (const auto& from : {b, c}) {
            const auto next = elementary_superiors(w.ctx, from);
            CHECK((j == from || std::find(next.begin(), next.end(), j) != next.end()));
          }
        }
    }
  }
}

TEST_CASE("translation") {
  const AffineContext ctx(weak_order(3), 2);
  const auto pts = window_points(ctx, 0, 2);
  for (const auto& p : pts) {
    CHECK(translate(ctx, p, 0) == p);
    CHECK(translate(ctx, translate(ctx, p, Rational(1, 2)), Rational(3, 2)) == translate(ctx, p, 2));
    for (const auto& q : pts) CHECK(leq(ctx, p, q) == leq(ctx, translate(ctx, p, 1), translate(ctx, q, 1)));
  }
  CHECK_THROWS_AS(translate(ctx, pts[0], Rational(1, 3)), InputError);
  const AffineContext b2(boolean_lattice(2));
  CHECK(translate(b2, constant_point(b2, 0), 1) == constant_point(b2, 1));
}

TEST_CASE("distance") {
  const AffineContext b2(boolean_lattice(2));
  const auto o = constant_point(b2, 0);
  CHECK(distance(b2, o, o) == Rational(0));
  CHECK(distance(b2, o, constant_point(b2, 1)) == Rational(1));
  const AffineContext b3(boolean_lattice(3), 2);
  const std::vector<Rational> u{Rational(1, 2), Rational(1, 2), Rational(1)};
  const auto p = make_point(b3, std::vector<Elem>{0, 1, 3, 7}, u);
  CHECK(distance(b3, constant_point(b3, 0), p) == Rational(1));
  for (const auto& w : windows())
    for (const auto& a : w.pts)
      for (const auto& b : w.pts) CHECK(distance_units(w.ctx, a, b) == distance_units(w.ctx, b, a));
}

TEST_CASE("geodesic points") {
  const AffineContext b2(boolean_lattice(2));
  const auto x = constant_point(b2, 0), y = constant_point(b2, 2);
  CHECK(geodesic_point(b2, x, y, 0) == x);
  CHECK(geodesic_point(b2, x, y, 2) == y);
  const auto z = geodesic_point(b2, x, y, 1);
  CHECK(distance(b2, x, z) == Rational(1));
  CHECK(distance(b2, z, y) == Rational(1));
  CHECK_THROWS_AS(geodesic_point(b2, x, y, 3), InputError);
  for (const auto& w : windows())
    for (std::size_t i = 0; i < w.pts.size(); i += 3)
      for (std::size_t j = 0; j < w.pts.size(); j += 5) {
        const auto d = distance(w.ctx, w.pts[i], w.pts[j]);
        for (std::int64_t r = 0; r <= d; ++r) {
          const auto g = geodesic_point(w.ctx, w.pts[i], w.pts[j], r);
          CHECK(distance(w.ctx, w.pts[i], g) <= Rational(r));
          CHECK(distance(w.ctx, g, w.pts[j]) <= Rational(d - r));
        }
      }
}

TEST_CASE("thickening windows") {
  const AffineContext b2(boolean_lattice(2));
  const auto king = thickening_window(b2, constant_point(b2, 0), 2);
  CHECK(king.points.size() == 25);
  CHECK(king.graph.edge_count() == 72);

  const AffineContext c1(chain(1));
  const auto line = thickening_window(c1, constant_point(c1, 0), 2);
  CHECK(line.points.size() == 5);
  CHECK(line.graph.edge_count() == 4);

  for (const auto& [name, base] : std::vector<std::pair<std::string, FinitePoset>>{
           {"boolean:2", boolean_lattice(2)}, {"weak_order:3", weak_order(3)}}) {
    const AffineContext ctx(base);
    const auto win = thickening_window(ctx, constant_point(ctx, 0), 3);
    for (const auto& x : window_points(ctx, -1, 1)) {
      const auto v = win.index_of(x);
      const auto dist = bfs_distances(win.graph, v);
      for (std::size_t k = 0; k <= 2; ++k) {
        std::vector<MPoint> ball;
        for (auto w : ball_vertices(win.graph, {v, k})) ball.push_back(win.points[w]);
        std::sort(ball.begin(), ball.end());
        CHECK(ball == enumerate_interval(ctx, translate_units(x, -static_cast<std::int64_t>(k)),
                                         translate_units(x, static_cast<std::int64_t>(k))));
      }
      // Graph metric agrees with the distance on the interior.
      for (const auto& y : window_points(ctx, -1, 1))
        CHECK(dist[win.index_of(y)] == static_cast<std::size_t>(distance_units(ctx, x, y)));
    }
  }
  CHECK_THROWS_AS(thickening_window(b2, constant_point(b2, 0), 50, 100), CapExceeded);
}

TEST_CASE("complex thickening of an affine window matches and is Helly inside") {
  for (const auto& base : {boolean_lattice(2), boolean_lattice(3), weak_order(3)}) {
    const AffineContext ctx(base);
    const auto pts = window_points(ctx, -4, 4);
    std::vector<std::string> ids;
    for (const auto& p : pts) ids.push_back(format(ctx, p));
    // Simplices of the complex are chains x_0 < ... < x_k <= x_0 + 1.
    const std::size_t m = pts.size();
    std::vector<std::uint8_t> below(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        below[a * m + c] = a != c && leq(ctx, pts[a], pts[c]) && leq(ctx, pts[c], translate_units(pts[a], 1));
    const auto g = thickening_from_ordered_complex(ids, below);
    const auto direct = thickening_graph(ctx, pts);
    HellyWindow hw;
    for (std::size_t v = 0; v < pts.size(); ++v) {
      const bool inner = pts[v].u.front() >= -1 && pts[v].u.back() <= 1;
      if (!inner) continue;
      hw.core.push_back(v);
      for (std::size_t w = 0; w < pts.size(); ++w) CHECK(g.adjacent(v, w) == direct.adjacent(v, w));
    }
    hw.max_radius = 1;
    CHECK(helly_check(g, hw).pass);
  }
}

TEST_CASE("interval families in a window have common points") {
  const AffineContext ctx(weak_order(3));
  const auto pts = window_points(ctx, 0, 3);
  std::mt19937_64 rng(17);
  int families = 0;
  for (int t = 0; t < 2000 && families < 200; ++t) {
    std::vector<std::pair<MPoint, MPoint>> fam;
    for (int i = 0; i < 3; ++i) {
      auto lo = pts[rng() % pts.size()], hi = pts[rng() % pts.size()];
      if (!leq(ctx, lo, hi)) std::swap(lo, hi);
      if (!leq(ctx, lo, hi)) break;
      fam.emplace_back(lo, hi);
    }
    if (fam.size() != 3) continue;
    // Pairwise intersecting iff lo_i <= hi_j for all i, j (lattice intervals).
    bool pairwise = true;
    for (const auto& a : fam)
      for (const auto& b : fam) pairwise = pairwise && leq(ctx, a.first, b.second);
    if (!pairwise) continue;
    ++families;
    MPoint lo = fam[0].first;
    for (const auto& f : fam) lo = join(ctx, lo, f.first);
    for (const auto& f : fam) CHECK(leq(ctx, lo, f.second));
  }
  CHECK(families > 20);
}

TEST_CASE("orthoscheme distances") {
  const AffineContext b2(boolean_lattice(2));
  for (std::int64_t k : {1, 2, 4, 8})
    CHECK(orthoscheme_distance(b2, constant_point(b2, 0), constant_point(b2, 1), k) == Rational(1));
  CHECK(orthoscheme_distance(b2, constant_point(b2, 0), constant_point(b2, 0), 4) == Rational(0));

  const AffineContext b3(boolean_lattice(3), 2);
  const auto o = constant_point(b3, 0);
  const auto p = boolean_model_inverse(b3, std::vector<std::int64_t>{0, 1, 2});
  std::optional<Rational> prev;
  for (std::int64_t k : {2, 4, 8}) {
    const auto dk = orthoscheme_distance(b3, o, p, k);
    CHECK(dk >= Rational(1));
    CHECK(dk - 1 <= Rational(2, k));
    if (prev) CHECK(dk <= *prev);
    prev = dk;
  }
  CHECK_THROWS_AS(orthoscheme_distance(b3, o, constant_point(b3, 4), 2), InputError);
}

TEST_CASE("boolean model") {
  for (int n : {2, 3}) {
    const AffineContext ctx(boolean_lattice(n));
    CHECK(is_boolean_base(ctx));
    CHECK(boolean_model_units(ctx, constant_point(ctx, 0)) == std::vector<std::int64_t>(n, 0));
    const auto pts = window_points(ctx, 0, 4);
    std::set<std::vector<std::int64_t>> images;
    for (const auto& p : pts) {
      const auto x = boolean_model_units(ctx, p);
      images.insert(x);
      auto shifted = x;
      for (auto& c : shifted) c += 3;
      CHECK(boolean_model_units(ctx, translate(ctx, p, 3)) == shifted);
      CHECK(boolean_model_inverse(ctx, x) == p);
    }
    CHECK(images.size() == pts.size());
    CHECK(images.size() == static_cast<std::size_t>(n == 2 ? 25 : 125));
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const auto x = boolean_model_units(ctx, a), y = boolean_model_units(ctx, b);
        bool below = true;
        std::int64_t linf = 0;
        for (int i = 0; i < n; ++i) {
          below = below && x[i] <= y[i];
          linf = std::max(linf, std::abs(x[i] - y[i]));
        }
        CHECK(leq(ctx, a, b) == below);
        CHECK(distance_units(ctx, a, b) == linf);
      }
  }
  const AffineContext b2(boolean_lattice(2));
  const auto a = boolean_model_units(b2, pt(b2, kChain1, {0, 1}));
  const auto b = boolean_model_units(b2, pt(b2, kChain2, {0, 1}));
  CHECK(a != b);
  CHECK(*std::max_element(a.begin(), a.end()) == 1);
  CHECK(*std::max_element(b.begin(), b.end()) == 1);
  CHECK_THROWS_AS(boolean_model_units(AffineContext(weak_order(3)), constant_point(AffineContext(weak_order(3)), 0)), InputError);
}
