#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hellylat/errors.hpp"
#include "io.hpp"
#include "suites.hpp"

using namespace hellylat;
using io::json;

TEST_CASE("poset json round trip") {
  for (const auto& p : {boolean_lattice(3), weak_order(3), polar_space(2, 4)}) {
    const auto q = io::poset_from_json(io::to_json(p));
    CHECK(q.ids() == p.ids());
    for (Elem a = 0; a < p.size(); ++a)
      for (Elem b = 0; b < p.size(); ++b) CHECK(q.leq(a, b) == p.leq(a, b));
  }
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements":["a"],"covers":[["a","b"]]})")), InputError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements":["a","b"],"covers":[["a","b"],["b","a"]]})")),
                  InputError);
  CHECK_THROWS_AS(io::parse_json("{"), InputError);
}

TEST_CASE("graph and metric json") {
  const auto g = io::graph_from_json(json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})"));
  CHECK(g.edge_count() == 2);
  CHECK(io::graph_from_json(io::to_json(g)) == g);
  const auto m = io::metric_from_json(json::parse(R"({"points":["x","y"],"dist":[[0,2],[2,0]]})"));
  CHECK(m.dist(0, 1) == 2.0);
  CHECK_THROWS_AS(io::metric_from_json(json::parse(R"({"points":["x","y"],"dist":[[0,2],[3,0]]})")), InputError);
}

TEST_CASE("catalog specs from text") {
  CHECK(generate(io::catalog_spec_from_text("boolean:3")).size() == 8);
  CHECK(generate(io::catalog_spec_from_text("subspace:q=2,n=3")).size() == 16);
  CHECK(generate(io::catalog_spec_from_text("subspace:2,3")).size() == 16);
  CHECK(generate(io::catalog_spec_from_text("product(chain:1;chain:2)")).size() == 6);
  CHECK(isomorphic(generate(io::catalog_spec_from_text("dual(weak_order:3)")), weak_order(3)));
  CHECK_THROWS_AS(io::catalog_spec_from_text("boolean:x"), InputError);
  CHECK_THROWS_AS(generate(io::catalog_spec_from_text("mystery:1")), InputError);
}

TEST_CASE("affine point json") {
  const affine::AffineContext ctx(boolean_lattice(2), 2);
  const auto p = io::mpoint_from_json(ctx, json::parse(R"({"u":["1/2",1],"jumps":{"1":"{1}"}})"));
  CHECK(p.u == std::vector<std::int64_t>{1, 2});
  CHECK(io::mpoint_from_json(ctx, io::to_json(ctx, p)) == p);
  CHECK_THROWS_AS(io::mpoint_from_json(ctx, json::parse(R"({"u":["1/3",1]})")), InputError);
  CHECK(io::rational_text(affine::Rational(3, 2)) == "3/2");
  CHECK(io::rational_text(affine::Rational(4)) == "4");
}

TEST_CASE("coxeter text") {
  CHECK(io::family_from_text("A_extended") == coxeter::Family::a_extended);
  CHECK(io::family_from_text("C") == coxeter::Family::c);
  CHECK_THROWS_AS(io::family_from_text("D"), InputError);
  CHECK(io::point_from_text("(1,-2)") == coxeter::Point{1, -2});
  CHECK(io::point_from_text("[3, 4]") == coxeter::Point{3, 4});
  CHECK_THROWS_AS(io::point_from_text("1,x"), InputError);
  const auto j = io::to_json(coxeter::Family::c, {1, 0});
  CHECK(j["family"] == "C");
  CHECK(j["coords"] == json::array({1, 0}));
}

TEST_CASE("loop length") {
  const auto l = cli::loop_length_value();
  const double expect = 2 * std::acos(std::sqrt(14.0 / 25)) + 4 * std::acos(std::sqrt(13.0 / 35));
  CHECK(l.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(l.value == doctest::Approx(5.1122).epsilon(1e-4));
  CHECK(l.ratio_to_2pi == doctest::Approx(l.value / (2 * std::numbers::pi)));
  CHECK(l.less_than_2pi);
}

TEST_CASE("suite registry and reports") {
  const auto& reg = cli::registry();
  CHECK(reg.size() == 11);
  std::set<std::string> names;
  for (const auto& s : reg) names.insert(s.name);
  CHECK(names.size() == reg.size());
  CHECK_THROWS_AS(cli::find_suite("nope"), InputError);
  CHECK_THROWS_AS(cli::run_suite("nope", {}), InputError);

  const cli::SuiteConfig cfg{7, 1000};
  const auto a = cli::run_suite("loop-length-numeric", cfg);
  const auto b = cli::run_suite("loop-length-numeric", cfg);
  REQUIRE(a.size() == 1);
  CHECK(a[0].status == cli::Status::pass);
  const auto ja = cli::to_json(a[0], false), jb = cli::to_json(b[0], false);
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["millis"] == 0);
  CHECK(ja["seed"] == 7);
  for (const char* key : {"suite", "theorem", "status", "witness", "seed", "millis"}) CHECK(ja.contains(key));
  CHECK(cli::status_name(cli::Status::skipped) == "skipped");
}

TEST_CASE("tight caps turn into skipped reports") {
  const auto r = cli::run_one(cli::find_suite("garside-thickening-helly"), {1, 10});
  CHECK(r.status == cli::Status::skipped);
}
