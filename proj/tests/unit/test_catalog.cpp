#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "hellylat/catalog.hpp"
#include "hellylat/errors.hpp"
#include "oracles.hpp"

using namespace hellylat;

namespace {

// Subspaces of F_2^n as sets of vectors (bitmasks) closed under addition.
std::vector<std::uint32_t> f2_subspaces(int n) {
  const std::uint32_t vectors = 1u << n;
  std::set<std::uint64_t> seen;
  std::vector<std::uint32_t> out;
  // Close spans of all vector subsets reachable by adding one vector at a time.
  std::vector<std::uint64_t> frontier{1};  // {0} as a set bitmask over vectors
  seen.insert(1);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      for (std::uint32_t v = 0; v < vectors; ++v) {
        if (s >> v & 1) continue;
        std::uint64_t t = s;
        for (std::uint32_t w = 0; w < vectors; ++w)
          if (s >> w & 1) t |= std::uint64_t{1} << (w ^ v);
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  for (auto s : seen) out.push_back(static_cast<std::uint32_t>(__builtin_popcountll(s)));
  return out;
}

int symplectic(std::uint32_t x, std::uint32_t y, int m) {
  int s = 0;
  for (int i = 0; i < m; ++i)
    s ^= ((x >> i & 1) & (y >> (m + i) & 1)) ^ ((x >> (m + i) & 1) & (y >> i & 1));
  return s;
}

}  // namespace

TEST_CASE("boolean lattices") {
  const auto b = boolean_lattice(3);
  CHECK(b.size() == 8);
  CHECK(*analyze(b).rank == 3);
  for (int n = 0; n <= 5; ++n) CHECK(analyze(boolean_lattice(n)).lattice);
  CHECK(b.id(0) == "{}");
  CHECK(b.id(5) == "{1,3}");
}

TEST_CASE("subspace posets: sizes from an independent enumeration") {
  const auto sub23 = subspace_poset(2, 3);
  CHECK(sub23.size() == 16);
  CHECK(f2_subspaces(3).size() == 16);
  CHECK(subspace_poset(2, 4).size() == f2_subspaces(4).size());
  std::map<int, int> by_size;
  for (auto c : f2_subspaces(3)) ++by_size[c];
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 7);
  CHECK(by_size[4] == 7);
  CHECK(by_size[8] == 1);
  CHECK(subspace_poset(3, 3).size() == 1 + 13 + 13 + 1);
  CHECK(subspace_poset(4, 2).size() == 1 + 5 + 1);
  CHECK(subspace_poset(5, 2).size() == 1 + 6 + 1);
  CHECK_THROWS_AS(subspace_poset(6, 2), InputError);
}

TEST_CASE("subspace posets are bowtie-free lattices with rank = dimension") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    const auto p = subspace_poset(q, n);
    const auto prof = analyze(p);
    CHECK(prof.lattice);
    CHECK(*prof.rank == static_cast<std::size_t>(n));
    CHECK_FALSE(find_bowtie(p));
  }
  // meet is intersection and join is span.
  const auto p = subspace_poset(2, 3);
  const auto a = p.index_of(span_label(2, {{1, 0, 0}, {0, 1, 0}}));
  const auto b = p.index_of(span_label(2, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(p.id(bound(p, a, b, BoundKind::meet).element) == span_label(2, {{0, 1, 0}}));
  CHECK(p.id(bound(p, a, b, BoundKind::join).element) == span_label(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("polar space over F_2 in dimension 4") {
  const auto p = polar_space(2, 4);
  CHECK(p.size() == 31);
  // Totally isotropic planes: pairs of independent vectors with vanishing form.
  std::set<std::pair<std::uint32_t, std::uint32_t>> planes;
  for (std::uint32_t x = 1; x < 16; ++x)
    for (std::uint32_t y = 1; y < 16; ++y)
      if (x != y && symplectic(x, y, 2) == 0) {
        std::uint32_t pts[3] = {x, y, x ^ y};
        std::sort(pts, pts + 3);
        planes.insert({pts[0], pts[1]});
      }
  CHECK(planes.size() == 15);
  const auto prof = analyze(p);
  CHECK(prof.meet_semilattice);
  CHECK(prof.flag);
  CHECK(prof.graded);
  CHECK_FALSE(prof.bounded_above);
  CHECK_THROWS_AS(polar_space(2, 3), InputError);
}

TEST_CASE("weak order") {
  const auto w = weak_order(4);
  CHECK(w.size() == 24);
  const auto prof = analyze(w);
  CHECK(prof.lattice);
  REQUIRE(prof.bounded_above);
  CHECK(w.id(*prof.bounded_above) == "4321");
  CHECK(w.id(0) == "1234");
  for (int n = 1; n <= 4; ++n) CHECK(analyze(weak_order(n)).lattice);
  // Inversion-set inclusion, recomputed here.
  auto inversions = [](const std::string& s) {
    std::set<std::pair<char, char>> inv;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s[i] > s[j]) inv.insert({s[j], s[i]});
    return inv;
  };
  for (Elem a = 0; a < w.size(); ++a)
    for (Elem b = 0; b < w.size(); ++b) {
      const auto ia = inversions(w.id(a)), ib = inversions(w.id(b));
      CHECK(w.leq(a, b) == std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()));
    }
}

TEST_CASE("noncrossing partitions and partition lattices") {
  CHECK(noncrossing_partitions(4).size() == 14);
  CHECK(noncrossing_partitions(5).size() == 42);
  CHECK(partition_lattice(4).size() == 15);
  CHECK(partition_lattice(5).size() == 52);
  CHECK(analyze(noncrossing_partitions(4)).lattice);
}

TEST_CASE("fc_local posets") {
  SimpleGraph edge({"s", "t"});
  edge.add_edge(0, 1);
  const auto e = fc_local_poset(edge);
  CHECK(e.size() == 4);
  CHECK(isomorphic(e, boolean_lattice(2)));

  SimpleGraph path({"s", "t", "u"});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto p = fc_local_poset(path);
  CHECK(p.size() == 6);
  for (const char* id : {"1", "s", "t", "u", "st", "tu"}) CHECK(p.find(id).has_value());
  const auto prof = analyze(p);
  CHECK(prof.meet_semilattice);
  CHECK(prof.flag);
  CHECK_FALSE(prof.lattice);

  SimpleGraph tri({"s", "t", "u"});
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(isomorphic(fc_local_poset(tri), boolean_lattice(3)));

  CHECK_THROWS_AS(fc_local_poset(path, {{0, 1, 3}}), InputError);
  CHECK_THROWS_AS(fc_local_poset(path, {{0, 2, 2}}), InputError);
}

TEST_CASE("fc_local posets over all graphs on at most five vertices") {
  std::size_t graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::string> vs;
      for (int i = 0; i < n; ++i) vs.push_back(std::string(1, static_cast<char>('a' + i)));
      SimpleGraph g(vs);
      for (std::size_t e = 0; e < slots.size(); ++e)
        if (mask >> e & 1) g.add_edge(slots[e].first, slots[e].second);
      const auto p = fc_local_poset(g);
      const auto prof = analyze(p);
      CHECK(prof.graded);
      CHECK(prof.flag);
      CHECK(prof.meet_semilattice);
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024);
}

TEST_CASE("generate dispatch") {
  CatalogSpec s{"subspace", {{"q", 2}, {"n", 3}}, {}, {}, {}};
  CHECK(generate(s).size() == 16);
  CatalogSpec prod{"product", {}, {CatalogSpec{"chain", {{"n", 1}}, {}, {}, {}},
                                   CatalogSpec{"chain", {{"n", 2}}, {}, {}, {}}}, {}, {}};
  CHECK(generate(prod).size() == 6);
  CatalogSpec d{"dual", {}, {CatalogSpec{"weak_order", {{"n", 3}}, {}, {}, {}}}, {}, {}};
  CHECK(isomorphic(generate(d), weak_order(3)));
  CHECK_THROWS_AS(generate(CatalogSpec{"nope", {}, {}, {}, {}}), InputError);
  CHECK_THROWS_AS(generate(CatalogSpec{"boolean", {}, {}, {}, {}}), InputError);
  CHECK_THROWS_AS(generate(CatalogSpec{"boolean", {{"n", 12}}, {}, {}, {}}, 100), CapExceeded);
}

TEST_CASE("random graded posets are bounded, graded and seeded") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const int size = 2 + static_cast<int>(s % 11);
    const auto p = random_graded(s, size, 50);
    CHECK(p.size() == static_cast<std::size_t>(size));
    const auto prof = analyze(p);
    CHECK(prof.bounded());
    CHECK(oracle::is_graded(p));
    CHECK(random_graded(s, size, 50).ids() == p.ids());
  }
}

TEST_CASE("exhaustive enumeration yields bounded graded posets") {
  std::size_t count = 0;
  enumerate_bounded_graded(6, [&](const FinitePoset& p) {
    const auto prof = analyze(p);
    CHECK(prof.bounded());
    CHECK(prof.graded);
    ++count;
  });
  CHECK(count > 10);
}
