#include <random>

#include <benchmark/benchmark.h>

#include "hellylat/affine.hpp"
#include "hellylat/catalog.hpp"
#include "hellylat/garside.hpp"
#include "hellylat/helly.hpp"
#include "hellylat/poset.hpp"

using namespace hellylat;

static void bm_normal_form(benchmark::State& state) {
  const garside::SimplesLattice ctx(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<garside::Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(garside::random_word(ctx, rng, 32));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(garside::normal_form(ctx, words[i++ % words.size()]));
}
BENCHMARK(bm_normal_form)->Arg(3)->Arg(4)->Arg(5);

static void bm_affine_join(benchmark::State& state) {
  const affine::AffineContext ctx(boolean_lattice(static_cast<int>(state.range(0))));
  const auto pts = affine::window_points(ctx, 0, 3);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const auto& a = pts[rng() % pts.size()];
    const auto& b = pts[rng() % pts.size()];
    benchmark::DoNotOptimize(affine::join(ctx, a, b));
  }
}
BENCHMARK(bm_affine_join)->Arg(2)->Arg(3);

static void bm_affine_leq(benchmark::State& state) {
  const affine::AffineContext ctx(weak_order(3));
  const auto pts = affine::window_points(ctx, 0, 3);
  const auto mode = state.range(0) ? affine::LeqMode::oracle : affine::LeqMode::criterion;
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto& a = pts[rng() % pts.size()];
    const auto& b = pts[rng() % pts.size()];
    benchmark::DoNotOptimize(affine::leq(ctx, a, b, mode));
  }
}
BENCHMARK(bm_affine_leq)->Arg(0)->Arg(1);

static void bm_find_bowtie(benchmark::State& state) {
  const auto p = random_graded(5, static_cast<int>(state.range(0)), 60);
  for (auto _ : state) benchmark::DoNotOptimize(find_bowtie(p));
}
BENCHMARK(bm_find_bowtie)->Arg(8)->Arg(12)->Arg(16);

static void bm_analyze(benchmark::State& state) {
  const auto p = partition_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(p));
}
BENCHMARK(bm_analyze)->Arg(4)->Arg(5);

static void bm_maximal_cliques(benchmark::State& state) {
  const auto g = thickening_from_poset(partition_lattice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(bm_maximal_cliques)->Arg(4)->Arg(5);

static void bm_helly_window(benchmark::State& state) {
  const garside::SimplesLattice ctx(3);
  const auto pts = garside::interval(ctx, garside::delta_power(-2), garside::delta_power(2));
  std::vector<std::string> ids;
  for (const auto& g : pts) ids.push_back(garside::format(ctx, g));
  const std::size_t m = pts.size();
  std::vector<std::uint8_t> below(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto top = garside::multiply(ctx, pts[a], garside::delta_power(1));
    for (std::size_t c = 0; c < m; ++c)
      below[a * m + c] = a != c && garside::prefix_leq(ctx, pts[a], pts[c]) && garside::prefix_leq(ctx, pts[c], top);
  }
  const auto graph = thickening_from_ordered_complex(ids, below);
  HellyWindow w;
  for (std::size_t v = 0; v < m; ++v)
    if (garside::prefix_leq(ctx, garside::identity_element(), pts[v]) &&
        garside::prefix_leq(ctx, pts[v], garside::delta_power(1)))
      w.core.push_back(v);
  w.max_radius = 1;
  for (auto _ : state) benchmark::DoNotOptimize(helly_check(graph, w));
}
BENCHMARK(bm_helly_window);
BENCHMARK_MAIN();
