#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hellylat/bits.hpp"
#include "hellylat/poset.hpp"

namespace hellylat {

/// Undirected simple graph with a dense adjacency matrix (bit rows).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertices);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t index_of(const std::string& id) const;

  /// Throws InputError on loops or out-of-range endpoints; repeated edges are
  /// harmless.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bits& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Bits> adj_;
};

struct BallSpec {
  std::size_t center = 0;
  std::size_t radius = 0;
};

/// Combinatorial ball by BFS; unreachable vertices are excluded.
Bits ball(const SimpleGraph& g, const BallSpec& b);
std::vector<std::size_t> ball_vertices(const SimpleGraph& g, const BallSpec& b);
/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source);

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting. Throws CapExceeded
/// once more than `cap` cliques are produced.
std::vector<std::vector<std::size_t>> maximal_cliques(const SimpleGraph& g,
                                                      std::size_t cap = 1'000'000);

struct HellyReport {
  bool pass = true;
  /// On failure: indices (into the checked family) of a pairwise
  /// intersecting subfamily with empty intersection.
  std::vector<std::size_t> violation;
  std::size_t families_checked = 0;  // maximal pairwise-intersecting subfamilies
};

/// Helly test for an arbitrary family of vertex sets: every maximal
/// pairwise-intersecting subfamily must have a common vertex.
HellyReport set_family_helly(std::span<const Bits> sets, std::size_t cap = 1'000'000);

HellyReport helly_check(const SimpleGraph& g, std::span<const BallSpec> family,
                        std::size_t cap = 1'000'000);

/// Exhaustive configuration: every ball with center in `core` and radius
/// 0..max_radius. The caller chooses `core` with enough margin that no such
/// ball (and no geodesic inside it) reaches the truncated border of `g`.
struct HellyWindow {
  std::vector<std::size_t> core;
  std::size_t max_radius = 1;
};

std::vector<BallSpec> window_family(const HellyWindow& w);
HellyReport helly_check(const SimpleGraph& g, const HellyWindow& w,
                        std::size_t cap = 1'000'000);

/// Helly property of the family of maximal cliques. On failure the
/// violation indexes into `cliques` (if requested).
HellyReport clique_helly_check(const SimpleGraph& g, std::size_t cap = 1'000'000,
                               std::vector<std::vector<std::size_t>>* cliques = nullptr);

/// Finite metric sample with a dense symmetric distance table. Comparisons use
/// an absolute tolerance of kMetricTolerance.
inline constexpr double kMetricTolerance = 1e-9;

class MetricSample {
 public:
  MetricSample() = default;
  /// Validates zero diagonal, symmetry, non-negativity and the triangle
  /// inequality; throws InputError otherwise.
  MetricSample(std::vector<std::string> points, std::vector<double> dist);

  template <class Fn>
  static MetricSample from_function(std::vector<std::string> points, Fn&& d) {
    const std::size_t n = points.size();
    std::vector<double> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i * n + j] = i == j ? 0.0 : d(i, j);
    return MetricSample(std::move(points), std::move(t));
  }

  std::size_t size() const { return points_.size(); }
  double dist(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const { return points_; }

 private:
  std::vector<std::string> points_;
  std::vector<double> dist_;
};

/// Edge between distinct points at distance <= eps.
SimpleGraph epsilon_graph(const MetricSample& m, double eps);

struct MetricBall {
  std::size_t center = 0;
  double radius = 0.0;
};

/// Finds a sample point within radius_i + eps of every center. Throws
/// InputError when some pair violates d(x_i, x_j) <= r_i + r_j.
std::optional<std::size_t> coarse_injectivity_check(const MetricSample& m,
                                                     std::span<const MetricBall> family,
                                                     double eps);

/// Thickening of an ordered simplicial complex given by its strict
/// comparability relation (`below[a*n+b]` true iff a < b lie in a common
/// simplex). The complex is assumed flag, so a chain a < x < b is a simplex
/// exactly when its three pairs are related. Degenerate chains are allowed:
/// x ~ y iff both lie in some closed interval {z : a <= z <= b}.
SimpleGraph thickening_from_ordered_complex(std::vector<std::string> ids,
                                            const std::vector<std::uint8_t>& below);

/// Thickening of the order complex of a poset.
SimpleGraph thickening_from_poset(const FinitePoset& p);

}  // namespace hellylat
