#include "hellylat/helly.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "hellylat/errors.hpp"

namespace hellylat {

SimpleGraph::SimpleGraph(std::vector<std::string> vertices) : ids_(std::move(vertices)) {
  std::set<std::string> seen(ids_.begin(), ids_.end());
  if (seen.size() != ids_.size()) throw InputError("graph: duplicate vertex identifiers");
  adj_.assign(ids_.size(), Bits(ids_.size()));
}

std::size_t SimpleGraph::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw InputError("graph: unknown vertex '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw InputError("graph: edge endpoint out of range");
  if (u == v) throw InputError("graph: loops are not allowed (" + ids_[u] + ")");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = adj_[u].next(u + 1); v < size(); v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& row : adj_) deg += row.count();
  return deg / 2;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kInf);
  if (source >= g.size()) throw InputError("bfs: source out of range");
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    const auto& nb = g.neighbors(u);
    for (auto v = nb.first(); v < g.size(); v = nb.next(v + 1))
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

Bits ball(const SimpleGraph& g, const BallSpec& b) {
  if (b.center >= g.size()) throw InputError("ball: center out of range");
  Bits seen(g.size());
  seen.set(b.center);
  Bits frontier(g.size());
  frontier.set(b.center);
  for (std::size_t r = 0; r < b.radius && frontier.any(); ++r) {
    Bits next(g.size());
    for (auto u = frontier.first(); u < g.size(); u = frontier.next(u + 1))
      next |= g.neighbors(u);
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<std::size_t> ball_vertices(const SimpleGraph& g, const BallSpec& b) {
  return ball(g, b).indices();
}

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<Bits>& adj, std::size_t cap) : adj_(adj), cap_(cap) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t n = adj_.size();
    Bits p(n), x(n);
    for (std::size_t v = 0; v < n; ++v) p.set(v);
    std::vector<std::size_t> r;
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  void expand(std::vector<std::size_t>& r, Bits& p, Bits& x) {
    const std::size_t n = adj_.size();
    if (p.none()) {
      if (x.none()) {
        if (out_.size() >= cap_) throw CapExceeded("maximal clique count exceeds cap");
        out_.push_back(r);
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    std::size_t pivot = n, best = 0;
    const Bits px = p | x;
    for (auto u = px.first(); u < n; u = px.next(u + 1)) {
      const auto c = (p & adj_[u]).count();
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    }
    Bits candidates = p;
    candidates.subtract(adj_[pivot]);
    for (auto v = candidates.first(); v < n; v = candidates.next(v + 1)) {
      r.push_back(v);
      Bits np = p & adj_[v];
      Bits nx = x & adj_[v];
      expand(r, np, nx);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const SimpleGraph& g, std::size_t cap) {
  std::vector<Bits> adj;
  adj.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  return CliqueEnumerator(adj, cap).run();
}

HellyReport set_family_helly(std::span<const Bits> sets, std::size_t cap) {
  const std::size_t m = sets.size();
  HellyReport rep;
  if (m == 0) return rep;
  std::vector<Bits> meets(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sets[i].intersects(sets[j])) {
        meets[i].set(j);
        meets[j].set(i);
      }
  // Empty members intersect nothing and form singleton families.
  for (std::size_t i = 0; i < m; ++i)
    if (sets[i].none()) {
      rep.pass = false;
      rep.violation = {i};
      return rep;
    }
  auto families = CliqueEnumerator(meets, cap).run();
  rep.families_checked = families.size();
  for (auto& fam : families) {
    Bits common = sets[fam.front()];
    for (std::size_t k = 1; k < fam.size() && common.any(); ++k) common &= sets[fam[k]];
    if (common.none()) {
      rep.pass = false;
      std::sort(fam.begin(), fam.end());
      rep.violation = std::move(fam);
      return rep;
    }
  }
  return rep;
}

HellyReport helly_check(const SimpleGraph& g, std::span<const BallSpec> family,
                        std::size_t cap) {
  std::vector<Bits> sets;
  sets.reserve(family.size());
  for (const auto& b : family) sets.push_back(ball(g, b));
  return set_family_helly(sets, cap);
}

std::vector<BallSpec> window_family(const HellyWindow& w) {
  std::vector<BallSpec> fam;
  for (auto c : w.core)
    for (std::size_t r = 0; r <= w.max_radius; ++r) fam.push_back({c, r});
  return fam;
}

HellyReport helly_check(const SimpleGraph& g, const HellyWindow& w, std::size_t cap) {
  const auto fam = window_family(w);
  return helly_check(g, std::span<const BallSpec>(fam), cap);
}

HellyReport clique_helly_check(const SimpleGraph& g, std::size_t cap,
                               std::vector<std::vector<std::size_t>>* cliques_out) {
  auto cliques = maximal_cliques(g, cap);
  std::vector<Bits> sets;
  sets.reserve(cliques.size());
  for (const auto& c : cliques) {
    Bits b(g.size());
    for (auto v : c) b.set(v);
    sets.push_back(std::move(b));
  }
  auto rep = set_family_helly(sets, cap);
  if (cliques_out) *cliques_out = std::move(cliques);
  return rep;
}

MetricSample::MetricSample(std::vector<std::string> points, std::vector<double> dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
  const std::size_t n = points_.size();
  if (dist_.size() != n * n) throw InputError("metric sample: table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(this->dist(i, i)) > kMetricTolerance)
      throw InputError("metric sample: non-zero diagonal at " + points_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double d = this->dist(i, j);
      if (!std::isfinite(d) || d < -kMetricTolerance)
        throw InputError("metric sample: negative or non-finite distance");
      if (std::abs(d - this->dist(j, i)) > kMetricTolerance)
        throw InputError("metric sample: asymmetric distance");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (this->dist(i, k) > this->dist(i, j) + this->dist(j, k) + kMetricTolerance)
          throw InputError("metric sample: triangle inequality fails at " + points_[i] +
                           ", " + points_[j] + ", " + points_[k]);
}

SimpleGraph epsilon_graph(const MetricSample& m, double eps) {
  if (!(eps > 0)) throw InputError("epsilon_graph: eps must be positive");
  SimpleGraph g(m.points());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.dist(i, j) <= eps + kMetricTolerance) g.add_edge(i, j);
  return g;
}

std::optional<std::size_t> coarse_injectivity_check(const MetricSample& m,
                                                     std::span<const MetricBall> family,
                                                     double eps) {
  if (eps < 0) throw InputError("coarse_injectivity_check: eps must be non-negative");
  for (const auto& b : family)
    if (b.center >= m.size() || b.radius < 0)
      throw InputError("coarse_injectivity_check: invalid ball");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (m.dist(family[i].center, family[j].center) >
          family[i].radius + family[j].radius + kMetricTolerance)
        throw InputError("coarse_injectivity_check: family is ill-posed (balls " +
                         std::to_string(i) + " and " + std::to_string(j) +
                         " cannot intersect)");
  for (std::size_t p = 0; p < m.size(); ++p) {
    bool inside = true;
    for (std::size_t i = 0; i < family.size() && inside; ++i)
      inside = m.dist(p, family[i].center) <= family[i].radius + eps + kMetricTolerance;
    if (inside) return p;
  }
  return std::nullopt;
}

SimpleGraph thickening_from_ordered_complex(std::vector<std::string> ids,
                                            const std::vector<std::uint8_t>& below) {
  const std::size_t n = ids.size();
  if (below.size() != n * n) throw InputError("thickening: relation table has wrong size");
  std::vector<Bits> up(n, Bits(n)), down(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    up[a].set(a);
    down[a].set(a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && below[a * n + b]) {
        up[a].set(b);
        down[b].set(a);
      }
  SimpleGraph g(std::move(ids));
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = up[a].first(); b < n; b = up[a].next(b + 1)) {
      const Bits span = up[a] & down[b];
      const auto members = span.indices();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (!g.adjacent(members[i], members[j])) g.add_edge(members[i], members[j]);
    }
  return g;
}

SimpleGraph thickening_from_poset(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) rel[a * n + b] = p.lt(a, b) ? 1 : 0;
  return thickening_from_ordered_complex(p.ids(), rel);
}

}  // namespace hellylat
