#include "hellylat/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hellylat/errors.hpp"

namespace hellylat::affine {

AffineContext::AffineContext(FinitePoset base, std::int64_t denom)
    : AffineContext(std::make_shared<const FinitePoset>(std::move(base)), denom, true) {}

AffineContext::AffineContext(std::shared_ptr<const FinitePoset> base, std::int64_t denom,
                             bool with_dual)
    : base_(std::move(base)), denom_(denom) {
  if (denom_ < 1) throw InputError("affine: denominator must be positive");
  const auto prof = analyze(*base_);
  if (!prof.lattice || !prof.graded || !prof.rank)
    throw InputError("affine: base must be a bounded graded lattice");
  if (*prof.rank < 1) throw InputError("affine: base must have rank at least 1");
  n_ = static_cast<int>(*prof.rank);
  bottom_ = *prof.bounded_below;
  top_ = *prof.bounded_above;
  const auto r = rank_function(*base_);
  ranks_.assign(r.begin(), r.end());
  by_rank_.assign(n_ + 1, {});
  for (Elem e = 0; e < base_->size(); ++e) by_rank_[ranks_[e]].push_back(e);
  const std::size_t m = base_->size();
  meet_.assign(m * m, kNoElem);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a; b < m; ++b) {
      const auto res = bound(*base_, a, b, BoundKind::meet);
      meet_[a * m + b] = meet_[b * m + a] = res.element;
    }
  if (with_dual)
    dual_ = std::shared_ptr<const AffineContext>(
        new AffineContext(std::make_shared<const FinitePoset>(base_->dual()), denom_, false));
}

const AffineContext& AffineContext::dual() const {
  if (!dual_) throw PreconditionError("affine: dual context not available here");
  return *dual_;
}

std::map<std::size_t, Elem> MPoint::jumps() const {
  std::map<std::size_t, Elem> out;
  for (std::size_t k = 1; k < u.size(); ++k)
    if (is_jump(k)) out[k] = entry[k];
  return out;
}

void validate(const AffineContext& ctx, const MPoint& p) {
  const auto n = static_cast<std::size_t>(ctx.rank());
  if (p.u.size() != n || p.entry.size() != n + 1)
    throw InputError("affine: point has the wrong dimension");
  for (std::size_t k = 1; k < n; ++k)
    if (p.u[k - 1] > p.u[k]) throw InputError("affine: coordinates must be weakly increasing");
  if (p.entry[0] != ctx.bottom() || p.entry[n] != ctx.top())
    throw InputError("affine: end entries must be the bounds of the lattice");
  Elem prev = ctx.bottom();
  for (std::size_t k = 1; k < n; ++k) {
    if (!p.is_jump(k)) {
      if (p.entry[k] != kNoElem) throw InputError("affine: entry stored at a non-jump position");
      continue;
    }
    const Elem e = p.entry[k];
    if (e >= ctx.base().size() || ctx.rank_of(e) != static_cast<int>(k))
      throw InputError("affine: jump entry at position " + std::to_string(k) +
                       " must have rank " + std::to_string(k));
    if (!ctx.leq(prev, e)) throw InputError("affine: jump entries do not form a chain");
    prev = e;
  }
}

MPoint make_point_units(const AffineContext& ctx, std::span<const Elem> chain,
                        std::vector<std::int64_t> u) {
  const auto n = static_cast<std::size_t>(ctx.rank());
  if (chain.size() != n + 1) throw InputError("affine: chain must have rank+1 elements");
  if (chain.front() != ctx.bottom() || chain.back() != ctx.top())
    throw InputError("affine: chain must run from the minimum to the maximum");
  for (std::size_t k = 0; k <= n; ++k) {
    if (chain[k] >= ctx.base().size() || ctx.rank_of(chain[k]) != static_cast<int>(k))
      throw InputError("affine: chain is not maximal");
    if (k && !ctx.leq(chain[k - 1], chain[k])) throw InputError("affine: chain is not maximal");
  }
  if (u.size() != n) throw InputError("affine: need exactly rank coordinates");
  for (std::size_t k = 1; k < n; ++k)
    if (u[k - 1] > u[k]) throw InputError("affine: coordinates must be weakly increasing");
  MPoint p{std::move(u), std::vector<Elem>(n + 1, kNoElem)};
  p.entry[0] = ctx.bottom();
  p.entry[n] = ctx.top();
  for (std::size_t k = 1; k < n; ++k)
    if (p.is_jump(k)) p.entry[k] = chain[k];
  return p;
}

MPoint make_point(const AffineContext& ctx, std::span<const Elem> chain,
                  std::span<const Rational> u) {
  std::vector<std::int64_t> units;
  for (const auto& x : u) {
    const Rational scaled = x * ctx.denom();
    if (scaled.denominator() != 1)
      throw InputError("affine: coordinate is not a multiple of 1/" + std::to_string(ctx.denom()));
    units.push_back(scaled.numerator());
  }
  return make_point_units(ctx, chain, std::move(units));
}

MPoint point_from_jumps(const AffineContext& ctx, std::vector<std::int64_t> u,
                        const std::map<std::size_t, Elem>& jumps) {
  const auto n = static_cast<std::size_t>(ctx.rank());
  MPoint p{std::move(u), std::vector<Elem>(n + 1, kNoElem)};
  if (p.u.size() != n) throw InputError("affine: need exactly rank coordinates");
  p.entry[0] = ctx.bottom();
  p.entry[n] = ctx.top();
  for (auto [k, e] : jumps) {
    if (k == 0 || k >= n) throw InputError("affine: jump position out of range");
    p.entry[k] = e;
  }
  for (std::size_t k = 1; k < n; ++k)
    if (p.is_jump(k) && p.entry[k] == kNoElem)
      throw InputError("affine: missing entry for jump " + std::to_string(k));
  validate(ctx, p);
  return p;
}

MPoint constant_point(const AffineContext& ctx, std::int64_t t) {
  const auto n = static_cast<std::size_t>(ctx.rank());
  MPoint p{std::vector<std::int64_t>(n, t), std::vector<Elem>(n + 1, kNoElem)};
  p.entry[0] = ctx.bottom();
  p.entry[n] = ctx.top();
  return p;
}

std::vector<ElementaryStep> admissible_steps(const AffineContext& ctx, const MPoint& a) {
  const int n = ctx.rank();
  std::vector<ElementaryStep> out;
  for (int j = 1; j <= n; ++j) {
    if (j < n && a.u[j - 1] == a.u[j]) continue;  // j must end a block
    int i0 = j;
    while (i0 > 1 && a.u[i0 - 2] == a.u[j - 1]) --i0;
    const Elem lower = a.entry[i0 - 1];
    const Elem upper = a.entry[j];
    for (int i = i0; i <= j; ++i)
      for (Elem b : ctx.of_rank(i - 1))
        if (ctx.leq(lower, b) && ctx.leq(b, upper)) out.push_back({i, j, b});
  }
  return out;
}

MPoint apply_step(const AffineContext& ctx, const MPoint& a, const ElementaryStep& s) {
  const int n = ctx.rank();
  const int i = s.i, j = s.j;
  if (i < 1 || i > j || j > n) throw InputError("affine: step positions out of range");
  if (j < n && a.u[j - 1] >= a.u[j]) throw InputError("affine: step must end a block");
  int i0 = j;
  while (i0 > 1 && a.u[i0 - 2] == a.u[j - 1]) --i0;
  if (i < i0) throw InputError("affine: step must stay inside a block");
  if (s.b >= ctx.base().size() || ctx.rank_of(s.b) != i - 1 ||
      !ctx.leq(a.entry[i0 - 1], s.b) || !ctx.leq(s.b, a.entry[j]))
    throw InputError("affine: step element outside the admissible interval");

  MPoint v{a.u, std::vector<Elem>(n + 1, kNoElem)};
  for (int k = i; k <= j; ++k) v.u[k - 1] = a.u[j - 1] + 1;
  v.entry[0] = ctx.bottom();
  v.entry[n] = ctx.top();
  for (int k = 1; k < n; ++k) {
    if (!v.is_jump(k)) continue;
    if (k <= i0 - 1 || k >= j) {
      v.entry[k] = a.entry[k];
    } else if (k == i - 1) {
      v.entry[k] = s.b;
    } else {
      throw std::logic_error("affine: unexpected jump after elementary step");
    }
  }
  return v;
}

std::vector<MPoint> elementary_superiors(const AffineContext& ctx, const MPoint& a) {
  std::vector<MPoint> out;
  for (const auto& s : admissible_steps(ctx, a)) out.push_back(apply_step(ctx, a, s));
  return out;
}

std::optional<ElementaryStep> step_between(const AffineContext& ctx, const MPoint& a,
                                           const MPoint& b) {
  const int n = ctx.rank();
  int i = 0, j = 0;
  for (int k = 1; k <= n; ++k) {
    if (b.u[k - 1] == a.u[k - 1]) continue;
    if (b.u[k - 1] != a.u[k - 1] + 1) return std::nullopt;
    if (!i) i = k;
    if (j && j != k - 1) return std::nullopt;
    j = k;
  }
  if (!i) return std::nullopt;
  int i0 = j;
  while (i0 > 1 && a.u[i0 - 2] == a.u[j - 1]) --i0;
  if (i < i0) return std::nullopt;
  const ElementaryStep s{i, j, i > i0 ? b.entry[i - 1] : a.entry[i0 - 1]};
  if (s.b == kNoElem) return std::nullopt;
  try {
    if (apply_step(ctx, a, s) == b) return s;
  } catch (const InputError&) {
  }
  return std::nullopt;
}

namespace {

bool criterion_leq(const AffineContext& ctx, const MPoint& a, const MPoint& b) {
  const int n = ctx.rank();
  for (int k = 0; k < n; ++k)
    if (a.u[k] > b.u[k]) return false;
  for (int j = 1; j < n; ++j) {
    if (!a.is_jump(j)) continue;
    const auto level = a.u[j];  // u_{j+1}
    int i = 0;
    while (b.u[i] < level) ++i;  // first i with v_{i+1} >= u_{j+1}
    const Elem bi = b.entry[i];
    if (bi == kNoElem) throw std::logic_error("affine: criterion reached a non-jump entry");
    if (!ctx.leq(bi, a.entry[j])) return false;
  }
  return true;
}

bool oracle_leq(const AffineContext& ctx, const MPoint& a, const MPoint& b) {
  const int n = ctx.rank();
  auto below = [&](const MPoint& p) {
    for (int k = 0; k < n; ++k)
      if (p.u[k] > b.u[k]) return false;
    return true;
  };
  if (!below(a)) return false;
  std::set<MPoint> seen{a};
  std::deque<MPoint> queue{a};
  while (!queue.empty()) {
    auto p = std::move(queue.front());
    queue.pop_front();
    if (p == b) return true;
    for (auto& q : elementary_superiors(ctx, p))
      if (below(q) && seen.insert(q).second) queue.push_back(std::move(q));
  }
  return false;
}

}  // namespace

bool leq(const AffineContext& ctx, const MPoint& a, const MPoint& b, LeqMode mode) {
  return mode == LeqMode::criterion ? criterion_leq(ctx, a, b) : oracle_leq(ctx, a, b);
}

MPoint translate_units(const MPoint& a, std::int64_t t) {
  MPoint p = a;
  for (auto& x : p.u) x += t;
  return p;
}

MPoint translate(const AffineContext& ctx, const MPoint& a, const Rational& t) {
  const Rational scaled = t * ctx.denom();
  if (scaled.denominator() != 1) throw InputError("affine: translation not in H");
  return translate_units(a, scaled.numerator());
}

namespace {

using Path = std::vector<MPoint>;  // successive elementary superiors, start excluded

Path greedy_path(const AffineContext& ctx, MPoint from, const MPoint& to) {
  Path path;
  while (!(from == to)) {
    bool moved = false;
    for (auto& s : elementary_superiors(ctx, from))
      if (criterion_leq(ctx, s, to)) {
        from = std::move(s);
        path.push_back(from);
        moved = true;
        break;
      }
    if (!moved) throw std::logic_error("affine: no elementary step towards an upper point");
  }
  return path;
}

// Join of two elementary superiors of a.
MPoint base_join(const AffineContext& ctx, const MPoint& a, const MPoint& b, const MPoint& c) {
  if (b == c) return b;
  const auto sb = step_between(ctx, a, b);
  const auto sc = step_between(ctx, a, c);
  if (!sb || !sc) throw std::logic_error("affine: join path is not elementary");
  if (sb->j != sc->j) {
    // Disjoint blocks: the two steps commute.
    return apply_step(ctx, b, *sc);
  }
  const Elem g = ctx.meet(sb->b, sc->b);
  return apply_step(ctx, a, {ctx.rank_of(g) + 1, sb->j, g});
}

struct JoinResult {
  MPoint delta;
  Path from_b;  // b -> delta
  Path from_c;  // c -> delta
};

JoinResult join_paths(const AffineContext& ctx, const MPoint& a, const Path& p, const Path& q) {
  if (p.empty()) return {q.empty() ? a : q.back(), q, {}};
  if (q.empty()) return {p.back(), {}, p};
  if (p.size() == 1 && q.size() == 1) {
    auto d = base_join(ctx, a, p[0], q[0]);
    Path pb, pc;
    if (!(d == p[0])) pb.push_back(d);
    if (!(d == q[0])) pc.push_back(d);
    return {std::move(d), std::move(pb), std::move(pc)};
  }
  if (p.size() < 2) {
    auto r = join_paths(ctx, a, q, p);
    std::swap(r.from_b, r.from_c);
    return r;
  }
  // Join the first step of p with c, then the rest of p with that join.
  auto first = join_paths(ctx, a, Path{p[0]}, q);
  const Path rest(p.begin() + 1, p.end());
  auto second = join_paths(ctx, p[0], rest, first.from_b);
  Path from_c = std::move(first.from_c);
  from_c.insert(from_c.end(), second.from_c.begin(), second.from_c.end());
  return {std::move(second.delta), std::move(second.from_b), std::move(from_c)};
}

}  // namespace

MPoint join(const AffineContext& ctx, const MPoint& b, const MPoint& c) {
  if (criterion_leq(ctx, b, c)) return c;
  if (criterion_leq(ctx, c, b)) return b;
  const int n = ctx.rank();
  // Shift b below every coordinate of c to get a common lower bound.
  const std::int64_t k = std::max<std::int64_t>(0, b.u[n - 1] - c.u[0] + 1);
  const MPoint a = translate_units(b, -k);
  return join_paths(ctx, a, greedy_path(ctx, a, b), greedy_path(ctx, a, c)).delta;
}

MPoint to_dual(const MPoint& a) {
  const std::size_t n = a.u.size();
  MPoint d{std::vector<std::int64_t>(n), std::vector<Elem>(n + 1)};
  for (std::size_t k = 0; k < n; ++k) d.u[k] = -a.u[n - 1 - k];
  for (std::size_t k = 0; k <= n; ++k) d.entry[k] = a.entry[n - k];
  return d;
}

MPoint meet(const AffineContext& ctx, const MPoint& b, const MPoint& c) {
  return to_dual(join(ctx.dual(), to_dual(b), to_dual(c)));
}

namespace {

bool within(const AffineContext& ctx, const MPoint& x, const MPoint& y, std::int64_t t) {
  return criterion_leq(ctx, translate_units(x, -t), y) &&
         criterion_leq(ctx, y, translate_units(x, t));
}

// Least t in [0, hi] (multiple of `step`) with within(x, y, t); hi must
// satisfy the predicate.
std::int64_t search_distance(const AffineContext& ctx, const MPoint& x, const MPoint& y,
                             std::int64_t hi_steps, std::int64_t step) {
  std::int64_t lo = 0, hi = hi_steps;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (within(ctx, x, y, mid * step)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t distance_bound(const MPoint& x, const MPoint& y) {
  const auto n = x.u.size();
  return std::max<std::int64_t>({x.u[n - 1] - y.u[0], y.u[n - 1] - x.u[0], 0});
}

}  // namespace

std::int64_t distance_units(const AffineContext& ctx, const MPoint& x, const MPoint& y) {
  return search_distance(ctx, x, y, distance_bound(x, y), 1);
}

Rational distance(const AffineContext& ctx, const MPoint& x, const MPoint& y) {
  return Rational(distance_units(ctx, x, y), ctx.denom());
}

MPoint geodesic_point(const AffineContext& ctx, const MPoint& x, const MPoint& y,
                      const Rational& r) {
  const Rational scaled = r * ctx.denom();
  if (scaled.denominator() != 1) throw InputError("geodesic_point: r not in H");
  const auto ru = scaled.numerator();
  const auto d = distance_units(ctx, x, y);
  if (ru < 0 || ru > d) throw InputError("geodesic_point: r must lie in [0, d(x,y)]");
  const MPoint z = meet(ctx, translate_units(x, ru), translate_units(y, d - ru));
  if (distance_units(ctx, x, z) > ru || distance_units(ctx, z, y) > d - ru)
    throw std::logic_error("geodesic_point: witness violates the distance bounds");
  return z;
}

std::vector<MPoint> enumerate_interval(const AffineContext& ctx, const MPoint& lo,
                                       const MPoint& hi, std::size_t cap) {
  if (!criterion_leq(ctx, lo, hi)) return {};
  std::set<MPoint> seen{lo};
  std::deque<MPoint> queue{lo};
  while (!queue.empty()) {
    auto p = std::move(queue.front());
    queue.pop_front();
    for (auto& q : elementary_superiors(ctx, p)) {
      if (seen.count(q) || !criterion_leq(ctx, q, hi)) continue;
      if (seen.size() >= cap) throw CapExceeded("affine interval exceeds cap");
      seen.insert(q);
      queue.push_back(std::move(q));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<MPoint> window_points(const AffineContext& ctx, std::int64_t lo, std::int64_t hi,
                                  std::size_t cap) {
  const int n = ctx.rank();
  std::vector<MPoint> out;
  std::vector<std::int64_t> u(n, lo);
  std::function<void(int)> coords;
  std::function<void(MPoint&, int, Elem)> chains = [&](MPoint& p, int k, Elem prev) {
    if (k == n) {
      if (out.size() >= cap) throw CapExceeded("affine window exceeds cap");
      out.push_back(p);
      return;
    }
    if (!p.is_jump(k)) {
      chains(p, k + 1, prev);
      return;
    }
    for (Elem e : ctx.of_rank(k))
      if (ctx.leq(prev, e)) {
        p.entry[k] = e;
        chains(p, k + 1, e);
      }
    p.entry[k] = kNoElem;
  };
  coords = [&](int k) {
    if (k == n) {
      MPoint p{u, std::vector<Elem>(n + 1, kNoElem)};
      p.entry[0] = ctx.bottom();
      p.entry[n] = ctx.top();
      chains(p, 1, ctx.bottom());
      return;
    }
    for (auto x = k ? u[k - 1] : lo; x <= hi; ++x) {
      u[k] = x;
      coords(k + 1);
    }
  };
  if (lo <= hi) coords(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ThickeningWindow::index_of(const MPoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) throw InputError("point outside the window");
  return static_cast<std::size_t>(it - points.begin());
}

SimpleGraph thickening_graph(const AffineContext& ctx, const std::vector<MPoint>& points) {
  std::vector<std::string> ids;
  for (const auto& p : points) ids.push_back(format(ctx, p));
  SimpleGraph g(std::move(ids));
  const auto unit = ctx.denom();
  for (std::size_t a = 0; a < points.size(); ++a) {
    const auto lo = translate_units(points[a], -unit);
    const auto hi = translate_units(points[a], unit);
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (criterion_leq(ctx, lo, points[b]) && criterion_leq(ctx, points[b], hi))
        g.add_edge(a, b);
  }
  return g;
}

ThickeningWindow thickening_window(const AffineContext& ctx, const MPoint& center, int radius,
                                   std::size_t cap) {
  if (radius < 0) throw InputError("thickening_window: negative radius");
  const auto r = static_cast<std::int64_t>(radius) * ctx.denom();
  ThickeningWindow w;
  w.points = enumerate_interval(ctx, translate_units(center, -r), translate_units(center, r), cap);
  w.graph = thickening_graph(ctx, w.points);
  return w;
}

Rational orthoscheme_distance(const AffineContext& ctx, const MPoint& x, const MPoint& y,
                              std::int64_t k) {
  if (k < 1) throw InputError("orthoscheme_distance: k must be positive");
  for (const auto* p : {&x, &y})
    for (auto c : p->u)
      if (c < 0 || c > ctx.denom())
        throw InputError("orthoscheme_distance: points must lie in I(0_M, 1_M)");
  // Common refinement: coordinates in units of 1/D, translations in (1/k)Z.
  const std::int64_t D = std::lcm(ctx.denom(), k);
  const std::int64_t scale = D / ctx.denom();
  const std::int64_t step = D / k;
  MPoint xs = x, ys = y;
  for (auto& c : xs.u) c *= scale;
  for (auto& c : ys.u) c *= scale;
  const auto bound_steps = (distance_bound(xs, ys) + step - 1) / step;
  return Rational(search_distance(ctx, xs, ys, bound_steps, step), k);
}

bool is_boolean_base(const AffineContext& ctx) {
  const auto& p = ctx.base();
  const auto n = static_cast<std::size_t>(ctx.rank());
  if (n >= 32 || p.size() != (std::size_t{1} << n)) return false;
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != ((a & ~b) == 0)) return false;
  return true;
}

std::vector<std::int64_t> boolean_model_units(const AffineContext& ctx, const MPoint& p) {
  if (!is_boolean_base(ctx)) throw InputError("boolean_model: base is not a Boolean lattice");
  const auto n = static_cast<std::size_t>(ctx.rank());
  std::vector<std::int64_t> x(n, p.u[n - 1]);
  std::vector<bool> done(n, false);
  for (std::size_t j = 1; j < n; ++j) {
    if (!p.is_jump(j)) continue;
    for (std::size_t e = 0; e < n; ++e)
      if (!done[e] && ((p.entry[j] >> e) & 1U)) {
        x[e] = p.u[j - 1];
        done[e] = true;
      }
  }
  return x;
}

std::vector<Rational> boolean_model(const AffineContext& ctx, const MPoint& p) {
  std::vector<Rational> out;
  for (auto v : boolean_model_units(ctx, p)) out.emplace_back(v, ctx.denom());
  return out;
}

MPoint boolean_model_inverse(const AffineContext& ctx, std::span<const std::int64_t> x) {
  if (!is_boolean_base(ctx)) throw InputError("boolean_model: base is not a Boolean lattice");
  const auto n = static_cast<std::size_t>(ctx.rank());
  if (x.size() != n) throw InputError("boolean_model: wrong number of coordinates");
  std::vector<std::int64_t> u(x.begin(), x.end());
  std::sort(u.begin(), u.end());
  std::map<std::size_t, Elem> jumps;
  for (std::size_t j = 1; j < n; ++j) {
    if (u[j - 1] == u[j]) continue;
    Elem mask = 0;
    for (std::size_t e = 0; e < n; ++e)
      if (x[e] <= u[j - 1]) mask |= Elem{1} << e;
    jumps[j] = mask;
  }
  return point_from_jumps(ctx, std::move(u), jumps);
}

std::string format(const AffineContext& ctx, const MPoint& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.u.size(); ++k) {
    if (k) s += ',';
    const Rational v(p.u[k], ctx.denom());
    s += std::to_string(v.numerator());
    if (v.denominator() != 1) s += "/" + std::to_string(v.denominator());
  }
  s += ")";
  const auto j = p.jumps();
  if (!j.empty()) {
    s += "[";
    bool first = true;
    for (auto [k, e] : j) {
      if (!first) s += ' ';
      s += std::to_string(k) + ":" + ctx.base().id(e);
      first = false;
    }
    s += "]";
  }
  return s;
}

}  // namespace hellylat::affine
