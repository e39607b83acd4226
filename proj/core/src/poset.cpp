#include "hellylat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "hellylat/bits.hpp"
#include "hellylat/errors.hpp"

namespace hellylat {

FinitePoset::FinitePoset(std::vector<std::string> ids, std::vector<std::uint8_t> table)
    : ids_(std::move(ids)), leq_(std::move(table)) {
  const std::size_t n = ids_.size();
  if (leq_.size() != n * n) throw InputError("order table has wrong size");
  {
    std::set<std::string> seen(ids_.begin(), ids_.end());
    if (seen.size() != n) throw InputError("duplicate element identifiers");
  }
  for (Elem a = 0; a < n; ++a) {
    if (!leq(a, a)) throw InputError("order not reflexive at " + ids_[a]);
    for (Elem b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a))
        throw InputError("order not antisymmetric: " + ids_[a] + ", " + ids_[b]);
  }
  std::vector<Bits> up(n, Bits(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (leq(a, b)) up[a].set(b);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = up[a].first(); b < n; b = up[a].next(b + 1))
      if (!up[b].subset_of(up[a])) {
        const Elem c = Bits(up[b]).subtract(up[a]).first();
        throw InputError("order not transitive: " + ids_[a] + " <= " + ids_[b] +
                         " <= " + ids_[c]);
      }
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> ids,
                                     const std::vector<std::pair<Elem, Elem>>& covers) {
  const std::size_t n = ids.size();
  std::vector<Bits> up(n, Bits(n));
  for (Elem a = 0; a < n; ++a) up[a].set(a);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw InputError("cover references unknown element");
    up[lo].set(hi);
  }
  // Warshall closure on bit rows.
  for (Elem k = 0; k < n; ++k)
    for (Elem a = 0; a < n; ++a)
      if (up[a].test(k)) up[a] |= up[k];
  std::vector<std::uint8_t> table(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      table[a * n + b] = up[a].test(b) ? 1 : 0;
      if (a != b && up[a].test(b) && up[b].test(a))
        throw InputError("cover relation contains a cycle through " + ids[a]);
    }
  return FinitePoset(std::move(ids), std::move(table));
}

std::optional<Elem> FinitePoset::find(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<Elem>(it - ids_.begin());
}

Elem FinitePoset::index_of(const std::string& id) const {
  auto e = find(id);
  if (!e) throw InputError("unknown element '" + id + "'");
  return *e;
}

std::vector<Elem> FinitePoset::upper_covers(Elem x) const {
  std::vector<Elem> out;
  for (Elem y = 0; y < size(); ++y) {
    if (!lt(x, y)) continue;
    bool cover = true;
    for (Elem z = 0; z < size() && cover; ++z)
      if (lt(x, z) && lt(z, y)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<Elem> FinitePoset::lower_covers(Elem x) const {
  std::vector<Elem> out;
  for (Elem y = 0; y < size(); ++y) {
    if (!lt(y, x)) continue;
    bool cover = true;
    for (Elem z = 0; z < size() && cover; ++z)
      if (lt(y, z) && lt(z, x)) cover = false;
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> FinitePoset::cover_pairs() const {
  const std::size_t n = size();
  std::vector<Bits> above(n, Bits(n)), below(n, Bits(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lt(a, b)) {
        above[a].set(b);
        below[b].set(a);
      }
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = above[x].first(); y < n; y = above[x].next(y + 1))
      if (!above[x].intersects(below[y])) out.emplace_back(x, y);
  return out;
}

FinitePoset FinitePoset::dual() const {
  const std::size_t n = size();
  std::vector<std::uint8_t> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = leq_[b * n + a];
  return FinitePoset(ids_, std::move(t));
}

FinitePoset FinitePoset::induced(std::span<const Elem> subset) const {
  std::vector<std::string> ids;
  ids.reserve(subset.size());
  for (Elem e : subset) ids.push_back(id(e));
  const std::size_t m = subset.size();
  std::vector<std::uint8_t> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = leq(subset[i], subset[j]) ? 1 : 0;
  return FinitePoset(std::move(ids), std::move(t));
}

namespace {

// Elements sorted so that every element comes after all elements below it.
std::vector<Elem> linear_extension(const FinitePoset& p) {
  std::vector<std::size_t> below(p.size(), 0);
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (p.leq(b, a)) ++below[a];
  std::vector<Elem> order(p.size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });
  return order;
}

std::vector<std::vector<Elem>> all_lower_covers(const FinitePoset& p) {
  std::vector<std::vector<Elem>> lc(p.size());
  for (auto [lo, hi] : p.cover_pairs()) lc[hi].push_back(lo);
  return lc;
}

std::vector<Bits> up_sets(const FinitePoset& p) {
  std::vector<Bits> up(p.size(), Bits(p.size()));
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) up[a].set(b);
  return up;
}

// Every interval has all saturated chains of one length: for each source x,
// shortest and longest cover paths to every y >= x coincide.
bool every_interval_ranked(const FinitePoset& p) {
  const auto order = linear_extension(p);
  const auto lc = all_lower_covers(p);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> shortest(p.size()), longest(p.size());
  for (Elem x = 0; x < p.size(); ++x) {
    std::fill(shortest.begin(), shortest.end(), kInf);
    std::fill(longest.begin(), longest.end(), 0);
    shortest[x] = 0;
    for (Elem y : order) {
      if (y == x || !p.lt(x, y)) continue;
      for (Elem z : lc[y]) {
        if (!p.leq(x, z)) continue;
        shortest[y] = std::min(shortest[y], shortest[z] + 1);
        longest[y] = std::max(longest[y], longest[z] + 1);
      }
      if (shortest[y] != longest[y]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Elem> common_upper_bounds(const FinitePoset& p, std::span<const Elem> xs) {
  std::vector<Elem> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return p.leq(x, z); }))
      out.push_back(z);
  return out;
}

std::vector<Elem> common_lower_bounds(const FinitePoset& p, std::span<const Elem> xs) {
  std::vector<Elem> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return p.leq(z, x); }))
      out.push_back(z);
  return out;
}

std::vector<Elem> minimal_elements(const FinitePoset& p, std::span<const Elem> subset) {
  std::vector<Elem> out;
  for (Elem a : subset)
    if (std::none_of(subset.begin(), subset.end(), [&](Elem b) { return p.lt(b, a); }))
      out.push_back(a);
  return out;
}

std::vector<Elem> maximal_elements(const FinitePoset& p, std::span<const Elem> subset) {
  std::vector<Elem> out;
  for (Elem a : subset)
    if (std::none_of(subset.begin(), subset.end(), [&](Elem b) { return p.lt(a, b); }))
      out.push_back(a);
  return out;
}

BoundResult bound(const FinitePoset& p, Elem x, Elem y, BoundKind kind) {
  if (x >= p.size() || y >= p.size()) throw InputError("bound: element out of range");
  const Elem pair[2] = {x, y};
  BoundResult r;
  if (kind == BoundKind::meet) {
    auto lb = common_lower_bounds(p, pair);
    r.candidates = maximal_elements(p, lb);
  } else {
    auto ub = common_upper_bounds(p, pair);
    r.candidates = minimal_elements(p, ub);
  }
  if (r.candidates.empty()) {
    r.status = BoundResult::Status::none;
  } else if (r.candidates.size() == 1) {
    r.status = BoundResult::Status::unique;
    r.element = r.candidates.front();
  } else {
    r.status = BoundResult::Status::ambiguous;
  }
  return r;
}

BoundResult bound(const FinitePoset& p, const std::string& x, const std::string& y,
                  BoundKind kind) {
  return bound(p, p.index_of(x), p.index_of(y), kind);
}

PosetProfile analyze(const FinitePoset& p) {
  PosetProfile prof;
  const std::size_t n = p.size();
  for (Elem a = 0; a < n && !prof.bounded_below; ++a) {
    bool all = true;
    for (Elem b = 0; b < n && all; ++b) all = p.leq(a, b);
    if (all) prof.bounded_below = a;
  }
  for (Elem a = 0; a < n && !prof.bounded_above; ++a) {
    bool all = true;
    for (Elem b = 0; b < n && all; ++b) all = p.leq(b, a);
    if (all) prof.bounded_above = a;
  }
  prof.graded = every_interval_ranked(p);
  if (prof.graded && prof.bounded()) {
    prof.rank = rank_function(p)[*prof.bounded_above];
  }

  prof.meet_semilattice = true;
  prof.join_semilattice = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (prof.meet_semilattice && !bound(p, a, b, BoundKind::meet).ok())
        prof.meet_semilattice = false;
      if (prof.join_semilattice && !bound(p, a, b, BoundKind::join).ok())
        prof.join_semilattice = false;
    }
  prof.lattice = prof.meet_semilattice && prof.join_semilattice;

  // Flag: three pairwise upper-bounded elements share an upper bound.
  const auto up = up_sets(p);
  prof.flag = true;
  for (Elem a = 0; a < n && prof.flag; ++a)
    for (Elem b = a + 1; b < n && prof.flag; ++b) {
      if (!up[a].intersects(up[b])) continue;
      const Bits ab = up[a] & up[b];
      for (Elem c = b + 1; c < n; ++c) {
        if (!up[a].intersects(up[c]) || !up[b].intersects(up[c])) continue;
        if (!ab.intersects(up[c])) {
          prof.flag = false;
          break;
        }
      }
    }
  return prof;
}

std::vector<std::size_t> rank_function(const FinitePoset& p) {
  std::optional<Elem> bottom;
  for (Elem a = 0; a < p.size() && !bottom; ++a) {
    bool all = true;
    for (Elem b = 0; b < p.size() && all; ++b) all = p.leq(a, b);
    if (all) bottom = a;
  }
  if (!bottom) throw PreconditionError("rank_function: poset has no minimum");
  const auto order = linear_extension(p);
  const auto lc = all_lower_covers(p);
  std::vector<std::size_t> lo(p.size(), 0), hi(p.size(), 0);
  for (Elem y : order) {
    if (y == *bottom) continue;
    std::size_t mn = static_cast<std::size_t>(-1), mx = 0;
    for (Elem z : lc[y]) {
      mn = std::min(mn, lo[z] + 1);
      mx = std::max(mx, hi[z] + 1);
    }
    lo[y] = mn;
    hi[y] = mx;
    if (mn != mx) throw PreconditionError("rank_function: poset is not graded");
  }
  return hi;
}

bool is_bowtie(const FinitePoset& p, const Bowtie& w) {
  const std::set<Elem> distinct{w.a, w.b, w.c, w.d};
  if (distinct.size() != 4) return false;
  const Elem lows[2] = {w.b, w.d};
  const Elem highs[2] = {w.a, w.c};
  auto mub = minimal_elements(p, common_upper_bounds(p, lows));
  auto mlb = maximal_elements(p, common_lower_bounds(p, highs));
  auto has = [](const std::vector<Elem>& v, Elem e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  return has(mub, w.a) && has(mub, w.c) && has(mlb, w.b) && has(mlb, w.d);
}

std::optional<Bowtie> find_bowtie(const FinitePoset& p) {
  const auto prof = analyze(p);
  if (!prof.bounded() || !prof.graded)
    throw PreconditionError("find_bowtie: poset must be bounded and graded");
  const std::size_t n = p.size();
  for (Elem b = 0; b < n; ++b)
    for (Elem d = b + 1; d < n; ++d) {
      if (p.comparable(b, d)) continue;
      const Elem lows[2] = {b, d};
      const auto mub = minimal_elements(p, common_upper_bounds(p, lows));
      for (std::size_t i = 0; i < mub.size(); ++i)
        for (std::size_t j = i + 1; j < mub.size(); ++j) {
          const Elem highs[2] = {mub[i], mub[j]};
          const auto mlb = maximal_elements(p, common_lower_bounds(p, highs));
          const bool has_b = std::find(mlb.begin(), mlb.end(), b) != mlb.end();
          const bool has_d = std::find(mlb.begin(), mlb.end(), d) != mlb.end();
          if (has_b && has_d) return Bowtie{mub[i], b, mub[j], d};
        }
    }
  return std::nullopt;
}

SemilatticeJoiner::SemilatticeJoiner(const FinitePoset& p) : p_(&p) {
  const auto prof = analyze(p);
  if (!prof.bounded_below || !prof.graded || !prof.meet_semilattice || !prof.flag)
    throw PreconditionError(
        "family_join: poset must be a graded flag meet-semilattice with a minimum");
  bottom_ = *prof.bounded_below;
  rank_ = rank_function(p);
}

bool SemilatticeJoiner::pairwise_upper_bounded(std::span<const Elem> xs) const {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      bool bounded = false;
      for (Elem z = 0; z < p_->size() && !bounded; ++z)
        bounded = p_->leq(xs[i], z) && p_->leq(xs[j], z);
      if (!bounded) return false;
    }
  return true;
}

std::optional<Elem> SemilatticeJoiner::pair_join(Elem a, Elem b) const {
  auto r = bound(*p_, a, b, BoundKind::join);
  if (r.status == BoundResult::Status::none) return std::nullopt;
  if (!r.ok()) throw PreconditionError("family_join: upper-bounded pair without a join");
  return r.element;
}

// Induction on the family size: replace the last two members by their join.
std::optional<Elem> SemilatticeJoiner::finite_join(std::vector<Elem> xs) const {
  while (xs.size() > 1) {
    const Elem a = xs.back();
    xs.pop_back();
    const Elem b = xs.back();
    xs.pop_back();
    auto ab = pair_join(a, b);
    if (!ab) return std::nullopt;
    xs.push_back(*ab);
  }
  return xs.empty() ? bottom_ : xs.front();
}

std::optional<Elem> SemilatticeJoiner::join(std::span<const Elem> xs) const {
  for (Elem x : xs)
    if (x >= p_->size()) throw InputError("family_join: element out of range");
  if (!pairwise_upper_bounded(xs)) return std::nullopt;
  // Grow a finite subfamily whose join has maximal rank; once no member
  // raises the rank, that join dominates the whole family.
  std::vector<Elem> sub;
  Elem best = bottom_;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem a : xs) {
      auto extended = sub;
      extended.push_back(a);
      auto j = finite_join(extended);
      if (!j) throw PreconditionError("family_join: flag condition failed on a subfamily");
      if (rank_[*j] > rank_[best]) {
        sub = std::move(extended);
        best = *j;
        grew = true;
        break;
      }
    }
  }
  return best;
}

std::optional<Elem> family_join(const FinitePoset& p, std::span<const Elem> xs) {
  return SemilatticeJoiner(p).join(xs);
}

std::vector<Elem> interval(const FinitePoset& p, Elem lo, Elem hi) {
  std::vector<Elem> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (p.leq(lo, z) && p.leq(z, hi)) out.push_back(z);
  return out;
}

IntervalHellyResult interval_helly_check(const FinitePoset& p,
                                         std::span<const IntervalSpec> family) {
  for (const auto& iv : family) {
    if (iv.lo >= p.size() || iv.hi >= p.size())
      throw InputError("interval_helly_check: element out of range");
    if (!p.leq(iv.lo, iv.hi)) throw InputError("interval_helly_check: lo not <= hi");
  }
  IntervalHellyResult res;
  auto in_all = [&](Elem z, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (!p.leq(family[i].lo, z) || !p.leq(z, family[i].hi)) return false;
    return true;
  };
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      bool meet = false;
      for (Elem z = 0; z < p.size() && !meet; ++z)
        meet = p.leq(family[i].lo, z) && p.leq(family[j].lo, z) && p.leq(z, family[i].hi) &&
               p.leq(z, family[j].hi);
      if (!meet) {
        res.status = IntervalHellyResult::Status::disjoint_pair;
        res.disjoint = {i, j};
        return res;
      }
    }
  // The join of the lower ends is the natural witness.
  std::vector<Elem> lows;
  for (const auto& iv : family) lows.push_back(iv.lo);
  const auto mub = minimal_elements(p, common_upper_bounds(p, lows));
  if (mub.size() == 1 && in_all(mub.front(), family.size())) {
    res.status = IntervalHellyResult::Status::common_element;
    res.witness = mub.front();
    return res;
  }
  for (Elem z = 0; z < p.size(); ++z)
    if (in_all(z, family.size())) {
      res.status = IntervalHellyResult::Status::common_element;
      res.witness = z;
      return res;
    }
  res.status = IntervalHellyResult::Status::violation;
  return res;
}

std::vector<std::vector<Elem>> maximal_chains(const FinitePoset& p, std::size_t cap) {
  std::vector<std::vector<Elem>> uc(p.size());
  for (auto [lo, hi] : p.cover_pairs()) uc[lo].push_back(hi);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> chain;
  auto dfs = [&](auto&& self, Elem x) -> void {
    chain.push_back(x);
    if (uc[x].empty()) {
      if (out.size() >= cap) throw CapExceeded("maximal_chains: more than cap chains");
      out.push_back(chain);
    } else {
      for (Elem y : uc[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (Elem x = 0; x < p.size(); ++x) {
    bool minimal = true;
    for (Elem y = 0; y < p.size() && minimal; ++y) minimal = !p.lt(y, x);
    if (minimal) dfs(dfs, x);
  }
  return out;
}

bool isomorphic(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  auto signature = [](const FinitePoset& s, Elem x) {
    std::size_t below = 0, above = 0;
    for (Elem y = 0; y < s.size(); ++y) {
      if (s.leq(y, x)) ++below;
      if (s.leq(x, y)) ++above;
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sp(n), sq(n);
  for (Elem x = 0; x < n; ++x) {
    sp[x] = signature(p, x);
    sq[x] = signature(q, x);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<Elem> map(n, kNoElem);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, Elem x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || sq[y] != sp[x]) continue;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == q.leq(map[z], y) && p.leq(x, z) == q.leq(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return assign(assign, 0);
}

}  // namespace hellylat
