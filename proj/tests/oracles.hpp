#pragma once

// Brute-force reference implementations used by the unit tests. They work
// straight from the order table / adjacency and share no code with the
// library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "hellylat/helly.hpp"
#include "hellylat/poset.hpp"

namespace oracle {

using hellylat::Elem;
using hellylat::FinitePoset;

inline std::vector<Elem> lower_bounds(const FinitePoset& p, Elem x, Elem y) {
  std::vector<Elem> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y)) out.push_back(z);
  return out;
}

inline std::vector<Elem> upper_bounds(const FinitePoset& p, Elem x, Elem y) {
  std::vector<Elem> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(y, z)) out.push_back(z);
  return out;
}

/// Greatest element of `s`, if any.
inline std::optional<Elem> greatest(const FinitePoset& p, const std::vector<Elem>& s) {
  for (auto z : s)
    if (std::all_of(s.begin(), s.end(), [&](Elem w) { return p.leq(w, z); })) return z;
  return std::nullopt;
}

inline std::optional<Elem> least(const FinitePoset& p, const std::vector<Elem>& s) {
  for (auto z : s)
    if (std::all_of(s.begin(), s.end(), [&](Elem w) { return p.leq(z, w); })) return z;
  return std::nullopt;
}

inline std::optional<Elem> meet(const FinitePoset& p, Elem x, Elem y) {
  return greatest(p, lower_bounds(p, x, y));
}

inline std::optional<Elem> join(const FinitePoset& p, Elem x, Elem y) {
  return least(p, upper_bounds(p, x, y));
}

inline bool is_lattice(const FinitePoset& p) {
  if (p.size() == 0) return false;
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (!meet(p, x, y) || !join(p, x, y)) return false;
  return true;
}

inline bool is_meet_semilattice(const FinitePoset& p) {
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (!meet(p, x, y)) return false;
  return true;
}

inline bool covers(const FinitePoset& p, Elem lo, Elem hi) {
  if (!p.lt(lo, hi)) return false;
  for (Elem z = 0; z < p.size(); ++z)
    if (p.lt(lo, z) && p.lt(z, hi)) return false;
  return true;
}

/// Lengths of all maximal chains from x up to y (x <= y).
inline std::set<std::size_t> chain_lengths(const FinitePoset& p, Elem x, Elem y) {
  if (x == y) return {0};
  std::set<std::size_t> out;
  for (Elem z = 0; z < p.size(); ++z)
    if (covers(p, x, z) && p.leq(z, y))
      for (auto l : chain_lengths(p, z, y)) out.insert(l + 1);
  return out;
}

/// Every interval has all maximal chains of one length.
inline bool is_graded(const FinitePoset& p) {
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && chain_lengths(p, x, y).size() != 1) return false;
  return true;
}

inline bool bounded_above(const FinitePoset& p, const std::vector<Elem>& xs) {
  for (Elem z = 0; z < p.size(); ++z)
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return p.leq(x, z); })) return true;
  return false;
}

inline bool is_flag(const FinitePoset& p) {
  const auto m = p.size();
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b)
      for (Elem c = b + 1; c < m; ++c)
        if (bounded_above(p, {a, b}) && bounded_above(p, {a, c}) && bounded_above(p, {b, c}) &&
            !bounded_above(p, {a, b, c}))
          return false;
  return true;
}

/// All-pairs graph distances (Floyd-Warshall); SIZE_MAX for unreachable.
inline std::vector<std::vector<std::size_t>> all_pairs(const hellylat::SimpleGraph& g) {
  const auto n = g.size();
  const auto inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = std::numeric_limits<std::size_t>::max();
  return d;
}

/// Helly property of a small family of vertex sets by subset enumeration.
inline bool helly_by_subsets(const std::vector<std::set<std::size_t>>& family) {
  const auto k = family.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    bool pairwise = true;
    for (std::size_t i = 0; i < k && pairwise; ++i)
      for (std::size_t j = i + 1; j < k && pairwise; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) {
          std::vector<std::size_t> both;
          std::set_intersection(family[i].begin(), family[i].end(), family[j].begin(),
                                family[j].end(), std::back_inserter(both));
          pairwise = !both.empty();
        }
    if (!pairwise) continue;
    std::optional<std::set<std::size_t>> common;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!common) {
        common = family[i];
        continue;
      }
      std::set<std::size_t> next;
      std::set_intersection(common->begin(), common->end(), family[i].begin(), family[i].end(),
                            std::inserter(next, next.begin()));
      common = std::move(next);
    }
    if (common->empty()) return false;
  }
  return true;
}

}  // namespace oracle
