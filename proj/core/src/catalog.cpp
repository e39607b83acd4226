#include "hellylat/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hellylat/bits.hpp"
#include "hellylat/errors.hpp"

namespace hellylat {

namespace {

// Tiny finite fields: prime q directly, GF(4) = F_2[a]/(a^2+a+1) with
// elements 0, 1, a, a+1 encoded as 0..3.
struct Field {
  int q = 2;
  std::vector<int> add, mul, neg, inv;

  explicit Field(int order) : q(order) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
      throw InputError("field order must be one of 2, 3, 4, 5 (got " + std::to_string(q) + ")");
    add.assign(q * q, 0);
    mul.assign(q * q, 0);
    neg.assign(q, 0);
    inv.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (q == 4) {
          add[a * q + b] = a ^ b;
          int p = 0;  // carry-less product, reduced by a^2 = a + 1
          for (int i = 0; i < 2; ++i)
            if ((b >> i) & 1) p ^= a << i;
          if (p & 4) p ^= 0b111;
          mul[a * q + b] = p;
        } else {
          add[a * q + b] = (a + b) % q;
          mul[a * q + b] = (a * b) % q;
        }
      }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (add[a * q + b] == 0) neg[a] = b;
        if (mul[a * q + b] == 1) inv[a] = b;
      }
  }
  int plus(int a, int b) const { return add[a * q + b]; }
  int times(int a, int b) const { return mul[a * q + b]; }
  int minus(int a, int b) const { return plus(a, neg[b]); }
};

using Vec = std::vector<int>;

std::size_t encode(const Vec& v, int q) {
  std::size_t code = 0;
  for (int x : v) code = code * static_cast<std::size_t>(q) + static_cast<std::size_t>(x);
  return code;
}

std::string row_text(const Vec& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

std::string rows_label(const std::vector<Vec>& rows) {
  std::string s = "<";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += row_text(rows[i]);
  }
  return s + ">";
}

// Reduced row echelon form; drops zero rows.
std::vector<Vec> rref(const Field& f, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const int s = f.inv[rows[r][col]];
    for (auto& x : rows[r]) x = f.times(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const int c = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.minus(rows[i][j], f.times(c, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

struct Subspace {
  std::vector<Vec> basis;  // reduced echelon rows
  Bits members;            // vector codes contained in the span
};

Bits span_members(const Field& f, const std::vector<Vec>& basis, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(f.q);
  Bits out(total);
  const std::size_t k = basis.size();
  std::vector<int> coeff(k, 0);
  while (true) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] = f.plus(v[j], f.times(coeff[i], basis[i][j]));
    out.set(encode(v, f.q));
    std::size_t i = 0;
    while (i < k && ++coeff[i] == f.q) coeff[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// All subspaces of F_q^n by enumerating reduced echelon forms, dimension by
// dimension. `keep` filters candidate bases.
std::vector<Subspace> all_subspaces(const Field& f, int n, std::size_t cap,
                                    const std::function<bool(const std::vector<Vec>&)>& keep) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(f.q);
    if (total > 1'000'000) throw CapExceeded("vector space too large to enumerate");
  }
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      // Free slots: row r, columns after its pivot that are not pivots.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<int> vals(free.size(), 0);
      while (true) {
        std::vector<Vec> rows(k, Vec(n, 0));
        for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = vals[i];
        if (keep(rows)) {
          if (out.size() >= cap) throw CapExceeded("subspace enumeration exceeds cap");
          out.push_back({rows, span_members(f, rows, static_cast<std::size_t>(n))});
        }
        std::size_t i = 0;
        while (i < vals.size() && ++vals[i] == f.q) vals[i++] = 0;
        if (i == vals.size()) break;
      }
      // Next pivot combination.
      int i = k - 1;
      while (i >= 0 && pivots[i] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

FinitePoset subspaces_to_poset(const std::vector<Subspace>& subs) {
  std::vector<std::string> ids;
  ids.reserve(subs.size());
  for (const auto& s : subs) ids.push_back(rows_label(s.basis));
  return FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
    return subs[a].members.subset_of(subs[b].members);
  });
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

// Restricted growth strings of length n.
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(mx, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

std::string partition_label(const std::vector<int>& rgs) {
  const int blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::string s;
  for (int b = 0; b < blocks; ++b) {
    if (b) s += '|';
    for (std::size_t i = 0; i < rgs.size(); ++i)
      if (rgs[i] == b) s += std::to_string(i + 1);
  }
  return s;
}

bool refines(const std::vector<int>& p, const std::vector<int>& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j] && q[i] != q[j]) return false;
  return true;
}

FinitePoset partitions_to_poset(const std::vector<std::vector<int>>& parts) {
  std::vector<std::string> ids;
  for (const auto& p : parts) ids.push_back(partition_label(p));
  return FinitePoset::from_relation(std::move(ids),
                                    [&](Elem a, Elem b) { return refines(parts[a], parts[b]); });
}

bool noncrossing(const std::vector<int>& rgs) {
  const int n = static_cast<int>(rgs.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]) return false;
  return true;
}

}  // namespace

FinitePoset boolean_lattice(int n) {
  require(n >= 0 && n <= 12, "boolean: n must lie in [0, 12]");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> ids;
  for (std::size_t m = 0; m < size; ++m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
      }
    ids.push_back(s + "}");
  }
  return FinitePoset::from_relation(std::move(ids), [](Elem a, Elem b) { return (a & ~b) == 0; });
}

FinitePoset partition_lattice(int n) {
  require(n >= 1 && n <= 8, "partition: n must lie in [1, 8]");
  return partitions_to_poset(set_partitions(n));
}

FinitePoset noncrossing_partitions(int n) {
  require(n >= 1 && n <= 9, "noncrossing: n must lie in [1, 9]");
  auto parts = set_partitions(n);
  std::erase_if(parts, [](const auto& p) { return !noncrossing(p); });
  return partitions_to_poset(parts);
}

FinitePoset chain(int n) {
  require(n >= 0 && n <= 10'000, "chain: n must be non-negative");
  std::vector<std::string> ids;
  for (int i = 0; i <= n; ++i) ids.push_back(std::to_string(i));
  return FinitePoset::from_relation(std::move(ids), [](Elem a, Elem b) { return a <= b; });
}

FinitePoset product(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> ids;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < nb; ++y) ids.push_back("(" + a.id(x) + "," + b.id(y) + ")");
  return FinitePoset::from_relation(std::move(ids), [&](Elem s, Elem t) {
    return a.leq(s / nb, t / nb) && b.leq(s % nb, t % nb);
  });
}

std::string span_label(int q, const std::vector<std::vector<int>>& vectors) {
  const Field f(q);
  for (const auto& v : vectors)
    for (int x : v) require(x >= 0 && x < q, "span_label: coordinate out of range");
  return rows_label(rref(f, vectors));
}

FinitePoset subspace_poset(int q, int n, std::size_t cap) {
  require(n >= 1 && n <= 8, "subspace: n must lie in [1, 8]");
  const Field f(q);
  return subspaces_to_poset(all_subspaces(f, n, cap, [](const auto&) { return true; }));
}

FinitePoset polar_space(int q, int dim, std::size_t cap) {
  require(dim >= 2 && dim % 2 == 0 && dim <= 8, "polar: dimension must be even and in [2, 8]");
  const Field f(q);
  const int m = dim / 2;
  auto form = [&](const Vec& x, const Vec& y) {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      s = f.plus(s, f.times(x[i], y[m + i]));
      s = f.minus(s, f.times(x[m + i], y[i]));
    }
    return s;
  };
  auto isotropic = [&](const std::vector<Vec>& rows) {
    if (static_cast<int>(rows.size()) > m) return false;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (form(rows[i], rows[j]) != 0) return false;
    return true;
  };
  return subspaces_to_poset(all_subspaces(f, dim, cap, isotropic));
}

FinitePoset weak_order(int n) {
  require(n >= 1 && n <= 6, "weak_order: n must lie in [1, 6]");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::string> ids;
  std::vector<std::uint32_t> inv;
  do {
    ids.push_back(row_text(perm));
    // Value inversions (a, b), a < b, with b placed before a.
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::uint32_t bits = 0;
    int k = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b, ++k)
        if (pos[b] < pos[a]) bits |= 1U << k;
    inv.push_back(bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FinitePoset::from_relation(std::move(ids),
                                    [&](Elem a, Elem b) { return (inv[a] & ~inv[b]) == 0; });
}

FinitePoset fc_local_poset(const SimpleGraph& g, const std::vector<EdgeLabel>& labels) {
  for (const auto& l : labels) {
    require(l.u < g.size() && l.v < g.size() && l.u != l.v, "fc_local: invalid edge label");
    if (l.m != 2)
      throw InputError("fc_local: only right-angled systems are supported; label " +
                       (l.m == 0 ? std::string("inf") : std::to_string(l.m)) + " on " +
                       g.id(l.u) + "-" + g.id(l.v) + " is not 2");
    if (!g.adjacent(l.u, l.v))
      throw InputError("fc_local: label 2 on " + g.id(l.u) + "-" + g.id(l.v) +
                       " but the defining graph has no such edge");
  }
  const std::size_t n = g.size();
  require(n <= 24, "fc_local: at most 24 generators");
  const bool short_ids =
      std::all_of(g.ids().begin(), g.ids().end(), [](const auto& s) { return s.size() == 1; });
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    cliques.push_back(cur);
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      for (auto u : cur) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::string> ids;
  std::vector<std::uint32_t> masks;
  for (const auto& c : cliques) {
    std::string s;
    std::uint32_t m = 0;
    for (auto v : c) {
      if (!s.empty() && !short_ids) s += '.';
      s += g.id(v);
      m |= 1U << v;
    }
    ids.push_back(c.empty() ? "1" : s);
    masks.push_back(m);
  }
  return FinitePoset::from_relation(std::move(ids),
                                    [&](Elem a, Elem b) { return (masks[a] & ~masks[b]) == 0; });
}

FinitePoset random_graded(std::uint64_t seed, int size, int density_pct) {
  require(size >= 2 && size <= 2000, "random_graded: size must lie in [2, 2000]");
  require(density_pct >= 0 && density_pct <= 100, "random_graded: density must be a percentage");
  std::mt19937_64 rng(seed);
  const int middle = size - 2;
  std::vector<int> layer_sizes;
  if (middle > 0) {
    // Favour wide levels; long thin posets are almost always chains.
    const int max_levels = std::max(1, (middle + 1) / 2);
    const int levels = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_levels));
    layer_sizes.assign(levels, 1);
    for (int extra = middle - levels; extra > 0; --extra)
      ++layer_sizes[rng() % static_cast<std::uint64_t>(levels)];
  }
  // Element 0 is the bottom, element size-1 the top.
  std::vector<std::vector<Elem>> layers{{0}};
  Elem next = 1;
  for (int s : layer_sizes) {
    layers.emplace_back();
    for (int i = 0; i < s; ++i) layers.back().push_back(next++);
  }
  layers.push_back({next});
  std::vector<std::pair<Elem, Elem>> covers;
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    const auto& lo = layers[l];
    const auto& hi = layers[l + 1];
    std::vector<std::uint8_t> edge(lo.size() * hi.size(), 0);
    for (auto& e : edge) e = static_cast<int>(rng() % 100) < density_pct;
    for (std::size_t j = 0; j < hi.size(); ++j) {
      bool any = false;
      for (std::size_t i = 0; i < lo.size(); ++i) any = any || edge[i * hi.size() + j];
      if (!any) edge[(rng() % lo.size()) * hi.size() + j] = 1;
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
      bool any = false;
      for (std::size_t j = 0; j < hi.size(); ++j) any = any || edge[i * hi.size() + j];
      if (!any) edge[i * hi.size() + rng() % hi.size()] = 1;
    }
    for (std::size_t i = 0; i < lo.size(); ++i)
      for (std::size_t j = 0; j < hi.size(); ++j)
        if (edge[i * hi.size() + j]) covers.emplace_back(lo[i], hi[j]);
  }
  std::vector<std::string> ids;
  for (int i = 0; i < size; ++i) ids.push_back("e" + std::to_string(i));
  return FinitePoset::from_covers(std::move(ids), covers);
}

std::size_t enumerate_bounded_graded(int max_size,
                                     const std::function<void(const FinitePoset&)>& fn) {
  require(max_size >= 1 && max_size <= 9, "enumerate_bounded_graded: size must lie in [1, 9]");
  std::size_t visited = 0;
  fn(FinitePoset({"0"}, {1}));
  ++visited;
  if (max_size < 2) return visited;

  // Compositions of the middle element count into level sizes.
  std::vector<std::vector<int>> shapes{{}};
  std::function<void(std::vector<int>&, int)> compose = [&](std::vector<int>& cur, int left) {
    for (int s = 1; s <= left; ++s) {
      cur.push_back(s);
      shapes.push_back(cur);
      compose(cur, left - s);
      cur.pop_back();
    }
  };
  std::vector<int> scratch;
  compose(scratch, max_size - 2);

  for (const auto& shape : shapes) {
    const int levels = static_cast<int>(shape.size());
    int total = 2;
    for (int s : shape) total += s;
    std::vector<std::string> ids;
    for (int i = 0; i < total; ++i) ids.push_back(std::to_string(i));
    std::vector<std::vector<Elem>> layer(levels);
    Elem next = 1;
    for (int l = 0; l < levels; ++l)
      for (int i = 0; i < shape[l]; ++i) layer[l].push_back(next++);
    const Elem top = next;

    std::vector<std::uint32_t> masks(levels > 0 ? levels - 1 : 0, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k < masks.size()) {
        const std::uint32_t limit = 1U << (shape[k] * shape[k + 1]);
        for (std::uint32_t m = 0; m < limit; ++m) {
          masks[k] = m;
          rec(k + 1);
        }
        return;
      }
      std::vector<int> down(total, 0), up(total, 0);
      std::vector<std::pair<Elem, Elem>> covers;
      for (std::size_t l = 0; l < masks.size(); ++l)
        for (int i = 0; i < shape[l]; ++i)
          for (int j = 0; j < shape[l + 1]; ++j)
            if ((masks[l] >> (i * shape[l + 1] + j)) & 1U) {
              covers.emplace_back(layer[l][i], layer[l + 1][j]);
              ++up[layer[l][i]];
              ++down[layer[l + 1][j]];
            }
      for (int l = 1; l < levels; ++l)
        for (auto e : layer[l])
          if (!down[e]) return;
      for (int l = 0; l + 1 < levels; ++l)
        for (auto e : layer[l])
          if (!up[e]) return;
      if (levels == 0) {
        covers.emplace_back(0, top);
      } else {
        for (auto e : layer.front()) covers.emplace_back(0, e);
        for (auto e : layer.back()) covers.emplace_back(e, top);
      }
      fn(FinitePoset::from_covers(ids, covers));
      ++visited;
    };
    rec(0);
  }
  return visited;
}

FinitePoset generate(const CatalogSpec& spec, std::size_t cap) {
  auto param = [&](const std::string& key) -> std::int64_t {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
      throw InputError("catalog '" + spec.kind + "': missing parameter '" + key + "'");
    return it->second;
  };
  auto param_or = [&](const std::string& key, std::int64_t dflt) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? dflt : it->second;
  };
  auto small = [&](const std::string& key) {
    const auto v = param(key);
    require(v >= -1'000'000 && v <= 1'000'000, "catalog: parameter '" + key + "' out of range");
    return static_cast<int>(v);
  };
  auto checked = [&](FinitePoset p) {
    if (p.size() > cap)
      throw CapExceeded("catalog '" + spec.kind + "' has " + std::to_string(p.size()) +
                        " elements, cap is " + std::to_string(cap));
    return p;
  };
  // Coarse size guards before any table is allocated.
  auto guard = [&](double estimate) {
    if (estimate > static_cast<double>(cap))
      throw CapExceeded("catalog '" + spec.kind + "' would exceed cap " + std::to_string(cap));
  };

  const auto& k = spec.kind;
  if (k == "boolean") {
    const int n = small("n");
    require(n >= 0 && n <= 12, "boolean: n must lie in [0, 12]");
    guard(static_cast<double>(std::size_t{1} << n));
    return boolean_lattice(n);
  }
  if (k == "partition") return checked(partition_lattice(small("n")));
  if (k == "chain") {
    guard(static_cast<double>(param("n")) + 1);
    return chain(small("n"));
  }
  if (k == "noncrossing") return checked(noncrossing_partitions(small("n")));
  if (k == "weak_order") return checked(weak_order(small("n")));
  if (k == "subspace") return subspace_poset(small("q"), small("n"), cap);
  if (k == "polar") return polar_space(small("q"), small("dim"), cap);
  if (k == "random_graded")
    return checked(random_graded(static_cast<std::uint64_t>(param_or("seed", 0)), small("size"),
                                 static_cast<int>(param_or("density", 50))));
  if (k == "fc_local") {
    require(spec.graph.has_value(), "fc_local: a defining graph is required");
    return checked(fc_local_poset(*spec.graph, spec.labels));
  }
  if (k == "dual") {
    require(spec.children.size() == 1, "dual: exactly one operand required");
    return generate(spec.children.front(), cap).dual();
  }
  if (k == "product") {
    require(spec.children.size() == 2, "product: exactly two factors required");
    auto a = generate(spec.children[0], cap);
    auto b = generate(spec.children[1], cap);
    guard(static_cast<double>(a.size()) * static_cast<double>(b.size()));
    return product(a, b);
  }
  throw InputError("unknown catalog kind '" + k + "'");
}

}  // namespace hellylat
