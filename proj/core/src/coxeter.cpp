#include "hellylat/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hellylat/errors.hpp"

namespace hellylat::coxeter {

namespace {

void same_dim(const Point& u, const Point& v) {
  if (u.size() != v.size() || u.empty()) throw InputError("coxeter: dimension mismatch");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// Vertices of the fundamental chain with rotation i (1-based) at level k.
std::vector<Point> fundamental_chain(int n, int i, std::int64_t k) {
  std::vector<Point> out;
  for (int p = 0; p <= n; ++p) {
    // y_m = k for m <= n - p, k + 1 afterwards; x_{i+m-1} = y_m with the
    // wrap-around x_{j+n} = x_j + 1.
    Point x(n);
    for (int m = 1; m <= n; ++m) {
      const std::int64_t y = m <= n - p ? k : k + 1;
      const int j = i + m - 1;
      if (j <= n) {
        x[j - 1] = y;
      } else {
        x[j - n - 1] = y - 1;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

struct SignedPerm {
  std::vector<int> perm;   // (Px)_i = sign_i * x_{perm_i}
  std::vector<int> sign;
};

const std::vector<SignedPerm>& signed_perms(int n) {
  static std::map<int, std::vector<SignedPerm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SignedPerm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPerm sp{p, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) sp.sign[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(sp));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

Point act(const SignedPerm& sp, const Point& x) {
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sp.sign[i] * x[sp.perm[i]];
  return y;
}

Point c_vertex(int n, int i) {
  Point v(n, 0);
  for (int k = 0; k < i; ++k) v[k] = 1;
  return v;
}

// Index of x among v_0..v_n, or -1.
int fundamental_index(const Point& x) {
  int ones = 0;
  bool seen_zero = false;
  for (auto c : x) {
    if (c == 1) {
      if (seen_zero) return -1;
      ++ones;
    } else if (c == 0) {
      seen_zero = true;
    } else {
      return -1;
    }
  }
  return ones;
}

}  // namespace

Point apply_generator(const Point& x, int i) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || i > n) throw InputError("coxeter: generator index out of range");
  Point y = x;
  if (i < n) {
    std::swap(y[i - 1], y[i]);
  } else {
    y[0] = x[n - 1] - 1;
    y[n - 1] = x[0] + 1;
    if (n == 1) y[0] = x[0];
  }
  return y;
}

std::int64_t height(const Point& x) { return std::accumulate(x.begin(), x.end(), std::int64_t{0}); }

int building_type(const Point& x) {
  return static_cast<int>(mod(height(x), static_cast<std::int64_t>(x.size())));
}

bool a_share_simplex(const Point& u, const Point& v) {
  same_dim(u, v);
  if (u == v) return false;
  const int n = static_cast<int>(u.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  // W = S_n ⋉ {t in Z^n : sum t = 0}: permute, then match u to a chain
  // vertex with the same height and translate.
  do {
    Point pu(n), pv(n);
    for (int i = 0; i < n; ++i) {
      pu[i] = u[p[i]];
      pv[i] = v[p[i]];
    }
    const auto h = height(pu);
    const auto base = floor_div(h, n);
    for (int i = 1; i <= n; ++i)
      for (auto k = base - 2; k <= base + 2; ++k) {
        const auto chain = fundamental_chain(n, i, k);
        for (const auto& c : chain) {
          if (height(c) != h) continue;
          Point shifted(n);
          for (int m = 0; m < n; ++m) shifted[m] = pv[m] - (pu[m] - c[m]);
          if (std::find(chain.begin(), chain.end(), shifted) != chain.end()) return true;
        }
      }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

int c_type(const Point& x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](auto c) { return mod(c, 2) == 1; }));
}

bool c_adjacent(const Point& u, const Point& v) {
  same_dim(u, v);
  if (u == v) return false;
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    if (std::abs(u[i] - v[i]) > 1) return false;
  for (const auto& sp : signed_perms(n)) {
    const Point pu = act(sp, u), pv = act(sp, v);
    for (int a = 0; a <= n; ++a) {
      const Point va = c_vertex(n, a);
      Point t(n);
      bool even = true;
      for (int m = 0; m < n && even; ++m) {
        t[m] = va[m] - pu[m];
        even = mod(t[m], 2) == 0;
      }
      if (!even) continue;
      Point img(n);
      for (int m = 0; m < n; ++m) img[m] = pv[m] + t[m];
      const int b = fundamental_index(img);
      if (b >= 0 && b != a) return true;
    }
  }
  return false;
}

Cmp compare(Family f, const Point& u, const Point& v) {
  same_dim(u, v);
  if (u == v) return Cmp::equal;
  if (f == Family::a_extended) {
    auto box = [](const Point& a, const Point& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i] || b[i] > a[i] + 1) return false;
      return true;
    };
    if (box(u, v)) return Cmp::less;
    if (box(v, u)) return Cmp::greater;
    return Cmp::incomparable;
  }
  if (!c_adjacent(u, v)) return Cmp::incomparable;
  const int tu = c_type(u), tv = c_type(v);
  if (tu == tv) throw std::logic_error("coxeter: adjacent vertices share a type");
  return tu < tv ? Cmp::less : Cmp::greater;
}

Point apply_move(const Point& x, const CMove& m) {
  const int n = static_cast<int>(x.size());
  Point y = x;
  if (m.kind == CMove::Kind::reflect) {
    if (m.i < 1 || m.i > n) throw InputError("coxeter: move index out of range");
    y[m.i - 1] = 2 * m.k - x[m.i - 1];
  } else {
    if (m.i < 1 || m.i >= n) throw InputError("coxeter: move index out of range");
    std::swap(y[m.i - 1], y[m.i]);
  }
  return y;
}

namespace {

bool in_column(const Point& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] > x[i]) return false;
  return x.back() <= x.front() + 1;
}

Reduction reduce_a(const Point& x) {
  const int n = static_cast<int>(x.size());
  Reduction r{x, {}, {}};
  // Bubble sort with w_1..w_{n-1}; w_n shrinks the spread once sorted. The
  // sum of squares drops strictly with each w_n move, so this terminates;
  // the fuel only guards against a broken convention.
  std::size_t fuel = 100'000;
  while (!in_column(r.reduced) && fuel) {
    bool swapped = false;
    for (int i = 1; i < n; ++i)
      if (r.reduced[i - 1] > r.reduced[i]) {
        r.reduced = apply_generator(r.reduced, i);
        r.a_witness.push_back(i);
        swapped = true;
        --fuel;
      }
    if (!swapped && r.reduced.back() > r.reduced.front() + 1) {
      r.reduced = apply_generator(r.reduced, n);
      r.a_witness.push_back(n);
      --fuel;
    }
  }
  if (in_column(r.reduced)) return r;

  // Fallback: breadth-first orbit search.
  std::map<Point, std::vector<int>> seen{{x, {}}};
  std::deque<Point> queue{x};
  while (!queue.empty() && seen.size() < 1'000'000) {
    Point p = queue.front();
    queue.pop_front();
    if (in_column(p)) return {p, seen[p], {}};
    for (int i = 1; i <= n; ++i) {
      Point q = apply_generator(p, i);
      if (seen.count(q)) continue;
      auto w = seen[p];
      w.push_back(i);
      seen.emplace(q, std::move(w));
      queue.push_back(std::move(q));
    }
  }
  throw std::logic_error("coxeter: reduction to the fundamental column failed");
}

Reduction reduce_c(const Point& x) {
  const int n = static_cast<int>(x.size());
  Reduction r{x, {}, {}};
  for (int i = 1; i <= n; ++i) {
    const auto c = r.reduced[i - 1];
    const std::int64_t target = mod(c, 2);
    if (c == target) continue;
    // Reflect in x_i = k, with 2k - c = target.
    const CMove m{CMove::Kind::reflect, i, (c + target) / 2};
    r.reduced = apply_move(r.reduced, m);
    r.c_witness.push_back(m);
  }
  for (int pass = 0; pass < n; ++pass)
    for (int i = 1; i < n; ++i)
      if (r.reduced[i - 1] < r.reduced[i]) {
        const CMove m{CMove::Kind::swap, i, 0};
        r.reduced = apply_move(r.reduced, m);
        r.c_witness.push_back(m);
      }
  return r;
}

}  // namespace

Reduction reduce_to_fundamental(Family f, const Point& x) {
  if (x.empty()) throw InputError("coxeter: empty point");
  return f == Family::a_extended ? reduce_a(x) : reduce_c(x);
}

Point apply_witness(Family f, const Point& x, const Reduction& r) {
  Point y = x;
  if (f == Family::a_extended) {
    for (int g : r.a_witness) y = apply_generator(y, g);
  } else {
    for (const auto& m : r.c_witness) y = apply_move(y, m);
  }
  return y;
}

std::string format(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::vector<Point> window(int n, std::int64_t lo, std::int64_t hi) {
  if (n < 1 || n > 6) throw InputError("coxeter: dimension must lie in [1, 6]");
  std::vector<Point> out;
  if (lo > hi) return out;
  Point p(n, lo);
  while (true) {
    out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

std::vector<std::uint8_t> strict_relation(Family f, const std::vector<Point>& points) {
  const std::size_t m = points.size();
  std::vector<std::uint8_t> rel(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto c = compare(f, points[a], points[b]);
      if (c == Cmp::less) rel[a * m + b] = 1;
      if (c == Cmp::greater) rel[b * m + a] = 1;
    }
  return rel;
}

namespace {

FinitePoset poset_on(Family f, const std::vector<Point>& pts) {
  const auto rel = strict_relation(f, pts);
  std::vector<std::string> ids;
  for (const auto& p : pts) ids.push_back(format(p));
  const std::size_t m = pts.size();
  return FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) { return rel[a * m + b] != 0; });
}

}  // namespace

FinitePoset c_window_poset(int n, std::int64_t lo, std::int64_t hi) {
  return poset_on(Family::c, window(n, lo, hi));
}

FinitePoset local_poset_a(const Point& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1 || n > 10) throw InputError("coxeter: dimension must lie in [1, 10]");
  std::vector<Point> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Point p = v;
    for (int i = 0; i < n; ++i) p[i] += (mask >> i) & 1;
    pts.push_back(std::move(p));
  }
  return poset_on(Family::a_extended, pts);
}

LocalPosetC local_poset_c(const Point& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1 || n > 4) throw InputError("coxeter: C local posets need 1 <= n <= 4");
  std::vector<Point> below{}, above{};
  for (const auto& d : window(n, -1, 1)) {
    Point w = v;
    for (int i = 0; i < n; ++i) w[i] += d[i];
    const auto c = compare(Family::c, w, v);
    if (c == Cmp::less) below.push_back(w);
    if (c == Cmp::greater) above.push_back(w);
  }
  std::vector<Point> full = below;
  full.push_back(v);
  full.insert(full.end(), above.begin(), above.end());
  std::vector<Point> lower = below, upper{v};
  lower.push_back(v);
  upper.insert(upper.end(), above.begin(), above.end());

  bool certificate = true;
  for (const auto& b : below)
    for (const auto& a : above) certificate = certificate && compare(Family::c, b, a) == Cmp::less;
  return {poset_on(Family::c, full), poset_on(Family::c, lower), poset_on(Family::c, upper),
          certificate, c_type(v)};
}

}  // namespace hellylat::coxeter
