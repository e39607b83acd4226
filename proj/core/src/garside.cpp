#include "hellylat/garside.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hellylat/bits.hpp"
#include "hellylat/errors.hpp"

namespace hellylat::garside {

namespace {

int perm_code(const std::vector<int>& p) {
  int code = 0;
  for (int x : p) code = code * static_cast<int>(p.size()) + (x - 1);
  return code;
}

}  // namespace

SimplesLattice::SimplesLattice(int n) : n_(n) {
  if (n < 2 || n > 6) throw InputError("braid strand count must lie in [2, 6]");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  int max_code = 1;
  for (int i = 0; i < n; ++i) max_code *= n;
  code_to_index_.assign(max_code, -1);
  do {
    code_to_index_[perm_code(p)] = static_cast<int>(perms_.size());
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms_.size();

  len_.resize(m);
  inv_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[perms_[a][i]] = i;
    std::uint32_t bits = 0;
    int k = 0, len = 0;
    for (int x = 1; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y, ++k)
        if (pos[y] < pos[x]) {
          bits |= 1U << k;
          ++len;
        }
    inv_[a] = bits;
    len_[a] = len;
  }
  identity_ = 0;  // first permutation in lexicographic order
  delta_ = static_cast<Simple>(m - 1);

  compose_.resize(m * m);
  inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perms_[a][i] - 1] = i + 1;
    inverse_[a] = from_perm(inv);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms_[a][perms_[b][i] - 1];
      compose_[a * m + b] = from_perm(c);
    }
  }
  tau_.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    tau_[a] = compose(compose(inverse_[delta_], static_cast<Simple>(a)), delta_);

  // Lattice check: the common lower set of every pair is the principal
  // ideal of the computed meet.
  std::vector<Bits> lower(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (leq(static_cast<Simple>(b), static_cast<Simple>(a))) lower[a].set(b);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Simple c = meet(static_cast<Simple>(a), static_cast<Simple>(b));
      if (!((lower[a] & lower[b]) == lower[c]))
        throw std::logic_error("simples do not form a lattice");
    }
}

Simple SimplesLattice::from_perm(const std::vector<int>& p) const {
  if (static_cast<int>(p.size()) != n_) throw InputError("permutation has wrong length");
  std::vector<int> seen(n_ + 1, 0);
  for (int x : p) {
    if (x < 1 || x > n_ || seen[x]++) throw InputError("not a permutation");
  }
  return static_cast<Simple>(code_to_index_[perm_code(p)]);
}

Simple SimplesLattice::atom(int i) const {
  if (i < 1 || i >= n_) throw InputError("atom index out of range: s" + std::to_string(i));
  std::vector<int> p(n_);
  std::iota(p.begin(), p.end(), 1);
  std::swap(p[i - 1], p[i]);
  return from_perm(p);
}

std::vector<Simple> SimplesLattice::atoms() const {
  std::vector<Simple> out;
  for (int i = 1; i < n_; ++i) out.push_back(atom(i));
  return out;
}

Simple SimplesLattice::meet(Simple a, Simple b) const {
  Simple x = identity_;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i < n_ && !grew; ++i) {
      const Simple s = atom(i);
      if (!product_is_simple(x, s)) continue;
      const Simple y = compose(x, s);
      if (leq(y, a) && leq(y, b)) {
        x = y;
        grew = true;
      }
    }
  }
  return x;
}

Simple SimplesLattice::join(Simple a, Simple b) const {
  // x -> xΔ complements inversion sets, so it reverses the order.
  return compose(meet(compose(a, delta_), compose(b, delta_)), delta_);
}

std::vector<int> SimplesLattice::word(Simple a) const {
  std::vector<int> w;
  while (a != identity_) {
    for (int i = 1; i < n_; ++i) {
      const Simple s = atom(i);
      if (leq(s, a)) {
        w.push_back(i);
        a = compose(s, a);
        break;
      }
    }
  }
  return w;
}

std::string SimplesLattice::format(Simple a) const {
  if (a == identity_) return "1";
  std::string s;
  for (int i : word(a)) s += "s" + std::to_string(i);
  return s;
}

FinitePoset SimplesLattice::as_poset() const {
  std::vector<std::string> ids;
  for (std::size_t a = 0; a < size(); ++a) ids.push_back(format(static_cast<Simple>(a)));
  return FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
    return leq(static_cast<Simple>(a), static_cast<Simple>(b));
  });
}

namespace {

class Builder {
 public:
  Builder(const SimplesLattice& ctx, BraidElement start) : ctx_(ctx), g_(std::move(start)) {}

  void mul_delta(int k) {
    g_.inf += k;
    if (k % 2 != 0)
      for (auto& b : g_.body) b = ctx_.tau(b);
  }

  void mul_simple(Simple a) {
    if (a == ctx_.identity()) return;
    if (a == ctx_.delta()) {
      mul_delta(1);
      return;
    }
    auto& body = g_.body;
    body.push_back(a);
    for (std::size_t i = body.size() - 1; i-- > 0;) {
      if (!push_left(i)) break;
    }
    tidy();
    if (!is_normal(ctx_, g_)) full_normalize();
  }

  void mul_atom(int signed_atom) {
    const int i = std::abs(signed_atom);
    const Simple s = ctx_.atom(i);
    if (signed_atom > 0) {
      mul_simple(s);
    } else {
      mul_delta(-1);
      mul_simple(ctx_.left_complement(s));
    }
  }

  BraidElement result() && { return std::move(g_); }

 private:
  // Moves the largest possible prefix of body[i+1] into body[i].
  bool push_left(std::size_t i) {
    auto& body = g_.body;
    const Simple c = ctx_.meet(ctx_.right_complement(body[i]), body[i + 1]);
    if (c == ctx_.identity()) return false;
    body[i] = ctx_.compose(body[i], c);
    body[i + 1] = ctx_.compose(ctx_.perm_inverse(c), body[i + 1]);
    return true;
  }

  void tidy() {
    auto& body = g_.body;
    std::size_t lead = 0;
    while (lead < body.size() && body[lead] == ctx_.delta()) ++lead;
    g_.inf += static_cast<int>(lead);
    body.erase(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(lead));
    std::erase(body, ctx_.identity());
  }

  void full_normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < g_.body.size(); ++i) changed = push_left(i) || changed;
      tidy();
      changed = changed || !is_normal(ctx_, g_);
    }
  }

  const SimplesLattice& ctx_;
  BraidElement g_;
};

}  // namespace

BraidElement identity_element() { return {}; }

BraidElement delta_power(int k) { return {k, {}}; }

BraidElement from_simple(const SimplesLattice& ctx, Simple a) {
  Builder b(ctx, {});
  b.mul_simple(a);
  return std::move(b).result();
}

bool is_normal(const SimplesLattice& ctx, const BraidElement& g) {
  for (auto b : g.body)
    if (b == ctx.identity() || b == ctx.delta()) return false;
  for (std::size_t i = 0; i + 1 < g.body.size(); ++i)
    if (ctx.meet(ctx.right_complement(g.body[i]), g.body[i + 1]) != ctx.identity()) return false;
  return true;
}

BraidElement normal_form(const SimplesLattice& ctx, const Word& word) {
  Builder b(ctx, {});
  for (int x : word) {
    if (x == 0) throw InputError("atom index 0 is not valid");
    b.mul_atom(x);
  }
  return std::move(b).result();
}

BraidElement multiply(const SimplesLattice& ctx, const BraidElement& g, const BraidElement& h) {
  Builder b(ctx, g);
  b.mul_delta(h.inf);
  for (auto s : h.body) b.mul_simple(s);
  return std::move(b).result();
}

BraidElement inverse(const SimplesLattice& ctx, const BraidElement& g) {
  Builder b(ctx, {});
  for (auto it = g.body.rbegin(); it != g.body.rend(); ++it) {
    b.mul_delta(-1);
    b.mul_simple(ctx.left_complement(*it));
  }
  b.mul_delta(-g.inf);
  return std::move(b).result();
}

Word to_word(const SimplesLattice& ctx, const BraidElement& g) {
  Word w;
  const auto dw = ctx.word(ctx.delta());
  for (int k = 0; k < std::abs(g.inf); ++k) {
    if (g.inf > 0) {
      w.insert(w.end(), dw.begin(), dw.end());
    } else {
      for (auto it = dw.rbegin(); it != dw.rend(); ++it) w.push_back(-*it);
    }
  }
  for (auto s : g.body)
    for (int i : ctx.word(s)) w.push_back(i);
  return w;
}

bool prefix_leq(const SimplesLattice& ctx, const BraidElement& g, const BraidElement& h) {
  return multiply(ctx, inverse(ctx, g), h).inf >= 0;
}

std::vector<BraidElement> interval(const SimplesLattice& ctx, const BraidElement& lo,
                                   const BraidElement& hi, std::size_t cap) {
  std::set<BraidElement> seen;
  if (!prefix_leq(ctx, lo, hi)) return {};
  std::deque<BraidElement> queue{lo};
  seen.insert(lo);
  const auto atoms = ctx.atoms();
  const auto hi_inv = inverse(ctx, hi);
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (auto s : atoms) {
      Builder b(ctx, x);
      b.mul_simple(s);
      auto y = std::move(b).result();
      if (seen.count(y)) continue;
      // y <= hi iff y^{-1} hi is positive iff hi^{-1} y has sup <= 0.
      if (multiply(ctx, hi_inv, y).sup() > 0) continue;
      if (seen.size() >= cap) throw CapExceeded("interval enumeration exceeds cap");
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

WindowOps lattice_ops_window(const SimplesLattice& ctx, const BraidElement& g,
                             const BraidElement& h, const BraidElement& lo,
                             const BraidElement& hi, std::size_t cap) {
  const auto window = interval(ctx, lo, hi, cap);
  auto inside = [&](const BraidElement& x) {
    return std::binary_search(window.begin(), window.end(), x);
  };
  if (!inside(g) || !inside(h)) throw InputError("lattice_ops_window: element outside the window");
  std::vector<BraidElement> lower, upper;
  for (const auto& x : window) {
    if (prefix_leq(ctx, x, g) && prefix_leq(ctx, x, h)) lower.push_back(x);
    if (prefix_leq(ctx, g, x) && prefix_leq(ctx, h, x)) upper.push_back(x);
  }
  auto extreme = [&](const std::vector<BraidElement>& xs, bool greatest) -> BraidElement {
    for (const auto& c : xs) {
      bool ok = true;
      for (const auto& x : xs) {
        ok = greatest ? prefix_leq(ctx, x, c) : prefix_leq(ctx, c, x);
        if (!ok) break;
      }
      if (ok) return c;
    }
    throw std::logic_error("window has no extreme bound");
  };
  return {extreme(lower, true), extreme(upper, false)};
}

std::vector<BraidElement> thickening_ball(const SimplesLattice& ctx, const BraidElement& g,
                                          int k, std::size_t cap) {
  if (k < 0) throw InputError("thickening_ball: negative radius");
  const auto steps = interval(ctx, delta_power(-1), delta_power(1), cap);
  std::set<BraidElement> ball{g};
  std::vector<BraidElement> frontier{g};
  for (int r = 0; r < k; ++r) {
    std::vector<BraidElement> next;
    for (const auto& x : frontier)
      for (const auto& d : steps) {
        auto y = multiply(ctx, x, d);
        if (ball.insert(y).second) {
          if (ball.size() > cap) throw CapExceeded("thickening ball exceeds cap");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<BraidElement> out(ball.begin(), ball.end());
  const auto expected =
      interval(ctx, multiply(ctx, g, delta_power(-k)), multiply(ctx, g, delta_power(k)), cap);
  if (out != expected) throw std::logic_error("thickening ball differs from its interval");
  return out;
}

Word parse_word(const SimplesLattice& ctx, const std::string& text) {
  Word w;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("braid word '" + text + "': " + why);
  };
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    if (tok.empty()) {
      fail("empty atom");
    } else {
      int sign = 1;
      std::size_t i = 0;
      if (tok[0] == '-') {
        sign = -1;
        i = 1;
      }
      if (i >= tok.size() || tok[i] != 's') fail("expected an atom like s1 or -s2");
      const auto digits = tok.substr(i + 1);
      if (digits.empty() || digits.size() > 2 ||
          !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail("bad atom index in '" + tok + "'");
      const int idx = std::stoi(digits);
      if (idx < 1 || idx >= ctx.strands())
        fail("atom s" + digits + " out of range for " + std::to_string(ctx.strands()) + " strands");
      w.push_back(sign * idx);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return w;
}

std::string format(const SimplesLattice& ctx, const BraidElement& g) {
  std::string s = "d^" + std::to_string(g.inf) + " |";
  for (std::size_t i = 0; i < g.body.size(); ++i) {
    s += i ? " . " : " ";
    s += ctx.format(g.body[i]);
  }
  return s;
}

Word random_word(const SimplesLattice& ctx, std::mt19937_64& rng, std::size_t length,
                 bool positive_only) {
  const auto k = static_cast<std::uint64_t>(ctx.strands() - 1);
  Word w(length);
  for (auto& x : w) {
    const auto r = rng() % (positive_only ? k : 2 * k);
    x = r < k ? static_cast<int>(r) + 1 : -static_cast<int>(r - k) - 1;
  }
  return w;
}

}  // namespace hellylat::garside
