#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hellylat/poset.hpp"

namespace hellylat::garside {

/// Index of a simple element (a permutation of 1..n) inside SimplesLattice.
using Simple = std::uint16_t;

/// Simples of the classical Garside structure on B_n: permutations of
/// {1..n} with the prefix (left weak) order. Products compose as maps,
/// (uv)(i) = u(v(i)), so right-multiplying by s_i swaps positions i, i+1 of
/// the one-line notation.
class SimplesLattice {
 public:
  /// 2 <= n <= 6; throws InputError otherwise. The lattice axioms are
  /// verified on construction.
  explicit SimplesLattice(int n);

  int strands() const { return n_; }
  std::size_t size() const { return perms_.size(); }

  Simple identity() const { return identity_; }
  Simple delta() const { return delta_; }
  /// Atom s_i, 1 <= i <= n-1.
  Simple atom(int i) const;
  std::vector<Simple> atoms() const;

  const std::vector<int>& perm(Simple a) const { return perms_[a]; }
  Simple from_perm(const std::vector<int>& p) const;
  int length(Simple a) const { return len_[a]; }

  /// Permutation product (not necessarily simple as a braid product).
  Simple compose(Simple a, Simple b) const { return compose_[a * size() + b]; }
  Simple perm_inverse(Simple a) const { return inverse_[a]; }
  /// True iff a·b is again simple (lengths add).
  bool product_is_simple(Simple a, Simple b) const {
    return len_[a] + len_[b] == len_[compose(a, b)];
  }

  bool leq(Simple a, Simple b) const { return (inv_[a] & ~inv_[b]) == 0; }
  Simple meet(Simple a, Simple b) const;
  Simple join(Simple a, Simple b) const;
  /// a^{-1}Δ, the simple completing a to Δ on the right.
  Simple right_complement(Simple a) const { return compose(inverse_[a], delta_); }
  /// Δa^{-1}, the simple completing a to Δ on the left.
  Simple left_complement(Simple a) const { return compose(delta_, inverse_[a]); }
  /// Δ^{-1} a Δ.
  Simple tau(Simple a) const { return tau_[a]; }

  /// Reduced word (lexicographically first) as atom indices.
  std::vector<int> word(Simple a) const;
  /// "s1s2s1"; the identity prints as "1".
  std::string format(Simple a) const;

  /// Simples as a poset under the prefix order, labelled by format().
  FinitePoset as_poset() const;

 private:
  int n_;
  std::vector<std::vector<int>> perms_;
  std::vector<int> len_;
  std::vector<std::uint32_t> inv_;
  std::vector<Simple> compose_, inverse_, tau_;
  std::vector<int> code_to_index_;
  Simple identity_ = 0, delta_ = 0;
};

/// Left-greedy normal form Δ^inf · body[0] ··· body[k-1] with proper simples.
struct BraidElement {
  int inf = 0;
  std::vector<Simple> body;

  int sup() const { return inf + static_cast<int>(body.size()); }
  friend bool operator==(const BraidElement&, const BraidElement&) = default;
  friend auto operator<=>(const BraidElement&, const BraidElement&) = default;
};

/// Signed atom: +i is s_i, -i is s_i^{-1}.
using Word = std::vector<int>;

BraidElement identity_element();
BraidElement delta_power(int k);
BraidElement from_simple(const SimplesLattice& ctx, Simple a);

BraidElement normal_form(const SimplesLattice& ctx, const Word& word);
BraidElement multiply(const SimplesLattice& ctx, const BraidElement& g, const BraidElement& h);
BraidElement inverse(const SimplesLattice& ctx, const BraidElement& g);
/// Expands back into a word (Δ powers spelled out).
Word to_word(const SimplesLattice& ctx, const BraidElement& g);

/// Checks the structural invariants: proper simples, left-weighted pairs.
bool is_normal(const SimplesLattice& ctx, const BraidElement& g);

/// g <=_L h, i.e. g^{-1}h is positive.
bool prefix_leq(const SimplesLattice& ctx, const BraidElement& g, const BraidElement& h);

/// All h with lo <=_L h <=_L hi, by BFS over right multiplication by atoms.
/// Throws CapExceeded beyond `cap` elements. Sorted.
std::vector<BraidElement> interval(const SimplesLattice& ctx, const BraidElement& lo,
                                   const BraidElement& hi, std::size_t cap = 200'000);

struct WindowOps {
  BraidElement meet, join;
};

/// Meet and join of g, h by exhaustive scan of the window [lo, hi]. Throws
/// InputError if g or h lies outside the window.
WindowOps lattice_ops_window(const SimplesLattice& ctx, const BraidElement& g,
                             const BraidElement& h, const BraidElement& lo,
                             const BraidElement& hi, std::size_t cap = 200'000);

/// Ball of radius k around g in the thickening graph (x ~ y iff
/// xΔ^{-1} <= y <= xΔ), computed by BFS. Before returning, the result is
/// compared with the interval [gΔ^{-k}, gΔ^k]; a mismatch throws
/// std::logic_error.
std::vector<BraidElement> thickening_ball(const SimplesLattice& ctx, const BraidElement& g,
                                          int k, std::size_t cap = 200'000);

/// Parses "s1,s2,-s1" (whitespace tolerated, empty string is the identity).
Word parse_word(const SimplesLattice& ctx, const std::string& text);
/// "d^p | s1s2 . s2"; empty body prints as "d^p |".
std::string format(const SimplesLattice& ctx, const BraidElement& g);

/// Uniform random word of the given length over the signed atoms (or positive
/// atoms only).
Word random_word(const SimplesLattice& ctx, std::mt19937_64& rng, std::size_t length,
                 bool positive_only = false);

}  // namespace hellylat::garside
