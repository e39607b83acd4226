#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hellylat {

using Elem = std::size_t;
inline constexpr Elem kNoElem = static_cast<Elem>(-1);

/// A finite partially ordered set stored as a dense order table.
///
/// Elements are indexed 0..size()-1 and carry a distinct string identifier.
/// The order table is validated at construction (reflexive, antisymmetric,
/// transitive); instances are immutable afterwards.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds from an explicit relation table (row-major, size n*n, leq[a*n+b]
  /// true iff a <= b). Throws InputError if the table is not a partial order
  /// or identifiers repeat.
  FinitePoset(std::vector<std::string> ids, std::vector<std::uint8_t> leq);

  /// Builds from a generating relation (typically cover pairs lo < hi) by
  /// reflexive-transitive closure. Throws InputError on cycles.
  static FinitePoset from_covers(std::vector<std::string> ids,
                                 const std::vector<std::pair<Elem, Elem>>& covers);

  template <class Rel>
  static FinitePoset from_relation(std::vector<std::string> ids, Rel&& rel) {
    const std::size_t n = ids.size();
    std::vector<std::uint8_t> table(n * n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) table[a * n + b] = (a == b || rel(a, b)) ? 1 : 0;
    return FinitePoset(std::move(ids), std::move(table));
  }

  std::size_t size() const { return ids_.size(); }
  bool leq(Elem a, Elem b) const { return leq_[a * ids_.size() + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  const std::string& id(Elem e) const { return ids_.at(e); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Elem> find(const std::string& id) const;
  /// Like find() but throws InputError for unknown identifiers.
  Elem index_of(const std::string& id) const;

  std::vector<Elem> upper_covers(Elem x) const;
  std::vector<Elem> lower_covers(Elem x) const;
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  /// Same elements, reversed order.
  FinitePoset dual() const;
  /// Induced subposet on `subset` (element i of the result is subset[i]).
  FinitePoset induced(std::span<const Elem> subset) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::uint8_t> leq_;
};

struct PosetProfile {
  std::optional<Elem> bounded_below;
  std::optional<Elem> bounded_above;
  bool graded = false;
  std::optional<std::size_t> rank;  // set iff bounded and graded
  bool meet_semilattice = false;
  bool join_semilattice = false;
  bool lattice = false;
  bool flag = false;

  bool bounded() const { return bounded_below && bounded_above; }
};

/// Definition-level analysis by exhaustive search. `graded` means every
/// interval I(x,y) has all its maximal chains of one common length.
PosetProfile analyze(const FinitePoset& p);

/// Rank of every element (length of chains from the minimum); requires a
/// graded poset with a minimum, otherwise throws PreconditionError.
std::vector<std::size_t> rank_function(const FinitePoset& p);

enum class BoundKind { meet, join };

struct BoundResult {
  enum class Status { unique, none, ambiguous };
  Status status = Status::none;
  Elem element = kNoElem;          // valid when unique
  std::vector<Elem> candidates;    // all maximal lower / minimal upper bounds

  bool ok() const { return status == Status::unique; }
};

BoundResult bound(const FinitePoset& p, Elem x, Elem y, BoundKind kind);
BoundResult bound(const FinitePoset& p, const std::string& x, const std::string& y,
                  BoundKind kind);

std::vector<Elem> common_upper_bounds(const FinitePoset& p, std::span<const Elem> xs);
std::vector<Elem> common_lower_bounds(const FinitePoset& p, std::span<const Elem> xs);
std::vector<Elem> minimal_elements(const FinitePoset& p, std::span<const Elem> subset);
std::vector<Elem> maximal_elements(const FinitePoset& p, std::span<const Elem> subset);

struct Bowtie {
  Elem a, b, c, d;  // a, c upper; b, d lower
};

/// Searches for a bowtie. Requires a bounded graded poset.
std::optional<Bowtie> find_bowtie(const FinitePoset& p);
bool is_bowtie(const FinitePoset& p, const Bowtie& w);

/// Joins of pairwise upper-bounded families in a graded flag meet-semilattice
/// with a minimum. Construction validates the precondition once; join() is
/// then cheap enough for exhaustive sweeps.
class SemilatticeJoiner {
 public:
  explicit SemilatticeJoiner(const FinitePoset& p);

  /// Join of `xs` if the family is pairwise upper-bounded, otherwise nullopt.
  /// The empty family joins to the minimum.
  std::optional<Elem> join(std::span<const Elem> xs) const;

  bool pairwise_upper_bounded(std::span<const Elem> xs) const;

 private:
  std::optional<Elem> pair_join(Elem a, Elem b) const;
  std::optional<Elem> finite_join(std::vector<Elem> xs) const;

  const FinitePoset* p_;
  Elem bottom_;
  std::vector<std::size_t> rank_;
};

std::optional<Elem> family_join(const FinitePoset& p, std::span<const Elem> xs);

struct IntervalSpec {
  Elem lo, hi;
};

struct IntervalHellyResult {
  enum class Status { common_element, disjoint_pair, violation };
  Status status = Status::violation;
  Elem witness = kNoElem;
  std::pair<std::size_t, std::size_t> disjoint{0, 0};  // family indices
};

/// Checks a family of intervals: a disjoint pair is reported as such; for a
/// pairwise-intersecting family a common element is returned, or a violation
/// when none exists.
IntervalHellyResult interval_helly_check(const FinitePoset& p,
                                         std::span<const IntervalSpec> family);

std::vector<Elem> interval(const FinitePoset& p, Elem lo, Elem hi);

/// Every maximal chain once, each listed bottom-up. Throws CapExceeded when
/// more than `cap` chains exist.
std::vector<std::vector<Elem>> maximal_chains(const FinitePoset& p,
                                              std::size_t cap = 1'000'000);

/// Brute-force isomorphism test (backtracking with rank/degree pruning).
bool isomorphic(const FinitePoset& p, const FinitePoset& q);

}  // namespace hellylat
