#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hellylat/helly.hpp"
#include "hellylat/poset.hpp"

namespace hellylat::affine {

using Rational = boost::rational<std::int64_t>;

/// A bounded graded lattice L of rank n >= 1 together with the step group
/// H = (1/denom)Z. Coordinates of points are stored as integers counting
/// units of 1/denom.
class AffineContext {
 public:
  /// Throws InputError unless `base` is a bounded graded lattice of rank >= 1
  /// and denom >= 1.
  explicit AffineContext(FinitePoset base, std::int64_t denom = 1);

  const FinitePoset& base() const { return *base_; }
  int rank() const { return n_; }
  std::int64_t denom() const { return denom_; }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  int rank_of(Elem e) const { return ranks_[e]; }
  const std::vector<Elem>& of_rank(int r) const { return by_rank_.at(r); }
  bool leq(Elem a, Elem b) const { return base_->leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * base_->size() + b]; }

  /// Context over the order-dual lattice (same element indices).
  const AffineContext& dual() const;

 private:
  AffineContext(std::shared_ptr<const FinitePoset> base, std::int64_t denom, bool with_dual);

  std::shared_ptr<const FinitePoset> base_;
  std::int64_t denom_ = 1;
  int n_ = 0;
  Elem bottom_ = kNoElem, top_ = kNoElem;
  std::vector<int> ranks_;
  std::vector<std::vector<Elem>> by_rank_;
  std::vector<Elem> meet_;
  std::shared_ptr<const AffineContext> dual_;
};

/// Canonical point [c, u] of M_H: u weakly increasing (in units), and the
/// chain entry of rank k kept only at jump positions (u_k < u_{k+1}).
/// entry[0] is always the minimum, entry[n] the maximum, and other
/// positions hold kNoElem when they are not jumps. Index k of `u` is the
/// coordinate u_{k+1}.
struct MPoint {
  std::vector<std::int64_t> u;
  std::vector<Elem> entry;

  bool is_jump(std::size_t k) const { return k > 0 && k < u.size() && u[k - 1] < u[k]; }
  /// Jump position -> chain element.
  std::map<std::size_t, Elem> jumps() const;

  friend bool operator==(const MPoint&, const MPoint&) = default;
  friend auto operator<=>(const MPoint&, const MPoint&) = default;
};

/// Point from a maximal chain (bottom to top, n+1 elements) and rational
/// coordinates. Throws InputError if u is not weakly increasing, leaves H,
/// or the chain is not maximal.
MPoint make_point(const AffineContext& ctx, std::span<const Elem> chain,
                  std::span<const Rational> u);
/// Same with integer unit coordinates.
MPoint make_point_units(const AffineContext& ctx, std::span<const Elem> chain,
                        std::vector<std::int64_t> u);
/// Point from coordinates and explicit jump entries; every jump must be
/// given, entries must have the right rank and form a chain.
MPoint point_from_jumps(const AffineContext& ctx, std::vector<std::int64_t> u,
                        const std::map<std::size_t, Elem>& jumps);
/// The constant point (t, ..., t), in units.
MPoint constant_point(const AffineContext& ctx, std::int64_t t);

/// Throws InputError when p is not a canonical point of ctx.
void validate(const AffineContext& ctx, const MPoint& p);

/// Data (i, j, b) of an elementary superior α[i, j, b]: positions
/// 1 <= i <= j <= n and an element b of rank i-1.
struct ElementaryStep {
  int i = 1, j = 1;
  Elem b = kNoElem;
  friend bool operator==(const ElementaryStep&, const ElementaryStep&) = default;
};

std::vector<ElementaryStep> admissible_steps(const AffineContext& ctx, const MPoint& a);
/// Throws InputError if the step is not admissible at a.
MPoint apply_step(const AffineContext& ctx, const MPoint& a, const ElementaryStep& s);
std::vector<MPoint> elementary_superiors(const AffineContext& ctx, const MPoint& a);
/// The step turning a into b, when b is elementarily superior to a.
std::optional<ElementaryStep> step_between(const AffineContext& ctx, const MPoint& a,
                                           const MPoint& b);

enum class LeqMode { criterion, oracle };

/// Order of M_H. The criterion compares coordinates and, for each jump j of
/// a, the entry of b at the first position whose coordinate reaches
/// a's next level. The oracle searches elementary-step paths from a that
/// stay below b coordinatewise.
bool leq(const AffineContext& ctx, const MPoint& a, const MPoint& b,
         LeqMode mode = LeqMode::criterion);

MPoint translate_units(const MPoint& a, std::int64_t t);
/// Throws InputError if t is not in H.
MPoint translate(const AffineContext& ctx, const MPoint& a, const Rational& t);

/// Least upper bound, built from a common lower bound and elementary paths
/// by the two-step induction on path lengths.
MPoint join(const AffineContext& ctx, const MPoint& b, const MPoint& c);
/// Greatest lower bound, computed as a join in the dual context.
MPoint meet(const AffineContext& ctx, const MPoint& b, const MPoint& c);
/// Involution M_H(L) -> M_H(L^op) reversing the order.
MPoint to_dual(const MPoint& a);

/// min{t >= 0 : translate(x,-t) <= y <= translate(x,t)} in units.
std::int64_t distance_units(const AffineContext& ctx, const MPoint& x, const MPoint& y);
Rational distance(const AffineContext& ctx, const MPoint& x, const MPoint& y);

/// Point z with d(x,z) <= r and d(z,y) <= d(x,y) - r. Throws InputError if
/// r is outside [0, d(x,y)] or not in H.
MPoint geodesic_point(const AffineContext& ctx, const MPoint& x, const MPoint& y,
                      const Rational& r);

/// Every point of the interval [lo, hi], sorted. Throws CapExceeded.
std::vector<MPoint> enumerate_interval(const AffineContext& ctx, const MPoint& lo,
                                       const MPoint& hi, std::size_t cap = 200'000);

/// All points with every coordinate in [lo, hi] units, sorted.
std::vector<MPoint> window_points(const AffineContext& ctx, std::int64_t lo, std::int64_t hi,
                                  std::size_t cap = 200'000);

struct ThickeningWindow {
  std::vector<MPoint> points;  // sorted; vertex v of graph is points[v]
  SimpleGraph graph;
  std::size_t index_of(const MPoint& p) const;
};

/// Graph on I(center - radius, center + radius) (radius in real units) with
/// x ~ y iff translate(x,-1) <= y <= translate(x,1).
ThickeningWindow thickening_window(const AffineContext& ctx, const MPoint& center, int radius,
                                   std::size_t cap = 200'000);
/// Same edge rule on an arbitrary point set.
SimpleGraph thickening_graph(const AffineContext& ctx, const std::vector<MPoint>& points);

/// Discretized orthoscheme distance d_k between points of I(0_M, 1_M)
/// (all coordinates in [0, 1]): the least t in (1/k)Z with
/// translate(x,-t) <= y <= translate(x,t). Points may use any denominator;
/// d <= d_k <= d + 1/k and d_{k'} <= d_k whenever k divides k'.
Rational orthoscheme_distance(const AffineContext& ctx, const MPoint& x, const MPoint& y,
                              std::int64_t k);

/// True iff the base is boolean_lattice(n) (element index = subset mask).
bool is_boolean_base(const AffineContext& ctx);
/// Coordinates in H^n of a point of M_H(Boolean_n): element e takes the
/// value u_j of the first jump j whose subset contains e (u_n if none).
std::vector<Rational> boolean_model(const AffineContext& ctx, const MPoint& p);
std::vector<std::int64_t> boolean_model_units(const AffineContext& ctx, const MPoint& p);
MPoint boolean_model_inverse(const AffineContext& ctx, std::span<const std::int64_t> x);

std::string format(const AffineContext& ctx, const MPoint& p);

}  // namespace hellylat::affine
