#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hellylat/poset.hpp"

namespace hellylat::coxeter {

/// Thin models on Z^n: the extended complex of type Ã_{n-1} and the
/// complex of type C̃_n.
enum class Family { a_extended, c };

using Point = std::vector<std::int64_t>;

enum class Cmp { less, greater, equal, incomparable };

/// A_extended: u < v iff u <= v <= u + (1,...,1) componentwise.
/// C: u < v iff u, v are adjacent and type(u) < type(v).
/// Throws InputError on dimension mismatch.
Cmp compare(Family f, const Point& u, const Point& v);

// ---- A_extended -----------------------------------------------------------

/// Generator w_i, 1 <= i <= n: w_i (i < n) swaps x_i and x_{i+1};
/// w_n maps x to (x_n - 1, x_2, ..., x_{n-1}, x_1 + 1).
Point apply_generator(const Point& x, int i);
/// Height sum(x_i); the building type is the height mod n.
std::int64_t height(const Point& x);
int building_type(const Point& x);
/// Comparability from the simplices themselves: distinct u and v lie in a common
/// W-translate of a fundamental chain k <= x_i <= ... <= x_{i+n-1} <= k+1
/// (indices past n read as x_{j+n} = x_j + 1). Used to validate compare().
bool a_share_simplex(const Point& u, const Point& v);

// ---- C --------------------------------------------------------------------

/// Number of odd coordinates (the index i of the orbit of v_i).
int c_type(const Point& x);
/// Adjacency by brute force over W = (2Z)^n ⋊ signed permutations: some
/// element maps both points to distinct vertices of the fundamental
/// orthoscheme v_0 = 0, v_1 = (1,0,...,0), ..., v_n = (1,...,1).
bool c_adjacent(const Point& u, const Point& v);

/// Reflection x_i -> 2k - x_i, or transposition of coordinates i, i+1
/// (1-based).
struct CMove {
  enum class Kind { reflect, swap } kind = Kind::swap;
  int i = 1;
  std::int64_t k = 0;
};
Point apply_move(const Point& x, const CMove& m);

struct Reduction {
  Point reduced;
  std::vector<int> a_witness;    // generator indices, applied in order
  std::vector<CMove> c_witness;  // moves, applied in order
};

/// A_extended: the unique point of the column x_1 <= ... <= x_n <= x_1 + 1
/// in the orbit. C: the vertex v_i of the fundamental orthoscheme.
Reduction reduce_to_fundamental(Family f, const Point& x);
Point apply_witness(Family f, const Point& x, const Reduction& r);

/// A_extended local poset at v: the box {v + e : e in {0,1}^n} ordered by
/// compare(); v and v + (1,...,1) are its bounds.
FinitePoset local_poset_a(const Point& v);

/// C local poset at v: v with its neighbours, plus the halves below and
/// above v (each containing v) and whether every below/above pair is
/// comparable.
struct LocalPosetC {
  FinitePoset full;
  FinitePoset below;  // v is the maximum
  FinitePoset above;  // v is the minimum
  bool product_certificate = false;
  int type = 0;
};
LocalPosetC local_poset_c(const Point& v);

/// All points of [lo, hi]^n in lexicographic order.
std::vector<Point> window(int n, std::int64_t lo, std::int64_t hi);
/// Strict relation table (row-major) of compare() == less on `points`.
std::vector<std::uint8_t> strict_relation(Family f, const std::vector<Point>& points);
/// Vertex poset of a C̃_n window (a genuine partial order).
FinitePoset c_window_poset(int n, std::int64_t lo, std::int64_t hi);

std::string format(const Point& x);

}  // namespace hellylat::coxeter
