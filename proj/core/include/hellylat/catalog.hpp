#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hellylat/helly.hpp"
#include "hellylat/poset.hpp"

namespace hellylat {

/// Description of a catalog poset. `children` holds the factors of a product
/// (two) or the operand of a dual (one); `graph` and `labels` feed fc_local.
struct EdgeLabel {
  std::size_t u = 0, v = 0;
  int m = 2;  // Coxeter label; 0 stands for infinity
};

struct CatalogSpec {
  std::string kind;
  std::map<std::string, std::int64_t> params;
  std::vector<CatalogSpec> children;
  std::optional<SimpleGraph> graph;
  std::vector<EdgeLabel> labels;
};

inline constexpr std::size_t kDefaultCatalogCap = 20'000;

/// Dispatches on spec.kind. Throws InputError for unknown kinds or bad
/// parameters and CapExceeded when the result would exceed `cap` elements.
FinitePoset generate(const CatalogSpec& spec, std::size_t cap = kDefaultCatalogCap);

/// Subsets of {1..n}; element i is the subset with bitmask i, labelled "{1,3}".
FinitePoset boolean_lattice(int n);
/// Set partitions of {1..n} under refinement (finer is smaller), labelled
/// like "12|3|4".
FinitePoset partition_lattice(int n);
/// Chain 0 < 1 < ... < n of length n.
FinitePoset chain(int n);
FinitePoset product(const FinitePoset& a, const FinitePoset& b);
/// Linear subspaces of F_q^n, q in {2,3,4,5}. Labels list the rows of the
/// reduced echelon basis, e.g. "<1000,0110>"; the zero space is "<>".
FinitePoset subspace_poset(int q, int n, std::size_t cap = kDefaultCatalogCap);
/// Totally isotropic subspaces (including 0) of F_q^{2m} with the standard
/// symplectic form sum x_i y'_{m+i} - x_{m+i} y'_i. Coordinates 1..m carry
/// e_1..e_m and m+1..2m carry f_1..f_m.
FinitePoset polar_space(int q, int dim, std::size_t cap = kDefaultCatalogCap);
/// S_n under the weak order by inclusion of inversion sets, one-line labels.
/// Element 0 is the identity; the longest element is the maximum.
FinitePoset weak_order(int n);
/// Noncrossing partitions of an n-cycle under refinement.
FinitePoset noncrossing_partitions(int n);
/// Square-free elements supported on cliques of a right-angled defining
/// graph, ordered by support inclusion. Labels other than 2 are rejected.
FinitePoset fc_local_poset(const SimpleGraph& g, const std::vector<EdgeLabel>& labels = {});
/// Seeded bounded graded poset with exactly `size` elements (size >= 2).
FinitePoset random_graded(std::uint64_t seed, int size, int density_pct = 50);

/// Label of span(vectors) in subspace_poset / polar_space conventions.
/// Vectors are coordinate lists over GF(q) (values 0..q-1).
std::string span_label(int q, const std::vector<std::vector<int>>& vectors);

/// Calls `fn` on every layered bounded graded poset with at most `max_size`
/// elements: a bottom, a top and middle rank levels with every element
/// covering and covered by something. Labelled (not reduced up to
/// isomorphism). Returns the number of posets visited.
std::size_t enumerate_bounded_graded(int max_size,
                                     const std::function<void(const FinitePoset&)>& fn);

}  // namespace hellylat
