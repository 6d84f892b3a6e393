#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypergrass/ksubset.hpp"
#include "hypergrass/sorting.hpp"

namespace hypergrass {

/// Partial order on all k-subsets of [n] describing provable (or observed)
/// relations between normalized minor values for a maximal sorted collection
/// J.  Nodes are grouped into value-equality classes; `strict` holds the
/// transitively closed strict order on class representatives.
class MinorPoset {
 public:
  int k = 0, n = 0;
  std::vector<KSubset> nodes;            ///< all k-subsets, lexicographic
  std::vector<int> rep;                  ///< class representative per node
  std::vector<std::vector<char>> strict; ///< rep-level, closed: u < v
  /// Base-edge provenance, keyed by representative pair (lesser, greater).
  std::map<std::pair<int, int>, std::string> provenance;

  int index_of(const KSubset& s) const;
  /// True when the value of `a` is provably/observably below that of `b`.
  bool less(const KSubset& a, const KSubset& b) const;
  bool same_class(const KSubset& a, const KSubset& b) const;
  /// Value-equality classes, each lex-sorted, ordered by smallest member.
  std::vector<std::vector<KSubset>> classes() const;
  /// Transitive reduction of the strict order (representative index pairs
  /// (lesser, greater)), ascending.
  std::vector<std::pair<int, int>> hasse() const;
  /// All strict representative pairs (lesser, greater), ascending.
  std::vector<std::pair<int, int>> strict_pairs() const;
};

/// Derive the provable order: members of J tie at the top; every non-member
/// sits strictly below; and each unsorted pair {X,Y} with sorted images
/// {X',Y'} satisfies the product inequality v(X')v(Y') > v(X)v(Y), which
/// turns one known comparison into a new strict edge.  The rules are applied
/// to a fixpoint together with transitive closure.
/// Raises: not_maximal, inconsistent_poset, size_limit.
MinorPoset infer_poset(const SortedCollection& J);

/// Observe the order empirically: normalize `trials` random totally positive
/// points against J and keep exactly the relations that hold in every trial.
/// Raises: not_maximal, parameter_mismatch, size_limit.
MinorPoset empirical_poset(const SortedCollection& J, int trials,
                           std::uint64_t seed);

}  // namespace hypergrass
