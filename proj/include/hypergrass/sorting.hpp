#pragma once

#include <vector>

#include "hypergrass/ksubset.hpp"

namespace hypergrass {

/// Result of merging two k-subsets: the non-decreasing merge a_1 <= ... <=
/// a_2k of the multiset union is split into odd positions (first) and even
/// positions (second).  Both parts are again valid k-subsets because no value
/// can occur three times in the union of two sets.
struct SortPair {
  KSubset first;   ///< {a_1, a_3, ..., a_{2k-1}}
  KSubset second;  ///< {a_2, a_4, ..., a_{2k}}
};

/// Sorting operator on a pair of k-subsets of the same ground set.
SortPair sort_merge(const KSubset& I, const KSubset& J);

/// A pair is sorted iff {Sort1, Sort2} = {I, J} as sets.  (I, I) is sorted.
bool is_sorted_pair(const KSubset& I, const KSubset& J);

/// Pairwise sortedness of a collection (production definition).
bool is_sorted_collection(const std::vector<KSubset>& members);

/// Independent characterisation used as a test oracle: after ordering the
/// members lexicographically, the chain
///   a_1^1 <= a_1^2 <= ... <= a_1^r <= a_2^1 <= ... <= a_k^r
/// of first elements, then second elements, ... must be non-decreasing.
bool is_sorted_collection_chain(std::vector<KSubset> members);

/// k=2 only: every pair of edges of the collection either shares an endpoint
/// or crosses when the ground set is drawn on a circle.  Implemented from the
/// literal crossing condition; coincides with pairwise sortedness.
bool is_thrackle(const std::vector<KSubset>& edges);

/// I and J are weakly separated iff, writing I\J = {a_1<...<a_r} and
/// J\I = {b_1<...<b_r}, all b's fit into a single gap of the a-sequence
/// (or vice versa).
bool is_weakly_separated_pair(const KSubset& I, const KSubset& J);

/// --- lattice-distance tools on 0/1 vectors ------------------------------

/// Number of hyperplanes {x_i + ... + x_j = r}, r integer, separating y from
/// x: either x and y lie in the two open half-spaces, or y lies on the plane
/// while x does not.  Production path: |sum_x - sum_y| over the interval.
int d_ij(const EpsilonVector& x, const EpsilonVector& y, int i, int j);

/// Reference implementation that enumerates candidate levels r literally and
/// applies the separation definition clause by clause.  Kept as the oracle
/// the production shortcut is tested against.
int d_ij_hyperplane_count(const EpsilonVector& x, const EpsilonVector& y,
                          int i, int j);

/// y lies in the radius-r ball around x: d_ij(x, y) <= r for all intervals.
bool in_ball(const EpsilonVector& y, const EpsilonVector& x, int r);

/// max over all intervals of d_ij(x, y); two 0/1 vectors with equal sums are
/// a sorted pair iff this is <= 1.
int max_interval_distance(const EpsilonVector& x, const EpsilonVector& y);

/// --- sorted collections ---------------------------------------------------

/// An (unordered) collection of pairwise-sorted k-subsets, stored in
/// canonical lexicographic member order.  `maximal()` means size n, which is
/// the maximal possible size by the triangulation correspondence.
class SortedCollection {
 public:
  /// Validates pairwise sortedness (throws not_sorted) and consistency of
  /// (n, k) across members.
  SortedCollection(int n, int k, std::vector<KSubset> members);

  int n() const { return n_; }
  int k() const { return k_; }
  bool maximal() const { return static_cast<int>(members_.size()) == n_; }
  const std::vector<KSubset>& members() const { return members_; }
  bool contains(const KSubset& s) const;
  std::size_t size() const { return members_.size(); }

  bool operator==(const SortedCollection& o) const {
    return n_ == o.n_ && k_ == o.k_ && members_ == o.members_;
  }
  bool operator<(const SortedCollection& o) const {
    return members_ < o.members_;
  }

  std::string str() const;

 private:
  int n_, k_;
  std::vector<KSubset> members_;
};

/// Parse "1,2;1,3;1,4;2,4" into a collection over {1..n} (k inferred).
SortedCollection parse_collection(const std::string& text, int n);

}  // namespace hypergrass
