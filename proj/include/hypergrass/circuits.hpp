#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "hypergrass/config.hpp"
#include "hypergrass/sorting.hpp"

namespace hypergrass {

/// Directed shift edges of the exchange graph on k-subsets of {1..n}:
/// an edge labelled i moves a member at position i to position i+1 (indices
/// mod n, so label n moves n to 1), available iff position i is occupied and
/// position i+1 is free.  Returned as (label, target) pairs, label ascending.
std::vector<std::pair<int, KSubset>> shift_neighbors(const KSubset& v);

/// A minimal (length n) directed circuit in the shift graph.  Edge labels
/// along the circuit form a permutation omega of {1..n}; the circuit is
/// stored in the canonical rotation that makes omega lexicographically least,
/// and vertices[t] -> vertices[(t+1) % n] is the edge labelled omega[t].
struct MinimalCircuit {
  int n = 0;
  int k = 0;
  std::vector<int> omega;
  std::vector<KSubset> vertices;

  /// The vertex set as a (maximal sorted) collection.
  SortedCollection collection() const;
  std::string omega_str() const;  ///< e.g. "56178243"
};

/// Reconstruct the unique minimal circuit whose edge labels read omega.
/// The start vertex is determined by the cyclic descent rule: position p is
/// initially occupied iff label p-1 occurs after label p in omega.  Throws
/// no_circuit when that initial vertex does not have exactly k members, and
/// parameter_mismatch when omega is not a permutation of {1..n}.
MinimalCircuit circuit_from_permutation(const std::vector<int>& omega, int k);

/// Inverse direction: the minimal circuit visiting exactly the members of a
/// maximal sorted collection.  Throws not_maximal / not_sorted accordingly.
MinimalCircuit permutation_from_collection(const SortedCollection& C);

/// All maximal sorted collections of k-subsets of {1..n} (the facets of the
/// circuit triangulation of the hypersimplex), in canonical order.  Uses
/// depth-first growth of shift circuits with pairwise-sortedness pruning.
/// Throws size_limit when the predicted count exceeds the configured cap.
std::vector<SortedCollection> enumerate_maximal_sorted(int k, int n);

/// Test oracle: enumerate size-n pairwise-sorted families directly by
/// lexicographic backtracking over all k-subsets, with no circuit machinery.
std::vector<SortedCollection> enumerate_maximal_sorted_bruteforce(int k, int n);

/// Eulerian number A(m, d): permutations of {1..m} with exactly d descents.
/// A(m,d) = (d+1) A(m-1,d) + (m-d) A(m-1,d-1).
mpz_class eulerian_number(int m, int d);

}  // namespace hypergrass
