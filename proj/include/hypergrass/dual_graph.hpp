#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypergrass/circuits.hpp"

namespace hypergrass {

/// One facet detour: replace `center` = I_t by `replacement` = I'_t, moving
/// element a down by one and element b up by one (cyclically).  Validity
/// requires both one-step variants `corner_c` = I_t[a -> a-1] and
/// `corner_d` = I_t[b -> b+1] to be members of the ambient collection.
struct DetourMove {
  KSubset center;       ///< I_t, the member being replaced
  KSubset replacement;  ///< I'_t
  KSubset corner_c;     ///< I_t with a -> a-1
  KSubset corner_d;     ///< I_t with b -> b+1
  int a = 0;            ///< member moved down (to a-1 mod n)
  int b = 0;            ///< member moved up (to b+1 mod n)
};

/// All valid detours of a maximal sorted collection, canonically ordered.
std::vector<DetourMove> facet_detours(const SortedCollection& C);

/// Facet-adjacent maximal collections (one detour applied), deduplicated and
/// canonically ordered.  Degree is at most n.
std::vector<SortedCollection> facet_neighbors(const SortedCollection& C);

/// The dual graph of the triangulation: vertices are the maximal sorted
/// collections, edges join collections sharing n-1 members.
struct DualGraph {
  int k = 0, n = 0;
  std::vector<SortedCollection> vertices;  ///< canonical order
  std::vector<std::vector<int>> adj;       ///< sorted index lists

  int index_of(const SortedCollection& c) const;  ///< -1 when absent
  std::size_t edge_count() const;
};

/// Production construction via the detour rule.
DualGraph build_dual_graph(int k, int n);

/// Test oracle: same vertex set, edges from literal (n-1)-member
/// intersections, no detour machinery.
DualGraph build_dual_graph_bruteforce(int k, int n);

/// A simultaneous set of pairwise-compatible detours (a cube move).  Two
/// detours are compatible when neither center lies in the other's triple,
/// i.e. no detour consumes a corner another detour needs.
struct CubeMove {
  std::vector<DetourMove> detours;
  std::size_t size() const { return detours.size(); }
};

/// Cube adjacency: Q is reachable from P by one simultaneous compatible
/// detour set.  Returns the move when adjacent (empty move iff P == Q),
/// std::nullopt otherwise.
std::optional<CubeMove> cube_adjacent(const SortedCollection& P,
                                      const SortedCollection& Q);

/// Geometric oracle for cube adjacency: some matching of the symmetric
/// difference realises all 2^m partial replacements as maximal sorted
/// collections (the vertices of a combinatorial m-cube).
std::optional<CubeMove> cube_adjacent_geometric(const SortedCollection& P,
                                                const SortedCollection& Q);

/// Cube-metric BFS distance between two vertices of the dual graph.
/// `geometric` switches the neighbour generator to the oracle rule.
int cubical_distance(const DualGraph& g, int from, int to,
                     bool geometric = false);
int cubical_distance(const SortedCollection& P, const SortedCollection& Q,
                     bool geometric = false);

/// Least cube distance from `from` to any vertex containing the subset W.
int cubical_distance_to_subset(const DualGraph& g, int from, const KSubset& W,
                               bool geometric = false);

/// Cube-metric BFS distances from `from` to every vertex (-1 = unreachable).
std::vector<int> cubical_distances(const DualGraph& g, int from,
                                   bool geometric = false);

}  // namespace hypergrass
