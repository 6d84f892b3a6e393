#pragma once

#include <map>
#include <set>
#include <vector>

#include "hypergrass/circuits.hpp"
#include "hypergrass/ksubset.hpp"
#include "hypergrass/sorting.hpp"

namespace hypergrass {

/// Grid position: the origin (0,0) is the lower-right vertex, i counts rows
/// upward, j counts columns leftward (the Young diagram is rotated 180
/// degrees, so horizontal edges (i,j+1)->(i,j) point "left to right" and
/// vertical edges (i,j)->(i+1,j) point "bottom to top").
struct GridPos {
  int i = 0, j = 0;
  friend bool operator<(const GridPos& x, const GridPos& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  }
  friend bool operator==(const GridPos& x, const GridPos& y) {
    return x.i == y.i && x.j == y.j;
  }
};

/// An oriented Young subgraph of the shift graph: every edge is a genuine
/// shift edge, the origin carries W, the outer boundary path carries
/// members of the reference collection, and the inner path realizes the
/// two-part permutation omega_H (horizontal labels, then vertical labels).
struct OrientedYoungGrid {
  int k = 0, n = 0;
  int h = 0, v = 0;          ///< horizontal / vertical edge counts per path
  std::vector<int> top;      ///< column heights top[0..h], non-increasing
  std::map<GridPos, KSubset> vertex_labels;
  std::vector<int> bottom_label;  ///< label of edges (i,j+1)->(i,j), index j
  std::vector<int> right_label;   ///< label of edges (i,j)->(i+1,j), index i
  std::vector<GridPos> outer_path;  ///< staircase from v0=(0,h) to v1=(v,0)
  std::vector<int> omega_H;         ///< permutation of the flattened circuit
  int anchor = 0;                   ///< element a_1 fixing the cyclic order
  bool a_equals_b = false;          ///< single-window-vertex (flattened) case

  bool contains(const GridPos& p) const;
  bool is_outer(const GridPos& p) const;
  const KSubset& label(const GridPos& p) const;
  const KSubset& origin() const { return label({0, 0}); }
  const KSubset& corner_v0() const { return label({0, h}); }
  const KSubset& corner_v1() const { return label({v, 0}); }
  std::string omega_H_str() const;
};

/// The contiguous arc of circuit vertices sorted with W, in circuit order
/// (front = B, back = A in the grid construction).  Empty when W is sorted
/// with no vertex.  Raises DegenerateQuery if W is a vertex of C, and
/// LemmaViolation if the sorted vertices fail to form one contiguous arc
/// (that would falsify the path lemma — surfaced, never patched).
std::vector<KSubset> sorted_window(const MinimalCircuit& C, const KSubset& W);

/// Construct the oriented Young grid with origin W and outer path inside J.
/// Raises NotApplicable when W is sorted with no member of J,
/// DegenerateQuery when W is a member, and ConstructionFailure if any step
/// of the construction fails its re-validation against the shift graph.
OrientedYoungGrid build_young_grid(const SortedCollection& J,
                                   const KSubset& W);

/// max{i+j-1 : (i,j) a vertex of H}.
int swapping_distance(const OrientedYoungGrid& H);

/// One strict inequality Delta_lesser < Delta_greater forced by the grid.
struct GridRelation {
  KSubset lesser, greater;
  GridPos at;            ///< position of the lesser vertex
  bool vertical = false; ///< true: greater is above; false: greater is left
};

/// For every non-outer vertex D: Delta_D < Delta_above and Delta_D <
/// Delta_left.  Deterministic order (positions ascending, vertical first).
std::vector<GridRelation> grid_inequalities(const OrientedYoungGrid& H);

/// A maximal chain of grid relations starting at the origin: up column 0,
/// then left along a row, reaching length exactly swapping_distance(H).
std::vector<GridPos> origin_chain(const OrientedYoungGrid& H);

/// The swapping distance s of the grid for (J, W); contract: W is
/// (>= s+1, J)-largest and the cubical distance from J to W is <= s.
int rank_lower_bound(const SortedCollection& J, const KSubset& W);

}  // namespace hypergrass
