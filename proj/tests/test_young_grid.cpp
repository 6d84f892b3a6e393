#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypergrass/circuits.hpp"
#include "hypergrass/dual_graph.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/torus.hpp"
#include "hypergrass/young_grid.hpp"

using namespace hypergrass;

namespace {

MinimalCircuit worked_circuit() {
  return circuit_from_permutation({5, 6, 1, 7, 8, 2, 4, 3}, 3);
}

}  // namespace

TEST_CASE("sorted window of the (3,8) worked case") {
  const auto C = worked_circuit();
  const auto win = sorted_window(C, KSubset(8, {3, 5, 6}));
  CHECK(win == std::vector<KSubset>({KSubset(8, {1, 3, 5}),
                                     KSubset(8, {1, 4, 5}),
                                     KSubset(8, {1, 4, 6})}));
  CHECK_THROWS_AS(sorted_window(C, KSubset(8, {1, 4, 5})), error);  // member
  // Cells sorted with no vertex give the empty window.
  CHECK(sorted_window(C, KSubset(8, {5, 6, 7})).empty());
}

TEST_CASE("sorted windows are contiguous arcs of the circuit") {
  for (const auto& J : enumerate_maximal_sorted(3, 6)) {
    const auto C = permutation_from_collection(J);
    for (const auto& W : all_ksubsets(6, 3)) {
      if (J.contains(W)) continue;
      const auto win = sorted_window(C, W);
      std::size_t sorted_count = 0;
      for (const auto& v : C.vertices)
        if (is_sorted_pair(v, W)) ++sorted_count;
      CHECK(win.size() == sorted_count);  // contiguity: nothing is dropped
      for (const auto& v : win) CHECK(is_sorted_pair(v, W));
      if (!win.empty()) {
        // front..back is a forward arc in circuit order.
        const auto at = [&](const KSubset& x) {
          return std::find(C.vertices.begin(), C.vertices.end(), x) -
                 C.vertices.begin();
        };
        for (std::size_t t = 0; t + 1 < win.size(); ++t)
          CHECK((at(win[t]) + 1) % C.n == at(win[t + 1]) % C.n);
      }
    }
  }
}

TEST_CASE("oriented grid of the (3,8) worked case") {
  const auto J = worked_circuit().collection();
  const KSubset W(8, {3, 5, 6});
  const auto H = build_young_grid(J, W);

  CHECK(H.k == 3);
  CHECK(H.n == 8);
  CHECK(H.h == 3);
  CHECK(H.v == 3);
  CHECK(H.anchor == 4);
  CHECK_FALSE(H.a_equals_b);
  CHECK(H.top == std::vector<int>({3, 3, 3, 1}));
  CHECK(H.omega_H_str() == "12467835");
  CHECK(H.omega_H == std::vector<int>({1, 2, 4, 6, 7, 8, 3, 5}));

  CHECK(H.origin() == W);
  CHECK(H.corner_v0() == KSubset(8, {1, 4, 6}));
  CHECK(H.corner_v1() == KSubset(8, {1, 3, 5}));
  CHECK(H.label({0, 1}) == KSubset(8, {3, 4, 6}));
  CHECK(H.label({1, 1}) == KSubset(8, {3, 4, 7}));
  CHECK(H.label({2, 1}) == KSubset(8, {3, 4, 8}));
  CHECK(H.label({3, 1}) == KSubset(8, {1, 3, 4}));

  CHECK(H.outer_path ==
        std::vector<GridPos>({{0, 3}, {1, 3}, {1, 2}, {2, 2}, {3, 2}, {3, 1},
                              {3, 0}}));
  for (const auto& p : H.outer_path) {
    CHECK(H.is_outer(p));
    CHECK(J.contains(H.label(p)));
  }
  CHECK_FALSE(H.is_outer({0, 0}));
  CHECK_FALSE(J.contains(H.origin()));

  CHECK(swapping_distance(H) == 4);
  CHECK(origin_chain(H) ==
        std::vector<GridPos>({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}));
  CHECK(rank_lower_bound(J, W) == 4);

  CHECK(H.contains({0, 0}));
  CHECK(H.contains({3, 1}));
  CHECK_FALSE(H.contains({3, 3}));  // column 3 only reaches height 1
  CHECK_FALSE(H.contains({-1, 0}));
  CHECK_THROWS_AS(H.label({2, 3}), error);

  // Edge labels: h bottom labels and v right labels, all circuit labels.
  CHECK(H.bottom_label.size() == 3);
  CHECK(H.right_label.size() == 3);

  // omega_H is a permutation of 1..n.
  auto sorted_labels = H.omega_H;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  for (int i = 0; i < H.n; ++i) CHECK(sorted_labels[i] == i + 1);
}

TEST_CASE("the worked-case chain appears among the grid inequalities") {
  const auto H = build_young_grid(worked_circuit().collection(),
                                  KSubset(8, {3, 5, 6}));
  const auto rels = grid_inequalities(H);
  const std::vector<std::pair<KSubset, KSubset>> chain = {
      {KSubset(8, {3, 5, 6}), KSubset(8, {3, 4, 6})},
      {KSubset(8, {3, 4, 6}), KSubset(8, {3, 4, 7})},
      {KSubset(8, {3, 4, 7}), KSubset(8, {3, 4, 8})},
      {KSubset(8, {3, 4, 8}), KSubset(8, {1, 3, 4})}};
  for (const auto& [lo, hi] : chain)
    CHECK(std::any_of(rels.begin(), rels.end(), [&](const GridRelation& r) {
      return r.lesser == lo && r.greater == hi;
    }));

  // Each non-outer vertex contributes one vertical and one horizontal bound.
  std::size_t non_outer = 0;
  for (const auto& [pos, lbl] : H.vertex_labels)
    if (!H.is_outer(pos)) ++non_outer;
  CHECK(rels.size() == 2 * non_outer);
  for (const auto& r : rels) {
    CHECK_FALSE(H.is_outer(r.at));
    CHECK(H.label(r.at) == r.lesser);
    const GridPos up{r.at.i + 1, r.at.j}, left{r.at.i, r.at.j + 1};
    CHECK(H.label(r.vertical ? up : left) == r.greater);
  }
}

TEST_CASE("flattened case: both window endpoints coincide") {
  const auto J = parse_collection("1,2,3;1,2,4;1,2,5;1,3,5;1,3,6;2,3,6", 6);
  const KSubset W(6, {3, 4, 5});
  const auto win = sorted_window(permutation_from_collection(J), W);
  REQUIRE(win.size() == 1);
  CHECK(win.front() == KSubset(6, {1, 3, 5}));

  const auto H = build_young_grid(J, W);
  CHECK(H.a_equals_b);
  CHECK(H.h == 3);
  CHECK(H.v == 3);
  CHECK(H.anchor == 1);
  CHECK(H.top == std::vector<int>({3, 3, 2, 1}));
  CHECK(H.omega_H_str() == "132564");
  CHECK(H.corner_v0() == KSubset(6, {1, 3, 5}));
  CHECK(H.corner_v1() == KSubset(6, {1, 3, 5}));
  CHECK(H.origin() == W);
  CHECK(swapping_distance(H) == 3);
}

TEST_CASE("grids exist exactly when the window is non-empty") {
  int built = 0, skipped = 0;
  for (const auto& J : enumerate_maximal_sorted(3, 6)) {
    const auto C = permutation_from_collection(J);
    for (const auto& W : all_ksubsets(6, 3)) {
      if (J.contains(W)) {
        CHECK_THROWS_AS(build_young_grid(J, W), error);  // degenerate
        continue;
      }
      if (sorted_window(C, W).empty()) {
        CHECK_THROWS_AS(build_young_grid(J, W), error);  // not applicable
        ++skipped;
        continue;
      }
      const auto H = build_young_grid(J, W);
      ++built;
      CHECK(H.origin() == W);
      CHECK(swapping_distance(H) >= 1);
      CHECK(rank_lower_bound(J, W) == swapping_distance(H));
      // Column heights never increase leftwards.
      for (std::size_t j = 0; j + 1 < H.top.size(); ++j)
        CHECK(H.top[j] >= H.top[j + 1]);
      CHECK(H.top[0] == H.v);
      CHECK(H.outer_path.size() == static_cast<std::size_t>(H.h + H.v + 1));
      // Labels are distinct, except that the two staircase corners share
      // theirs in the flattened case.
      std::set<KSubset> seen;
      for (const auto& [pos, lbl] : H.vertex_labels) seen.insert(lbl);
      const std::size_t dup = H.a_equals_b ? 1 : 0;
      CHECK(seen.size() + dup == H.vertex_labels.size());
      if (H.a_equals_b) CHECK(H.corner_v0() == H.corner_v1());
    }
  }
  CHECK(built > 0);
  CHECK(skipped > 0);
}

TEST_CASE("grid inequalities hold on normalized positive points") {
  const auto facets = enumerate_maximal_sorted(3, 6);
  for (std::size_t f = 0; f < facets.size(); f += 13) {
    const auto& J = facets[f];
    const auto C = permutation_from_collection(J);
    const auto A = sample_positive_point(3, 6, 77 + f);
    const auto P = torus_normalize(A, J).second;
    const auto arr = extract_arrangement(P);
    for (const auto& W : all_ksubsets(6, 3)) {
      if (J.contains(W) || sorted_window(C, W).empty()) continue;
      const auto H = build_young_grid(J, W);
      for (const auto& r : grid_inequalities(H))
        CHECK(P.value(r.lesser) < P.value(r.greater));
      // The chain forces at least s strictly larger value classes above W.
      const int s = swapping_distance(H);
      const int blocks_above =
          static_cast<int>(arr.blocks.size()) - 1 - arr.block_of(W);
      CHECK(blocks_above >= s);
    }
  }
}

TEST_CASE("cube distance never exceeds the swapping distance") {
  const auto g = build_dual_graph(3, 6);
  const auto facets = enumerate_maximal_sorted(3, 6);
  for (std::size_t f = 0; f < facets.size(); f += 11) {
    const auto& J = facets[f];
    const auto C = permutation_from_collection(J);
    const int from = g.index_of(J);
    for (const auto& W : all_ksubsets(6, 3)) {
      if (J.contains(W) || sorted_window(C, W).empty()) continue;
      CHECK(cubical_distance_to_subset(g, from, W) <=
            swapping_distance(build_young_grid(J, W)));
    }
  }
}

TEST_CASE("grid construction validates its inputs") {
  const auto J = worked_circuit().collection();
  CHECK_THROWS_AS(build_young_grid(J, KSubset(8, {1, 2})), error);   // k=2
  CHECK_THROWS_AS(build_young_grid(J, KSubset(6, {1, 2, 3})), error);  // n=6
  CHECK_THROWS_AS(
      build_young_grid(parse_collection("1,2;1,3", 4), KSubset(4, {2, 4})),
      error);  // not maximal
}
