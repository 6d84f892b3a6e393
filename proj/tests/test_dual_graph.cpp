#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypergrass/dual_graph.hpp"
#include "hypergrass/errors.hpp"

using namespace hypergrass;

namespace {

int shared_members(const SortedCollection& P, const SortedCollection& Q) {
  int c = 0;
  for (const auto& m : P.members())
    if (Q.contains(m)) ++c;
  return c;
}

}  // namespace

TEST_CASE("detour moves are valid local replacements") {
  const auto C = circuit_from_permutation({5, 6, 1, 7, 8, 2, 4, 3}, 3)
                     .collection();
  const auto moves = facet_detours(C);
  CHECK(!moves.empty());
  CHECK(moves.size() <= static_cast<std::size_t>(C.n()));
  const int n = C.n();
  for (const auto& mv : moves) {
    CHECK(C.contains(mv.center));
    CHECK(C.contains(mv.corner_c));
    CHECK(C.contains(mv.corner_d));
    CHECK_FALSE(C.contains(mv.replacement));
    // corner_c moves a down, corner_d moves b up, the replacement does both.
    const int a_down = (mv.a - 2 + n) % n + 1;
    const int b_up = mv.b % n + 1;
    CHECK(mv.corner_c == mv.center.replaced(mv.a, a_down));
    CHECK(mv.corner_d == mv.center.replaced(mv.b, b_up));
    CHECK(mv.replacement == mv.corner_c.replaced(mv.b, b_up));
    CHECK(mv.replacement == mv.corner_d.replaced(mv.a, a_down));
  }
}

TEST_CASE("facet neighbours differ in exactly one member") {
  const auto facets = enumerate_maximal_sorted(3, 6);
  for (const auto& F : facets) {
    const auto nbs = facet_neighbors(F);
    CHECK(nbs.size() <= static_cast<std::size_t>(F.n()));
    CHECK(std::is_sorted(nbs.begin(), nbs.end()));
    for (const auto& G : nbs) {
      CHECK(G.maximal());
      CHECK(shared_members(F, G) == F.n() - 1);
      CHECK_FALSE(G == F);
    }
  }
}

TEST_CASE("detour-rule graph equals the intersection oracle") {
  for (const auto& [k, n] :
       std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {2, 6}, {3, 6}}) {
    const auto g = build_dual_graph(k, n);
    const auto gb = build_dual_graph_bruteforce(k, n);
    CHECK(g.k == k);
    CHECK(g.n == n);
    CHECK(g.vertices == gb.vertices);
    CHECK(g.adj == gb.adj);
    CHECK(g.edge_count() == gb.edge_count());
    CHECK(g.vertices == enumerate_maximal_sorted(k, n));
    for (const auto& row : g.adj) {
      CHECK(static_cast<int>(row.size()) <= n);
      CHECK(std::is_sorted(row.begin(), row.end()));
    }
  }
}

TEST_CASE("index_of finds canonical vertices") {
  const auto g = build_dual_graph(2, 5);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(g.index_of(g.vertices[i]) == static_cast<int>(i));
  CHECK(g.index_of(parse_collection("1,2;1,3", 5)) == -1);
}

TEST_CASE("cube adjacency agrees with the geometric oracle") {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}}) {
    const auto facets = enumerate_maximal_sorted(k, n);
    for (const auto& P : facets)
      for (const auto& Q : facets) {
        const auto fast = cube_adjacent(P, Q);
        const auto slow = cube_adjacent_geometric(P, Q);
        CHECK(fast.has_value() == slow.has_value());
        if (fast && slow) CHECK(fast->size() == slow->size());
      }
  }
}

TEST_CASE("cube moves: self is the empty move, facet edges have size one") {
  const auto g = build_dual_graph(2, 6);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto self = cube_adjacent(g.vertices[i], g.vertices[i]);
    REQUIRE(self.has_value());
    CHECK(self->size() == 0);
    for (int j : g.adj[i]) {
      const auto mv = cube_adjacent(g.vertices[i], g.vertices[j]);
      REQUIRE(mv.has_value());
      CHECK(mv->size() == 1);
    }
  }
}

TEST_CASE("compatible detour sets leave each other's corners alone") {
  const auto facets = enumerate_maximal_sorted(3, 6);
  for (const auto& P : facets)
    for (const auto& Q : facets) {
      const auto mv = cube_adjacent(P, Q);
      if (!mv || mv->size() < 2) continue;
      for (const auto& d1 : mv->detours)
        for (const auto& d2 : mv->detours) {
          if (d1.center == d2.center) continue;
          CHECK(d1.center != d2.corner_c);
          CHECK(d1.center != d2.corner_d);
        }
    }
}

TEST_CASE("cube distance is a metric consistent with adjacency") {
  const auto g = build_dual_graph(2, 6);
  const int m = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> dist(m);
  for (int i = 0; i < m; ++i) dist[i] = cubical_distances(g, i);
  for (int i = 0; i < m; ++i) {
    CHECK(dist[i][i] == 0);
    for (int j = 0; j < m; ++j) {
      CHECK(dist[i][j] >= 0);  // the dual graph is connected
      CHECK(dist[i][j] == dist[j][i]);
      if (i != j)
        CHECK((dist[i][j] == 1) ==
              (cube_adjacent(g.vertices[i], g.vertices[j]).has_value()));
      CHECK(cubical_distance(g, i, j) == dist[i][j]);
      for (int l = 0; l < m; ++l)
        CHECK(dist[i][j] <= dist[i][l] + dist[l][j]);
    }
  }
  // Convenience overload without a prebuilt graph.
  CHECK(cubical_distance(g.vertices[0], g.vertices[1]) == dist[0][1]);
}

TEST_CASE("geometric and production cube metrics coincide at (3,5)") {
  const auto g = build_dual_graph(3, 5);
  const int m = static_cast<int>(g.vertices.size());
  for (int i = 0; i < m; ++i)
    CHECK(cubical_distances(g, i) == cubical_distances(g, i, true));
}

TEST_CASE("distance to the facets containing a subset") {
  const auto g = build_dual_graph(2, 6);
  for (int i = 0; i < static_cast<int>(g.vertices.size()); i += 5) {
    const auto dists = cubical_distances(g, i);
    for (const auto& W : all_ksubsets(6, 2)) {
      int best = -1;
      for (int j = 0; j < static_cast<int>(g.vertices.size()); ++j)
        if (g.vertices[j].contains(W) && (best < 0 || dists[j] < best))
          best = dists[j];
      CHECK(cubical_distance_to_subset(g, i, W) == best);
      if (g.vertices[i].contains(W))
        CHECK(cubical_distance_to_subset(g, i, W) == 0);
    }
  }
}

TEST_CASE("dual-graph queries validate their arguments") {
  const auto g = build_dual_graph(2, 5);
  CHECK_THROWS_AS(cubical_distance(g, -1, 0), error);
  CHECK_THROWS_AS(cubical_distance(g, 0, 99), error);
  CHECK_THROWS_AS(cubical_distance_to_subset(g, 0, KSubset(5, {1, 2, 3})),
                  error);  // wrong k
  CHECK_THROWS_AS(cubical_distance(parse_collection("1,2;1,3;1,4;2,4", 4),
                                   parse_collection("1,2;1,3;1,4;1,5;2,5", 5)),
                  error);  // mismatched ground sets
}
