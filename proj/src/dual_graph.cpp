#include "hypergrass/dual_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hypergrass {

namespace {

int cyc_down(int x, int n) { return x == 1 ? n : x - 1; }
int cyc_up(int x, int n) { return x == n ? 1 : x + 1; }

void require_maximal(const SortedCollection& C, const char* who) {
  require(C.maximal(), errc::not_maximal,
          std::string(who) + ": collection of size " +
              std::to_string(C.size()) + " is not maximal (need n=" +
              std::to_string(C.n()) + ")");
}

/// Detour shape test independent of the ambient collection: can `from` turn
/// into `to` by moving one member down one step and another up one step?
/// On success fills a/b (members of `from`) with the moved elements.
bool detour_shape(const KSubset& from, const KSubset& to, int& a, int& b) {
  if (from.n() != to.n() || from.k() != to.k()) return false;
  const int n = from.n();
  std::vector<int> out, in;
  for (int e = 1; e <= n; ++e) {
    if (from.contains(e) && !to.contains(e)) out.push_back(e);
    if (to.contains(e) && !from.contains(e)) in.push_back(e);
  }
  if (out.size() != 2 || in.size() != 2) return false;
  for (int which = 0; which < 2; ++which) {
    const int ca = out[which], cb = out[1 - which];
    const bool a_down = (cyc_down(ca, n) == in[0] || cyc_down(ca, n) == in[1]);
    const bool b_up = (cyc_up(cb, n) == in[0] || cyc_up(cb, n) == in[1]);
    if (a_down && b_up) {
      // Verify the two targets are distinct and jointly equal `in`.
      std::vector<int> got{cyc_down(ca, n), cyc_up(cb, n)};
      std::sort(got.begin(), got.end());
      if (got != in) continue;
      a = ca;
      b = cb;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<DetourMove> facet_detours(const SortedCollection& C) {
  require_maximal(C, "facet_detours");
  const int n = C.n();
  std::vector<DetourMove> moves;
  std::set<std::pair<KSubset, KSubset>> seen;  // (center, replacement)
  for (const auto& center : C.members()) {
    const auto elems = center.elements();
    for (int ia : elems)
      for (int ib : elems) {
        if (ia == ib) continue;
        const int ia2 = cyc_down(ia, n);
        const int ib2 = cyc_up(ib, n);
        if (ia2 == ib2) continue;                      // targets collide
        if (center.contains(ia2) || center.contains(ib2)) continue;
        const KSubset corner_c = center.replaced(ia, ia2);
        const KSubset corner_d = center.replaced(ib, ib2);
        if (!C.contains(corner_c) || !C.contains(corner_d)) continue;
        KSubset repl = center.replaced(ia, ia2).replaced(ib, ib2);
        if (C.contains(repl)) continue;  // would shrink the collection
        if (!seen.emplace(center, repl).second) continue;
        moves.push_back(DetourMove{center, repl, corner_c, corner_d, ia, ib});
      }
  }
  std::sort(moves.begin(), moves.end(),
            [](const DetourMove& x, const DetourMove& y) {
              if (x.center != y.center) return x.center < y.center;
              return x.replacement < y.replacement;
            });
  return moves;
}

namespace {

/// Apply a set of detours (assumed to have distinct centers) to C.
std::vector<KSubset> apply_detours(const SortedCollection& C,
                                   const std::vector<DetourMove>& moves) {
  std::vector<KSubset> members;
  members.reserve(C.size());
  for (const auto& m : C.members()) {
    bool replaced = false;
    for (const auto& mv : moves)
      if (mv.center == m) {
        members.push_back(mv.replacement);
        replaced = true;
        break;
      }
    if (!replaced) members.push_back(m);
  }
  return members;
}

/// Pairwise-sortedness test that reports false instead of throwing.
bool members_sorted(const std::vector<KSubset>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) return false;
      if (!is_sorted_pair(members[i], members[j])) return false;
    }
  return true;
}

}  // namespace

std::vector<SortedCollection> facet_neighbors(const SortedCollection& C) {
  std::vector<SortedCollection> out;
  for (const auto& mv : facet_detours(C))
    out.emplace_back(C.n(), C.k(), apply_detours(C, {mv}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int DualGraph::index_of(const SortedCollection& c) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || !(*it == c)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::size_t DualGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj) twice += a.size();
  return twice / 2;
}

DualGraph build_dual_graph(int k, int n) {
  DualGraph g;
  g.k = k;
  g.n = n;
  g.vertices = enumerate_maximal_sorted(k, n);
  g.adj.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (const auto& nb : facet_neighbors(g.vertices[v])) {
      const int w = g.index_of(nb);
      require(w >= 0, errc::internal_error,
              "facet neighbor is not a maximal sorted collection");
      g.adj[v].push_back(w);
    }
    std::sort(g.adj[v].begin(), g.adj[v].end());
    g.adj[v].erase(std::unique(g.adj[v].begin(), g.adj[v].end()),
                   g.adj[v].end());
    require(static_cast<int>(g.adj[v].size()) <= n, errc::internal_error,
            "dual graph degree exceeds n");
  }
  return g;
}

DualGraph build_dual_graph_bruteforce(int k, int n) {
  DualGraph g;
  g.k = k;
  g.n = n;
  g.vertices = enumerate_maximal_sorted_bruteforce(k, n);
  g.adj.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t w = v + 1; w < g.vertices.size(); ++w) {
      const auto& a = g.vertices[v].members();
      const auto& b = g.vertices[w].members();
      std::vector<KSubset> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == n - 1) {
        g.adj[v].push_back(static_cast<int>(w));
        g.adj[w].push_back(static_cast<int>(v));
      }
    }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

namespace {

/// All ways to pick pairwise-compatible detour subsets of `all`, reported to
/// `emit`.  Compatibility: no chosen detour's corner equals another chosen
/// detour's center (centers are distinct by construction of the recursion).
void compatible_subsets(const std::vector<DetourMove>& all,
                        const std::function<void(const std::vector<DetourMove>&)>& emit) {
  std::vector<DetourMove> chosen;
  auto ok_with = [&](const DetourMove& cand) {
    for (const auto& c : chosen) {
      if (c.center == cand.center) return false;  // one detour per member
      // Neither center may appear in the other triple's corner set.
      if (c.corner_c == cand.center || c.corner_d == cand.center) return false;
      if (cand.corner_c == c.center || cand.corner_d == c.center) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (!chosen.empty()) emit(chosen);
    for (std::size_t i = next; i < all.size(); ++i) {
      if (!ok_with(all[i])) continue;
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<CubeMove> cube_adjacent(const SortedCollection& P,
                                      const SortedCollection& Q) {
  require_maximal(P, "cube_adjacent");
  require_maximal(Q, "cube_adjacent");
  require(P.n() == Q.n() && P.k() == Q.k(), errc::parameter_mismatch,
          "cube_adjacent: mismatched parameters");
  if (P == Q) return CubeMove{};

  std::vector<KSubset> replaced_centers, replacements;
  for (const auto& m : P.members())
    if (!Q.contains(m)) replaced_centers.push_back(m);
  for (const auto& m : Q.members())
    if (!P.contains(m)) replacements.push_back(m);
  const std::size_t m = replaced_centers.size();

  // Each replaced member must be matched to a replacement by a valid detour
  // whose corners survive into Q (compatibility is then automatic, since a
  // corner lying in P∩Q can never be a replaced center).
  std::vector<std::vector<DetourMove>> options(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& r : replacements) {
      int a = 0, b = 0;
      if (!detour_shape(replaced_centers[i], r, a, b)) continue;
      const int n = P.n();
      const KSubset corner_c = replaced_centers[i].replaced(a, cyc_down(a, n));
      const KSubset corner_d = replaced_centers[i].replaced(b, cyc_up(b, n));
      if (!P.contains(corner_c) || !Q.contains(corner_c)) continue;
      if (!P.contains(corner_d) || !Q.contains(corner_d)) continue;
      options[i].push_back(
          DetourMove{replaced_centers[i], r, corner_c, corner_d, a, b});
    }
    if (options[i].empty()) return std::nullopt;
  }

  // Perfect matching by backtracking (m is at most n).
  std::vector<DetourMove> picked;
  std::set<KSubset> used;
  auto match = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return true;
    for (const auto& mv : options[i]) {
      if (used.count(mv.replacement)) continue;
      used.insert(mv.replacement);
      picked.push_back(mv);
      if (self(self, i + 1)) return true;
      picked.pop_back();
      used.erase(mv.replacement);
    }
    return false;
  };
  if (!match(match, 0)) return std::nullopt;
  return CubeMove{picked};
}

std::optional<CubeMove> cube_adjacent_geometric(const SortedCollection& P,
                                                const SortedCollection& Q) {
  require_maximal(P, "cube_adjacent_geometric");
  require_maximal(Q, "cube_adjacent_geometric");
  if (P == Q) return CubeMove{};

  std::vector<KSubset> replaced_centers, replacements;
  for (const auto& m : P.members())
    if (!Q.contains(m)) replaced_centers.push_back(m);
  for (const auto& m : Q.members())
    if (!P.contains(m)) replacements.push_back(m);
  const std::size_t m = replaced_centers.size();

  // Try every matching center -> replacement consistent with the detour
  // shape; accept iff all 2^m partial applications are sorted collections.
  std::vector<int> assign(m, -1);
  std::vector<bool> taken(m, false);
  std::vector<DetourMove> best;
  auto closure_ok = [&]() -> bool {
    for (std::size_t mask = 0; mask < (1ULL << m); ++mask) {
      std::vector<KSubset> members;
      for (const auto& s : P.members()) {
        bool rep = false;
        for (std::size_t i = 0; i < m; ++i)
          if ((mask >> i) & 1 && replaced_centers[i] == s) {
            members.push_back(replacements[assign[i]]);
            rep = true;
            break;
          }
        if (!rep) members.push_back(s);
      }
      if (!members_sorted(members)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return closure_ok();
    for (std::size_t j = 0; j < m; ++j) {
      if (taken[j]) continue;
      int a = 0, b = 0;
      if (!detour_shape(replaced_centers[i], replacements[j], a, b)) continue;
      taken[j] = true;
      assign[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      taken[j] = false;
      assign[i] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  CubeMove move;
  const int n = P.n();
  for (std::size_t i = 0; i < m; ++i) {
    int a = 0, b = 0;
    detour_shape(replaced_centers[i], replacements[assign[i]], a, b);
    move.detours.push_back(DetourMove{
        replaced_centers[i], replacements[assign[i]],
        replaced_centers[i].replaced(a, cyc_down(a, n)),
        replaced_centers[i].replaced(b, cyc_up(b, n)), a, b});
  }
  return move;
}

namespace {

/// Cube neighbours of vertex v under either generation rule.
std::vector<int> cube_neighbors(const DualGraph& g, int v, bool geometric) {
  std::vector<int> out;
  const auto& P = g.vertices[v];
  if (!geometric) {
    const auto detours = facet_detours(P);
    compatible_subsets(detours, [&](const std::vector<DetourMove>& moves) {
      const auto members = apply_detours(P, moves);
      if (!members_sorted(members)) return;
      const int w = g.index_of(SortedCollection(P.n(), P.k(), members));
      require(w >= 0, errc::internal_error,
              "simultaneous detours produced an unindexed facet");
      if (w != v) out.push_back(w);
    });
  } else {
    for (std::size_t w = 0; w < g.vertices.size(); ++w) {
      if (static_cast<int>(w) == v) continue;
      if (cube_adjacent_geometric(P, g.vertices[w]))
        out.push_back(static_cast<int>(w));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int bfs(const DualGraph& g, int from,
        const std::function<bool(int)>& is_target, bool geometric) {
  require(from >= 0 && from < static_cast<int>(g.vertices.size()),
          errc::parameter_mismatch, "BFS start out of range");
  if (is_target(from)) return 0;
  std::vector<int> dist(g.vertices.size(), -1);
  dist[from] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : cube_neighbors(g, v, geometric)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (is_target(w)) return dist[w];
      queue.push_back(w);
    }
  }
  raise(errc::internal_error, "cube BFS target unreachable");
}

}  // namespace

int cubical_distance(const DualGraph& g, int from, int to, bool geometric) {
  require(to >= 0 && to < static_cast<int>(g.vertices.size()),
          errc::parameter_mismatch, "BFS target out of range");
  return bfs(g, from, [to](int v) { return v == to; }, geometric);
}

int cubical_distance(const SortedCollection& P, const SortedCollection& Q,
                     bool geometric) {
  require(P.n() == Q.n() && P.k() == Q.k(), errc::parameter_mismatch,
          "cubical_distance: mismatched parameters");
  const DualGraph g = build_dual_graph(P.k(), P.n());
  const int a = g.index_of(P), b = g.index_of(Q);
  require(a >= 0, errc::not_maximal, "source is not a triangulation facet");
  require(b >= 0, errc::not_maximal, "target is not a triangulation facet");
  return cubical_distance(g, a, b, geometric);
}

int cubical_distance_to_subset(const DualGraph& g, int from, const KSubset& W,
                               bool geometric) {
  require(W.n() == g.n && W.k() == g.k, errc::parameter_mismatch,
          "cubical_distance_to_subset: W has wrong parameters");
  bool any = false;
  for (const auto& v : g.vertices)
    if (v.contains(W)) {
      any = true;
      break;
    }
  require(any, errc::parameter_mismatch,
          "no triangulation facet contains the target subset");
  return bfs(
      g, from, [&](int v) { return g.vertices[v].contains(W); }, geometric);
}

std::vector<int> cubical_distances(const DualGraph& g, int from,
                                   bool geometric) {
  require(from >= 0 && from < static_cast<int>(g.vertices.size()),
          errc::parameter_mismatch, "BFS start out of range");
  std::vector<int> dist(g.vertices.size(), -1);
  dist[from] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : cube_neighbors(g, v, geometric)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace hypergrass
