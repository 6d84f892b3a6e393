#include "hypergrass/circuits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hypergrass {

std::vector<std::pair<int, KSubset>> shift_neighbors(const KSubset& v) {
  std::vector<std::pair<int, KSubset>> out;
  const int n = v.n();
  for (int i = 1; i <= n; ++i) {
    const int next = (i == n) ? 1 : i + 1;
    if (v.contains(i) && !v.contains(next))
      out.emplace_back(i, v.replaced(i, next));
  }
  return out;
}

SortedCollection MinimalCircuit::collection() const {
  return SortedCollection(n, k, vertices);
}

std::string MinimalCircuit::omega_str() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < omega.size(); ++t) {
    if (n > 9 && t) os << ',';
    os << omega[t];
  }
  return os.str();
}

/// Rotate (omega, vertices) in lockstep so omega is lexicographically least.
static void canonicalize(MinimalCircuit& c) {
  const int n = c.n;
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int t = 0; t < n; ++t) {
      const int a = c.omega[(r + t) % n];
      const int b = c.omega[(best + t) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  if (best == 0) return;
  std::vector<int> om(n);
  std::vector<KSubset> vs(n);
  for (int t = 0; t < n; ++t) {
    om[t] = c.omega[(best + t) % n];
    vs[t] = c.vertices[(best + t) % n];
  }
  c.omega = std::move(om);
  c.vertices = std::move(vs);
}

MinimalCircuit circuit_from_permutation(const std::vector<int>& omega, int k) {
  const int n = static_cast<int>(omega.size());
  require(n >= 2, errc::parameter_mismatch, "omega must have length >= 2");
  require(k >= 1 && k <= n - 1, errc::parameter_mismatch,
          "need 1 <= k <= n-1");
  std::vector<int> pos(n + 1, 0);  // pos[q] = 1-based position of label q
  for (int t = 0; t < n; ++t) {
    const int q = omega[t];
    require(q >= 1 && q <= n, errc::parameter_mismatch,
            "omega entries must lie in 1..n");
    require(pos[q] == 0, errc::parameter_mismatch,
            "omega must be a permutation (duplicate label)");
    pos[q] = t + 1;
  }

  // Start vertex: position p carries a 1 exactly between the moves labelled
  // p-1 (which deposits it) and p (which removes it), cyclically in time; so
  // it is occupied at time zero iff label p-1 occurs after label p.
  std::vector<int> start;
  for (int p = 1; p <= n; ++p) {
    const int prev = (p == 1) ? n : p - 1;
    if (pos[prev] > pos[p]) start.push_back(p);
  }
  if (static_cast<int>(start.size()) != k)
    raise(errc::no_circuit,
          "omega labels a circuit on " + std::to_string(start.size()) +
              "-subsets, not " + std::to_string(k) + "-subsets");

  MinimalCircuit c;
  c.n = n;
  c.k = k;
  c.omega = omega;
  c.vertices.reserve(n);
  KSubset cur(n, start);
  for (int t = 0; t < n; ++t) {
    c.vertices.push_back(cur);
    const int i = omega[t];
    const int next = (i == n) ? 1 : i + 1;
    require(cur.contains(i) && !cur.contains(next), errc::internal_error,
            "shift propagation failed");
    cur = cur.replaced(i, next);
  }
  require(cur == c.vertices.front(), errc::internal_error,
          "circuit did not close");
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      require(c.vertices[i] != c.vertices[j], errc::internal_error,
              "circuit revisits a vertex");
  canonicalize(c);
  return c;
}

MinimalCircuit permutation_from_collection(const SortedCollection& C) {
  require(C.maximal(), errc::not_maximal,
          "collection has " + std::to_string(C.size()) + " members, need n=" +
              std::to_string(C.n()));
  const int n = C.n();
  const auto& mem = C.members();

  // Shift edges within the collection.  The circuit is the unique directed
  // Hamiltonian cycle whose labels are pairwise distinct; find it by
  // backtracking (collections are tiny).
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (label, target idx)
  std::map<KSubset, int> index;
  for (int i = 0; i < n; ++i) index[mem[i]] = i;
  for (int i = 0; i < n; ++i)
    for (const auto& [label, tgt] : shift_neighbors(mem[i]))
      if (auto it = index.find(tgt); it != index.end())
        adj[i].emplace_back(label, it->second);

  std::vector<int> order{0};  // start at canonical least member
  std::vector<int> labels;
  std::vector<bool> visited(n, false), used(n + 1, false);
  visited[0] = true;
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(order.size()) == n) {
      for (const auto& [label, tgt] : adj[order.back()])
        if (tgt == 0 && !used[label]) {
          labels.push_back(label);
          return true;
        }
      return false;
    }
    for (const auto& [label, tgt] : adj[order.back()]) {
      if (visited[tgt] || used[label]) continue;
      visited[tgt] = true;
      used[label] = true;
      order.push_back(tgt);
      labels.push_back(label);
      if (self(self)) return true;
      order.pop_back();
      labels.pop_back();
      visited[tgt] = false;
      used[label] = false;
    }
    return false;
  };
  require(dfs(dfs), errc::internal_error,
          "maximal sorted collection admits no labelling circuit");

  MinimalCircuit c;
  c.n = n;
  c.k = C.k();
  c.omega = labels;
  for (int idx : order) c.vertices.push_back(mem[idx]);
  canonicalize(c);
  return c;
}

std::vector<SortedCollection> enumerate_maximal_sorted(int k, int n) {
  require(n >= 2 && k >= 1 && k <= n - 1, errc::parameter_mismatch,
          "enumerate_maximal_sorted: need n >= 2 and 1 <= k <= n-1");
  const mpz_class expected = eulerian_number(n - 1, k - 1);
  require(mpz_cmp_si(expected.get_mpz_t(),
                     static_cast<long>(config().max_collections)) <= 0,
          errc::size_limit,
          "expected facet count " + expected.get_str() +
              " exceeds configured cap");

  std::vector<SortedCollection> out;
  const auto starts = all_ksubsets(n, k);
  std::vector<KSubset> path;
  std::vector<bool> used(n + 1, false);

  // Grow directed shift circuits from each start vertex; the start must stay
  // the lexicographic minimum of the path so each circuit appears once.
  auto grow = [&](auto&& self, const KSubset& v0, const KSubset& cur) -> void {
    if (static_cast<int>(path.size()) == n) {
      // All n vertices placed; the circuit closes iff an unused-label edge
      // returns to the start.
      for (const auto& [label, tgt] : shift_neighbors(cur))
        if (!used[label] && tgt == v0) {
          out.emplace_back(n, k, path);
          return;
        }
      return;
    }
    for (const auto& [label, tgt] : shift_neighbors(cur)) {
      if (used[label]) continue;
      if (tgt == v0 || tgt < v0) continue;
      bool sorted_with_all = true;
      for (const auto& p : path)
        if (p != tgt && !is_sorted_pair(p, tgt)) {
          sorted_with_all = false;
          break;
        }
      if (!sorted_with_all) continue;
      if (std::find(path.begin(), path.end(), tgt) != path.end()) continue;
      path.push_back(tgt);
      used[label] = true;
      self(self, v0, tgt);
      used[label] = false;
      path.pop_back();
    }
  };

  for (const auto& v0 : starts) {
    path.assign(1, v0);
    grow(grow, v0, v0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SortedCollection> enumerate_maximal_sorted_bruteforce(int k,
                                                                  int n) {
  const auto subsets = all_ksubsets(n, k);
  std::vector<SortedCollection> out;
  std::vector<KSubset> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      out.emplace_back(n, k, chosen);
      return;
    }
    const std::size_t need = n - chosen.size();
    for (std::size_t i = next; i + need <= subsets.size() + 0; ++i) {
      bool ok = true;
      for (const auto& c : chosen)
        if (!is_sorted_pair(c, subsets[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(subsets[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class eulerian_number(int m, int d) {
  require(m >= 0, errc::parameter_mismatch, "eulerian_number: m < 0");
  if (d < 0 || d > std::max(0, m - 1)) return (m == 0 && d == 0) ? 1 : 0;
  // A(0,0) = 1 by convention; row m has entries d = 0..m-1 for m >= 1.
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<mpz_class> next(i, 0);
    for (int j = 0; j < i; ++j) {
      mpz_class acc = 0;
      if (j < static_cast<int>(row.size())) acc += (j + 1) * row[j];
      if (j - 1 >= 0 && j - 1 < static_cast<int>(row.size()))
        acc += (i - j) * row[j - 1];
      next[j] = acc;
    }
    row = std::move(next);
  }
  return row[d];
}

}  // namespace hypergrass
