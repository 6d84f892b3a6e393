#include "hypergrass/poset.hpp"

#include <algorithm>

#include "hypergrass/config.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/torus.hpp"

namespace hypergrass {

namespace {

void transitive_close(std::vector<std::vector<char>>& r) {
  const int m = static_cast<int>(r.size());
  for (int w = 0; w < m; ++w)
    for (int u = 0; u < m; ++u)
      if (r[u][w])
        for (int v = 0; v < m; ++v)
          if (r[w][v]) r[u][v] = 1;
}

std::vector<KSubset> poset_nodes(int k, int n) {
  std::vector<KSubset> nodes = all_ksubsets(n, k);
  require(static_cast<long long>(nodes.size()) <= config().max_subsets,
          errc::size_limit, "too many k-subsets for poset construction");
  return nodes;
}

}  // namespace

int MinorPoset::index_of(const KSubset& s) const {
  require(s.n() == n && s.k() == k, errc::parameter_mismatch,
          "subset has the wrong (k,n) for this poset");
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  require(it != nodes.end() && *it == s, errc::internal_error,
          "subset missing from poset node list");
  return static_cast<int>(it - nodes.begin());
}

bool MinorPoset::less(const KSubset& a, const KSubset& b) const {
  return strict[rep[index_of(a)]][rep[index_of(b)]] != 0;
}

bool MinorPoset::same_class(const KSubset& a, const KSubset& b) const {
  return rep[index_of(a)] == rep[index_of(b)];
}

std::vector<std::vector<KSubset>> MinorPoset::classes() const {
  std::vector<std::vector<KSubset>> out;
  std::map<int, int> slot;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [it, fresh] = slot.emplace(rep[i], static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(nodes[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> MinorPoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(nodes.size());
  for (int u = 0; u < m; ++u) {
    if (rep[u] != u) continue;
    for (int v = 0; v < m; ++v)
      if (rep[v] == v && strict[u][v]) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<int, int>> MinorPoset::hasse() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(nodes.size());
  for (int u = 0; u < m; ++u) {
    if (rep[u] != u) continue;
    for (int v = 0; v < m; ++v) {
      if (rep[v] != v || !strict[u][v]) continue;
      bool implied = false;
      for (int w = 0; w < m && !implied; ++w)
        if (rep[w] == w && w != u && w != v && strict[u][w] && strict[w][v])
          implied = true;
      if (!implied) out.emplace_back(u, v);
    }
  }
  return out;
}

MinorPoset infer_poset(const SortedCollection& J) {
  require(J.maximal(), errc::not_maximal,
          "poset inference needs a maximal sorted collection");
  MinorPoset P;
  P.k = J.k();
  P.n = J.n();
  P.nodes = poset_nodes(P.k, P.n);
  const int m = static_cast<int>(P.nodes.size());

  P.rep.resize(m);
  int rep_top = -1;
  for (int i = 0; i < m; ++i) {
    if (J.contains(P.nodes[i])) {
      if (rep_top < 0) rep_top = i;
      P.rep[i] = rep_top;
    } else {
      P.rep[i] = i;
    }
  }
  require(rep_top >= 0, errc::internal_error, "collection has no members");

  P.strict.assign(m, std::vector<char>(m, 0));
  for (int u = 0; u < m; ++u) {
    if (P.rep[u] != u || u == rep_top) continue;
    P.strict[u][rep_top] = 1;
    P.provenance.emplace(std::make_pair(u, rep_top),
                         P.nodes[u].str() +
                             " is not a member of the collection");
  }

  // All unsorted squares (X,Y) -> sorted images (X',Y').
  struct Square {
    int x, y, x1, y1;
  };
  std::vector<Square> squares;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (is_sorted_pair(P.nodes[i], P.nodes[j])) continue;
      const SortPair s = sort_merge(P.nodes[i], P.nodes[j]);
      squares.push_back({i, j, P.index_of(s.first), P.index_of(s.second)});
    }

  const auto le = [&](int u, int v) { return u == v || P.strict[u][v]; };
  const auto square_reason = [&](const Square& s, const std::string& given,
                                 const std::string& got) {
    return "square (" + P.nodes[s.x].str() + "," + P.nodes[s.y].str() +
           ") -> (" + P.nodes[s.x1].str() + "," + P.nodes[s.y1].str() +
           "): given " + given + ", conclude " + got;
  };

  transitive_close(P.strict);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Square& s : squares) {
      const int x = P.rep[s.x], y = P.rep[s.y];
      const int x1 = P.rep[s.x1], y1 = P.rep[s.y1];
      const auto add = [&](int a, int b, const std::string& reason) {
        if (P.strict[a][b]) return;
        P.strict[a][b] = 1;
        P.provenance.emplace(std::make_pair(a, b), reason);
        changed = true;
      };
      const auto name = [&](int node) { return P.nodes[node].str(); };
      if (le(x1, y))
        add(x, y1, square_reason(s, name(s.x1) + " <= " + name(s.y),
                                 name(s.x) + " < " + name(s.y1)));
      if (le(x1, x))
        add(y, y1, square_reason(s, name(s.x1) + " <= " + name(s.x),
                                 name(s.y) + " < " + name(s.y1)));
      if (le(y1, y))
        add(x, x1, square_reason(s, name(s.y1) + " <= " + name(s.y),
                                 name(s.x) + " < " + name(s.x1)));
      if (le(y1, x))
        add(y, x1, square_reason(s, name(s.y1) + " <= " + name(s.x),
                                 name(s.y) + " < " + name(s.x1)));
    }
    if (changed) {
      transitive_close(P.strict);
      for (int u = 0; u < m; ++u)
        require(!P.strict[u][u], errc::inconsistent_poset,
                "derived a strict cycle through " + P.nodes[u].str());
    }
  }
  return P;
}

MinorPoset empirical_poset(const SortedCollection& J, int trials,
                           std::uint64_t seed) {
  require(trials >= 1, errc::parameter_mismatch,
          "empirical poset needs at least one trial");
  require(J.maximal(), errc::not_maximal,
          "empirical poset needs a maximal sorted collection");
  MinorPoset P;
  P.k = J.k();
  P.n = J.n();
  P.nodes = poset_nodes(P.k, P.n);
  const int m = static_cast<int>(P.nodes.size());

  std::vector<std::vector<char>> less_all(m, std::vector<char>(m, 1));
  std::vector<std::vector<char>> eq_all(m, std::vector<char>(m, 1));
  Rng rng(seed);
  std::vector<int> block(m, -1);
  for (int t = 0; t < trials; ++t) {
    const RationalMatrix A = sample_positive_point(P.k, P.n, rng.next());
    const auto [scaling, vec] = torus_normalize(A, J);
    const ArrangementPartition arr = extract_arrangement(vec);
    for (std::size_t b = 0; b < arr.blocks.size(); ++b)
      for (const KSubset& s : arr.blocks[b])
        block[P.index_of(s)] = static_cast<int>(b);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        if (block[u] >= block[v]) less_all[u][v] = 0;
        if (block[u] != block[v]) eq_all[u][v] = 0;
      }
  }

  P.rep.resize(m);
  for (int i = 0; i < m; ++i) {
    int r = i;
    for (int j = 0; j < i; ++j)
      if (eq_all[i][j]) {
        r = j;
        break;
      }
    P.rep[i] = r;
  }
  P.strict.assign(m, std::vector<char>(m, 0));
  for (int u = 0; u < m; ++u) {
    if (P.rep[u] != u) continue;
    for (int v = 0; v < m; ++v)
      if (P.rep[v] == v && u != v && less_all[u][v]) P.strict[u][v] = 1;
  }
  return P;
}

}  // namespace hypergrass
