#include "hypergrass/sorting.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hypergrass {

SortPair sort_merge(const KSubset& I, const KSubset& J) {
  require(I.n() == J.n(), errc::parameter_mismatch,
          "sort_merge: mismatched ground sets");
  require(I.k() == J.k(), errc::parameter_mismatch,
          "sort_merge: mismatched cardinalities");
  const auto a = I.elements();
  const auto b = J.elements();
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(),
             std::back_inserter(merged));
  std::vector<int> odd, even;
  for (std::size_t t = 0; t < merged.size(); ++t)
    (t % 2 == 0 ? odd : even).push_back(merged[t]);
  // Odd/even parts are strictly increasing: a value appearing at positions
  // t and t+2 would have to appear three times in the union of two sets.
  return SortPair{KSubset(I.n(), odd), KSubset(I.n(), even)};
}

bool is_sorted_pair(const KSubset& I, const KSubset& J) {
  const SortPair s = sort_merge(I, J);
  return (s.first == I && s.second == J) || (s.first == J && s.second == I);
}

bool is_sorted_collection(const std::vector<KSubset>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!is_sorted_pair(members[i], members[j])) return false;
  return true;
}

bool is_sorted_collection_chain(std::vector<KSubset> members) {
  if (members.size() <= 1) return true;
  // On a sorted collection, component-wise order is total and agrees with
  // lexicographic order, so sorting lexicographically must yield the chain.
  std::sort(members.begin(), members.end());
  const int k = members.front().k();
  for (const auto& m : members)
    if (m.k() != k) return false;
  std::vector<std::vector<int>> elems;
  elems.reserve(members.size());
  for (const auto& m : members) elems.push_back(m.elements());
  int prev = 0;
  for (int pos = 0; pos < k; ++pos)
    for (const auto& e : elems) {
      if (e[pos] < prev) return false;
      prev = e[pos];
    }
  return true;
}

bool is_thrackle(const std::vector<KSubset>& edges) {
  for (const auto& e : edges)
    require(e.k() == 2, errc::parameter_mismatch,
            "is_thrackle: members must be 2-subsets");
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto e = edges[i].elements();
      const auto f = edges[j].elements();
      const int a = e[0], b = e[1], c = f[0], d = f[1];
      const bool share = (a == c || a == d || b == c || b == d);
      // Chords {a,b}, {c,d} of the circle cross iff exactly one of c, d lies
      // in the open arc (a, b).
      const bool cross = (a < c && c < b) != (a < d && d < b);
      if (!share && !cross) return false;
    }
  return true;
}

bool is_weakly_separated_pair(const KSubset& I, const KSubset& J) {
  require(I.n() == J.n() && I.k() == J.k(), errc::parameter_mismatch,
          "is_weakly_separated_pair: mismatched parameters");
  std::vector<int> a, b;
  for (int e = 1; e <= I.n(); ++e) {
    if (I.contains(e) && !J.contains(e)) a.push_back(e);
    if (J.contains(e) && !I.contains(e)) b.push_back(e);
  }
  const int r = static_cast<int>(a.size());
  // One direction: a_1<...<a_s < b_1<...<b_r < a_{s+1}<...<a_r for some s.
  const auto fits = [r](const std::vector<int>& x, const std::vector<int>& y) {
    for (int s = 0; s <= r; ++s) {
      bool ok = true;
      if (!y.empty()) {
        if (s > 0 && !(x[s - 1] < y.front())) ok = false;
        if (s < r && !(y.back() < x[s])) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  return fits(a, b) || fits(b, a);
}

static int interval_sum(const EpsilonVector& x, int i, int j) {
  int s = 0;
  for (int t = i; t <= j; ++t) s += x[t - 1];
  return s;
}

static void check_eps_pair(const EpsilonVector& x, const EpsilonVector& y,
                           int i, int j) {
  require(!x.empty() && x.size() == y.size(), errc::parameter_mismatch,
          "d_ij: vectors must have equal positive length");
  for (std::size_t t = 0; t < x.size(); ++t)
    require((x[t] == 0 || x[t] == 1) && (y[t] == 0 || y[t] == 1),
            errc::parameter_mismatch, "d_ij: entries must be 0/1");
  require(1 <= i && i <= j && j <= static_cast<int>(x.size()),
          errc::parameter_mismatch, "d_ij: bad interval");
}

int d_ij(const EpsilonVector& x, const EpsilonVector& y, int i, int j) {
  check_eps_pair(x, y, i, j);
  return std::abs(interval_sum(x, i, j) - interval_sum(y, i, j));
}

int d_ij_hyperplane_count(const EpsilonVector& x, const EpsilonVector& y,
                          int i, int j) {
  check_eps_pair(x, y, i, j);
  const int sx = interval_sum(x, i, j);
  const int sy = interval_sum(y, i, j);
  int count = 0;
  // Any separating level lies within one unit of the attained sums.
  for (int r = -1; r <= static_cast<int>(x.size()) + 1; ++r) {
    const bool opposite_open_sides =
        (sx < r && sy > r) || (sx > r && sy < r);
    const bool y_on_plane_x_off = (sy == r && sx != r);
    if (opposite_open_sides || y_on_plane_x_off) ++count;
  }
  return count;
}

int max_interval_distance(const EpsilonVector& x, const EpsilonVector& y) {
  const int n = static_cast<int>(x.size());
  int best = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) best = std::max(best, d_ij(x, y, i, j));
  return best;
}

bool in_ball(const EpsilonVector& y, const EpsilonVector& x, int r) {
  require(r >= 0, errc::parameter_mismatch, "in_ball: negative radius");
  const int n = static_cast<int>(x.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (d_ij(x, y, i, j) > r) return false;
  return true;
}

SortedCollection::SortedCollection(int n, int k, std::vector<KSubset> members)
    : n_(n), k_(k), members_(std::move(members)) {
  require(k_ >= 1 && k_ <= n_, errc::parameter_mismatch,
          "SortedCollection: need 1 <= k <= n");
  for (const auto& m : members_) {
    require(m.n() == n_, errc::parameter_mismatch,
            "SortedCollection: member over wrong ground set");
    require(m.k() == k_, errc::parameter_mismatch,
            "SortedCollection: member of wrong cardinality");
  }
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i + 1 < members_.size(); ++i)
    require(members_[i] != members_[i + 1], errc::parameter_mismatch,
            "SortedCollection: duplicate member " + members_[i].str());
  require(is_sorted_collection(members_), errc::not_sorted,
          "collection contains an unsorted pair");
}

bool SortedCollection::contains(const KSubset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::string SortedCollection::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i].str();
  }
  os << '}';
  return os.str();
}

SortedCollection parse_collection(const std::string& text, int n) {
  std::vector<KSubset> members;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    if (tok.empty()) continue;
    members.push_back(parse_subset(tok, n));
  }
  require(!members.empty(), errc::parameter_mismatch, "empty collection");
  const int k = members.front().k();
  return SortedCollection(n, k, std::move(members));
}

}  // namespace hypergrass
