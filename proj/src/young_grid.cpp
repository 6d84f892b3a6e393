#include "hypergrass/young_grid.hpp"

#include <algorithm>
#include <string>

#include "hypergrass/errors.hpp"

namespace hypergrass {

namespace {

int cyc_up(int x, int n) { return x % n + 1; }

std::string pos_str(const GridPos& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

/// Apply the shift edge labelled l (move member l to l+1 cyclically).
KSubset apply_shift(const KSubset& x, int l, errc on_fail,
                    const std::string& what) {
  const int n = x.n();
  const int up = cyc_up(l, n);
  require(x.contains(l) && !x.contains(up), on_fail,
          what + ": label " + std::to_string(l) +
              " is not a valid shift out of " + x.str());
  return x.replaced(l, up);
}

}  // namespace

bool OrientedYoungGrid::contains(const GridPos& p) const {
  return p.j >= 0 && p.j <= h && p.i >= 0 && p.i <= top[p.j];
}

bool OrientedYoungGrid::is_outer(const GridPos& p) const {
  return std::find(outer_path.begin(), outer_path.end(), p) !=
         outer_path.end();
}

const KSubset& OrientedYoungGrid::label(const GridPos& p) const {
  auto it = vertex_labels.find(p);
  require(it != vertex_labels.end(), errc::parameter_mismatch,
          "no grid vertex at " + pos_str(p));
  return it->second;
}

std::string OrientedYoungGrid::omega_H_str() const {
  std::string out;
  for (std::size_t t = 0; t < omega_H.size(); ++t) {
    if (n > 9 && t > 0) out += ',';
    out += std::to_string(omega_H[t]);
  }
  return out;
}

std::vector<KSubset> sorted_window(const MinimalCircuit& C, const KSubset& W) {
  const int n = C.n;
  require(W.n() == n && W.k() == C.k, errc::parameter_mismatch,
          "W and the circuit have different (k,n)");
  std::vector<bool> with(n, false);
  int count = 0;
  for (int t = 0; t < n; ++t) {
    require(!(C.vertices[t] == W), errc::degenerate_query,
            "W is a vertex of the circuit");
    with[t] = is_sorted_pair(C.vertices[t], W);
    if (with[t]) ++count;
  }
  if (count == 0) return {};
  require(count < n, errc::lemma_violation,
          "W is sorted with every circuit vertex, contradicting maximality");
  int begin = -1, starts = 0;
  for (int t = 0; t < n; ++t)
    if (with[t] && !with[(t + n - 1) % n]) {
      ++starts;
      begin = t;
    }
  require(starts == 1, errc::lemma_violation,
          "vertices sorted with W do not form a contiguous arc for W = " +
              W.str());
  std::vector<KSubset> out;
  for (int t = begin; with[t]; t = (t + 1) % n) out.push_back(C.vertices[t]);
  return out;
}

OrientedYoungGrid build_young_grid(const SortedCollection& J,
                                   const KSubset& W) {
  const int k = J.k(), n = J.n();
  require(W.n() == n && W.k() == k, errc::parameter_mismatch,
          "W and J have different (k,n)");
  require(J.maximal(), errc::not_maximal,
          "grid construction needs a maximal sorted collection");
  require(!J.contains(W), errc::degenerate_query, "W is a member of J");

  const MinimalCircuit C = permutation_from_collection(J);
  const std::vector<KSubset> window = sorted_window(C, W);
  if (window.empty())
    raise(errc::not_applicable,
          "W " + W.str() + " is sorted with no member of the collection");
  const KSubset A = window.back();   // window runs B -> ... -> A
  const KSubset B = window.front();
  const bool aeqb = window.size() == 1;

  int pA = -1, pB = -1;
  for (int t = 0; t < n; ++t) {
    if (C.vertices[t] == A) pA = t;
    if (C.vertices[t] == B) pB = t;
  }
  require(pA >= 0 && pB >= 0, errc::internal_error,
          "window endpoints not on the circuit");

  // The detour arc: edge labels along A -> B (the vertices strictly inside
  // it are exactly those not sorted with W), and the remaining labels.
  std::vector<int> omega_hat, restlab;
  if (!aeqb) {
    for (int t = pA;; t = (t + 1) % n) {
      omega_hat.push_back(C.omega[t]);
      if ((t + 1) % n == pB) break;
    }
    for (int t = pB;; t = (t + 1) % n) {
      restlab.push_back(C.omega[t]);
      if ((t + 1) % n == pA) break;
    }
  } else {
    for (int c = 0; c < n; ++c) omega_hat.push_back(C.omega[(pA + c) % n]);
  }
  const int m = static_cast<int>(omega_hat.size());

  // Anchor search: choose a_1 in A so that in the cyclic order starting at
  // a_1 the endpoint lists interleave as a_1<=b_1<=a_2<=...<=a_k<=b_k and
  // the origin elements fit between: a_i <= d_i <= b_i.
  const auto rank = [n](int a1, int x) { return ((x - a1) % n + n) % n; };
  int anchor = -1;
  std::vector<int> as, bs, ds;
  for (int a1 : A.elements()) {
    auto by_rank = [&](std::vector<int> v) {
      std::sort(v.begin(), v.end(),
                [&](int x, int y) { return rank(a1, x) < rank(a1, y); });
      return v;
    };
    as = by_rank(A.elements());
    ds = by_rank(W.elements());
    if (aeqb) {
      bs = as;
      std::rotate(bs.begin(), bs.begin() + 1, bs.end());
    } else {
      bs = by_rank(B.elements());
    }
    const auto rb = [&](int i) {
      return (aeqb && i == k - 1) ? n : rank(a1, bs[i]);
    };
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (rank(a1, as[i]) > rank(a1, ds[i]) || rank(a1, ds[i]) > rb(i))
        ok = false;
      if (rank(a1, as[i]) > rb(i)) ok = false;
      if (i + 1 < k && rb(i) > rank(a1, as[i + 1])) ok = false;
    }
    if (ok) {
      anchor = a1;
      break;
    }
  }
  require(anchor >= 0, errc::construction_failure,
          "no cyclic anchor satisfies the interleaving inequalities");

  // Split each block {a_i, ..., b_i - 1} at d_i into horizontal labels
  // (before d_i) and vertical labels (from d_i on).
  std::vector<char> inD1(n + 1, 0), inD2(n + 1, 0);
  for (int i = 0; i < k; ++i) {
    for (int x = as[i]; x != bs[i]; x = cyc_up(x, n)) {
      require(!inD1[x] && !inD2[x], errc::construction_failure,
              "detour arcs overlap at label " + std::to_string(x));
      if (rank(anchor, x) < rank(anchor, ds[i]))
        inD1[x] = 1;
      else
        inD2[x] = 1;
    }
  }
  std::vector<int> P1, P2;
  for (int l : omega_hat) {
    require(inD1[l] || inD2[l], errc::construction_failure,
            "detour label " + std::to_string(l) + " outside the arc blocks");
    (inD1[l] ? P1 : P2).push_back(l);
  }
  const int h = static_cast<int>(P1.size());
  const int v = static_cast<int>(P2.size());
  require(h >= 1 && v >= 1, errc::construction_failure,
          "degenerate grid: a boundary path has no horizontal or no "
          "vertical edges");

  OrientedYoungGrid H;
  H.k = k;
  H.n = n;
  H.h = h;
  H.v = v;
  H.anchor = anchor;
  H.a_equals_b = aeqb;

  // Outer staircase: follow the detour arc typing from v0 = (0,h).
  require(inD2[omega_hat[0]] && inD1[omega_hat[m - 1]],
          errc::construction_failure,
          "outer path must start vertically and end horizontally");
  H.top.assign(h + 1, 0);
  {
    int ci = 0, cj = h;
    H.outer_path.push_back({0, h});
    for (int t = 0; t < m; ++t) {
      if (inD2[omega_hat[t]]) {
        ++ci;
      } else {
        H.top[cj] = ci;
        --cj;
      }
      H.outer_path.push_back({ci, cj});
    }
    require(ci == v && cj == 0, errc::internal_error,
            "staircase step counts disagree with the label split");
    H.top[0] = v;
    for (int j = 0; j < h; ++j)
      require(H.top[j] >= H.top[j + 1], errc::internal_error,
              "staircase heights are not monotone");
  }

  // Inner path labels, then the interior by upward propagation.
  H.bottom_label.assign(h, 0);
  for (int j = 0; j < h; ++j) H.bottom_label[j] = P1[h - 1 - j];
  H.right_label = P2;
  H.vertex_labels.emplace(GridPos{0, h}, A);
  for (int j = h; j-- > 0;) {
    KSubset next = apply_shift(H.vertex_labels.at({0, j + 1}),
                               H.bottom_label[j], errc::construction_failure,
                               "inner horizontal section");
    H.vertex_labels.emplace(GridPos{0, j}, next);
  }
  require(H.vertex_labels.at({0, 0}) == W, errc::construction_failure,
          "horizontal section does not reach W");
  for (int j = 0; j <= h; ++j) {
    for (int i = 0; i < H.top[j]; ++i) {
      KSubset next = apply_shift(H.vertex_labels.at({i, j}), H.right_label[i],
                                 errc::construction_failure,
                                 "vertical propagation");
      H.vertex_labels.emplace(GridPos{i + 1, j}, next);
    }
  }
  // Re-validate every horizontal edge above the bottom row.
  for (int j = 0; j < h; ++j) {
    for (int i = 1; i <= H.top[j + 1]; ++i) {
      KSubset expect = apply_shift(H.vertex_labels.at({i, j + 1}),
                                   H.bottom_label[j],
                                   errc::construction_failure,
                                   "interior horizontal edge");
      require(expect == H.vertex_labels.at({i, j}), errc::construction_failure,
              "grid squares do not commute at " + pos_str({i, j}));
    }
  }
  // The outer path must carry exactly the circuit arc from A to B.
  for (int t = 0; t <= m; ++t) {
    const KSubset& got = H.vertex_labels.at(H.outer_path[t]);
    const KSubset& want = C.vertices[(pA + t) % n];
    require(got == want, errc::construction_failure,
            "outer path label mismatch at " + pos_str(H.outer_path[t]) +
                ": built " + got.str() + ", circuit has " + want.str());
  }

  // The flattened-circuit permutation: horizontal part, vertical part, then
  // the labels of the arc where the two circuits agree.
  H.omega_H = P1;
  H.omega_H.insert(H.omega_H.end(), P2.begin(), P2.end());
  H.omega_H.insert(H.omega_H.end(), restlab.begin(), restlab.end());
  {
    std::vector<char> seen(n + 1, 0);
    require(static_cast<int>(H.omega_H.size()) == n, errc::internal_error,
            "flattened permutation has wrong length");
    for (int l : H.omega_H) {
      require(l >= 1 && l <= n && !seen[l], errc::internal_error,
              "flattened labels are not a permutation");
      seen[l] = 1;
    }
  }
  return H;
}

int swapping_distance(const OrientedYoungGrid& H) {
  int best = 0;
  for (const auto& [p, lbl] : H.vertex_labels)
    best = std::max(best, p.i + p.j - 1);
  return best;
}

std::vector<GridRelation> grid_inequalities(const OrientedYoungGrid& H) {
  std::vector<GridRelation> out;
  for (const auto& [p, lbl] : H.vertex_labels) {
    if (H.is_outer(p)) continue;
    const GridPos above{p.i + 1, p.j}, left{p.i, p.j + 1};
    require(H.contains(above) && H.contains(left), errc::internal_error,
            "non-outer vertex lacks an upper or left neighbour at " +
                pos_str(p));
    out.push_back({lbl, H.label(above), p, true});
    out.push_back({lbl, H.label(left), p, false});
  }
  return out;
}

std::vector<GridPos> origin_chain(const OrientedYoungGrid& H) {
  GridPos far{0, 0};
  for (const auto& [p, lbl] : H.vertex_labels)
    if (p.i + p.j > far.i + far.j) far = p;
  std::vector<GridPos> chain;
  for (int i = 0; i < far.i; ++i) chain.push_back({i, 0});
  for (int j = 1; j <= far.j; ++j) chain.push_back({far.i - 1, j});
  require(static_cast<int>(chain.size()) == swapping_distance(H) + 1,
          errc::internal_error, "origin chain has the wrong length");
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    const GridPos& d = chain[t];
    const GridPos& g = chain[t + 1];
    const bool vertical = (g.i == d.i + 1 && g.j == d.j);
    const bool horizontal = (g.i == d.i && g.j == d.j + 1);
    require((vertical || horizontal) && H.contains(g) && !H.is_outer(d),
            errc::internal_error,
            "origin chain step is not a grid relation at " + pos_str(d));
  }
  return chain;
}

int rank_lower_bound(const SortedCollection& J, const KSubset& W) {
  return swapping_distance(build_young_grid(J, W));
}

}  // namespace hypergrass
