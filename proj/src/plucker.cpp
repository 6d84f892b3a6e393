#include "hypergrass/plucker.hpp"

#include <algorithm>

#include "hypergrass/config.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/sorting.hpp"

namespace hypergrass {

const Rat& PluckerVector::value(const KSubset& I) const {
  require(exact, errc::parameter_mismatch,
          "exact value requested from a float-mode Plucker vector");
  auto it = values.find(I);
  require(it != values.end(), errc::parameter_mismatch,
          "no minor stored for " + I.str());
  return it->second;
}

const Ball& PluckerVector::ball(const KSubset& I) const {
  require(!exact, errc::parameter_mismatch,
          "ball requested from an exact-mode Plucker vector");
  auto it = approx.find(I);
  require(it != approx.end(), errc::parameter_mismatch,
          "no minor stored for " + I.str());
  return it->second;
}

bool PluckerVector::all_positive() const {
  if (exact) {
    for (const auto& [I, v] : values)
      if (v <= 0) return false;
    return true;
  }
  for (const auto& [I, b] : approx)
    if (!b.certainly_positive()) return false;
  return true;
}

PluckerVector plucker_all(const RationalMatrix& A) {
  const auto all = all_ksubsets(A.n(), A.k());
  PluckerVector P;
  P.k = A.k();
  P.n = A.n();
  for (const KSubset& I : all) P.values.emplace(I, A.minor_det(I));
  return P;
}

bool is_totally_positive_point(const RationalMatrix& A) {
  for (const KSubset& I : all_ksubsets(A.n(), A.k()))
    if (A.minor_det(I) <= 0) return false;
  return true;
}

int ArrangementPartition::block_of(const KSubset& I) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), I)) return b;
  raise(errc::parameter_mismatch, "subset not in any block: " + I.str());
}

ArrangementPartition extract_arrangement(const PluckerVector& P) {
  ArrangementPartition out;
  out.k = P.k;
  out.n = P.n;
  out.power = P.power;
  if (P.exact) {
    require(P.all_positive(), errc::parameter_mismatch,
            "arrangement extraction requires positive minors");
    std::map<Rat, std::vector<KSubset>> groups;  // ascending by exact value
    for (const auto& [I, v] : P.values) groups[v].push_back(I);
    for (auto& [v, members] : groups) {
      std::sort(members.begin(), members.end());
      out.block_values.push_back(v);
      out.blocks.push_back(std::move(members));
    }
    return out;
  }
  // Float mode: order balls into clusters.  Two entries may share a block
  // only when their enclosures are exact and identical; an overlap between
  // inexact enclosures is a precision failure, never a silent merge.
  require(P.all_positive(), errc::precision_failure,
          "float-mode minors not certainly positive");
  std::vector<std::pair<KSubset, const Ball*>> items;
  for (const auto& [I, b] : P.approx) items.emplace_back(I, &b);
  // Insertion sort against block representatives (l blocks, l small).
  std::vector<std::vector<KSubset>> blocks;
  std::vector<const Ball*> reps;
  for (auto& [I, b] : items) {
    std::size_t pos = blocks.size();
    bool placed = false;
    // Linear scan keeps the comparison logic transparent; sizes are C(n,k).
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto cmp = b->compare(*reps[i]);
      require(cmp.has_value(), errc::precision_failure,
              "minor values too close to separate at current precision: " +
                  I.str());
      if (*cmp == 0) {
        blocks[i].push_back(I);
        placed = true;
        break;
      }
      if (*cmp < 0) {
        pos = i;
        break;
      }
    }
    if (!placed) {
      blocks.insert(blocks.begin() + pos, {I});
      reps.insert(reps.begin() + pos, b);
    }
  }
  for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
  out.blocks = std::move(blocks);
  return out;
}

std::vector<SkanderaViolation> skandera_check(const PluckerVector& P) {
  require(P.exact, errc::parameter_mismatch,
          "skandera_check requires an exact-mode Plucker vector");
  require(P.all_positive(), errc::parameter_mismatch,
          "skandera_check requires positive minors");
  std::vector<SkanderaViolation> out;
  const auto all = all_ksubsets(P.n, P.k);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (is_sorted_pair(all[i], all[j])) continue;
      SortPair s = sort_merge(all[i], all[j]);
      Rat lhs = P.value(s.first) * P.value(s.second);
      Rat rhs = P.value(all[i]) * P.value(all[j]);
      if (!(lhs > rhs))
        out.push_back({all[i], all[j], s.first, s.second, lhs, rhs});
    }
  }
  return out;
}

}  // namespace hypergrass
