#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypergrass/errors.hpp"

namespace hypergrass {

/// 0/1 indicator vector of length n (exactly the epsilon encoding of a
/// k-subset: entry t is 1 iff t+1 is a member).
using EpsilonVector = std::vector<int>;

/// A k-element subset of {1,...,n}, stored as an n-bit mask (bit i-1 <-> i).
///
/// The class is a value type ordered lexicographically on the increasing
/// element sequence, which is the canonical order used everywhere (member
/// lists, enumeration output, JSON).
class KSubset {
 public:
  KSubset() : n_(0), mask_(0) {}
  /// From explicit elements; validates 1 <= e <= n, strictly increasing.
  KSubset(int n, const std::vector<int>& elements);
  static KSubset from_mask(int n, std::uint64_t mask);
  /// From a 0/1 vector of length n.
  static KSubset from_epsilon(const EpsilonVector& eps);

  int n() const { return n_; }
  int k() const;
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1ULL; }
  std::vector<int> elements() const;
  EpsilonVector epsilon() const;

  /// Number of members in the interval [i, j]  (1 <= i <= j <= n).
  int interval_sum(int i, int j) const;

  /// Add s to every element modulo n (cyclic rotation of the circle).
  KSubset rotated(int s) const;
  KSubset complement() const;

  /// Member replacement: (this \ {out}) U {in}; requires out member, in not.
  KSubset replaced(int out, int in) const;

  bool operator==(const KSubset& o) const {
    return n_ == o.n_ && mask_ == o.mask_;
  }
  bool operator!=(const KSubset& o) const { return !(*this == o); }
  /// Lexicographic on the increasing element sequence.
  bool operator<(const KSubset& o) const;

  std::string str() const;  ///< e.g. "{1,3,5}"

 private:
  int n_;
  std::uint64_t mask_;
};

/// All k-subsets of {1..n} in canonical (lexicographic) order.
std::vector<KSubset> all_ksubsets(int n, int k);

/// Parse "3,5,6" (with optional surrounding braces/spaces) into a subset.
KSubset parse_subset(const std::string& text, int n);

}  // namespace hypergrass
