#pragma once

#include <map>
#include <vector>

#include "hypergrass/bigfloat.hpp"
#include "hypergrass/ksubset.hpp"
#include "hypergrass/matrix.hpp"

namespace hypergrass {

/// All C(n,k) maximal minors of a point of Gr(k,n), keyed by column set.
///
/// Exact mode stores rationals; to keep torus-normalized coordinates exact
/// (they are rational *powers* of rationals), a vector may represent the
/// `power`-th powers of the true values: `values[I] == (Delta_I)^power`.
/// Since all handled values are positive and x -> x^power is monotone,
/// every order comparison and product inequality on the true values can be
/// decided on the stored powers.  Float mode stores rigorous enclosures.
struct PluckerVector {
  int k = 0, n = 0;
  bool exact = true;
  long power = 1;                 ///< exact mode: stored value exponent
  std::map<KSubset, Rat> values;  ///< exact mode entries
  std::map<KSubset, Ball> approx; ///< float mode entries

  const Rat& value(const KSubset& I) const;
  const Ball& ball(const KSubset& I) const;
  bool all_positive() const;
};

/// Exact evaluation of every maximal minor (zero minors allowed).
PluckerVector plucker_all(const RationalMatrix& A);

/// True iff every maximal minor of A is strictly positive (exact test).
bool is_totally_positive_point(const RationalMatrix& A);

/// Ordered set partition U_1, ..., U_l of all k-subsets by minor value,
/// values strictly increasing (U_0 of Definition-style indexing is empty
/// for positive points and is not stored).
struct ArrangementPartition {
  int k = 0, n = 0;
  long power = 1;  ///< block_values are the `power`-th powers (exact mode)
  std::vector<std::vector<KSubset>> blocks;  ///< increasing value order
  std::vector<Rat> block_values;             ///< exact mode only

  /// Index (0-based from the BOTTOM) of the block containing I; the top
  /// block is blocks.size()-1.
  int block_of(const KSubset& I) const;
  const std::vector<KSubset>& top() const { return blocks.back(); }
};

/// Group equal minors and order the groups.  Exact mode compares rationals;
/// float mode requires every pair of distinct values to be separated beyond
/// the combined error radii (PrecisionFailure otherwise — near-ties are
/// never silently merged).
ArrangementPartition extract_arrangement(const PluckerVector& P);

/// One failed instance of the sorted-product inequality
/// Delta_sort1 * Delta_sort2 > Delta_I * Delta_J for an unsorted pair.
struct SkanderaViolation {
  KSubset I, J, sort1, sort2;
  Rat lhs;  ///< stored-power product Delta_sort1 * Delta_sort2
  Rat rhs;  ///< stored-power product Delta_I * Delta_J
};

/// Audit every unsorted pair (I,J); returns all violations (expected empty
/// for genuine positive points).  Requires exact mode.
std::vector<SkanderaViolation> skandera_check(const PluckerVector& P);

}  // namespace hypergrass
