#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypergrass/bigfloat.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/sorting.hpp"

namespace hypergrass {

/// Column scaling alpha_1..alpha_n gauging the minors on a maximal sorted
/// collection S to the common value 1.  Each alpha_i is the product of
/// rational powers of the base minors Delta_{S_r}(A) (hence positive but in
/// general irrational): alpha_i = prod_r bases[r] ^ expo[i-1][r].
struct TorusScaling {
  int n = 0;
  std::vector<Rat> bases;              ///< Delta_{S_r}(A), r = 0..n-1
  std::vector<std::vector<Rat>> expo;  ///< expo[i-1][r], column i exponent

  /// Smallest positive integer D with every D*expo entry integral.
  long denominator_clearing() const;
  /// Exact alpha_i^D for a D that clears the exponent denominators.
  std::vector<Rat> alpha_powered(long D) const;
  /// Rigorous enclosures of the alpha_i at the given mantissa width.
  std::vector<Ball> alpha_float(int bits) const;
};

/// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<std::vector<std::vector<Rat>>> invert_rational(
    std::vector<std::vector<Rat>> m);

/// Rescale columns so that all minors on S become exactly 1 and verify that
/// every other minor is strictly smaller.  The returned vector holds the
/// scaled minors: exact mode stores their D-th powers (see PluckerVector);
/// float mode stores enclosures, with the S-members pinned to exact 1.
///
/// Raises: NotMaximal (S not of size n), ParameterMismatch (shape or
/// positivity precondition), SingularIncidence (0/1 system singular),
/// PrecisionFailure (float mode unable to separate a comparison),
/// InternalError (exact verification contradicts the normalization theorem
/// — reported, never patched).
std::pair<TorusScaling, PluckerVector> torus_normalize(
    const RationalMatrix& A, const SortedCollection& S,
    bool float_mode = false);

}  // namespace hypergrass
