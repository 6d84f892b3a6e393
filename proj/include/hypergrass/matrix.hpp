#pragma once

#include <cstdint>
#include <vector>

#include "hypergrass/bigfloat.hpp"
#include "hypergrass/ksubset.hpp"

namespace hypergrass {

/// Dense k x n matrix over the rationals (rows 0..k-1, columns 1..n to match
/// subset elements).  Represents a point of the Grassmannian Gr(k,n) via its
/// row span; full row rank is validated on demand, not in the constructor.
class RationalMatrix {
 public:
  RationalMatrix(int k, int n);
  RationalMatrix(int k, int n, std::vector<Rat> row_major);

  int k() const { return k_; }
  int n() const { return n_; }
  const Rat& at(int row, int col) const;  ///< row 0-based, col 1-based
  Rat& at(int row, int col);

  /// Determinant of the square submatrix on a k-element column set.
  Rat minor_det(const KSubset& cols) const;

  /// Rank over the rationals (fraction-free elimination).
  int rank() const;

  /// Rescale column j by c (the torus action).
  void scale_column(int col, const Rat& c);

  bool operator==(const RationalMatrix& o) const {
    return k_ == o.k_ && n_ == o.n_ && a_ == o.a_;
  }

 private:
  int k_, n_;
  std::vector<Rat> a_;
};

/// Deterministic totally positive sample: rows (x_j)^(i-1) on strictly
/// increasing positive rational nodes x_1 < ... < x_n drawn from the seed.
/// Every maximal minor is a Vandermonde determinant on increasing nodes,
/// hence strictly positive.
RationalMatrix sample_positive_point(int k, int n, std::uint64_t seed);

/// Positivity-preserving cyclic shift of Gr+(k,n): columns move left by one
/// step `s` times and the wrapped column picks up the sign (-1)^(k-1), so
/// that minor_det(result, I) == minor_det(A, I rotated by +s) for every I.
RationalMatrix twisted_rotate(const RationalMatrix& A, int s);

/// Deterministic PRNG used by all sampling code.  Fully specified here
/// (xoshiro256** seeded through splitmix64) so results are byte-identical
/// across platforms and standard libraries; `below` is unbiased rejection.
struct Rng {
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();                      ///< raw 64-bit output
  std::uint64_t below(std::uint64_t bound);  ///< unbiased in [0, bound)
 private:
  std::uint64_t s_[4];
};

}  // namespace hypergrass
