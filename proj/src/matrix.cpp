#include "hypergrass/matrix.hpp"

#include <algorithm>
#include <set>

#include "hypergrass/errors.hpp"

namespace hypergrass {

RationalMatrix::RationalMatrix(int k, int n) : k_(k), n_(n) {
  require(k >= 1 && n >= 1 && k <= n, errc::parameter_mismatch,
          "matrix requires 1 <= k <= n");
  a_.assign(static_cast<std::size_t>(k) * n, Rat(0));
}

RationalMatrix::RationalMatrix(int k, int n, std::vector<Rat> row_major)
    : RationalMatrix(k, n) {
  require(row_major.size() == a_.size(), errc::parameter_mismatch,
          "matrix entry count does not match k*n");
  a_ = std::move(row_major);
}

const Rat& RationalMatrix::at(int row, int col) const {
  require(row >= 0 && row < k_ && col >= 1 && col <= n_,
          errc::parameter_mismatch, "matrix index out of range");
  return a_[static_cast<std::size_t>(row) * n_ + (col - 1)];
}

Rat& RationalMatrix::at(int row, int col) {
  require(row >= 0 && row < k_ && col >= 1 && col <= n_,
          errc::parameter_mismatch, "matrix index out of range");
  return a_[static_cast<std::size_t>(row) * n_ + (col - 1)];
}

Rat RationalMatrix::minor_det(const KSubset& cols) const {
  require(cols.n() == n_, errc::parameter_mismatch,
          "column set is over the wrong ground set");
  require(cols.k() == k_, errc::parameter_mismatch,
          "column set size must equal the number of rows");
  const auto el = cols.elements();
  // Gaussian elimination with exact rationals on a k x k copy.
  std::vector<Rat> m(static_cast<std::size_t>(k_) * k_);
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < k_; ++c) m[r * k_ + c] = at(r, el[c]);
  Rat det(1);
  for (int col = 0; col < k_; ++col) {
    int pivot = -1;
    for (int r = col; r < k_; ++r)
      if (m[r * k_ + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int c = col; c < k_; ++c)
        std::swap(m[pivot * k_ + c], m[col * k_ + c]);
      det = -det;
    }
    det *= m[col * k_ + col];
    for (int r = col + 1; r < k_; ++r) {
      if (m[r * k_ + col] == 0) continue;
      Rat f = m[r * k_ + col] / m[col * k_ + col];
      for (int c = col; c < k_; ++c) m[r * k_ + c] -= f * m[col * k_ + c];
    }
  }
  return det;
}

int RationalMatrix::rank() const {
  std::vector<Rat> m(a_);
  int rank = 0;
  for (int col = 0; col < n_ && rank < k_; ++col) {
    int pivot = -1;
    for (int r = rank; r < k_; ++r)
      if (m[static_cast<std::size_t>(r) * n_ + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < n_; ++c)
      std::swap(m[static_cast<std::size_t>(pivot) * n_ + c],
                m[static_cast<std::size_t>(rank) * n_ + c]);
    const Rat& p = m[static_cast<std::size_t>(rank) * n_ + col];
    for (int r = rank + 1; r < k_; ++r) {
      Rat& lead = m[static_cast<std::size_t>(r) * n_ + col];
      if (lead == 0) continue;
      Rat f = lead / p;
      for (int c = col; c < n_; ++c)
        m[static_cast<std::size_t>(r) * n_ + c] -=
            f * m[static_cast<std::size_t>(rank) * n_ + c];
    }
    ++rank;
  }
  return rank;
}

void RationalMatrix::scale_column(int col, const Rat& c) {
  require(col >= 1 && col <= n_, errc::parameter_mismatch,
          "column index out of range");
  require(c != 0, errc::parameter_mismatch, "torus scaling must be nonzero");
  for (int r = 0; r < k_; ++r) at(r, col) *= c;
}

// --- PRNG -------------------------------------------------------------

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
std::uint64_t rotl(std::uint64_t v, int s) {
  return (v << s) | (v >> (64 - s));
}
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound > 0, errc::internal_error, "Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound) - 1;
  for (;;) {
    std::uint64_t v = next();
    if (v <= limit) return v % bound;
  }
}

// --- sampling ----------------------------------------------------------

RationalMatrix sample_positive_point(int k, int n, std::uint64_t seed) {
  require(k >= 1 && n >= k, errc::parameter_mismatch,
          "sample requires 1 <= k <= n");
  Rng rng(seed);
  // n distinct numerators from {1, ..., 16*n} over the fixed prime
  // denominator 997, sorted increasingly: nodes 0 < x_1 < ... < x_n.
  std::set<std::uint64_t> numerators;
  while (static_cast<int>(numerators.size()) < n)
    numerators.insert(1 + rng.below(static_cast<std::uint64_t>(16) * n));
  std::vector<Rat> nodes;
  for (std::uint64_t p : numerators) {
    Rat x(static_cast<unsigned long>(p), 997u);
    x.canonicalize();
    nodes.push_back(x);
  }
  RationalMatrix A(k, n);
  for (int col = 1; col <= n; ++col) {
    Rat pw(1);
    for (int row = 0; row < k; ++row) {
      A.at(row, col) = pw;
      pw *= nodes[col - 1];
    }
  }
  return A;
}

RationalMatrix twisted_rotate(const RationalMatrix& A, int s) {
  const int k = A.k(), n = A.n();
  int sh = ((s % n) + n) % n;
  RationalMatrix B(k, n);
  // One step sends column j to position j-1 (for j >= 2) and column 1 to
  // position n with sign (-1)^(k-1); so after `sh` steps the new column c
  // is the old column c+sh (mod n), twisted once per wrap.
  for (int c = 1; c <= n; ++c) {
    int src = c + sh;
    int wraps = 0;
    while (src > n) {
      src -= n;
      ++wraps;
    }
    bool flip = (k % 2 == 0) && (wraps % 2 == 1);
    for (int r = 0; r < k; ++r)
      B.at(r, c) = flip ? Rat(-A.at(r, src)) : A.at(r, src);
  }
  return B;
}

}  // namespace hypergrass
