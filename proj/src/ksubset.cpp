#include "hypergrass/ksubset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hypergrass/config.hpp"

namespace hypergrass {

static void check_n(int n) {
  require(n >= 1 && n <= 64 && n <= config().max_n, errc::parameter_mismatch,
          "ground set size n=" + std::to_string(n) + " out of range");
}

KSubset::KSubset(int n, const std::vector<int>& elements) : n_(n), mask_(0) {
  check_n(n);
  int prev = 0;
  for (int e : elements) {
    require(e >= 1 && e <= n, errc::parameter_mismatch,
            "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    require(e > prev, errc::parameter_mismatch,
            "elements must be strictly increasing");
    prev = e;
    mask_ |= 1ULL << (e - 1);
  }
}

KSubset KSubset::from_mask(int n, std::uint64_t mask) {
  check_n(n);
  require(n == 64 || mask < (1ULL << n), errc::parameter_mismatch,
          "mask has bits outside 1..n");
  KSubset s;
  s.n_ = n;
  s.mask_ = mask;
  return s;
}

KSubset KSubset::from_epsilon(const EpsilonVector& eps) {
  check_n(static_cast<int>(eps.size()));
  std::uint64_t mask = 0;
  for (std::size_t t = 0; t < eps.size(); ++t) {
    require(eps[t] == 0 || eps[t] == 1, errc::parameter_mismatch,
            "epsilon entries must be 0 or 1");
    if (eps[t]) mask |= 1ULL << t;
  }
  return from_mask(static_cast<int>(eps.size()), mask);
}

int KSubset::k() const { return std::popcount(mask_); }

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(k());
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

EpsilonVector KSubset::epsilon() const {
  EpsilonVector eps(n_, 0);
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) eps[i - 1] = 1;
  return eps;
}

int KSubset::interval_sum(int i, int j) const {
  require(1 <= i && i <= j && j <= n_, errc::parameter_mismatch,
          "interval [i,j] out of range");
  const std::uint64_t hi =
      (j == 64) ? ~0ULL : ((1ULL << j) - 1);  // bits 1..j
  const std::uint64_t lo = (1ULL << (i - 1)) - 1;  // bits 1..i-1
  return std::popcount(mask_ & (hi & ~lo));
}

KSubset KSubset::rotated(int s) const {
  std::uint64_t m = 0;
  s = ((s % n_) + n_) % n_;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) {
      int j = i + s;
      if (j > n_) j -= n_;
      m |= 1ULL << (j - 1);
    }
  return from_mask(n_, m);
}

KSubset KSubset::complement() const {
  const std::uint64_t full = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);
  return from_mask(n_, full & ~mask_);
}

KSubset KSubset::replaced(int out, int in) const {
  require(contains(out), errc::parameter_mismatch,
          "replaced(): " + std::to_string(out) + " is not a member");
  require(!contains(in), errc::parameter_mismatch,
          "replaced(): " + std::to_string(in) + " is already a member");
  std::uint64_t m = mask_;
  m &= ~(1ULL << (out - 1));
  m |= 1ULL << (in - 1);
  return from_mask(n_, m);
}

bool KSubset::operator<(const KSubset& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  // Lexicographic on increasing element sequences.
  const auto a = elements();
  const auto b = o.elements();
  return a < b;
}

std::string KSubset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<KSubset> all_ksubsets(int n, int k) {
  check_n(n);
  require(k >= 0 && k <= n, errc::parameter_mismatch, "k out of range");
  std::vector<KSubset> out;
  std::vector<int> cur;
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(n, cur);
      return;
    }
    const int need = k - static_cast<int>(cur.size());
    for (int e = next; e + need - 1 <= n; ++e) {
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

KSubset parse_subset(const std::string& text, int n) {
  std::vector<int> elems;
  std::string cleaned;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') cleaned.push_back(c);
  std::istringstream is(cleaned);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    require(!tok.empty(), errc::parameter_mismatch,
            "empty element in subset '" + text + "'");
    try {
      elems.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      raise(errc::parameter_mismatch, "bad element '" + tok + "'");
    }
  }
  require(!elems.empty(), errc::parameter_mismatch, "empty subset");
  std::sort(elems.begin(), elems.end());
  return KSubset(n, elems);  // constructor rejects duplicates / out-of-range
}

}  // namespace hypergrass
