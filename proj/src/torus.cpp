#include "hypergrass/torus.hpp"

#include <algorithm>

#include "hypergrass/config.hpp"
#include "hypergrass/errors.hpp"

namespace hypergrass {

namespace {

/// base^e for rational base > 0 and (possibly negative) integer e.
Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  out.canonicalize();
  if (e < 0) return Rat(1) / out;
  return out;
}

long lcm_long(long a, const Int& d) {
  Int l;
  mpz_lcm(l.get_mpz_t(), Int(a).get_mpz_t(), d.get_mpz_t());
  require(l.fits_slong_p(), errc::size_limit,
          "exponent denominators overflow the clearing power");
  return l.get_si();
}

}  // namespace

long TorusScaling::denominator_clearing() const {
  long d = 1;
  for (const auto& row : expo)
    for (const Rat& e : row) d = lcm_long(d, e.get_den());
  return d;
}

std::vector<Rat> TorusScaling::alpha_powered(long D) const {
  std::vector<Rat> out;
  out.reserve(expo.size());
  for (const auto& row : expo) {
    Rat a(1);
    for (int r = 0; r < n; ++r) {
      Rat e = row[r] * D;
      require(e.get_den() == 1, errc::parameter_mismatch,
              "D does not clear the exponent denominators");
      require(e.get_num().fits_slong_p(), errc::size_limit,
              "cleared exponent out of range");
      a *= rat_pow(bases[r], e.get_num().get_si());
    }
    out.push_back(a);
  }
  return out;
}

std::vector<Ball> TorusScaling::alpha_float(int bits) const {
  std::vector<Ball> logs;
  logs.reserve(bases.size());
  for (const Rat& b : bases) logs.push_back(Ball::from_rational(b, bits).log());
  std::vector<Ball> out;
  for (const auto& row : expo) {
    Ball acc = Ball::exact_zero(bits);
    for (int r = 0; r < n; ++r)
      acc = acc + Ball::from_rational(row[r], bits) * logs[r];
    out.push_back(acc.exp());
  }
  return out;
}

std::optional<std::vector<std::vector<Rat>>> invert_rational(
    std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::pair<TorusScaling, PluckerVector> torus_normalize(
    const RationalMatrix& A, const SortedCollection& S, bool float_mode) {
  const int k = A.k(), n = A.n();
  require(S.k() == k && S.n() == n, errc::parameter_mismatch,
          "matrix and collection have different (k,n)");
  require(S.maximal(), errc::not_maximal,
          "torus normalization needs a maximal sorted collection");

  PluckerVector raw = plucker_all(A);
  require(raw.all_positive(), errc::parameter_mismatch,
          "torus normalization requires a totally positive point");

  // Incidence system: sum_{i in S_r} log alpha_i = -log Delta_{S_r}(A).
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int el : S.members()[r].elements()) M[r][el - 1] = 1;
  auto G = invert_rational(M);
  if (!G) {
    std::string desc;
    for (const auto& m : S.members()) desc += m.str();
    raise(errc::singular_incidence,
          "0/1 incidence system is singular for collection " + desc);
  }

  TorusScaling scaling;
  scaling.n = n;
  for (int r = 0; r < n; ++r) scaling.bases.push_back(raw.value(S.members()[r]));
  // log alpha_i = -sum_r G[i-1][r] log Delta_{S_r}.
  scaling.expo.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r) scaling.expo[i][r] = -(*G)[i][r];

  // Scaled minors: log Delta'_J = log Delta_J + sum_r e_{J,r} log Delta_{S_r}
  // with e_{J,r} = -sum_{i in J} G[i-1][r].
  const auto all = all_ksubsets(n, k);
  std::vector<std::vector<Rat>> e(all.size(), std::vector<Rat>(n, Rat(0)));
  long D = scaling.denominator_clearing();  // also serves alpha_powered(D)
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    for (int r = 0; r < n; ++r) {
      Rat sum(0);
      for (int el : all[idx].elements()) sum += (*G)[el - 1][r];
      e[idx][r] = -sum;
      D = lcm_long(D, e[idx][r].get_den());
    }
  }

  PluckerVector out;
  out.k = k;
  out.n = n;
  if (!float_mode) {
    out.power = D;
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
      Rat v = rat_pow(raw.value(all[idx]), D);
      for (int r = 0; r < n; ++r) {
        Rat z = e[idx][r] * D;
        require(z.get_den() == 1 && z.get_num().fits_slong_p(),
                errc::internal_error, "exponent clearing failed");
        v *= rat_pow(scaling.bases[r], z.get_num().get_si());
      }
      out.values.emplace(all[idx], v);
    }
    // Theorem audit: exactly 1 on S, strictly below 1 elsewhere.
    for (const auto& [I, v] : out.values) {
      if (S.contains(I))
        require(v == 1, errc::internal_error,
                "normalized minor on the collection is not 1 at " + I.str());
      else
        require(v < 1, errc::internal_error,
                "normalization theorem violated: minor not smaller at " +
                    I.str());
    }
    return {std::move(scaling), std::move(out)};
  }

  const int bits = config().float_precision_bits;
  out.exact = false;
  std::vector<Ball> logs;
  for (const Rat& b : scaling.bases)
    logs.push_back(Ball::from_rational(b, bits).log());
  const Ball one = Ball::exact_one(bits);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    if (S.contains(all[idx])) {
      // Exactly 1 by construction (the incidence solve is exact); pin it.
      out.approx.emplace(all[idx], one);
      continue;
    }
    Ball acc = Ball::from_rational(raw.value(all[idx]), bits).log();
    for (int r = 0; r < n; ++r)
      acc = acc + Ball::from_rational(e[idx][r], bits) * logs[r];
    Ball v = acc.exp();
    auto cmp = v.compare(one);
    require(cmp.has_value(), errc::precision_failure,
            "cannot separate normalized minor from 1 at " + all[idx].str() +
                "; raise float_precision_bits");
    require(*cmp < 0, errc::internal_error,
            "normalization theorem violated in float mode at " +
                all[idx].str());
    out.approx.emplace(all[idx], v);
  }
  return {std::move(scaling), std::move(out)};
}

}  // namespace hypergrass
