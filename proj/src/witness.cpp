#include "hypergrass/witness.hpp"

#include <string>

#include "hypergrass/config.hpp"
#include "hypergrass/errors.hpp"

namespace hypergrass {

namespace {
int rot_el(int x, int s, int n) { return (x - 1 + s) % n + 1; }
}  // namespace

WitnessResult second_largest_witness(const SortedCollection& J,
                                     const KSubset& W, std::uint64_t seed) {
  const int k = J.k(), n = J.n();
  require(W.n() == n && W.k() == k, errc::parameter_mismatch,
          "W and J have different (k,n)");
  require(!J.contains(W), errc::degenerate_query,
          "W is a member of J; every member is already largest");

  const auto detours = facet_detours(J);
  const DetourMove* move = nullptr;
  for (const auto& d : detours)
    if (d.replacement == W) {
      move = &d;
      break;
    }
  if (!move)
    raise(errc::not_adjacent,
          "W " + W.str() +
              " is not the replacement of any detour of J; by the "
              "second-largest criterion no witness exists");

  // Work in a cyclically relabeled frame where the four perturbed column
  // indices a-1, a, b, b+1 do not wrap around n; positivity of the
  // perturbation is then a sum of nonnegative Vandermonde terms.
  int s = -1;
  for (int cand = 0; cand < n; ++cand) {
    if (rot_el(move->a, cand, n) >= 2 && rot_el(move->b, cand, n) <= n - 1) {
      s = cand;
      break;
    }
  }
  require(s >= 0, errc::internal_error, "no wrap-free relabeling exists");
  const int ia = rot_el(move->a, s, n);
  const int ib = rot_el(move->b, s, n);
  require(ia >= 2 && ib + 1 <= n && ib + 1 != ia && ia - 1 != ib,
          errc::internal_error, "detour columns collide after relabeling");

  const RationalMatrix C = sample_positive_point(k, n, seed);
  const int floor_exp = config().witness_eps_floor_exp;
  Rat eps(1, 2);
  std::string last_diag;
  for (int step = 1; step <= floor_exp; ++step, eps /= 2) {
    RationalMatrix Cp = C;
    for (int r = 0; r < k; ++r) {
      Cp.at(r, ia) = C.at(r, ia - 1) + eps * C.at(r, ia);
      Cp.at(r, ib + 1) = C.at(r, ib) + eps * C.at(r, ib + 1);
    }
    require(is_totally_positive_point(Cp), errc::internal_error,
            "perturbed sample lost total positivity");
    // Undo the relabeling: minors of B on I equal minors of Cp on I+s.
    RationalMatrix B = twisted_rotate(Cp, s);
    auto [scaling, normalized] = torus_normalize(B, J);
    const Rat& vw = normalized.value(W);
    bool ok = true;
    for (const auto& [I, v] : normalized.values) {
      if (I == W || J.contains(I)) continue;
      if (!(vw > v)) {
        ok = false;
        last_diag = "eps " + rational_str(eps) + ": minor at " + I.str() +
                    " not below the candidate";
        break;
      }
    }
    if (ok)
      return {std::move(B),      *move,
              eps,               s,
              std::move(scaling), std::move(normalized)};
  }
  raise(errc::witness_search_exhausted,
        "epsilon schedule reached 2^-" + std::to_string(floor_exp) +
            " for W " + W.str() + " (" + last_diag + ")");
}

}  // namespace hypergrass
