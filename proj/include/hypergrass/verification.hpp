#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypergrass {

/// Machine-readable result of one experiment run.  `failures` carry full
/// counterexample payloads for claims with a proof; `findings` record
/// open-case evidence and informational notes that must not fail the run.
struct ExperimentReport {
  std::string id;
  int k = 0, n = 0, t = 0, trials = 0;
  std::uint64_t seed = 0;
  long long cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;
  double runtime_seconds = 0.0;

  bool pass() const { return failures.empty(); }
};

/// Count of triangulation facets equals the Eulerian number A(n-1,k-1).
ExperimentReport verify_triangulation_counts(int k, int n);

/// For all triples (W,U,V) with U,V sorted and W unsorted with both, the set
/// {U, V, Sort1(W,V), Sort2(W,V), Sort1(W,U), Sort2(W,U)} is not sorted.
/// Triples failing the hypotheses are skipped and counted in `findings`.
ExperimentReport verify_unsorted_triple_lemma(int k, int n);

/// Sampled positive points normalized to random maximal collections: each
/// member W of the observed second-largest block is sorted with the whole
/// collection, or unsorted with exactly one member J such that swapping J
/// for W keeps the collection sorted.
ExperimentReport verify_second_largest_necessity(int k, int n, int trials,
                                                 std::uint64_t seed,
                                                 int jobs = 0,
                                                 bool float_mode = false);

/// Every facet-neighbour replacement W of every facet J admits an exact
/// witness point whose normalization makes W the strict second-largest
/// value; also checks the per-facet count bound (at most n candidates).
ExperimentReport verify_second_largest_sufficiency(int k, int n,
                                                   std::uint64_t seed,
                                                   int jobs = 0);

/// Cube-distance conjecture: whenever the cube distance from J to the facets
/// containing W is t, the observed block of W lies strictly below the top t
/// blocks.  Violations in proved cases (t <= 3, k = 2, or W sorted with at
/// least one member) are failures; other violations are recorded as
/// open-case findings only.
ExperimentReport verify_cubical_conjecture(int k, int n, int t_max,
                                           int trials, std::uint64_t seed,
                                           int jobs = 0,
                                           bool float_mode = false);

/// Every member Y of the observed t-th largest block satisfies
/// max_interval_distance(eps_Y, eps_J) <= 2^(t-1) for every member J, and any
/// two same-block members share a ball of that radius around some member.
ExperimentReport verify_ball_bound(int k, int n, int t_max, int trials,
                                   std::uint64_t seed, int jobs = 0,
                                   bool float_mode = false);

/// Dispatch by experiment id ("triangulation-counts", "unsorted-triple",
/// "second-largest-necessity", "second-largest-sufficiency",
/// "cubical-conjecture", "ball-bound").  Raises parameter_mismatch for an
/// unknown id.
ExperimentReport run_experiment(const std::string& id, int k, int n, int t,
                                int trials, std::uint64_t seed, int jobs = 0,
                                bool float_mode = false);

}  // namespace hypergrass
