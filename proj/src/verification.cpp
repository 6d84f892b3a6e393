#include "hypergrass/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hypergrass/circuits.hpp"
#include "hypergrass/config.hpp"
#include "hypergrass/dual_graph.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/sorting.hpp"
#include "hypergrass/torus.hpp"
#include "hypergrass/witness.hpp"

namespace hypergrass {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

/// Run body(0..count-1) on up to `jobs` threads.  Work items must write only
/// to their own slots; the first exception is rethrown after joining.
void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  if (count <= 0) return;
  if (jobs <= 0) jobs = config().effective_jobs();
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  const auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Per-work-item results, merged in index order for byte-stable reports.
struct TrialOut {
  long long cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;
};

void merge(ExperimentReport& r, const std::vector<TrialOut>& outs) {
  for (const TrialOut& o : outs) {
    r.cases += o.cases;
    r.failures.insert(r.failures.end(), o.failures.begin(), o.failures.end());
    r.findings.insert(r.findings.end(), o.findings.begin(), o.findings.end());
  }
}

void check_numeric_mode(int n, bool float_mode) {
  require(n <= 8 || float_mode, errc::not_applicable,
          "exact mode is supported for n <= 8; enable float mode for larger "
          "ground sets");
}

struct TrialPlan {
  int collection_index = 0;
  std::uint64_t matrix_seed = 0;
};

std::vector<TrialPlan> draw_plan(int trials, std::uint64_t seed,
                                 std::size_t collections) {
  require(trials >= 1, errc::parameter_mismatch,
          "experiments need at least one trial");
  require(collections > 0, errc::internal_error, "no facets to sample");
  std::vector<TrialPlan> plan(trials);
  Rng rng(seed);
  for (TrialPlan& p : plan) {
    p.collection_index = static_cast<int>(rng.below(collections));
    p.matrix_seed = rng.next();
  }
  return plan;
}

ArrangementPartition sampled_arrangement(const SortedCollection& J,
                                         std::uint64_t matrix_seed,
                                         bool float_mode) {
  const RationalMatrix A = sample_positive_point(J.k(), J.n(), matrix_seed);
  const auto normalized = torus_normalize(A, J, float_mode);
  return extract_arrangement(normalized.second);
}

}  // namespace

ExperimentReport verify_triangulation_counts(int k, int n) {
  Timer timer;
  ExperimentReport r;
  r.id = "triangulation-counts";
  r.k = k;
  r.n = n;
  const auto facets = enumerate_maximal_sorted(k, n);
  const mpz_class expected = eulerian_number(n - 1, k - 1);
  r.cases = 1;
  if (mpz_cmp_ui(expected.get_mpz_t(),
                 static_cast<unsigned long>(facets.size())) != 0)
    r.failures.push_back("enumerated " + std::to_string(facets.size()) +
                         " maximal sorted collections at (" +
                         std::to_string(k) + "," + std::to_string(n) +
                         "), Eulerian count is " + expected.get_str());
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport verify_unsorted_triple_lemma(int k, int n) {
  Timer timer;
  ExperimentReport r;
  r.id = "unsorted-triple";
  r.k = k;
  r.n = n;
  const std::vector<KSubset> all = all_ksubsets(n, k);
  const int m = static_cast<int>(all.size());
  require(static_cast<long long>(m) * m * m <= config().max_collections * 64,
          errc::size_limit, "triple enumeration too large for this (k,n)");
  std::vector<std::vector<char>> sorted(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      sorted[i][j] = sorted[j][i] = is_sorted_pair(all[i], all[j]);

  long long skipped = 0;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        if (w == u || w == v) continue;
        if (!sorted[u][v] || sorted[w][u] || sorted[w][v]) {
          ++skipped;
          continue;
        }
        ++r.cases;
        const SortPair wu = sort_merge(all[w], all[u]);
        const SortPair wv = sort_merge(all[w], all[v]);
        std::set<KSubset> t{all[u], all[v], wu.first, wu.second,
                            wv.first, wv.second};
        if (is_sorted_collection(std::vector<KSubset>(t.begin(), t.end())))
          r.failures.push_back(
              "sorted sort-closure: W=" + all[w].str() + ", U=" +
              all[u].str() + ", V=" + all[v].str());
      }
  r.findings.push_back("skipped " + std::to_string(skipped) +
                       " triples not meeting the hypotheses");
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport verify_second_largest_necessity(int k, int n, int trials,
                                                 std::uint64_t seed, int jobs,
                                                 bool float_mode) {
  Timer timer;
  check_numeric_mode(n, float_mode);
  ExperimentReport r;
  r.id = "second-largest-necessity";
  r.k = k;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  const auto facets = enumerate_maximal_sorted(k, n);
  const auto plan = draw_plan(trials, seed, facets.size());
  std::vector<TrialOut> outs(trials);
  parallel_for(trials, jobs, [&](int t) {
    const SortedCollection& J = facets[plan[t].collection_index];
    const ArrangementPartition arr =
        sampled_arrangement(J, plan[t].matrix_seed, float_mode);
    if (arr.blocks.size() < 2) return;  // vacuous: every minor is largest
    for (const KSubset& W : arr.blocks[arr.blocks.size() - 2]) {
      ++outs[t].cases;
      bool sorted_with_all = true;
      for (const KSubset& member : J.members())
        if (!is_sorted_pair(W, member)) {
          sorted_with_all = false;
          break;
        }
      bool ok = sorted_with_all;
      if (!ok) {
        for (const KSubset& member : J.members()) {
          if (is_sorted_pair(W, member)) continue;
          std::vector<KSubset> swapped;
          for (const KSubset& x : J.members())
            if (!(x == member)) swapped.push_back(x);
          swapped.push_back(W);
          if (is_sorted_collection(swapped)) {
            ok = true;
            break;
          }
        }
      }
      if (!ok)
        outs[t].failures.push_back(
            "trial " + std::to_string(t) + ": J=" + J.str() +
            ", second-largest member W=" + W.str() +
            " is neither sorted with J nor a sorted single swap");
    }
  });
  merge(r, outs);
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport verify_second_largest_sufficiency(int k, int n,
                                                   std::uint64_t seed,
                                                   int jobs) {
  Timer timer;
  ExperimentReport r;
  r.id = "second-largest-sufficiency";
  r.k = k;
  r.n = n;
  r.seed = seed;
  const auto facets = enumerate_maximal_sorted(k, n);
  std::vector<TrialOut> outs(facets.size());
  parallel_for(static_cast<int>(facets.size()), jobs, [&](int vi) {
    const SortedCollection& J = facets[vi];
    const auto detours = facet_detours(J);
    if (static_cast<int>(detours.size()) > n)
      outs[vi].failures.push_back(
          "facet " + J.str() + " has " + std::to_string(detours.size()) +
          " candidate second-largest minors, exceeding the bound n=" +
          std::to_string(n));
    for (const DetourMove& mv : detours) {
      ++outs[vi].cases;
      try {
        second_largest_witness(J, mv.replacement, seed);
      } catch (const error& e) {
        if (e.code() != errc::witness_search_exhausted) throw;
        outs[vi].failures.push_back("no witness for J=" + J.str() +
                                    ", W=" + mv.replacement.str() + ": " +
                                    e.what());
      }
    }
  });
  merge(r, outs);
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport verify_cubical_conjecture(int k, int n, int t_max,
                                           int trials, std::uint64_t seed,
                                           int jobs, bool float_mode) {
  Timer timer;
  check_numeric_mode(n, float_mode);
  require(t_max >= 1, errc::parameter_mismatch, "t must be at least 1");
  ExperimentReport r;
  r.id = "cubical-conjecture";
  r.k = k;
  r.n = n;
  r.t = t_max;
  r.trials = trials;
  r.seed = seed;
  const DualGraph g = build_dual_graph(k, n);
  const auto plan = draw_plan(trials, seed, g.vertices.size());
  const std::vector<KSubset> subsets = all_ksubsets(n, k);

  // Cube distance from each sampled facet to the facets containing each
  // subset, computed once per distinct facet.
  std::map<int, std::vector<int>> subset_distance;
  for (const TrialPlan& p : plan) {
    if (subset_distance.count(p.collection_index)) continue;
    const std::vector<int> dist = cubical_distances(g, p.collection_index);
    std::vector<int> per_subset(subsets.size(), -1);
    for (std::size_t si = 0; si < subsets.size(); ++si) {
      int best = -1;
      for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
        if (!g.vertices[vi].contains(subsets[si]) || dist[vi] < 0) continue;
        if (best < 0 || dist[vi] < best) best = dist[vi];
      }
      per_subset[si] = best;
    }
    subset_distance.emplace(p.collection_index, std::move(per_subset));
  }

  std::vector<TrialOut> outs(trials);
  parallel_for(trials, jobs, [&](int t) {
    const SortedCollection& J = g.vertices[plan[t].collection_index];
    const std::vector<int>& cube_d =
        subset_distance.at(plan[t].collection_index);
    const ArrangementPartition arr =
        sampled_arrangement(J, plan[t].matrix_seed, float_mode);
    const int top = static_cast<int>(arr.blocks.size()) - 1;
    for (std::size_t si = 0; si < subsets.size(); ++si) {
      const KSubset& W = subsets[si];
      if (J.contains(W)) continue;
      const int d = cube_d[si];
      if (d < 1 || d > t_max) continue;
      ++outs[t].cases;
      const int block = arr.block_of(W);
      if (block <= top - d) continue;
      bool proved = d <= 3 || k == 2;
      if (!proved)
        for (const KSubset& member : J.members())
          if (is_sorted_pair(W, member)) {
            proved = true;
            break;
          }
      const std::string msg =
          "trial " + std::to_string(t) + ": J=" + J.str() + ", W=" + W.str() +
          " at cube distance " + std::to_string(d) + " sits in block " +
          std::to_string(block + 1) + " of " + std::to_string(top + 1) +
          ", inside the top " + std::to_string(d);
      if (proved)
        outs[t].failures.push_back(msg);
      else
        outs[t].findings.push_back("open-case evidence: " + msg);
    }
  });
  merge(r, outs);
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport verify_ball_bound(int k, int n, int t_max, int trials,
                                   std::uint64_t seed, int jobs,
                                   bool float_mode) {
  Timer timer;
  check_numeric_mode(n, float_mode);
  require(t_max >= 1, errc::parameter_mismatch, "t must be at least 1");
  ExperimentReport r;
  r.id = "ball-bound";
  r.k = k;
  r.n = n;
  r.t = t_max;
  r.trials = trials;
  r.seed = seed;
  const auto facets = enumerate_maximal_sorted(k, n);
  const auto plan = draw_plan(trials, seed, facets.size());
  std::vector<TrialOut> outs(trials);
  parallel_for(trials, jobs, [&](int t) {
    const SortedCollection& J = facets[plan[t].collection_index];
    std::vector<EpsilonVector> member_eps;
    for (const KSubset& member : J.members())
      member_eps.push_back(member.epsilon());
    const ArrangementPartition arr =
        sampled_arrangement(J, plan[t].matrix_seed, float_mode);
    const int top = static_cast<int>(arr.blocks.size()) - 1;
    for (int ti = 1; ti <= t_max && top - ti + 1 >= 0; ++ti) {
      const std::vector<KSubset>& block = arr.blocks[top - ti + 1];
      const int radius = 1 << (ti - 1);
      std::vector<EpsilonVector> block_eps;
      for (const KSubset& y : block) block_eps.push_back(y.epsilon());
      for (std::size_t yi = 0; yi < block.size(); ++yi) {
        ++outs[t].cases;
        for (std::size_t mi = 0; mi < member_eps.size(); ++mi)
          if (!in_ball(block_eps[yi], member_eps[mi], radius))
            outs[t].failures.push_back(
                "trial " + std::to_string(t) + ": member " + block[yi].str() +
                " of largest block " + std::to_string(ti) +
                " lies outside the radius-" + std::to_string(radius) +
                " ball around " + J.members()[mi].str());
      }
      // Same-block members must share a ball around some member of J.
      for (std::size_t x = 0; x < block.size(); ++x)
        for (std::size_t y = x + 1; y < block.size(); ++y) {
          ++outs[t].cases;
          bool shared = false;
          for (const EpsilonVector& je : member_eps)
            if (in_ball(block_eps[x], je, radius) &&
                in_ball(block_eps[y], je, radius)) {
              shared = true;
              break;
            }
          if (!shared)
            outs[t].failures.push_back(
                "trial " + std::to_string(t) + ": " + block[x].str() +
                " and " + block[y].str() + " in largest block " +
                std::to_string(ti) + " share no radius-" +
                std::to_string(radius) + " ball around a member");
        }
    }
  });
  merge(r, outs);
  r.runtime_seconds = timer.seconds();
  return r;
}

ExperimentReport run_experiment(const std::string& id, int k, int n, int t,
                                int trials, std::uint64_t seed, int jobs,
                                bool float_mode) {
  if (id == "triangulation-counts") return verify_triangulation_counts(k, n);
  if (id == "unsorted-triple") return verify_unsorted_triple_lemma(k, n);
  if (id == "second-largest-necessity")
    return verify_second_largest_necessity(k, n, trials, seed, jobs,
                                           float_mode);
  if (id == "second-largest-sufficiency")
    return verify_second_largest_sufficiency(k, n, seed, jobs);
  if (id == "cubical-conjecture")
    return verify_cubical_conjecture(k, n, t, trials, seed, jobs, float_mode);
  if (id == "ball-bound")
    return verify_ball_bound(k, n, t, trials, seed, jobs, float_mode);
  raise(errc::parameter_mismatch,
        "unknown experiment '" + id +
            "' (expected triangulation-counts, unsorted-triple, "
            "second-largest-necessity, second-largest-sufficiency, "
            "cubical-conjecture, or ball-bound)");
}

}  // namespace hypergrass
