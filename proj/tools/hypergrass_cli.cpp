#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypergrass/circuits.hpp"
#include "hypergrass/config.hpp"
#include "hypergrass/dual_graph.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/json_io.hpp"
#include "hypergrass/ksubset.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/poset.hpp"
#include "hypergrass/sorting.hpp"
#include "hypergrass/torus.hpp"
#include "hypergrass/verification.hpp"
#include "hypergrass/witness.hpp"
#include "hypergrass/young_grid.hpp"

namespace hg = hypergrass;

namespace {

std::string dump(const hg::json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  hg::require(f.good(), hg::errc::parameter_mismatch,
              "cannot open output file '" + out_path + "'");
  f << text;
}

/// Shell form of a collection: members joined by ';', elements by ','.
std::string collection_cli(const hg::SortedCollection& c) {
  std::string out;
  for (std::size_t m = 0; m < c.members().size(); ++m) {
    if (m) out += ';';
    const auto elements = c.members()[m].elements();
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (e) out += ',';
      out += std::to_string(elements[e]);
    }
  }
  return out;
}

int run_enumerate(int k, int n, long long limit, const std::string& format,
                  const std::string& out) {
  auto list = hg::enumerate_maximal_sorted(k, n);
  if (limit > 0 && static_cast<long long>(list.size()) > limit)
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(limit), list.end());
  if (format == "csv") {
    std::string text;
    for (const auto& c : list) text += collection_cli(c) + "\n";
    emit(text, out);
  } else {
    hg::json arr = hg::json::array();
    for (const auto& c : list) arr.push_back(hg::collection_json(c));
    emit(dump(arr), out);
  }
  return 0;
}

int run_dual_graph(int k, int n, const std::string& format,
                   const std::string& out) {
  const hg::DualGraph g = hg::build_dual_graph(k, n);
  emit(format == "json" ? dump(hg::dual_graph_json(g))
                        : hg::dual_graph_dot(g),
       out);
  return 0;
}

int run_cubedist(int k, int n, const std::string& from, const std::string& to,
                 const std::string& out) {
  const hg::SortedCollection f = hg::parse_collection(from, n);
  hg::require(f.k() == k, hg::errc::parameter_mismatch,
              "--from members do not have size k");
  const hg::DualGraph g = hg::build_dual_graph(k, n);
  const int fi = g.index_of(f);
  hg::require(fi >= 0, hg::errc::not_maximal,
              "--from is not a triangulation facet");
  hg::json result{{"k", k}, {"n", n}, {"from", hg::collection_json(f)}};
  int distance = 0;
  if (to.find(';') != std::string::npos) {
    const hg::SortedCollection target = hg::parse_collection(to, n);
    hg::require(target.k() == k, hg::errc::parameter_mismatch,
                "--to members do not have size k");
    const int ti = g.index_of(target);
    hg::require(ti >= 0, hg::errc::not_maximal,
                "--to is not a triangulation facet");
    distance = hg::cubical_distance(g, fi, ti);
    result["to"] = hg::collection_json(target);
  } else {
    const hg::KSubset w = hg::parse_subset(to, n);
    hg::require(w.k() == k, hg::errc::parameter_mismatch,
                "--to subset does not have size k");
    distance = hg::cubical_distance_to_subset(g, fi, w);
    result["to"] = hg::subset_json(w);
  }
  result["distance"] = distance;
  emit(dump(result), out);
  return 0;
}

int run_eval(const std::string& matrix_path, const std::string& out) {
  const hg::RationalMatrix a = hg::load_matrix(matrix_path);
  const hg::PluckerVector p = hg::plucker_all(a);
  hg::json j = hg::plucker_json(p);
  const bool tp = hg::is_totally_positive_point(a);
  j["totally_positive"] = tp;
  if (tp) j["arrangement"] = hg::arrangement_json(hg::extract_arrangement(p));
  emit(dump(j), out);
  return 0;
}

int run_normalize(const std::string& matrix_path, const std::string& coll,
                  bool float_mode, const std::string& out) {
  const hg::RationalMatrix a = hg::load_matrix(matrix_path);
  const hg::SortedCollection j = hg::parse_collection(coll, a.n());
  const auto normalized = hg::torus_normalize(a, j, float_mode);
  hg::json result = hg::normalize_json(normalized.first, normalized.second);
  result["collection"] = hg::collection_json(j);
  result["arrangement"] =
      hg::arrangement_json(hg::extract_arrangement(normalized.second));
  emit(dump(result), out);
  return 0;
}

int run_witness(int k, int n, const std::string& jtext,
                const std::string& wtext, std::uint64_t seed,
                const std::string& out) {
  const hg::SortedCollection j = hg::parse_collection(jtext, n);
  hg::require(j.k() == k, hg::errc::parameter_mismatch,
              "--J members do not have size k");
  const hg::KSubset w = hg::parse_subset(wtext, n);
  hg::require(w.k() == k, hg::errc::parameter_mismatch,
              "--W does not have size k");
  const hg::WitnessResult res = hg::second_largest_witness(j, w, seed);
  emit(dump(hg::witness_json(res)), out);
  return 0;
}

int run_poset(int k, int n, const std::string& jtext, int empirical,
              std::uint64_t seed, const std::string& format,
              const std::string& out) {
  const hg::SortedCollection j = hg::parse_collection(jtext, n);
  hg::require(j.k() == k, hg::errc::parameter_mismatch,
              "--J members do not have size k");
  const hg::MinorPoset p =
      empirical > 0 ? hg::empirical_poset(j, empirical, seed)
                    : hg::infer_poset(j);
  emit(format == "dot" ? hg::poset_dot(p) : dump(hg::poset_json(p)), out);
  return 0;
}

int run_grid(int n, const std::string& jtext, const std::string& wtext,
             const std::string& out) {
  const hg::SortedCollection j = hg::parse_collection(jtext, n);
  const hg::KSubset w = hg::parse_subset(wtext, n);
  const hg::OrientedYoungGrid g = hg::build_young_grid(j, w);
  emit(dump(hg::grid_json(g)), out);
  return 0;
}

std::string csv_sibling(const std::string& json_path) {
  const std::string suffix = ".json";
  if (json_path.size() > suffix.size() &&
      json_path.compare(json_path.size() - suffix.size(), suffix.size(),
                        suffix) == 0)
    return json_path.substr(0, json_path.size() - suffix.size()) + ".csv";
  return json_path + ".csv";
}

int run_verify(const std::string& experiment, int k, int n, int t, int trials,
               std::uint64_t seed, int jobs, bool float_mode, bool timings,
               const std::string& out) {
  const hg::ExperimentReport r =
      hg::run_experiment(experiment, k, n, t, trials, seed, jobs, float_mode);
  const std::string jtext = dump(hg::report_json(r, timings));
  const std::string ctext = hg::report_csv(r, timings);
  if (out.empty()) {
    std::cout << jtext << ctext;
  } else {
    emit(jtext, out);
    emit(ctext, csv_sibling(out));
  }
  return r.pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "combinatorics of sorted collections, hypersimplex circuit "
      "triangulations, and minor arrangements on the positive Grassmannian"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);
  int rc = 0;

  struct {
    int k = 0, n = 0;
    long long limit = 0;
    std::string format = "json", out;
  } en;
  auto* s_en =
      app.add_subcommand("enumerate", "list all maximal sorted collections");
  s_en->add_option("--k", en.k, "subset size")->required();
  s_en->add_option("--n", en.n, "ground set size")->required();
  s_en->add_option("--limit", en.limit, "truncate after this many records");
  s_en->add_option("--format", en.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  s_en->add_option("--out", en.out, "write to file instead of stdout");
  s_en->callback(
      [&] { rc = run_enumerate(en.k, en.n, en.limit, en.format, en.out); });

  struct {
    int k = 0, n = 0;
    std::string format = "dot", out;
  } dg;
  auto* s_dg = app.add_subcommand(
      "dual-graph", "dual graph of the circuit triangulation");
  s_dg->add_option("--k", dg.k, "subset size")->required();
  s_dg->add_option("--n", dg.n, "ground set size")->required();
  s_dg->add_option("--format", dg.format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));
  s_dg->add_option("--out", dg.out, "write to file instead of stdout");
  s_dg->callback([&] { rc = run_dual_graph(dg.k, dg.n, dg.format, dg.out); });

  struct {
    int k = 0, n = 0;
    std::string from, to, out;
  } cd;
  auto* s_cd = app.add_subcommand(
      "cubedist", "cube-metric distance between triangulation facets");
  s_cd->add_option("--k", cd.k, "subset size")->required();
  s_cd->add_option("--n", cd.n, "ground set size")->required();
  s_cd->add_option("--from", cd.from, "source collection, e.g. \"1,2;1,3\"")
      ->required();
  s_cd->add_option("--to", cd.to,
                   "target collection, or a single subset \"a,b,...\" for "
                   "the nearest facet containing it")
      ->required();
  s_cd->add_option("--out", cd.out, "write to file instead of stdout");
  s_cd->callback(
      [&] { rc = run_cubedist(cd.k, cd.n, cd.from, cd.to, cd.out); });

  struct {
    std::string matrix, out;
  } ev;
  auto* s_ev =
      app.add_subcommand("eval", "exact Pluecker minors of a rational matrix");
  s_ev->add_option("--matrix", ev.matrix,
                   "matrix JSON file (\"-\" for stdin)")
      ->required();
  s_ev->add_option("--out", ev.out, "write to file instead of stdout");
  s_ev->callback([&] { rc = run_eval(ev.matrix, ev.out); });

  struct {
    std::string matrix, collection, out;
    bool use_float = false;
  } no;
  auto* s_no = app.add_subcommand(
      "normalize", "torus-normalize a totally positive point so the "
                   "collection's minors equal 1");
  s_no->add_option("--matrix", no.matrix,
                   "matrix JSON file (\"-\" for stdin)")
      ->required();
  s_no->add_option("--collection", no.collection,
                   "maximal sorted collection, e.g. \"1,2;1,3;1,4;2,4\"")
      ->required();
  s_no->add_flag("--float", no.use_float,
                 "use ball arithmetic instead of exact powering");
  s_no->add_option("--out", no.out, "write to file instead of stdout");
  s_no->callback(
      [&] { rc = run_normalize(no.matrix, no.collection, no.use_float, no.out); });

  struct {
    int k = 0, n = 0;
    std::string j, w, out;
    std::uint64_t seed = 0;
  } wi;
  auto* s_wi = app.add_subcommand(
      "witness", "exact point making W the strict second-largest minor");
  s_wi->add_option("--k", wi.k, "subset size")->required();
  s_wi->add_option("--n", wi.n, "ground set size")->required();
  s_wi->add_option("--J", wi.j, "maximal sorted collection")->required();
  s_wi->add_option("--W", wi.w, "query subset")->required();
  s_wi->add_option("--seed", wi.seed, "sampling seed")
      ->capture_default_str();
  s_wi->callback([&] {
    const std::uint64_t seed =
        s_wi->count("--seed") ? wi.seed : hg::config().default_seed;
    rc = run_witness(wi.k, wi.n, wi.j, wi.w, seed, wi.out);
  });
  s_wi->add_option("--out", wi.out, "write to file instead of stdout");

  struct {
    int k = 0, n = 0, empirical = 0;
    std::uint64_t seed = 0;
    std::string j, format = "json", out;
  } po;
  auto* s_po = app.add_subcommand(
      "poset", "provable (or empirical) order on normalized minor values");
  s_po->add_option("--k", po.k, "subset size")->required();
  s_po->add_option("--n", po.n, "ground set size")->required();
  s_po->add_option("--J", po.j, "maximal sorted collection")->required();
  s_po->add_option("--empirical", po.empirical,
                   "observe this many sampled trials instead of inferring");
  s_po->add_option("--seed", po.seed, "sampling seed for --empirical");
  s_po->add_option("--format", po.format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  s_po->add_option("--out", po.out, "write to file instead of stdout");
  s_po->callback([&] {
    const std::uint64_t seed =
        s_po->count("--seed") ? po.seed : hg::config().default_seed;
    rc = run_poset(po.k, po.n, po.j, po.empirical, seed, po.format, po.out);
  });

  struct {
    int n = 0;
    std::string j, w, out;
  } gr;
  auto* s_gr = app.add_subcommand(
      "grid", "oriented Young grid between a facet and a query subset");
  s_gr->add_option("--n", gr.n, "ground set size")->required();
  s_gr->add_option("--J", gr.j, "maximal sorted collection")->required();
  s_gr->add_option("--W", gr.w, "query subset")->required();
  s_gr->add_option("--out", gr.out, "write to file instead of stdout");
  s_gr->callback([&] { rc = run_grid(gr.n, gr.j, gr.w, gr.out); });

  struct {
    std::string experiment, out;
    int k = 0, n = 0, t = 3, trials = 0, jobs = 0;
    std::uint64_t seed = 0;
    bool use_float = false, timings = false;
  } ve;
  auto* s_ve = app.add_subcommand("verify", "run an experiment suite");
  s_ve->add_option("experiment", ve.experiment,
                   "one of: triangulation-counts, unsorted-triple, "
                   "second-largest-necessity, second-largest-sufficiency, "
                   "cubical-conjecture, ball-bound")
      ->required();
  s_ve->add_option("--k", ve.k, "subset size")->required();
  s_ve->add_option("--n", ve.n, "ground set size")->required();
  s_ve->add_option("--t", ve.t, "largest t to examine");
  s_ve->add_option("--trials", ve.trials, "number of sampled trials");
  s_ve->add_option("--seed", ve.seed, "sampling seed");
  s_ve->add_option("--jobs", ve.jobs, "worker threads (0 = auto)");
  s_ve->add_flag("--float", ve.use_float,
                 "allow ball arithmetic for large ground sets");
  s_ve->add_flag("--timings", ve.timings,
                 "include wall time in the report (breaks byte-stability)");
  s_ve->add_option("--out", ve.out,
                   "report JSON path; CSV summary written alongside");
  s_ve->callback([&] {
    const std::uint64_t seed =
        s_ve->count("--seed") ? ve.seed : hg::config().default_seed;
    const int trials =
        s_ve->count("--trials") ? ve.trials : hg::config().default_trials;
    rc = run_verify(ve.experiment, ve.k, ve.n, ve.t, trials, seed, ve.jobs,
                    ve.use_float, ve.timings, ve.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const hg::error& e) {
    std::cerr << e.what() << std::endl;
    return e.code() == hg::errc::verification_failure ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return rc;
}
