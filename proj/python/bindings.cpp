#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hypergrass/bigfloat.hpp"
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

namespace py = pybind11;
using namespace hypergrass;

namespace {

py::object json_to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<KSubset> parse_members(const std::string& text, int n) {
  std::vector<KSubset> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = text.find(';', start);
    const std::string part =
        text.substr(start, stop == std::string::npos ? stop : stop - start);
    if (!part.empty()) out.push_back(parse_subset(part, n));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

RationalMatrix matrix_from_rows(
    int k, int n, const std::vector<std::vector<std::string>>& rows) {
  require(static_cast<int>(rows.size()) == k, errc::parameter_mismatch,
          "expected k rows of entries");
  std::vector<Rat> flat;
  flat.reserve(static_cast<std::size_t>(k) * n);
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, errc::parameter_mismatch,
            "expected n entries per row");
    for (const std::string& cell : row) flat.push_back(parse_rational(cell));
  }
  return RationalMatrix(k, n, flat);
}

}  // namespace

PYBIND11_MODULE(_hypergrass, m) {
  m.doc() =
      "Sorted collections, hypersimplex circuit triangulations, and exact "
      "certification of minor arrangements on the positive Grassmannian. "
      "Collections are strings like \"1,2;1,3;1,4;2,4\", subsets strings "
      "like \"1,3,5\", and all rationals travel as \"p/q\" strings.";

  py::register_exception<error>(m, "HypergrassError");

  m.def(
      "enumerate_maximal_sorted",
      [](int k, int n) {
        json arr = json::array();
        for (const auto& c : enumerate_maximal_sorted(k, n))
          arr.push_back(collection_json(c));
        return json_to_py(arr);
      },
      py::arg("k"), py::arg("n"),
      "All maximal sorted k-subset collections of [n], canonically ordered.");

  m.def(
      "eulerian_number",
      [](int m_, int d) { return eulerian_number(m_, d).get_str(); },
      py::arg("m"), py::arg("d"),
      "Eulerian number A(m,d) as a decimal string.");

  m.def(
      "is_sorted_pair",
      [](const std::string& a, const std::string& b, int n) {
        return is_sorted_pair(parse_subset(a, n), parse_subset(b, n));
      },
      py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "sort_images",
      [](const std::string& a, const std::string& b, int n) {
        const SortPair s = sort_merge(parse_subset(a, n), parse_subset(b, n));
        return py::make_tuple(s.first.elements(), s.second.elements());
      },
      py::arg("a"), py::arg("b"), py::arg("n"),
      "The two alternating halves of the merged multiset.");

  m.def(
      "is_sorted_collection",
      [](const std::string& members, int n) {
        return is_sorted_collection(parse_members(members, n));
      },
      py::arg("members"), py::arg("n"));

  m.def(
      "interval_distance",
      [](const std::string& a, const std::string& b, int n) {
        return max_interval_distance(parse_subset(a, n).epsilon(),
                                     parse_subset(b, n).epsilon());
      },
      py::arg("a"), py::arg("b"), py::arg("n"),
      "Largest |window-sum difference| over all cyclic windows.");

  m.def(
      "circuit",
      [](const std::string& collection, int n) {
        const MinimalCircuit c =
            permutation_from_collection(parse_collection(collection, n));
        json vertices = json::array();
        for (const KSubset& v : c.vertices) vertices.push_back(subset_json(v));
        return json_to_py(json{{"k", c.k},
                               {"n", c.n},
                               {"omega", c.omega},
                               {"omega_str", c.omega_str()},
                               {"vertices", std::move(vertices)}});
      },
      py::arg("collection"), py::arg("n"),
      "Minimal circuit realizing a maximal sorted collection.");

  m.def(
      "dual_graph",
      [](int k, int n) { return json_to_py(dual_graph_json(build_dual_graph(k, n))); },
      py::arg("k"), py::arg("n"));

  m.def(
      "cubical_distance",
      [](int k, int n, const std::string& from, const std::string& to) {
        const DualGraph g = build_dual_graph(k, n);
        const int fi = g.index_of(parse_collection(from, n));
        require(fi >= 0, errc::not_maximal,
                "source is not a triangulation facet");
        if (to.find(';') != std::string::npos) {
          const int ti = g.index_of(parse_collection(to, n));
          require(ti >= 0, errc::not_maximal,
                  "target is not a triangulation facet");
          return cubical_distance(g, fi, ti);
        }
        return cubical_distance_to_subset(g, fi, parse_subset(to, n));
      },
      py::arg("k"), py::arg("n"), py::arg("from_collection"),
      py::arg("to"),
      "Cube-metric distance; `to` is a collection or a single subset.");

  m.def(
      "eval_matrix",
      [](int k, int n, const std::vector<std::vector<std::string>>& rows) {
        const RationalMatrix a = matrix_from_rows(k, n, rows);
        const PluckerVector p = plucker_all(a);
        json j = plucker_json(p);
        const bool tp = is_totally_positive_point(a);
        j["totally_positive"] = tp;
        if (tp) j["arrangement"] = arrangement_json(extract_arrangement(p));
        return json_to_py(j);
      },
      py::arg("k"), py::arg("n"), py::arg("entries"),
      "All exact Pluecker minors of a rational matrix, with the arrangement "
      "partition when the point is totally positive.");

  m.def(
      "normalize",
      [](int k, int n, const std::vector<std::vector<std::string>>& rows,
         const std::string& collection, bool float_mode) {
        const RationalMatrix a = matrix_from_rows(k, n, rows);
        const SortedCollection j = parse_collection(collection, n);
        const auto normalized = torus_normalize(a, j, float_mode);
        json out = normalize_json(normalized.first, normalized.second);
        out["collection"] = collection_json(j);
        out["arrangement"] =
            arrangement_json(extract_arrangement(normalized.second));
        return json_to_py(out);
      },
      py::arg("k"), py::arg("n"), py::arg("entries"), py::arg("collection"),
      py::arg("float_mode") = false,
      "Torus-normalize so the collection's minors equal 1; exact values are "
      "reported as a common power.");

  m.def(
      "witness",
      [](int k, int n, const std::string& collection, const std::string& w,
         std::uint64_t seed) {
        const SortedCollection j = parse_collection(collection, n);
        require(j.k() == k, errc::parameter_mismatch,
                "collection members do not have size k");
        return json_to_py(
            witness_json(second_largest_witness(j, parse_subset(w, n), seed)));
      },
      py::arg("k"), py::arg("n"), py::arg("collection"), py::arg("w"),
      py::arg("seed"),
      "Exact totally positive point whose normalization makes W the strict "
      "second-largest minor.");

  m.def(
      "infer_poset",
      [](const std::string& collection, int n) {
        return json_to_py(poset_json(infer_poset(parse_collection(collection, n))));
      },
      py::arg("collection"), py::arg("n"));

  m.def(
      "empirical_poset",
      [](const std::string& collection, int n, int trials,
         std::uint64_t seed) {
        return json_to_py(poset_json(
            empirical_poset(parse_collection(collection, n), trials, seed)));
      },
      py::arg("collection"), py::arg("n"), py::arg("trials"), py::arg("seed"));

  m.def(
      "young_grid",
      [](const std::string& collection, const std::string& w, int n) {
        return json_to_py(grid_json(
            build_young_grid(parse_collection(collection, n), parse_subset(w, n))));
      },
      py::arg("collection"), py::arg("w"), py::arg("n"),
      "Oriented Young grid between a facet and a query subset, with the "
      "derived inequalities and origin chain.");

  m.def(
      "run_experiment",
      [](const std::string& id, int k, int n, int t, int trials,
         std::uint64_t seed, int jobs, bool float_mode) {
        return json_to_py(
            report_json(run_experiment(id, k, n, t, trials, seed, jobs, float_mode)));
      },
      py::arg("id"), py::arg("k"), py::arg("n"), py::arg("t") = 3,
      py::arg("trials") = 100, py::arg("seed") = 20260815ULL,
      py::arg("jobs") = 0, py::arg("float_mode") = false);
}
