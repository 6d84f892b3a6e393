#pragma once

#include <string>

#include "json.hpp"

#include "hypergrass/dual_graph.hpp"
#include "hypergrass/ksubset.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/poset.hpp"
#include "hypergrass/sorting.hpp"
#include "hypergrass/torus.hpp"
#include "hypergrass/verification.hpp"
#include "hypergrass/witness.hpp"
#include "hypergrass/young_grid.hpp"

namespace hypergrass {

using json = nlohmann::json;

json subset_json(const KSubset& s);            ///< [1,3,5]
json collection_json(const SortedCollection& c);

/// Matrix wire format: {"k":K, "n":N, "entries":[["p/q",...],...]}, entries
/// row-major, all rationals as "p/q" strings.
json matrix_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const json& j);
RationalMatrix load_matrix(const std::string& path);

/// Exact minor evaluation: subsets with values, plus total positivity.
json plucker_json(const PluckerVector& p);
json arrangement_json(const ArrangementPartition& a);

/// Torus normalization result: scaling data and normalized minor powers.
json normalize_json(const TorusScaling& scaling, const PluckerVector& p);
json witness_json(const WitnessResult& w);

json grid_json(const OrientedYoungGrid& g);

json poset_json(const MinorPoset& p);
std::string poset_dot(const MinorPoset& p);

json dual_graph_json(const DualGraph& g);
std::string dual_graph_dot(const DualGraph& g);

/// Reports serialize without runtime by default so byte-identical reruns
/// stay byte-identical; `with_timings` opts the wall time in.
json report_json(const ExperimentReport& r, bool with_timings = false);
std::string report_csv(const ExperimentReport& r, bool with_timings = false);

}  // namespace hypergrass
