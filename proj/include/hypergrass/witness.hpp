#pragma once

#include <cstdint>

#include "hypergrass/dual_graph.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/torus.hpp"

namespace hypergrass {

/// Certificate that W can be the second-largest minor when the largest
/// block is the maximal sorted collection J.
struct WitnessResult {
  RationalMatrix point;        ///< totally positive matrix realizing it
  DetourMove move;             ///< the detour whose replacement is W
  Rat eps;                     ///< perturbation size that succeeded
  int rotation = 0;            ///< cyclic relabeling used internally
  TorusScaling scaling;        ///< normalization of `point` w.r.t. J
  PluckerVector normalized;    ///< exact powered minors of the normalized point
};

/// Construct a totally positive point whose normalized minors are exactly 1
/// on J, strictly smaller elsewhere, and strictly larger at W than at every
/// other non-member.  W must be the replacement of some detour of J.
///
/// Raises: DegenerateQuery (W in J), NotAdjacent (W in no facet-neighbor),
/// WitnessSearchExhausted (epsilon schedule hit the configured floor).
WitnessResult second_largest_witness(const SortedCollection& J,
                                     const KSubset& W, std::uint64_t seed);

}  // namespace hypergrass
