#pragma once

#include "ripscrush/crush.hpp"

namespace ripscrush {

/**
 * Witness source for d1 runs on (1/m)Z^n at scales up to 2n-1: for each
 * maximal clique tau through the anchor x it builds the near-centre of
 * (tau - x) with kappa = n/(n+1) and snaps it onto the sublattice. The
 * snapped points form the proposal. Returns nullopt when the metric or scale
 * is out of range or a snapped point is not an alive neighbour of x (for
 * example on the last row), so the engine falls back to search.
 */
WitnessProposer make_snap_proposer();

}  // namespace ripscrush
