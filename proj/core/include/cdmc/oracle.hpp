#pragma once

#include "cdmc/graph.hpp"
#include "cdmc/primal.hpp"

namespace cdmc {

inline constexpr int kDefaultOracleLimit = 26;

/// Exact max-cut by exhaustive enumeration with the last vertex fixed at
/// +1. Assignments are visited in Gray-code order with O(n) incremental
/// cut updates. Throws SizeError when num_vertices exceeds limit.
CutSolution brute_force_maxcut(const WeightedGraph& graph,
                               int limit = kDefaultOracleLimit);

} // namespace cdmc
