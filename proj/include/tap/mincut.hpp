#pragma once

#include <vector>

#include "tap/instance.hpp"

namespace tap {

struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    Rat weight;
};

struct MinCutResult {
    Rat value;
    std::vector<NodeId> side;  // one shore of the minimum cut, sorted
};

/// Global minimum cut of an undirected graph with nonnegative rational
/// weights (Stoer-Wagner, deterministic tie-breaking). n >= 2 required.
/// Handles disconnected weight support (returns a zero-value cut).
MinCutResult stoer_wagner_min_cut(int n, const std::vector<WeightedEdge>& edges);

}  // namespace tap
