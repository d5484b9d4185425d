#pragma once

#include <utility>
#include <vector>

#include "tap/instance.hpp"

namespace tap {

/// Plain undirected graph used by the connectivity predicates.
struct EdgeSubgraph {
    int n = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;
};

bool is_connected(const EdgeSubgraph& g);

/// 2-node-connectivity by the definition: n >= 3, connected, and g - v
/// connected for every node v. This is the authoritative check.
bool is_2nc(const EdgeSubgraph& g);

/// Articulation-point based 2NC test. Must agree with is_2nc everywhere;
/// used by the enumeration kernels where the per-call cost matters.
bool is_2nc_fast(const EdgeSubgraph& g);

/// 2-edge-connectivity: n >= 2, connected, and no bridge.
bool is_2ec(const EdgeSubgraph& g);

/// The tree plus the given links, as a subgraph of the instance graph.
EdgeSubgraph augmented_graph(const TapInstance& inst, const std::vector<int>& link_ids);

/// True iff T plus the picked links is 2-node-connected.
bool is_feasible_augmentation(const TapInstance& inst, const std::vector<int>& link_ids);

}  // namespace tap
