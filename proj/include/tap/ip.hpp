#pragma once

#include <vector>

#include "tap/instance.hpp"
#include "tap/scan.hpp"

namespace tap {

enum class ConnMode { TwoNode, TwoEdge };

struct IpResult {
    std::vector<int> chosen;  // link ids (TAP) or edge indices (NCSS)
    Rat cost;
};

/// Exact integer optimum for augmenting T: the minimum-cost link subset
/// whose union with T is 2NC (or 2EC). Depth-first subset search with cost
/// pruning and feasibility-based subtree pruning; deterministic
/// (cost, lexicographic-set) optimum. Throws TooLargeError past `item_cap`,
/// InfeasibleError when even the full link set does not work.
IpResult solve_ip_tap(const TapInstance& inst, ConnMode mode = ConnMode::TwoNode,
                      int item_cap = 26);

/// Exact minimum-cost 2NC spanning subgraph. Zero-cost edges are all taken
/// (they can only help); the search runs over the costed edges. `chosen`
/// lists every edge of the optimal subgraph.
IpResult solve_ip_ncss(const NcssInstance& inst, int item_cap = 26);

/// Independent exhaustive oracles over every link subset; the serial form
/// is the reference, the parallel form is the OpenMP kernel. These use the
/// articulation-point connectivity test, so agreement with solve_ip_tap
/// cross-checks both the search and the predicate.
SubsetScanResult ip_exhaustive_tap(const TapInstance& inst, ConnMode mode, bool parallel,
                                   int item_cap = 26);
SubsetScanResult ip_exhaustive_ncss(const NcssInstance& inst, bool parallel, int item_cap = 26);

}  // namespace tap
