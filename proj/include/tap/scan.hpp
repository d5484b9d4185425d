#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tap/mincut.hpp"

namespace tap {

/// Result of an exhaustive cut scan: the minimum-value cut over all
/// 2^(n-1) - 1 node sides that exclude node 0, in Gray-code order.
/// Ties resolve to the earliest position in the enumeration, so the
/// serial and parallel kernels return identical results.
struct CutScanResult {
    Rat min_value;
    uint64_t position = 0;       // index in the Gray sequence
    std::vector<NodeId> side;    // the shore excluding node 0, sorted
    bool violated(const Rat& rhs) const { return min_value < rhs; }
};

/// Serial reference implementation. Weights are scaled to a common
/// denominator; an int64 fast path covers ordinary instances and an exact
/// bignum walk takes over when the scaled values are too large.
/// Throws TooLargeError when n exceeds `node_cap`.
CutScanResult scan_cuts_serial(int n, const std::vector<WeightedEdge>& edges, int node_cap);

/// OpenMP kernel; chunked Gray walk, identical result to the serial scan.
CutScanResult scan_cuts_parallel(int n, const std::vector<WeightedEdge>& edges, int node_cap);

/// Minimum-cost feasible subset over all 2^m item subsets; (cost, mask)
/// lexicographic minimum, so ties are deterministic.
struct SubsetScanResult {
    bool found = false;
    Rat cost;
    uint64_t mask = 0;
};

using SubsetPredicate = std::function<bool(uint64_t mask)>;

/// Serial reference scan over every subset of `nitems` items (nitems <= 26
/// unless the caller raises the cap deliberately).
SubsetScanResult min_subset_serial(int nitems, const std::vector<Rat>& item_costs,
                                   const SubsetPredicate& feasible, int item_cap);

/// OpenMP kernel over the same enumeration; identical result.
SubsetScanResult min_subset_parallel(int nitems, const std::vector<Rat>& item_costs,
                                     const SubsetPredicate& feasible, int item_cap);

}  // namespace tap
