#pragma once

#include <vector>

#include "tap/instance.hpp"

namespace tap {

/// Disjoint-set forest over V - {excluded}, seeded with the connected
/// components of T - excluded. Used both by the solver and by certificate
/// replay, so the two share one notion of "current partition".
class NodePartition {
public:
    NodePartition(const TapInstance& inst, NodeId excluded);

    NodeId excluded() const { return excluded_; }
    int block_count() const { return blocks_; }
    bool trivial() const { return blocks_ == 1; }

    /// True iff the link endpoints lie in different blocks. A link incident
    /// to the excluded node never crosses (that endpoint is not in V - u).
    bool crosses(const Link& l) const;

    /// Merge the blocks containing the link endpoints; no-op unless crossing.
    void merge(const Link& l);

    /// Sorted minimum representative of each block.
    std::vector<NodeId> representatives() const;

    /// Full block structure, canonical.
    Partition blocks() const;

private:
    int find(NodeId a) const;

    NodeId excluded_;
    int n_;
    mutable std::vector<int> parent_;
    std::vector<int> size_;
    int blocks_;
};

/// One current partition per non-leaf node of T.
class PartitionState {
public:
    explicit PartitionState(const TapInstance& inst);

    const std::vector<NodeId>& nonleaf() const { return nonleaf_; }
    const NodePartition& at(NodeId u) const { return parts_[index_.at(u)]; }
    NodePartition& at(NodeId u) { return parts_[index_.at(u)]; }

    bool all_trivial() const;

private:
    std::vector<NodeId> nonleaf_;
    std::vector<int> index_;  // node id -> position in parts_, -1 for leaves
    std::vector<NodePartition> parts_;
};

/// Number of non-leaf nodes whose current partition the link crosses.
int coverage(const Link& link, const PartitionState& state);

/// Weighted partition snapshot taken when a link is picked: the state of
/// node u's partition at the start of that iteration.
struct CoveredSnapshot {
    NodeId node = 0;
    int snapshot_index = 0;        // 1-based per node, in assignment order
    int block_count = 0;           // |P| before the merge
    std::vector<NodeId> reps;      // sorted block representatives
};

struct IterationRecord {
    int link_id = 0;
    Rat ratio;  // cost(link) / coverage; this is the weight assigned
    std::vector<CoveredSnapshot> covered;
};

struct GreedyTrace {
    std::vector<IterationRecord> iterations;
};

struct GreedyResult {
    std::vector<int> picked;  // link ids in pick order
    Rat cost;
    GreedyTrace trace;
};

/// Among links of equal minimal ratio, pick the lowest (cost, link_id).
/// Candidates must be nonempty.
const Link& tie_break(const std::vector<const Link*>& candidates);

/// The greedy augmentation: repeatedly pick a positive-coverage link of
/// minimum cost/coverage ratio, assign that ratio as the weight of every
/// covered partition, and merge. Throws InfeasibleError when some partition
/// is nontrivial but no link crosses it.
GreedyResult greedy_solve(const TapInstance& inst);

/// Replay helper: walks the pick sequence and hands the visitor the state
/// at the start of each iteration (1-based), before that pick is merged in.
/// Visitor signature: void(int iter, const Link& picked, const PartitionState&).
template <typename Visitor>
void replay_picks(const TapInstance& inst, const std::vector<int>& picked, Visitor&& visit) {
    PartitionState state(inst);
    for (size_t i = 0; i < picked.size(); ++i) {
        const Link& l = inst.links.at(picked[i]);
        visit((int)i + 1, l, std::as_const(state));
        for (NodeId u : state.nonleaf())
            if (u != l.u && u != l.v) state.at(u).merge(l);
    }
}

}  // namespace tap
