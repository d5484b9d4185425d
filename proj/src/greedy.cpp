#include "tap/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "tap/errors.hpp"

namespace tap {

NodePartition::NodePartition(const TapInstance& inst, NodeId excluded)
    : excluded_(excluded), n_(inst.n), parent_(inst.n), size_(inst.n, 1) {
    for (int v = 0; v < n_; ++v) parent_[v] = v;
    blocks_ = n_ - 1;
    for (auto [a, b] : inst.tree_edges) {
        if (a == excluded_ || b == excluded_) continue;
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            if (size_[ra] < size_[rb]) std::swap(ra, rb);
            parent_[rb] = ra;
            size_[ra] += size_[rb];
            --blocks_;
        }
    }
}

int NodePartition::find(NodeId a) const {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

bool NodePartition::crosses(const Link& l) const {
    if (l.u == excluded_ || l.v == excluded_) return false;
    return find(l.u) != find(l.v);
}

void NodePartition::merge(const Link& l) {
    if (!crosses(l)) return;
    int ra = find(l.u), rb = find(l.v);
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    --blocks_;
}

std::vector<NodeId> NodePartition::representatives() const {
    std::vector<NodeId> min_of(n_, -1);
    for (NodeId v = 0; v < n_; ++v) {
        if (v == excluded_) continue;
        int r = find(v);
        if (min_of[r] < 0) min_of[r] = v;  // ascending scan: first hit is the minimum
    }
    std::vector<NodeId> reps;
    for (NodeId v = 0; v < n_; ++v)
        if (min_of[v] >= 0) reps.push_back(min_of[v]);
    std::sort(reps.begin(), reps.end());
    return reps;
}

Partition NodePartition::blocks() const {
    std::map<int, std::vector<NodeId>> by_root;
    for (NodeId v = 0; v < n_; ++v)
        if (v != excluded_) by_root[find(v)].push_back(v);
    Partition p;
    for (auto& [root, members] : by_root) p.blocks.push_back(std::move(members));
    p.canonicalize();
    return p;
}

PartitionState::PartitionState(const TapInstance& inst)
    : nonleaf_(nonleaf_nodes(inst)), index_(inst.n, -1) {
    parts_.reserve(nonleaf_.size());
    for (NodeId u : nonleaf_) {
        index_[u] = (int)parts_.size();
        parts_.emplace_back(inst, u);
    }
}

bool PartitionState::all_trivial() const {
    for (const NodePartition& p : parts_)
        if (!p.trivial()) return false;
    return true;
}

int coverage(const TapInstance& inst, const Link& link, const PartitionState& state) {
    (void)inst;
    int count = 0;
    for (NodeId u : state.nonleaf())
        if (state.at(u).crosses(link)) ++count;
    return count;
}

const Link& tie_break(const std::vector<const Link*>& candidates) {
    assert(!candidates.empty());
    const Link* best = candidates.front();
    for (const Link* l : candidates) {
        if (l->cost < best->cost || (l->cost == best->cost && l->id < best->id)) best = l;
    }
    return *best;
}

GreedyResult greedy_solve(const TapInstance& inst) {
    require_valid(inst);
    PartitionState state(inst);
    GreedyResult result;
    result.cost = 0;
    std::vector<int> weights_assigned(inst.n, 0);  // per node: snapshots so far
    Rat last_ratio(-1);

    while (!state.all_trivial()) {
        // find the minimum cost/coverage link; ties by (cost, id)
        int best_id = -1;
        int best_cov = 0;
        Rat best_ratio;
        for (const Link& l : inst.links) {
            int cov = coverage(inst, l, state);
            if (cov == 0) continue;
            Rat ratio = l.cost / cov;
            if (best_id < 0 || ratio < best_ratio ||
                (ratio == best_ratio && (l.cost < inst.links[best_id].cost ||
                                         (l.cost == inst.links[best_id].cost && l.id < best_id)))) {
                best_id = l.id;
                best_cov = cov;
                best_ratio = ratio;
            }
        }
        if (best_id < 0)
            throw InfeasibleError("no link crosses a remaining nontrivial partition");

        const Link& pick = inst.links[best_id];
        assert(last_ratio <= best_ratio);  // ratios never decrease over the run
        last_ratio = best_ratio;

        IterationRecord rec;
        rec.link_id = best_id;
        rec.ratio = best_ratio;
        for (NodeId u : state.nonleaf()) {
            NodePartition& part = state.at(u);
            if (!part.crosses(pick)) continue;
            CoveredSnapshot snap;
            snap.node = u;
            snap.snapshot_index = ++weights_assigned[u];
            snap.block_count = part.block_count();
            snap.reps = part.representatives();
            rec.covered.push_back(std::move(snap));
            part.merge(pick);
        }
        assert((int)rec.covered.size() == best_cov);
        (void)best_cov;

        result.picked.push_back(best_id);
        result.cost += pick.cost;
        result.trace.iterations.push_back(std::move(rec));
    }
    return result;
}

}  // namespace tap
