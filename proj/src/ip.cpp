#include "tap/ip.hpp"

#include <algorithm>

#include "tap/connectivity.hpp"
#include "tap/errors.hpp"

namespace tap {

namespace {

struct SearchItem {
    int id;
    Rat cost;
    std::pair<NodeId, NodeId> ends;
};

using FeasibleFn = std::function<bool(const EdgeSubgraph&)>;

// DFS over items in id order, include-branch first. At each node we stop
// descending once the current set is feasible (supersets cost at least as
// much and have lexicographically larger masks), prune when the running
// cost exceeds the incumbent, and prune subtrees whose full completion is
// infeasible.
struct SubsetSearch {
    const std::vector<SearchItem>& items;
    EdgeSubgraph base;  // grows and shrinks along the DFS
    const FeasibleFn& feasible;

    SubsetSearch(const std::vector<SearchItem>& items_, EdgeSubgraph base_,
                 const FeasibleFn& feasible_)
        : items(items_), base(std::move(base_)), feasible(feasible_) {}

    bool found = false;
    Rat best_cost{};
    uint64_t best_mask = 0;

    void run() { dfs(0, Rat(0), 0); }

    void dfs(size_t i, Rat cost, uint64_t mask) {
        if (found && cost > best_cost) return;
        if (feasible(base)) {
            if (!found || cost < best_cost || (cost == best_cost && mask < best_mask)) {
                found = true;
                best_cost = cost;
                best_mask = mask;
            }
            return;
        }
        if (i == items.size()) return;
        // completion check: nothing below here can be feasible otherwise
        size_t before = base.edges.size();
        for (size_t j = i; j < items.size(); ++j) base.edges.push_back(items[j].ends);
        bool completable = feasible(base);
        base.edges.resize(before);
        if (!completable) return;

        base.edges.push_back(items[i].ends);
        dfs(i + 1, cost + items[i].cost, mask | (uint64_t(1) << i));
        base.edges.pop_back();
        dfs(i + 1, cost, mask);
    }
};

void check_cap(size_t nitems, int item_cap, const char* what) {
    if ((int)nitems > item_cap)
        throw TooLargeError(std::string(what) + " search needs <= " + std::to_string(item_cap) +
                            " binary variables, got " + std::to_string(nitems));
}

}  // namespace

IpResult solve_ip_tap(const TapInstance& inst, ConnMode mode, int item_cap) {
    check_cap(inst.links.size(), item_cap, "TAP integer optimum");
    std::vector<SearchItem> items;
    for (const Link& l : inst.links) items.push_back({l.id, l.cost, {l.u, l.v}});
    FeasibleFn feasible = (mode == ConnMode::TwoNode)
                              ? FeasibleFn([](const EdgeSubgraph& g) { return is_2nc(g); })
                              : FeasibleFn([](const EdgeSubgraph& g) { return is_2ec(g); });
    SubsetSearch search{items, EdgeSubgraph{inst.n, inst.tree_edges}, feasible};
    search.run();
    if (!search.found) throw InfeasibleError("no link subset augments the tree");
    IpResult res;
    res.cost = search.best_cost;
    for (size_t i = 0; i < items.size(); ++i)
        if (search.best_mask >> i & 1) res.chosen.push_back(items[i].id);
    return res;
}

IpResult solve_ip_ncss(const NcssInstance& inst, int item_cap) {
    std::vector<SearchItem> items;
    EdgeSubgraph base{inst.n, {}};
    IpResult res;
    res.cost = 0;
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        const Edge& e = inst.edges[i];
        if (e.cost == 0) {
            base.edges.emplace_back(e.u, e.v);  // free edges can only help
            res.chosen.push_back((int)i);
        } else {
            items.push_back({(int)i, e.cost, {e.u, e.v}});
        }
    }
    check_cap(items.size(), item_cap, "NCSS integer optimum");
    FeasibleFn feasible = [](const EdgeSubgraph& g) { return is_2nc(g); };
    SubsetSearch search{items, std::move(base), feasible};
    search.run();
    if (!search.found) throw InfeasibleError("graph has no 2NC spanning subgraph");
    res.cost = search.best_cost;
    for (size_t i = 0; i < items.size(); ++i)
        if (search.best_mask >> i & 1) res.chosen.push_back(items[i].id);
    std::sort(res.chosen.begin(), res.chosen.end());
    return res;
}

SubsetScanResult ip_exhaustive_tap(const TapInstance& inst, ConnMode mode, bool parallel,
                                   int item_cap) {
    int m = (int)inst.links.size();
    std::vector<Rat> costs;
    for (const Link& l : inst.links) costs.push_back(l.cost);
    SubsetPredicate pred = [&](uint64_t mask) {
        EdgeSubgraph g{inst.n, inst.tree_edges};
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) g.edges.emplace_back(inst.links[i].u, inst.links[i].v);
        return mode == ConnMode::TwoNode ? is_2nc_fast(g) : is_2ec(g);
    };
    return parallel ? min_subset_parallel(m, costs, pred, item_cap)
                    : min_subset_serial(m, costs, pred, item_cap);
}

SubsetScanResult ip_exhaustive_ncss(const NcssInstance& inst, bool parallel, int item_cap) {
    EdgeSubgraph base{inst.n, {}};
    std::vector<Rat> costs;
    std::vector<std::pair<NodeId, NodeId>> optional_edges;
    for (const Edge& e : inst.edges) {
        if (e.cost == 0)
            base.edges.emplace_back(e.u, e.v);
        else {
            costs.push_back(e.cost);
            optional_edges.emplace_back(e.u, e.v);
        }
    }
    int m = (int)costs.size();
    SubsetPredicate pred = [&](uint64_t mask) {
        EdgeSubgraph g = base;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) g.edges.push_back(optional_edges[i]);
        return is_2nc_fast(g);
    };
    return parallel ? min_subset_parallel(m, costs, pred, item_cap)
                    : min_subset_serial(m, costs, pred, item_cap);
}

}  // namespace tap
