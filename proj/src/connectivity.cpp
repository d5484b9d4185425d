#include "tap/connectivity.hpp"

#include <algorithm>

namespace tap {

namespace {

std::vector<std::vector<NodeId>> adjacency(const EdgeSubgraph& g) {
    std::vector<std::vector<NodeId>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Nodes reached from `start`, skipping `skip` (-1 for none).
int reach_count(const std::vector<std::vector<NodeId>>& adj, int n, NodeId start, NodeId skip) {
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
        NodeId a = stack.back();
        stack.pop_back();
        ++count;
        for (NodeId b : adj[a])
            if (b != skip && !seen[b]) {
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    return count;
}

}  // namespace

bool is_connected(const EdgeSubgraph& g) {
    if (g.n <= 1) return true;
    auto adj = adjacency(g);
    return reach_count(adj, g.n, 0, -1) == g.n;
}

bool is_2nc(const EdgeSubgraph& g) {
    if (g.n < 3) return false;
    auto adj = adjacency(g);
    if (reach_count(adj, g.n, 0, -1) != g.n) return false;
    for (NodeId v = 0; v < g.n; ++v) {
        NodeId start = (v == 0) ? 1 : 0;
        if (reach_count(adj, g.n, start, v) != g.n - 1) return false;
    }
    return true;
}

bool is_2nc_fast(const EdgeSubgraph& g) {
    if (g.n < 3) return false;
    auto adj = adjacency(g);

    // iterative Tarjan articulation-point scan
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1), child_count(g.n, 0);
    std::vector<size_t> next(g.n, 0);
    int timer = 0;
    int visited = 0;
    std::vector<NodeId> stack;
    stack.reserve(g.n);
    stack.push_back(0);
    disc[0] = low[0] = timer++;
    ++visited;
    while (!stack.empty()) {
        NodeId a = stack.back();
        if (next[a] < adj[a].size()) {
            NodeId b = adj[a][next[a]++];
            if (disc[b] < 0) {
                parent[b] = a;
                ++child_count[a];
                disc[b] = low[b] = timer++;
                ++visited;
                stack.push_back(b);
            } else if (b != parent[a]) {
                low[a] = std::min(low[a], disc[b]);
            }
        } else {
            stack.pop_back();
            NodeId p = parent[a];
            if (p >= 0) {
                low[p] = std::min(low[p], low[a]);
                if (p != 0 && low[a] >= disc[p]) return false;  // p is a cut vertex
            }
        }
    }
    if (visited != g.n) return false;
    if (child_count[0] >= 2) return false;  // root is a cut vertex
    return true;
}

bool is_2ec(const EdgeSubgraph& g) {
    if (g.n < 2) return false;
    if (!is_connected(g)) return false;
    // bridge scan by the definition: drop each edge and re-test
    for (size_t i = 0; i < g.edges.size(); ++i) {
        EdgeSubgraph h{g.n, {}};
        h.edges.reserve(g.edges.size() - 1);
        for (size_t j = 0; j < g.edges.size(); ++j)
            if (j != i) h.edges.push_back(g.edges[j]);
        if (!is_connected(h)) return false;
    }
    return true;
}

EdgeSubgraph augmented_graph(const TapInstance& inst, const std::vector<int>& link_ids) {
    EdgeSubgraph g{inst.n, inst.tree_edges};
    for (int id : link_ids) g.edges.emplace_back(inst.links[id].u, inst.links[id].v);
    return g;
}

bool is_feasible_augmentation(const TapInstance& inst, const std::vector<int>& link_ids) {
    return is_2nc(augmented_graph(inst, link_ids));
}

}  // namespace tap
