#include "tap/instance.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "tap/connectivity.hpp"
#include "tap/errors.hpp"

namespace tap {

void Partition::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                  return a.front() < b.front();
              });
}

const char* validation_code_name(ValidationCode code) {
    switch (code) {
        case ValidationCode::NotATree: return "NotATree";
        case ValidationCode::DuplicateEdge: return "DuplicateEdge";
        case ValidationCode::LoopEdge: return "LoopEdge";
        case ValidationCode::NegativeCost: return "NegativeCost";
        case ValidationCode::TooFewNodes: return "TooFewNodes";
        case ValidationCode::BadNodeId: return "BadNodeId";
        case ValidationCode::Not2NC: return "Not2NC";
    }
    return "?";
}

namespace {

std::vector<std::vector<NodeId>> tree_adjacency(const TapInstance& inst) {
    std::vector<std::vector<NodeId>> adj(inst.n);
    for (auto [a, b] : inst.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

std::optional<ValidationIssue> validate_tap(const TapInstance& inst) {
    using VC = ValidationCode;
    auto issue = [](VC c, std::string m) { return ValidationIssue{c, std::move(m)}; };

    if (inst.n < 3) return issue(VC::TooFewNodes, "need n >= 3, got n = " + std::to_string(inst.n));
    if ((int)inst.tree_edges.size() != inst.n - 1)
        return issue(VC::NotATree, "spanning tree needs n-1 edges, got " +
                                       std::to_string(inst.tree_edges.size()));

    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [a, b] : inst.tree_edges) {
        if (a < 0 || a >= inst.n || b < 0 || b >= inst.n)
            return issue(VC::BadNodeId, "tree edge endpoint out of range");
        if (a == b) return issue(VC::LoopEdge, "tree edge is a loop at node " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            return issue(VC::DuplicateEdge, "repeated tree edge {" + std::to_string(key.first) +
                                                "," + std::to_string(key.second) + "}");
    }
    // n-1 distinct edges: a tree iff connected
    {
        EdgeSubgraph t{inst.n, inst.tree_edges};
        if (!is_connected(t)) return issue(VC::NotATree, "tree edges do not form a spanning tree");
    }

    std::set<std::pair<NodeId, NodeId>> link_seen;
    for (size_t i = 0; i < inst.links.size(); ++i) {
        const Link& l = inst.links[i];
        if ((int)i != l.id)
            return issue(VC::BadNodeId, "link id " + std::to_string(l.id) +
                                            " does not match its position " + std::to_string(i));
        if (l.u < 0 || l.u >= inst.n || l.v < 0 || l.v >= inst.n)
            return issue(VC::BadNodeId, "link endpoint out of range");
        if (l.u == l.v) return issue(VC::LoopEdge, "link is a loop at node " + std::to_string(l.u));
        if (l.cost < 0)
            return issue(VC::NegativeCost, "link {" + std::to_string(l.u) + "," +
                                               std::to_string(l.v) + "} has negative cost");
        auto key = std::minmax(l.u, l.v);
        if (seen.count(key))
            return issue(VC::DuplicateEdge, "link {" + std::to_string(key.first) + "," +
                                                std::to_string(key.second) +
                                                "} duplicates a tree edge");
        if (!link_seen.insert(key).second)
            return issue(VC::DuplicateEdge, "parallel link {" + std::to_string(key.first) + "," +
                                                std::to_string(key.second) + "}");
    }
    if (!inst.labels.empty() && (int)inst.labels.size() != inst.n)
        return issue(VC::BadNodeId, "labels array must have one entry per node");
    return std::nullopt;
}

std::optional<ValidationIssue> validate_ncss(const NcssInstance& inst) {
    using VC = ValidationCode;
    auto issue = [](VC c, std::string m) { return ValidationIssue{c, std::move(m)}; };

    if (inst.n < 3) return issue(VC::TooFewNodes, "need n >= 3, got n = " + std::to_string(inst.n));
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : inst.edges) {
        if (e.u < 0 || e.u >= inst.n || e.v < 0 || e.v >= inst.n)
            return issue(VC::BadNodeId, "edge endpoint out of range");
        if (e.u == e.v) return issue(VC::LoopEdge, "loop edge at node " + std::to_string(e.u));
        if (e.cost < 0) return issue(VC::NegativeCost, "edge with negative cost");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            return issue(VC::DuplicateEdge, "parallel edge {" + std::to_string(key.first) + "," +
                                                std::to_string(key.second) + "}");
    }
    EdgeSubgraph g{inst.n, {}};
    g.edges.reserve(inst.edges.size());
    for (const Edge& e : inst.edges) g.edges.emplace_back(e.u, e.v);
    if (!is_2nc(g)) return issue(VC::Not2NC, "input graph is not 2-node-connected");
    if (!inst.labels.empty() && (int)inst.labels.size() != inst.n)
        return issue(VC::BadNodeId, "labels array must have one entry per node");
    return std::nullopt;
}

void require_valid(const TapInstance& inst) {
    if (auto bad = validate_tap(inst))
        throw ValidationError(std::string(validation_code_name(bad->code)) + ": " + bad->message);
}

void require_valid(const NcssInstance& inst) {
    if (auto bad = validate_ncss(inst))
        throw ValidationError(std::string(validation_code_name(bad->code)) + ": " + bad->message);
}

std::vector<std::pair<NodeId, NodeId>> tree_path(const TapInstance& inst, const Link& link) {
    auto adj = tree_adjacency(inst);
    std::vector<NodeId> parent(inst.n, -1);
    std::vector<char> seen(inst.n, 0);
    std::queue<NodeId> q;
    q.push(link.u);
    seen[link.u] = 1;
    while (!q.empty()) {
        NodeId a = q.front();
        q.pop();
        if (a == link.v) break;
        for (NodeId b : adj[a])
            if (!seen[b]) {
                seen[b] = 1;
                parent[b] = a;
                q.push(b);
            }
    }
    std::vector<std::pair<NodeId, NodeId>> rev;
    for (NodeId a = link.v; a != link.u; a = parent[a]) rev.emplace_back(parent[a], a);
    return {rev.rbegin(), rev.rend()};
}

int lambda(const TapInstance& inst) {
    if (inst.links.empty()) throw ValidationError("NoLinks: lambda undefined without links");
    size_t best = 0;
    for (const Link& l : inst.links) best = std::max(best, tree_path(inst, l).size());
    return (int)best;
}

std::vector<int> tree_degrees(const TapInstance& inst) {
    std::vector<int> deg(inst.n, 0);
    for (auto [a, b] : inst.tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

std::vector<NodeId> nonleaf_nodes(const TapInstance& inst) {
    std::vector<NodeId> out;
    auto deg = tree_degrees(inst);
    for (NodeId v = 0; v < inst.n; ++v)
        if (deg[v] >= 2) out.push_back(v);
    return out;
}

Partition components_partition(const TapInstance& inst, NodeId u) {
    auto deg = tree_degrees(inst);
    if (deg[u] < 2) throw ValidationError("LeafNode: node " + std::to_string(u) + " is a leaf");
    auto adj = tree_adjacency(inst);
    std::vector<int> comp(inst.n, -1);
    int ncomp = 0;
    for (NodeId s = 0; s < inst.n; ++s) {
        if (s == u || comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::queue<NodeId> q;
        q.push(s);
        while (!q.empty()) {
            NodeId a = q.front();
            q.pop();
            for (NodeId b : adj[a])
                if (b != u && comp[b] < 0) {
                    comp[b] = ncomp;
                    q.push(b);
                }
        }
        ++ncomp;
    }
    Partition p;
    p.blocks.assign(ncomp, {});
    for (NodeId v = 0; v < inst.n; ++v)
        if (v != u) p.blocks[comp[v]].push_back(v);
    p.canonicalize();
    return p;
}

int tree_diameter(const TapInstance& inst) {
    auto adj = tree_adjacency(inst);
    auto farthest = [&](NodeId s) {
        std::vector<int> dist(inst.n, -1);
        dist[s] = 0;
        std::queue<NodeId> q;
        q.push(s);
        NodeId far = s;
        while (!q.empty()) {
            NodeId a = q.front();
            q.pop();
            if (dist[a] > dist[far]) far = a;
            for (NodeId b : adj[a])
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    q.push(b);
                }
        }
        return std::make_pair(far, dist[far]);
    };
    auto [a, _] = farthest(0);
    return farthest(a).second;
}

NcssInstance as_costed_graph(const TapInstance& inst) {
    NcssInstance g;
    g.n = inst.n;
    g.labels = inst.labels;
    for (auto [a, b] : inst.tree_edges) g.edges.push_back({a, b, Rat(0)});
    for (const Link& l : inst.links) g.edges.push_back({l.u, l.v, l.cost});
    return g;
}

}  // namespace tap
