#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tap/rational.hpp"

namespace tap {

/// Dense 0-based node index.
using NodeId = int;

/// A non-tree edge with a nonnegative cost. `id` is the position in
/// TapInstance::links and is stable across serialization.
struct Link {
    NodeId u = 0;
    NodeId v = 0;
    Rat cost;
    int id = 0;
};

/// Tree augmentation input: a spanning tree of cost 0 on nodes [0, n)
/// plus costed links.
struct TapInstance {
    int n = 0;
    std::vector<std::pair<NodeId, NodeId>> tree_edges;
    std::vector<Link> links;
    std::vector<std::string> labels;  // optional node names, display only
};

/// A costed edge of a general instance.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Rat cost;
};

/// General costed graph for the minimum-cost 2-node-connected spanning
/// subgraph problem. The input graph is required to be 2NC.
struct NcssInstance {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
};

/// Proper partition of an (implicit) ground set: disjoint nonempty blocks.
/// Canonical form: each block sorted ascending, blocks ordered by first element.
struct Partition {
    std::vector<std::vector<NodeId>> blocks;

    size_t size() const { return blocks.size(); }
    void canonicalize();
    bool operator==(const Partition& o) const { return blocks == o.blocks; }
};

enum class ValidationCode {
    NotATree,
    DuplicateEdge,
    LoopEdge,
    NegativeCost,
    TooFewNodes,
    BadNodeId,
    Not2NC,
};

struct ValidationIssue {
    ValidationCode code;
    std::string message;
};

const char* validation_code_name(ValidationCode code);

/// Checks all TapInstance invariants; returns the first violation found.
std::optional<ValidationIssue> validate_tap(const TapInstance& inst);

/// Checks NcssInstance invariants, including that the graph is 2NC.
std::optional<ValidationIssue> validate_ncss(const NcssInstance& inst);

/// Throwing wrappers used by parsers and the CLI.
void require_valid(const TapInstance& inst);
void require_valid(const NcssInstance& inst);

/// The unique tree path between the endpoints of `link`, as a list of tree
/// edges ordered from link.u to link.v.
std::vector<std::pair<NodeId, NodeId>> tree_path(const TapInstance& inst, const Link& link);

/// Maximum tree-path length (edge count) over all links. Throws
/// ValidationError when the instance has no links.
int lambda(const TapInstance& inst);

/// Nodes of tree-degree >= 2, ascending.
std::vector<NodeId> nonleaf_nodes(const TapInstance& inst);

/// Partition of V - u induced by the connected components of T - u.
/// Throws ValidationError when u is a leaf.
Partition components_partition(const TapInstance& inst, NodeId u);

/// Tree degree of every node.
std::vector<int> tree_degrees(const TapInstance& inst);

/// Eccentricity-based tree diameter (edge count).
int tree_diameter(const TapInstance& inst);

/// View of a TAP instance as a plain costed graph: tree edges at cost 0
/// followed by the links. Used when treating the instance as a 2EC input.
NcssInstance as_costed_graph(const TapInstance& inst);

}  // namespace tap
