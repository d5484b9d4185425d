#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tap/instance.hpp"

namespace tap {

/// Path tree on lam+1 nodes with short links {k-1,k+1} of cost 1/k and a
/// long link {0,lam} of cost 1+eps. The greedy run costs H(lam-1) while the
/// long link alone is feasible. For lam = 2 the short and long links are
/// the same node pair; the cheaper one (the short link) is kept, since
/// parallel links are not representable.
TapInstance gen_tight_path(int lam, const Rat& eps);

/// k copies of the tight-path instance strung together with tree edges
/// between first nodes and zero-cost links between second nodes; raises the
/// tree diameter to >= k+1 without changing lambda. Needs lam >= 3.
TapInstance gen_chained(int lam, int k, const Rat& eps);

/// Star tree plus a unit-cost cycle on the leaves. The greedy run matches a
/// minimum-spanning-tree run on the leaf cycle.
TapInstance gen_star_cycle(int n);

/// Ten-node instance whose partition-LP optimum is 3 against an integer
/// optimum of 4: three spokes from a root, each spoke ending in a p/q leaf
/// pair, with unit triangles on the p and the q leaves.
TapInstance gen_fig3_gap();

/// Eight-node caterpillar with seven unit links; meant to be solved with
/// 2-edge-connectivity semantics (cut LP, 2EC feasibility), where its
/// integrality ratio is 4/3.
TapInstance gen_ckkk_tap();

/// Multiply every link cost by `factor`.
TapInstance scale_instance(TapInstance inst, const Rat& factor);

/// Node-to-clique expansion: each node becomes a zero-cost clique with one
/// new node per incident edge; each original edge becomes an inter-clique
/// edge carrying its original cost.
struct InflationMap {
    std::vector<std::vector<NodeId>> cliques;            // original node -> new nodes
    std::vector<std::pair<NodeId, NodeId>> edge_images;  // original edge -> (port u, port v)
    int original_edges = 0;
};

/// Inflate a costed graph (minimum degree >= 2 required). In the output
/// edge list, edge i < |E| is the image of original edge i; the zero-cost
/// clique edges follow. The output must come out 2NC (true whenever the
/// input is 2EC) or a ValidationError is thrown.
std::pair<NcssInstance, InflationMap> inflate(const NcssInstance& graph);

/// Map a feasible cut-LP point to the inflated instance (1 on clique
/// edges), preserving the objective. Throws InfeasibleError when x is not
/// cut-LP feasible.
std::vector<Rat> inflate_solution(const NcssInstance& graph, const NcssInstance& inflated,
                                  const InflationMap& map, const std::vector<Rat>& x);

/// Restrict a feasible partition-LP point of the inflated instance to the
/// original edges. Throws InfeasibleError when x_prime is infeasible.
std::vector<Rat> deflate_solution(const NcssInstance& graph, const NcssInstance& inflated,
                                  const InflationMap& map, const std::vector<Rat>& x_prime);

struct CostRange {
    long num_min = 1;
    long num_max = 10;
    long den_max = 3;
};

/// Seeded random instance: uniform spanning tree (random-walk construction),
/// candidate links filtered to tree-path length <= max_lambda and kept with
/// probability `density`, rational costs from `cost_range`. Regenerates
/// until the full link set augments the tree to 2NC; throws InfeasibleError
/// after a bounded number of attempts.
TapInstance gen_random_tap(int n, int max_lambda, const Rat& density,
                           const CostRange& cost_range, uint64_t seed);

std::string serialize_inflation_map(const InflationMap& map, const std::string& source_digest,
                                    const std::string& inflated_digest);
InflationMap parse_inflation_map(const std::string& text);

}  // namespace tap
