#include <doctest.h>

#include "helpers.hpp"
#include "tap/connectivity.hpp"
#include "tap/errors.hpp"
#include "tap/greedy.hpp"

using namespace tap;
using tap::testing::scaled_tight_path;
using tap::testing::star5;
using tap::testing::triangle;

namespace {

// connected components of g - u as a canonical Partition
Partition components_minus(const EdgeSubgraph& g, NodeId u) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<NodeId>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int ncomp = 0;
    for (NodeId s = 0; s < g.n; ++s) {
        if (s == u || comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<NodeId> stack{s};
        while (!stack.empty()) {
            NodeId a = stack.back();
            stack.pop_back();
            for (NodeId b : adj[a])
                if (b != u && comp[b] < 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    Partition p;
    p.blocks.assign(ncomp, {});
    for (NodeId v = 0; v < g.n; ++v)
        if (v != u) p.blocks[comp[v]].push_back(v);
    p.canonicalize();
    return p;
}

}  // namespace

TEST_CASE("coverage counts crossed partitions") {
    TapInstance f1 = scaled_tight_path();
    PartitionState fresh(f1);
    CHECK(coverage(f1, f1.links[3], fresh) == 3);  // long link crosses all three
    CHECK(coverage(f1, f1.links[0], fresh) == 1);  // {0,2} crosses only node 1

    // after all merges every link has coverage 0
    GreedyResult res = greedy_solve(f1);
    PartitionState merged(f1);
    for (int id : res.picked)
        for (NodeId u : merged.nonleaf())
            if (u != f1.links[id].u && u != f1.links[id].v) merged.at(u).merge(f1.links[id]);
    CHECK(merged.all_trivial());
    for (const Link& l : f1.links) CHECK(coverage(f1, l, merged) == 0);
}

TEST_CASE("tie_break picks lowest cost then lowest id") {
    Link a{0, 1, Rat(1), 3}, b{2, 3, Rat(1), 7};
    CHECK(tie_break({&a, &b}).id == 3);
    CHECK(tie_break({&b, &a}).id == 3);

    Link cheap{0, 1, Rat(2), 5}, pricey{2, 3, Rat(4), 1};  // ratios 2/1 vs 4/2 both 2
    CHECK(tie_break({&pricey, &cheap}).id == 5);

    Link solo{4, 5, Rat(9), 2};
    CHECK(tie_break({&solo}).id == 2);
}

TEST_CASE("greedy on the scaled tight path picks the short links dearest-last") {
    TapInstance f1 = scaled_tight_path();
    GreedyResult res = greedy_solve(f1);
    CHECK(res.picked == std::vector<int>{2, 1, 0});  // {2,4}, {1,3}, {0,2}
    CHECK(res.cost == Rat(11));
    CHECK(is_feasible_augmentation(f1, res.picked));
}

TEST_CASE("greedy on the triangle") {
    GreedyResult res = greedy_solve(triangle());
    CHECK(res.picked == std::vector<int>{0});
    CHECK(res.cost == Rat(5));
}

TEST_CASE("greedy on the star cycle runs like a spanning-tree build") {
    GreedyResult res = greedy_solve(star5());
    CHECK(res.picked.size() == 3);
    CHECK(res.cost == Rat(3));
    CHECK(is_feasible_augmentation(star5(), res.picked));
}

TEST_CASE("greedy reports infeasibility when a partition cannot be covered") {
    TapInstance inst;
    inst.n = 4;
    inst.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    inst.links = {{0, 2, Rat(1), 0}};  // node 2's partition is never crossed
    CHECK_THROWS_AS(greedy_solve(inst), InfeasibleError);
}

TEST_CASE("greedy invariants on random instances") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        TapInstance inst = gen_random_tap(4 + (int)(seed % 6), 5, make_rat(1, 2), {}, seed);
        GreedyResult res = greedy_solve(inst);
        int lam = lambda(inst);

        CHECK(res.picked.size() <= inst.links.size());
        CHECK(is_feasible_augmentation(inst, res.picked));

        // ratios are non-decreasing, weights equal ratios, coverage is bounded
        Rat prev(-1);
        Rat paid(0);
        for (const IterationRecord& rec : res.trace.iterations) {
            CHECK(rec.ratio >= prev);
            prev = rec.ratio;
            CHECK((int)rec.covered.size() >= 1);
            CHECK((int)rec.covered.size() <= lam - 1);
            CHECK(rec.ratio * (int)rec.covered.size() == inst.links[rec.link_id].cost);
            paid += rec.ratio * (int)rec.covered.size();
        }
        CHECK(paid == res.cost);

        // each iteration's stored state matches components computed from scratch
        replay_picks(inst, res.picked, [&](int iter, const Link& pick, const PartitionState& st) {
            const IterationRecord& rec = res.trace.iterations[iter - 1];
            CHECK(rec.link_id == pick.id);
            std::vector<int> prefix(res.picked.begin(), res.picked.begin() + (iter - 1));
            EdgeSubgraph g = augmented_graph(inst, prefix);
            for (NodeId u : st.nonleaf()) CHECK(st.at(u).blocks() == components_minus(g, u));
        });
    }
}
