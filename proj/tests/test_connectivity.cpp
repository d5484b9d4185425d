#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tap/connectivity.hpp"

using namespace tap;
using tap::testing::triangle;

namespace {

EdgeSubgraph cycle(int n) {
    EdgeSubgraph g{n, {}};
    for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle(3)));
    CHECK_FALSE(is_connected({4, {{0, 1}, {2, 3}}}));
    CHECK(is_connected({1, {}}));
    CHECK_FALSE(is_connected({3, {{0, 1}}}));
}

TEST_CASE("is_2nc by the definition") {
    CHECK(is_2nc(cycle(6)));
    CHECK_FALSE(is_2nc({3, {{0, 1}, {1, 2}}}));  // removing the middle disconnects
    EdgeSubgraph k4_minus{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    CHECK(is_2nc(k4_minus));
    CHECK_FALSE(is_2nc({2, {{0, 1}}}));  // needs >= 3 nodes
}

TEST_CASE("is_2ec: connected with no bridge") {
    CHECK(is_2ec(cycle(3)));
    CHECK_FALSE(is_2ec({4, {{0, 1}, {1, 2}, {2, 3}}}));  // every tree edge is a bridge
    TapInstance ckkk = gen_ckkk_tap();
    std::vector<int> all_ids;
    for (const Link& l : ckkk.links) all_ids.push_back(l.id);
    CHECK(is_2ec(augmented_graph(ckkk, all_ids)));
}

TEST_CASE("is_feasible_augmentation") {
    CHECK(is_feasible_augmentation(triangle(), {0}));
    TapInstance f1 = tap::testing::scaled_tight_path();
    CHECK(is_feasible_augmentation(f1, {3}));  // the long link alone
    CHECK_FALSE(is_feasible_augmentation(f1, {}));
    CHECK_FALSE(is_feasible_augmentation(f1, {0, 1}));
}

TEST_CASE("feasibility equals per-nonleaf connectivity after deletion") {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        TapInstance inst = gen_random_tap(7, 4, make_rat(1, 2), {}, seed);
        int m = (int)inst.links.size();
        REQUIRE(m <= 12);
        for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
            std::vector<int> ids;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) ids.push_back(i);
            EdgeSubgraph g = augmented_graph(inst, ids);
            bool by_definition = is_2nc(g);
            bool by_nonleaf = true;
            for (NodeId u : nonleaf_nodes(inst)) {
                EdgeSubgraph del{g.n, {}};
                std::vector<char> drop(g.n, 0);
                drop[u] = 1;
                // connectivity of g - u over the remaining n-1 nodes
                std::vector<int> remap(g.n, -1);
                int idx = 0;
                for (int v = 0; v < g.n; ++v)
                    if (!drop[v]) remap[v] = idx++;
                del.n = idx;
                for (auto [a, b] : g.edges)
                    if (!drop[a] && !drop[b]) del.edges.emplace_back(remap[a], remap[b]);
                if (!is_connected(del)) {
                    by_nonleaf = false;
                    break;
                }
            }
            CHECK(by_definition == by_nonleaf);
        }
    }
}

TEST_CASE("articulation-based 2NC test agrees with the definition") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + (int)(rng() % 7);
        EdgeSubgraph g{n, {}};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) g.edges.emplace_back(a, b);
        CHECK(is_2nc(g) == is_2nc_fast(g));
    }
    for (uint64_t seed = 10; seed < 20; ++seed) {
        TapInstance inst = gen_random_tap(8, 5, make_rat(1, 2), {}, seed);
        std::vector<int> ids;
        for (const Link& l : inst.links) ids.push_back(l.id);
        EdgeSubgraph g = augmented_graph(inst, ids);
        CHECK(is_2nc(g) == is_2nc_fast(g));
    }
}
