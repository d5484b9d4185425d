#include <doctest.h>

#include "helpers.hpp"
#include "tap/certificate.hpp"
#include "tap/connectivity.hpp"
#include "tap/errors.hpp"
#include "tap/io.hpp"
#include "tap/ip.hpp"
#include "tap/lp.hpp"

using namespace tap;
using tap::testing::unit_triangle;

TEST_CASE("tight path: greedy cost H(lam-1), optimum 1+eps") {
    TapInstance t4 = gen_tight_path(4, make_rat(1, 100));
    CHECK(greedy_solve(t4).cost == harmonic(3));
    CHECK(solve_ip_tap(t4).cost == make_rat(101, 100));

    TapInstance t3 = gen_tight_path(3, make_rat(1, 10));
    CHECK(greedy_solve(t3).cost == make_rat(3, 2));
    CHECK(solve_ip_tap(t3).cost == make_rat(11, 10));

    for (int lam = 3; lam <= 8; ++lam) {
        for (Rat eps : {make_rat(1, 10), make_rat(1, 100)}) {
            TapInstance inst = gen_tight_path(lam, eps);
            CHECK(lambda(inst) == lam);
            CHECK(greedy_solve(inst).cost == harmonic(lam - 1));
            CHECK(solve_ip_tap(inst).cost == Rat(1) + eps);
        }
    }
}

TEST_CASE("tight path degenerates at lam = 2 to a single cheap link") {
    // the short and long links share the pair {0,2}; the cheaper one is kept
    TapInstance t2 = gen_tight_path(2, make_rat(1, 100));
    REQUIRE(t2.links.size() == 1);
    CHECK(t2.links[0].cost == Rat(1));
    CHECK(greedy_solve(t2).cost == Rat(1));
    CHECK(greedy_solve(t2).cost == harmonic(1));
    CHECK(solve_ip_tap(t2).cost == Rat(1));
}

TEST_CASE("chained family keeps lambda and stretches the diameter") {
    TapInstance chained = gen_chained(4, 3, make_rat(1, 100));
    CHECK(chained.n == 15);
    CHECK(lambda(chained) == 4);
    CHECK(tree_diameter(chained) >= 4);

    // greedy avoids the three expensive long links, the optimum uses exactly them
    GreedyResult greedy = greedy_solve(chained);
    std::vector<char> picked(chained.links.size(), 0);
    for (int id : greedy.picked) picked[id] = 1;
    int long_links = 0;
    for (const Link& l : chained.links) {
        bool is_long = l.cost == make_rat(101, 100);
        if (is_long) {
            ++long_links;
            CHECK_FALSE(picked[l.id]);
        } else {
            CHECK(picked[l.id]);
        }
    }
    CHECK(long_links == 3);
    CHECK(solve_ip_tap(chained).cost == 3 * make_rat(101, 100));
}

TEST_CASE("chained with k = 1 is exactly the tight path") {
    CHECK(serialize_instance(gen_chained(4, 1, make_rat(1, 100))) ==
          serialize_instance(gen_tight_path(4, make_rat(1, 100))));
}

TEST_CASE("star cycle family") {
    TapInstance s5 = gen_star_cycle(5);
    CHECK(solve_ip_tap(s5).cost == Rat(3));
    CHECK(solve_tap_partition_lp(s5).solution.objective == Rat(3));

    TapInstance s4 = gen_star_cycle(4);
    CHECK(greedy_solve(s4).cost == Rat(2));
    CHECK(lambda(s4) == 2);
}

TEST_CASE("three-spoke gap instance: integer 4 versus fractional 3") {
    TapInstance fig3 = gen_fig3_gap();
    CHECK(solve_ip_tap(fig3).cost == Rat(4));
    CHECK(solve_tap_partition_lp(fig3).solution.objective == Rat(3));
    CHECK(lambda(fig3) == 4);
}

TEST_CASE("caterpillar instance: cut LP 23/8, 2EC optimum 4") {
    TapInstance ckkk = gen_ckkk_tap();
    CHECK(solve_cut_lp(as_costed_graph(ckkk)).solution.objective == make_rat(23, 8));
    CHECK(solve_ip_tap(ckkk, ConnMode::TwoEdge).cost == Rat(4));
}

TEST_CASE("caterpillar ratio is preserved exactly under inflation") {
    NcssInstance g = as_costed_graph(gen_ckkk_tap());
    auto [inflated, map] = inflate(g);
    SeparationCaps caps;
    caps.cut_node_cap = 28;
    LpOutcome cut_lp = solve_cut_lp(g);
    LpOutcome ptn_lp = solve_ncss_partition_lp(inflated, caps);
    CHECK(cut_lp.solution.objective == make_rat(23, 8));
    CHECK(ptn_lp.solution.objective == make_rat(23, 8));
    IpResult ip_2ec = solve_ip_tap(gen_ckkk_tap(), ConnMode::TwoEdge);
    IpResult ip_2nc = solve_ip_ncss(inflated);
    CHECK(ip_2ec.cost == Rat(4));
    CHECK(ip_2nc.cost == Rat(4));
    CHECK(ip_2ec.cost / cut_lp.solution.objective == ip_2nc.cost / ptn_lp.solution.objective);
    CHECK(ip_2ec.cost / cut_lp.solution.objective == make_rat(32, 23));
}

TEST_CASE("inflation of the unit triangle is a six-cycle") {
    auto [inflated, map] = inflate(unit_triangle());
    CHECK(inflated.n == 6);
    REQUIRE(inflated.edges.size() == 6);
    int zero_cost = 0, unit_cost = 0;
    std::vector<int> deg(6, 0);
    for (const Edge& e : inflated.edges) {
        (e.cost == 0 ? zero_cost : unit_cost)++;
        ++deg[e.u];
        ++deg[e.v];
    }
    CHECK(zero_cost == 3);
    CHECK(unit_cost == 3);
    for (int d : deg) CHECK(d == 2);
    EdgeSubgraph g{inflated.n, {}};
    for (const Edge& e : inflated.edges) g.edges.emplace_back(e.u, e.v);
    CHECK(is_connected(g));
}

TEST_CASE("inflation size and incidence invariants") {
    for (const NcssInstance& graph :
         {unit_triangle(), as_costed_graph(gen_ckkk_tap()), as_costed_graph(gen_fig3_gap())}) {
        auto [inflated, map] = inflate(graph);
        CHECK(inflated.n == 2 * (int)graph.edges.size());
        // every new node is incident to exactly one inter-clique edge
        std::vector<int> image_deg(inflated.n, 0);
        for (int e = 0; e < map.original_edges; ++e) {
            ++image_deg[inflated.edges[e].u];
            ++image_deg[inflated.edges[e].v];
        }
        for (int v = 0; v < inflated.n; ++v) CHECK(image_deg[v] == 1);
    }
}

TEST_CASE("inflation rejects degree-1 nodes") {
    NcssInstance g;
    g.n = 3;
    g.edges = {{0, 1, Rat(1)}, {1, 2, Rat(1)}};
    CHECK_THROWS_AS(inflate(g), ValidationError);
}

TEST_CASE("solution maps preserve objectives and feasibility") {
    for (const NcssInstance& graph : {unit_triangle(), as_costed_graph(gen_ckkk_tap())}) {
        auto [inflated, map] = inflate(graph);
        LpOutcome cut_lp = solve_cut_lp(graph);
        std::vector<Rat> lifted = inflate_solution(graph, inflated, map, cut_lp.solution.x);

        Rat lifted_cost(0);
        for (size_t i = 0; i < lifted.size(); ++i) lifted_cost += lifted[i] * inflated.edges[i].cost;
        CHECK(lifted_cost == cut_lp.solution.objective);

        SeparationCaps caps;
        caps.cut_node_cap = 28;
        CHECK_FALSE(separate_ncss(inflated, lifted, caps).found);

        std::vector<Rat> back = deflate_solution(graph, inflated, map, lifted);
        CHECK(back == cut_lp.solution.x);
        CHECK_FALSE(separate_cuts(graph, back).found);
    }
}

TEST_CASE("the hand-labelled caterpillar point lifts to a separation-clean point") {
    NcssInstance g = as_costed_graph(gen_ckkk_tap());
    std::vector<Rat> x(g.edges.size(), Rat(1));
    std::vector<Rat> link_values = {make_rat(1, 3), make_rat(1, 3), make_rat(1, 3),
                                    make_rat(2, 3), make_rat(1, 3), make_rat(1, 3),
                                    make_rat(2, 3)};
    for (size_t i = 0; i < link_values.size(); ++i) x[7 + i] = link_values[i];

    auto [inflated, map] = inflate(g);
    std::vector<Rat> lifted = inflate_solution(g, inflated, map, x);
    Rat cost(0);
    for (size_t i = 0; i < lifted.size(); ++i) cost += lifted[i] * inflated.edges[i].cost;
    CHECK(cost == Rat(3));
    SeparationCaps caps;
    caps.cut_node_cap = 28;
    CHECK_FALSE(separate_ncss(inflated, lifted, caps).found);
    CHECK(deflate_solution(g, inflated, map, lifted) == x);
}

TEST_CASE("solution maps reject infeasible inputs") {
    auto [inflated, map] = inflate(unit_triangle());
    std::vector<Rat> zeros(unit_triangle().edges.size(), Rat(0));
    CHECK_THROWS_AS(inflate_solution(unit_triangle(), inflated, map, zeros), InfeasibleError);
    std::vector<Rat> zeros_prime(inflated.edges.size(), Rat(0));
    CHECK_THROWS_AS(deflate_solution(unit_triangle(), inflated, map, zeros_prime),
                    InfeasibleError);
}

TEST_CASE("random generation is deterministic and valid") {
    TapInstance a = gen_random_tap(8, 4, make_rat(1, 2), {}, 42);
    TapInstance b = gen_random_tap(8, 4, make_rat(1, 2), {}, 42);
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK_FALSE(validate_tap(a).has_value());

    TapInstance c = gen_random_tap(8, 4, make_rat(1, 2), {}, 43);
    CHECK(serialize_instance(a) != serialize_instance(c));

    for (uint64_t seed = 1; seed <= 20; ++seed) {
        TapInstance inst = gen_random_tap(4 + (int)(seed % 7), 3, make_rat(1, 2), {}, seed);
        CHECK_FALSE(validate_tap(inst).has_value());
        for (const Link& l : inst.links) CHECK(tree_path(inst, l).size() <= 3);
    }
}

TEST_CASE("max_lambda = 2 keeps every link between sibling leaves") {
    TapInstance inst = gen_random_tap(9, 2, Rat(1), {}, 7);
    for (const Link& l : inst.links) CHECK(tree_path(inst, l).size() == 2);
}

TEST_CASE("inflation map serializes and parses back") {
    auto [inflated, map] = inflate(as_costed_graph(gen_ckkk_tap()));
    std::string text = serialize_inflation_map(map, "aaaa", "bbbb");
    InflationMap parsed = parse_inflation_map(text);
    CHECK(parsed.original_edges == map.original_edges);
    CHECK(parsed.cliques == map.cliques);
    CHECK(parsed.edge_images == map.edge_images);
}
