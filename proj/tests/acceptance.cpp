// Acceptance suite: ten end-to-end criteria with exact-rational assertions.
// Run with no arguments for all criteria, or with a criterion number.
// Prints one PASS/FAIL line per criterion; the exit code is the number of
// failed criteria.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tap/certificate.hpp"
#include "tap/connectivity.hpp"
#include "tap/generators.hpp"
#include "tap/io.hpp"
#include "tap/ip.hpp"
#include "tap/lp.hpp"

using namespace tap;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream ss;
            ss << what << ": expected " << want << ", got " << got;
            failures.push_back(ss.str());
        }
    }
    void expect_rat_eq(const Rat& got, const Rat& want, const std::string& what) {
        if (got != want)
            failures.push_back(what + ": expected " + rat_to_string(want) + ", got " +
                               rat_to_string(got));
    }
};

// Deterministic pool of random instances shared by criteria 6/7/8/10.
TapInstance random_instance(uint64_t seed) {
    return gen_random_tap(4 + (int)(seed % 7), 5, make_rat(2, 5), {}, seed);
}

void criterion_1_tight_family(Checker& c) {
    for (int lam = 2; lam <= 8; ++lam) {
        TapInstance inst = gen_tight_path(lam, make_rat(1, 100));
        Rat greedy = greedy_solve(inst).cost;
        c.expect_rat_eq(greedy, harmonic(lam - 1), "lam=" + std::to_string(lam) + " greedy cost");
        Rat ip = solve_ip_tap(inst).cost;
        c.expect_rat_eq(ip, make_rat(101, 100), "lam=" + std::to_string(lam) + " ip optimum");
        Rat ratio = greedy / ip;
        Rat threshold = harmonic(lam - 1) - make_rat(1, 50);
        c.expect(ratio > threshold, "lam=" + std::to_string(lam) + " greedy/opt ratio " +
                                        rat_to_string(ratio) + " must exceed H(lam-1) - 1/50 = " +
                                        rat_to_string(threshold));
    }
}

void criterion_2_chained(Checker& c) {
    TapInstance inst = gen_chained(4, 3, make_rat(1, 100));
    GreedyResult greedy = greedy_solve(inst);
    std::vector<char> picked(inst.links.size(), 0);
    for (int id : greedy.picked) picked[id] = 1;
    Rat long_cost = make_rat(101, 100);
    for (const Link& l : inst.links) {
        bool expect_picked = l.cost != long_cost;
        if (picked[l.id] != expect_picked)
            c.expect(false, "link " + std::to_string(l.id) + (expect_picked
                                ? " should be picked by the greedy run"
                                : " (long link) should be skipped by the greedy run"));
    }
    c.expect_rat_eq(solve_ip_tap(inst).cost, 3 * long_cost, "chained ip optimum");
    c.expect_eq(lambda(inst), 4, "chained lambda");
    c.expect(tree_diameter(inst) >= 4, "chained tree diameter must be >= 4");
}

void criterion_3_star_cycle(Checker& c) {
    for (int n = 4; n <= 9; ++n) {
        std::string tag = "n=" + std::to_string(n) + " ";
        TapInstance inst = gen_star_cycle(n);
        Rat want(n - 2);
        c.expect_rat_eq(greedy_solve(inst).cost, want, tag + "greedy cost");
        c.expect_rat_eq(solve_ip_tap(inst).cost, want, tag + "ip optimum");
        c.expect_rat_eq(solve_tap_partition_lp(inst).solution.objective, want,
                        tag + "partition-LP optimum");
    }
}

void criterion_4_gap_instance(Checker& c) {
    TapInstance inst = gen_fig3_gap();
    Rat ip = solve_ip_tap(inst).cost;
    Rat lp = solve_tap_partition_lp(inst).solution.objective;
    c.expect_rat_eq(ip, Rat(4), "gap instance ip optimum");
    c.expect_rat_eq(lp, Rat(3), "gap instance partition-LP optimum");
    c.expect_rat_eq(ip / lp, make_rat(4, 3), "gap instance integrality ratio");
    std::vector<Rat> half(inst.links.size(), make_rat(1, 2));
    c.expect(!separate_tap(inst, half).found,
             "the all-halves point must pass partition separation");
}

void criterion_5_inflation_ratio(Checker& c) {
    TapInstance ckkk = gen_ckkk_tap();
    NcssInstance graph = as_costed_graph(ckkk);
    Rat cut_lp = solve_cut_lp(graph).solution.objective;
    Rat ip_2ec = solve_ip_tap(ckkk, ConnMode::TwoEdge).cost;
    c.expect_rat_eq(cut_lp, Rat(3), "caterpillar cut-LP optimum");
    c.expect_rat_eq(ip_2ec, Rat(4), "caterpillar 2EC ip optimum");

    auto [inflated, map] = inflate(graph);
    SeparationCaps caps;
    caps.cut_node_cap = 28;  // the inflated instance has 2|E| = 28 nodes
    Rat ptn_lp = solve_ncss_partition_lp(inflated, caps).solution.objective;
    Rat ip_2nc = solve_ip_ncss(inflated).cost;
    c.expect_rat_eq(ptn_lp, Rat(3), "inflated partition-LP optimum");
    c.expect_rat_eq(ip_2nc, Rat(4), "inflated 2NC ip optimum");

    c.expect_rat_eq(ip_2ec / cut_lp, ip_2nc / ptn_lp,
                    "integrality ratio must be preserved exactly by inflation");
    c.expect_rat_eq(ip_2ec / cut_lp, make_rat(4, 3), "both ratios");
}

void criterion_6_certificates(Checker& c) {
    const int count = 200;
    std::vector<std::string> problems(count);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            Checker local;
            TapInstance inst = random_instance(1 + (uint64_t)i);
            std::string tag = "seed=" + std::to_string(1 + i) + " ";
            GreedyResult greedy = greedy_solve(inst);
            DualCertificate cert = build_dual(greedy, inst);
            local.expect(check_nonnegative(cert), tag + "all dual values nonnegative");
            Rat bound = cert.h_lambda_minus_1;
            for (const Link& l : inst.links) {
                if (link_load(cert, inst, l) > bound * l.cost) {
                    local.expect(false, tag + "link load exceeds H(lambda-1) * cost for link " +
                                            std::to_string(l.id));
                    break;
                }
            }
            local.expect(dual_objective(cert) == cert.greedy_cost,
                         tag + "dual objective equals greedy cost");
            Rat lp = solve_tap_partition_lp(inst).solution.objective;
            local.expect(greedy.cost <= bound * lp,
                         tag + "greedy cost within H(lambda-1) * LP optimum");
            Rat ip = solve_ip_tap(inst).cost;
            local.expect(lower_bound(cert) <= ip, tag + "certified bound below the ip optimum");
            local.expect(ip <= greedy.cost, tag + "ip optimum below the greedy cost");
            if (!local.failures.empty()) problems[i] = local.failures.front();
        } catch (const std::exception& e) {
            problems[i] = std::string("seed=") + std::to_string(1 + i) + " threw: " + e.what();
        }
    }
    int bad = 0;
    for (const std::string& p : problems)
        if (!p.empty() && bad++ < 5) c.expect(false, p);
    if (bad) c.expect(false, std::to_string(bad) + " of 200 instances failed");
}

void criterion_7_extreme_points(Checker& c) {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        TapInstance inst = random_instance(seed);
        if (!check_extreme_point_bounds(inst))
            c.expect(false, "seed=" + std::to_string(seed) +
                                " LP vertex has a coordinate above 1");
    }
}

void criterion_8_cut_remark(Checker& c) {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        TapInstance inst = random_instance(seed);
        LpOutcome lp = solve_tap_partition_lp(inst);
        if (!check_cut_remark(inst, lp.solution.x))
            c.expect(false, "seed=" + std::to_string(seed) +
                                " tree-extended LP point violates a cut");
    }
}

void criterion_9_solution_maps(Checker& c) {
    std::vector<std::pair<std::string, NcssInstance>> cases;
    {
        TapInstance tri;
        tri.n = 3;
        tri.tree_edges = {{0, 1}, {1, 2}};
        tri.links = {{0, 2, Rat(5), 0}};
        cases.emplace_back("triangle", as_costed_graph(tri));
        cases.emplace_back("caterpillar", as_costed_graph(gen_ckkk_tap()));
    }
    for (auto& [name, graph] : cases) {
        auto [inflated, map] = inflate(graph);
        LpOutcome cut_lp = solve_cut_lp(graph);
        std::vector<Rat> lifted = inflate_solution(graph, inflated, map, cut_lp.solution.x);

        Rat lifted_cost(0);
        for (size_t i = 0; i < lifted.size(); ++i)
            lifted_cost += lifted[i] * inflated.edges[i].cost;
        c.expect(lifted_cost == cut_lp.solution.objective,
                 name + ": inflate_solution must preserve the objective");

        SeparationCaps caps;
        caps.cut_node_cap = 28;
        c.expect(!separate_ncss(inflated, lifted, caps).found,
                 name + ": lifted point must pass NCSS separation");

        std::vector<Rat> back = deflate_solution(graph, inflated, map, lifted);
        c.expect(back == cut_lp.solution.x, name + ": deflate must invert inflate");
        c.expect(!separate_cuts(graph, back).found,
                 name + ": deflated point must pass cut separation");
    }
}

void criterion_10_oracle_crosscheck(Checker& c) {
    int done = 0;
    uint64_t seed = 1;
    int bad = 0;
    while (done < 100) {
        TapInstance inst = gen_random_tap(4 + (int)(seed % 5), 5, make_rat(2, 5), {}, seed);
        ++seed;
        if (inst.links.size() > 12) continue;  // the criterion covers <= 12 links
        ++done;
        std::string tag = "instance " + std::to_string(done) + " ";
        GreedyResult greedy = greedy_solve(inst);
        if (!is_feasible_augmentation(inst, greedy.picked)) {
            c.expect(false, tag + "greedy output is not 2NC");
            ++bad;
            continue;
        }
        IpResult search = solve_ip_tap(inst);
        SubsetScanResult exhaustive = ip_exhaustive_tap(inst, ConnMode::TwoNode, false);
        uint64_t search_mask = 0;
        for (int id : search.chosen) search_mask |= uint64_t(1) << id;
        if (!exhaustive.found || exhaustive.cost != search.cost ||
            exhaustive.mask != search_mask) {
            c.expect(false, tag + "subset search disagrees with exhaustive enumeration");
            ++bad;
        }
        if (bad >= 5) break;
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "tight path family: greedy H(lam-1), optimum 1+1/100, near-tight ratio",
         criterion_1_tight_family},
        {2, "chained family: picks, optimum, lambda, diameter", criterion_2_chained},
        {3, "star cycle: greedy = IP = partition-LP = n-2", criterion_3_star_cycle},
        {4, "three-spoke gap instance: IP 4, LP 3, ratio 4/3", criterion_4_gap_instance},
        {5, "caterpillar + inflation: oracle values and ratio preservation",
         criterion_5_inflation_ratio},
        {6, "certificates on 200 random instances", criterion_6_certificates},
        {7, "LP vertices within [0,1] on 50 random instances", criterion_7_extreme_points},
        {8, "tree-extended LP points satisfy all cuts on 50 random instances",
         criterion_8_cut_remark},
        {9, "inflation solution maps on triangle and caterpillar", criterion_9_solution_maps},
        {10, "greedy feasibility and IP cross-check on 100 random instances",
         criterion_10_oracle_crosscheck},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failed = 0;
    for (const Criterion& crit : criteria()) {
        if (only != 0 && crit.id != only) continue;
        Checker checker;
        try {
            crit.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("threw: ") + e.what());
        }
        if (checker.failures.empty()) {
            std::printf("criterion %2d: PASS  %s\n", crit.id, crit.title);
        } else {
            ++failed;
            std::printf("criterion %2d: FAIL  %s\n", crit.id, crit.title);
            for (const std::string& f : checker.failures)
                std::printf("              - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    return failed;
}
