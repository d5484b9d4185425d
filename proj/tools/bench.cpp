// Benchmark of the enumeration kernels: each data-parallel OpenMP kernel is
// timed against its serial reference and the results are checked to match.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tap/certificate.hpp"
#include "tap/generators.hpp"
#include "tap/ip.hpp"
#include "tap/lp.hpp"
#include "tap/scan.hpp"

using namespace tap;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool match;
};

void print_rows(const std::vector<Row>& rows) {
    std::printf("%-34s %12s %12s %9s %7s\n", "kernel", "serial ms", "openmp ms", "speedup",
                "match");
    for (const Row& r : rows)
        std::printf("%-34s %12.1f %12.1f %8.2fx %7s\n", r.name, r.serial_ms, r.parallel_ms,
                    r.serial_ms / r.parallel_ms, r.match ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    std::vector<Row> rows;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif

    {
        // exhaustive integer optimum over all link subsets
        int n = quick ? 8 : 10;
        TapInstance inst = gen_random_tap(n, 5, quick ? make_rat(2, 5) : make_rat(3, 5),
                                          {1, 10, 3}, 12345);
        std::printf("subset scan instance: n=%d links=%zu (%.0f subsets)\n", inst.n,
                    inst.links.size(), double(uint64_t(1) << inst.links.size()));
        double t0 = now_ms();
        SubsetScanResult serial = ip_exhaustive_tap(inst, ConnMode::TwoNode, false, 26);
        double t1 = now_ms();
        SubsetScanResult parallel = ip_exhaustive_tap(inst, ConnMode::TwoNode, true, 26);
        double t2 = now_ms();
        bool match = serial.found == parallel.found && serial.cost == parallel.cost &&
                     serial.mask == parallel.mask;
        rows.push_back({"ip subset scan (2nc feasibility)", t1 - t0, t2 - t1, match});
    }

    {
        // exhaustive cut scan on the inflated caterpillar instance
        auto [inflated, map] = inflate(as_costed_graph(gen_ckkk_tap()));
        NcssInstance graph = quick ? inflate(as_costed_graph(gen_star_cycle(7))).first : inflated;
        std::vector<WeightedEdge> edges;
        for (const Edge& e : graph.edges) edges.push_back({e.u, e.v, Rat(1)});
        std::printf("cut scan instance: n=%d edges=%zu (%.0f cuts)\n", graph.n, edges.size(),
                    double((uint64_t(1) << (graph.n - 1)) - 1));
        double t0 = now_ms();
        CutScanResult serial = scan_cuts_serial(graph.n, edges, 28);
        double t1 = now_ms();
        CutScanResult parallel = scan_cuts_parallel(graph.n, edges, 28);
        double t2 = now_ms();
        bool match = serial.min_value == parallel.min_value &&
                     serial.position == parallel.position && serial.side == parallel.side;
        rows.push_back({"cut scan (gray-code walk)", t1 - t0, t2 - t1, match});
    }

    {
        // batch solve + certify + verify over independent instances
        int count = quick ? 20 : 200;
        std::vector<TapInstance> instances;
        for (int i = 0; i < count; ++i)
            instances.push_back(gen_random_tap(4 + i % 7, 5, make_rat(2, 5), {}, 1000 + i));
        std::vector<Rat> serial_bounds(count), parallel_bounds(count);
        double t0 = now_ms();
        for (int i = 0; i < count; ++i)
            serial_bounds[i] = ratio_certificate(instances[i]).lower_bound;
        double t1 = now_ms();
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i)
            parallel_bounds[i] = ratio_certificate(instances[i]).lower_bound;
        double t2 = now_ms();
        rows.push_back({"batch certify (independent runs)", t1 - t0, t2 - t1,
                        serial_bounds == parallel_bounds});
    }

    print_rows(rows);
    for (const Row& r : rows)
        if (!r.match) return 1;
    return 0;
}
