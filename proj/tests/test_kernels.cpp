#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tap/errors.hpp"
#include "tap/ip.hpp"
#include "tap/lp.hpp"
#include "tap/mincut.hpp"
#include "tap/scan.hpp"

using namespace tap;

namespace {

std::vector<WeightedEdge> random_weighted_graph(int n, std::mt19937_64& rng) {
    std::vector<WeightedEdge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 3 != 0)
                edges.push_back({a, b, make_rat(1 + (long)(rng() % 12), 1 + (long)(rng() % 4))});
    return edges;
}

}  // namespace

TEST_CASE("cut scans: serial, parallel, and the min-cut routine agree") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + (int)(rng() % 8);
        auto edges = random_weighted_graph(n, rng);
        CutScanResult serial = scan_cuts_serial(n, edges, 18);
        CutScanResult parallel = scan_cuts_parallel(n, edges, 18);
        CHECK(serial.min_value == parallel.min_value);
        CHECK(serial.position == parallel.position);
        CHECK(serial.side == parallel.side);

        MinCutResult sw = stoer_wagner_min_cut(n, edges);
        CHECK(sw.value == serial.min_value);
    }
}

TEST_CASE("cut scan survives denominators past the int64 fast path") {
    // coprime denominators around 2^21 push the common denominator past 2^63
    std::vector<long> dens = {2097143, 2097133, 2097121, 2097097};
    std::vector<WeightedEdge> edges;
    int n = 4;
    int k = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.push_back({a, b, make_rat(1, dens[k++ % dens.size()])});
    CutScanResult scan = scan_cuts_serial(n, edges, 18);
    MinCutResult sw = stoer_wagner_min_cut(n, edges);
    CHECK(scan.min_value == sw.value);
    CHECK(scan.min_value == scan_cuts_parallel(n, edges, 18).min_value);
}

TEST_CASE("cut scan cap fails loudly") {
    std::vector<WeightedEdge> edges{{0, 1, Rat(1)}};
    CHECK_THROWS_AS(scan_cuts_serial(25, edges, 18), TooLargeError);
}

TEST_CASE("subset kernels agree with each other and the search") {
    for (uint64_t seed = 500; seed < 515; ++seed) {
        TapInstance inst = gen_random_tap(4 + (int)(seed % 6), 4, make_rat(2, 5), {}, seed);
        SubsetScanResult serial = ip_exhaustive_tap(inst, ConnMode::TwoNode, false);
        SubsetScanResult parallel = ip_exhaustive_tap(inst, ConnMode::TwoNode, true);
        REQUIRE(serial.found);
        CHECK(serial.cost == parallel.cost);
        CHECK(serial.mask == parallel.mask);
    }
}

TEST_CASE("mincut handles disconnected weight support") {
    std::vector<WeightedEdge> edges{{0, 1, Rat(3)}, {2, 3, Rat(4)}};
    MinCutResult sw = stoer_wagner_min_cut(4, edges);
    CHECK(sw.value == Rat(0));
}
