#include "tap/scan.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tap/errors.hpp"

namespace tap {

namespace {

constexpr uint64_t gray(uint64_t t) { return t ^ (t >> 1); }

// Walk positions [lo, hi) of the Gray sequence over subsets of nodes
// 1..n-1, maintaining the cut value incrementally. T is the scaled weight
// type (int64_t fast path, mpz_class fallback).
template <typename T>
struct GrayWalker {
    int n;
    const std::vector<std::vector<std::pair<int, T>>>& adj;  // node -> (nbr, w)

    uint64_t best_pos = 0;
    T best_value{};
    bool have_best = false;

    void run(uint64_t lo, uint64_t hi) {
        std::vector<char> in_s(n, 0);
        uint64_t start_mask = gray(lo);
        T cur{};
        for (int v = 1; v < n; ++v)
            if (start_mask >> (v - 1) & 1) in_s[v] = 1;
        for (int v = 0; v < n; ++v) {
            if (!in_s[v]) continue;
            for (const auto& [w, wt] : adj[v])
                if (!in_s[w]) cur += wt;
        }
        consider(cur, lo);
        for (uint64_t t = lo + 1; t < hi; ++t) {
            int v = __builtin_ctzll(t) + 1;
            // flipping v: edges to the-other-side gain, same-side edges drop
            if (in_s[v]) {
                for (const auto& [w, wt] : adj[v]) cur += in_s[w] ? wt : -wt;
                in_s[v] = 0;
            } else {
                for (const auto& [w, wt] : adj[v]) cur += in_s[w] ? -wt : wt;
                in_s[v] = 1;
            }
            consider(cur, t);
        }
    }

    void consider(const T& value, uint64_t pos) {
        if (!have_best || value < best_value || (value == best_value && pos < best_pos)) {
            best_value = value;
            best_pos = pos;
            have_best = true;
        }
    }
};

struct ScaledWeights {
    mpz_class denom;                 // common denominator
    std::vector<mpz_class> scaled;   // per edge
    bool fits_int64 = false;
};

ScaledWeights scale_weights(const std::vector<WeightedEdge>& edges) {
    ScaledWeights s;
    s.denom = 1;
    for (const WeightedEdge& e : edges) {
        mpz_class den = e.weight.get_den();
        mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class total = 0;
    for (const WeightedEdge& e : edges) {
        mpz_class v = e.weight.get_num() * (s.denom / e.weight.get_den());
        total += abs(v);
        s.scaled.push_back(std::move(v));
    }
    // headroom: the running cut value is at most the total weight
    s.fits_int64 = total < mpz_class(std::numeric_limits<int64_t>::max() / 4);
    return s;
}

template <typename T>
std::vector<std::vector<std::pair<int, T>>> build_adj(int n,
                                                      const std::vector<WeightedEdge>& edges,
                                                      const std::vector<mpz_class>& scaled) {
    std::vector<std::vector<std::pair<int, T>>> adj(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        T w;
        if constexpr (std::is_same_v<T, int64_t>)
            w = (int64_t)scaled[i].get_si();
        else
            w = scaled[i];
        adj[edges[i].u].emplace_back(edges[i].v, w);
        adj[edges[i].v].emplace_back(edges[i].u, w);
    }
    return adj;
}

template <typename T>
CutScanResult scan_cuts_impl(int n, const std::vector<WeightedEdge>& edges,
                             const ScaledWeights& sw, bool parallel) {
    auto adj = build_adj<T>(n, edges, sw.scaled);
    uint64_t count = (uint64_t(1) << (n - 1)) - 1;  // positions 1..2^(n-1)-1

    GrayWalker<T> best{n, adj};
    if (!parallel || count < (1u << 16)) {
        best.run(1, count + 1);
    } else {
#ifdef _OPENMP
        int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
        int nchunks = 1;
#endif
        std::vector<GrayWalker<T>> walkers(nchunks, GrayWalker<T>{n, adj});
        uint64_t chunk = (count + nchunks) / nchunks;
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < nchunks; ++c) {
            uint64_t lo = 1 + chunk * c;
            uint64_t hi = std::min(count + 1, lo + chunk);
            if (lo < hi) walkers[c].run(lo, hi);
        }
        for (const auto& w : walkers)
            if (w.have_best) best.consider(w.best_value, w.best_pos);
    }

    CutScanResult res;
    // min_value = best_value / denom
    Rat value;
    if constexpr (std::is_same_v<T, int64_t>)
        value = Rat(mpz_class((long)best.best_value)) / Rat(sw.denom);
    else
        value = Rat(best.best_value) / Rat(sw.denom);
    value.canonicalize();
    res.min_value = value;
    res.position = best.best_pos;
    uint64_t mask = gray(best.best_pos);
    for (int v = 1; v < n; ++v)
        if (mask >> (v - 1) & 1) res.side.push_back(v);
    return res;
}

CutScanResult scan_cuts(int n, const std::vector<WeightedEdge>& edges, int node_cap,
                        bool parallel) {
    if (n > node_cap)
        throw TooLargeError("cut enumeration needs n <= " + std::to_string(node_cap) +
                            ", got n = " + std::to_string(n));
    if (n < 2) throw TooLargeError("cut enumeration needs n >= 2");
    ScaledWeights sw = scale_weights(edges);
    if (sw.fits_int64) return scan_cuts_impl<int64_t>(n, edges, sw, parallel);
    return scan_cuts_impl<mpz_class>(n, edges, sw, parallel);
}

}  // namespace

CutScanResult scan_cuts_serial(int n, const std::vector<WeightedEdge>& edges, int node_cap) {
    return scan_cuts(n, edges, node_cap, false);
}

CutScanResult scan_cuts_parallel(int n, const std::vector<WeightedEdge>& edges, int node_cap) {
    return scan_cuts(n, edges, node_cap, true);
}

namespace {

SubsetScanResult min_subset_range(uint64_t lo, uint64_t hi, const std::vector<Rat>& costs,
                                  const SubsetPredicate& feasible) {
    SubsetScanResult best;
    for (uint64_t mask = lo; mask < hi; ++mask) {
        if (!feasible(mask)) continue;
        Rat cost(0);
        for (size_t i = 0; i < costs.size(); ++i)
            if (mask >> i & 1) cost += costs[i];
        if (!best.found || cost < best.cost || (cost == best.cost && mask < best.mask)) {
            best.found = true;
            best.cost = cost;
            best.mask = mask;
        }
    }
    return best;
}

void check_item_cap(int nitems, int item_cap) {
    if (nitems > item_cap)
        throw TooLargeError("subset enumeration needs <= " + std::to_string(item_cap) +
                            " items, got " + std::to_string(nitems));
}

}  // namespace

SubsetScanResult min_subset_serial(int nitems, const std::vector<Rat>& item_costs,
                                   const SubsetPredicate& feasible, int item_cap) {
    check_item_cap(nitems, item_cap);
    return min_subset_range(0, uint64_t(1) << nitems, item_costs, feasible);
}

SubsetScanResult min_subset_parallel(int nitems, const std::vector<Rat>& item_costs,
                                     const SubsetPredicate& feasible, int item_cap) {
    check_item_cap(nitems, item_cap);
    uint64_t total = uint64_t(1) << nitems;
#ifdef _OPENMP
    int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
    int nchunks = 1;
#endif
    if (total < (1u << 12)) return min_subset_range(0, total, item_costs, feasible);
    uint64_t chunk = (total + nchunks - 1) / nchunks;
    std::vector<SubsetScanResult> partial(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < nchunks; ++c) {
        uint64_t lo = chunk * c;
        uint64_t hi = std::min(total, lo + chunk);
        if (lo < hi) partial[c] = min_subset_range(lo, hi, item_costs, feasible);
    }
    SubsetScanResult best;
    for (const SubsetScanResult& p : partial) {
        if (!p.found) continue;
        if (!best.found || p.cost < best.cost || (p.cost == best.cost && p.mask < best.mask))
            best = p;
    }
    return best;
}

}  // namespace tap
