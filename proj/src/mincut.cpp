#include "tap/mincut.hpp"

#include <algorithm>
#include <cassert>

namespace tap {

MinCutResult stoer_wagner_min_cut(int n, const std::vector<WeightedEdge>& edges) {
    assert(n >= 2);
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n, Rat(0)));
    for (const WeightedEdge& e : edges) {
        w[e.u][e.v] += e.weight;
        w[e.v][e.u] += e.weight;
    }
    // group[v]: original nodes contracted into v
    std::vector<std::vector<NodeId>> group(n);
    for (int v = 0; v < n; ++v) group[v] = {v};
    std::vector<char> alive(n, 1);

    MinCutResult best;
    bool have_best = false;

    for (int phase = 0; phase < n - 1; ++phase) {
        // maximum-adjacency sweep from the lowest-index alive node
        std::vector<char> in_a(n, 0);
        std::vector<Rat> attach(n, Rat(0));
        int first = -1;
        for (int v = 0; v < n && first < 0; ++v)
            if (alive[v]) first = v;
        in_a[first] = 1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && !in_a[v]) attach[v] = w[first][v];

        int prev = first, last = first;
        int remaining = 0;
        for (int v = 0; v < n; ++v) remaining += alive[v];
        for (int step = 1; step < remaining; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || in_a[v]) continue;
                if (pick < 0 || attach[v] > attach[pick]) pick = v;  // tie: lowest index
            }
            in_a[pick] = 1;
            prev = last;
            last = pick;
            for (int v = 0; v < n; ++v)
                if (alive[v] && !in_a[v]) attach[v] += w[pick][v];
        }

        // cut of the phase: group(last) versus the rest
        Rat cut_value(0);
        for (int v = 0; v < n; ++v)
            if (alive[v] && v != last) cut_value += w[last][v];
        if (!have_best || cut_value < best.value) {
            best.value = cut_value;
            best.side = group[last];
            have_best = true;
        }

        // contract last into prev
        if (prev != last) {
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || v == prev || v == last) continue;
                w[prev][v] += w[last][v];
                w[v][prev] = w[prev][v];
            }
            group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
            alive[last] = 0;
        }
    }
    std::sort(best.side.begin(), best.side.end());
    return best;
}

}  // namespace tap
