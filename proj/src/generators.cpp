#include "tap/generators.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "tap/connectivity.hpp"
#include "tap/errors.hpp"
#include "tap/lp.hpp"
#include "tap/mincut.hpp"

namespace tap {

using nlohmann::json;

TapInstance gen_tight_path(int lam, const Rat& eps) {
    if (lam < 2) throw ValidationError("tight-path needs lambda >= 2");
    if (eps <= 0) throw ValidationError("tight-path needs eps > 0");
    TapInstance inst;
    inst.n = lam + 1;
    for (int k = 0; k < lam; ++k) inst.tree_edges.emplace_back(k, k + 1);
    int id = 0;
    for (int k = 1; k <= lam - 1; ++k)
        inst.links.push_back({k - 1, k + 1, make_rat(1, k), id++});
    if (lam >= 3) inst.links.push_back({0, lam, Rat(1) + eps, id++});
    // lam == 2: the long link {0,2} coincides with the single short link;
    // the cheaper of the pair is kept.
    require_valid(inst);
    return inst;
}

TapInstance gen_chained(int lam, int k, const Rat& eps) {
    if (lam < 3) throw ValidationError("chained family needs lambda >= 3");
    if (k < 1) throw ValidationError("chained family needs k >= 1");
    if (eps <= 0) throw ValidationError("chained family needs eps > 0");
    TapInstance inst;
    int copy_size = lam + 1;
    inst.n = k * copy_size;
    auto off = [&](int copy, int v) { return copy * copy_size + v; };
    for (int c = 0; c < k; ++c)
        for (int e = 0; e < lam; ++e) inst.tree_edges.emplace_back(off(c, e), off(c, e + 1));
    for (int c = 0; c + 1 < k; ++c) inst.tree_edges.emplace_back(off(c, 0), off(c + 1, 0));
    int id = 0;
    for (int c = 0; c < k; ++c) {
        for (int kk = 1; kk <= lam - 1; ++kk)
            inst.links.push_back({off(c, kk - 1), off(c, kk + 1), make_rat(1, kk), id++});
        inst.links.push_back({off(c, 0), off(c, lam), Rat(1) + eps, id++});
    }
    for (int c = 0; c + 1 < k; ++c)
        inst.links.push_back({off(c, 1), off(c + 1, 1), Rat(0), id++});
    require_valid(inst);
    return inst;
}

TapInstance gen_star_cycle(int n) {
    if (n < 4) throw ValidationError("star-cycle needs n >= 4");
    TapInstance inst;
    inst.n = n;
    for (int v = 1; v < n; ++v) inst.tree_edges.emplace_back(0, v);
    int id = 0;
    for (int v = 1; v < n - 1; ++v) inst.links.push_back({v, v + 1, Rat(1), id++});
    inst.links.push_back({n - 1, 1, Rat(1), id++});
    require_valid(inst);
    return inst;
}

TapInstance gen_fig3_gap() {
    TapInstance inst;
    inst.n = 10;
    inst.labels = {"r", "v1", "v2", "v3", "p1", "p2", "p3", "q1", "q2", "q3"};
    inst.tree_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {1, 7}, {2, 8}, {3, 9}};
    int id = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 5}, {5, 6}, {4, 6},
                                                        {7, 8}, {8, 9}, {7, 9}})
        inst.links.push_back({a, b, Rat(1), id++});
    require_valid(inst);
    return inst;
}

TapInstance gen_ckkk_tap() {
    TapInstance inst;
    inst.n = 8;
    inst.labels = {"a0", "a1", "a2", "a3", "a4", "b1", "b2", "b3"};
    inst.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}};
    int id = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 5}, {5, 6}, {6, 7}, {7, 4},
                                                        {5, 3}, {6, 4}, {0, 2}})
        inst.links.push_back({a, b, Rat(1), id++});
    require_valid(inst);
    return inst;
}

TapInstance scale_instance(TapInstance inst, const Rat& factor) {
    if (factor <= 0) throw ValidationError("scale factor must be positive");
    for (Link& l : inst.links) l.cost *= factor;
    return inst;
}

std::pair<NcssInstance, InflationMap> inflate(const NcssInstance& graph) {
    std::vector<std::vector<int>> incident(graph.n);  // node -> incident edge indices
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        incident[graph.edges[e].u].push_back((int)e);
        incident[graph.edges[e].v].push_back((int)e);
    }
    for (int v = 0; v < graph.n; ++v)
        if (incident[v].size() < 2)
            throw ValidationError("DegreeTooSmall: node " + std::to_string(v) +
                                  " has degree " + std::to_string(incident[v].size()) +
                                  "; inflation needs minimum degree 2");

    InflationMap map;
    map.cliques.resize(graph.n);
    map.edge_images.assign(graph.edges.size(), {-1, -1});
    map.original_edges = (int)graph.edges.size();
    int next_id = 0;
    for (int v = 0; v < graph.n; ++v) {
        for (int e : incident[v]) {  // incident lists are already index-sorted
            map.cliques[v].push_back(next_id);
            if (graph.edges[e].u == v)
                map.edge_images[e].first = next_id;
            else
                map.edge_images[e].second = next_id;
            ++next_id;
        }
    }

    NcssInstance out;
    out.n = next_id;
    for (size_t e = 0; e < graph.edges.size(); ++e)
        out.edges.push_back(
            {map.edge_images[e].first, map.edge_images[e].second, graph.edges[e].cost});
    for (int v = 0; v < graph.n; ++v)
        for (size_t i = 0; i < map.cliques[v].size(); ++i)
            for (size_t j = i + 1; j < map.cliques[v].size(); ++j)
                out.edges.push_back({map.cliques[v][i], map.cliques[v][j], Rat(0)});
    require_valid(out);
    return {std::move(out), std::move(map)};
}

namespace {

bool cut_lp_feasible(const NcssInstance& graph, const std::vector<Rat>& x) {
    if (x.size() != graph.edges.size()) return false;
    for (const Rat& v : x)
        if (v < 0 || v > 1) return false;
    std::vector<WeightedEdge> w;
    for (size_t i = 0; i < graph.edges.size(); ++i)
        w.push_back({graph.edges[i].u, graph.edges[i].v, x[i]});
    return stoer_wagner_min_cut(graph.n, w).value >= 2;
}

bool partition_lp_feasible(const NcssInstance& graph, const std::vector<Rat>& x) {
    // the cut family is checked exactly by the global min cut, the
    // partition family by the coarsening scan
    if (!cut_lp_feasible(graph, x)) return false;
    return !separate_ncss_partitions(graph, x).found;
}

}  // namespace

std::vector<Rat> inflate_solution(const NcssInstance& graph, const NcssInstance& inflated,
                                  const InflationMap& map, const std::vector<Rat>& x) {
    if (!cut_lp_feasible(graph, x))
        throw InfeasibleError("InfeasibleInput: x is not cut-LP feasible");
    std::vector<Rat> out(inflated.edges.size(), Rat(1));
    for (int e = 0; e < map.original_edges; ++e) out[e] = x[e];
    return out;
}

std::vector<Rat> deflate_solution(const NcssInstance& graph, const NcssInstance& inflated,
                                  const InflationMap& map, const std::vector<Rat>& x_prime) {
    if (!partition_lp_feasible(inflated, x_prime))
        throw InfeasibleError("InfeasibleInput: x' is not partition-LP feasible");
    (void)graph;
    return {x_prime.begin(), x_prime.begin() + map.original_edges};
}

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}

    // unbiased uniform draw from [0, k); avoids distribution objects so the
    // byte stream is identical on every platform
    uint64_t below(uint64_t k) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % k;
        for (;;) {
            uint64_t x = engine();
            if (x < limit) return x % k;
        }
    }
};

}  // namespace

TapInstance gen_random_tap(int n, int max_lambda, const Rat& density,
                           const CostRange& cost_range, uint64_t seed) {
    if (n < 3) throw ValidationError("random instance needs n >= 3");
    if (max_lambda < 2) throw ValidationError("max_lambda must be >= 2");
    if (density < 0 || density > 1) throw ValidationError("density must be in [0,1]");
    if (cost_range.num_min < 0 || cost_range.num_max < cost_range.num_min ||
        cost_range.den_max < 1)
        throw ValidationError("bad cost range");

    Rng rng(seed);
    long dens_num = density.get_num().get_si();
    long dens_den = density.get_den().get_si();

    for (int attempt = 0; attempt < 64; ++attempt) {
        TapInstance inst;
        inst.n = n;
        // uniform spanning tree of K_n by a first-entry random walk
        std::vector<char> visited(n, 0);
        int cur = (int)rng.below(n);
        visited[cur] = 1;
        int seen = 1;
        while (seen < n) {
            uint64_t r = rng.below(n - 1);
            int nxt = (int)(r < (uint64_t)cur ? r : r + 1);
            if (!visited[nxt]) {
                visited[nxt] = 1;
                ++seen;
                inst.tree_edges.emplace_back(std::min(cur, nxt), std::max(cur, nxt));
            }
            cur = nxt;
        }

        std::vector<std::vector<char>> is_tree_edge(n, std::vector<char>(n, 0));
        for (auto [a, b] : inst.tree_edges) is_tree_edge[a][b] = is_tree_edge[b][a] = 1;

        int id = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (is_tree_edge[a][b]) continue;
                Link probe{a, b, Rat(0), 0};
                if ((int)tree_path(inst, probe).size() > max_lambda) continue;
                if ((long)rng.below(dens_den) >= dens_num) continue;
                long span = cost_range.num_max - cost_range.num_min + 1;
                long num = cost_range.num_min + (long)rng.below(span);
                long den = 1 + (long)rng.below(cost_range.den_max);
                inst.links.push_back({a, b, make_rat(num, den), id++});
            }
        }
        if (inst.links.empty()) continue;
        std::vector<int> all_ids(inst.links.size());
        for (size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = (int)i;
        if (!is_feasible_augmentation(inst, all_ids)) continue;
        require_valid(inst);
        return inst;
    }
    throw InfeasibleError("could not generate a 2NC-augmentable instance with these parameters");
}

std::string serialize_inflation_map(const InflationMap& map, const std::string& source_digest,
                                    const std::string& inflated_digest) {
    json j;
    j["kind"] = "inflation_map";
    j["source_digest"] = source_digest;
    j["inflated_digest"] = inflated_digest;
    j["original_edges"] = map.original_edges;
    j["cliques"] = map.cliques;
    j["edge_images"] = json::array();
    for (auto [a, b] : map.edge_images) j["edge_images"].push_back({a, b});
    return j.dump(2);
}

InflationMap parse_inflation_map(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid inflation map JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || j["kind"] != "inflation_map")
        throw SchemaError("inflation map: kind must be \"inflation_map\"");
    InflationMap map;
    map.original_edges = j.at("original_edges").get<int>();
    map.cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
    for (const json& e : j.at("edge_images")) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("inflation map: bad edge image");
        map.edge_images.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return map;
}

}  // namespace tap
