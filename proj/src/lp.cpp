#include "tap/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "tap/errors.hpp"
#include "tap/mincut.hpp"
#include "tap/scan.hpp"

namespace tap {

namespace {

long bell_number(int k) {
    // triangle recurrence; k <= 12 is plenty here
    std::vector<std::vector<long>> tri(k + 1);
    tri[0] = {1};
    for (int i = 1; i <= k; ++i) {
        tri[i].resize(i + 1);
        tri[i][0] = tri[i - 1][i - 1];
        for (int j = 1; j <= i; ++j) tri[i][j] = tri[i][j - 1] + tri[i - 1][j - 1];
    }
    return tri[k][0];
}

}  // namespace

void for_each_coarsening(int nblocks, int block_cap,
                         const std::function<void(const std::vector<int>&, int)>& fn) {
    if (nblocks > block_cap)
        throw TooLargeError("TooManyBlocks: coarsening enumeration needs <= " +
                            std::to_string(block_cap) + " blocks, got " +
                            std::to_string(nblocks) + " (Bell(" + std::to_string(nblocks) +
                            ") = " + std::to_string(bell_number(nblocks)) + ")");
    std::vector<int> rgs(nblocks, 0);
    // lexicographic restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(prefix)
    std::function<void(int, int)> rec = [&](int i, int maxg) {
        if (i == nblocks) {
            fn(rgs, maxg + 1);
            return;
        }
        for (int g = 0; g <= maxg + 1; ++g) {
            rgs[i] = g;
            rec(i + 1, std::max(maxg, g));
        }
    };
    if (nblocks == 0) return;
    rgs[0] = 0;
    rec(1, 0);
}

std::vector<Partition> enumerate_coarsenings(const Partition& base, int block_cap) {
    std::vector<Partition> out;
    int k = (int)base.size();
    for_each_coarsening(k, block_cap, [&](const std::vector<int>& rgs, int ngroups) {
        Partition p;
        p.blocks.assign(ngroups, {});
        for (int i = 0; i < k; ++i)
            p.blocks[rgs[i]].insert(p.blocks[rgs[i]].end(), base.blocks[i].begin(),
                                    base.blocks[i].end());
        p.canonicalize();
        out.push_back(std::move(p));
    });
    return out;
}

namespace {

// Scan one node's coarsening family. `crossings` maps items (variable id,
// value, base-block of each endpoint); emits the most violated row found.
struct CrossingItem {
    int var;
    int block_u;
    int block_v;
};

void scan_partition_family(const std::vector<CrossingItem>& items, const std::vector<Rat>& x,
                           int nblocks, int degree_cap, const std::string& row_prefix,
                           ViolatedRow& best) {
    long counter = 0;
    for_each_coarsening(nblocks, degree_cap, [&](const std::vector<int>& rgs, int ngroups) {
        ++counter;
        if (ngroups <= 1) return;  // trivial partition: rhs 0, never violated
        Rat lhs(0);
        for (const CrossingItem& it : items)
            if (rgs[it.block_u] != rgs[it.block_v]) lhs += x[it.var];
        Rat violation = Rat(ngroups - 1) - lhs;
        if (violation > 0 && (!best.found || violation > best.violation)) {
            LpRow row;
            for (const CrossingItem& it : items)
                if (rgs[it.block_u] != rgs[it.block_v]) row.terms.emplace_back(it.var, Rat(1));
            row.sense = RowSense::Ge;
            row.rhs = ngroups - 1;
            row.name = row_prefix + "_c" + std::to_string(counter);
            best.found = true;
            best.row = std::move(row);
            best.violation = violation;
        }
    });
}

std::vector<int> block_index_of(const Partition& p, int n) {
    std::vector<int> idx(n, -1);
    for (size_t b = 0; b < p.blocks.size(); ++b)
        for (NodeId v : p.blocks[b]) idx[v] = (int)b;
    return idx;
}

}  // namespace

ViolatedRow separate_tap(const TapInstance& inst, const std::vector<Rat>& x, int degree_cap) {
    assert((int)x.size() == (int)inst.links.size());
    ViolatedRow best;
    for (NodeId u : nonleaf_nodes(inst)) {
        Partition base = components_partition(inst, u);
        auto blk = block_index_of(base, inst.n);
        std::vector<CrossingItem> items;
        for (const Link& l : inst.links) {
            if (l.u == u || l.v == u) continue;
            if (blk[l.u] != blk[l.v]) items.push_back({l.id, blk[l.u], blk[l.v]});
        }
        ViolatedRow node_best;
        scan_partition_family(items, x, (int)base.size(), degree_cap,
                              "ptn_u" + std::to_string(u), node_best);
        if (node_best.found && (!best.found || node_best.violation > best.violation))
            best = node_best;
    }
    return best;
}

namespace {

// Components of the zero-cost subgraph minus w, as a partition of V - w.
Partition zero_cost_components(const NcssInstance& inst, NodeId w) {
    std::vector<std::vector<NodeId>> adj(inst.n);
    for (const Edge& e : inst.edges) {
        if (e.cost != 0) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> comp(inst.n, -1);
    int ncomp = 0;
    for (NodeId s = 0; s < inst.n; ++s) {
        if (s == w || comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<NodeId> stack{s};
        while (!stack.empty()) {
            NodeId a = stack.back();
            stack.pop_back();
            for (NodeId b : adj[a])
                if (b != w && comp[b] < 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    Partition p;
    p.blocks.assign(ncomp, {});
    for (NodeId v = 0; v < inst.n; ++v)
        if (v != w) p.blocks[comp[v]].push_back(v);
    p.canonicalize();
    return p;
}

ViolatedRow most_violated_partition_row(const NcssInstance& inst, const std::vector<Rat>& x,
                                        int degree_cap) {
    ViolatedRow best;
    for (NodeId w = 0; w < inst.n; ++w) {
        Partition base = zero_cost_components(inst, w);
        if (base.size() <= 1) continue;  // only the trivial partition exists
        auto blk = block_index_of(base, inst.n);
        std::vector<CrossingItem> items;
        for (size_t i = 0; i < inst.edges.size(); ++i) {
            const Edge& e = inst.edges[i];
            if (e.u == w || e.v == w) continue;
            if (blk[e.u] != blk[e.v]) items.push_back({(int)i, blk[e.u], blk[e.v]});
        }
        ViolatedRow node_best;
        scan_partition_family(items, x, (int)base.size(), degree_cap,
                              "ptn_w" + std::to_string(w), node_best);
        if (node_best.found && (!best.found || node_best.violation > best.violation))
            best = node_best;
    }
    return best;
}

std::vector<WeightedEdge> weighted_edges(const NcssInstance& inst, const std::vector<Rat>& x) {
    std::vector<WeightedEdge> out;
    out.reserve(inst.edges.size());
    for (size_t i = 0; i < inst.edges.size(); ++i)
        out.push_back({inst.edges[i].u, inst.edges[i].v, x[i]});
    return out;
}

LpRow cut_row(const NcssInstance& inst, const std::vector<NodeId>& side, const std::string& name) {
    std::vector<char> in_side(inst.n, 0);
    for (NodeId v : side) in_side[v] = 1;
    LpRow row;
    for (size_t i = 0; i < inst.edges.size(); ++i)
        if (in_side[inst.edges[i].u] != in_side[inst.edges[i].v])
            row.terms.emplace_back((int)i, Rat(1));
    row.sense = RowSense::Ge;
    row.rhs = 2;
    row.name = name;
    return row;
}

ViolatedRow most_violated_cut_exhaustive(const NcssInstance& inst, const std::vector<Rat>& x,
                                         const SeparationCaps& caps) {
    CutScanResult scan = caps.parallel_scans
                             ? scan_cuts_parallel(inst.n, weighted_edges(inst, x), caps.cut_node_cap)
                             : scan_cuts_serial(inst.n, weighted_edges(inst, x), caps.cut_node_cap);
    ViolatedRow best;
    if (scan.min_value < 2) {
        best.found = true;
        best.violation = Rat(2) - scan.min_value;
        best.row = cut_row(inst, scan.side, "cut_g" + std::to_string(scan.position));
    }
    return best;
}

ViolatedRow most_violated_cut_mincut(const NcssInstance& inst, const std::vector<Rat>& x) {
    MinCutResult mc = stoer_wagner_min_cut(inst.n, weighted_edges(inst, x));
    ViolatedRow best;
    if (mc.value < 2) {
        best.found = true;
        best.violation = Rat(2) - mc.value;
        std::string name = "cut_s";
        for (NodeId v : mc.side) name += "_" + std::to_string(v);
        best.row = cut_row(inst, mc.side, name);
    }
    return best;
}

ViolatedRow pick_most_violated(ViolatedRow cuts, ViolatedRow partitions) {
    if (!cuts.found) return partitions;
    if (!partitions.found) return cuts;
    return partitions.violation > cuts.violation ? partitions : cuts;  // ties go to the cut
}

}  // namespace

ViolatedRow separate_ncss(const NcssInstance& inst, const std::vector<Rat>& x,
                          const SeparationCaps& caps) {
    assert(x.size() == inst.edges.size());
    ViolatedRow cuts = most_violated_cut_exhaustive(inst, x, caps);
    ViolatedRow partitions = most_violated_partition_row(inst, x, caps.degree_cap);
    return pick_most_violated(std::move(cuts), std::move(partitions));
}

ViolatedRow separate_cuts(const NcssInstance& inst, const std::vector<Rat>& x,
                          const SeparationCaps& caps) {
    return most_violated_cut_exhaustive(inst, x, caps);
}

ViolatedRow separate_ncss_partitions(const NcssInstance& inst, const std::vector<Rat>& x,
                                     int degree_cap) {
    return most_violated_partition_row(inst, x, degree_cap);
}

ViolatedRow separate_cuts_mincut(const NcssInstance& inst, const std::vector<Rat>& x) {
    return most_violated_cut_mincut(inst, x);
}

namespace {

std::string row_key(const LpRow& row) {
    std::vector<std::pair<int, Rat>> terms = row.terms;
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream key;
    for (const auto& [var, coeff] : terms) key << var << "*" << rat_to_string(coeff) << "+";
    key << ">=" << rat_to_string(row.rhs);
    return key.str();
}

std::vector<LpRow> rows_with_bounds(const LpModel& model) {
    std::vector<LpRow> rows = model.rows;
    for (int j = 0; j < model.nvars; ++j) {
        if (!model.upper[j]) continue;
        LpRow ub;
        ub.terms.emplace_back(j, Rat(1));
        ub.sense = RowSense::Le;
        ub.rhs = *model.upper[j];
        ub.name = "ub_" + std::to_string(j);
        rows.push_back(std::move(ub));
    }
    return rows;
}

LpSolution solve_pooled(const LpModel& model) {
    SimplexResult res = simplex_solve(model.nvars, model.objective, rows_with_bounds(model));
    if (res.status == SimplexResult::Status::Infeasible)
        throw InfeasibleError("LP is infeasible: some constraint has no incident variables");
    if (res.status == SimplexResult::Status::Unbounded)
        throw std::logic_error("LP unbounded; impossible with nonnegative costs and x >= 0");
    LpSolution sol;
    sol.x = std::move(res.x);
    sol.objective = res.objective;
    sol.vertex = true;
    return sol;
}

using Separator = std::function<ViolatedRow(const std::vector<Rat>&)>;

LpOutcome run_lazy(LpModel model, const Separator& separate,
                   const Separator& exhaustive_check) {
    std::set<std::string> pooled;
    for (const LpRow& r : model.rows) pooled.insert(row_key(r));

    LpOutcome out;
    for (;;) {
        ++out.rounds;
        LpSolution sol = solve_pooled(model);
        ViolatedRow vio = separate(sol.x);
        if (!vio.found) {
            if (exhaustive_check) {
                ViolatedRow check = exhaustive_check(sol.x);
                if (check.found)
                    throw CheckFailedError("separation",
                                           "converged point violates " + check.row.name +
                                               " by " + rat_to_string(check.violation));
            }
            out.solution = std::move(sol);
            out.model = std::move(model);
            return out;
        }
        if (!pooled.insert(row_key(vio.row)).second)
            throw std::logic_error("separation returned an already-pooled row: " + vio.row.name);
        model.rows.push_back(std::move(vio.row));
    }
}

LpModel tap_lp_base(const TapInstance& inst) {
    LpModel model;
    model.nvars = (int)inst.links.size();
    model.objective.reserve(model.nvars);
    for (const Link& l : inst.links) {
        model.objective.push_back(l.cost);
        model.var_names.push_back("x" + std::to_string(l.id));
    }
    model.upper.assign(model.nvars, std::nullopt);  // no x <= 1 in the TAP LP
    return model;
}

LpRow tap_point_partition_row(const TapInstance& inst, NodeId u) {
    Partition base = components_partition(inst, u);
    auto blk = block_index_of(base, inst.n);
    LpRow row;
    for (const Link& l : inst.links) {
        if (l.u == u || l.v == u) continue;
        if (blk[l.u] != blk[l.v]) row.terms.emplace_back(l.id, Rat(1));
    }
    row.sense = RowSense::Ge;
    row.rhs = (long)base.size() - 1;
    row.name = "ptn_u" + std::to_string(u) + "_base";
    return row;
}

LpModel ncss_lp_base(const NcssInstance& inst) {
    LpModel model;
    model.nvars = (int)inst.edges.size();
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        model.objective.push_back(inst.edges[i].cost);
        model.var_names.push_back("x" + std::to_string(i));
    }
    model.upper.assign(model.nvars, Rat(1));  // the cut LP carries 0 <= x <= 1
    return model;
}

void add_singleton_cuts(LpModel& model, const NcssInstance& inst) {
    for (NodeId v = 0; v < inst.n; ++v) {
        LpRow row;
        for (size_t i = 0; i < inst.edges.size(); ++i)
            if (inst.edges[i].u == v || inst.edges[i].v == v)
                row.terms.emplace_back((int)i, Rat(1));
        row.sense = RowSense::Ge;
        row.rhs = 2;
        row.name = "cut_v" + std::to_string(v);
        model.rows.push_back(std::move(row));
    }
}

}  // namespace

LpOutcome solve_tap_partition_lp(const TapInstance& inst, const SeparationCaps& caps) {
    LpModel model = tap_lp_base(inst);
    for (NodeId u : nonleaf_nodes(inst)) model.rows.push_back(tap_point_partition_row(inst, u));
    Separator sep = [&](const std::vector<Rat>& x) {
        return separate_tap(inst, x, caps.degree_cap);
    };
    // the in-loop separation is already the full exhaustive scan
    return run_lazy(std::move(model), sep, nullptr);
}

LpOutcome solve_ncss_partition_lp(const NcssInstance& inst, const SeparationCaps& caps) {
    LpModel model = ncss_lp_base(inst);
    add_singleton_cuts(model, inst);
    Separator sep = [&](const std::vector<Rat>& x) {
        ViolatedRow cuts = most_violated_cut_mincut(inst, x);
        ViolatedRow partitions = most_violated_partition_row(inst, x, caps.degree_cap);
        return pick_most_violated(std::move(cuts), std::move(partitions));
    };
    Separator check;
    if (caps.verify_exhaustive && inst.n <= caps.cut_node_cap)
        check = [&](const std::vector<Rat>& x) { return separate_ncss(inst, x, caps); };
    return run_lazy(std::move(model), sep, check);
}

LpOutcome solve_cut_lp(const NcssInstance& graph, const SeparationCaps& caps) {
    LpModel model = ncss_lp_base(graph);
    add_singleton_cuts(model, graph);
    Separator sep = [&](const std::vector<Rat>& x) { return most_violated_cut_mincut(graph, x); };
    Separator check;
    if (caps.verify_exhaustive && graph.n <= caps.cut_node_cap)
        check = [&](const std::vector<Rat>& x) { return separate_cuts(graph, x, caps); };
    return run_lazy(std::move(model), sep, check);
}

bool check_extreme_point_bounds(const TapInstance& inst, const SeparationCaps& caps) {
    LpOutcome out = solve_tap_partition_lp(inst, caps);
    assert(out.solution.vertex);
    for (const Rat& v : out.solution.x)
        if (v > 1) return false;
    return true;
}

bool check_cut_remark(const TapInstance& inst, const std::vector<Rat>& x,
                      const SeparationCaps& caps) {
    assert((int)x.size() == (int)inst.links.size());
    std::vector<WeightedEdge> edges;
    for (auto [a, b] : inst.tree_edges) edges.push_back({a, b, Rat(1)});
    for (const Link& l : inst.links) edges.push_back({l.u, l.v, x[l.id]});
    CutScanResult scan = caps.parallel_scans
                             ? scan_cuts_parallel(inst.n, edges, caps.cut_node_cap)
                             : scan_cuts_serial(inst.n, edges, caps.cut_node_cap);
    return scan.min_value >= 2;
}

LpModel materialize_tap_lp(const TapInstance& inst, const SeparationCaps& caps) {
    LpModel model = tap_lp_base(inst);
    for (NodeId u : nonleaf_nodes(inst)) {
        Partition base = components_partition(inst, u);
        auto blk = block_index_of(base, inst.n);
        long counter = 0;
        for_each_coarsening((int)base.size(), caps.degree_cap,
                            [&](const std::vector<int>& rgs, int ngroups) {
                                ++counter;
                                if (ngroups <= 1) return;
                                LpRow row;
                                for (const Link& l : inst.links) {
                                    if (l.u == u || l.v == u) continue;
                                    if (blk[l.u] != blk[l.v] && rgs[blk[l.u]] != rgs[blk[l.v]])
                                        row.terms.emplace_back(l.id, Rat(1));
                                }
                                row.sense = RowSense::Ge;
                                row.rhs = ngroups - 1;
                                row.name = "ptn_u" + std::to_string(u) + "_c" +
                                           std::to_string(counter);
                                model.rows.push_back(std::move(row));
                            });
    }
    return model;
}

namespace {

void materialize_cut_rows(LpModel& model, const NcssInstance& inst, int node_cap) {
    if (inst.n > node_cap)
        throw TooLargeError("cut materialization needs n <= " + std::to_string(node_cap) +
                            ", got n = " + std::to_string(inst.n));
    uint64_t count = (uint64_t(1) << (inst.n - 1)) - 1;
    for (uint64_t mask = 1; mask <= count; ++mask) {
        std::vector<NodeId> side;
        for (int v = 1; v < inst.n; ++v)
            if (mask >> (v - 1) & 1) side.push_back(v);
        model.rows.push_back(cut_row(inst, side, "cut_m" + std::to_string(mask)));
    }
}

}  // namespace

LpModel materialize_ncss_lp(const NcssInstance& inst, const SeparationCaps& caps) {
    LpModel model = ncss_lp_base(inst);
    materialize_cut_rows(model, inst, caps.cut_node_cap);
    for (NodeId w = 0; w < inst.n; ++w) {
        Partition base = zero_cost_components(inst, w);
        if (base.size() <= 1) continue;
        auto blk = block_index_of(base, inst.n);
        long counter = 0;
        for_each_coarsening((int)base.size(), caps.degree_cap,
                            [&](const std::vector<int>& rgs, int ngroups) {
                                ++counter;
                                if (ngroups <= 1) return;
                                LpRow row;
                                for (size_t i = 0; i < inst.edges.size(); ++i) {
                                    const Edge& e = inst.edges[i];
                                    if (e.u == w || e.v == w) continue;
                                    if (blk[e.u] != blk[e.v] && rgs[blk[e.u]] != rgs[blk[e.v]])
                                        row.terms.emplace_back((int)i, Rat(1));
                                }
                                row.sense = RowSense::Ge;
                                row.rhs = ngroups - 1;
                                row.name = "ptn_w" + std::to_string(w) + "_c" +
                                           std::to_string(counter);
                                model.rows.push_back(std::move(row));
                            });
    }
    return model;
}

LpModel materialize_cut_lp(const NcssInstance& graph, const SeparationCaps& caps) {
    LpModel model = ncss_lp_base(graph);
    materialize_cut_rows(model, graph, caps.cut_node_cap);
    return model;
}

std::string write_lp_format(const LpModel& model, const std::string& title) {
    std::ostringstream out;
    out << "\\ " << title << "\n";

    mpz_class obj_scale = 1;
    for (const Rat& c : model.objective)
        mpz_lcm(obj_scale.get_mpz_t(), obj_scale.get_mpz_t(), c.get_den().get_mpz_t());
    if (obj_scale != 1)
        out << "\\ objective scaled by " << obj_scale.get_str()
            << "; divide the optimal value by it\n";

    auto var = [&](int j) { return model.var_names.empty() ? "x" + std::to_string(j)
                                                           : model.var_names[j]; };
    out << "Minimize\n obj:";
    bool first = true;
    for (int j = 0; j < model.nvars; ++j) {
        Rat c = model.objective[j] * Rat(obj_scale);
        c.canonicalize();
        if (c == 0) continue;
        out << (first ? " " : (c >= 0 ? " + " : " ")) << c.get_num().get_str() << " " << var(j);
        first = false;
    }
    if (first) out << " 0 " << var(0);
    out << "\nSubject To\n";
    for (const LpRow& row : model.rows) {
        mpz_class scale = row.rhs.get_den();
        for (const auto& [j, coeff] : row.terms)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), coeff.get_den().get_mpz_t());
        out << " " << row.name << ":";
        bool f = true;
        for (const auto& [j, coeff] : row.terms) {
            Rat c = coeff * Rat(scale);
            c.canonicalize();
            out << (f ? " " : (c >= 0 ? " + " : " ")) << c.get_num().get_str() << " " << var(j);
            f = false;
        }
        Rat rhs = row.rhs * Rat(scale);
        rhs.canonicalize();
        const char* rel = row.sense == RowSense::Ge ? ">=" : row.sense == RowSense::Le ? "<=" : "=";
        out << " " << rel << " " << rhs.get_num().get_str() << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < model.nvars; ++j) {
        if (model.upper[j]) {
            Rat u = *model.upper[j];
            out << " 0 <= " << var(j) << " <= " << rat_to_string(u) << "\n";
        } else {
            out << " " << var(j) << " >= 0\n";
        }
    }
    out << "End\n";
    return out.str();
}

}  // namespace tap
