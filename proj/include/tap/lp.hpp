#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tap/instance.hpp"
#include "tap/simplex.hpp"

namespace tap {

/// Pooled LP: objective, lazily generated >= rows, and per-variable upper
/// bounds (kept as model bounds, not rows).
struct LpModel {
    int nvars = 0;
    std::vector<Rat> objective;
    std::vector<std::string> var_names;
    std::vector<LpRow> rows;
    std::vector<std::optional<Rat>> upper;
};

struct LpSolution {
    std::vector<Rat> x;
    Rat objective;
    bool vertex = false;
};

struct SeparationCaps {
    int degree_cap = 9;      // max base blocks for coarsening enumeration (Bell(9) = 21147)
    int cut_node_cap = 18;   // exhaustive cut enumeration cap
    bool parallel_scans = false;
    bool verify_exhaustive = true;  // re-scan the full family after convergence when within caps
};

struct ViolatedRow {
    bool found = false;
    LpRow row;
    Rat violation;
};

/// Every partition obtainable by merging blocks of `base`, including base
/// itself and the trivial partition. Throws TooLargeError past `block_cap`.
std::vector<Partition> enumerate_coarsenings(const Partition& base, int block_cap = 9);

/// Restricted-growth-string visitor over all merges of `nblocks` blocks:
/// fn(rgs, ngroups) with rgs[i] = group of block i. Deterministic order.
void for_each_coarsening(int nblocks, int block_cap,
                         const std::function<void(const std::vector<int>&, int)>& fn);

/// Most violated partition constraint of the 2NC-TAP LP at x, scanning all
/// non-leaf nodes and all coarsenings; not-found when x is feasible.
ViolatedRow separate_tap(const TapInstance& inst, const std::vector<Rat>& x, int degree_cap = 9);

/// Most violated constraint of the general-2NCSS partition LP at x:
/// exhaustive over all cuts (x(delta(S)) >= 2) and all partition rows over
/// coarsenings of the components of G0 - w. Requires n <= caps.cut_node_cap.
ViolatedRow separate_ncss(const NcssInstance& inst, const std::vector<Rat>& x,
                          const SeparationCaps& caps = {});

/// Most violated cut constraint only (the 2EC cut LP family), exhaustive.
ViolatedRow separate_cuts(const NcssInstance& inst, const std::vector<Rat>& x,
                          const SeparationCaps& caps = {});

/// Most violated partition row only (no cut scan), exhaustive over every
/// node w and every coarsening of the components of G0 - w.
ViolatedRow separate_ncss_partitions(const NcssInstance& inst, const std::vector<Rat>& x,
                                     int degree_cap = 9);

/// Most violated cut via the exact global min cut; no size cap.
ViolatedRow separate_cuts_mincut(const NcssInstance& inst, const std::vector<Rat>& x);

struct LpOutcome {
    LpSolution solution;
    LpModel model;  // the pooled model that certifies optimality
    int rounds = 0;
};

/// Lazy-constraint LP solves. Each drives the exact simplex against the
/// named constraint family, adding the most violated row per round until
/// separation finds nothing. Inside the loop, cut separation uses an exact
/// global min-cut rather than enumeration, so large inflated instances stay
/// tractable; when the instance is within the exhaustive caps the final
/// point is re-checked against the fully enumerated family.
LpOutcome solve_tap_partition_lp(const TapInstance& inst, const SeparationCaps& caps = {});
LpOutcome solve_ncss_partition_lp(const NcssInstance& inst, const SeparationCaps& caps = {});
LpOutcome solve_cut_lp(const NcssInstance& graph, const SeparationCaps& caps = {});

/// Prop-style vertex check: the TAP partition LP imposes no x <= 1 bound;
/// true iff the optimal vertex returned by the lazy solve lies in [0,1]^L.
bool check_extreme_point_bounds(const TapInstance& inst, const SeparationCaps& caps = {});

/// Extend a feasible TAP LP point by 1 on tree edges and verify every cut
/// constraint x(delta(S)) >= 2 by enumeration.
bool check_cut_remark(const TapInstance& inst, const std::vector<Rat>& x,
                      const SeparationCaps& caps = {});

/// Fully materialized models (within caps) for export and cross-checking.
LpModel materialize_tap_lp(const TapInstance& inst, const SeparationCaps& caps = {});
LpModel materialize_ncss_lp(const NcssInstance& inst, const SeparationCaps& caps = {});
LpModel materialize_cut_lp(const NcssInstance& graph, const SeparationCaps& caps = {});

/// Textual LP-format writer. Rows are scaled to integer coefficients; the
/// objective is scaled by the least common denominator, recorded in a
/// comment, so external solvers can cross-check exactly.
std::string write_lp_format(const LpModel& model, const std::string& title);

}  // namespace tap
