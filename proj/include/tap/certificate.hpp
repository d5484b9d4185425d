#pragma once

#include <string>
#include <vector>

#include "tap/greedy.hpp"
#include "tap/instance.hpp"

namespace tap {

/// One weighted partition snapshot of a non-leaf node: the node's current
/// partition at the start of iteration `iter`, the weight assigned there,
/// and the dual value (first weight, then successive differences).
struct DualSnapshot {
    int iter = 0;                // 1-based iteration that assigned the weight
    int block_count = 0;         // |P| of the snapshot
    std::vector<NodeId> reps;    // sorted block representatives
    Rat wgt;
    Rat y;
};

struct NodeDuals {
    NodeId node = 0;
    std::vector<DualSnapshot> snapshots;
};

/// Machine-checkable lower-bound certificate extracted from a greedy run.
/// All partitions not listed carry dual value 0.
struct DualCertificate {
    std::string instance_digest;
    int lambda_value = 0;
    Rat h_lambda_minus_1;
    Rat greedy_cost;
    std::vector<int> picked;                   // link ids in pick order
    std::vector<IterationRecord> iterations;   // audit trail of the run
    std::vector<NodeDuals> duals;              // ascending by node id
};

/// Build the dual solution from a greedy run: per node, y1 = wgt1 and
/// yj = wgtj - wgt(j-1). Throws ValidationError on a malformed trace
/// (weights out of order, duplicated snapshot indices).
DualCertificate build_dual(const GreedyResult& result, const TapInstance& inst);

/// True iff every dual value is nonnegative.
bool check_nonnegative(const DualCertificate& cert);

/// Total dual value over the snapshots of non-leaf nodes crossed by the
/// link, computed by replaying the pick sequence. Also asserts the
/// structural facts: crossed snapshots form a prefix per node, and the sum
/// telescopes to the weight of the highest crossed snapshot.
Rat link_load(const DualCertificate& cert, const TapInstance& inst, const Link& link);

/// True iff link_load(l) <= H(lambda-1) * cost(l) for every link,
/// i.e. y / H(lambda-1) is dual feasible.
bool check_dual_feasible(const DualCertificate& cert, const TapInstance& inst);

/// Sum over all snapshots of (|P| - 1) * y. Equals the greedy cost.
Rat dual_objective(const DualCertificate& cert);

/// dual_objective / H(lambda-1): a valid lower bound on the partition-LP
/// optimum whenever the certificate checks pass.
Rat lower_bound(const DualCertificate& cert);

struct CheckFailure {
    std::string name;     // nonnegativity, load_bound, accounting, ...
    std::string message;
};

/// Re-verify everything a certificate claims against the instance:
/// snapshot structure vs. replay, dual values, nonnegativity, per-link
/// loads, the accounting identity, feasibility of the picked links, and
/// the lambda / harmonic fields. Empty result means the certificate holds.
std::vector<CheckFailure> verify_certificate(const DualCertificate& cert,
                                             const TapInstance& inst);

struct RatioReport {
    Rat greedy_cost;
    Rat lower_bound;
    Rat certified_ratio;   // greedy_cost / lower_bound
    Rat h_lambda_minus_1;
    int lambda_value = 0;
};

/// Solve, certify, and verify in one step; throws CheckFailedError if the
/// freshly built certificate does not verify.
RatioReport ratio_certificate(const TapInstance& inst);

std::string serialize_certificate(const DualCertificate& cert);
DualCertificate parse_certificate(const std::string& text);

}  // namespace tap
