#include "tap/certificate.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "tap/connectivity.hpp"
#include "tap/errors.hpp"
#include "tap/io.hpp"

namespace tap {

using nlohmann::json;

DualCertificate build_dual(const GreedyResult& result, const TapInstance& inst) {
    DualCertificate cert;
    cert.instance_digest = instance_digest(inst);
    cert.lambda_value = lambda(inst);
    cert.h_lambda_minus_1 = harmonic(cert.lambda_value - 1);
    cert.greedy_cost = result.cost;
    cert.picked = result.picked;
    cert.iterations = result.trace.iterations;

    std::map<NodeId, NodeDuals> by_node;
    Rat prev_ratio(-1);
    for (size_t i = 0; i < cert.iterations.size(); ++i) {
        const IterationRecord& rec = cert.iterations[i];
        if (rec.ratio < prev_ratio)
            throw ValidationError("MalformedTrace: ratios decrease at iteration " +
                                  std::to_string(i + 1));
        prev_ratio = rec.ratio;
        for (const CoveredSnapshot& snap : rec.covered) {
            NodeDuals& nd = by_node[snap.node];
            nd.node = snap.node;
            if (snap.snapshot_index != (int)nd.snapshots.size() + 1)
                throw ValidationError("MalformedTrace: duplicate or skipped snapshot for node " +
                                      std::to_string(snap.node));
            DualSnapshot ds;
            ds.iter = (int)i + 1;
            ds.block_count = snap.block_count;
            ds.reps = snap.reps;
            ds.wgt = rec.ratio;
            ds.y = nd.snapshots.empty() ? rec.ratio : rec.ratio - nd.snapshots.back().wgt;
            nd.snapshots.push_back(std::move(ds));
        }
    }
    for (auto& [node, nd] : by_node) cert.duals.push_back(std::move(nd));
    return cert;
}

bool check_nonnegative(const DualCertificate& cert) {
    for (const NodeDuals& nd : cert.duals)
        for (const DualSnapshot& s : nd.snapshots)
            if (s.y < 0) return false;
    return true;
}

namespace {

// Per node: which snapshots the link crosses, determined by replaying the
// pick sequence and probing the partition at each snapshot's iteration.
struct CrossProfile {
    std::vector<char> crossed;  // parallel to NodeDuals::snapshots
};

std::map<NodeId, CrossProfile> crossing_profile(const DualCertificate& cert,
                                                const TapInstance& inst, const Link& link) {
    std::map<NodeId, CrossProfile> prof;
    std::map<NodeId, std::map<int, int>> wanted;  // node -> iter -> snapshot pos
    for (const NodeDuals& nd : cert.duals) {
        prof[nd.node].crossed.assign(nd.snapshots.size(), 0);
        for (size_t j = 0; j < nd.snapshots.size(); ++j)
            wanted[nd.node][nd.snapshots[j].iter] = (int)j;
    }
    replay_picks(inst, cert.picked, [&](int iter, const Link&, const PartitionState& state) {
        for (auto& [node, iters] : wanted) {
            auto it = iters.find(iter);
            if (it == iters.end()) continue;
            prof[node].crossed[it->second] = state.at(node).crosses(link) ? 1 : 0;
        }
    });
    return prof;
}

}  // namespace

Rat link_load(const DualCertificate& cert, const TapInstance& inst, const Link& link) {
    auto prof = crossing_profile(cert, inst, link);
    Rat load(0);
    for (const NodeDuals& nd : cert.duals) {
        const auto& crossed = prof.at(nd.node).crossed;
        int highest = -1;
        for (size_t j = 0; j < crossed.size(); ++j) {
            if (crossed[j]) {
                // crossed snapshots must form a prefix of the node's sequence
                if ((int)j != highest + 1)
                    throw CheckFailedError("structure",
                                           "link crosses a non-prefix snapshot of node " +
                                               std::to_string(nd.node));
                highest = (int)j;
                load += nd.snapshots[j].y;
            }
        }
        if (highest >= 0) {
            // telescoping: sum of y over the prefix equals the top weight
            Rat tel(0);
            for (int j = 0; j <= highest; ++j) tel += nd.snapshots[j].y;
            if (tel != nd.snapshots[highest].wgt)
                throw CheckFailedError("structure", "dual prefix does not telescope for node " +
                                                        std::to_string(nd.node));
        }
    }
    return load;
}

bool check_dual_feasible(const DualCertificate& cert, const TapInstance& inst) {
    for (const Link& l : inst.links)
        if (link_load(cert, inst, l) > cert.h_lambda_minus_1 * l.cost) return false;
    return true;
}

Rat dual_objective(const DualCertificate& cert) {
    Rat total(0);
    for (const NodeDuals& nd : cert.duals)
        for (const DualSnapshot& s : nd.snapshots) total += (s.block_count - 1) * s.y;
    return total;
}

Rat lower_bound(const DualCertificate& cert) {
    return dual_objective(cert) / cert.h_lambda_minus_1;
}

std::vector<CheckFailure> verify_certificate(const DualCertificate& cert,
                                             const TapInstance& inst) {
    std::vector<CheckFailure> failures;
    auto fail = [&](std::string name, std::string msg) {
        failures.push_back({std::move(name), std::move(msg)});
    };

    if (cert.instance_digest != instance_digest(inst))
        fail("digest", "certificate digest " + cert.instance_digest +
                           " does not match instance " + instance_digest(inst));

    int lam;
    try {
        lam = lambda(inst);
    } catch (const ValidationError& e) {
        fail("fields", e.what());
        return failures;
    }
    if (cert.lambda_value != lam)
        fail("fields", "lambda mismatch: certificate says " + std::to_string(cert.lambda_value) +
                           ", instance has " + std::to_string(lam));
    if (cert.h_lambda_minus_1 != harmonic(lam - 1))
        fail("fields", "H(lambda-1) mismatch");

    for (int id : cert.picked)
        if (id < 0 || id >= (int)inst.links.size()) {
            fail("structure", "picked link id out of range: " + std::to_string(id));
            return failures;
        }

    // iteration records vs. picked sequence
    if (cert.iterations.size() != cert.picked.size())
        fail("structure", "iteration count does not match picked links");
    else
        for (size_t i = 0; i < cert.picked.size(); ++i)
            if (cert.iterations[i].link_id != cert.picked[i])
                fail("structure", "iteration " + std::to_string(i + 1) + " picked link mismatch");

    // snapshot structure against an independent replay
    std::map<NodeId, std::map<int, const DualSnapshot*>> stored;  // node -> iter -> snapshot
    bool structure_ok = true;
    for (const NodeDuals& nd : cert.duals) {
        Rat prev_wgt(-1);
        for (size_t j = 0; j < nd.snapshots.size(); ++j) {
            const DualSnapshot& s = nd.snapshots[j];
            if (s.wgt < prev_wgt) {
                fail("dual_values",
                     "weights decrease across snapshots of node " + std::to_string(nd.node));
                structure_ok = false;
            }
            Rat expect_y = (j == 0) ? s.wgt : s.wgt - nd.snapshots[j - 1].wgt;
            if (s.y != expect_y) {
                fail("dual_values", "y is not the weight difference at node " +
                                        std::to_string(nd.node) + " snapshot " +
                                        std::to_string(j + 1));
                structure_ok = false;
            }
            prev_wgt = s.wgt;
            if (!stored[nd.node].emplace(s.iter, &s).second) {
                fail("structure", "node " + std::to_string(nd.node) +
                                      " has two snapshots for iteration " + std::to_string(s.iter));
                structure_ok = false;
            }
            if ((int)s.reps.size() != s.block_count) {
                fail("snapshots", "block count does not match representatives at node " +
                                      std::to_string(nd.node));
                structure_ok = false;
            }
        }
    }
    if (!structure_ok) return failures;

    replay_picks(inst, cert.picked, [&](int iter, const Link& pick, const PartitionState& state) {
        size_t idx = (size_t)iter - 1;
        const IterationRecord* rec =
            idx < cert.iterations.size() ? &cert.iterations[idx] : nullptr;
        // every crossed partition must carry a stored snapshot for this
        // iteration and vice versa; the snapshot weight is the ratio
        for (NodeId u : state.nonleaf()) {
            if (u == pick.u || u == pick.v) continue;
            bool crossing = state.at(u).crosses(pick);
            const DualSnapshot* snap = nullptr;
            if (auto node_it = stored.find(u); node_it != stored.end()) {
                auto snap_it = node_it->second.find(iter);
                if (snap_it != node_it->second.end()) snap = snap_it->second;
            }
            bool has_snap = snap != nullptr;
            if (crossing != has_snap) {
                fail("snapshots", "iteration " + std::to_string(iter) + ", node " +
                                      std::to_string(u) +
                                      (crossing ? ": crossed partition has no stored snapshot"
                                                : ": stored snapshot is not crossed"));
                continue;
            }
            if (!has_snap) continue;
            const DualSnapshot& s = *snap;
            const NodePartition& part = state.at(u);
            if (part.block_count() != s.block_count || part.representatives() != s.reps)
                fail("snapshots", "stored snapshot of node " + std::to_string(u) +
                                      " at iteration " + std::to_string(iter) +
                                      " does not match replay");
            if (rec && s.wgt != rec->ratio)
                fail("structure", "snapshot weight of node " + std::to_string(u) +
                                      " differs from the iteration " + std::to_string(iter) +
                                      " ratio");
        }
        if (rec) {
            int cov = coverage(inst, pick, state);
            if (cov > 0 && rec->ratio != pick.cost / cov)
                fail("structure", "iteration " + std::to_string(iter) +
                                      " ratio does not equal cost/coverage");
        }
    });

    if (!check_nonnegative(cert)) fail("nonnegativity", "a dual value is negative");

    Rat pick_cost(0);
    for (int id : cert.picked) pick_cost += inst.links[id].cost;
    if (pick_cost != cert.greedy_cost)
        fail("accounting", "stated greedy cost " + rat_to_string(cert.greedy_cost) +
                               " differs from cost of picked links " + rat_to_string(pick_cost));
    if (dual_objective(cert) != cert.greedy_cost)
        fail("accounting", "dual objective " + rat_to_string(dual_objective(cert)) +
                               " differs from greedy cost " + rat_to_string(cert.greedy_cost));

    try {
        for (const Link& l : inst.links) {
            Rat load = link_load(cert, inst, l);
            if (load > cert.h_lambda_minus_1 * l.cost) {
                fail("load_bound", "link " + std::to_string(l.id) + " load " +
                                       rat_to_string(load) + " exceeds H(lambda-1)*cost");
            }
        }
    } catch (const CheckFailedError& e) {
        fail(e.check, e.what());
    }

    if (!is_feasible_augmentation(inst, cert.picked))
        fail("feasibility", "picked links do not make the tree 2-node-connected");

    return failures;
}

RatioReport ratio_certificate(const TapInstance& inst) {
    GreedyResult result = greedy_solve(inst);
    DualCertificate cert = build_dual(result, inst);
    auto failures = verify_certificate(cert, inst);
    if (!failures.empty())
        throw CheckFailedError(failures.front().name, failures.front().message);
    RatioReport report;
    report.greedy_cost = cert.greedy_cost;
    report.lower_bound = lower_bound(cert);
    report.certified_ratio = report.greedy_cost / report.lower_bound;
    report.h_lambda_minus_1 = cert.h_lambda_minus_1;
    report.lambda_value = cert.lambda_value;
    return report;
}

std::string serialize_certificate(const DualCertificate& cert) {
    json j;
    j["kind"] = "certificate";
    j["instance_digest"] = cert.instance_digest;
    j["lambda"] = cert.lambda_value;
    j["h_lambda_minus_1"] = rat_to_string(cert.h_lambda_minus_1);
    j["greedy_cost"] = rat_to_string(cert.greedy_cost);
    j["picked"] = cert.picked;
    j["iterations"] = json::array();
    for (const IterationRecord& rec : cert.iterations) {
        json cov = json::array();
        for (const CoveredSnapshot& s : rec.covered) cov.push_back(s.node);
        j["iterations"].push_back(
            {{"link", rec.link_id}, {"ratio", rat_to_string(rec.ratio)}, {"covered", cov}});
    }
    j["duals"] = json::array();
    for (const NodeDuals& nd : cert.duals) {
        json snaps = json::array();
        for (const DualSnapshot& s : nd.snapshots)
            snaps.push_back({{"iter", s.iter},
                             {"reps", s.reps},
                             {"wgt", rat_to_string(s.wgt)},
                             {"y", rat_to_string(s.y)}});
        j["duals"].push_back({{"node", nd.node}, {"snapshots", snaps}});
    }
    return j.dump(2);
}

DualCertificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid certificate JSON: ") + e.what());
    }
    auto need = [&](const json& o, const char* field) -> const json& {
        if (!o.contains(field))
            throw SchemaError(std::string("certificate: missing field ") + field);
        return o[field];
    };
    if (!j.is_object() || need(j, "kind") != "certificate")
        throw SchemaError("certificate: kind must be \"certificate\"");

    DualCertificate cert;
    cert.instance_digest = need(j, "instance_digest").get<std::string>();
    cert.lambda_value = need(j, "lambda").get<int>();
    cert.h_lambda_minus_1 = rat_from_string(need(j, "h_lambda_minus_1").get<std::string>());
    cert.greedy_cost = rat_from_string(need(j, "greedy_cost").get<std::string>());
    cert.picked = need(j, "picked").get<std::vector<int>>();

    for (const json& it : need(j, "iterations")) {
        IterationRecord rec;
        rec.link_id = need(it, "link").get<int>();
        rec.ratio = rat_from_string(need(it, "ratio").get<std::string>());
        for (const json& node : need(it, "covered")) {
            CoveredSnapshot s;
            s.node = node.get<int>();
            rec.covered.push_back(s);  // structure filled from duals below
        }
        cert.iterations.push_back(std::move(rec));
    }
    for (const json& nd_json : need(j, "duals")) {
        NodeDuals nd;
        nd.node = need(nd_json, "node").get<int>();
        for (const json& s_json : need(nd_json, "snapshots")) {
            DualSnapshot s;
            s.iter = need(s_json, "iter").get<int>();
            s.reps = need(s_json, "reps").get<std::vector<int>>();
            s.block_count = (int)s.reps.size();
            s.wgt = rat_from_string(need(s_json, "wgt").get<std::string>());
            s.y = rat_from_string(need(s_json, "y").get<std::string>());
            nd.snapshots.push_back(std::move(s));
        }
        cert.duals.push_back(std::move(nd));
    }
    // backfill iteration covered-snapshot details from the duals section
    for (NodeDuals& nd : cert.duals) {
        for (size_t jx = 0; jx < nd.snapshots.size(); ++jx) {
            const DualSnapshot& s = nd.snapshots[jx];
            if (s.iter < 1 || s.iter > (int)cert.iterations.size())
                throw SchemaError("certificate: snapshot iteration out of range");
            for (CoveredSnapshot& cs : cert.iterations[s.iter - 1].covered) {
                if (cs.node == nd.node) {
                    cs.snapshot_index = (int)jx + 1;
                    cs.block_count = s.block_count;
                    cs.reps = s.reps;
                }
            }
        }
    }
    return cert;
}

}  // namespace tap
