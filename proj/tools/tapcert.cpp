// tapcert: generate, solve, certify, verify, and cross-check instances of
// the 2-node-connectivity tree augmentation problem with exact arithmetic.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "tap/certificate.hpp"
#include "tap/connectivity.hpp"
#include "tap/errors.hpp"
#include "tap/generators.hpp"
#include "tap/io.hpp"
#include "tap/ip.hpp"
#include "tap/lp.hpp"

using namespace tap;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 2 validation, 3 infeasible, 4 too large, 5 check failed
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitCheckFailed = 5;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string pretty(const Rat& r) {
    std::string s = rat_to_string(r);
    if (r.get_den() != 1) {
        char buf[32];
        snprintf(buf, sizeof(buf), "%.6g", rat_to_double(r));
        s += " (~" + std::string(buf) + ")";
    }
    return s;
}

struct Options {
    bool json = false;
    uint64_t seed = 1;
    std::string scale = "1";
};

AnyInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

TapInstance load_tap(const std::string& path) { return parse_tap(read_file(path)); }

int cmd_generate(const std::string& family, int lam, const std::string& eps_text, int k, int n,
                 int max_lambda, const std::string& density_text, long cost_num_min,
                 long cost_num_max, long cost_den_max, const Options& opt,
                 const std::string& out_path) {
    TapInstance inst;
    if (family == "tight-path") {
        inst = gen_tight_path(lam, rat_from_string(eps_text));
    } else if (family == "chained") {
        inst = gen_chained(lam, k, rat_from_string(eps_text));
    } else if (family == "star-cycle") {
        inst = gen_star_cycle(n);
    } else if (family == "fig3-gap") {
        inst = gen_fig3_gap();
    } else if (family == "ckkk") {
        inst = gen_ckkk_tap();
    } else if (family == "random") {
        CostRange range{cost_num_min, cost_num_max, cost_den_max};
        inst = gen_random_tap(n, max_lambda, rat_from_string(density_text), range, opt.seed);
    } else {
        throw ValidationError("UnknownFamily: \"" + family +
                              "\" (tight-path, chained, star-cycle, fig3-gap, ckkk, random)");
    }
    Rat scale = rat_from_string(opt.scale);
    if (scale != 1) inst = scale_instance(std::move(inst), scale);
    std::string text = serialize_instance(inst);
    write_file(out_path, text);
    if (opt.json) {
        json j{{"family", family},
               {"digest", instance_digest(inst)},
               {"n", inst.n},
               {"links", inst.links.size()},
               {"path", out_path}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << out_path << "  n=" << inst.n << "  links=" << inst.links.size()
                  << "  digest=" << instance_digest(inst) << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& in_path, const std::string& cert_path, const Options& opt) {
    TapInstance inst = load_tap(in_path);
    Timer timer;
    GreedyResult result = greedy_solve(inst);
    DualCertificate cert = build_dual(result, inst);
    auto failures = verify_certificate(cert, inst);
    double solve_ms = timer.ms();
    if (!failures.empty()) {
        for (const CheckFailure& f : failures)
            std::cerr << "CheckFailed(" << f.name << "): " << f.message << "\n";
        return kExitCheckFailed;
    }
    if (!cert_path.empty()) write_file(cert_path, serialize_certificate(cert));

    Rat lb = lower_bound(cert);
    Rat ratio = cert.greedy_cost / lb;
    if (opt.json) {
        json j{{"instance_digest", cert.instance_digest},
               {"lambda", cert.lambda_value},
               {"h_lambda_minus_1", rat_to_string(cert.h_lambda_minus_1)},
               {"greedy_cost", rat_to_string(cert.greedy_cost)},
               {"links_picked", cert.picked},
               {"certificate", json{{"verified", true},
                                    {"lower_bound", rat_to_string(lb)},
                                    {"certified_ratio", rat_to_string(ratio)}}},
               {"wall_ms", json{{"solve", solve_ms}}}};
        if (!cert_path.empty()) j["certificate"]["path"] = cert_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instance " << cert.instance_digest << "  n=" << inst.n
                  << "  links=" << inst.links.size() << "\n";
        std::cout << "lambda " << cert.lambda_value << ", guarantee H(lambda-1) = "
                  << pretty(cert.h_lambda_minus_1) << "\n";
        std::cout << "greedy cost      " << pretty(cert.greedy_cost) << "  (" << cert.picked.size()
                  << " links)\n";
        std::cout << "certified bound  " << pretty(lb) << "\n";
        std::cout << "certified ratio  " << pretty(ratio) << "\n";
        if (!cert_path.empty()) std::cout << "certificate written to " << cert_path << "\n";
        std::cout << "solve time " << solve_ms << " ms\n";
    }
    return 0;
}

int cmd_exact(const std::string& in_path, bool run_lp, bool run_ip, const std::string& model,
              const std::string& connectivity, int cut_cap, int ip_cap, int degree_cap,
              const Options& opt) {
    AnyInstance any = load_instance(in_path);
    SeparationCaps caps;
    caps.cut_node_cap = cut_cap;
    caps.degree_cap = degree_cap;
    if (!run_lp && !run_ip) run_lp = run_ip = true;

    json j;
    std::ostringstream human;
    std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            j["instance_digest"] = instance_digest(inst);
            j["kind"] = std::is_same_v<T, TapInstance> ? "tap" : "ncss";
            if constexpr (std::is_same_v<T, TapInstance>) {
                if (run_lp) {
                    Timer t;
                    LpOutcome out = model == "cut" ? solve_cut_lp(as_costed_graph(inst), caps)
                                                   : solve_tap_partition_lp(inst, caps);
                    j["lp"] = json{{"model", model},
                                   {"objective", rat_to_string(out.solution.objective)},
                                   {"rounds", out.rounds},
                                   {"rows", out.model.rows.size()},
                                   {"wall_ms", t.ms()}};
                    human << model << "-LP optimum  " << pretty(out.solution.objective) << "  ("
                          << out.rounds << " rounds, " << out.model.rows.size() << " rows, "
                          << t.ms() << " ms)\n";
                }
                if (run_ip) {
                    Timer t;
                    ConnMode mode =
                        connectivity == "2ec" ? ConnMode::TwoEdge : ConnMode::TwoNode;
                    IpResult ip = solve_ip_tap(inst, mode, ip_cap);
                    j["ip"] = json{{"connectivity", connectivity},
                                   {"objective", rat_to_string(ip.cost)},
                                   {"chosen", ip.chosen},
                                   {"wall_ms", t.ms()}};
                    human << connectivity << "-IP optimum  " << pretty(ip.cost) << "  (links";
                    for (int id : ip.chosen) human << " " << id;
                    human << ", " << t.ms() << " ms)\n";
                }
            } else {
                if (connectivity == "2ec")
                    throw ValidationError("2EC oracles apply to tap instances only");
                if (run_lp) {
                    Timer t;
                    LpOutcome out = model == "cut" ? solve_cut_lp(inst, caps)
                                                   : solve_ncss_partition_lp(inst, caps);
                    j["lp"] = json{{"model", model},
                                   {"objective", rat_to_string(out.solution.objective)},
                                   {"rounds", out.rounds},
                                   {"rows", out.model.rows.size()},
                                   {"wall_ms", t.ms()}};
                    human << model << "-LP optimum  " << pretty(out.solution.objective) << "  ("
                          << out.rounds << " rounds, " << out.model.rows.size() << " rows, "
                          << t.ms() << " ms)\n";
                }
                if (run_ip) {
                    Timer t;
                    IpResult ip = solve_ip_ncss(inst, ip_cap);
                    j["ip"] = json{{"connectivity", "2nc"},
                                   {"objective", rat_to_string(ip.cost)},
                                   {"edges", ip.chosen.size()},
                                   {"wall_ms", t.ms()}};
                    human << "2nc-IP optimum  " << pretty(ip.cost) << "  (" << ip.chosen.size()
                          << " edges, " << t.ms() << " ms)\n";
                }
            }
        },
        any);
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human.str();
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& cert_path) {
    TapInstance inst = load_tap(in_path);
    DualCertificate cert = parse_certificate(read_file(cert_path));
    auto failures = verify_certificate(cert, inst);
    if (failures.empty()) {
        std::cout << "certificate verifies: greedy cost " << pretty(cert.greedy_cost)
                  << ", lower bound " << pretty(lower_bound(cert)) << ", lambda "
                  << cert.lambda_value << "\n";
        return 0;
    }
    for (const CheckFailure& f : failures)
        std::cerr << "CheckFailed(" << f.name << "): " << f.message << "\n";
    return kExitCheckFailed;
}

int cmd_inflate(const std::string& in_path, const std::string& out_path,
                const std::string& map_path, const Options& opt) {
    AnyInstance any = load_instance(in_path);
    NcssInstance graph = std::holds_alternative<TapInstance>(any)
                             ? as_costed_graph(std::get<TapInstance>(any))
                             : std::get<NcssInstance>(any);
    auto [inflated, map] = inflate(graph);
    write_file(out_path, serialize_instance(inflated));
    std::string src_digest = instance_digest(graph);
    std::string dst_digest = instance_digest(inflated);
    if (!map_path.empty())
        write_file(map_path, serialize_inflation_map(map, src_digest, dst_digest));
    if (opt.json) {
        json j{{"source_digest", src_digest},
               {"inflated_digest", dst_digest},
               {"n", inflated.n},
               {"edges", inflated.edges.size()},
               {"path", out_path}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << out_path << "  n=" << inflated.n << " (" << 2 * graph.edges.size()
                  << " = 2|E|)  edges=" << inflated.edges.size() << "  digest=" << dst_digest
                  << "\n";
    }
    return 0;
}

int cmd_ratio(const std::string& in_path, int cut_cap, int ip_cap, const Options& opt) {
    TapInstance inst = load_tap(in_path);
    NcssInstance graph = as_costed_graph(inst);

    SeparationCaps caps;
    Timer t_all;
    LpOutcome cut_lp = solve_cut_lp(graph, caps);
    IpResult ip_2ec = solve_ip_tap(inst, ConnMode::TwoEdge, ip_cap);
    Rat ratio_2ec = ip_2ec.cost / cut_lp.solution.objective;

    auto [inflated, map] = inflate(graph);
    SeparationCaps big_caps;
    big_caps.cut_node_cap = cut_cap;
    LpOutcome ptn_lp = solve_ncss_partition_lp(inflated, big_caps);
    IpResult ip_2nc = solve_ip_ncss(inflated, ip_cap);
    Rat ratio_2nc = ip_2nc.cost / ptn_lp.solution.objective;

    if (opt.json) {
        json j{{"instance_digest", instance_digest(inst)},
               {"original", json{{"cut_lp", rat_to_string(cut_lp.solution.objective)},
                                 {"ip_2ec", rat_to_string(ip_2ec.cost)},
                                 {"ratio", rat_to_string(ratio_2ec)}}},
               {"inflated", json{{"partition_lp", rat_to_string(ptn_lp.solution.objective)},
                                 {"ip_2nc", rat_to_string(ip_2nc.cost)},
                                 {"ratio", rat_to_string(ratio_2nc)}}},
               {"ratios_equal", ratio_2ec == ratio_2nc},
               {"wall_ms", t_all.ms()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "original:  cut-LP " << pretty(cut_lp.solution.objective) << ", 2EC-IP "
                  << pretty(ip_2ec.cost) << ", ratio " << pretty(ratio_2ec) << "\n";
        std::cout << "inflated:  partition-LP " << pretty(ptn_lp.solution.objective) << ", 2NC-IP "
                  << pretty(ip_2nc.cost) << ", ratio " << pretty(ratio_2nc) << "\n";
        std::cout << "ratios " << (ratio_2ec == ratio_2nc ? "EQUAL" : "DIFFER") << "\n";
    }
    return ratio_2ec == ratio_2nc ? 0 : kExitCheckFailed;
}

int cmd_lp_export(const std::string& in_path, const std::string& out_path, bool full,
                  const std::string& model, int cut_cap, int degree_cap, const Options&) {
    AnyInstance any = load_instance(in_path);
    SeparationCaps caps;
    caps.cut_node_cap = cut_cap;
    caps.degree_cap = degree_cap;
    LpModel out_model;
    std::string title;
    std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, TapInstance>) {
                if (model == "cut") {
                    NcssInstance g = as_costed_graph(inst);
                    out_model = full ? materialize_cut_lp(g, caps) : solve_cut_lp(g, caps).model;
                    title = "cut LP, " + in_path;
                } else {
                    out_model = full ? materialize_tap_lp(inst, caps)
                                     : solve_tap_partition_lp(inst, caps).model;
                    title = "partition LP, " + in_path;
                }
            } else {
                if (model == "cut") {
                    out_model =
                        full ? materialize_cut_lp(inst, caps) : solve_cut_lp(inst, caps).model;
                    title = "cut LP, " + in_path;
                } else {
                    out_model = full ? materialize_ncss_lp(inst, caps)
                                     : solve_ncss_partition_lp(inst, caps).model;
                    title = "partition LP, " + in_path;
                }
            }
        },
        any);
    write_file(out_path, write_lp_format(out_model, title));
    std::cout << "wrote " << out_path << "  (" << out_model.rows.size() << " rows, "
              << out_model.nvars << " variables" << (full ? ", full family" : ", pooled") << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and certifier toolkit for 2-node-connectivity tree augmentation"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output with exact rationals");
    app.add_option("--seed", opt.seed, "seed for random generation");
    app.add_option("--scale", opt.scale, "multiply generated costs by this rational");

    // generate
    auto* gen = app.add_subcommand("generate", "write an instance from a named family");
    std::string family, eps_text = "1/100", density_text = "1/2", out_path;
    int lam = 4, k = 3, n = 5, max_lambda = 5;
    long cost_num_min = 1, cost_num_max = 10, cost_den_max = 3;
    gen->add_option("--family", family, "tight-path | chained | star-cycle | fig3-gap | ckkk | random")
        ->required();
    gen->add_option("--lambda", lam, "tree-path length bound (tight-path, chained)");
    gen->add_option("--eps", eps_text, "long-link surcharge as a rational");
    gen->add_option("--k", k, "number of chained copies");
    gen->add_option("--n", n, "node count (star-cycle, random)");
    gen->add_option("--max-lambda", max_lambda, "tree-path filter for random links");
    gen->add_option("--density", density_text, "link keep probability (random)");
    gen->add_option("--cost-num-min", cost_num_min, "random cost numerator lower bound");
    gen->add_option("--cost-num-max", cost_num_max, "random cost numerator upper bound");
    gen->add_option("--cost-den-max", cost_den_max, "random cost denominator upper bound");
    gen->add_option("-o,--out", out_path, "output instance path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "run the greedy augmentation and certify it");
    std::string solve_in, cert_out;
    solve->add_option("instance", solve_in, "instance JSON path")->required();
    solve->add_option("--cert", cert_out, "write the dual certificate here");

    // exact
    auto* exact = app.add_subcommand("exact", "exact LP / IP baselines");
    std::string exact_in, model = "partition", connectivity = "2nc";
    bool run_lp = false, run_ip = false;
    int cut_cap = 18, ip_cap = 26, degree_cap = 9;
    exact->add_option("instance", exact_in, "instance JSON path")->required();
    exact->add_flag("--lp", run_lp, "solve the LP relaxation");
    exact->add_flag("--ip", run_ip, "solve the integer problem");
    exact->add_option("--model", model, "partition | cut")
        ->check(CLI::IsMember({"partition", "cut"}));
    exact->add_option("--connectivity", connectivity, "2nc | 2ec")
        ->check(CLI::IsMember({"2nc", "2ec"}));
    exact->add_option("--cut-cap", cut_cap, "exhaustive cut enumeration node cap");
    exact->add_option("--ip-cap", ip_cap, "binary variable cap for the subset search");
    exact->add_option("--degree-cap", degree_cap, "coarsening enumeration block cap");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its instance");
    std::string verify_in, verify_cert;
    verify->add_option("instance", verify_in)->required();
    verify->add_option("certificate", verify_cert)->required();

    // inflate
    auto* inflate_cmd = app.add_subcommand("inflate", "node-to-clique expansion");
    std::string inflate_in, inflate_out, map_out;
    inflate_cmd->add_option("instance", inflate_in)->required();
    inflate_cmd->add_option("-o,--out", inflate_out)->required();
    inflate_cmd->add_option("--map", map_out, "write the inflation map here");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "IP/LP ratio before and after inflation");
    std::string ratio_in;
    int ratio_cut_cap = 28, ratio_ip_cap = 26;
    ratio->add_option("instance", ratio_in)->required();
    ratio->add_option("--cut-cap", ratio_cut_cap, "cut cap for the inflated instance");
    ratio->add_option("--ip-cap", ratio_ip_cap);

    // lp-export
    auto* lpx = app.add_subcommand("lp-export", "write the LP in textual format");
    std::string lpx_in, lpx_out, lpx_model = "partition";
    bool lpx_full = false;
    int lpx_cut_cap = 18, lpx_degree_cap = 9;
    lpx->add_option("instance", lpx_in)->required();
    lpx->add_option("-o,--out", lpx_out)->required();
    lpx->add_flag("--full", lpx_full, "materialize the whole family (within caps)");
    lpx->add_option("--model", lpx_model, "partition | cut")
        ->check(CLI::IsMember({"partition", "cut"}));
    lpx->add_option("--cut-cap", lpx_cut_cap);
    lpx->add_option("--degree-cap", lpx_degree_cap);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(family, lam, eps_text, k, n, max_lambda, density_text,
                                cost_num_min, cost_num_max, cost_den_max, opt, out_path);
        if (solve->parsed()) return cmd_solve(solve_in, cert_out, opt);
        if (exact->parsed())
            return cmd_exact(exact_in, run_lp, run_ip, model, connectivity, cut_cap, ip_cap,
                             degree_cap, opt);
        if (verify->parsed()) return cmd_verify(verify_in, verify_cert);
        if (inflate_cmd->parsed()) return cmd_inflate(inflate_in, inflate_out, map_out, opt);
        if (ratio->parsed()) return cmd_ratio(ratio_in, ratio_cut_cap, ratio_ip_cap, opt);
        if (lpx->parsed())
            return cmd_lp_export(lpx_in, lpx_out, lpx_full, lpx_model, lpx_cut_cap,
                                 lpx_degree_cap, opt);
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CheckFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
