#include "tap/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tap/errors.hpp"

namespace tap {

using nlohmann::json;

namespace {

Rat cost_from_json(const json& j, const std::string& where) {
    Rat c;
    if (j.is_number_integer()) {
        c = make_rat(j.get<long>());
    } else if (j.is_string()) {
        c = rat_from_string(j.get<std::string>());
    } else {
        throw SchemaError(where + ": cost must be an integer or a \"p/q\" string");
    }
    if (c < 0) throw SchemaError("NegativeCost at " + where);
    return c;
}

json cost_to_json(const Rat& c) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) return json(c.get_num().get_si());
    return json(rat_to_string(c));
}

int node_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": node id must be an integer");
    return j.get<int>();
}

std::vector<std::string> labels_from_json(const json& j) {
    std::vector<std::string> out;
    if (!j.contains("labels")) return out;
    if (!j["labels"].is_array()) throw SchemaError("labels: must be an array of strings");
    for (const auto& item : j["labels"]) {
        if (!item.is_string()) throw SchemaError("labels: must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

TapInstance tap_from_json(const json& j) {
    TapInstance inst;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw SchemaError("n: required integer field");
    inst.n = j["n"].get<int>();
    if (!j.contains("tree_edges") || !j["tree_edges"].is_array())
        throw SchemaError("tree_edges: required array field");
    for (const auto& e : j["tree_edges"]) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("tree_edges: entries must be [u,v]");
        inst.tree_edges.emplace_back(node_from_json(e[0], "tree_edges"),
                                     node_from_json(e[1], "tree_edges"));
    }
    if (!j.contains("links") || !j["links"].is_array())
        throw SchemaError("links: required array field");
    int id = 0;
    for (const auto& l : j["links"]) {
        if (!l.is_object() || !l.contains("u") || !l.contains("v") || !l.contains("cost"))
            throw SchemaError("links[" + std::to_string(id) + "]: need fields u, v, cost");
        std::string where = "links[" + std::to_string(id) + "]";
        inst.links.push_back({node_from_json(l["u"], where), node_from_json(l["v"], where),
                              cost_from_json(l["cost"], where), id});
        ++id;
    }
    inst.labels = labels_from_json(j);
    require_valid(inst);
    return inst;
}

NcssInstance ncss_from_json(const json& j) {
    NcssInstance inst;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw SchemaError("n: required integer field");
    inst.n = j["n"].get<int>();
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SchemaError("edges: required array field");
    int idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("cost"))
            throw SchemaError("edges[" + std::to_string(idx) + "]: need fields u, v, cost");
        std::string where = "edges[" + std::to_string(idx) + "]";
        inst.edges.push_back({node_from_json(e["u"], where), node_from_json(e["v"], where),
                              cost_from_json(e["cost"], where)});
        ++idx;
    }
    inst.labels = labels_from_json(j);
    require_valid(inst);
    return inst;
}

}  // namespace

AnyInstance parse_instance(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("kind: required string field (\"tap\" or \"ncss\")");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "tap") return tap_from_json(j);
    if (kind == "ncss") return ncss_from_json(j);
    throw SchemaError("kind: unknown value \"" + kind + "\"");
}

TapInstance parse_tap(const std::string& text) {
    AnyInstance any = parse_instance(text);
    if (auto* t = std::get_if<TapInstance>(&any)) return std::move(*t);
    throw SchemaError("expected a \"tap\" instance");
}

NcssInstance parse_ncss(const std::string& text) {
    AnyInstance any = parse_instance(text);
    if (auto* g = std::get_if<NcssInstance>(&any)) return std::move(*g);
    throw SchemaError("expected an \"ncss\" instance");
}

std::string serialize_instance(const TapInstance& inst) {
    json j;
    j["kind"] = "tap";
    j["n"] = inst.n;
    j["tree_edges"] = json::array();
    for (auto [a, b] : inst.tree_edges) j["tree_edges"].push_back({a, b});
    j["links"] = json::array();
    for (const Link& l : inst.links)
        j["links"].push_back({{"u", l.u}, {"v", l.v}, {"cost", cost_to_json(l.cost)}});
    if (!inst.labels.empty()) j["labels"] = inst.labels;
    return j.dump();
}

std::string serialize_instance(const NcssInstance& inst) {
    json j;
    j["kind"] = "ncss";
    j["n"] = inst.n;
    j["edges"] = json::array();
    for (const Edge& e : inst.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"cost", cost_to_json(e.cost)}});
    if (!inst.labels.empty()) j["labels"] = inst.labels;
    return j.dump();
}

namespace {

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

}  // namespace

std::string instance_digest(const TapInstance& inst) {
    return fnv1a64_hex(serialize_instance(inst));
}

std::string instance_digest(const NcssInstance& inst) {
    return fnv1a64_hex(serialize_instance(inst));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

}  // namespace tap
