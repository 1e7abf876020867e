#include <fstream>

#include <json.hpp>

#include "hrg/error.hpp"
#include "hrg/grammar.hpp"

namespace hrg {

namespace {

using nlohmann::json;

json production_to_json(const Production& p, std::uint64_t count) {
    json rule;
    rule["lhs_rank"] = p.lhs_rank;
    rule["external_count"] = p.lhs_rank;
    rule["vertices"] = p.vertex_count;
    json terms = json::array();
    for (const auto& [u, v] : p.terminal_edges) terms.push_back({u, v});
    rule["terminal_edges"] = std::move(terms);
    json nts = json::array();
    for (const auto& nt : p.nonterminal_edges)
        nts.push_back({{"endpoints", nt.endpoints}, {"rank", nt.rank}});
    rule["nonterminal_edges"] = std::move(nts);
    rule["count"] = count;
    return rule;
}

Production production_from_json(const json& rule) {
    Production p;
    p.lhs_rank = rule.at("lhs_rank").get<std::uint32_t>();
    p.vertex_count = rule.at("vertices").get<std::uint32_t>();
    for (const auto& t : rule.at("terminal_edges"))
        p.terminal_edges.emplace_back(t.at(0).get<VertexId>(), t.at(1).get<VertexId>());
    for (const auto& nt : rule.at("nonterminal_edges")) {
        NtRef e;
        e.rank = nt.at("rank").get<std::uint32_t>();
        e.endpoints = nt.at("endpoints").get<std::vector<VertexId>>();
        p.nonterminal_edges.push_back(std::move(e));
    }
    return p;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

} // namespace

void save_grammar(const Grammar& g, const std::string& path) {
    json doc;
    doc["source"] = {{"vertices", g.source.vertices},
                     {"edges", g.source.edges},
                     {"samples", g.source.samples}};
    json rules = json::array();
    for (std::size_t i = 0; i < g.family_count(); ++i)
        rules.push_back(production_to_json(g.family(i).production, g.family(i).count));
    doc["rules"] = std::move(rules);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("write failure on " + path);
}

Grammar load_grammar(const std::string& path) {
    json doc = load_json_file(path);
    Grammar g;
    try {
        for (const auto& rule : doc.at("rules")) {
            Production p = production_from_json(rule);
            // Stored rules are canonical, but a hand-edited file may not be;
            // re-canonicalizing makes the signature authoritative either way.
            Canonical canon = canonicalize(p);
            g.add(canon.production, canon.signature, rule.at("count").get<std::uint64_t>());
        }
        if (doc.contains("source")) {
            g.source.vertices = doc["source"].value("vertices", 0ULL);
            g.source.edges = doc["source"].value("edges", 0ULL);
            g.source.samples = doc["source"].value("samples", 0ULL);
        }
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return g;
}

void save_traces(std::span<const DerivationTrace> traces, const std::string& path) {
    json doc;
    json list = json::array();
    for (const auto& trace : traces) {
        json entries = json::array();
        for (const auto& e : trace.entries)
            entries.push_back(
                {{"node", e.node}, {"signature", e.signature}, {"child_slots", e.child_slots}});
        list.push_back({{"entries", std::move(entries)}});
    }
    doc["traces"] = std::move(list);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("write failure on " + path);
}

std::vector<DerivationTrace> load_traces(const std::string& path) {
    json doc = load_json_file(path);
    std::vector<DerivationTrace> traces;
    try {
        for (const auto& t : doc.at("traces")) {
            DerivationTrace trace;
            for (const auto& e : t.at("entries")) {
                TraceEntry entry;
                entry.node = e.at("node").get<std::int32_t>();
                entry.signature = e.at("signature").get<std::string>();
                entry.child_slots = e.at("child_slots").get<std::vector<std::uint32_t>>();
                trace.entries.push_back(std::move(entry));
            }
            traces.push_back(std::move(trace));
        }
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return traces;
}

} // namespace hrg
