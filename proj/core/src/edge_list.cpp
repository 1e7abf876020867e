#include "hrg/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hrg/error.hpp"

namespace hrg {

Hypergraph load_edge_list(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list: " + path);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t u = 0, v = 0;
        if (!(ls >> u >> v))
            throw IoError(path + ":" + std::to_string(lineno) + ": expected two integer ids");
        raw.emplace_back(u, v);
    }
    if (in.bad()) throw IoError("read failure on " + path);

    // Dense remap in ascending label order.
    std::vector<std::uint64_t> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::unordered_map<std::uint64_t, VertexId> to_dense;
    to_dense.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) to_dense[labels[i]] = static_cast<VertexId>(i);

    std::vector<EdgePair> pairs;
    pairs.reserve(raw.size());
    for (const auto& [u, v] : raw) pairs.emplace_back(to_dense[u], to_dense[v]);

    Hypergraph g = Hypergraph::simple(labels.size(), pairs);
    if (g.terminal_edge_count() == 0)
        throw IoError(path + ": no edges after cleaning");
    g.set_original_labels(std::move(labels));

    if (!is_connected(g)) {
        if (opts.strict_connected)
            throw ArgumentError(path + ": graph is disconnected (strict mode)");
        if (opts.largest_component) {
            auto keep = largest_component(g);
            std::sort(keep.begin(), keep.end());
            g = induced_subgraph(g, keep);
        }
    }
    return g;
}

void save_edge_list(const Hypergraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    const auto& labels = g.original_labels();
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        if (labels.empty())
            out << e.endpoints[0] << ' ' << e.endpoints[1] << '\n';
        else
            out << labels[e.endpoints[0]] << ' ' << labels[e.endpoints[1]] << '\n';
    }
    if (!out) throw IoError("write failure on " + path);
}

} // namespace hrg
