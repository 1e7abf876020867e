#include "hrg/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hrg/error.hpp"

namespace hrg {

Edge terminal_edge(VertexId u, VertexId v) {
    Edge e;
    e.endpoints = {std::min(u, v), std::max(u, v)};
    e.nt_rank = -1;
    return e;
}

Edge nonterminal_edge(std::vector<VertexId> endpoints) {
    Edge e;
    e.nt_rank = static_cast<std::int32_t>(endpoints.size());
    e.endpoints = std::move(endpoints);
    return e;
}

Hypergraph Hypergraph::simple(std::size_t n, std::span<const EdgePair> pairs) {
    std::vector<EdgePair> norm;
    norm.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u == v) continue; // self-loop
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    std::vector<Edge> edges;
    edges.reserve(norm.size());
    for (const auto& [u, v] : norm) edges.push_back(terminal_edge(u, v));
    return make(n, std::move(edges));
}

Hypergraph Hypergraph::multigraph(std::size_t n, std::span<const EdgePair> pairs) {
    Hypergraph g;
    g.n_ = n;
    for (const auto& [u, v] : pairs) {
        if (u >= n || v >= n)
            throw InternalError("multigraph: endpoint out of range");
        if (u == v) continue;
        g.edges_.push_back(terminal_edge(u, v));
    }
    g.terminal_count_ = g.edges_.size();
    g.build_adjacency();
    return g;
}

Hypergraph Hypergraph::make(std::size_t n, std::vector<Edge> edges) {
    Hypergraph g;
    g.n_ = n;

    std::vector<EdgePair> seen;
    for (auto& e : edges) {
        for (VertexId v : e.endpoints) {
            if (v >= n) throw InternalError("edge endpoint out of range");
        }
        if (e.terminal()) {
            if (e.endpoints.size() != 2)
                throw InternalError("terminal edge must have 2 endpoints");
            if (e.endpoints[0] == e.endpoints[1])
                throw InternalError("self-loop");
            if (e.endpoints[0] > e.endpoints[1])
                std::swap(e.endpoints[0], e.endpoints[1]);
            seen.emplace_back(e.endpoints[0], e.endpoints[1]);
            ++g.terminal_count_;
        } else {
            if (e.endpoints.size() != static_cast<std::size_t>(e.nt_rank))
                throw InternalError("nonterminal arity does not match rank");
            std::vector<VertexId> s(e.endpoints);
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InternalError("nonterminal edge repeats an endpoint");
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InternalError("duplicate terminal edge");

    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Hypergraph::build_adjacency() {
    std::vector<std::uint32_t> deg(n_, 0);
    for (const auto& e : edges_) {
        if (!e.terminal()) continue;
        ++deg[e.endpoints[0]];
        ++deg[e.endpoints[1]];
    }
    adj_offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_.resize(adj_offsets_[n_]);
    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : edges_) {
        if (!e.terminal()) continue;
        adj_[cursor[e.endpoints[0]]++] = e.endpoints[1];
        adj_[cursor[e.endpoints[1]]++] = e.endpoints[0];
    }
    for (std::size_t v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
}

std::span<const VertexId> Hypergraph::neighbors(VertexId v) const {
    return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::uint32_t Hypergraph::degree(VertexId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::uint32_t Hypergraph::max_degree() const {
    std::uint32_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<VertexId>(v)));
    return best;
}

bool Hypergraph::has_terminal_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Hypergraph::set_original_labels(std::vector<std::uint64_t> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw InternalError("label map size does not match vertex count");
    labels_ = std::move(labels);
}

namespace {

std::vector<std::int32_t> component_ids(const Hypergraph& g, std::size_t& count) {
    const std::size_t n = g.vertex_count();
    std::vector<std::int32_t> comp(n, -1);
    std::vector<VertexId> stack;
    count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const auto id = static_cast<std::int32_t>(count++);
        comp[s] = id;
        stack.push_back(static_cast<VertexId>(s));
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return comp;
}

} // namespace

bool is_connected(const Hypergraph& g) {
    if (g.vertex_count() == 0) return true;
    std::size_t count = 0;
    component_ids(g, count);
    return count == 1;
}

std::vector<std::vector<VertexId>> connected_components(const Hypergraph& g) {
    std::size_t count = 0;
    auto comp = component_ids(g, count);
    std::vector<std::vector<VertexId>> out(count);
    for (std::size_t v = 0; v < comp.size(); ++v)
        out[static_cast<std::size_t>(comp[v])].push_back(static_cast<VertexId>(v));
    return out;
}

std::vector<VertexId> largest_component(const Hypergraph& g) {
    auto comps = connected_components(g);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;
    return comps.empty() ? std::vector<VertexId>{} : comps[best];
}

Hypergraph induced_subgraph(const Hypergraph& g, std::span<const VertexId> keep) {
    if (!std::is_sorted(keep.begin(), keep.end()))
        throw InternalError("induced_subgraph: keep set must be sorted");
    std::vector<std::int64_t> remap(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<std::int64_t>(i);

    std::vector<EdgePair> pairs;
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        auto a = remap[e.endpoints[0]];
        auto b = remap[e.endpoints[1]];
        if (a >= 0 && b >= 0)
            pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    Hypergraph sub = Hypergraph::simple(keep.size(), pairs);
    if (!g.original_labels().empty()) {
        std::vector<std::uint64_t> labels(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) labels[i] = g.original_labels()[keep[i]];
        sub.set_original_labels(std::move(labels));
    }
    return sub;
}

std::vector<std::uint32_t> degree_sequence(const Hypergraph& g) {
    std::vector<std::uint32_t> deg(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(static_cast<VertexId>(v));
    return deg;
}

std::uint64_t triangle_count(const Hypergraph& g) {
    // Per-edge sorted-list intersection over higher-id neighbors.
    std::uint64_t total = 0;
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        auto nu = g.neighbors(e.endpoints[0]);
        auto nv = g.neighbors(e.endpoints[1]);
        const VertexId lo = std::max(e.endpoints[0], e.endpoints[1]);
        auto iu = std::upper_bound(nu.begin(), nu.end(), lo);
        auto iv = std::upper_bound(nv.begin(), nv.end(), lo);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) ++iu;
            else if (*iv < *iu) ++iv;
            else { ++total; ++iu; ++iv; }
        }
    }
    return total;
}

GraphFingerprint fingerprint(const Hypergraph& g) {
    GraphFingerprint f;
    f.vertices = g.vertex_count();
    f.edges = g.terminal_edge_count();
    f.sorted_degrees = degree_sequence(g);
    std::sort(f.sorted_degrees.begin(), f.sorted_degrees.end());
    f.triangles = triangle_count(g);
    return f;
}

} // namespace hrg
