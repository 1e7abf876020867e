#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hrg {

using VertexId = std::uint32_t;
using EdgePair = std::pair<VertexId, VertexId>;

/// An edge of a hypergraph. Terminal edges are undirected pairs (endpoints
/// normalized to min,max). Nonterminal edges carry an ordered attachment
/// list whose length equals the nonterminal's rank; rank 0 is reserved for
/// the start symbol and has no endpoints.
struct Edge {
    std::vector<VertexId> endpoints;
    std::int32_t nt_rank = -1; // -1: terminal, otherwise the nonterminal rank

    bool terminal() const { return nt_rank < 0; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(nt_rank); }
};

Edge terminal_edge(VertexId u, VertexId v);
Edge nonterminal_edge(std::vector<VertexId> endpoints);

/// Universal graph container: input graphs, grammar RHS fragments, and
/// generated graphs. Vertices are dense ids 0..n-1. Immutable after
/// construction and safe to share across threads. A CSR adjacency over the
/// terminal edges is built eagerly.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Simple undirected graph: drops self-loops, collapses duplicate pairs.
    static Hypergraph simple(std::size_t n, std::span<const EdgePair> pairs);

    /// Terminal multigraph; keeps duplicates (used when a generated graph is
    /// requested without simplification).
    static Hypergraph multigraph(std::size_t n, std::span<const EdgePair> pairs);

    /// General constructor; throws InternalError on invariant violations
    /// (endpoint out of range, self-loop, duplicate terminal edge, arity
    /// mismatch).
    static Hypergraph make(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t terminal_edge_count() const { return terminal_count_; }
    std::size_t nonterminal_edge_count() const { return edges_.size() - terminal_count_; }
    bool all_terminal() const { return terminal_count_ == edges_.size(); }

    /// Sorted terminal-edge neighbors of v. Duplicates appear only for
    /// multigraphs.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::uint32_t degree(VertexId v) const;
    std::uint32_t max_degree() const;
    bool has_terminal_edge(VertexId u, VertexId v) const;

    /// Original vertex labels from file ingestion; empty when the graph was
    /// built programmatically.
    const std::vector<std::uint64_t>& original_labels() const { return labels_; }
    void set_original_labels(std::vector<std::uint64_t> labels);

private:
    void build_adjacency();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::size_t terminal_count_ = 0;
    std::vector<std::uint32_t> adj_offsets_;
    std::vector<VertexId> adj_;
    std::vector<std::uint64_t> labels_;
};

bool is_connected(const Hypergraph& g);

/// Vertex sets of connected components (terminal edges only), each sorted.
std::vector<std::vector<VertexId>> connected_components(const Hypergraph& g);

/// Vertices of the largest component; ties broken toward the component with
/// the smallest vertex id.
std::vector<VertexId> largest_component(const Hypergraph& g);

/// Node-induced subgraph. `keep` must be sorted ascending; vertex i of the
/// result is keep[i]. Original labels are carried over when present.
Hypergraph induced_subgraph(const Hypergraph& g, std::span<const VertexId> keep);

std::vector<std::uint32_t> degree_sequence(const Hypergraph& g);
std::uint64_t triangle_count(const Hypergraph& g);

/// Structural fingerprint used as a cheap isomorphism-invariant summary:
/// (n, m, sorted degree sequence, triangle count).
struct GraphFingerprint {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::vector<std::uint32_t> sorted_degrees;
    std::uint64_t triangles = 0;

    bool operator==(const GraphFingerprint&) const = default;
};
GraphFingerprint fingerprint(const Hypergraph& g);

} // namespace hrg
