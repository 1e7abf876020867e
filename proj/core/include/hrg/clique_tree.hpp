#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

/// Vertex ordering from maximum cardinality search. order[0] is the first
/// vertex visited (numbered highest, eliminated last). width_achieved is
/// max bag size - 1; it is filled in by triangulate().
struct EliminationOrder {
    std::vector<VertexId> order;
    std::uint32_t width_achieved = 0;
};

/// Maximum cardinality search: repeatedly pick the unnumbered vertex with the
/// most numbered neighbors, ties toward the smallest vertex id. O((n+m) log n).
EliminationOrder mcs_order(const Hypergraph& g);

struct Triangulation {
    Hypergraph chordal;
    std::uint32_t width = 0;
    std::size_t fill_edges = 0;
};

/// Elimination-game fill-in: processing vertices in reverse visit order, each
/// vertex's higher-numbered neighbors are made pairwise adjacent. The result
/// is chordal; order.width_achieved is set as a side effect.
Triangulation triangulate(const Hypergraph& g, EliminationOrder& order);

struct CliqueTreeNode {
    std::vector<VertexId> bag;                // sorted
    std::vector<EdgePair> assigned_edges;     // sorted, normalized pairs
    std::int32_t parent = -1;
    std::vector<std::int32_t> children;       // ascending node index
    std::uint32_t depth = 0;
};

/// Rooted clique tree. Nodes are the maximal cliques of a triangulation;
/// every original edge is assigned to exactly one node whose bag contains
/// both endpoints.
struct CliqueTree {
    std::vector<CliqueTreeNode> nodes;
    std::int32_t root = -1;

    std::uint32_t width() const;
    std::size_t leaf_count() const;
    std::size_t assigned_edge_total() const;
    /// Debug dump: JSON list of {id, parent, bag, assigned_edges}.
    std::string to_json() const;
};

/// Assembles the clique tree:
///   - nodes = maximal cliques of `chordal`
///   - tree edges = maximum-weight spanning tree on bag-intersection sizes
///     (ties toward the lexicographically smallest (min index, max index)),
///     which guarantees running intersection
///   - root = the highest-cardinality clique containing order.order[0]
///   - each edge of g assigned to the bag nearest the root that contains both
///     endpoints, ties toward the smallest node index.
/// Throws InternalError if the result fails validation.
CliqueTree build_clique_tree(const Hypergraph& g, const Hypergraph& chordal,
                             const EliminationOrder& order);

struct ValidationReport {
    bool vertex_cover = true;
    bool edge_cover = true;
    bool running_intersection = true;
    std::vector<std::string> failures;

    bool ok() const { return vertex_cover && edge_cover && running_intersection; }
};

/// Checks the three clique-tree properties against g, reporting a
/// counterexample message per violation.
ValidationReport validate_clique_tree(const Hypergraph& g, const CliqueTree& t);

struct Decomposition {
    EliminationOrder order;
    Hypergraph chordal;
    CliqueTree tree;
};

/// mcs_order + triangulate + build_clique_tree in one step.
Decomposition decompose(const Hypergraph& g);

} // namespace hrg
