#pragma once

#include <cstdint>

#include "hrg/clique_tree.hpp"
#include "hrg/hypergraph.hpp"
#include "hrg/rng.hpp"

namespace hrg::testing {

Hypergraph path_graph(std::uint32_t n);
Hypergraph cycle_graph(std::uint32_t n);
Hypergraph complete_graph(std::uint32_t n);
Hypergraph star_graph(std::uint32_t leaves);

/// Uniform random spanning tree (random attachment), n >= 1.
Hypergraph random_tree(std::uint32_t n, Rng& rng);

/// Connected random graph: random spanning tree plus `extra` distinct random
/// edges.
Hypergraph random_connected(std::uint32_t n, std::uint32_t extra, Rng& rng);

/// Random chordal graph built by adding each new vertex adjacent to a random
/// clique among the previous vertices.
Hypergraph random_chordal(std::uint32_t n, std::uint32_t max_clique, Rng& rng);

/// Six-vertex running fixture (a..f = 0..5): two triangles a-b-e and b-c-e
/// sharing an edge, plus the chordless square c-d / d-f / e-f / c-e closed
/// through e. Decomposes into bags {c,d,e}, {d,e,f}, {b,c,e}, {a,b,e}.
Hypergraph six_node_example();

/// Hand-assembled clique tree over the six-node example matching the shape
/// used in the rule-shape tests: root {c,d,e} with an interior child
/// {d,e,f} -> leaf {e,f} chain on the right and a 3-ary chain
/// {b,c,d,e} -> leaf {a,b,e} on the left. Satisfies the clique-tree
/// properties without its bags being maximal cliques.
CliqueTree six_node_handbuilt_tree();

/// Synthetic sparse protein-interaction-like graph: preferential attachment
/// with occasional extra edges, deterministic in the seed. Connected.
Hypergraph synthetic_ppi(std::uint32_t n, double edges_per_vertex, std::uint64_t seed);

} // namespace hrg::testing
