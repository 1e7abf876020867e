#pragma once

#include <string>

#include "hrg/hypergraph.hpp"

namespace hrg {

struct LoadOptions {
    /// Keep only the largest connected component of the cleaned graph.
    bool largest_component = true;
    /// Error out instead when the cleaned graph is disconnected.
    bool strict_connected = false;
};

/// Reads a whitespace-separated edge list ("u v" per line, '#' comments;
/// SNAP-compatible). Self-loops are dropped and duplicate pairs collapsed.
/// Vertex labels are remapped to dense 0..n-1 in ascending label order; the
/// original labels are kept on the returned graph.
///
/// Throws IoError on unreadable/unparseable input or when no edges survive
/// cleaning; ArgumentError when strict_connected is set and the graph is
/// disconnected.
Hypergraph load_edge_list(const std::string& path, const LoadOptions& opts = {});

/// Writes the terminal edges, one "u v" per line. Original labels are used
/// when present, dense ids otherwise.
void save_edge_list(const Hypergraph& g, const std::string& path);

} // namespace hrg
