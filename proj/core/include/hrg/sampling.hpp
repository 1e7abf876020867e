#pragma once

#include <cstdint>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

/// Parameters for BFS subgraph sampling.
struct SampleSpec {
    std::uint32_t k = 4;   // number of samples
    std::uint32_t s = 500; // vertices per sample
    std::uint64_t seed = 0;
};

/// Draws k node-induced subgraphs. Each sample takes the first min(s, n)
/// vertices of a BFS from a uniformly random start vertex (neighbors visited
/// in ascending id order), so every sample is connected. Samples may overlap;
/// starts are independent. Deterministic in spec.seed.
///
/// Requires a connected input and k, s >= 1.
std::vector<Hypergraph> bfs_sample(const Hypergraph& g, const SampleSpec& spec);

} // namespace hrg
