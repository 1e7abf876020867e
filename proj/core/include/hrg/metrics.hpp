#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

struct DegreeDistribution {
    std::map<std::uint32_t, std::uint64_t> histogram; // degree -> vertex count
    std::uint64_t vertex_total = 0;
    std::uint64_t edge_total = 0;

    /// P(D >= d) per distinct degree, ascending d.
    std::vector<std::pair<std::uint32_t, double>> ccdf() const;
    /// Display-only tail MLE of the power-law exponent; nullopt when every
    /// degree is zero.
    std::optional<double> powerlaw_exponent() const;
};

DegreeDistribution degree_distribution(const Hypergraph& g);

struct CentralityResult {
    std::vector<double> scores; // unit Euclidean norm, nonnegative
    double eigenvalue = 0.0;
    double residual = 0.0; // ||Av - lambda v|| / lambda at return
    std::uint32_t iterations = 0;
    bool converged = true;
};

/// Power iteration on the adjacency operator (shifted by +I internally so
/// bipartite spectra converge; the shift leaves eigenvectors unchanged).
/// The residual is reported against the unshifted operator.
CentralityResult eigenvector_centrality(const Hypergraph& g, double tol = 1e-8,
                                        std::uint32_t max_iterations = 1000);

/// 1 - cosine similarity after sorting both score vectors descending and
/// zero-padding the shorter. Throws ArgumentError on a zero vector.
double centrality_cosine_distance(std::span<const double> a, std::span<const double> b);

struct HopPlot {
    /// cumulative_pairs[x] = number of (source, vertex) pairs with
    /// dist(source, vertex) <= x; index 0 counts the sources themselves.
    std::vector<std::uint64_t> cumulative_pairs;
    std::uint32_t sources = 0;
};

/// Complete BFS from min(num_sources, n) distinct uniformly random sources.
HopPlot hop_plot(const Hypergraph& g, std::uint32_t num_sources = 50, std::uint64_t seed = 0);

/// Percentile bootstrap over a sample of scalars: returns {lo, hi} for the
/// central `level` mass using `resamples` draws of the mean.
std::pair<double, double> bootstrap_mean_ci(std::span<const double> values, double level = 0.95,
                                            std::uint32_t resamples = 1000,
                                            std::uint64_t seed = 0);

} // namespace hrg
