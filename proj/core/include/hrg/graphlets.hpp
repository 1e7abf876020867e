#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

/// Orbits of the connected 2-4 vertex graphlets, standard numbering:
///   0 edge; 1 path-3 end; 2 path-3 center; 3 triangle;
///   4 path-4 end; 5 path-4 interior; 6 claw leaf; 7 claw center;
///   8 4-cycle; 9 paw tail; 10 paw triangle (far); 11 paw triangle (attach);
///   12 diamond degree-2; 13 diamond degree-3; 14 4-clique.
inline constexpr std::size_t kOrbitCount = 15;

/// The 11 non-redundant orbits used for graphlet correlations; the dropped
/// four (3, 12, 13, 14) are linear combinations of these.
inline constexpr std::array<std::uint32_t, 11> kCorrelationOrbits{0, 1, 2, 4,  5, 6,
                                                                  7, 8, 9, 10, 11};

/// Per-vertex graphlet orbit degrees. Column 0 equals the degree sequence.
struct OrbitMatrix {
    std::size_t vertex_count = 0;
    std::vector<std::array<std::uint64_t, kOrbitCount>> rows;
};

/// Exact per-vertex orbit counts via neighborhood enumeration with
/// combinatorial corrections (no 4-subset enumeration). Requires a simple
/// graph.
OrbitMatrix orbit_counts(const Hypergraph& g);

using CorrelationMatrix =
    std::array<std::array<double, kCorrelationOrbits.size()>, kCorrelationOrbits.size()>;

/// Spearman rank correlations between orbit columns, computed over the
/// vertex rows plus one all-ones stabilizer row. Columns with zero rank
/// variance correlate as 0.
CorrelationMatrix graphlet_correlations(const OrbitMatrix& m);

struct GcdResult {
    double distance = 0.0;
    CorrelationMatrix first{};
    CorrelationMatrix second{};
};

/// Graphlet correlation distance: Euclidean norm of the difference of the
/// strict upper triangles of the two correlation matrices. Zero for
/// isomorphic inputs.
GcdResult gcd(const Hypergraph& a, const Hypergraph& b);

} // namespace hrg
