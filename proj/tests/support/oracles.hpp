#pragma once

// Independent reference implementations used to pin the library's semantics.
// Everything here is deliberately brute force and shares no code with the
// implementation paths it checks.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hrg/grammar.hpp"
#include "hrg/graphlets.hpp"
#include "hrg/hypergraph.hpp"
#include "hrg/size_table.hpp"

namespace hrg::testing {

/// Exact graph isomorphism by backtracking search with degree pruning.
/// Intended for graphs up to a few hundred vertices.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Orbit counts by exhaustive enumeration of all 2-4 vertex subsets.
OrbitMatrix brute_force_orbits(const Hypergraph& g);

/// Production equivalence by trying every bijection of internal vertices
/// (externals pinned). Internal count must be <= 9.
bool productions_isomorphic(const Production& a, const Production& b);

/// Chordality by induced-cycle enumeration (n <= 20).
bool is_chordal(const Hypergraph& g);

/// Minimal elimination width over all vertex orders (n <= 8).
std::uint32_t brute_force_min_width(const Hypergraph& g);

/// Weighted derivation counts per size by direct enumeration (no dynamic
/// programming); weights are products of family counts.
std::map<std::uint32_t, BigInt> enumerate_size_weights(const Grammar& g, std::uint32_t rank,
                                                       std::uint32_t n_max);

struct EnumeratedDerivation {
    std::string key; // preorder family signatures joined with '|'
    BigInt weight;
};

/// All derivations from the start symbol with exactly n_target internal
/// vertices. Throws if more than `limit` derivations exist.
std::vector<EnumeratedDerivation> enumerate_derivations(const Grammar& g, std::uint32_t n_target,
                                                        std::size_t limit);

/// Chi-squared goodness-of-fit p-value; cells with expected count below 5
/// are pooled. probabilities must sum to ~1.
double chi_square_gof_p(const std::vector<std::uint64_t>& observed,
                        const std::vector<double>& probabilities);

} // namespace hrg::testing
