#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "hrg/grammar.hpp"
#include "hrg/hypergraph.hpp"
#include "hrg/size_table.hpp"

namespace hrg {

struct GenerateOptions {
    /// Collapse duplicate terminal edges (external fusion can duplicate an
    /// edge) so the output is simple.
    bool simplify = true;
    /// Rule-application cap; 0 picks a default (50 * n_target when a target
    /// size exists, otherwise 50000).
    std::uint64_t step_cap = 0;
};

/// Working hypergraph of a derivation in progress: terminal edges accumulated
/// so far plus live nonterminal edges, each addressable by a stable handle.
/// Starts as H' = {S}, a single rank-0 nonterminal.
class DerivationState {
public:
    DerivationState();

    std::size_t vertex_count() const { return n_; }
    std::uint64_t steps() const { return steps_; }
    std::size_t live_count() const { return live_count_; }
    bool has_live() const { return live_count_ > 0; }

    /// Oldest live nonterminal edge (FIFO).
    std::uint64_t front_live() const;
    std::uint32_t live_rank(std::uint64_t handle) const;

    /// Replaces the live edge with an isomorphic copy of p's RHS: external
    /// vertex i fuses with attachment i of the edge, internal vertices get
    /// fresh ids. Returns handles of the created nonterminal edges, in the
    /// production's edge order. Throws ArgumentError on rank mismatch or a
    /// dead handle.
    std::vector<std::uint64_t> apply_rule(std::uint64_t handle, const Production& p);

    /// Terminal-only result; requires no live nonterminals remain.
    Hypergraph finish(bool simplify) const;

private:
    struct LiveEdge {
        std::vector<VertexId> attachments;
        std::uint32_t rank = 0;
        bool alive = false;
    };

    std::vector<LiveEdge> edges_;
    mutable std::deque<std::uint64_t> queue_; // dead heads popped lazily
    std::vector<EdgePair> terminal_;
    std::size_t n_ = 0;
    std::uint64_t steps_ = 0;
    std::size_t live_count_ = 0;
};

/// Replays a recorded extraction: rules are applied in trace order, each
/// consuming the nonterminal edge created for the corresponding clique-tree
/// child slot. The result is isomorphic to the extracted graph. Throws
/// GenerationError on grammar/trace mismatch.
Hypergraph exact_generate(const Grammar& g, const DerivationTrace& trace);

/// Unconstrained stochastic derivation: pop the oldest live nonterminal,
/// sample a matching-rank family with probability proportional to its count,
/// apply, repeat. Throws GenerationError when the step cap is exceeded
/// (caller may retry with another seed).
Hypergraph stochastic_generate(const Grammar& g, std::uint64_t seed,
                               const GenerateOptions& opts = {});

enum class SizeMode { exact, approximate };

/// Exact-size sampler: draws a derivation with probability proportional to
/// its rule-count weight conditioned on the total internal-vertex count being
/// exactly n_target, by sampling rules and child-budget splits top-down from
/// the size table. table.n_max() must be >= n_target. If derivation_log is
/// non-null it receives the applied signatures in application order.
Hypergraph size_constrained_generate(const Grammar& g, const SizeTable& table,
                                     std::uint32_t n_target, std::uint64_t seed,
                                     const GenerateOptions& opts = {},
                                     std::vector<Signature>* derivation_log = nullptr);

/// Approximate-size sampler: steers rule choice by the count-weighted
/// expected completed size per rank and accepts outputs within +-5% of
/// n_target. Linear time and space; retries internally before giving up.
Hypergraph approximate_size_generate(const Grammar& g, std::uint32_t n_target,
                                     std::uint64_t seed, const GenerateOptions& opts = {});

/// Mode dispatcher; builds a size table on demand in exact mode.
Hypergraph size_constrained_generate(const Grammar& g, std::uint32_t n_target, SizeMode mode,
                                     std::uint64_t seed, const GenerateOptions& opts = {});

/// Message helper: nearest feasible sizes around an infeasible target.
std::string describe_feasible_sizes(const SizeTable& table, std::uint32_t n_target);

} // namespace hrg
