#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrg/clique_tree.hpp"
#include "hrg/hypergraph.hpp"

namespace hrg {

/// Nonterminal reference on a production RHS: an ordered attachment list.
/// Endpoint i of the edge fuses with external vertex i of any replacing rule.
struct NtRef {
    std::uint32_t rank = 0;
    std::vector<VertexId> endpoints;

    bool operator==(const NtRef&) const = default;
};

/// One HRG production A -> R. RHS vertices are 0..vertex_count-1; the first
/// lhs_rank of them are the external vertices (vertex i carries external
/// number i+1), the rest are internal. A terminal rule has no nonterminal
/// edges.
struct Production {
    std::uint32_t lhs_rank = 0;
    std::uint32_t vertex_count = 0;
    std::vector<EdgePair> terminal_edges;   // normalized (min,max)
    std::vector<NtRef> nonterminal_edges;

    std::uint32_t internal_count() const { return vertex_count - lhs_rank; }
    bool is_terminal() const { return nonterminal_edges.empty(); }
    bool operator==(const Production&) const = default;

    /// Throws InternalError when structurally malformed.
    void validate() const;
};

/// Canonical textual form of a production; equal strings iff the RHSs are
/// isomorphic under a relabeling that fixes every numbered external vertex.
using Signature = std::string;

struct Canonical {
    Production production;                // relabeled to canonical ids
    std::vector<VertexId> vertex_map;     // input RHS id -> canonical id
    std::vector<std::uint32_t> nt_edge_map; // input NT index -> canonical NT index
    Signature signature;
};

/// Degree-and-label refinement followed by a backtracking canonical ordering
/// of the internal vertices (externals pinned).
Canonical canonicalize(const Production& p);
Signature canonical_signature(const Production& p);

struct RuleFamily {
    Production production; // canonical form
    std::uint64_t count = 0;
};

/// Canonicalized multiset of productions with occurrence counts. Iteration
/// order is insertion order, so serialization is deterministic.
class Grammar {
public:
    struct SourceInfo {
        std::uint64_t vertices = 0;
        std::uint64_t edges = 0;
        std::uint64_t samples = 0;
    };

    void add(const Production& canonical_form, const Signature& sig, std::uint64_t count);

    std::size_t family_count() const { return families_.size(); }
    const RuleFamily& family(std::size_t i) const { return families_[i]; }
    const Signature& signature(std::size_t i) const { return signatures_[i]; }

    /// Index of the family with this signature, or npos.
    std::size_t find(const Signature& sig) const;
    static constexpr std::size_t npos = SIZE_MAX;

    /// Families whose LHS has the given rank, in insertion order.
    std::span<const std::uint32_t> families_of_rank(std::uint32_t rank) const;
    std::uint64_t rank_total(std::uint32_t rank) const;
    std::uint32_t max_rank() const;

    std::uint64_t total_occurrences() const { return total_; }
    std::size_t start_family_count() const;

    SourceInfo source;

private:
    std::vector<RuleFamily> families_;
    std::vector<Signature> signatures_;
    std::unordered_map<Signature, std::size_t> index_;
    std::vector<std::vector<std::uint32_t>> by_rank_;
    std::vector<std::uint64_t> rank_totals_;
    std::uint64_t total_ = 0;
};

/// One rule application in extraction (DFS preorder over the clique tree).
/// child_slots[j] is the index, within the canonical production's
/// nonterminal-edge list, of the edge corresponding to the j-th child
/// visited.
struct TraceEntry {
    std::int32_t node = -1;
    Signature signature;
    std::vector<std::uint32_t> child_slots;
};

/// Rule sequence sufficient to replay exact generation. Length equals the
/// number of clique-tree nodes.
struct DerivationTrace {
    std::vector<TraceEntry> entries;
};

/// Production for one clique-tree node, in literal (pre-canonical) form.
/// Externals are the vertices shared with the parent bag, numbered in
/// ascending vertex order; nonterminal edges appear in child order with
/// ascending-id attachment lists.
Production extract_rule(const CliqueTree& t, std::int32_t node);

/// Extracts one rule per tree node top-down, canonicalizes, merges
/// duplicates with counts, and records the traversal.
std::pair<Grammar, DerivationTrace> extract_from_tree(const Hypergraph& g, const CliqueTree& t);

/// Full pipeline: clique tree via MCS, then extract_from_tree.
std::pair<Grammar, DerivationTrace> extract_grammar(const Hypergraph& g);

/// Union of rule families; counts summed per signature. Source vertex/edge
/// metadata is taken from the first grammar, sample counts are summed.
Grammar merge_grammars(std::span<const Grammar> gs);

void save_grammar(const Grammar& g, const std::string& path);
Grammar load_grammar(const std::string& path);

void save_traces(std::span<const DerivationTrace> traces, const std::string& path);
std::vector<DerivationTrace> load_traces(const std::string& path);

} // namespace hrg
