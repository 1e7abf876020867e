#include "hrg/grammar.hpp"

#include <algorithm>

#include "hrg/error.hpp"

namespace hrg {

void Production::validate() const {
    if (lhs_rank > vertex_count)
        throw InternalError("production: more externals than vertices");
    if (vertex_count == 0)
        throw InternalError("production: empty RHS");
    for (const auto& [u, v] : terminal_edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InternalError("production: terminal endpoint out of range");
        if (u == v) throw InternalError("production: terminal self-loop");
    }
    for (const auto& nt : nonterminal_edges) {
        if (nt.rank == 0 || nt.endpoints.size() != nt.rank)
            throw InternalError("production: nonterminal arity mismatch");
        std::vector<VertexId> s(nt.endpoints);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InternalError("production: nonterminal repeats an endpoint");
        for (VertexId v : nt.endpoints)
            if (v >= vertex_count)
                throw InternalError("production: nonterminal endpoint out of range");
    }
}

void Grammar::add(const Production& canonical_form, const Signature& sig, std::uint64_t count) {
    if (count == 0) throw ArgumentError("grammar: zero occurrence count");
    auto it = index_.find(sig);
    std::size_t slot;
    if (it != index_.end()) {
        slot = it->second;
        families_[slot].count += count;
    } else {
        slot = families_.size();
        families_.push_back({canonical_form, count});
        signatures_.push_back(sig);
        index_.emplace(sig, slot);
        const std::uint32_t rank = canonical_form.lhs_rank;
        if (by_rank_.size() <= rank) {
            by_rank_.resize(rank + 1);
            rank_totals_.resize(rank + 1, 0);
        }
        by_rank_[rank].push_back(static_cast<std::uint32_t>(slot));
    }
    rank_totals_[families_[slot].production.lhs_rank] += count;
    total_ += count;
}

std::size_t Grammar::find(const Signature& sig) const {
    auto it = index_.find(sig);
    return it == index_.end() ? npos : it->second;
}

std::span<const std::uint32_t> Grammar::families_of_rank(std::uint32_t rank) const {
    static const std::vector<std::uint32_t> empty;
    if (rank >= by_rank_.size()) return empty;
    return by_rank_[rank];
}

std::uint64_t Grammar::rank_total(std::uint32_t rank) const {
    return rank < rank_totals_.size() ? rank_totals_[rank] : 0;
}

std::uint32_t Grammar::max_rank() const {
    return by_rank_.empty() ? 0 : static_cast<std::uint32_t>(by_rank_.size() - 1);
}

std::size_t Grammar::start_family_count() const {
    return families_of_rank(0).size();
}

namespace {

std::vector<VertexId> sorted_intersection(const std::vector<VertexId>& a,
                                          const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

Production extract_rule(const CliqueTree& t, std::int32_t node) {
    if (node < 0 || static_cast<std::size_t>(node) >= t.nodes.size())
        throw ArgumentError("extract_rule: node out of range");
    const CliqueTreeNode& n = t.nodes[static_cast<std::size_t>(node)];

    std::vector<VertexId> externals; // ascending vertex order
    if (n.parent >= 0)
        externals = sorted_intersection(n.bag, t.nodes[static_cast<std::size_t>(n.parent)].bag);

    std::vector<VertexId> internals;
    std::set_difference(n.bag.begin(), n.bag.end(), externals.begin(), externals.end(),
                        std::back_inserter(internals));

    // Local ids: externals first (external i+1 is local id i), then internals,
    // both in ascending vertex order.
    std::unordered_map<VertexId, VertexId> local;
    local.reserve(n.bag.size());
    for (std::size_t i = 0; i < externals.size(); ++i)
        local[externals[i]] = static_cast<VertexId>(i);
    for (std::size_t i = 0; i < internals.size(); ++i)
        local[internals[i]] = static_cast<VertexId>(externals.size() + i);

    Production p;
    p.lhs_rank = static_cast<std::uint32_t>(externals.size());
    p.vertex_count = static_cast<std::uint32_t>(n.bag.size());
    for (const auto& [u, v] : n.assigned_edges) {
        VertexId a = local.at(u), b = local.at(v);
        p.terminal_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(p.terminal_edges.begin(), p.terminal_edges.end());

    for (std::int32_t child : n.children) {
        auto shared = sorted_intersection(n.bag, t.nodes[static_cast<std::size_t>(child)].bag);
        if (shared.empty())
            throw InternalError("extract_rule: empty parent/child intersection (running "
                                "intersection violated)");
        NtRef nt;
        nt.rank = static_cast<std::uint32_t>(shared.size());
        // Ascending original-vertex order matches the child's external
        // numbering, so endpoint i fuses with the child rule's external i+1.
        for (VertexId v : shared) nt.endpoints.push_back(local.at(v));
        p.nonterminal_edges.push_back(std::move(nt));
    }
    p.validate();
    return p;
}

std::pair<Grammar, DerivationTrace> extract_from_tree(const Hypergraph& g, const CliqueTree& t) {
    Grammar grammar;
    DerivationTrace trace;
    if (t.root < 0) throw ArgumentError("extract_from_tree: tree has no root");

    std::vector<std::int32_t> stack{t.root};
    while (!stack.empty()) {
        std::int32_t node = stack.back();
        stack.pop_back();
        Production literal = extract_rule(t, node);
        Canonical canon = canonicalize(literal);
        grammar.add(canon.production, canon.signature, 1);

        TraceEntry entry;
        entry.node = node;
        entry.signature = canon.signature;
        entry.child_slots = canon.nt_edge_map;
        trace.entries.push_back(std::move(entry));

        const auto& children = t.nodes[static_cast<std::size_t>(node)].children;
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
    }

    if (trace.entries.size() != t.nodes.size())
        throw InternalError("extract_from_tree: trace length mismatch");
    if (grammar.start_family_count() != 1)
        throw InternalError("extract_from_tree: expected exactly one start rule family");

    grammar.source.vertices = g.vertex_count();
    grammar.source.edges = g.terminal_edge_count();
    grammar.source.samples = 1;
    return {std::move(grammar), std::move(trace)};
}

std::pair<Grammar, DerivationTrace> extract_grammar(const Hypergraph& g) {
    if (!is_connected(g)) throw ArgumentError("extract_grammar: graph must be connected");
    Decomposition d = decompose(g);
    return extract_from_tree(g, d.tree);
}

Grammar merge_grammars(std::span<const Grammar> gs) {
    Grammar merged;
    for (const Grammar& g : gs) {
        for (std::size_t i = 0; i < g.family_count(); ++i)
            merged.add(g.family(i).production, g.signature(i), g.family(i).count);
        merged.source.samples += g.source.samples;
    }
    if (!gs.empty()) {
        merged.source.vertices = gs.front().source.vertices;
        merged.source.edges = gs.front().source.edges;
    }
    return merged;
}

} // namespace hrg
