#include <algorithm>
#include <map>
#include <sstream>

#include "hrg/error.hpp"
#include "hrg/grammar.hpp"

// Canonical form of a production RHS. External vertices are pinned to their
// numbers; internal vertices receive canonical ids by searching, over
// refinement-class-respecting placements, for the lexicographically smallest
// edge encoding. Refinement plus twin pruning keeps the search tiny for the
// bag-sized graphs produced by extraction.

namespace hrg {

namespace {

struct VertexInfo {
    std::vector<VertexId> tnbrs;          // terminal neighbors
    std::vector<std::uint32_t> nt_edges;  // indices into production NT list
};

using Colors = std::vector<std::uint32_t>;

// One refinement round; externals keep colors 0..r-1, internals get colors
// >= r ordered by descriptor. Returns true when the partition changed.
bool refine_round(const Production& p, const std::vector<VertexInfo>& info, Colors& color) {
    const std::uint32_t r = p.lhs_rank;
    using Descriptor = std::vector<std::uint32_t>;
    std::vector<std::pair<Descriptor, VertexId>> rows;
    rows.reserve(p.vertex_count - r);

    for (VertexId v = r; v < p.vertex_count; ++v) {
        Descriptor d;
        d.push_back(color[v]);
        std::vector<std::uint32_t> nb;
        for (VertexId u : info[v].tnbrs) nb.push_back(color[u]);
        std::sort(nb.begin(), nb.end());
        d.push_back(static_cast<std::uint32_t>(nb.size()));
        d.insert(d.end(), nb.begin(), nb.end());

        std::vector<Descriptor> nts;
        for (std::uint32_t ei : info[v].nt_edges) {
            const NtRef& e = p.nonterminal_edges[ei];
            Descriptor t{e.rank};
            for (std::size_t pos = 0; pos < e.endpoints.size(); ++pos) {
                t.push_back(e.endpoints[pos] == v ? UINT32_MAX : color[e.endpoints[pos]]);
            }
            nts.push_back(std::move(t));
        }
        std::sort(nts.begin(), nts.end());
        for (const auto& t : nts) {
            d.insert(d.end(), t.begin(), t.end());
            d.push_back(UINT32_MAX - 1); // separator
        }
        rows.emplace_back(std::move(d), v);
    }

    std::sort(rows.begin(), rows.end());
    Colors next = color;
    std::uint32_t next_color = r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].first != rows[i - 1].first) ++next_color;
        next[rows[i].second] = next_color;
    }
    const bool changed = next != color;
    color = std::move(next);
    return changed;
}

// True when swapping a and b (both internal) is an automorphism of the RHS.
bool is_twin(const Production& p, VertexId a, VertexId b) {
    auto swap_id = [&](VertexId v) { return v == a ? b : (v == b ? a : v); };

    std::vector<EdgePair> t1(p.terminal_edges), t2;
    t2.reserve(t1.size());
    for (const auto& [u, v] : p.terminal_edges) {
        VertexId x = swap_id(u), y = swap_id(v);
        t2.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    if (t1 != t2) return false;

    std::vector<std::vector<VertexId>> n1, n2;
    for (const auto& e : p.nonterminal_edges) {
        std::vector<VertexId> orig{e.rank};
        std::vector<VertexId> swapped{e.rank};
        for (VertexId v : e.endpoints) {
            orig.push_back(v);
            swapped.push_back(swap_id(v));
        }
        n1.push_back(std::move(orig));
        n2.push_back(std::move(swapped));
    }
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    return n1 == n2;
}

class CanonicalSearch {
public:
    CanonicalSearch(const Production& p, const std::vector<VertexInfo>& info,
                    std::vector<std::vector<VertexId>> classes)
        : p_(p), info_(info), classes_(std::move(classes)) {
        canon_.assign(p.vertex_count, UINT32_MAX);
        for (VertexId v = 0; v < p.lhs_rank; ++v) canon_[v] = v;
        nt_placed_.assign(p.nonterminal_edges.size(), 0);
        for (std::size_t ei = 0; ei < p.nonterminal_edges.size(); ++ei) {
            for (VertexId v : p.nonterminal_edges[ei].endpoints)
                if (v < p.lhs_rank) ++nt_placed_[ei];
        }
        internal_total_ = p.vertex_count - p.lhs_rank;
    }

    std::vector<VertexId> run() {
        // Preamble: NT edges living entirely on externals are constant across
        // placements and need no search.
        placement_.reserve(internal_total_);
        descend(0, 0, internal_total_ == 0);
        if (!have_best_ && internal_total_ > 0)
            throw InternalError("canonicalize: search found no placement");
        return best_placement_;
    }

private:
    using Stream = std::vector<std::uint32_t>;

    // -1: cur < best so far, 0: equal, +1 handled by pruning.
    void descend(std::size_t class_idx, int cmp, bool at_leaf) {
        if (at_leaf) {
            if (!have_best_ || cmp < 0) {
                best_ = cur_;
                best_placement_ = placement_;
                have_best_ = true;
            }
            return;
        }
        while (class_idx < classes_.size() && classes_[class_idx].empty()) ++class_idx;
        auto& cls = classes_[class_idx];

        std::vector<VertexId> candidates;
        for (VertexId v : cls) {
            bool dup = false;
            for (VertexId kept : candidates) {
                if (is_twin(p_, kept, v)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) candidates.push_back(v);
        }

        for (VertexId v : candidates) {
            const std::size_t mark = cur_.size();
            const auto q = static_cast<VertexId>(p_.lhs_rank + placement_.size());

            // chunk: sorted placed terminal partners, then NT edges completed
            // by this placement.
            canon_[v] = q;
            std::vector<std::uint32_t> partners;
            for (VertexId u : info_[v].tnbrs)
                if (canon_[u] != UINT32_MAX && u != v) partners.push_back(canon_[u]);
            std::sort(partners.begin(), partners.end());
            cur_.push_back(static_cast<std::uint32_t>(partners.size()));
            cur_.insert(cur_.end(), partners.begin(), partners.end());

            std::vector<Stream> completed;
            std::vector<std::uint32_t> touched;
            for (std::uint32_t ei : info_[v].nt_edges) {
                ++nt_placed_[ei];
                touched.push_back(ei);
                const NtRef& e = p_.nonterminal_edges[ei];
                if (nt_placed_[ei] == e.rank) {
                    Stream s{e.rank};
                    for (VertexId u : e.endpoints) s.push_back(canon_[u]);
                    completed.push_back(std::move(s));
                }
            }
            std::sort(completed.begin(), completed.end());
            cur_.push_back(static_cast<std::uint32_t>(completed.size()));
            for (const auto& s : completed) cur_.insert(cur_.end(), s.begin(), s.end());

            int next_cmp = cmp;
            if (have_best_ && next_cmp == 0) {
                for (std::size_t i = mark; i < cur_.size() && next_cmp == 0; ++i) {
                    if (i >= best_.size() || cur_[i] > best_[i]) next_cmp = 1;
                    else if (cur_[i] < best_[i]) next_cmp = -1;
                }
            }
            if (next_cmp <= 0) {
                placement_.push_back(v);
                std::erase(cls, v);
                descend(class_idx, next_cmp, placement_.size() == internal_total_);
                cls.insert(std::lower_bound(cls.begin(), cls.end(), v), v);
                placement_.pop_back();
            }

            cur_.resize(mark);
            canon_[v] = UINT32_MAX;
            for (std::uint32_t ei : touched) --nt_placed_[ei];
        }
    }

    const Production& p_;
    const std::vector<VertexInfo>& info_;
    std::vector<std::vector<VertexId>> classes_;
    std::vector<std::uint32_t> canon_;
    std::vector<std::uint32_t> nt_placed_;
    std::size_t internal_total_ = 0;
    std::vector<VertexId> placement_;
    Stream cur_, best_;
    std::vector<VertexId> best_placement_;
    bool have_best_ = false;
};

Signature serialize(const Production& p) {
    std::ostringstream out;
    out << "R" << p.lhs_rank << "|V" << p.vertex_count << "|T";
    for (std::size_t i = 0; i < p.terminal_edges.size(); ++i) {
        if (i) out << ",";
        out << p.terminal_edges[i].first << "-" << p.terminal_edges[i].second;
    }
    out << "|N";
    for (std::size_t i = 0; i < p.nonterminal_edges.size(); ++i) {
        if (i) out << ",";
        out << p.nonterminal_edges[i].rank << ":";
        for (std::size_t j = 0; j < p.nonterminal_edges[i].endpoints.size(); ++j) {
            if (j) out << ".";
            out << p.nonterminal_edges[i].endpoints[j];
        }
    }
    return out.str();
}

} // namespace

Canonical canonicalize(const Production& input) {
    Production p = input;
    p.validate();
    for (auto& [u, v] : p.terminal_edges)
        if (u > v) std::swap(u, v);

    std::vector<VertexInfo> info(p.vertex_count);
    for (const auto& [u, v] : p.terminal_edges) {
        info[u].tnbrs.push_back(v);
        info[v].tnbrs.push_back(u);
    }
    for (auto& vi : info) std::sort(vi.tnbrs.begin(), vi.tnbrs.end());
    for (std::size_t ei = 0; ei < p.nonterminal_edges.size(); ++ei)
        for (VertexId v : p.nonterminal_edges[ei].endpoints)
            info[v].nt_edges.push_back(static_cast<std::uint32_t>(ei));

    Colors color(p.vertex_count, 0);
    for (VertexId v = 0; v < p.lhs_rank; ++v) color[v] = v;
    for (VertexId v = p.lhs_rank; v < p.vertex_count; ++v) color[v] = p.lhs_rank;
    for (std::uint32_t round = 0; round < p.vertex_count + 1; ++round)
        if (!refine_round(p, info, color)) break;

    std::map<std::uint32_t, std::vector<VertexId>> by_color;
    for (VertexId v = p.lhs_rank; v < p.vertex_count; ++v) by_color[color[v]].push_back(v);
    std::vector<std::vector<VertexId>> classes;
    for (auto& [c, members] : by_color) classes.push_back(std::move(members));

    CanonicalSearch search(p, info, std::move(classes));
    std::vector<VertexId> placement = search.run();

    Canonical result;
    result.vertex_map.assign(p.vertex_count, 0);
    for (VertexId v = 0; v < p.lhs_rank; ++v) result.vertex_map[v] = v;
    for (std::size_t i = 0; i < placement.size(); ++i)
        result.vertex_map[placement[i]] = static_cast<VertexId>(p.lhs_rank + i);

    Production canon;
    canon.lhs_rank = p.lhs_rank;
    canon.vertex_count = p.vertex_count;
    for (const auto& [u, v] : p.terminal_edges) {
        VertexId a = result.vertex_map[u], b = result.vertex_map[v];
        canon.terminal_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.terminal_edges.begin(), canon.terminal_edges.end());

    // Relabel NT edges (attachment order preserved), then order the list by
    // (rank, endpoints); duplicates keep their original relative order.
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> keyed;
    for (std::size_t ei = 0; ei < p.nonterminal_edges.size(); ++ei) {
        const NtRef& e = p.nonterminal_edges[ei];
        std::vector<std::uint32_t> key{e.rank};
        for (VertexId v : e.endpoints) key.push_back(result.vertex_map[v]);
        keyed.emplace_back(std::move(key), static_cast<std::uint32_t>(ei));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    result.nt_edge_map.assign(keyed.size(), 0);
    for (std::size_t slot = 0; slot < keyed.size(); ++slot) {
        const auto& [key, orig] = keyed[slot];
        NtRef e;
        e.rank = key[0];
        e.endpoints.assign(key.begin() + 1, key.end());
        canon.nonterminal_edges.push_back(std::move(e));
        result.nt_edge_map[orig] = static_cast<std::uint32_t>(slot);
    }

    canon.validate();
    result.production = std::move(canon);
    result.signature = serialize(result.production);
    return result;
}

Signature canonical_signature(const Production& p) { return canonicalize(p).signature; }

} // namespace hrg
