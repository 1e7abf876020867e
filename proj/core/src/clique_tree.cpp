#include "hrg/clique_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hrg/error.hpp"

namespace hrg {

EliminationOrder mcs_order(const Hypergraph& g) {
    const std::size_t n = g.vertex_count();
    EliminationOrder result;
    result.order.reserve(n);

    // (-weight, id) set gives max weight with smallest-id tie-break at begin().
    std::set<std::pair<std::int64_t, VertexId>> frontier;
    std::vector<std::int64_t> weight(n, 0);
    std::vector<char> numbered(n, 0);
    for (std::size_t v = 0; v < n; ++v) frontier.emplace(0, static_cast<VertexId>(v));

    for (std::size_t step = 0; step < n; ++step) {
        auto [negw, v] = *frontier.begin();
        frontier.erase(frontier.begin());
        numbered[v] = 1;
        result.order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            if (numbered[w]) continue;
            frontier.erase({-weight[w], w});
            ++weight[w];
            frontier.emplace(-weight[w], w);
        }
    }
    return result;
}

namespace {

struct EliminationSweep {
    std::vector<std::vector<VertexId>> higher; // per visit index, sorted by id
    std::vector<EdgePair> fill;
    std::uint32_t width = 0;
};

// Runs the elimination game in reverse visit order and records each vertex's
// higher neighborhood in the filled graph.
EliminationSweep run_elimination(const Hypergraph& g, const EliminationOrder& order) {
    const std::size_t n = g.vertex_count();
    if (order.order.size() != n)
        throw ArgumentError("elimination order does not cover all vertices");

    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order.order[i]] = static_cast<std::uint32_t>(i);

    std::vector<std::unordered_set<VertexId>> adj(n);
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        adj[e.endpoints[0]].insert(e.endpoints[1]);
        adj[e.endpoints[1]].insert(e.endpoints[0]);
    }

    EliminationSweep sweep;
    sweep.higher.resize(n);
    for (std::size_t j = n; j-- > 0;) {
        const VertexId v = order.order[j];
        std::vector<VertexId>& h = sweep.higher[j];
        for (VertexId w : adj[v])
            if (pos[w] < j) h.push_back(w);
        std::sort(h.begin(), h.end());
        sweep.width = std::max<std::uint32_t>(sweep.width, static_cast<std::uint32_t>(h.size()));
        for (std::size_t a = 0; a < h.size(); ++a) {
            for (std::size_t b = a + 1; b < h.size(); ++b) {
                if (adj[h[a]].insert(h[b]).second) {
                    adj[h[b]].insert(h[a]);
                    sweep.fill.emplace_back(std::min(h[a], h[b]), std::max(h[a], h[b]));
                }
            }
        }
    }
    return sweep;
}

} // namespace

Triangulation triangulate(const Hypergraph& g, EliminationOrder& order) {
    EliminationSweep sweep = run_elimination(g, order);

    std::vector<EdgePair> pairs;
    pairs.reserve(g.terminal_edge_count() + sweep.fill.size());
    for (const auto& e : g.edges())
        if (e.terminal()) pairs.emplace_back(e.endpoints[0], e.endpoints[1]);
    pairs.insert(pairs.end(), sweep.fill.begin(), sweep.fill.end());

    Triangulation t;
    t.chordal = Hypergraph::simple(g.vertex_count(), pairs);
    t.width = sweep.width;
    t.fill_edges = sweep.fill.size();
    order.width_achieved = sweep.width;
    return t;
}

std::uint32_t CliqueTree::width() const {
    std::size_t best = 0;
    for (const auto& node : nodes) best = std::max(best, node.bag.size());
    return best == 0 ? 0 : static_cast<std::uint32_t>(best - 1);
}

std::size_t CliqueTree::leaf_count() const {
    std::size_t count = 0;
    for (const auto& node : nodes)
        if (node.children.empty()) ++count;
    return count;
}

std::size_t CliqueTree::assigned_edge_total() const {
    std::size_t total = 0;
    for (const auto& node : nodes) total += node.assigned_edges.size();
    return total;
}

std::string CliqueTree::to_json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        if (i) out << ",";
        out << "{\"id\":" << i << ",\"parent\":" << node.parent << ",\"bag\":[";
        for (std::size_t j = 0; j < node.bag.size(); ++j)
            out << (j ? "," : "") << node.bag[j];
        out << "],\"assigned_edges\":[";
        for (std::size_t j = 0; j < node.assigned_edges.size(); ++j) {
            if (j) out << ",";
            out << "[" << node.assigned_edges[j].first << "," << node.assigned_edges[j].second << "]";
        }
        out << "]}";
    }
    out << "]";
    return out.str();
}

CliqueTree build_clique_tree(const Hypergraph& g, const Hypergraph& chordal,
                             const EliminationOrder& order) {
    const std::size_t n = g.vertex_count();
    EliminationOrder local = order;
    EliminationSweep sweep = run_elimination(chordal, local); // zero fill expected on chordal input
    if (!sweep.fill.empty())
        throw InternalError("build_clique_tree: input graph is not chordal for this order");

    // Candidate cliques K_j = {v_j} ∪ higher(v_j); K_i can only be contained
    // in K_j when v_i lies in higher(v_j), so checking those pairs removes
    // every non-maximal candidate.
    std::vector<std::vector<VertexId>> cand(n);
    std::vector<std::uint32_t> pos(n);
    for (std::size_t j = 0; j < n; ++j) pos[order.order[j]] = static_cast<std::uint32_t>(j);
    for (std::size_t j = 0; j < n; ++j) {
        cand[j] = sweep.higher[j];
        cand[j].push_back(order.order[j]);
        std::sort(cand[j].begin(), cand[j].end());
    }
    std::vector<char> dead(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (VertexId u : sweep.higher[j]) {
            const std::uint32_t i = pos[u];
            if (dead[i] || cand[i].size() > cand[j].size()) continue;
            if (std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end()))
                dead[i] = 1;
        }
    }

    CliqueTree tree;
    std::vector<std::size_t> clique_of_visit(n, SIZE_MAX);
    for (std::size_t j = 0; j < n; ++j) {
        if (dead[j]) continue;
        clique_of_visit[j] = tree.nodes.size();
        CliqueTreeNode node;
        node.bag = cand[j];
        tree.nodes.push_back(std::move(node));
    }
    const std::size_t t = tree.nodes.size();
    if (t == 0) throw InternalError("build_clique_tree: no cliques");
    if (t > n) throw InternalError("build_clique_tree: more maximal cliques than vertices");

    // Per-vertex membership lists, used for intersection weights and later
    // for edge assignment.
    std::vector<std::vector<std::uint32_t>> cliques_of(n);
    for (std::size_t c = 0; c < t; ++c)
        for (VertexId v : tree.nodes[c].bag) cliques_of[v].push_back(static_cast<std::uint32_t>(c));

    // Intersection sizes for clique pairs sharing at least one vertex.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> weight;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& list = cliques_of[v];
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b)
                ++weight[{list[a], list[b]}];
    }

    // Kruskal on (-weight, min index, max index).
    struct WeightedPair {
        std::uint32_t w, a, b;
    };
    std::vector<WeightedPair> edges;
    edges.reserve(weight.size());
    for (const auto& [key, w] : weight) edges.push_back({w, key.first, key.second});
    std::sort(edges.begin(), edges.end(), [](const WeightedPair& x, const WeightedPair& y) {
        if (x.w != y.w) return x.w > y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<std::uint32_t> uf(t);
    std::iota(uf.begin(), uf.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<std::vector<std::uint32_t>> tree_adj(t);
    std::size_t joined = 0;
    for (const auto& e : edges) {
        auto ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        uf[ra] = rb;
        tree_adj[e.a].push_back(e.b);
        tree_adj[e.b].push_back(e.a);
        ++joined;
    }
    if (joined + 1 != t)
        throw InternalError("build_clique_tree: clique intersection graph is disconnected");

    // Root: highest-cardinality clique containing the first MCS-visited
    // vertex; ties toward the smallest node index.
    const VertexId anchor = order.order.empty() ? 0 : order.order[0];
    std::uint32_t root = 0;
    std::size_t best_size = 0;
    bool found = false;
    for (std::uint32_t c : cliques_of[anchor]) {
        if (!found || tree.nodes[c].bag.size() > best_size) {
            root = c;
            best_size = tree.nodes[c].bag.size();
            found = true;
        }
    }
    if (!found) throw InternalError("build_clique_tree: anchor vertex not covered");
    tree.root = static_cast<std::int32_t>(root);

    // Orient the tree away from the root.
    std::vector<char> seen(t, 0);
    std::vector<std::uint32_t> stack{root};
    seen[root] = 1;
    tree.nodes[root].depth = 0;
    std::vector<std::uint32_t> bfs_order;
    while (!stack.empty()) {
        std::uint32_t c = stack.back();
        stack.pop_back();
        bfs_order.push_back(c);
        std::sort(tree_adj[c].begin(), tree_adj[c].end());
        for (std::uint32_t d : tree_adj[c]) {
            if (seen[d]) continue;
            seen[d] = 1;
            tree.nodes[d].parent = static_cast<std::int32_t>(c);
            tree.nodes[d].depth = tree.nodes[c].depth + 1;
            tree.nodes[c].children.push_back(static_cast<std::int32_t>(d));
            stack.push_back(d);
        }
    }
    for (auto& node : tree.nodes) std::sort(node.children.begin(), node.children.end());

    // Assign each original edge to the bag nearest the root among bags
    // containing both endpoints; ties toward the smallest node index.
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        const auto& lu = cliques_of[e.endpoints[0]];
        const auto& lv = cliques_of[e.endpoints[1]];
        std::uint32_t best = UINT32_MAX;
        std::uint32_t best_depth = UINT32_MAX;
        std::size_t i = 0, j = 0;
        while (i < lu.size() && j < lv.size()) {
            if (lu[i] < lv[j]) ++i;
            else if (lv[j] < lu[i]) ++j;
            else {
                const std::uint32_t c = lu[i];
                if (tree.nodes[c].depth < best_depth) {
                    best = c;
                    best_depth = tree.nodes[c].depth;
                }
                ++i;
                ++j;
            }
        }
        if (best == UINT32_MAX)
            throw InternalError("build_clique_tree: edge not contained in any bag");
        tree.nodes[best].assigned_edges.emplace_back(e.endpoints[0], e.endpoints[1]);
    }
    for (auto& node : tree.nodes) std::sort(node.assigned_edges.begin(), node.assigned_edges.end());

    ValidationReport report = validate_clique_tree(g, tree);
    if (!report.ok()) {
        std::string msg = "build_clique_tree: invariant failure:";
        for (const auto& f : report.failures) msg += " " + f;
        throw InternalError(msg);
    }
    return tree;
}

ValidationReport validate_clique_tree(const Hypergraph& g, const CliqueTree& t) {
    ValidationReport report;
    const std::size_t n = g.vertex_count();

    std::vector<char> covered(n, 0);
    for (const auto& node : t.nodes)
        for (VertexId v : node.bag)
            if (v < n) covered[v] = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (!covered[v]) {
            report.vertex_cover = false;
            report.failures.push_back("vertex " + std::to_string(v) + " not in any bag");
        }
    }

    std::map<EdgePair, std::uint32_t> assignment_count;
    for (std::size_t c = 0; c < t.nodes.size(); ++c) {
        const auto& node = t.nodes[c];
        for (const auto& [u, v] : node.assigned_edges) {
            ++assignment_count[{u, v}];
            const bool inside = std::binary_search(node.bag.begin(), node.bag.end(), u) &&
                                std::binary_search(node.bag.begin(), node.bag.end(), v);
            if (!inside) {
                report.edge_cover = false;
                report.failures.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") assigned to node " + std::to_string(c) +
                                          " whose bag misses an endpoint");
            }
        }
    }
    for (const auto& e : g.edges()) {
        if (!e.terminal()) continue;
        EdgePair key{e.endpoints[0], e.endpoints[1]};
        auto it = assignment_count.find(key);
        const std::uint32_t count = it == assignment_count.end() ? 0 : it->second;
        if (count != 1) {
            report.edge_cover = false;
            report.failures.push_back("edge (" + std::to_string(key.first) + "," +
                                      std::to_string(key.second) + ") assigned " +
                                      std::to_string(count) + " times");
        }
        if (it != assignment_count.end()) assignment_count.erase(it);
    }
    for (const auto& [key, count] : assignment_count) {
        report.edge_cover = false;
        report.failures.push_back("assigned edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") is not an edge of the graph");
    }

    // Running intersection: the nodes holding v must form a connected subtree.
    std::vector<std::vector<std::uint32_t>> nodes_of(n);
    for (std::size_t c = 0; c < t.nodes.size(); ++c)
        for (VertexId v : t.nodes[c].bag)
            if (v < n) nodes_of[v].push_back(static_cast<std::uint32_t>(c));
    for (std::size_t v = 0; v < n; ++v) {
        const auto& members = nodes_of[v];
        if (members.size() <= 1) continue;
        std::set<std::uint32_t> member_set(members.begin(), members.end());
        std::vector<std::uint32_t> stack{members[0]};
        std::set<std::uint32_t> reached{members[0]};
        while (!stack.empty()) {
            std::uint32_t c = stack.back();
            stack.pop_back();
            std::vector<std::int32_t> adjacent(t.nodes[c].children);
            if (t.nodes[c].parent >= 0) adjacent.push_back(t.nodes[c].parent);
            for (std::int32_t d : adjacent) {
                const auto dd = static_cast<std::uint32_t>(d);
                if (member_set.count(dd) && !reached.count(dd)) {
                    reached.insert(dd);
                    stack.push_back(dd);
                }
            }
        }
        if (reached.size() != member_set.size()) {
            report.running_intersection = false;
            report.failures.push_back("vertex " + std::to_string(v) +
                                      " induces a disconnected set of bags");
        }
    }
    return report;
}

Decomposition decompose(const Hypergraph& g) {
    Decomposition d;
    d.order = mcs_order(g);
    Triangulation tri = triangulate(g, d.order);
    d.chordal = std::move(tri.chordal);
    d.tree = build_clique_tree(g, d.chordal, d.order);
    return d;
}

} // namespace hrg
