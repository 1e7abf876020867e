#include <doctest.h>

#include <set>

#include "hrg/clique_tree.hpp"
#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace hrg;
using namespace hrg::testing;

namespace {

void check_decomposition(const Hypergraph& g) {
    auto d = decompose(g);
    auto report = validate_clique_tree(g, d.tree);
    CAPTURE(report.failures);
    CHECK(report.ok());
    CHECK(d.tree.assigned_edge_total() == g.terminal_edge_count());
    CHECK(d.tree.nodes.size() <= g.vertex_count());
    CHECK(d.tree.width() == d.order.width_achieved);
    if (g.max_degree() > 0)
        CHECK(d.tree.width() <= g.max_degree() + 1); // achieved width - 1 <= max degree
}

} // namespace

TEST_SUITE("clique_tree") {

TEST_CASE("complete graph: no fill, one bag") {
    auto g = complete_graph(4);
    auto order = mcs_order(g);
    auto tri = triangulate(g, order);
    CHECK(tri.fill_edges == 0);
    auto tree = build_clique_tree(g, tri.chordal, order);
    CHECK(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].bag.size() == 4);
    CHECK(tree.nodes[0].assigned_edges.size() == 6);
}

TEST_CASE("path achieves width 1, matching the brute-force minimum") {
    auto g = path_graph(4);
    auto d = decompose(g);
    CHECK(d.order.width_achieved == 1);
    CHECK(brute_force_min_width(g) == 1);
}

TEST_CASE("MCS yields a perfect elimination order on chordal graphs") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_chordal(8, 4, rng);
        REQUIRE(is_chordal(g));
        auto order = mcs_order(g);
        auto tri = triangulate(g, order);
        CHECK(tri.fill_edges == 0);
    }
}

TEST_CASE("non-chordal graphs get fill edges; C4 gets exactly one chord") {
    auto g = cycle_graph(4);
    CHECK_FALSE(is_chordal(g));
    auto order = mcs_order(g);
    auto tri = triangulate(g, order);
    CHECK(tri.fill_edges == 1);
    CHECK(is_chordal(tri.chordal));
}

TEST_CASE("triangulation output is chordal on random graphs") {
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = random_connected(10, 8, rng);
        auto order = mcs_order(g);
        auto tri = triangulate(g, order);
        CHECK(is_chordal(tri.chordal));
    }
}

TEST_CASE("tree inputs decompose into their edges") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint32_t n = 2 + trial;
        auto g = random_tree(n, rng);
        auto d = decompose(g);
        CHECK(d.tree.width() == 1);
        CHECK(d.tree.nodes.size() == n - 1);
        std::multiset<EdgePair> bags;
        for (const auto& node : d.tree.nodes) {
            REQUIRE(node.bag.size() == 2);
            bags.insert({node.bag[0], node.bag[1]});
        }
        std::multiset<EdgePair> edges;
        for (const auto& e : g.edges()) edges.insert({e.endpoints[0], e.endpoints[1]});
        CHECK(bags == edges);
    }
}

TEST_CASE("single edge: one bag holding it") {
    auto g = path_graph(2);
    auto d = decompose(g);
    REQUIRE(d.tree.nodes.size() == 1);
    CHECK(d.tree.nodes[0].bag == std::vector<VertexId>{0, 1});
    CHECK(d.tree.nodes[0].assigned_edges == std::vector<EdgePair>{{0, 1}});
}

TEST_CASE("six-node example contains the expected bags") {
    auto g = six_node_example();
    auto d = decompose(g);
    auto report = validate_clique_tree(g, d.tree);
    CAPTURE(d.tree.to_json());
    CHECK(report.ok());

    std::set<std::vector<VertexId>> bags;
    for (const auto& node : d.tree.nodes) bags.insert(node.bag);
    CHECK(bags.count({2, 3, 4})); // {c,d,e}
    CHECK(bags.count({3, 4, 5})); // {d,e,f}
    CHECK(bags.count({0, 1, 4})); // {a,b,e}
    CHECK(d.tree.nodes.size() == 4);
}

TEST_CASE("validation pinpoints planted defects") {
    auto g = six_node_example();
    auto d = decompose(g);

    SUBCASE("edge assigned twice") {
        auto broken = d.tree;
        // duplicate the first assigned edge into another node containing it
        const auto edge = broken.nodes[0].assigned_edges.at(0);
        for (std::size_t i = 1; i < broken.nodes.size(); ++i) {
            const auto& bag = broken.nodes[i].bag;
            if (std::binary_search(bag.begin(), bag.end(), edge.first) &&
                std::binary_search(bag.begin(), bag.end(), edge.second)) {
                broken.nodes[i].assigned_edges.push_back(edge);
                break;
            }
        }
        auto report = validate_clique_tree(g, broken);
        CHECK_FALSE(report.edge_cover);
        CHECK(report.vertex_cover);
        bool named = false;
        for (const auto& f : report.failures)
            if (f.find("assigned 2 times") != std::string::npos) named = true;
        CHECK(named);
    }

    SUBCASE("running intersection violated") {
        auto broken = d.tree;
        // add a far-away bag containing vertex 0 without connecting it
        for (std::size_t i = 0; i < broken.nodes.size(); ++i) {
            const auto& bag = broken.nodes[i].bag;
            if (!std::binary_search(bag.begin(), bag.end(), VertexId{0}) &&
                broken.nodes[i].parent >= 0 &&
                !std::binary_search(
                    broken.nodes[static_cast<std::size_t>(broken.nodes[i].parent)].bag.begin(),
                    broken.nodes[static_cast<std::size_t>(broken.nodes[i].parent)].bag.end(),
                    VertexId{0})) {
                auto bag_copy = broken.nodes[i].bag;
                bag_copy.insert(bag_copy.begin(), 0);
                broken.nodes[i].bag = bag_copy;
                break;
            }
        }
        auto report = validate_clique_tree(g, broken);
        CHECK_FALSE(report.running_intersection);
        bool named = false;
        for (const auto& f : report.failures)
            if (f.find("vertex 0") != std::string::npos) named = true;
        CHECK(named);
    }
}

TEST_CASE("random corpus: all invariants hold") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 28);
        const std::uint32_t extra = static_cast<std::uint32_t>(rng() % (n * 2));
        check_decomposition(random_connected(n, extra, rng));
    }
    check_decomposition(load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt"));
    check_decomposition(six_node_example());
    check_decomposition(star_graph(6));
    check_decomposition(cycle_graph(9));
}

TEST_CASE("debug json dump lists every node") {
    auto d = decompose(six_node_example());
    const std::string dump = d.tree.to_json();
    CHECK(dump.find("\"bag\"") != std::string::npos);
    CHECK(dump.find("\"assigned_edges\"") != std::string::npos);
    CHECK(dump.find("\"parent\"") != std::string::npos);
}

} // TEST_SUITE
