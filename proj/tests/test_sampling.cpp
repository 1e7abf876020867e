#include <doctest.h>

#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "hrg/sampling.hpp"
#include "support/test_graphs.hpp"

using namespace hrg;
using namespace hrg::testing;

TEST_SUITE("sampling") {

TEST_CASE("s >= n returns the whole graph") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto samples = bfs_sample(g, {.k = 2, .s = 34, .seed = 7});
    REQUIRE(samples.size() == 2);
    for (const auto& s : samples) {
        CHECK(s.vertex_count() == g.vertex_count());
        CHECK(s.terminal_edge_count() == g.terminal_edge_count());
        CHECK(fingerprint(s) == fingerprint(g)); // identical, in fact
    }
}

TEST_CASE("samples are connected node-induced subgraphs of the requested size") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto samples = bfs_sample(g, {.k = 8, .s = 10, .seed = 3});
    for (const auto& s : samples) {
        CHECK(s.vertex_count() == 10);
        CHECK(is_connected(s)); // direct BFS check
        // node-induced: every edge of g between sampled labels is present
        const auto& labels = s.original_labels();
        REQUIRE(labels.size() == 10);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                // labels here are karate's original 1-based ids
                VertexId u = 0, v = 0;
                for (std::size_t x = 0; x < g.vertex_count(); ++x) {
                    if (g.original_labels()[x] == labels[i]) u = static_cast<VertexId>(x);
                    if (g.original_labels()[x] == labels[j]) v = static_cast<VertexId>(x);
                }
                if (g.has_terminal_edge(u, v)) ++expected;
            }
        CHECK(s.terminal_edge_count() == expected);
    }
}

TEST_CASE("defaults produce k samples of s vertices on a large graph") {
    Rng rng(99);
    auto g = random_connected(6474, 7421, rng); // routers-sized
    auto samples = bfs_sample(g, SampleSpec{});  // k=4, s=500
    REQUIRE(samples.size() == 4);
    for (const auto& s : samples) {
        CHECK(s.vertex_count() == 500);
        CHECK(is_connected(s));
    }
}

TEST_CASE("same seed, same samples") {
    Rng rng(5);
    auto g = random_connected(200, 150, rng);
    auto a = bfs_sample(g, {.k = 3, .s = 50, .seed = 42});
    auto b = bfs_sample(g, {.k = 3, .s = 50, .seed = 42});
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].original_labels() == b[i].original_labels());
        CHECK(fingerprint(a[i]) == fingerprint(b[i]));
    }
}

TEST_CASE("preconditions") {
    auto g = six_node_example();
    CHECK_THROWS_AS(bfs_sample(g, {.k = 0, .s = 5, .seed = 0}), ArgumentError);
    CHECK_THROWS_AS(bfs_sample(g, {.k = 1, .s = 0, .seed = 0}), ArgumentError);
    auto disconnected = Hypergraph::simple(4, std::vector<EdgePair>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(bfs_sample(disconnected, {.k = 1, .s = 2, .seed = 0}), ArgumentError);
}

} // TEST_SUITE
