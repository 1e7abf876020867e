#include <doctest.h>

#include <set>

#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "hrg/generate.hpp"
#include "hrg/grammar.hpp"
#include "hrg/rng.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace hrg;
using namespace hrg::testing;

namespace {

// Start rule of the six-node fixture tree: S -> three vertices carrying two
// terminal edges, one 3-ary and one 2-ary nonterminal.
Production start_rule() { return extract_rule(six_node_handbuilt_tree(), 0); }

} // namespace

TEST_SUITE("generate") {

TEST_CASE("apply_rule replaces the start nonterminal") {
    DerivationState state;
    CHECK(state.live_count() == 1);
    CHECK(state.live_rank(state.front_live()) == 0);

    auto created = state.apply_rule(state.front_live(), start_rule());
    CHECK(state.vertex_count() == 3);
    CHECK(created.size() == 2);
    std::multiset<std::uint32_t> ranks;
    for (auto h : created) ranks.insert(state.live_rank(h));
    CHECK(ranks == std::multiset<std::uint32_t>{2, 3});
    CHECK(state.live_count() == 2);
}

TEST_CASE("interior rule adds one vertex, two edges, one nonterminal") {
    auto tree = six_node_handbuilt_tree();
    DerivationState state;
    state.apply_rule(state.front_live(), extract_rule(tree, 0));

    // find the 3-ary live edge and apply the rank-3 rule
    std::uint64_t target = UINT64_MAX;
    for (std::uint64_t h = 0; h < 16; ++h) {
        try {
            if (state.live_rank(h) == 3) { target = h; break; }
        } catch (const ArgumentError&) {}
    }
    REQUIRE(target != UINT64_MAX);
    const auto before_v = state.vertex_count();
    auto created = state.apply_rule(target, extract_rule(tree, 1));
    CHECK(state.vertex_count() == before_v + 1);
    REQUIRE(created.size() == 1);
    CHECK(state.live_rank(created[0]) == 2);
}

TEST_CASE("terminal rule on the last nonterminal finishes the derivation") {
    Production s;
    s.lhs_rank = 0;
    s.vertex_count = 2;
    s.terminal_edges = {{0, 1}};
    DerivationState state;
    state.apply_rule(state.front_live(), s);
    CHECK_FALSE(state.has_live());
    auto g = state.finish(true);
    CHECK(g.vertex_count() == 2);
    CHECK(g.terminal_edge_count() == 1);
}

TEST_CASE("rank mismatch is rejected") {
    DerivationState state;
    auto tree = six_node_handbuilt_tree();
    CHECK_THROWS_AS(state.apply_rule(state.front_live(), extract_rule(tree, 3)), ArgumentError);
}

TEST_CASE("exact generation: single edge") {
    auto g = path_graph(2);
    auto [grammar, trace] = extract_grammar(g);
    auto out = exact_generate(grammar, trace);
    CHECK(isomorphic(g, out));
}

TEST_CASE("exact generation: six-node example via pipeline") {
    auto g = six_node_example();
    auto [grammar, trace] = extract_grammar(g);
    auto out = exact_generate(grammar, trace);
    CHECK(isomorphic(g, out));
}

TEST_CASE("exact generation: six-node example via the hand-built tree") {
    auto g = six_node_example();
    auto tree = six_node_handbuilt_tree();
    REQUIRE(validate_clique_tree(g, tree).ok());
    auto [grammar, trace] = extract_from_tree(g, tree);
    CHECK(trace.entries.size() == 6);
    auto out = exact_generate(grammar, trace);
    CHECK(isomorphic(g, out));
}

TEST_CASE("exact generation: random corpus") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 28);
        const std::uint32_t extra = static_cast<std::uint32_t>(rng() % (2 * n));
        auto g = random_connected(n, extra, rng);
        auto [grammar, trace] = extract_grammar(g);
        auto out = exact_generate(grammar, trace);
        CHECK(isomorphic(g, out));
    }
}

TEST_CASE("exact generation: karate") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto [grammar, trace] = extract_grammar(g);
    auto out = exact_generate(grammar, trace);
    CHECK(isomorphic(g, out));
}

TEST_CASE("exact generation rejects mismatched traces") {
    auto [g1, t1] = extract_grammar(six_node_example());
    auto [g2, t2] = extract_grammar(complete_graph(3));
    CHECK_THROWS_AS(exact_generate(g2, t1), GenerationError);
}

TEST_CASE("stochastic: deterministic grammar always yields the same graph") {
    Production s;
    s.lhs_rank = 0;
    s.vertex_count = 3;
    s.terminal_edges = {{0, 1}, {1, 2}, {0, 2}};
    auto c = canonicalize(s);
    Grammar g;
    g.add(c.production, c.signature, 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto out = stochastic_generate(g, seed);
        CHECK(out.vertex_count() == 3);
        CHECK(out.terminal_edge_count() == 3);
    }
}

TEST_CASE("stochastic: fixed seed reproduces the output") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto [grammar, trace] = extract_grammar(g);
    auto a = stochastic_generate(grammar, 99);
    auto b = stochastic_generate(grammar, 99);
    CHECK(fingerprint(a) == fingerprint(b));
}

TEST_CASE("stochastic outputs are terminal-only and simple") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto out = stochastic_generate(grammar, seed);
        CHECK(out.all_terminal());
        // simple: construction via Hypergraph::simple dedupes; degree bound check
        for (std::size_t v = 0; v < out.vertex_count(); ++v)
            CHECK(out.degree(static_cast<VertexId>(v)) < out.vertex_count());
    }
}

TEST_CASE("stochastic: karate sample mean near the original size") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto [grammar, trace] = extract_grammar(g);
    double total = 0.0, total_sq = 0.0;
    const int samples = 60;
    for (int i = 0; i < samples; ++i) {
        auto out = stochastic_generate(grammar, derive_seed(4242, i));
        total += static_cast<double>(out.vertex_count());
        total_sq += static_cast<double>(out.vertex_count()) * out.vertex_count();
    }
    const double mean = total / samples;
    const double var = total_sq / samples - mean * mean;
    CHECK(mean > 34.0 * 0.7); // loose in-unit-test bounds; acceptance pins +-20%
    CHECK(mean < 34.0 * 1.3);
    CHECK(var > 0.0);
}

TEST_CASE("step cap guards non-terminating grammars") {
    // rank-1 nonterminal that only reproduces itself
    Production start;
    start.lhs_rank = 0;
    start.vertex_count = 1;
    start.nonterminal_edges = {{1, {0}}};
    Production loop;
    loop.lhs_rank = 1;
    loop.vertex_count = 2;
    loop.terminal_edges = {{0, 1}};
    loop.nonterminal_edges = {{1, {1}}};
    Grammar g;
    auto cs = canonicalize(start);
    auto cl = canonicalize(loop);
    g.add(cs.production, cs.signature, 1);
    g.add(cl.production, cl.signature, 1);
    GenerateOptions opts;
    opts.step_cap = 500;
    CHECK_THROWS_AS(stochastic_generate(g, 1, opts), GenerationError);
}

} // TEST_SUITE
