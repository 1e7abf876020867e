#include <doctest.h>

#include <map>
#include <numeric>

#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "hrg/generate.hpp"
#include "hrg/rng.hpp"
#include "hrg/size_table.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace hrg;
using namespace hrg::testing;

namespace {

Grammar add_rules(std::vector<std::pair<Production, std::uint64_t>> rules) {
    Grammar g;
    for (auto& [p, count] : rules) {
        auto c = canonicalize(p);
        g.add(c.production, c.signature, count);
    }
    return g;
}

// Start rule spawning two rank-1 nonterminals; rank-1 expands (count 2) or
// terminates with one vertex (count 3). Plenty of same-size derivations.
Grammar branching_grammar() {
    Production start;
    start.lhs_rank = 0;
    start.vertex_count = 2;
    start.terminal_edges = {{0, 1}};
    start.nonterminal_edges = {{1, {0}}, {1, {1}}};

    Production grow;
    grow.lhs_rank = 1;
    grow.vertex_count = 2;
    grow.terminal_edges = {{0, 1}};
    grow.nonterminal_edges = {{1, {1}}};

    Production stop;
    stop.lhs_rank = 1;
    stop.vertex_count = 2;
    stop.terminal_edges = {{0, 1}};

    return add_rules({{start, 1}, {grow, 2}, {stop, 3}});
}

void compare_with_enumeration(const Grammar& g, std::uint32_t n_max) {
    auto table = build_size_table(g, n_max);
    for (std::uint32_t rank = 0; rank <= g.max_rank(); ++rank) {
        if (g.families_of_rank(rank).empty()) continue;
        auto expected = enumerate_size_weights(g, rank, n_max);
        for (std::uint32_t n = 0; n <= n_max; ++n) {
            const BigInt want = expected.count(n) ? expected[n] : BigInt(0);
            CAPTURE(rank);
            CAPTURE(n);
            CHECK(table.weight(rank, n) == want);
        }
    }
}

} // namespace

TEST_SUITE("size_table") {

TEST_CASE("single terminal start rule") {
    Production s;
    s.lhs_rank = 0;
    s.vertex_count = 4;
    s.terminal_edges = {{0, 1}, {1, 2}, {2, 3}};
    auto g = add_rules({{s, 5}});
    auto table = build_size_table(g, 10);
    for (std::uint32_t n = 0; n <= 10; ++n)
        CHECK(table.weight(0, n) == (n == 4 ? BigInt(5) : BigInt(0)));
}

TEST_CASE("six-node grammar matches brute-force enumeration everywhere") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    auto table = build_size_table(grammar, 12);
    CHECK(table.weight(0, 6) > 0); // the original derivation exists
    compare_with_enumeration(grammar, 12);
}

TEST_CASE("entries below the minimal size are zero") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    auto table = build_size_table(grammar, 12);
    auto feasible = table.feasible_sizes(0);
    REQUIRE_FALSE(feasible.empty());
    for (std::uint32_t n = 0; n < feasible.front(); ++n) CHECK(table.weight(0, n) == 0);
}

TEST_CASE("hand-built branching grammar matches enumeration") {
    compare_with_enumeration(branching_grammar(), 14);
}

TEST_CASE("karate grammar table is consistent with enumeration at small sizes") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto [grammar, trace] = extract_grammar(g);
    compare_with_enumeration(grammar, 9);
}

TEST_CASE("expanding zero-internal rules are rejected") {
    Production start;
    start.lhs_rank = 0;
    start.vertex_count = 2;
    start.terminal_edges = {{0, 1}};
    start.nonterminal_edges = {{2, {0, 1}}};
    Production unit; // rank 2 -> rank 2, no internals: diverging counts
    unit.lhs_rank = 2;
    unit.vertex_count = 2;
    unit.nonterminal_edges = {{2, {0, 1}}};
    auto g = add_rules({{start, 1}, {unit, 1}});
    CHECK_THROWS_AS(build_size_table(g, 8), ArgumentError);
}

TEST_CASE("exact sampler hits the target size every time") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    auto table = build_size_table(grammar, 6);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto out = size_constrained_generate(grammar, table, 6, seed);
        CHECK(out.vertex_count() == 6);
        CHECK(out.all_terminal());
    }
}

TEST_CASE("exact sampler matches the enumerated derivation distribution") {
    auto g = branching_grammar();
    const std::uint32_t target = 8;
    auto table = build_size_table(g, target);
    auto derivations = enumerate_derivations(g, target, 100000);
    REQUIRE(derivations.size() > 1);

    std::map<std::string, std::size_t> index;
    BigInt total_weight = 0;
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        index[derivations[i].key] = i;
        total_weight += derivations[i].weight;
    }

    const int samples = 4000;
    std::vector<std::uint64_t> observed(derivations.size(), 0);
    for (int i = 0; i < samples; ++i) {
        std::vector<Signature> log;
        size_constrained_generate(g, table, target, derive_seed(7, i), {}, &log);
        std::string key;
        for (std::size_t j = 0; j < log.size(); ++j) {
            if (j) key += "\n";
            key += log[j];
        }
        auto it = index.find(key);
        REQUIRE(it != index.end()); // sampled derivation must be enumerable
        ++observed[it->second];
    }
    std::vector<double> probs(derivations.size());
    const double denom = total_weight.convert_to<double>();
    for (std::size_t i = 0; i < derivations.size(); ++i)
        probs[i] = derivations[i].weight.convert_to<double>() / denom;
    const double p = chi_square_gof_p(observed, probs);
    CHECK(p > 0.01);
}

TEST_CASE("infeasible targets report the nearest feasible sizes") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    auto table = build_size_table(grammar, 12);
    CHECK(table.weight(0, 2) == 0);
    bool threw = false;
    try {
        size_constrained_generate(grammar, table, 2, 0);
    } catch (const GenerationError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("nearest feasible") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("approximate sampler lands within five percent") {
    auto g = load_edge_list(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto [grammar, trace] = extract_grammar(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto out = approximate_size_generate(grammar, 68, seed);
        const double n = static_cast<double>(out.vertex_count());
        CHECK(n >= 68.0 * 0.95);
        CHECK(n <= 68.0 * 1.05);
    }
}

TEST_CASE("mode dispatcher") {
    auto [grammar, trace] = extract_grammar(six_node_example());
    auto exact = size_constrained_generate(grammar, 6, SizeMode::exact, 3);
    CHECK(exact.vertex_count() == 6);
    auto approx = size_constrained_generate(grammar, 40, SizeMode::approximate, 3);
    CHECK(approx.vertex_count() >= 38);
    CHECK(approx.vertex_count() <= 42);
}

} // TEST_SUITE
