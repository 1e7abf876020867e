#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "hrg/csv.hpp"
#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"
#include "support/test_graphs.hpp"

using namespace hrg;
using namespace hrg::cli;
using namespace hrg::testing;

namespace {

const std::string karate = std::string(TEST_DATA_DIR) + "/karate.txt";

std::string file_contents(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(HRG_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("extract then exact regeneration reproduces the input") {
    TempDir tmp;
    ExtractConfig ex;
    ex.input = karate;
    ex.out_dir = tmp.dir();
    ex.k = 1;
    ex.s = 0; // whole graph
    ex.seed = 5;
    CHECK(cmd_extract(ex) == 0);
    CHECK(std::filesystem::exists(tmp.file("grammar.json")));
    CHECK(std::filesystem::exists(tmp.file("traces.json")));

    ExactConfig xa;
    xa.grammar_file = tmp.file("grammar.json");
    xa.trace_file = tmp.file("traces.json");
    xa.output = tmp.file("regen.txt");
    CHECK(cmd_exact(xa) == 0);

    auto original = load_edge_list(karate);
    auto regen = load_edge_list(xa.output);
    CHECK(isomorphic(original, regen));
}

TEST_CASE("extract validates arguments") {
    TempDir tmp;
    ExtractConfig ex;
    ex.input = karate;
    ex.out_dir = tmp.dir();
    ex.k = 0;
    CHECK_THROWS_AS(cmd_extract(ex), ArgumentError);
}

TEST_CASE("generate: deterministic artifact set for a fixed seed") {
    TempDir tmp;
    ExtractConfig ex;
    ex.input = karate;
    ex.out_dir = tmp.dir();
    ex.k = 1;
    ex.s = 0;
    cmd_extract(ex);

    GenerateConfig gen;
    gen.grammar_file = tmp.file("grammar.json");
    gen.replicates = 1;
    gen.size = 34;
    gen.mode = "exact";
    gen.seed = 77;

    gen.out_dir = tmp.dir() + "/a";
    CHECK(cmd_generate(gen) == 0);
    gen.out_dir = tmp.dir() + "/b";
    CHECK(cmd_generate(gen) == 0);
    CHECK(file_contents(tmp.dir() + "/a/gen_000.txt") ==
          file_contents(tmp.dir() + "/b/gen_000.txt"));
    CHECK(load_edge_list(tmp.dir() + "/a/gen_000.txt").vertex_count() == 34);
}

TEST_CASE("generate: scale resolves against the recorded source size") {
    TempDir tmp;
    ExtractConfig ex;
    ex.input = karate;
    ex.out_dir = tmp.dir();
    ex.k = 1;
    ex.s = 0;
    cmd_extract(ex);

    GenerateConfig gen;
    gen.grammar_file = tmp.file("grammar.json");
    gen.out_dir = tmp.dir() + "/scaled";
    gen.replicates = 2;
    gen.scale = 2.0;
    gen.mode = "approx";
    gen.seed = 3;
    CHECK(cmd_generate(gen) == 0);
    auto table = read_csv(tmp.dir() + "/scaled/generate_summary.csv");
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) {
        const double n = std::stod(row[1]);
        CHECK(n >= 68.0 * 0.95);
        CHECK(n <= 68.0 * 1.05);
    }

    SUBCASE("size and scale are mutually exclusive") {
        gen.size = 34;
        CHECK_THROWS_AS(cmd_generate(gen), ArgumentError);
    }
}

TEST_CASE("compare: identical graphs score zero and CSVs round trip") {
    TempDir tmp;
    CompareConfig cmp;
    cmp.original = karate;
    cmp.generated = {karate};
    cmp.out_dir = tmp.dir();
    CHECK(cmd_compare(cmp) == 0);

    auto summary = read_csv(tmp.file("summary.csv"));
    REQUIRE(summary.rows.size() == 1);
    CHECK(std::stod(summary.rows[0][3]) == doctest::Approx(0.0).epsilon(1e-9)); // cosine
    CHECK(std::stod(summary.rows[0][4]) == doctest::Approx(0.0).epsilon(1e-9)); // gcd

    // emitted csv files reparse to identical in-memory tables
    for (const auto& name : {"summary.csv", "gcd.csv", "degree_original.csv",
                             "hop_original.csv", "centrality_original.csv"}) {
        auto t = read_csv(tmp.file(name));
        const std::string copy = tmp.file(std::string("copy_") + name);
        write_csv(t, copy);
        CHECK(read_csv(copy) == t);
    }
}

TEST_CASE("compare tolerates size mismatches") {
    TempDir tmp;
    save_edge_list(six_node_example(), tmp.file("small.txt"));
    CompareConfig cmp;
    cmp.original = karate;
    cmp.generated = {tmp.file("small.txt")};
    cmp.out_dir = tmp.dir();
    CHECK(cmd_compare(cmp) == 0);
    auto summary = read_csv(tmp.file("summary.csv"));
    CHECK(summary.rows.size() == 1);
}

TEST_CASE("infinity-mirror: zero recurrences yields an empty report") {
    TempDir tmp;
    MirrorConfig cfg;
    cfg.input = karate;
    cfg.out_dir = tmp.dir();
    cfg.recurrences = 0;
    CHECK(cmd_infinity_mirror(cfg) == 0);
    auto report = read_csv(tmp.file("mirror.csv"));
    CHECK(report.rows.empty());
    CHECK(report.header.size() == 5);
}

TEST_CASE("infinity-mirror: short hrg and chung-lu chains run") {
    TempDir tmp;
    save_edge_list(six_node_example(), tmp.file("six.txt"));

    MirrorConfig cfg;
    cfg.input = tmp.file("six.txt");
    cfg.out_dir = tmp.dir() + "/hrg";
    cfg.recurrences = 3;
    cfg.seed = 11;
    CHECK(cmd_infinity_mirror(cfg) == 0);
    auto hrg_report = read_csv(cfg.out_dir + "/mirror.csv");
    CHECK(hrg_report.rows.size() == 3);

    cfg.generator = "chung-lu";
    cfg.out_dir = tmp.dir() + "/cl";
    CHECK(cmd_infinity_mirror(cfg) == 0);
    auto cl_report = read_csv(cfg.out_dir + "/mirror.csv");
    CHECK(cl_report.rows.size() == 3);
    for (const auto& row : cl_report.rows) CHECK(row[4] == "0"); // no rules for the baseline
}

TEST_CASE("extrapolate: factor 1 reduces to generation at the original size") {
    TempDir tmp;
    ExtrapolateConfig cfg;
    cfg.input = karate;
    cfg.out_dir = tmp.dir();
    cfg.scales = {1.0};
    cfg.replicates = 3;
    cfg.mode = "approx";
    cfg.seed = 21;
    CHECK(cmd_extrapolate(cfg) == 0);
    auto report = read_csv(tmp.file("extrapolate.csv"));
    REQUIRE(report.rows.size() == 2); // hrg and chung-lu
    for (const auto& row : report.rows) {
        CHECK(std::stod(row[0]) == doctest::Approx(1.0));
        CHECK(row[2] == "34");
        CHECK(std::stod(row[4]) >= 0.0);
    }
}

TEST_CASE("binary: exit codes") {
    TempDir tmp;
    CHECK(run_binary("") == 2);                           // missing subcommand
    CHECK(run_binary("extract -i /nope.txt -o " + tmp.dir()) == 4);
    CHECK(run_binary("extract -i " + karate + " -o " + tmp.dir() + " --k 0") == 2);
    CHECK(run_binary("--help") == 0);

    // infeasible exact size -> 3
    REQUIRE(run_binary("extract -i " + karate + " -o " + tmp.dir() + " --k 1 --s 0") == 0);
    CHECK(run_binary("generate -g " + tmp.file("grammar.json") + " -o " + tmp.dir() +
                     "/g --size 2 --mode exact") == 3);
}

TEST_CASE("binary: config file supplies defaults, flags win") {
    TempDir tmp;
    const std::string config = tmp.write(
        "cfg.json", "{\"input\": \"" + karate + "\", \"out\": \"" + tmp.dir() +
                        "\", \"k\": 2, \"s\": 20, \"seed\": 9}");
    CHECK(run_binary("extract --config " + config) == 0);
    CHECK(std::filesystem::exists(tmp.file("grammar.json")));

    // an explicit flag overrides the config value
    CHECK(run_binary("extract --config " + config + " --k 1 --s 0") == 0);
}

} // TEST_SUITE
