#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "hrg/chung_lu.hpp"
#include "hrg/csv.hpp"
#include "hrg/edge_list.hpp"
#include "hrg/error.hpp"
#include "hrg/generate.hpp"
#include "hrg/grammar.hpp"
#include "hrg/graphlets.hpp"
#include "hrg/metrics.hpp"
#include "hrg/rng.hpp"
#include "hrg/sampling.hpp"
#include "hrg/size_table.hpp"

namespace hrg::cli {

namespace {

namespace fs = std::filesystem;

// Seed streams per purpose so replicate i of a command is independent of the
// others yet the whole run is a function of the one user seed.
constexpr std::uint64_t kStreamSampling = 1;
constexpr std::uint64_t kStreamGenerate = 100;
constexpr std::uint64_t kStreamMetrics = 5000;
constexpr std::uint64_t kStreamMirror = 6000;
constexpr std::uint64_t kStreamChungLu = 7000;
constexpr std::uint64_t kStreamBootstrap = 9999;

std::string ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
    return dir;
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::string replicate_name(std::uint32_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "gen_%03u.txt", i);
    return buf;
}

void write_degree_csv(const Hypergraph& g, const std::string& path) {
    CsvTable t;
    t.header = {"degree", "count"};
    for (const auto& [d, c] : degree_distribution(g).histogram)
        t.rows.push_back({csv_u64(d), csv_u64(c)});
    write_csv(t, path);
}

void write_hop_csv(const Hypergraph& g, std::uint32_t sources, std::uint64_t seed,
                   const std::string& path) {
    CsvTable t;
    t.header = {"hop", "pairs"};
    auto plot = hop_plot(g, sources, seed);
    for (std::size_t x = 0; x < plot.cumulative_pairs.size(); ++x)
        t.rows.push_back({csv_u64(x), csv_u64(plot.cumulative_pairs[x])});
    write_csv(t, path);
}

void write_centrality_csv(const std::vector<double>& scores, const std::string& path) {
    std::vector<double> sorted(scores);
    std::sort(sorted.rbegin(), sorted.rend());
    CsvTable t;
    t.header = {"rank", "score"};
    for (std::size_t i = 0; i < sorted.size(); ++i)
        t.rows.push_back({csv_u64(i + 1), csv_double(sorted[i])});
    write_csv(t, path);
}

std::uint32_t resolve_target_size(const Grammar& grammar, std::optional<std::uint32_t> size,
                                  std::optional<double> scale) {
    if (size.has_value() == scale.has_value())
        throw ArgumentError("exactly one of --size / --scale is required");
    if (size) {
        if (*size < 1) throw ArgumentError("--size must be >= 1");
        return *size;
    }
    if (grammar.source.vertices == 0)
        throw ArgumentError("--scale needs a grammar with recorded source size");
    const double target = *scale * static_cast<double>(grammar.source.vertices);
    const auto rounded = static_cast<std::uint32_t>(std::llround(target));
    if (rounded < 1) throw ArgumentError("--scale yields an empty target size");
    return rounded;
}

struct GraphStatsRow {
    std::uint64_t vertices = 0, edges = 0, max_degree = 0, triangles = 0;
};

GraphStatsRow stats_of(const Hypergraph& g) {
    return {g.vertex_count(), g.terminal_edge_count(), g.max_degree(), triangle_count(g)};
}

} // namespace

int cmd_extract(const ExtractConfig& cfg) {
    if (cfg.k < 1) throw ArgumentError("--k must be >= 1");
    LoadOptions load;
    load.strict_connected = cfg.strict_connected;
    Hypergraph g = load_edge_list(cfg.input, load);

    const std::uint32_t s =
        cfg.s == 0 ? static_cast<std::uint32_t>(g.vertex_count()) : cfg.s;
    auto samples = bfs_sample(g, {cfg.k, s, derive_seed(cfg.seed, kStreamSampling)});

    std::vector<Grammar> grammars;
    std::vector<DerivationTrace> traces;
    for (const auto& sample : samples) {
        auto [grammar, trace] = extract_grammar(sample);
        grammars.push_back(std::move(grammar));
        traces.push_back(std::move(trace));
    }
    Grammar merged = merge_grammars(grammars);
    merged.source.vertices = g.vertex_count();
    merged.source.edges = g.terminal_edge_count();
    merged.source.samples = cfg.k;

    ensure_dir(cfg.out_dir);
    save_grammar(merged, join(cfg.out_dir, "grammar.json"));
    save_traces(traces, join(cfg.out_dir, "traces.json"));

    std::cout << "extract: " << cfg.input << " n=" << g.vertex_count() << " m="
              << g.terminal_edge_count() << " k=" << cfg.k << " s=" << s << "\n"
              << "  distinct rules:    " << merged.family_count() << "\n"
              << "  total occurrences: " << merged.total_occurrences() << "\n"
              << "  max LHS rank:      " << merged.max_rank() << "\n";
    return 0;
}

int cmd_exact(const ExactConfig& cfg) {
    Grammar grammar = load_grammar(cfg.grammar_file);
    auto traces = load_traces(cfg.trace_file);
    if (cfg.sample_index >= traces.size())
        throw ArgumentError("--sample-index out of range (file has " +
                            std::to_string(traces.size()) + " traces)");
    Hypergraph out = exact_generate(grammar, traces[cfg.sample_index]);
    save_edge_list(out, cfg.output);
    std::cout << "exact: wrote " << cfg.output << " (n=" << out.vertex_count()
              << " m=" << out.terminal_edge_count() << ")\n";
    return 0;
}

int cmd_generate(const GenerateConfig& cfg) {
    if (cfg.replicates < 1) throw ArgumentError("--replicates must be >= 1");
    if (cfg.mode != "exact" && cfg.mode != "approx")
        throw ArgumentError("--mode must be exact or approx");
    Grammar grammar = load_grammar(cfg.grammar_file);
    const std::uint32_t n_target = resolve_target_size(grammar, cfg.size, cfg.scale);

    ensure_dir(cfg.out_dir);
    std::optional<SizeTable> table;
    if (cfg.mode == "exact") table = build_size_table(grammar, n_target);

    CsvTable summary;
    summary.header = {"replicate", "vertices", "edges", "max_degree", "triangles"};
    double sum_v = 0, sum_e = 0, sum_d = 0, sum_t = 0;
    for (std::uint32_t i = 0; i < cfg.replicates; ++i) {
        const std::uint64_t seed = derive_seed(cfg.seed, kStreamGenerate + i);
        Hypergraph out = table
                             ? size_constrained_generate(grammar, *table, n_target, seed)
                             : approximate_size_generate(grammar, n_target, seed);
        save_edge_list(out, join(cfg.out_dir, replicate_name(i)));
        const auto row = stats_of(out);
        summary.rows.push_back({csv_u64(i), csv_u64(row.vertices), csv_u64(row.edges),
                                csv_u64(row.max_degree), csv_u64(row.triangles)});
        sum_v += static_cast<double>(row.vertices);
        sum_e += static_cast<double>(row.edges);
        sum_d += static_cast<double>(row.max_degree);
        sum_t += static_cast<double>(row.triangles);
    }
    write_csv(summary, join(cfg.out_dir, "generate_summary.csv"));

    CsvTable means;
    means.header = {"replicates", "mean_vertices", "mean_edges", "mean_max_degree",
                    "mean_triangles"};
    const double r = cfg.replicates;
    means.rows.push_back({csv_u64(cfg.replicates), csv_double(sum_v / r), csv_double(sum_e / r),
                          csv_double(sum_d / r), csv_double(sum_t / r)});
    write_csv(means, join(cfg.out_dir, "generate_means.csv"));

    std::cout << "generate: " << cfg.replicates << " replicates at n=" << n_target << " ("
              << cfg.mode << ") -> " << cfg.out_dir << "\n";
    return 0;
}

int cmd_compare(const CompareConfig& cfg) {
    Hypergraph original = load_edge_list(cfg.original);
    std::vector<Hypergraph> generated;
    for (const auto& path : cfg.generated) generated.push_back(load_edge_list(path));
    ensure_dir(cfg.out_dir);

    const auto original_scores = eigenvector_centrality(original).scores;
    write_degree_csv(original, join(cfg.out_dir, "degree_original.csv"));
    write_hop_csv(original, cfg.hop_sources, derive_seed(cfg.seed, kStreamMetrics),
                  join(cfg.out_dir, "hop_original.csv"));
    write_centrality_csv(original_scores, join(cfg.out_dir, "centrality_original.csv"));

    CsvTable gcd_table;
    gcd_table.header = {"graph_a", "graph_b", "distance"};
    CsvTable summary;
    summary.header = {"graph", "vertices", "edges", "cosine_distance", "gcd"};
    std::vector<double> gcds;
    for (std::size_t i = 0; i < generated.size(); ++i) {
        const std::string tag = "gen" + std::to_string(i);
        write_degree_csv(generated[i], join(cfg.out_dir, "degree_" + tag + ".csv"));
        write_hop_csv(generated[i], cfg.hop_sources, derive_seed(cfg.seed, kStreamMetrics + 1 + i),
                      join(cfg.out_dir, "hop_" + tag + ".csv"));
        const auto scores = eigenvector_centrality(generated[i]).scores;
        write_centrality_csv(scores, join(cfg.out_dir, "centrality_" + tag + ".csv"));

        const double cosine = centrality_cosine_distance(original_scores, scores);
        const double distance = gcd(original, generated[i]).distance;
        gcds.push_back(distance);
        gcd_table.rows.push_back({"original", tag, csv_double(distance)});
        summary.rows.push_back({tag, csv_u64(generated[i].vertex_count()),
                                csv_u64(generated[i].terminal_edge_count()), csv_double(cosine),
                                csv_double(distance)});
    }
    write_csv(gcd_table, join(cfg.out_dir, "gcd.csv"));
    write_csv(summary, join(cfg.out_dir, "summary.csv"));

    if (!gcds.empty()) {
        double mean = 0;
        for (double d : gcds) mean += d;
        mean /= static_cast<double>(gcds.size());
        CsvTable agg;
        agg.header = {"metric", "mean", "ci_lo", "ci_hi"};
        double lo = mean, hi = mean;
        if (gcds.size() > 1) {
            std::tie(lo, hi) =
                bootstrap_mean_ci(gcds, 0.95, 1000, derive_seed(cfg.seed, kStreamBootstrap));
        }
        agg.rows.push_back({"gcd", csv_double(mean), csv_double(lo), csv_double(hi)});
        write_csv(agg, join(cfg.out_dir, "gcd_mean.csv"));
        std::cout << "compare: mean gcd over " << gcds.size() << " graphs = " << mean << "\n";
    } else {
        std::cout << "compare: wrote metrics for the original only\n";
    }
    return 0;
}

namespace {

// One mirror-generation step; returns the generated graph.
Hypergraph mirror_step(const Hypergraph& current, const MirrorConfig& cfg, std::uint32_t n_keep,
                       std::uint32_t recurrence, std::size_t* distinct_rules) {
    const std::uint64_t seed = derive_seed(cfg.seed, kStreamMirror + recurrence);
    if (cfg.generator == "chung-lu") {
        DegreeSequence seq;
        for (auto d : degree_sequence(current)) seq.weights.push_back(static_cast<double>(d));
        *distinct_rules = 0;
        return chung_lu_generate(seq, seed);
    }
    auto [grammar, trace] = extract_grammar(current);
    *distinct_rules = grammar.family_count();
    if (cfg.mode == "approx") return approximate_size_generate(grammar, n_keep, seed);

    SizeTable table = build_size_table(grammar, n_keep + n_keep / 2 + 2);
    std::uint32_t target = n_keep;
    if (table.weight(0, target) == 0) {
        // nearest feasible size keeps the chain alive
        auto feasible = table.feasible_sizes(0);
        if (feasible.empty())
            throw GenerationError("infinity-mirror: grammar admits no derivation");
        std::uint32_t best = feasible.front();
        for (std::uint32_t f : feasible)
            if (std::llabs(static_cast<long long>(f) - static_cast<long long>(n_keep)) <
                std::llabs(static_cast<long long>(best) - static_cast<long long>(n_keep)))
                best = f;
        target = best;
    }
    return size_constrained_generate(grammar, table, target, seed);
}

} // namespace

int cmd_infinity_mirror(const MirrorConfig& cfg) {
    if (cfg.generator != "hrg" && cfg.generator != "chung-lu")
        throw ArgumentError("--generator must be hrg or chung-lu");
    Hypergraph original = load_edge_list(cfg.input);
    const auto n0 = static_cast<std::uint32_t>(original.vertex_count());

    ensure_dir(cfg.out_dir);
    CsvTable report;
    report.header = {"recurrence", "gcd", "vertices", "edges", "distinct_rules"};

    Hypergraph current = original;
    for (std::uint32_t r = 1; r <= cfg.recurrences; ++r) {
        std::size_t distinct_rules = 0;
        Hypergraph generated;
        try {
            generated = mirror_step(current, cfg, n0, r, &distinct_rules);
        } catch (const Error& e) {
            write_csv(report, join(cfg.out_dir, "mirror.csv"));
            throw GenerationError("infinity-mirror failed at recurrence " + std::to_string(r) +
                                  ": " + e.what() + " (partial report emitted)");
        }
        const double distance = gcd(original, generated).distance;
        report.rows.push_back({csv_u64(r), csv_double(distance),
                               csv_u64(generated.vertex_count()),
                               csv_u64(generated.terminal_edge_count()),
                               csv_u64(distinct_rules)});

        auto keep = largest_component(generated);
        std::sort(keep.begin(), keep.end());
        current = induced_subgraph(generated, keep);
        if (current.terminal_edge_count() == 0) {
            write_csv(report, join(cfg.out_dir, "mirror.csv"));
            throw GenerationError("infinity-mirror degenerated to an empty graph at recurrence " +
                                  std::to_string(r) + " (partial report emitted)");
        }
    }
    write_csv(report, join(cfg.out_dir, "mirror.csv"));
    std::cout << "infinity-mirror: " << cfg.recurrences << " recurrences (" << cfg.generator
              << ") -> " << join(cfg.out_dir, "mirror.csv") << "\n";
    return 0;
}

int cmd_extrapolate(const ExtrapolateConfig& cfg) {
    if (cfg.replicates < 1) throw ArgumentError("--replicates must be >= 1");
    if (cfg.fit != "poisson" && cfg.fit != "geometric")
        throw ArgumentError("--fit must be poisson or geometric");
    Hypergraph original = load_edge_list(cfg.input);
    auto [grammar, trace] = extract_grammar(original);

    DegreeModel model = fit_degree_model(original, cfg.fit == "poisson"
                                                       ? DegreeModelFamily::poisson
                                                       : DegreeModelFamily::geometric);
    if (cfg.fit_param) model.param = *cfg.fit_param;

    ensure_dir(cfg.out_dir);
    CsvTable report;
    report.header = {"scale",    "generator", "n_target", "replicates",
                     "mean_gcd", "ci_lo",     "ci_hi"};

    for (double scale : cfg.scales) {
        const auto n_target = static_cast<std::uint32_t>(std::llround(
            scale * static_cast<double>(original.vertex_count())));
        if (n_target < 2) {
            std::cout << "extrapolate: scale " << scale << " yields n<2, skipped\n";
            continue;
        }

        // HRG replicates
        try {
            std::optional<SizeTable> table;
            if (cfg.mode == "exact") table = build_size_table(grammar, n_target);
            std::vector<double> gcds;
            for (std::uint32_t i = 0; i < cfg.replicates; ++i) {
                const std::uint64_t seed =
                    derive_seed(cfg.seed, kStreamGenerate + 100 * gcds.size() + i);
                Hypergraph out =
                    table ? size_constrained_generate(grammar, *table, n_target, seed)
                          : approximate_size_generate(grammar, n_target, seed);
                gcds.push_back(gcd(original, out).distance);
            }
            double mean = 0;
            for (double d : gcds) mean += d;
            mean /= static_cast<double>(gcds.size());
            auto [lo, hi] = gcds.size() > 1
                                ? bootstrap_mean_ci(gcds, 0.95, 1000,
                                                    derive_seed(cfg.seed, kStreamBootstrap))
                                : std::pair<double, double>{mean, mean};
            report.rows.push_back({csv_double(scale), "hrg", csv_u64(n_target),
                                   csv_u64(cfg.replicates), csv_double(mean), csv_double(lo),
                                   csv_double(hi)});
        } catch (const GenerationError& e) {
            std::cout << "extrapolate: hrg at scale " << scale << " skipped: " << e.what()
                      << "\n";
        }

        // Chung-Lu replicates
        {
            std::vector<double> gcds;
            for (std::uint32_t i = 0; i < cfg.replicates; ++i) {
                const std::uint64_t seed = derive_seed(cfg.seed, kStreamChungLu + i);
                auto seq = sample_degree_sequence(model, n_target, seed);
                gcds.push_back(gcd(original, chung_lu_generate(seq, seed)).distance);
            }
            double mean = 0;
            for (double d : gcds) mean += d;
            mean /= static_cast<double>(gcds.size());
            auto [lo, hi] = gcds.size() > 1
                                ? bootstrap_mean_ci(gcds, 0.95, 1000,
                                                    derive_seed(cfg.seed, kStreamBootstrap))
                                : std::pair<double, double>{mean, mean};
            report.rows.push_back({csv_double(scale), "chung-lu", csv_u64(n_target),
                                   csv_u64(cfg.replicates), csv_double(mean), csv_double(lo),
                                   csv_double(hi)});
        }
    }
    write_csv(report, join(cfg.out_dir, "extrapolate.csv"));
    std::cout << "extrapolate: wrote " << join(cfg.out_dir, "extrapolate.csv") << "\n";
    return 0;
}

} // namespace hrg::cli
