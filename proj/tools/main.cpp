#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "hrg/error.hpp"

namespace {

// Exit codes: 0 success, 2 argument error, 3 infeasible generation, 4 I/O.

// Expands "--config file.json" into leading CLI arguments for the active
// subcommand; explicitly passed flags win because every option takes its
// last occurrence.
std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
    }
    if (config_path.empty() || args.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw hrg::IoError("cannot open config: " + config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw hrg::IoError(config_path + ": " + e.what());
    }

    std::vector<std::string> expanded{args.front()}; // subcommand first
    for (const auto& [key, value] : doc.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) expanded.push_back("--" + key);
        } else if (value.is_array()) {
            for (const auto& item : value) {
                expanded.push_back("--" + key);
                expanded.push_back(item.is_string() ? item.get<std::string>() : item.dump());
            }
        } else {
            expanded.push_back("--" + key);
            expanded.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    expanded.insert(expanded.end(), args.begin() + 1, args.end());
    return expanded;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph grammar extraction, generation, and comparison"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    hrg::cli::ExtractConfig extract;
    auto* cmd_ex = app.add_subcommand("extract",
                                      "Learn a grammar from BFS samples of a graph");
    cmd_ex->add_option("-i,--input", extract.input, "input edge list")->required()->take_last();
    cmd_ex->add_option("-o,--out", extract.out_dir, "output directory")->required()->take_last();
    cmd_ex->add_option("--k", extract.k, "number of BFS samples")->take_last();
    cmd_ex->add_option("--s", extract.s, "vertices per sample (0 = whole graph)")->take_last();
    cmd_ex->add_option("--seed", extract.seed, "RNG seed")->take_last();
    cmd_ex->add_flag("--strict-connected", extract.strict_connected,
                     "error on disconnected input instead of keeping the largest component");

    hrg::cli::ExactConfig exact;
    auto* cmd_xa = app.add_subcommand("exact", "Replay a trace into an isomorphic copy");
    cmd_xa->add_option("-g,--grammar", exact.grammar_file, "grammar.json")->required()->take_last();
    cmd_xa->add_option("-t,--traces", exact.trace_file, "traces.json")->required()->take_last();
    cmd_xa->add_option("--sample-index", exact.sample_index, "which recorded trace")->take_last();
    cmd_xa->add_option("-o,--out", exact.output, "output edge list")->required()->take_last();

    hrg::cli::GenerateConfig gen;
    auto* cmd_gen = app.add_subcommand("generate", "Stochastically generate replicate graphs");
    cmd_gen->add_option("-g,--grammar", gen.grammar_file, "grammar.json")->required()->take_last();
    cmd_gen->add_option("-o,--out", gen.out_dir, "output directory")->required()->take_last();
    cmd_gen->add_option("--replicates", gen.replicates, "number of graphs")->take_last();
    std::uint32_t size_opt = 0;
    double scale_opt = 0.0;
    auto* size_flag = cmd_gen->add_option("--size", size_opt, "target vertex count")->take_last();
    auto* scale_flag =
        cmd_gen->add_option("--scale", scale_opt, "target size as a multiple of the source")
            ->take_last();
    cmd_gen->add_option("--mode", gen.mode, "exact|approx")->take_last();
    cmd_gen->add_option("--seed", gen.seed, "RNG seed")->take_last();

    hrg::cli::CompareConfig cmp;
    auto* cmd_cmp = app.add_subcommand("compare", "Metric comparison against an original graph");
    cmd_cmp->add_option("-i,--input", cmp.original, "original edge list")->required()->take_last();
    cmd_cmp->add_option("generated", cmp.generated, "generated edge lists");
    cmd_cmp->add_option("-o,--out", cmp.out_dir, "output directory")->required()->take_last();
    cmd_cmp->add_option("--hop-sources", cmp.hop_sources, "BFS sources for hop plots")
        ->take_last();
    cmd_cmp->add_option("--seed", cmp.seed, "RNG seed")->take_last();

    hrg::cli::MirrorConfig mirror;
    auto* cmd_mir = app.add_subcommand("infinity-mirror",
                                       "Repeatedly re-learn a model from its own output");
    cmd_mir->add_option("-i,--input", mirror.input, "original edge list")->required()->take_last();
    cmd_mir->add_option("-o,--out", mirror.out_dir, "output directory")->required()->take_last();
    cmd_mir->add_option("--recurrences", mirror.recurrences, "chain length")->take_last();
    cmd_mir->add_option("--generator", mirror.generator, "hrg|chung-lu")->take_last();
    cmd_mir->add_option("--mode", mirror.mode, "exact|approx")->take_last();
    cmd_mir->add_option("--seed", mirror.seed, "RNG seed")->take_last();

    hrg::cli::ExtrapolateConfig extra;
    auto* cmd_xt = app.add_subcommand("extrapolate",
                                      "Generate at scaled sizes and score against the original");
    cmd_xt->add_option("-i,--input", extra.input, "original edge list")->required()->take_last();
    cmd_xt->add_option("-o,--out", extra.out_dir, "output directory")->required()->take_last();
    cmd_xt->add_option("--scales", extra.scales, "scale factors")->delimiter(',');
    cmd_xt->add_option("--replicates", extra.replicates, "graphs per scale")->take_last();
    cmd_xt->add_option("--fit", extra.fit, "poisson|geometric degree model for Chung-Lu")
        ->take_last();
    double fit_param = 0.0;
    auto* fit_param_flag =
        cmd_xt->add_option("--fit-param", fit_param, "override the fitted parameter")
            ->take_last();
    cmd_xt->add_option("--mode", extra.mode, "exact|approx")->take_last();
    cmd_xt->add_option("--seed", extra.seed, "RNG seed")->take_last();

    try {
        auto args = expand_args(argc, argv);
        std::vector<const char*> cargs{argv[0]};
        for (const auto& a : args) cargs.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(cargs.size()), cargs.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        if (cmd_ex->parsed()) return hrg::cli::cmd_extract(extract);
        if (cmd_xa->parsed()) return hrg::cli::cmd_exact(exact);
        if (cmd_gen->parsed()) {
            if (size_flag->count()) gen.size = size_opt;
            if (scale_flag->count()) gen.scale = scale_opt;
            return hrg::cli::cmd_generate(gen);
        }
        if (cmd_cmp->parsed()) return hrg::cli::cmd_compare(cmp);
        if (cmd_mir->parsed()) return hrg::cli::cmd_infinity_mirror(mirror);
        if (cmd_xt->parsed()) {
            if (fit_param_flag->count()) extra.fit_param = fit_param;
            return hrg::cli::cmd_extrapolate(extra);
        }
        return 2;
    } catch (const hrg::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hrg::GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hrg::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
