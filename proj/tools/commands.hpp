#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Command implementations behind the CLI; tests drive these directly.

namespace hrg::cli {

struct ExtractConfig {
    std::string input;
    std::string out_dir;
    std::uint32_t k = 4;
    std::uint32_t s = 500; // 0 means s = n (no subsampling)
    std::uint64_t seed = 0;
    bool strict_connected = false;
};
int cmd_extract(const ExtractConfig& cfg);

struct ExactConfig {
    std::string grammar_file;
    std::string trace_file;
    std::uint32_t sample_index = 0;
    std::string output;
};
int cmd_exact(const ExactConfig& cfg);

struct GenerateConfig {
    std::string grammar_file;
    std::string out_dir;
    std::uint32_t replicates = 20;
    std::optional<std::uint32_t> size;
    std::optional<double> scale;
    std::string mode = "exact"; // exact|approx
    std::uint64_t seed = 0;
};
int cmd_generate(const GenerateConfig& cfg);

struct CompareConfig {
    std::string original;
    std::vector<std::string> generated;
    std::string out_dir;
    std::uint32_t hop_sources = 50;
    std::uint64_t seed = 0;
};
int cmd_compare(const CompareConfig& cfg);

struct MirrorConfig {
    std::string input;
    std::string out_dir;
    std::uint32_t recurrences = 10;
    std::string generator = "hrg"; // hrg|chung-lu
    std::string mode = "exact";    // exact falls back to the nearest feasible size
    std::uint64_t seed = 0;
};
int cmd_infinity_mirror(const MirrorConfig& cfg);

struct ExtrapolateConfig {
    std::string input;
    std::string out_dir;
    std::vector<double> scales{2.0, 3.0, 4.0, 8.0};
    std::uint32_t replicates = 20;
    std::string fit = "poisson"; // poisson|geometric
    std::optional<double> fit_param;
    std::string mode = "approx";
    std::uint64_t seed = 0;
};
int cmd_extrapolate(const ExtrapolateConfig& cfg);

} // namespace hrg::cli
