#include "hrg/chung_lu.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "hrg/error.hpp"
#include "hrg/rng.hpp"

namespace hrg {

double DegreeSequence::total() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

std::size_t DegreeSequence::clamped_entries() const {
    const double w = total();
    std::size_t count = 0;
    for (double x : weights)
        if (x * x > w) ++count;
    return count;
}

namespace {

constexpr std::size_t kPairwiseLimit = 20000;

Hypergraph generate_pairwise(const DegreeSequence& seq, Rng& rng) {
    const std::size_t n = seq.weights.size();
    const double w = seq.total();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<EdgePair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        if (seq.weights[i] <= 0.0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = std::min(1.0, seq.weights[i] * seq.weights[j] / w);
            if (p > 0.0 && unit(rng) < p)
                pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return Hypergraph::simple(n, pairs);
}

// Weight-bucketed skip sampling (Miller-Hagberg): with weights sorted
// descending, the bound p stays valid over a run of j's and geometric skips
// visit only accepted candidates in expectation.
Hypergraph generate_sorted_skip(const DegreeSequence& seq, Rng& rng) {
    const std::size_t n = seq.weights.size();
    const double w = seq.total();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (seq.weights[a] != seq.weights[b]) return seq.weights[a] > seq.weights[b];
        return a < b;
    });

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<EdgePair> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double wi = seq.weights[order[i]];
        if (wi <= 0.0) break;
        std::size_t j = i + 1;
        double p = std::min(1.0, wi * seq.weights[order[j]] / w);
        while (j < n && p > 0.0) {
            if (p < 1.0) {
                const double r = unit(rng);
                j += static_cast<std::size_t>(std::floor(std::log(r) / std::log(1.0 - p)));
            }
            if (j < n) {
                const double q = std::min(1.0, wi * seq.weights[order[j]] / w);
                if (unit(rng) < q / p)
                    pairs.emplace_back(static_cast<VertexId>(order[i]),
                                       static_cast<VertexId>(order[j]));
                p = q;
                ++j;
            }
        }
    }
    return Hypergraph::simple(n, pairs);
}

} // namespace

Hypergraph chung_lu_generate(const DegreeSequence& seq, std::uint64_t seed) {
    if (seq.weights.empty()) throw ArgumentError("chung_lu_generate: empty sequence");
    for (double x : seq.weights)
        if (x < 0.0 || !std::isfinite(x))
            throw ArgumentError("chung_lu_generate: weights must be finite and nonnegative");
    if (seq.total() <= 0.0) throw ArgumentError("chung_lu_generate: total weight must be > 0");

    Rng rng(seed);
    if (seq.weights.size() <= kPairwiseLimit) return generate_pairwise(seq, rng);
    return generate_sorted_skip(seq, rng);
}

DegreeModel fit_degree_model(const Hypergraph& g, DegreeModelFamily family) {
    if (g.vertex_count() == 0) throw ArgumentError("fit_degree_model: empty graph");
    const double mean = 2.0 * static_cast<double>(g.terminal_edge_count()) /
                        static_cast<double>(g.vertex_count());
    DegreeModel model;
    model.family = family;
    model.param = family == DegreeModelFamily::poisson ? mean : 1.0 / (1.0 + mean);
    return model;
}

DegreeSequence sample_degree_sequence(const DegreeModel& model, std::uint32_t n_target,
                                      std::uint64_t seed, bool resample_zeros) {
    if (n_target < 1) throw ArgumentError("sample_degree_sequence: n_target must be >= 1");
    Rng rng(seed);
    DegreeSequence seq;
    seq.weights.reserve(n_target);

    auto draw = [&]() -> double {
        if (model.family == DegreeModelFamily::poisson) {
            if (model.param <= 0.0) throw ArgumentError("poisson lambda must be > 0");
            return static_cast<double>(std::poisson_distribution<std::uint32_t>(model.param)(rng));
        }
        if (model.param <= 0.0 || model.param >= 1.0)
            throw ArgumentError("geometric p must be in (0,1)");
        return static_cast<double>(std::geometric_distribution<std::uint32_t>(model.param)(rng));
    };

    for (std::uint32_t i = 0; i < n_target; ++i) {
        double x = draw();
        if (resample_zeros) {
            int tries = 0;
            while (x == 0.0 && ++tries < 1000) x = draw();
            if (x == 0.0) x = 1.0;
        }
        seq.weights.push_back(x);
    }
    return seq;
}

void save_degree_sequence(const DegreeSequence& seq, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    for (double x : seq.weights) out << static_cast<std::uint64_t>(std::llround(x)) << '\n';
    if (!out) throw IoError("write failure on " + path);
}

DegreeSequence load_degree_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    DegreeSequence seq;
    std::uint64_t x = 0;
    while (in >> x) seq.weights.push_back(static_cast<double>(x));
    if (!in.eof()) throw IoError(path + ": expected one integer per line");
    return seq;
}

} // namespace hrg
