#include "hrg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "hrg/error.hpp"
#include "hrg/rng.hpp"

namespace hrg {

std::vector<std::pair<std::uint32_t, double>> DegreeDistribution::ccdf() const {
    std::vector<std::pair<std::uint32_t, double>> out;
    if (vertex_total == 0) return out;
    std::uint64_t at_least = vertex_total;
    for (const auto& [d, count] : histogram) {
        out.emplace_back(d, static_cast<double>(at_least) / static_cast<double>(vertex_total));
        at_least -= count;
    }
    return out;
}

std::optional<double> DegreeDistribution::powerlaw_exponent() const {
    // Continuous-approximation MLE over the positive-degree tail, x_min = 1.
    double log_sum = 0.0;
    std::uint64_t n = 0;
    for (const auto& [d, count] : histogram) {
        if (d == 0) continue;
        log_sum += static_cast<double>(count) * std::log(static_cast<double>(d) / 0.5);
        n += count;
    }
    if (n == 0 || log_sum <= 0.0) return std::nullopt;
    return 1.0 + static_cast<double>(n) / log_sum;
}

DegreeDistribution degree_distribution(const Hypergraph& g) {
    DegreeDistribution dist;
    dist.vertex_total = g.vertex_count();
    dist.edge_total = g.terminal_edge_count();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        ++dist.histogram[g.degree(static_cast<VertexId>(v))];
    return dist;
}

CentralityResult eigenvector_centrality(const Hypergraph& g, double tol,
                                        std::uint32_t max_iterations) {
    const std::size_t n = g.vertex_count();
    CentralityResult result;
    if (n == 0) return result;
    if (g.terminal_edge_count() == 0) {
        result.scores.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        return result;
    }

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(n);
    for (std::uint32_t iter = 1; iter <= max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (VertexId w : g.neighbors(static_cast<VertexId>(i))) acc += v[w];
            av[i] = acc;
        }
        const double lambda = std::inner_product(v.begin(), v.end(), av.begin(), 0.0);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = av[i] - lambda * v[i];
            res += d * d;
        }
        res = std::sqrt(res);
        result.eigenvalue = lambda;
        result.residual = lambda > 0.0 ? res / lambda : res;
        result.iterations = iter;
        if (result.residual <= tol) {
            result.converged = true;
            for (std::size_t i = 0; i < n; ++i) v[i] = std::abs(v[i]);
            const double norm =
                std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
            for (double& x : v) x /= norm;
            result.scores = std::move(v);
            return result;
        }
        // shifted step: w = (A + I) v
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            av[i] += v[i];
            norm += av[i] * av[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / norm;
    }
    result.converged = false;
    for (std::size_t i = 0; i < n; ++i) v[i] = std::abs(v[i]);
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;
    result.scores = std::move(v);
    return result;
}

double centrality_cosine_distance(std::span<const double> a, std::span<const double> b) {
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    const std::size_t n = std::max(x.size(), y.size());
    x.resize(n, 0.0);
    y.resize(n, 0.0);

    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    if (nx == 0.0 || ny == 0.0)
        throw ArgumentError("centrality_cosine_distance: zero vector");
    const double cosine = dot / (std::sqrt(nx) * std::sqrt(ny));
    return std::clamp(1.0 - cosine, 0.0, 1.0);
}

HopPlot hop_plot(const Hypergraph& g, std::uint32_t num_sources, std::uint64_t seed) {
    if (num_sources < 1) throw ArgumentError("hop_plot: need at least one source");
    const std::size_t n = g.vertex_count();
    HopPlot plot;
    if (n == 0) return plot;

    // Distinct sources via partial Fisher-Yates.
    const std::size_t take = std::min<std::size_t>(num_sources, n);
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), 0u);
    Rng rng(seed);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
        std::swap(ids[i], ids[j]);
    }
    plot.sources = static_cast<std::uint32_t>(take);

    std::vector<std::uint64_t> at_hop; // vertices first reached at hop x, all sources
    std::vector<std::int32_t> dist(n);
    for (std::size_t s = 0; s < take; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<VertexId> queue{ids[s]};
        dist[ids[s]] = 0;
        if (at_hop.empty()) at_hop.resize(1, 0);
        ++at_hop[0];
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                if (at_hop.size() <= static_cast<std::size_t>(dist[w]))
                    at_hop.resize(dist[w] + 1, 0);
                ++at_hop[static_cast<std::size_t>(dist[w])];
                queue.push_back(w);
            }
        }
    }
    plot.cumulative_pairs.resize(at_hop.size());
    std::uint64_t acc = 0;
    for (std::size_t x = 0; x < at_hop.size(); ++x) {
        acc += at_hop[x];
        plot.cumulative_pairs[x] = acc;
    }
    return plot;
}

std::pair<double, double> bootstrap_mean_ci(std::span<const double> values, double level,
                                            std::uint32_t resamples, std::uint64_t seed) {
    if (values.empty()) throw ArgumentError("bootstrap_mean_ci: empty sample");
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    std::vector<double> means(resamples);
    for (std::uint32_t r = 0; r < resamples; ++r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) acc += values[pick(rng)];
        means[r] = acc / static_cast<double>(values.size());
    }
    std::sort(means.begin(), means.end());
    const double alpha = (1.0 - level) / 2.0;
    const auto lo = static_cast<std::size_t>(alpha * (resamples - 1));
    const auto hi = static_cast<std::size_t>((1.0 - alpha) * (resamples - 1));
    return {means[lo], means[hi]};
}

} // namespace hrg
