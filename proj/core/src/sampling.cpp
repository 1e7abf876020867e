#include "hrg/sampling.hpp"

#include <algorithm>
#include <deque>

#include "hrg/error.hpp"
#include "hrg/rng.hpp"

namespace hrg {

std::vector<Hypergraph> bfs_sample(const Hypergraph& g, const SampleSpec& spec) {
    if (spec.k < 1 || spec.s < 1)
        throw ArgumentError("bfs_sample: k and s must be >= 1");
    if (!is_connected(g))
        throw ArgumentError("bfs_sample: input graph must be connected");

    const std::size_t n = g.vertex_count();
    const std::size_t take = std::min<std::size_t>(spec.s, n);
    Rng rng(spec.seed);

    std::vector<Hypergraph> samples;
    samples.reserve(spec.k);
    std::vector<char> visited(n);
    for (std::uint32_t i = 0; i < spec.k; ++i) {
        const auto start =
            static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        std::fill(visited.begin(), visited.end(), 0);
        std::deque<VertexId> queue{start};
        visited[start] = 1;
        std::vector<VertexId> picked;
        picked.reserve(take);
        while (!queue.empty() && picked.size() < take) {
            VertexId v = queue.front();
            queue.pop_front();
            picked.push_back(v);
            for (VertexId w : g.neighbors(v)) { // ascending id order
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(picked.begin(), picked.end());
        samples.push_back(induced_subgraph(g, picked));
    }
    return samples;
}

} // namespace hrg
