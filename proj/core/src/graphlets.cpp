#include "hrg/graphlets.hpp"

#include <algorithm>
#include <cmath>

#include "hrg/error.hpp"

namespace hrg {

namespace {

inline std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
inline std::int64_t choose3(std::int64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

} // namespace

OrbitMatrix orbit_counts(const Hypergraph& g) {
    if (!g.all_terminal())
        throw ArgumentError("orbit_counts: graph must be terminal-only");
    const std::size_t n = g.vertex_count();
    OrbitMatrix m;
    m.vertex_count = n;
    m.rows.assign(n, {});
    if (n == 0) return m;

    std::vector<std::int64_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<VertexId>(v));

    // Per-edge common-neighbor counts and lists; triangles counted per vertex.
    // tri_far[x] accumulates, over triangles at x, the degrees of the other
    // two corners (used by the paw corrections).
    const auto& edges = g.edges();
    std::vector<std::int64_t> tri(n, 0);
    std::vector<std::int64_t> tri_far(n, 0);
    std::vector<std::vector<VertexId>> common(edges.size());
    std::vector<std::int64_t> cn_sum(n, 0); // sum over incident edges of cn(x, nbr)

    std::vector<char> mark(n, 0);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const VertexId u = edges[ei].endpoints[0];
        const VertexId v = edges[ei].endpoints[1];
        for (VertexId w : g.neighbors(u)) mark[w] = 1;
        for (VertexId w : g.neighbors(v))
            if (mark[w]) common[ei].push_back(w);
        for (VertexId w : g.neighbors(u)) mark[w] = 0;

        const auto cn = static_cast<std::int64_t>(common[ei].size());
        cn_sum[u] += cn;
        cn_sum[v] += cn;
        for (VertexId w : common[ei]) {
            if (w > v) { // each triangle once (endpoints are normalized u < v)
                tri[u]++, tri[v]++, tri[w]++;
                tri_far[u] += deg[v] + deg[w] - 4;
                tri_far[v] += deg[u] + deg[w] - 4;
                tri_far[w] += deg[u] + deg[v] - 4;
            }
        }
    }

    // K4 and diamond by scanning common-neighbor pairs of each edge. A K4 is
    // met once per central edge (6 ways); a diamond exactly once (its central
    // edge is unique).
    std::vector<std::int64_t> k4_six(n, 0), o12(n, 0), o13(n, 0);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const VertexId u = edges[ei].endpoints[0];
        const VertexId v = edges[ei].endpoints[1];
        const auto& cn = common[ei];
        for (std::size_t a = 0; a < cn.size(); ++a) {
            for (std::size_t b = a + 1; b < cn.size(); ++b) {
                if (g.has_terminal_edge(cn[a], cn[b])) {
                    k4_six[u]++, k4_six[v]++, k4_six[cn[a]]++, k4_six[cn[b]]++;
                } else {
                    o13[u]++, o13[v]++;
                    o12[cn[a]]++, o12[cn[b]]++;
                }
            }
        }
    }

    // Non-induced 4-cycles through x: sum over opposite vertices w of
    // C(paths(x,w), 2), via two-step walk counting.
    std::vector<std::int64_t> c4_walk(n, 0);
    {
        std::vector<std::int64_t> cnt(n, 0);
        std::vector<VertexId> touched;
        for (std::size_t x = 0; x < n; ++x) {
            for (VertexId a : g.neighbors(static_cast<VertexId>(x))) {
                for (VertexId w : g.neighbors(a)) {
                    if (w == x) continue;
                    if (cnt[w]++ == 0) touched.push_back(w);
                }
            }
            std::int64_t acc = 0;
            for (VertexId w : touched) {
                acc += choose2(cnt[w]);
                cnt[w] = 0;
            }
            touched.clear();
            c4_walk[x] = acc;
        }
    }

    // S1(a) = sum over neighbors b of a of (deg(b) - 1).
    std::vector<std::int64_t> s1(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (VertexId b : g.neighbors(static_cast<VertexId>(a))) s1[a] += deg[b] - 1;

    // cn(x, a) per incident edge again, but grouped per endpoint for the
    // path and paw corrections.
    std::vector<std::int64_t> tri_nb(n, 0);   // sum over nbrs a of tri[a]
    std::vector<std::int64_t> s1_nb(n, 0);    // sum over nbrs a of S1(a)
    std::vector<std::int64_t> claw_nb(n, 0);  // sum over nbrs a of C(deg(a)-1, 2)
    for (std::size_t x = 0; x < n; ++x) {
        for (VertexId a : g.neighbors(static_cast<VertexId>(x))) {
            tri_nb[x] += tri[a];
            s1_nb[x] += s1[a];
            claw_nb[x] += choose2(deg[a] - 1);
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        auto& row = m.rows[x];
        const std::int64_t d = deg[x];
        const std::int64_t t = tri[x];

        const std::int64_t k4 = k4_six[x] / 6;
        const std::int64_t dia2 = o12[x];
        const std::int64_t dia3 = o13[x];
        const std::int64_t cyc4 = c4_walk[x] - dia2 - dia3 - 3 * k4;

        const std::int64_t paw_attach = t * (d - 2) - 2 * dia3 - 3 * k4;
        const std::int64_t paw_far = tri_far[x] - 2 * dia2 - 2 * dia3 - 6 * k4;
        const std::int64_t paw_tail = tri_nb[x] - cn_sum[x] - 2 * dia2 - 3 * k4;

        const std::int64_t claw_center = choose3(d) - paw_attach - dia3 - k4;
        const std::int64_t claw_leaf =
            claw_nb[x] - paw_tail - paw_far - 2 * dia2 - dia3 - 3 * k4;

        const std::int64_t path3_mid = (d - 1) * s1[x] - cn_sum[x];
        const std::int64_t path3_end = s1_nb[x] - d * (d - 1) - cn_sum[x];
        const std::int64_t p4_mid =
            path3_mid - 2 * cyc4 - paw_far - 2 * paw_attach - 2 * dia2 - 4 * dia3 - 6 * k4;
        const std::int64_t p4_end =
            path3_end - 2 * cyc4 - 2 * paw_tail - paw_far - 4 * dia2 - 2 * dia3 - 6 * k4;

        const std::int64_t vals[kOrbitCount] = {
            d,
            s1[x] - 2 * t,      // wedge end
            choose2(d) - t,     // wedge center
            t,
            p4_end,
            p4_mid,
            claw_leaf,
            claw_center,
            cyc4,
            paw_tail,
            paw_far,
            paw_attach,
            dia2,
            dia3,
            k4,
        };
        for (std::size_t o = 0; o < kOrbitCount; ++o) {
            if (vals[o] < 0)
                throw InternalError("orbit_counts: negative count (orbit " + std::to_string(o) +
                                    ")");
            row[o] = static_cast<std::uint64_t>(vals[o]);
        }
    }
    return m;
}

namespace {

// Average ranks (1-based, ties averaged).
std::vector<double> ranked(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0; // constant column
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

CorrelationMatrix graphlet_correlations(const OrbitMatrix& m) {
    constexpr std::size_t k = kCorrelationOrbits.size();
    // Column vectors over vertices plus the all-ones stabilizer row, then
    // rank-transformed.
    std::array<std::vector<double>, k> ranks;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<double> col(m.vertex_count + 1, 1.0);
        for (std::size_t v = 0; v < m.vertex_count; ++v)
            col[v] = static_cast<double>(m.rows[v][kCorrelationOrbits[c]]);
        ranks[c] = ranked(col);
    }
    CorrelationMatrix out{};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            out[i][j] = i == j ? pearson(ranks[i], ranks[i]) : pearson(ranks[i], ranks[j]);
    }
    return out;
}

GcdResult gcd(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() == 0 || b.vertex_count() == 0)
        throw ArgumentError("gcd: graphs must be nonempty");
    GcdResult result;
    result.first = graphlet_correlations(orbit_counts(a));
    result.second = graphlet_correlations(orbit_counts(b));
    double acc = 0.0;
    for (std::size_t i = 0; i < kCorrelationOrbits.size(); ++i) {
        for (std::size_t j = i + 1; j < kCorrelationOrbits.size(); ++j) {
            const double d = result.first[i][j] - result.second[i][j];
            acc += d * d;
        }
    }
    result.distance = std::sqrt(acc);
    return result;
}

} // namespace hrg
