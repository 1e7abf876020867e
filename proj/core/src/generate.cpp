#include "hrg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hrg/error.hpp"
#include "hrg/rng.hpp"

namespace hrg {

namespace {

constexpr std::uint64_t kDefaultFreeCap = 50000;

std::uint64_t cap_for(const GenerateOptions& opts, std::uint64_t n_target) {
    if (opts.step_cap) return opts.step_cap;
    return n_target ? 50 * n_target : kDefaultFreeCap;
}

// Uniform BigInt in [0, bound). Draws the minimal number of 64-bit limbs and
// rejects overshoot.
BigInt uniform_below(Rng& rng, const BigInt& bound) {
    if (bound <= 0) throw InternalError("uniform_below: empty range");
    if (bound == 1) return BigInt(0);
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned limbs = (bits + 63) / 64;
    while (true) {
        BigInt x = 0;
        for (unsigned i = 0; i < limbs; ++i) {
            x <<= 64;
            x |= BigInt(rng());
        }
        x >>= (limbs * 64 - bits);
        if (x < bound) return x;
    }
}

std::size_t pick_weighted(Rng& rng, const std::vector<BigInt>& weights, const BigInt& total) {
    BigInt r = uniform_below(rng, total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    throw InternalError("pick_weighted: weights do not sum to total");
}

std::size_t pick_by_count(Rng& rng, const Grammar& g, std::span<const std::uint32_t> fams,
                          std::uint64_t total) {
    std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    for (std::uint32_t f : fams) {
        const std::uint64_t c = g.family(f).count;
        if (r < c) return f;
        r -= c;
    }
    throw InternalError("pick_by_count: counts do not sum to total");
}

} // namespace

DerivationState::DerivationState() {
    LiveEdge start;
    start.rank = 0;
    start.alive = true;
    edges_.push_back(std::move(start));
    queue_.push_back(0);
    live_count_ = 1;
}

std::uint64_t DerivationState::front_live() const {
    while (!queue_.empty() && !edges_[queue_.front()].alive) queue_.pop_front();
    if (queue_.empty()) throw InternalError("front_live: no live nonterminal");
    return queue_.front();
}

std::uint32_t DerivationState::live_rank(std::uint64_t handle) const {
    if (handle >= edges_.size() || !edges_[handle].alive)
        throw ArgumentError("live_rank: dead or unknown handle");
    return edges_[handle].rank;
}

std::vector<std::uint64_t> DerivationState::apply_rule(std::uint64_t handle, const Production& p) {
    if (handle >= edges_.size() || !edges_[handle].alive)
        throw ArgumentError("apply_rule: dead or unknown handle");
    LiveEdge& target = edges_[handle];
    if (target.rank != p.lhs_rank)
        throw ArgumentError("apply_rule: rank mismatch (edge " + std::to_string(target.rank) +
                            ", rule " + std::to_string(p.lhs_rank) + ")");

    // External i of the RHS is vertex i and fuses with attachment i; internal
    // vertices get fresh ids.
    std::vector<VertexId> map(p.vertex_count);
    for (std::uint32_t i = 0; i < p.lhs_rank; ++i) map[i] = target.attachments[i];
    for (std::uint32_t i = p.lhs_rank; i < p.vertex_count; ++i)
        map[i] = static_cast<VertexId>(n_++);

    target.alive = false;
    --live_count_;
    for (const auto& [u, v] : p.terminal_edges) {
        VertexId a = map[u], b = map[v];
        terminal_.emplace_back(std::min(a, b), std::max(a, b));
    }

    std::vector<std::uint64_t> created;
    created.reserve(p.nonterminal_edges.size());
    for (const auto& nt : p.nonterminal_edges) {
        LiveEdge e;
        e.rank = nt.rank;
        e.alive = true;
        e.attachments.reserve(nt.endpoints.size());
        for (VertexId v : nt.endpoints) e.attachments.push_back(map[v]);
        const std::uint64_t h = edges_.size();
        edges_.push_back(std::move(e));
        queue_.push_back(h);
        created.push_back(h);
        ++live_count_;
    }
    ++steps_;
    return created;
}

Hypergraph DerivationState::finish(bool simplify) const {
    if (has_live()) throw InternalError("finish: live nonterminals remain");
    if (simplify) return Hypergraph::simple(n_, terminal_);
    std::vector<Edge> edges;
    edges.reserve(terminal_.size());
    for (const auto& [u, v] : terminal_) edges.push_back(terminal_edge(u, v));
    return Hypergraph::make(n_, std::move(edges));
}

Hypergraph exact_generate(const Grammar& g, const DerivationTrace& trace) {
    if (trace.entries.empty()) throw GenerationError("exact_generate: empty trace");

    struct Frame {
        std::vector<std::uint64_t> handles;
        const std::vector<std::uint32_t>* slots;
        std::size_t next = 0;
    };

    DerivationState state;
    std::vector<Frame> stack;
    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        const TraceEntry& entry = trace.entries[i];
        const std::size_t fam = g.find(entry.signature);
        if (fam == Grammar::npos)
            throw GenerationError("exact_generate: signature not in grammar: " + entry.signature);
        const Production& p = g.family(fam).production;
        if (entry.child_slots.size() != p.nonterminal_edges.size())
            throw GenerationError("exact_generate: child slot arity mismatch at entry " +
                                  std::to_string(i));

        std::uint64_t handle;
        if (i == 0) {
            handle = state.front_live(); // the start edge
            if (p.lhs_rank != 0)
                throw GenerationError("exact_generate: first rule must have the start symbol LHS");
        } else {
            while (!stack.empty() && stack.back().next == stack.back().slots->size())
                stack.pop_back();
            if (stack.empty())
                throw GenerationError("exact_generate: trace is longer than the derivation");
            Frame& top = stack.back();
            handle = top.handles[(*top.slots)[top.next++]];
        }
        if (state.live_rank(handle) != p.lhs_rank)
            throw GenerationError("exact_generate: rank mismatch at entry " + std::to_string(i));

        std::vector<std::uint64_t> created = state.apply_rule(handle, p);
        stack.push_back(Frame{std::move(created), &entry.child_slots, 0});
    }
    while (!stack.empty() && stack.back().next == stack.back().slots->size()) stack.pop_back();
    if (!stack.empty() || state.has_live())
        throw GenerationError("exact_generate: derivation is longer than the trace");

    // Exact replay of a simple graph can never duplicate an edge, so build
    // unsimplified; duplicate detection then doubles as a replay check.
    return state.finish(false);
}

Hypergraph stochastic_generate(const Grammar& g, std::uint64_t seed, const GenerateOptions& opts) {
    if (g.start_family_count() == 0)
        throw ArgumentError("stochastic_generate: grammar has no start rule");
    const std::uint64_t cap = cap_for(opts, 0);
    Rng rng(seed);
    DerivationState state;
    while (state.has_live()) {
        if (state.steps() >= cap)
            throw GenerationError("stochastic_generate: step cap (" + std::to_string(cap) +
                                  ") exceeded");
        const std::uint64_t handle = state.front_live();
        const std::uint32_t rank = state.live_rank(handle);
        auto fams = g.families_of_rank(rank);
        const std::uint64_t total = g.rank_total(rank);
        if (fams.empty() || total == 0)
            throw GenerationError("stochastic_generate: no rule with LHS rank " +
                                  std::to_string(rank));
        const std::size_t f = pick_by_count(rng, g, fams, total);
        state.apply_rule(handle, g.family(f).production);
    }
    return state.finish(opts.simplify);
}

std::string describe_feasible_sizes(const SizeTable& table, std::uint32_t n_target) {
    auto sizes = table.feasible_sizes(0);
    std::uint32_t below = 0, above = 0;
    bool has_below = false, has_above = false;
    for (std::uint32_t s : sizes) {
        if (s < n_target) {
            below = s;
            has_below = true;
        } else if (s > n_target && !has_above) {
            above = s;
            has_above = true;
        }
    }
    std::string msg = "no derivation with exactly " + std::to_string(n_target) + " vertices;";
    if (has_below) msg += " nearest feasible below: " + std::to_string(below) + ";";
    if (has_above) msg += " nearest feasible above: " + std::to_string(above) + ";";
    if (!has_below && !has_above) msg += " no feasible size within table range;";
    return msg;
}

Hypergraph size_constrained_generate(const Grammar& g, const SizeTable& table,
                                     std::uint32_t n_target, std::uint64_t seed,
                                     const GenerateOptions& opts,
                                     std::vector<Signature>* derivation_log) {
    if (n_target > table.n_max())
        throw ArgumentError("size_constrained_generate: n_target exceeds table range");
    if (table.weight(0, n_target) == 0)
        throw GenerationError("size_constrained_generate: " +
                              describe_feasible_sizes(table, n_target));

    const std::uint64_t cap = cap_for(opts, n_target);
    Rng rng(seed);
    DerivationState state;

    struct Pending {
        std::uint64_t handle;
        std::uint32_t budget;
    };
    // LIFO with children pushed in reverse keeps application order depth-first
    // in production edge order, matching the derivation-log keys used by the
    // enumeration oracle.
    std::vector<Pending> pending{{state.front_live(), n_target}};
    while (!pending.empty()) {
        if (state.steps() >= cap)
            throw GenerationError("size_constrained_generate: step cap exceeded");
        auto [handle, budget] = pending.back();
        pending.pop_back();
        const std::uint32_t rank = state.live_rank(handle);

        // Family weights conditioned on this subtree producing `budget`
        // internal vertices.
        auto fams = g.families_of_rank(rank);
        std::vector<BigInt> weights;
        weights.reserve(fams.size());
        BigInt total = 0;
        for (std::uint32_t f : fams) {
            const Production& p = g.family(f).production;
            BigInt w = 0;
            if (p.internal_count() <= budget) {
                const std::uint32_t s = budget - p.internal_count();
                if (p.is_terminal()) {
                    if (s == 0) w = BigInt(g.family(f).count);
                } else {
                    const auto c = static_cast<std::uint32_t>(p.nonterminal_edges.size());
                    w = BigInt(g.family(f).count) * table.family_prefix(f, c - 1, s);
                }
            }
            total += w;
            weights.push_back(std::move(w));
        }
        if (total == 0)
            throw InternalError("size_constrained_generate: no feasible rule for rank " +
                                std::to_string(rank) + " at budget " + std::to_string(budget));
        const std::uint32_t fam = fams[pick_weighted(rng, weights, total)];
        const Production& p = g.family(fam).production;
        if (derivation_log) derivation_log->push_back(g.signature(fam));

        std::vector<std::uint64_t> created = state.apply_rule(handle, p);

        // Split the remaining budget among children, peeling from the last:
        // child j gets n_j with weight W[rank_j][n_j] * prefix(j-1, s - n_j).
        std::uint32_t s = budget - p.internal_count();
        std::vector<std::uint32_t> child_budget(created.size(), 0);
        for (std::size_t j = created.size(); j-- > 1;) {
            const std::uint32_t child_rank = p.nonterminal_edges[j].rank;
            std::vector<BigInt> split_weights(s + 1);
            BigInt split_total = 0;
            for (std::uint32_t nj = 0; nj <= s; ++nj) {
                const BigInt& a = table.weight(child_rank, nj);
                if (a == 0) continue;
                const BigInt& b = table.family_prefix(fam, static_cast<std::uint32_t>(j - 1),
                                                      s - nj);
                if (b == 0) continue;
                split_weights[nj] = a * b;
                split_total += split_weights[nj];
            }
            if (split_total == 0)
                throw InternalError("size_constrained_generate: infeasible budget split");
            const auto nj = static_cast<std::uint32_t>(
                pick_weighted(rng, split_weights, split_total));
            child_budget[j] = nj;
            s -= nj;
        }
        if (!created.empty()) child_budget[0] = s;

        for (std::size_t j = created.size(); j-- > 0;)
            pending.push_back({created[j], child_budget[j]});
    }

    Hypergraph out = state.finish(opts.simplify);
    if (state.vertex_count() != n_target)
        throw InternalError("size_constrained_generate: produced wrong vertex count");
    return out;
}

namespace {

// Count-weighted expected completed subtree size per rank, by value
// iteration; diverging systems saturate at the clamp and simply steer the
// sampler toward terminating rules.
std::vector<double> expected_sizes(const Grammar& g) {
    constexpr double kClamp = 1e12;
    std::vector<double> e(g.max_rank() + 1, 1.0);
    for (int round = 0; round < 256; ++round) {
        std::vector<double> next(e.size(), 0.0);
        for (std::uint32_t r = 0; r < e.size(); ++r) {
            const auto fams = g.families_of_rank(r);
            if (fams.empty()) {
                next[r] = kClamp;
                continue;
            }
            double acc = 0.0;
            const double total = static_cast<double>(g.rank_total(r));
            for (std::uint32_t f : fams) {
                const Production& p = g.family(f).production;
                double sub = p.internal_count();
                for (const auto& nt : p.nonterminal_edges) sub += e[nt.rank];
                acc += (static_cast<double>(g.family(f).count) / total) * sub;
            }
            next[r] = std::min(acc, kClamp);
        }
        e = std::move(next);
    }
    return e;
}

} // namespace

Hypergraph approximate_size_generate(const Grammar& g, std::uint32_t n_target,
                                     std::uint64_t seed, const GenerateOptions& opts) {
    if (n_target < 1) throw ArgumentError("approximate_size_generate: n_target must be >= 1");
    if (g.start_family_count() == 0)
        throw ArgumentError("approximate_size_generate: grammar has no start rule");

    const std::vector<double> expect = expected_sizes(g);
    const double tolerance = 0.05 * n_target;
    const std::uint64_t cap = cap_for(opts, n_target);
    constexpr int kAttempts = 1000;

    Rng rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        DerivationState state;
        double pending_expect = expect[0];
        bool aborted = false;
        while (state.has_live()) {
            if (state.steps() >= cap) {
                aborted = true;
                break;
            }
            const std::uint64_t handle = state.front_live();
            const std::uint32_t rank = state.live_rank(handle);
            auto fams = g.families_of_rank(rank);
            if (fams.empty())
                throw GenerationError("approximate_size_generate: no rule with LHS rank " +
                                      std::to_string(rank));
            pending_expect -= expect[rank];

            // Keep the families whose projected completed size lands nearest
            // the target, then sample among them by count.
            double best_dev = std::numeric_limits<double>::infinity();
            std::vector<double> dev(fams.size());
            for (std::size_t i = 0; i < fams.size(); ++i) {
                const Production& p = g.family(fams[i]).production;
                double projected = static_cast<double>(state.vertex_count()) + pending_expect +
                                   p.internal_count();
                for (const auto& nt : p.nonterminal_edges) projected += expect[nt.rank];
                dev[i] = std::abs(projected - static_cast<double>(n_target));
                best_dev = std::min(best_dev, dev[i]);
            }
            std::vector<std::uint32_t> kept;
            std::uint64_t kept_total = 0;
            for (std::size_t i = 0; i < fams.size(); ++i) {
                if (dev[i] <= best_dev + 0.5) {
                    kept.push_back(fams[i]);
                    kept_total += g.family(fams[i]).count;
                }
            }
            const std::size_t f = pick_by_count(rng, g, kept, kept_total);
            const Production& p = g.family(f).production;
            for (const auto& nt : p.nonterminal_edges) pending_expect += expect[nt.rank];
            state.apply_rule(handle, p);
        }
        if (aborted) continue;
        const double got = static_cast<double>(state.vertex_count());
        if (std::abs(got - static_cast<double>(n_target)) <= tolerance)
            return state.finish(opts.simplify);
    }
    throw GenerationError("approximate_size_generate: no sample within 5% of " +
                          std::to_string(n_target) + " after " + std::to_string(kAttempts) +
                          " attempts");
}

Hypergraph size_constrained_generate(const Grammar& g, std::uint32_t n_target, SizeMode mode,
                                     std::uint64_t seed, const GenerateOptions& opts) {
    if (mode == SizeMode::approximate) return approximate_size_generate(g, n_target, seed, opts);
    SizeTable table = build_size_table(g, n_target);
    return size_constrained_generate(g, table, n_target, seed, opts);
}

} // namespace hrg
