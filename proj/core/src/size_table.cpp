#include "hrg/size_table.hpp"

#include "hrg/error.hpp"

namespace hrg {

SizeTable SizeTable::build(const Grammar& g, std::uint32_t n_max) {
    if (n_max < 1) throw ArgumentError("size table: n_max must be >= 1");
    for (std::size_t i = 0; i < g.family_count(); ++i) {
        const Production& p = g.family(i).production;
        if (!p.is_terminal() && p.internal_count() == 0)
            throw ArgumentError("size table: expanding rules must create at least one internal "
                                "vertex (family " + std::to_string(i) + ")");
    }

    SizeTable t;
    t.n_max_ = n_max;
    t.weights_.assign(g.max_rank() + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    t.prefix_.resize(g.family_count());
    for (std::size_t f = 0; f < g.family_count(); ++f) {
        const auto c = g.family(f).production.nonterminal_edges.size();
        t.prefix_[f].assign(c, std::vector<BigInt>(n_max + 1, BigInt(0)));
    }

    for (std::uint32_t n = 0; n <= n_max; ++n) {
        for (std::size_t f = 0; f < g.family_count(); ++f) {
            const RuleFamily& fam = g.family(f);
            const Production& p = fam.production;
            const std::uint32_t internals = p.internal_count();
            if (internals > n) continue;

            if (p.is_terminal()) {
                if (internals == n) t.weights_[p.lhs_rank][n] += BigInt(fam.count);
                continue;
            }

            const std::uint32_t s = n - internals; // s <= n-1 because internals >= 1
            auto& pref = t.prefix_[f];
            pref[0][s] = t.weights_[p.nonterminal_edges[0].rank][s];
            for (std::size_t j = 1; j < p.nonterminal_edges.size(); ++j) {
                BigInt acc = 0;
                const auto& child = t.weights_[p.nonterminal_edges[j].rank];
                for (std::uint32_t i = 0; i <= s; ++i) {
                    if (pref[j - 1][i] != 0 && child[s - i] != 0)
                        acc += pref[j - 1][i] * child[s - i];
                }
                pref[j][s] = std::move(acc);
            }
            const BigInt& conv = pref.back()[s];
            if (conv != 0) t.weights_[p.lhs_rank][n] += BigInt(fam.count) * conv;
        }
    }
    return t;
}

const BigInt& SizeTable::weight(std::uint32_t rank, std::uint32_t n) const {
    static const BigInt zero(0);
    if (rank >= weights_.size() || n > n_max_) return zero;
    return weights_[rank][n];
}

std::vector<std::uint32_t> SizeTable::feasible_sizes(std::uint32_t rank) const {
    std::vector<std::uint32_t> out;
    if (rank >= weights_.size()) return out;
    for (std::uint32_t n = 0; n <= n_max_; ++n)
        if (weights_[rank][n] != 0) out.push_back(n);
    return out;
}

const BigInt& SizeTable::family_prefix(std::uint32_t fam, std::uint32_t j, std::uint32_t s) const {
    return prefix_[fam][j][s];
}

SizeTable build_size_table(const Grammar& g, std::uint32_t n_max) {
    return SizeTable::build(g, n_max);
}

} // namespace hrg
