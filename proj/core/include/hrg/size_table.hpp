#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hrg/grammar.hpp"

namespace hrg {

using BigInt = boost::multiprecision::cpp_int;

/// Weighted derivation counts by size. weight(r, n) is the sum, over all
/// derivations from a rank-r nonterminal that create exactly n internal
/// vertices, of the product of the chosen rules' occurrence counts:
///
///   W[r][n] = sum over families f with lhs rank r of
///             count(f) * sum over splits n_1+..+n_c = n - internals(f) of
///             prod_j W[rank_j][n_j]
///
/// Terminal families contribute count(f) at n = internals(f). Entries are
/// exact integers; per-family prefix convolutions are kept so conditioned
/// sampling can split child budgets without recomputation.
class SizeTable {
public:
    static SizeTable build(const Grammar& g, std::uint32_t n_max);

    std::uint32_t n_max() const { return n_max_; }
    std::uint32_t rank_limit() const { return static_cast<std::uint32_t>(weights_.size()); }
    const BigInt& weight(std::uint32_t rank, std::uint32_t n) const;

    /// Sizes n with W[rank][n] > 0.
    std::vector<std::uint32_t> feasible_sizes(std::uint32_t rank = 0) const;

    /// Convolution of the first j+1 child weights of family `fam` evaluated
    /// at total child budget s. Valid for s <= n_max - internals(fam).
    const BigInt& family_prefix(std::uint32_t fam, std::uint32_t j, std::uint32_t s) const;

private:
    std::uint32_t n_max_ = 0;
    std::vector<std::vector<BigInt>> weights_;              // [rank][n]
    std::vector<std::vector<std::vector<BigInt>>> prefix_;  // [family][child][s]
};

/// Builds the table for budgets 0..n_max. Throws ArgumentError when the
/// grammar contains an expanding rule that creates no internal vertices
/// (such rules make size-conditioned counts diverge).
SizeTable build_size_table(const Grammar& g, std::uint32_t n_max);

} // namespace hrg
