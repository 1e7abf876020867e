#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

/// Expected-degree sequence for the Chung-Lu model.
struct DegreeSequence {
    std::vector<double> weights;

    double total() const;
    /// Number of entries with w_i^2 > W (their pair probabilities get clamped
    /// to 1 during generation).
    std::size_t clamped_entries() const;
};

/// Joins each pair (i, j), i < j, independently with probability
/// min(1, w_i w_j / W). Uses the exact pairwise loop up to 20k vertices and a
/// sorted skip-sampling variant above. The output is always simple.
Hypergraph chung_lu_generate(const DegreeSequence& seq, std::uint64_t seed);

enum class DegreeModelFamily { poisson, geometric };

struct DegreeModel {
    DegreeModelFamily family = DegreeModelFamily::poisson;
    double param = 0.0; // poisson lambda, or geometric success probability
};

/// MLE fit: Poisson lambda = mean degree; geometric p = 1/(1 + mean degree).
DegreeModel fit_degree_model(const Hypergraph& g, DegreeModelFamily family);

/// n_target i.i.d. draws from the fitted model. With resample_zeros, zero
/// draws are redrawn so the sequence supports nontrivially connected graphs.
DegreeSequence sample_degree_sequence(const DegreeModel& model, std::uint32_t n_target,
                                      std::uint64_t seed, bool resample_zeros = true);

/// One integer per line.
void save_degree_sequence(const DegreeSequence& seq, const std::string& path);
DegreeSequence load_degree_sequence(const std::string& path);

} // namespace hrg
