#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gromov/matrix.hpp"
#include "gromov/tree.hpp"

namespace gromov {

struct SynthesisConfig {
  /// Pairwise combinations use theta = 0, step, 2 step, ..., 1.
  double theta_step = 0.1;
};

/// The pairwise G-convex family of the samples: for every pair and every theta
/// on the grid, one matrix (grid endpoints reproduce the samples). A single
/// sample is returned alone. Throws Error for an empty sample list.
std::vector<GromovMatrix> synthesize_family(
    std::span<const GromovMatrix> samples, const SynthesisConfig& config = {});

/// Fraction of the synthesized family in which base node u lies on the path
/// from the base vertex to base node v (zero-based indices).
double on_propagation_path_probability(std::span<const GromovMatrix> samples,
                                       std::size_t u, std::size_t v,
                                       const SynthesisConfig& config = {});

/// Same, for sampled trees sharing base vertex `s`. Every tree must contain
/// the labels of the first sample's base set, which fixes the matrix order.
double on_propagation_path_probability(std::span<const Base> samples,
                                       std::string_view s, std::string_view u,
                                       std::string_view v,
                                       const SynthesisConfig& config = {});

/// P(i,j) = fraction of `family` with v_i on [s, v_j]; the diagonal is 1.
Matrix on_path_frequencies(std::span<const GromovMatrix> family);

struct OrderAccuracy {
  /// Mean of 1 - e over the triples used; 0 when none were usable.
  double accuracy;
  std::size_t used;
  /// Triples whose true probability is 0 or 1.
  std::size_t excluded;
};

/// e = (|p - q| / p + |(1-p) - (1-q)| / (1-p)) / 2 per triple, q the estimate.
OrderAccuracy order_accuracy(std::span<const double> estimates,
                             std::span<const double> truths);

}  // namespace gromov
