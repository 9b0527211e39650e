#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace gromov {

/// (d_b - d_g) / d_b; empty when d_b = 0.
std::optional<double> error_reduction(double d_b, double d_g);

/// (p_g - p_b) / p_b; empty when p_b = 0.
std::optional<double> detection_improvement(double p_b, double p_g);

/// How many top-ranked candidates make up the top fraction q of n:
/// max(1, ceil(q n)).
std::size_t top_count(std::size_t n, double q);

/// True when zero-based `rank` lies in the top fraction q of n candidates.
bool in_top_fraction(std::size_t rank, std::size_t n, double q);

/// (rank + 1) / n.
double rank_percentile(std::size_t rank, std::size_t n);

/// Arithmetic mean; empty for no values.
std::optional<double> mean(std::span<const double> values);

/// Sample standard error of the mean; empty for fewer than two values.
std::optional<double> standard_error(std::span<const double> values);

struct SnapshotTrial {
  double error_bfs;
  double error_gromov;
  bool hit_bfs;
  bool hit_gromov;
};

struct SnapshotReport {
  double mean_error_bfs = 0.0;
  double mean_error_gromov = 0.0;
  std::optional<double> error_reduction;
  double accuracy_bfs = 0.0;
  double accuracy_gromov = 0.0;
  std::optional<double> detection_improvement;
};

/// Pairs of outcomes per trial; all fields zero for an empty input.
SnapshotReport evaluate_snapshot(std::span<const SnapshotTrial> trials);

/// Mean of c1 / c2 over the pairs with c2 > 0; empty when there are none.
std::optional<double> mean_cost_ratio(std::span<const double> c1,
                                      std::span<const double> c2);

}  // namespace gromov
