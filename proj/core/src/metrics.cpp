#include "gromov/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gromov/error.hpp"

namespace gromov {

std::optional<double> error_reduction(double d_b, double d_g) {
  if (d_b == 0.0) return std::nullopt;
  return (d_b - d_g) / d_b;
}

std::optional<double> detection_improvement(double p_b, double p_g) {
  if (p_b == 0.0) return std::nullopt;
  return (p_g - p_b) / p_b;
}

std::size_t top_count(std::size_t n, double q) {
  const double raw = std::ceil(q * static_cast<double>(n) - 1e-12);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(0.0, raw)));
}

bool in_top_fraction(std::size_t rank, std::size_t n, double q) {
  return rank < n && rank < top_count(n, q);
}

double rank_percentile(std::size_t rank, std::size_t n) {
  if (n == 0) throw Error("rank_percentile of an empty ranking");
  return static_cast<double>(rank + 1) / static_cast<double>(n);
}

std::optional<double> mean(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double total = 0.0;
  for (double v : values) total += v;
  return total / static_cast<double>(values.size());
}

std::optional<double> standard_error(std::span<const double> values) {
  if (values.size() < 2) return std::nullopt;
  const double m = *mean(values);
  double squares = 0.0;
  for (double v : values) squares += (v - m) * (v - m);
  const double n = static_cast<double>(values.size());
  return std::sqrt(squares / (n - 1.0) / n);
}

SnapshotReport evaluate_snapshot(std::span<const SnapshotTrial> trials) {
  SnapshotReport report;
  if (trials.empty()) return report;
  const double n = static_cast<double>(trials.size());
  for (const auto& t : trials) {
    report.mean_error_bfs += t.error_bfs / n;
    report.mean_error_gromov += t.error_gromov / n;
    report.accuracy_bfs += (t.hit_bfs ? 1.0 : 0.0) / n;
    report.accuracy_gromov += (t.hit_gromov ? 1.0 : 0.0) / n;
  }
  report.error_reduction =
      error_reduction(report.mean_error_bfs, report.mean_error_gromov);
  report.detection_improvement =
      detection_improvement(report.accuracy_bfs, report.accuracy_gromov);
  return report;
}

std::optional<double> mean_cost_ratio(std::span<const double> c1,
                                      std::span<const double> c2) {
  if (c1.size() != c2.size()) throw Error("cost lists differ in length");
  std::vector<double> ratios;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c2[i] > 0.0) ratios.push_back(c1[i] / c2[i]);
  }
  return mean(ratios);
}

}  // namespace gromov
