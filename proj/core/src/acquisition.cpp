#include "gromov/acquisition.hpp"

#include <array>
#include <cmath>

#include "gromov/combination.hpp"
#include "gromov/reconstruct.hpp"

namespace gromov {

namespace {

std::size_t theta_steps(double step) {
  if (!(step > 0.0) || step > 1.0) throw Error("theta step must lie in (0,1]");
  const double count = std::round(1.0 / step);
  if (std::abs(count * step - 1.0) > 1e-9) {
    throw Error("theta step must divide 1");
  }
  return static_cast<std::size_t>(count);
}

}  // namespace

std::vector<GromovMatrix> synthesize_family(std::span<const GromovMatrix> samples,
                                            const SynthesisConfig& config) {
  if (samples.empty()) throw Error("need at least one sampled tree");
  if (samples.size() == 1) return {samples.front()};
  const std::size_t steps = theta_steps(config.theta_step);
  std::vector<GromovMatrix> family;
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      const std::array<GromovMatrix, 2> pair{samples[a], samples[b]};
      for (std::size_t q = 0; q <= steps; ++q) {
        const double theta = static_cast<double>(q) / static_cast<double>(steps);
        family.push_back(g_convex(pair, CombinationWeights::pair(theta)));
      }
    }
  }
  return family;
}

double on_propagation_path_probability(std::span<const GromovMatrix> samples,
                                       std::size_t u, std::size_t v,
                                       const SynthesisConfig& config) {
  const auto family = synthesize_family(samples, config);
  std::size_t hits = 0;
  for (const auto& m : family) {
    if (on_path_from_base(m, u, v)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(family.size());
}

double on_propagation_path_probability(std::span<const Base> samples,
                                       std::string_view s, std::string_view u,
                                       std::string_view v,
                                       const SynthesisConfig& config) {
  if (samples.empty()) throw Error("need at least one sampled tree");
  const auto& labels = samples.front().base_set();
  const auto position = [&](std::string_view name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return i;
    }
    throw UnknownNodeError(std::string(name));
  };
  const std::size_t ui = position(u);
  const std::size_t vi = position(v);
  std::vector<GromovMatrix> matrices;
  matrices.reserve(samples.size());
  for (const auto& sample : samples) {
    matrices.push_back(
        gromov_matrix(Base(sample.tree(), std::string(s), labels)));
  }
  return on_propagation_path_probability(matrices, ui, vi, config);
}

Matrix on_path_frequencies(std::span<const GromovMatrix> family) {
  if (family.empty()) throw Error("empty family");
  const Eigen::Index n = family.front().size();
  Matrix counts = Matrix::Zero(n, n);
  for (const auto& m : family) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(m(i, j) - m(i, i)) <= kTolerance) counts(i, j) += 1.0;
      }
    }
  }
  return counts / static_cast<double>(family.size());
}

OrderAccuracy order_accuracy(std::span<const double> estimates,
                             std::span<const double> truths) {
  if (estimates.size() != truths.size()) {
    throw Error("estimates and truths differ in length");
  }
  OrderAccuracy result{0.0, 0, 0};
  double total = 0.0;
  for (std::size_t t = 0; t < truths.size(); ++t) {
    const double p = truths[t];
    const double q = estimates[t];
    if (!(p > 0.0 && p < 1.0)) {
      ++result.excluded;
      continue;
    }
    const double e = (std::abs(p - q) / p + std::abs(q - p) / (1.0 - p)) / 2.0;
    total += 1.0 - e;
    ++result.used;
  }
  if (result.used > 0) result.accuracy = total / static_cast<double>(result.used);
  return result;
}

}  // namespace gromov
