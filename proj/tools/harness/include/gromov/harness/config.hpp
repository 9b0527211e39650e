#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gromov/graph.hpp"
#include "gromov/source.hpp"

namespace gromov::harness {

enum class ExperimentKind { kApproxPath, kAcqOrder, kSourceSnapshot, kPlacement };

const char* kind_name(ExperimentKind kind);

/// `er:N:DEG`, `ba:N:M`, `grid:RxC`, `complete:N` or `file:PATH`.
struct GraphSpec {
  std::variant<GraphKind, std::filesystem::path> source;
  std::string text;
  bool is_file() const { return std::holds_alternative<std::filesystem::path>(source); }
};

/// `exponential:RATE` or `gaussian:MEAN:VARIANCE`.
struct DelaySpec {
  DelayModel model;
  std::string text;
  /// Rate or mean, used as the x coordinate of plot data.
  double location() const;
};

GraphSpec parse_graph_spec(std::string_view text,
                           const std::filesystem::path& base_dir = {});
DelaySpec parse_delay_spec(std::string_view text);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kApproxPath;
  /// Each graph spec and delay model pair forms one series.
  std::vector<GraphSpec> graphs;
  std::vector<DelaySpec> delays;
  bool unit_weights = false;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t grid_steps = 10;
  /// Number of centers; 0 means round(k_fraction * n), at least 1.
  std::size_t k = 0;
  double k_fraction = 0.01;
  double eta = 1e-9;
  std::size_t max_iterations = 100;
  double infected_min = 0.2;
  double infected_max = 0.3;
  double top_fraction = 0.2;
  ScoreDirection direction = ScoreDirection::kMax;
  CandidateSet candidates = CandidateSet::kInfected;
  /// Ground-truth samples for acq-order.
  std::size_t samples = 200;
  std::size_t sampled_trees = 3;
  std::size_t base_nodes = 6;
  double theta_step = 0.1;
};

/// Reads `key = value` lines ('#' comments), applies `overrides` (same
/// syntax) on top, and checks every field. Errors name the field.
/// `default_seed` applies when no `seed` key is given.
ExperimentConfig parse_config(std::string_view text,
                              const std::vector<std::string>& overrides = {},
                              std::uint64_t default_seed = 0,
                              const std::filesystem::path& base_dir = {});

ExperimentConfig read_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {},
                             std::uint64_t default_seed = 0);

/// GROMOV_SEED when set, else 0. Throws Error for a non-numeric value.
std::uint64_t default_seed_from_env();

}  // namespace gromov::harness
