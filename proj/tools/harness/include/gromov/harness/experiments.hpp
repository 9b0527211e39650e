#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "gromov/graph.hpp"
#include "gromov/harness/config.hpp"
#include "gromov/random.hpp"

namespace gromov::harness {

struct ApproxPathResult {
  /// Spectral-norm distance from the target matrix to a random BFS matrix.
  double d0;
  /// Best distance over the (alpha, beta) grid.
  double d;
  /// (d0 - d) / d; 0 when both vanish, infinite when only d does.
  double ratio;
};

/// One trial: random source, delays, shortest-path target tree, two random
/// BFS trees and the two-level G-convex grid with 1/grid_steps increments.
ApproxPathResult approx_path_trial(const WeightedGraph& graph, const DelayModel& delay,
                                   RngSeed seed, std::size_t grid_steps = 10);

struct AcqOrderResult {
  NodeId source;
  /// order_accuracy of the synthesized family and of the raw samples.
  double accuracy_gromov;
  double accuracy_sampled;
  std::size_t used;
  std::size_t excluded;
};

AcqOrderResult acq_order_trial(const WeightedGraph& graph, const DelayModel& delay,
                               RngSeed seed, const ExperimentConfig& config);

struct SnapshotOutcome {
  NodeId estimate;
  double error_distance;
  std::size_t rank;
  double rank_percentile;
  bool hit;
};

struct SnapshotTrialResult {
  NodeId source;
  std::size_t infected;
  SnapshotOutcome bfs;
  SnapshotOutcome gromov;
  bool corners_included;
};

/// One snapshot: the first 20-30% (per config) of nodes reached from a random
/// source under the delays, ranked by both methods.
SnapshotTrialResult snapshot_trial(const WeightedGraph& graph, const DelayModel& delay,
                                   RngSeed seed, const ExperimentConfig& config);

struct PlacementTrialResult {
  std::size_t k;
  double cost_greedy;
  double cost_gromov;
  /// Independent recomputation of the Gromov cost.
  double cost_gromov_check;
  std::size_t iterations;
  bool converged;
  bool greedy_monotone;
};

PlacementTrialResult placement_trial(const WeightedGraph& graph, RngSeed seed,
                                     const ExperimentConfig& config);

/// Graph of trial `trial` in series `series`: generated graphs are redrawn
/// per trial, file graphs are loaded as is.
WeightedGraph trial_graph(const GraphSpec& spec, bool unit_weights, RngSeed seed);

/// Seed of one trial; independent of scheduling.
RngSeed trial_seed(std::uint64_t seed, std::size_t series, std::size_t trial);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string csv() const;
};

struct ExperimentReport {
  Table trials;
  Table summary;
  /// Columns series, x, y, stderr.
  Table plotdata;
};

ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t jobs = 1);

/// Writes trials.csv, summary.csv and plotdata.csv into `directory`.
void write_report(const ExperimentReport& report, const std::filesystem::path& directory);

}  // namespace gromov::harness
