#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gromov/graph.hpp"
#include "gromov/random.hpp"

namespace gromov {

struct PlacementProblem {
  /// w(v) >= 0 per node.
  std::vector<double> demand;
  std::size_t k = 1;
  /// Stop once no center moves farther than this (graph distance).
  double eta = 1e-9;
  std::size_t max_iterations = 100;
};

/// sum_v w(v) * min_{s in S} d_G(s, v). Throws Error for an empty S.
double placement_cost(const WeightedGraph& graph, std::span<const double> demand,
                      std::span<const NodeId> centers);

struct GreedyPlacement {
  std::vector<NodeId> centers;
  /// Cost after each added center.
  std::vector<double> step_costs;
};

/// Adds the center that lowers the cost most, k times; ties to the lower id.
GreedyPlacement place_greedy(const WeightedGraph& graph,
                             const PlacementProblem& problem);

struct GromovPlacement {
  std::vector<NodeId> centers;
  double cost;
  std::size_t iterations;
  bool converged;
};

/// Alternates a Voronoi split with a per-part search over the G-convex family
/// of the part's minimum spanning tree and BFS tree (theta a multiple of
/// 1/grid_steps), moving each center to the base node of smallest
/// demand-weighted tree distance.
GromovPlacement place_gromov(const WeightedGraph& graph,
                             const PlacementProblem& problem, RngSeed seed,
                             std::size_t grid_steps = 10);

/// Pareto(shape, scale) demands, one per node.
std::vector<double> pareto_demand(std::size_t n, RngSeed seed,
                                  double shape = 2.0, double scale = 1.0);

}  // namespace gromov
