#include "gromov/placement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gromov/combination.hpp"

namespace gromov {

namespace {

void check_problem(const WeightedGraph& graph, const PlacementProblem& problem) {
  if (problem.demand.size() != graph.size()) {
    throw Error("demand has " + std::to_string(problem.demand.size()) +
                " entries for " + std::to_string(graph.size()) + " nodes");
  }
  for (double w : problem.demand) {
    if (!(w >= 0.0)) throw Error("demands must be non-negative");
  }
  if (problem.k == 0) throw Error("k must be at least 1");
  if (problem.k > graph.size()) {
    throw Error("k = " + std::to_string(problem.k) + " exceeds the " +
                std::to_string(graph.size()) + " nodes");
  }
  if (!(problem.eta > 0.0)) throw Error("eta must be positive");
}

}  // namespace

double placement_cost(const WeightedGraph& graph, std::span<const double> demand,
                      std::span<const NodeId> centers) {
  if (centers.empty()) throw Error("placement needs at least one center");
  if (demand.size() != graph.size()) throw Error("demand size mismatch");
  // Nearest-center distance by multi-source Dijkstra.
  std::vector<double> nearest(graph.size(), std::numeric_limits<double>::infinity());
  for (NodeId c : centers) {
    const auto d = dijkstra(graph, c).distance;
    for (NodeId x = 0; x < graph.size(); ++x) nearest[x] = std::min(nearest[x], d[x]);
  }
  double cost = 0.0;
  for (NodeId x = 0; x < graph.size(); ++x) cost += demand[x] * nearest[x];
  return cost;
}

GreedyPlacement place_greedy(const WeightedGraph& graph,
                             const PlacementProblem& problem) {
  check_problem(graph, problem);
  const std::size_t n = graph.size();
  std::vector<std::vector<double>> distance(n);
  for (NodeId x = 0; x < n; ++x) distance[x] = dijkstra(graph, x).distance;

  GreedyPlacement result;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<bool> chosen(n, false);
  for (std::size_t step = 0; step < problem.k; ++step) {
    NodeId best = kNoNode;
    double best_cost = std::numeric_limits<double>::infinity();
    for (NodeId s = 0; s < n; ++s) {
      if (chosen[s]) continue;
      double cost = 0.0;
      for (NodeId v = 0; v < n; ++v) {
        cost += problem.demand[v] * std::min(nearest[v], distance[s][v]);
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = s;
      }
    }
    chosen[best] = true;
    result.centers.push_back(best);
    result.step_costs.push_back(best_cost);
    for (NodeId v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], distance[best][v]);
  }
  return result;
}

namespace {

// Best new center of one Voronoi part, as an id of `part.graph`.
NodeId best_center(const Subgraph& part, NodeId center,
                   std::span<const double> demand, std::size_t grid_steps) {
  const auto& g = part.graph;
  if (g.size() == 1) return center;
  std::vector<std::string> base_set;
  for (NodeId x = 0; x < g.size(); ++x) {
    if (x != center) base_set.push_back(g.name(x));
  }
  const std::string& root = g.name(center);
  const std::array<GromovMatrix, 2> ends{
      gromov_matrix(Base(minimum_spanning_tree(g), root, base_set)),
      gromov_matrix(Base(bfs_tree(g, center, NaturalOrder{}), root, base_set))};
  // Candidates: the center (index 0), then the base set in order. Tree
  // distances come straight from the matrix: d(s, v) = M(v,v) and
  // d(u, v) = M(u,u) + M(v,v) - 2 M(u,v).
  std::vector<NodeId> candidates{center};
  for (NodeId x = 0; x < g.size(); ++x) {
    if (x != center) candidates.push_back(x);
  }
  const auto n = static_cast<Eigen::Index>(base_set.size());
  NodeId best = center;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t q = 0; q <= grid_steps; ++q) {
    const double theta =
        static_cast<double>(q) / static_cast<double>(grid_steps);
    const GromovMatrix m = g_convex(ends, CombinationWeights::pair(theta));
    const auto depth = [&](Eigen::Index i) { return i < 0 ? 0.0 : m(i, i); };
    const auto at = [&](Eigen::Index i, Eigen::Index j) {
      return i < 0 || j < 0 ? 0.0 : m(i, j);
    };
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Eigen::Index a = static_cast<Eigen::Index>(c) - 1;
      double cost = 0.0;
      for (Eigen::Index b = -1; b < n; ++b) {
        const NodeId v = candidates[static_cast<std::size_t>(b + 1)];
        const double d = depth(a) + depth(b) - 2.0 * at(a, b);
        cost += demand[part.original[v]] * std::max(0.0, d);
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = candidates[c];
      }
    }
  }
  return best;
}

}  // namespace

GromovPlacement place_gromov(const WeightedGraph& graph,
                             const PlacementProblem& problem, RngSeed seed,
                             std::size_t grid_steps) {
  check_problem(graph, problem);
  if (grid_steps == 0) throw Error("grid_steps must be positive");
  Engine engine = make_engine(seed);
  std::vector<NodeId> all(graph.size());
  for (NodeId x = 0; x < graph.size(); ++x) all[x] = x;
  std::vector<NodeId> centers;
  std::sample(all.begin(), all.end(), std::back_inserter(centers), problem.k,
              engine);
  std::shuffle(centers.begin(), centers.end(), engine);

  GromovPlacement result{{}, 0.0, 0, false};
  while (result.iterations < problem.max_iterations) {
    const auto owner = voronoi_partition(graph, centers);
    std::vector<NodeId> next;
    next.reserve(centers.size());
    double shift = 0.0;
    for (NodeId c : centers) {
      std::vector<NodeId> nodes;
      for (NodeId x = 0; x < graph.size(); ++x) {
        if (owner[x] == c) nodes.push_back(x);
      }
      const Subgraph part = induced_subgraph(graph, nodes);
      const NodeId local = static_cast<NodeId>(
          std::find(nodes.begin(), nodes.end(), c) - nodes.begin());
      const NodeId chosen =
          part.original[best_center(part, local, problem.demand, grid_steps)];
      next.push_back(chosen);
      shift = std::max(shift, dijkstra(graph, c).distance[chosen]);
    }
    centers = std::move(next);
    ++result.iterations;
    if (shift <= problem.eta) {
      result.converged = true;
      break;
    }
  }
  result.centers = centers;
  result.cost = placement_cost(graph, problem.demand, centers);
  return result;
}

std::vector<double> pareto_demand(std::size_t n, RngSeed seed, double shape,
                                  double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw Error("Pareto shape and scale must be positive");
  }
  Engine engine = make_engine(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> demand(n);
  for (auto& w : demand) {
    // 1 - U lies in (0, 1].
    w = scale / std::pow(1.0 - uniform(engine), 1.0 / shape);
  }
  return demand;
}

}  // namespace gromov
