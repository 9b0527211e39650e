#include "gromov/source.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>

#include "gromov/combination.hpp"

namespace gromov {

double centroid_score(const WeightedTree& tree, NodeId s) {
  if (s >= tree.size()) throw Error("centroid_score: node out of range");
  const auto rooted = tree.rooted_at(s);
  // Edge weight below each node, accumulated leaves first.
  std::vector<double> below(tree.size(), 0.0);
  for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
    const NodeId x = *it;
    const NodeId p = rooted.parent[x];
    if (p == kNoNode || p == s) continue;
    below[p] += below[x] + rooted.parent_weight[x];
  }
  double best = 0.0;
  for (const auto& [c, w] : tree.neighbors(s)) best = std::max(best, below[c]);
  return best;
}

double centroid_score(const GromovMatrix& matrix, double eps) {
  const Eigen::Index n = matrix.size();
  // Base nodes share a component after deleting s iff their product is
  // positive. Each component spans the union of its paths to s, minus the
  // trunk edge at s, whose far end sits at the smallest entry of the block.
  std::vector<Eigen::Index> component(static_cast<std::size_t>(n), -1);
  double best = 0.0;
  for (Eigen::Index first = 0; first < n; ++first) {
    if (component[static_cast<std::size_t>(first)] >= 0) continue;
    std::vector<Eigen::Index> members;
    for (Eigen::Index j = first; j < n; ++j) {
      if (j == first || matrix(first, j) > eps) {
        component[static_cast<std::size_t>(j)] = first;
        members.push_back(j);
      }
    }
    double span = 0.0;
    double trunk = matrix(first, first);
    for (std::size_t a = 0; a < members.size(); ++a) {
      const Eigen::Index v = members[a];
      double attach = 0.0;
      for (std::size_t b = 0; b < a; ++b) {
        attach = std::max(attach, matrix(members[b], v));
      }
      span += std::max(0.0, matrix(v, v) - attach);
      for (std::size_t b = 0; b <= a; ++b) {
        trunk = std::min(trunk, matrix(members[b], v));
      }
    }
    best = std::max(best, span - trunk);
  }
  return best;
}

namespace {

struct Scorer {
  const WeightedGraph& graph;
  std::vector<std::string> infected_names;
  ScoreDirection direction;

  bool better(double a, double b) const {
    return direction == ScoreDirection::kMax ? a > b : a < b;
  }

  std::vector<std::string> others(NodeId s) const {
    std::vector<std::string> out;
    for (const auto& name : infected_names) {
      if (name != graph.name(s)) out.push_back(name);
    }
    return out;
  }

  double score_tree(const WeightedTree& bfs, NodeId s) const {
    const auto base_set = others(s);
    const Base spanning = restrict_to_span(bfs, graph.name(s), base_set);
    return centroid_score(spanning.tree(), spanning.base_vertex_id());
  }

  // Returns the family's best score and whether the corners were present.
  std::pair<double, bool> score_gromov(NodeId s, std::size_t steps) const {
    const auto base_set = others(s);
    if (base_set.empty()) return {0.0, true};
    const std::string& root = graph.name(s);
    const auto t1 = restrict_to_span(bfs_tree(graph, s, NaturalOrder{}), root,
                                     base_set);
    const auto t2 = restrict_to_span(bfs_tree(graph, s, ReversedOrder{}), root,
                                     base_set);
    const GromovMatrix m1 = gromov_matrix(t1);
    const std::array<GromovMatrix, 3> corners{m1, gromov_matrix(t2),
                                              m1.diagonal()};
    std::array<bool, 3> seen{false, false, false};
    std::optional<double> best;
    for (const auto& weights : simplex_grid(3, steps)) {
      const GromovMatrix m = g_convex(corners, weights);
      for (std::size_t c = 0; c < 3; ++c) {
        if (weights[c] == 1.0 && approx_equal(m.entries(), corners[c].entries(), 0.0)) {
          seen[c] = true;
        }
      }
      const double score = centroid_score(m);
      if (!best || better(score, *best)) best = score;
    }
    return {*best, seen[0] && seen[1] && seen[2]};
  }
};

}  // namespace

SnapshotResult source_estimate_snapshot(const WeightedGraph& graph,
                                        std::span<const NodeId> infected,
                                        const SourceMethod& method,
                                        const SnapshotOptions& options) {
  if (infected.empty()) throw Error("infected set is empty");
  std::vector<NodeId> sorted(infected.begin(), infected.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("infected set has repeated nodes");
  }
  if (sorted.back() >= graph.size()) throw Error("infected node out of range");

  Scorer scorer{graph, {}, options.direction};
  for (NodeId x : sorted) scorer.infected_names.push_back(graph.name(x));

  std::vector<NodeId> candidates;
  if (options.candidates == CandidateSet::kInfected) {
    candidates = sorted;
  } else {
    for (NodeId x = 0; x < graph.size(); ++x) candidates.push_back(x);
  }

  SnapshotResult result;
  std::optional<Engine> engine;
  if (const auto* bfs = std::get_if<BfsHeuristic>(&method)) {
    engine.emplace(make_engine(bfs->seed));
  }
  for (NodeId s : candidates) {
    double score = 0.0;
    if (engine) {
      const RngSeed tree_seed{(*engine)(), s};
      score = scorer.score_tree(bfs_tree(graph, s, RandomOrder{tree_seed}), s);
    } else {
      const auto steps = std::get<GromovMethod>(method).grid_steps;
      const auto [best, corners] = scorer.score_gromov(s, steps);
      score = best;
      result.corners_included = result.corners_included && corners;
    }
    result.ranking.push_back({s, score});
  }
  std::stable_sort(result.ranking.begin(), result.ranking.end(),
                   [&](const CandidateScore& a, const CandidateScore& b) {
                     return scorer.better(a.score, b.score);
                   });
  return result;
}

std::size_t rank_of(const SnapshotResult& result, NodeId node) {
  for (std::size_t r = 0; r < result.ranking.size(); ++r) {
    if (result.ranking[r].node == node) return r;
  }
  return result.ranking.size();
}

}  // namespace gromov
