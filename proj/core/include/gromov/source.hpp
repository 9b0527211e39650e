#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gromov/graph.hpp"
#include "gromov/matrix.hpp"
#include "gromov/random.hpp"
#include "gromov/tree.hpp"

namespace gromov {

/// Largest total edge weight among the components left after deleting s and
/// its incident edges.
double centroid_score(const WeightedTree& tree, NodeId s);

/// centroid_score of the base vertex in the tree spanned by the matrix,
/// computed from the entries alone. Coincident base points are allowed.
double centroid_score(const GromovMatrix& matrix, double eps = kTolerance);

/// One random BFS tree per candidate.
struct BfsHeuristic {
  RngSeed seed;
};
/// G-convex family of a natural-order BFS tree, a reversed-order BFS tree and
/// the star of the first tree's diagonal, over weights that are multiples of
/// 1/grid_steps.
struct GromovMethod {
  std::size_t grid_steps = 10;
};
using SourceMethod = std::variant<BfsHeuristic, GromovMethod>;

enum class ScoreDirection { kMax, kMin };
enum class CandidateSet { kInfected, kAll };

struct SnapshotOptions {
  ScoreDirection direction = ScoreDirection::kMax;
  CandidateSet candidates = CandidateSet::kInfected;
};

struct CandidateScore {
  NodeId node;
  double score;
};

struct SnapshotResult {
  /// Best first; equal scores in node order.
  std::vector<CandidateScore> ranking;
  /// For the Gromov method: every candidate family contained its three pure
  /// corner matrices. Always true for the BFS heuristic.
  bool corners_included = true;
};

/// Ranks source candidates for an infected snapshot. Trees are built on the
/// whole graph, rooted at the candidate, and restricted to span the infected
/// nodes. Throws Error for an empty or out-of-range infected set.
SnapshotResult source_estimate_snapshot(const WeightedGraph& graph,
                                        std::span<const NodeId> infected,
                                        const SourceMethod& method,
                                        const SnapshotOptions& options = {});

/// Zero-based rank of `node` in the ranking; the ranking size if absent.
std::size_t rank_of(const SnapshotResult& result, NodeId node);

}  // namespace gromov
