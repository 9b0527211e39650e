#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gromov/random.hpp"
#include "gromov/tree.hpp"

namespace gromov {

struct GraphEdge {
  NodeId u;
  NodeId v;
  double weight;
};

struct Incident {
  NodeId node;
  double weight;
  std::size_t edge;
};

/// A connected undirected graph with positive edge weights. Node ids are
/// positions in the name list.
class WeightedGraph {
 public:
  /// Throws Error for self loops, duplicate edges, non-positive weights,
  /// out-of-range endpoints, or a disconnected result.
  WeightedGraph(std::vector<std::string> names, std::vector<GraphEdge> edges);

  /// Nodes are named "0", "1", ...
  static WeightedGraph with_numbered_nodes(std::size_t n,
                                           std::vector<GraphEdge> edges);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name(NodeId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Throws UnknownNodeError.
  NodeId id(std::string_view name) const;
  bool contains(std::string_view name) const;

  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  /// Incident edges sorted by neighbor id.
  std::span<const Incident> neighbors(NodeId id) const {
    return adjacency_.at(id);
  }
  std::optional<std::size_t> edge_between(NodeId u, NodeId v) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, NodeId, std::less<>> index_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<Incident>> adjacency_;
};

/// Neighbor visitation order for breadth-first search.
struct NaturalOrder {};
struct ReversedOrder {};
/// Each neighbor list is shuffled uniformly with its own draw.
struct RandomOrder {
  RngSeed seed;
};
using BfsOrdering = std::variant<NaturalOrder, ReversedOrder, RandomOrder>;

/// Breadth-first spanning tree rooted at `root`; tree edges keep the graph
/// weights and tree node names equal graph node names.
WeightedTree bfs_tree(const WeightedGraph& graph, NodeId root,
                      const BfsOrdering& ordering);

struct ShortestPaths {
  std::vector<double> distance;
  std::vector<NodeId> predecessor;
  /// Nodes in the order they were settled.
  std::vector<NodeId> order;
};

/// Dijkstra under per-edge lengths (graph weights when `lengths` is empty).
/// Among equal-length paths the predecessor with the smallest id wins.
ShortestPaths dijkstra(const WeightedGraph& graph, NodeId source,
                       std::span<const double> lengths = {});

/// Earliest-arrival tree under the per-edge `delays`. Tree edges carry the
/// graph weights. Throws Error when delays do not cover every edge.
WeightedTree shortest_path_tree(const WeightedGraph& graph, NodeId root,
                                std::span<const double> delays);

struct Exponential {
  double rate;
};
/// Normal(mean, variance) redrawn until positive.
struct TruncatedGaussian {
  double mean;
  double variance;
};
using DelayModel = std::variant<Exponential, TruncatedGaussian>;

/// One independent draw per edge, indexed like graph.edges().
std::vector<double> sample_delays(const WeightedGraph& graph,
                                  const DelayModel& model, RngSeed seed);

/// Owner center of every node: nearest by graph distance, ties to the center
/// listed first. Throws Error for empty or repeated centers.
std::vector<NodeId> voronoi_partition(const WeightedGraph& graph,
                                      std::span<const NodeId> centers);

/// Kruskal; equal weights are taken in edge order.
WeightedTree minimum_spanning_tree(const WeightedGraph& graph);

struct Subgraph {
  WeightedGraph graph;
  /// Original id of every subgraph node.
  std::vector<NodeId> original;
};

/// Subgraph induced by `nodes` (kept in the given order). Throws Error when it
/// is disconnected.
Subgraph induced_subgraph(const WeightedGraph& graph,
                          std::span<const NodeId> nodes);

struct ErdosRenyi {
  std::size_t n;
  double average_degree;
};
struct BarabasiAlbert {
  std::size_t n;
  std::size_t m;
};
struct Grid2D {
  std::size_t rows;
  std::size_t cols;
};
struct Complete {
  std::size_t n;
};
using GraphKind = std::variant<ErdosRenyi, BarabasiAlbert, Grid2D, Complete>;

inline constexpr std::size_t kMaxErAttempts = 1000;

/// Unit-weight graph of the given family with nodes "0".."n-1". Erdos-Renyi
/// graphs are redrawn until connected, at most kMaxErAttempts times.
WeightedGraph generate_graph(const GraphKind& kind, RngSeed seed);

}  // namespace gromov
