#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gromov/matrix.hpp"

namespace gromov {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct TreeEdge {
  std::string u;
  std::string v;
  double weight;
};

struct Adjacent {
  NodeId node;
  double weight;
};

/// An undirected tree with strictly positive edge weights over opaque string
/// node identifiers. Immutable after construction.
class WeightedTree {
 public:
  WeightedTree() = default;

  /// Throws Error when the edges do not form a tree (cycle, disconnected,
  /// duplicate or self edge) or a weight is not positive. `extra_nodes` lets a
  /// single-node tree be expressed.
  explicit WeightedTree(std::vector<TreeEdge> edges,
                        std::vector<std::string> extra_nodes = {});

  static WeightedTree single(std::string node);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(NodeId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool contains(std::string_view name) const;
  /// Throws UnknownNodeError.
  NodeId id(std::string_view name) const;

  std::span<const Adjacent> neighbors(NodeId id) const {
    return adjacency_.at(id);
  }
  std::size_t degree(NodeId id) const { return adjacency_.at(id).size(); }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  double total_weight() const;

  /// Parent of every node when the tree is rooted at `root` (kNoNode for the
  /// root itself) together with the root distance of every node.
  struct Rooted {
    std::vector<NodeId> parent;
    std::vector<double> depth;
    /// Weight of the edge to the parent (0 for the root).
    std::vector<double> parent_weight;
    /// Nodes in breadth-first order from the root.
    std::vector<NodeId> order;
  };
  Rooted rooted_at(NodeId root) const;

  std::vector<double> distances_from(NodeId source) const;
  /// Node sequence of the unique simple path, both ends included.
  std::vector<NodeId> path(NodeId from, NodeId to) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, NodeId, std::less<>> index_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::vector<TreeEdge> edges_;

  NodeId intern(const std::string& name);
};

/// A weighted tree with a base vertex s and an ordered base set V.
class Base {
 public:
  /// Throws UnknownNodeError for missing nodes and Error when s is in V or V
  /// has repeated entries.
  Base(WeightedTree tree, std::string base_vertex,
       std::vector<std::string> base_set);

  const WeightedTree& tree() const noexcept { return tree_; }
  const std::string& base_vertex() const noexcept { return base_vertex_; }
  const std::vector<std::string>& base_set() const noexcept {
    return base_set_;
  }
  std::size_t size() const noexcept { return base_set_.size(); }

  NodeId base_vertex_id() const { return tree_.id(base_vertex_); }
  std::vector<NodeId> base_ids() const;

  /// True when every leaf of the tree is s or in V and no node outside
  /// V + {s} has degree two.
  bool is_canonical() const;

 private:
  WeightedTree tree_;
  std::string base_vertex_;
  std::vector<std::string> base_set_;
};

double tree_distance(const WeightedTree& tree, std::string_view u,
                     std::string_view v);

/// (u,v)_s = (d(u,s) + d(v,s) - d(u,v)) / 2, the distance from s to the point
/// where the paths to u and v separate.
double gromov_product(const WeightedTree& tree, std::string_view s,
                      std::string_view u, std::string_view v);

/// M(i,j) = (v_i, v_j)_s. Computed as the root distance of the branch point,
/// so integer-weighted trees give exact matrices.
GromovMatrix gromov_matrix(const Base& base);

/// The union of the paths [s, v_i] with degree-two nodes outside V + {s}
/// contracted. Surviving nodes keep their names.
Base restrict_to_span(const WeightedTree& tree, std::string_view s,
                      std::span<const std::string> base_set);

/// Isometric equivalence of spanning bases: equal Gromov matrices.
bool bases_equivalent(const Base& a, const Base& b, double eps = kTolerance);

}  // namespace gromov
