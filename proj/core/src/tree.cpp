#include "gromov/tree.hpp"

#include <algorithm>
#include <set>

namespace gromov {

WeightedTree::WeightedTree(std::vector<TreeEdge> edges,
                           std::vector<std::string> extra_nodes) {
  for (const auto& name : extra_nodes) intern(name);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& edge : edges) {
    if (!(edge.weight > 0.0)) {
      throw Error("edge " + edge.u + " " + edge.v +
                  " has non-positive weight");
    }
    if (edge.u == edge.v) throw Error("self edge at " + edge.u);
    const NodeId a = intern(edge.u);
    const NodeId b = intern(edge.v);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error("duplicate edge " + edge.u + " " + edge.v);
    }
    adjacency_[a].push_back({b, edge.weight});
    adjacency_[b].push_back({a, edge.weight});
  }
  edges_ = std::move(edges);

  if (names_.empty()) return;
  if (edges_.size() + 1 != names_.size()) {
    throw Error("edge set is not a tree: " + std::to_string(names_.size()) +
                " nodes, " + std::to_string(edges_.size()) + " edges");
  }
  // n - 1 edges plus connectivity implies acyclic.
  if (rooted_at(0).order.size() != names_.size()) {
    throw Error("edge set is not connected");
  }
}

WeightedTree WeightedTree::single(std::string node) {
  return WeightedTree({}, {std::move(node)});
}

NodeId WeightedTree::intern(const std::string& name) {
  if (name.empty()) throw Error("empty node identifier");
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const NodeId id = names_.size();
  names_.push_back(name);
  index_.emplace(name, id);
  adjacency_.emplace_back();
  return id;
}

bool WeightedTree::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

NodeId WeightedTree::id(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownNodeError(std::string(name));
  return it->second;
}

double WeightedTree::total_weight() const {
  double total = 0.0;
  for (const auto& edge : edges_) total += edge.weight;
  return total;
}

WeightedTree::Rooted WeightedTree::rooted_at(NodeId root) const {
  Rooted r;
  r.parent.assign(size(), kNoNode);
  r.depth.assign(size(), 0.0);
  r.parent_weight.assign(size(), 0.0);
  if (root >= size()) throw Error("root out of range");
  std::vector<bool> visited(size(), false);
  r.order.reserve(size());
  r.order.push_back(root);
  visited[root] = true;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const NodeId x = r.order[head];
    for (const auto& [y, w] : adjacency_[x]) {
      if (visited[y]) continue;
      visited[y] = true;
      r.parent[y] = x;
      r.parent_weight[y] = w;
      r.depth[y] = r.depth[x] + w;
      r.order.push_back(y);
    }
  }
  return r;
}

std::vector<double> WeightedTree::distances_from(NodeId source) const {
  return rooted_at(source).depth;
}

std::vector<NodeId> WeightedTree::path(NodeId from, NodeId to) const {
  const auto rooted = rooted_at(to);
  std::vector<NodeId> nodes;
  for (NodeId x = from; x != kNoNode; x = rooted.parent[x]) {
    nodes.push_back(x);
  }
  return nodes;
}

Base::Base(WeightedTree tree, std::string base_vertex,
           std::vector<std::string> base_set)
    : tree_(std::move(tree)),
      base_vertex_(std::move(base_vertex)),
      base_set_(std::move(base_set)) {
  tree_.id(base_vertex_);
  std::set<std::string_view> seen;
  for (const auto& v : base_set_) {
    tree_.id(v);
    if (v == base_vertex_) {
      throw Error("base vertex " + v + " is also in the base set");
    }
    if (!seen.insert(v).second) throw Error("repeated base-set node " + v);
  }
}

std::vector<NodeId> Base::base_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(base_set_.size());
  for (const auto& v : base_set_) ids.push_back(tree_.id(v));
  return ids;
}

bool Base::is_canonical() const {
  std::vector<bool> terminal(tree_.size(), false);
  terminal[base_vertex_id()] = true;
  for (NodeId id : base_ids()) terminal[id] = true;
  for (NodeId x = 0; x < tree_.size(); ++x) {
    if (terminal[x]) continue;
    if (tree_.degree(x) <= 2) return false;
  }
  return true;
}

double tree_distance(const WeightedTree& tree, std::string_view u,
                     std::string_view v) {
  const NodeId a = tree.id(u);
  const NodeId b = tree.id(v);
  return tree.distances_from(a)[b];
}

double gromov_product(const WeightedTree& tree, std::string_view s,
                      std::string_view u, std::string_view v) {
  const NodeId root = tree.id(s);
  const NodeId a = tree.id(u);
  const NodeId b = tree.id(v);
  const auto from_s = tree.distances_from(root);
  const double between = tree.distances_from(a)[b];
  return std::max(0.0, 0.5 * (from_s[a] + from_s[b] - between));
}

GromovMatrix gromov_matrix(const Base& base) {
  const auto& tree = base.tree();
  const auto rooted = tree.rooted_at(base.base_vertex_id());
  const auto ids = base.base_ids();
  const auto n = static_cast<Eigen::Index>(ids.size());
  Matrix m(n, n);

  // Branch point of v_i and v_j is the deepest common ancestor in the tree
  // rooted at s; stamp the ancestors of v_i and climb from v_j.
  std::vector<std::size_t> stamp(tree.size(), static_cast<std::size_t>(-1));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto mark = static_cast<std::size_t>(i);
    for (NodeId x = ids[mark]; x != kNoNode; x = rooted.parent[x]) {
      stamp[x] = mark;
    }
    m(i, i) = rooted.depth[ids[mark]];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      NodeId x = ids[static_cast<std::size_t>(j)];
      while (stamp[x] != mark) x = rooted.parent[x];
      m(i, j) = m(j, i) = rooted.depth[x];
    }
  }
  return GromovMatrix::assume_valid(std::move(m));
}

Base restrict_to_span(const WeightedTree& tree, std::string_view s,
                      std::span<const std::string> base_set) {
  const NodeId root = tree.id(s);
  std::vector<NodeId> ids;
  for (const auto& v : base_set) ids.push_back(tree.id(v));

  const auto rooted = tree.rooted_at(root);
  std::vector<bool> kept(tree.size(), false);
  std::vector<bool> terminal(tree.size(), false);
  kept[root] = terminal[root] = true;
  for (NodeId v : ids) {
    terminal[v] = true;
    for (NodeId x = v; x != kNoNode && !kept[x]; x = rooted.parent[x]) {
      kept[x] = true;
    }
  }

  std::vector<std::size_t> kept_degree(tree.size(), 0);
  for (NodeId x = 0; x < tree.size(); ++x) {
    if (!kept[x] || x == root) continue;
    ++kept_degree[x];
    ++kept_degree[rooted.parent[x]];
  }
  const auto is_key = [&](NodeId x) {
    return terminal[x] || (kept[x] && kept_degree[x] >= 3);
  };

  std::vector<TreeEdge> edges;
  for (NodeId x : rooted.order) {
    if (x == root || !is_key(x)) continue;
    double weight = 0.0;
    NodeId y = x;
    do {
      weight += rooted.parent_weight[y];
      y = rooted.parent[y];
    } while (!is_key(y));
    edges.push_back({tree.name(y), tree.name(x), weight});
  }

  std::vector<std::string> names(base_set.begin(), base_set.end());
  WeightedTree restricted(std::move(edges), {std::string(s)});
  return Base(std::move(restricted), std::string(s), std::move(names));
}

bool bases_equivalent(const Base& a, const Base& b, double eps) {
  if (a.size() != b.size()) return false;
  return approx_equal(gromov_matrix(a).entries(), gromov_matrix(b).entries(),
                      eps);
}

}  // namespace gromov
