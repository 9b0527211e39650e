#include "gromov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace gromov {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

// Tree over all graph nodes (same ids) from a parent array.
WeightedTree tree_from_parents(const WeightedGraph& graph,
                               const std::vector<NodeId>& parent,
                               const std::vector<double>& weight) {
  std::vector<TreeEdge> edges;
  edges.reserve(graph.size());
  for (NodeId x = 0; x < graph.size(); ++x) {
    if (parent[x] == kNoNode) continue;
    edges.push_back({graph.name(parent[x]), graph.name(x), weight[x]});
  }
  return WeightedTree(std::move(edges), graph.names());
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> names,
                             std::vector<GraphEdge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  if (names_.empty()) throw Error("graph has no nodes");
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("empty node identifier");
    if (!index_.emplace(names_[i], i).second) {
      throw Error("repeated node " + names_[i]);
    }
  }
  adjacency_.resize(names_.size());
  std::set<std::pair<NodeId, NodeId>> seen;
  DisjointSets components(names_.size());
  std::size_t merges = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v, w] = edges_[e];
    if (u >= names_.size() || v >= names_.size()) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("self loop at " + names_[u]);
    if (!(w > 0.0)) {
      throw Error("edge " + names_[u] + " " + names_[v] +
                  " has non-positive weight");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error("duplicate edge " + names_[u] + " " + names_[v]);
    }
    adjacency_[u].push_back({v, w, e});
    adjacency_[v].push_back({u, w, e});
    if (components.unite(u, v)) ++merges;
  }
  if (merges + 1 != names_.size()) throw Error("graph is not connected");
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incident& a, const Incident& b) { return a.node < b.node; });
  }
}

WeightedGraph WeightedGraph::with_numbered_nodes(std::size_t n,
                                                 std::vector<GraphEdge> edges) {
  return WeightedGraph(numbered(n), std::move(edges));
}

NodeId WeightedGraph::id(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownNodeError(std::string(name));
  return it->second;
}

bool WeightedGraph::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

std::optional<std::size_t> WeightedGraph::edge_between(NodeId u, NodeId v) const {
  const auto list = neighbors(u);
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Incident& a, NodeId node) { return a.node < node; });
  if (it == list.end() || it->node != v) return std::nullopt;
  return it->edge;
}

WeightedTree bfs_tree(const WeightedGraph& graph, NodeId root,
                      const BfsOrdering& ordering) {
  if (root >= graph.size()) throw Error("BFS root out of range");
  std::optional<Engine> engine;
  if (const auto* random = std::get_if<RandomOrder>(&ordering)) {
    engine.emplace(make_engine(random->seed));
  }
  const bool reversed = std::holds_alternative<ReversedOrder>(ordering);

  std::vector<NodeId> parent(graph.size(), kNoNode);
  std::vector<double> weight(graph.size(), 0.0);
  std::vector<bool> visited(graph.size(), false);
  std::vector<NodeId> queue{root};
  visited[root] = true;
  std::vector<Incident> list;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    const auto span = graph.neighbors(x);
    list.assign(span.begin(), span.end());
    if (reversed) std::reverse(list.begin(), list.end());
    if (engine) std::shuffle(list.begin(), list.end(), *engine);
    for (const auto& [y, w, e] : list) {
      if (visited[y]) continue;
      visited[y] = true;
      parent[y] = x;
      weight[y] = w;
      queue.push_back(y);
    }
  }
  return tree_from_parents(graph, parent, weight);
}

ShortestPaths dijkstra(const WeightedGraph& graph, NodeId source,
                       std::span<const double> lengths) {
  if (source >= graph.size()) throw Error("source out of range");
  if (!lengths.empty() && lengths.size() != graph.edge_count()) {
    throw Error("edge lengths cover " + std::to_string(lengths.size()) +
                " of " + std::to_string(graph.edge_count()) + " edges");
  }
  const double inf = std::numeric_limits<double>::infinity();
  ShortestPaths result{std::vector<double>(graph.size(), inf),
                       std::vector<NodeId>(graph.size(), kNoNode),
                       {}};
  result.order.reserve(graph.size());
  std::vector<bool> settled(graph.size(), false);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  result.distance[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (settled[x]) continue;
    settled[x] = true;
    result.order.push_back(x);
    for (const auto& [y, w, e] : graph.neighbors(x)) {
      if (settled[y]) continue;
      const double nd = d + (lengths.empty() ? w : lengths[e]);
      if (nd < result.distance[y] ||
          (nd == result.distance[y] && x < result.predecessor[y])) {
        if (nd < result.distance[y]) heap.push({nd, y});
        result.distance[y] = nd;
        result.predecessor[y] = x;
      }
    }
  }
  return result;
}

WeightedTree shortest_path_tree(const WeightedGraph& graph, NodeId root,
                                std::span<const double> delays) {
  if (delays.size() != graph.edge_count()) {
    throw Error("delays cover " + std::to_string(delays.size()) + " of " +
                std::to_string(graph.edge_count()) + " edges");
  }
  for (double d : delays) {
    if (!(d > 0.0)) throw Error("delays must be positive");
  }
  const auto paths = dijkstra(graph, root, delays);
  std::vector<double> weight(graph.size(), 0.0);
  for (NodeId x = 0; x < graph.size(); ++x) {
    if (paths.predecessor[x] == kNoNode) continue;
    weight[x] = graph.edges()[*graph.edge_between(x, paths.predecessor[x])].weight;
  }
  return tree_from_parents(graph, paths.predecessor, weight);
}

std::vector<double> sample_delays(const WeightedGraph& graph,
                                  const DelayModel& model, RngSeed seed) {
  Engine engine = make_engine(seed);
  std::vector<double> delays(graph.edge_count());
  std::visit(
      Overloaded{
          [&](const Exponential& m) {
            if (!(m.rate > 0.0)) throw Error("exponential rate must be positive");
            std::exponential_distribution<double> draw(m.rate);
            for (auto& d : delays) {
              do {
                d = draw(engine);
              } while (!(d > 0.0));
            }
          },
          [&](const TruncatedGaussian& m) {
            if (!(m.variance > 0.0)) throw Error("variance must be positive");
            std::normal_distribution<double> draw(m.mean, std::sqrt(m.variance));
            for (auto& d : delays) {
              do {
                d = draw(engine);
              } while (!(d > 0.0));
            }
          },
      },
      model);
  return delays;
}

std::vector<NodeId> voronoi_partition(const WeightedGraph& graph,
                                      std::span<const NodeId> centers) {
  if (centers.empty()) throw Error("voronoi_partition needs a center");
  std::vector<std::size_t> rank(graph.size(), kNoNode);
  for (std::size_t r = 0; r < centers.size(); ++r) {
    if (centers[r] >= graph.size()) throw Error("center out of range");
    if (rank[centers[r]] != kNoNode) throw Error("repeated center");
    rank[centers[r]] = r;
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::size_t>> label(graph.size(), {inf, kNoNode});
  std::vector<bool> settled(graph.size(), false);
  using Item = std::tuple<double, std::size_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t r = 0; r < centers.size(); ++r) {
    label[centers[r]] = {0.0, r};
    heap.push({0.0, r, centers[r]});
  }
  while (!heap.empty()) {
    const auto [d, r, x] = heap.top();
    heap.pop();
    if (settled[x]) continue;
    settled[x] = true;
    for (const auto& [y, w, e] : graph.neighbors(x)) {
      if (settled[y]) continue;
      const std::pair<double, std::size_t> candidate{d + w, r};
      if (candidate < label[y]) {
        label[y] = candidate;
        heap.push({candidate.first, r, y});
      }
    }
  }
  std::vector<NodeId> owner(graph.size());
  for (NodeId x = 0; x < graph.size(); ++x) owner[x] = centers[label[x].second];
  return owner;
}

WeightedTree minimum_spanning_tree(const WeightedGraph& graph) {
  std::vector<std::size_t> order(graph.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return graph.edges()[a].weight < graph.edges()[b].weight;
  });
  DisjointSets components(graph.size());
  std::vector<TreeEdge> edges;
  for (std::size_t e : order) {
    const auto& edge = graph.edges()[e];
    if (components.unite(edge.u, edge.v)) {
      edges.push_back({graph.name(edge.u), graph.name(edge.v), edge.weight});
    }
  }
  return WeightedTree(std::move(edges), graph.names());
}

Subgraph induced_subgraph(const WeightedGraph& graph,
                          std::span<const NodeId> nodes) {
  std::vector<NodeId> local(graph.size(), kNoNode);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= graph.size()) throw Error("node out of range");
    local[nodes[i]] = i;
    names.push_back(graph.name(nodes[i]));
  }
  std::vector<GraphEdge> edges;
  for (const auto& edge : graph.edges()) {
    if (local[edge.u] != kNoNode && local[edge.v] != kNoNode) {
      edges.push_back({local[edge.u], local[edge.v], edge.weight});
    }
  }
  return {WeightedGraph(std::move(names), std::move(edges)),
          std::vector<NodeId>(nodes.begin(), nodes.end())};
}

namespace {

bool connected(std::size_t n, const std::vector<GraphEdge>& edges) {
  DisjointSets components(n);
  std::size_t merges = 0;
  for (const auto& e : edges) {
    if (components.unite(e.u, e.v)) ++merges;
  }
  return merges + 1 == n;
}

WeightedGraph erdos_renyi(const ErdosRenyi& kind, Engine& engine) {
  if (kind.n < 2) throw Error("ER graph needs n >= 2");
  const double p = kind.average_degree / static_cast<double>(kind.n - 1);
  if (!(p > 0.0) || p > 1.0) {
    throw Error("ER average degree must lie in (0, n-1]");
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t attempt = 0; attempt < kMaxErAttempts; ++attempt) {
    std::vector<GraphEdge> edges;
    for (NodeId u = 0; u < kind.n; ++u) {
      for (NodeId v = u + 1; v < kind.n; ++v) {
        if (coin(engine)) edges.push_back({u, v, 1.0});
      }
    }
    if (connected(kind.n, edges)) {
      return WeightedGraph::with_numbered_nodes(kind.n, std::move(edges));
    }
  }
  throw Error("no connected ER graph in " + std::to_string(kMaxErAttempts) +
              " attempts");
}

WeightedGraph barabasi_albert(const BarabasiAlbert& kind, Engine& engine) {
  if (kind.m == 0 || kind.m >= kind.n) {
    throw Error("BA graph needs 1 <= m < n");
  }
  std::vector<GraphEdge> edges;
  // Every endpoint once per incident edge, for degree-proportional draws.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u <= kind.m; ++u) {
    for (NodeId v = u + 1; v <= kind.m; ++v) {
      edges.push_back({u, v, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  for (NodeId x = kind.m + 1; x < kind.n; ++x) {
    std::set<NodeId> targets;
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < kind.m) targets.insert(endpoints[pick(engine)]);
    for (NodeId t : targets) {
      edges.push_back({t, x, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(x);
    }
  }
  return WeightedGraph::with_numbered_nodes(kind.n, std::move(edges));
}

}  // namespace

WeightedGraph generate_graph(const GraphKind& kind, RngSeed seed) {
  Engine engine = make_engine(seed);
  return std::visit(
      Overloaded{
          [&](const ErdosRenyi& k) { return erdos_renyi(k, engine); },
          [&](const BarabasiAlbert& k) { return barabasi_albert(k, engine); },
          [](const Grid2D& k) {
            if (k.rows == 0 || k.cols == 0) throw Error("empty grid");
            std::vector<GraphEdge> edges;
            for (std::size_t r = 0; r < k.rows; ++r) {
              for (std::size_t c = 0; c < k.cols; ++c) {
                const NodeId x = r * k.cols + c;
                if (c + 1 < k.cols) edges.push_back({x, x + 1, 1.0});
                if (r + 1 < k.rows) edges.push_back({x, x + k.cols, 1.0});
              }
            }
            return WeightedGraph::with_numbered_nodes(k.rows * k.cols,
                                                      std::move(edges));
          },
          [](const Complete& k) {
            if (k.n == 0) throw Error("empty complete graph");
            std::vector<GraphEdge> edges;
            for (NodeId u = 0; u < k.n; ++u) {
              for (NodeId v = u + 1; v < k.n; ++v) edges.push_back({u, v, 1.0});
            }
            return WeightedGraph::with_numbered_nodes(k.n, std::move(edges));
          },
      },
      kind);
}

}  // namespace gromov
