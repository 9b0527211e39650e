#include "gromov/graph_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gromov/format.hpp"
#include "gromov/matrix_io.hpp"

namespace gromov {

namespace {

std::vector<std::vector<std::string>> split_lines(std::string_view text,
                                                  std::string_view comments,
                                                  std::vector<std::size_t>& numbers) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto cut = raw.find_first_of(comments);
    if (cut != std::string::npos) raw.erase(cut);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    numbers.push_back(number);
  }
  return lines;
}

double weight_token(const std::string& token, std::size_t line) {
  try {
    return parse_double(token, "edge weight");
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  std::vector<std::size_t> numbers;
  const auto lines = split_lines(text, "#", numbers);
  if (lines.empty() || lines.front() != std::vector<std::string>{"graph"}) {
    throw ParseError(numbers.empty() ? 1 : numbers.front(),
                     "expected header 'graph'");
  }
  std::vector<std::string> names;
  std::map<std::string, NodeId, std::less<>> index;
  const auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::vector<GraphEdge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& t = lines[k];
    if (t.size() == 1) {
      intern(t[0]);
    } else if (t.size() == 3) {
      const NodeId u = intern(t[0]);
      const NodeId v = intern(t[1]);
      edges.push_back({u, v, weight_token(t[2], numbers[k])});
    } else {
      throw ParseError(numbers[k], "expected 'u v w'");
    }
  }
  return WeightedGraph(std::move(names), std::move(edges));
}

std::string format_graph(const WeightedGraph& graph) {
  std::string out = "graph\n";
  if (graph.size() == 1) out += graph.name(0) + "\n";
  for (const auto& e : graph.edges()) {
    out += graph.name(e.u) + " " + graph.name(e.v) + " " +
           format_double(e.weight) + "\n";
  }
  return out;
}

WeightedGraph parse_edge_list(std::string_view text,
                              const EdgeListOptions& options) {
  std::vector<std::size_t> numbers;
  const auto lines = split_lines(text, "#%", numbers);
  std::vector<std::string> names;
  std::map<std::string, NodeId, std::less<>> index;
  const auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::vector<GraphEdge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& t = lines[k];
    if (t.size() < 2) throw ParseError(numbers[k], "expected 'u v [w]'");
    double w = 1.0;
    if (!options.unit_weights && t.size() >= 3) w = weight_token(t[2], numbers[k]);
    const NodeId u = intern(t[0]);
    const NodeId v = intern(t[1]);
    if (u == v) continue;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.push_back({u, v, w});
  }
  if (names.empty()) throw ParseError(1, "edge list is empty");

  // Largest connected component, ties to the one holding the lowest id.
  std::vector<std::vector<NodeId>> adjacency(names.size());
  for (const auto& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<std::size_t> component(names.size(), kNoNode);
  std::vector<std::size_t> sizes;
  for (NodeId start = 0; start < names.size(); ++start) {
    if (component[start] != kNoNode) continue;
    const std::size_t c = sizes.size();
    std::vector<NodeId> stack{start};
    component[start] = c;
    std::size_t size = 0;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId y : adjacency[x]) {
        if (component[y] == kNoNode) {
          component[y] = c;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(size);
  }
  const std::size_t keep = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> local(names.size(), kNoNode);
  std::vector<std::string> kept_names;
  for (NodeId x = 0; x < names.size(); ++x) {
    if (component[x] != keep) continue;
    local[x] = kept_names.size();
    kept_names.push_back(names[x]);
  }
  std::vector<GraphEdge> kept_edges;
  for (const auto& e : edges) {
    if (component[e.u] == keep) {
      kept_edges.push_back({local[e.u], local[e.v], e.weight});
    }
  }
  return WeightedGraph(std::move(kept_names), std::move(kept_edges));
}

WeightedGraph read_graph(const std::filesystem::path& path,
                         const EdgeListOptions& options) {
  const std::string text = read_text_file(path);
  std::vector<std::size_t> numbers;
  const auto lines = split_lines(text, "#", numbers);
  if (!lines.empty() && lines.front() == std::vector<std::string>{"graph"}) {
    return parse_graph(text);
  }
  return parse_edge_list(text, options);
}

}  // namespace gromov
