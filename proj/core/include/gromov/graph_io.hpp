#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gromov/graph.hpp"

namespace gromov {

/// Header line `graph`, then `u v w` lines; a lone `u` declares a node.
WeightedGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedGraph& graph);

struct EdgeListOptions {
  /// Ignore any third column and use weight 1.
  bool unit_weights = false;
};

/// Whitespace-separated `u v [w]` lines as found in public network datasets.
/// Self loops and repeated edges are dropped (the first weight wins) and only
/// the largest connected component is kept; '#' and '%' start comments.
WeightedGraph parse_edge_list(std::string_view text,
                              const EdgeListOptions& options = {});

/// Dispatches on the `graph` header.
WeightedGraph read_graph(const std::filesystem::path& path,
                         const EdgeListOptions& options = {});

}  // namespace gromov
