#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "equator/graph.hpp"

namespace equator {

/// Edge-list text: optional '#' comment lines, then "n m", then m lines "u v".
std::string to_edge_list(const Graph& g, const std::vector<std::string>& header_comments = {});
Graph parse_edge_list(std::string_view text);

/// Standard graph6 (no ">>graph6<<" header on output; accepted on input).
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// Loads either format. A file whose first data line is a single token is
/// treated as graph6, otherwise as an edge list.
Graph parse_graph_text(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    const std::vector<std::string>& header_comments = {});
void save_graph6(const std::filesystem::path& path, const Graph& g);

}  // namespace equator
