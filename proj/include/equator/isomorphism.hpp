#pragma once

#include <optional>
#include <vector>

#include "equator/graph.hpp"

namespace equator {

/// Backtracking isomorphism search for graphs up to a few hundred
/// vertices. Candidates are filtered by a degree/distance-profile invariant
/// and by requiring the partial map to preserve all pairwise distances.
/// Returns map with map[v in a] = vertex of b.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Checks that `map` is a bijection carrying edges onto edges.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map);

}  // namespace equator
