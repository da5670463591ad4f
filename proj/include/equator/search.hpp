#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equator/graph.hpp"

namespace equator {

struct SearchSpec {
  int delta_min = 1;
  int g = 3;
  int q = 3;
  int n_max = 8;
  bool require_regular = false;
};

/// Progress marker: orders below `n` are finished, and at order n the first
/// `branches_done` top-level branches are finished. Witnesses already found
/// at order n are carried as graph6 strings.
struct SearchFrontier {
  int n = 0;
  std::int64_t branches_done = 0;
  std::vector<std::string> witnesses;
};

struct SearchCounters {
  std::int64_t nodes = 0;       // augmentations surviving the hereditary prunes
  std::int64_t canonical = 0;   // of those, canonical
  std::int64_t candidates = 0;  // full-order graphs reaching the equator filter
};

struct SearchResult {
  SearchSpec spec;
  std::optional<int> min_order;
  std::vector<Graph> witnesses;  // pairwise non-isomorphic, sorted by graph6
  /// True when every order up to n_max was searched and nothing was found.
  bool exhausted = false;
  SearchCounters counters;
  double wall_seconds = 0;
};

struct SearchOptions {
  int threads = 1;
  std::optional<SearchFrontier> resume;
  /// Called after each completed top-level branch (in branch order).
  std::function<void(const SearchFrontier&)> on_checkpoint;
};

/// Largest order the exhaustive search accepts.
inline constexpr int kSearchMaxOrder = 12;

/// Smallest n in [max(q, M(delta_min, g)), n_max] admitting a connected
/// graph with minimum degree >= delta_min, girth exactly g and equator
/// exactly q (regular if asked). Every isomorphism class is generated once,
/// as the graph whose column-wise upper-triangle code is largest.
/// Throws SpecTooLarge when n_max > 12, InvalidParameters for nonsense.
SearchResult min_order_search(const SearchSpec& spec, const SearchOptions& options = {});

/// Every graph on n vertices up to isomorphism, in canonical form, that
/// passes `keep`. The generator behind the search, exposed for testing.
std::vector<Graph> generate_graphs(int n, const std::function<bool(const Graph&)>& keep = {});

/// True iff no vertex relabeling gives a larger column-wise code.
bool is_canonical(const Graph& g);

}  // namespace equator
