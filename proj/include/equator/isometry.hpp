#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "equator/cycle.hpp"
#include "equator/graph.hpp"

namespace equator {

/// True iff `cycle` is a cycle of g whose cyclic distances all equal the
/// graph distances. Throws NotACycle when the sequence is shorter than 3,
/// repeats a vertex, or skips a non-edge.
bool is_isometric_cycle(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> cycle);

struct EquatorResult {
  int q = 0;  // 0 for acyclic graphs
  std::optional<IsometricCycle> witness;
  bool search_capped = false;
};

struct EquatorOptions {
  std::optional<int> cap;
  int threads = 1;
};

/// Longest isometric cycle. Lengths are tried from min(cap, 2·diam + 1, n)
/// downwards; the first length admitting a cycle is the answer. Within a
/// length the witness is the one rooted at the smallest vertex, with the
/// smaller second vertex, reached first in ascending-neighbor order.
EquatorResult compute_equator(const Graph& g, const DistanceMatrix& dm, const EquatorOptions& options = {});
EquatorResult compute_equator(const Graph& g, std::optional<int> cap = std::nullopt);

/// Deterministic isometric cycle of exactly `length`, or nullopt.
std::optional<IsometricCycle> find_isometric_cycle(const Graph& g, const DistanceMatrix& dm, int length,
                                                   int threads = 1);

struct CycleEnumeration {
  /// Restrict to cycles through this vertex (it becomes u_0). Otherwise u_0
  /// is the minimum vertex of each cycle.
  std::optional<Vertex> through;
  /// Stop after this many cycles; 0 means no limit.
  std::size_t limit = 0;
};

/// Every isometric cycle of the given length, each reported once (one
/// orientation, canonical start), in DFS order.
std::vector<IsometricCycle> enumerate_isometric_cycles(const Graph& g, const DistanceMatrix& dm, int length,
                                                       const CycleEnumeration& options = {});

/// Rebuilds `base` so it passes through v, swapping the arc
/// u_{i-k}..u_{i+k} around v's part for a geodesic through v. The returned
/// cycle keeps base's indexing, so position j still lies in part L_j.
/// Throws NotEquatorial when the swapped cycle is not isometric.
IsometricCycle isometric_cycle_through(const Graph& g, const DistanceMatrix& dm, const IsometricCycle& base,
                                       Vertex v, const EquatorPartition& partition);

/// Shortest path from `from` to `to`, taking the smallest-id neighbor that
/// makes progress at every step.
std::vector<Vertex> geodesic(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to);

}  // namespace equator
