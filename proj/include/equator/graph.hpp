#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace equator {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted so that every traversal in the library is deterministic.
/// Immutable once built.
class Graph {
public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  friend Graph build_graph(std::span<const Edge> edges, int n);

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
Graph build_graph(std::span<const Edge> edges, int n);

inline Graph build_graph(std::initializer_list<Edge> edges, int n) {
  return build_graph(std::span<const Edge>(edges.begin(), edges.size()), n);
}

/// Dense all-pairs hop distances.
class DistanceMatrix {
public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  bool connected() const;
  /// Largest finite distance (the maximum diameter over components).
  int max_finite() const;

private:
  int n_ = 0;
  std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Single-source BFS distances; unreachable entries hold kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Eccentricities {
  int diameter = 0;
  int radius = 0;
};

/// Throws Disconnected for disconnected (or empty) graphs.
Eccentricities diameter_and_radius(const Graph& g);
Eccentricities diameter_and_radius(const DistanceMatrix& dm);

/// Sorted vertex set {w : d(v, w) <= k}.
std::vector<Vertex> disk(const Graph& g, Vertex v, int k);
std::vector<Vertex> disk(const DistanceMatrix& dm, Vertex v, int k);

/// Union of the endpoint disks. Throws NotAnEdge.
std::vector<Vertex> edge_disk(const Graph& g, Edge e, int k);
std::vector<Vertex> edge_disk(const Graph& g, const DistanceMatrix& dm, Edge e, int k);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = true;
  std::map<int, int> histogram;
};

DegreeProfile degree_profile(const Graph& g);

// Small structural helpers shared by the construction and structure code.

Graph without_edges(const Graph& g, std::span<const Edge> removed);
Graph with_edges(const Graph& g, std::span<const Edge> added);

/// Subgraph induced on `keep`; vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// j disjoint copies; copy c occupies [c*n, (c+1)*n).
Graph disjoint_copies(const Graph& g, int j);

/// True iff every pair of vertices has at most one common neighbor.
bool is_c4_free(const Graph& g);

}  // namespace equator
