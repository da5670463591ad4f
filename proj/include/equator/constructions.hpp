#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equator/graph.hpp"

namespace equator {

struct CatalogEntry {
  std::string name;
  Graph graph;
  int delta = 0;
  int g = 0;
  bool is_moore = false;
};

// Named graphs.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph wheel_graph(int rim);  // C_rim + K_1, hub is vertex rim
Graph petersen_graph();
Graph heawood_graph();
Graph hypercube_graph(int dim);
Graph hoffman_singleton_graph();
Graph robertson_graph();

/// Moore graph of degree delta and girth g: K_{delta+1}, K_{delta,delta},
/// Petersen, Hoffman-Singleton, or the PG(2, delta-1) incidence graph.
/// Throws NoKnownMooreGraph.
CatalogEntry moore_catalog(int delta, int g);

/// Smallest known (delta, g)-graph in the catalog: every Moore graph above
/// plus the girth-5 cages of degree 4, 5 and 6. Throws NoKnownCage.
CatalogEntry cage_catalog(int delta, int g);

/// The edge splice_chain deletes by default: the lexicographically least
/// edge of the lexicographically least girth cycle, as (u, v) with u < v.
Edge default_splice_edge(const Graph& seed);

/// j copies of seed - uv, joined by the edges v_i u_{i+1} (indices mod j).
/// Copy i occupies vertices [i·n, (i+1)·n). An explicit edge must lie on a
/// girth cycle of the seed. Throws InvalidJ for j < 3.
Graph splice_chain(const Graph& seed, int j, std::optional<Edge> edge = std::nullopt);
Graph splice_chain(const CatalogEntry& seed, int j, std::optional<Edge> edge = std::nullopt);

/// C4-free chain built from the Brown graph B(delta + 1): drop a
/// self-orthogonal point x, cut every edge joining a neighbor of y to a
/// neighbor of z (y, z the two smallest neighbors of x), then join y of
/// copy i to z of copy i + 1. Throws UnsupportedDelta unless delta >= 3 and
/// delta + 1 is a prime power <= 64; InvalidJ for j < 3.
Graph c4free_chain(int delta, int j);

/// The 11-vertex gadget: u = 0 on the left triangle, v = 10 on the right.
Graph gadget11();

/// j gadgets joined v_i u_{i+1}. Throws InvalidJ for j < 3.
Graph gadget11_chain(int j);

/// Cycle of parts with |L_i| = pattern[i mod pattern.size()]: consecutive
/// parts completely joined, parts cliques for girth 3 and independent for
/// girth 4. These realize the girth 3 and 4 equatorial families.
Graph layered_cycle(int girth, std::span<const int> pattern, int q);

/// j copies of an equatorial graph cut between L_{q-1} and L_0 and rejoined
/// cyclically. Throws NotEquatorial, InvalidJ for j < 2.
Graph multiply_equatorial(const Graph& g, int j);

/// Identifies the two ends of G[L_i ∪ ... ∪ L_{i+g}] for the first
/// singleton part L_i, recovering a Moore graph. Throws NotEquatorial or
/// NoSingletonPart.
Graph quotient_to_moore(const Graph& g);

}  // namespace equator
