#include "equator/constructions.hpp"

#include <algorithm>
#include <string>

#include "equator/bounds.hpp"
#include "equator/error.hpp"
#include "equator/finite_field.hpp"
#include "equator/isometry.hpp"
#include "equator/structure.hpp"

namespace equator {

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(e, n);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(e, n);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(e, a + b);
}

Graph wheel_graph(int rim) {
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return build_graph(e, rim + 1);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer pentagon
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return build_graph(e, 10);
}

Graph heawood_graph() { return pg2_incidence_graph(2); }

Graph hypercube_graph(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return build_graph(e, n);
}

// Pentagons P_h (vertex 5h + j) and pentagrams Q_i (vertex 25 + 5i + j);
// P_{h,j} ~ Q_{i, (h·i + j) mod 5}.
Graph hoffman_singleton_graph() {
  auto p = [](int h, int j) { return 5 * h + j; };
  auto q = [](int i, int j) { return 25 + 5 * i + j; };
  std::vector<Edge> e;
  for (int a = 0; a < 5; ++a) {
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(p(a, j), p(a, (j + 1) % 5));
      e.emplace_back(q(a, j), q(a, (j + 2) % 5));
    }
  }
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i) e.emplace_back(p(h, j), q(i, (h * i + j) % 5));
  return build_graph(e, 50);
}

// The unique (4,5)-cage on 19 vertices: Hamiltonian cycle 0..18 plus the
// chords i ~ i + kChords[i] (mod 19). Each vertex ends up in exactly two
// chords.
Graph robertson_graph() {
  static constexpr int kChords[19] = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
  std::vector<Edge> e;
  for (int i = 0; i < 19; ++i) {
    e.emplace_back(i, (i + 1) % 19);
    e.emplace_back(i, (i + kChords[i]) % 19);
  }
  return build_graph(e, 19);
}

namespace {

// Hoffman-Singleton minus `drop` pentagons and `drop` pentagrams. Each
// surviving vertex loses one neighbor per deleted pentagram (resp.
// pentagon), so the result is (7 - drop)-regular of girth 5 on 50 - 10·drop
// vertices: the orders 40 and 30 of the (6,5)- and (5,5)-cages.
Graph hoffman_singleton_deleted(int drop) {
  auto hs = hoffman_singleton_graph();
  std::vector<Vertex> keep;
  for (int v = 0; v < 50; ++v) {
    int block = (v % 25) / 5;
    if (block < 5 - drop) keep.push_back(v);
  }
  return induced_subgraph(hs, keep);
}

CatalogEntry make_entry(std::string name, Graph graph, int delta, int g) {
  bool is_moore = graph.order() == moore_bound(delta, g);
  return CatalogEntry{std::move(name), std::move(graph), delta, g, is_moore};
}

}  // namespace

CatalogEntry moore_catalog(int delta, int g) {
  auto none = [&] {
    return Error(Errc::NoKnownMooreGraph,
                 "no Moore graph with delta = " + std::to_string(delta) + ", g = " + std::to_string(g));
  };
  if (delta < 2) throw none();
  if (g == 3) return make_entry("K" + std::to_string(delta + 1), complete_graph(delta + 1), delta, g);
  if (g == 4) return make_entry("K" + std::to_string(delta) + "," + std::to_string(delta),
                                complete_bipartite_graph(delta, delta), delta, g);
  if (g == 5 && delta == 3) return make_entry("petersen", petersen_graph(), 3, 5);
  if (g == 5 && delta == 7) return make_entry("hoffman-singleton", hoffman_singleton_graph(), 7, 5);
  if (g == 6 && delta >= 3 && delta - 1 <= 64 && is_prime_power(delta - 1))
    return make_entry("pg2-incidence-" + std::to_string(delta - 1), pg2_incidence_graph(delta - 1), delta, 6);
  throw none();
}

CatalogEntry cage_catalog(int delta, int g) {
  if (g == 5 && delta == 4) return make_entry("robertson", robertson_graph(), 4, 5);
  if (g == 5 && delta == 5) return make_entry("hoffman-singleton-minus-2x2", hoffman_singleton_deleted(2), 5, 5);
  if (g == 5 && delta == 6) return make_entry("hoffman-singleton-minus-1x1", hoffman_singleton_deleted(1), 6, 5);
  try {
    return moore_catalog(delta, g);
  } catch (const Error&) {
    throw Error(Errc::NoKnownCage, "no cage with delta = " + std::to_string(delta) + ", g = " + std::to_string(g));
  }
}

Edge default_splice_edge(const Graph& seed) {
  auto g = girth(seed);
  if (!g) throw Error(Errc::Acyclic, "splice seed has no cycle");
  DistanceMatrix dm(seed);
  // Shortest cycles are isometric, so the engine's first g-cycle is the
  // lexicographically least canonical one.
  auto cycle = find_isometric_cycle(seed, dm, *g);
  Edge best{seed.order(), seed.order()};
  for (int i = 0; i < cycle->length(); ++i) {
    Vertex a = cycle->at(i), b = cycle->at(i + 1);
    best = std::min(best, Edge{std::min(a, b), std::max(a, b)});
  }
  return best;
}

Graph splice_chain(const Graph& seed, int j, std::optional<Edge> edge) {
  if (j < 3) throw Error(Errc::InvalidJ, "splice chain needs j >= 3, got " + std::to_string(j));
  auto g = girth(seed);
  if (!g) throw Error(Errc::Acyclic, "splice seed has no cycle");
  Edge uv = edge ? *edge : default_splice_edge(seed);
  if (!seed.has_edge(uv.first, uv.second))
    throw Error(Errc::NotAnEdge, "(" + std::to_string(uv.first) + ", " + std::to_string(uv.second) + ")");
  Graph cut = without_edges(seed, std::span<const Edge>(&uv, 1));
  if (bfs_distances(cut, uv.first)[uv.second] != *g - 1)
    throw Error(Errc::InvalidParameters, "splice edge does not lie on a girth cycle");
  const int n = seed.order();
  Graph chain = disjoint_copies(cut, j);
  std::vector<Edge> links;
  for (int i = 0; i < j; ++i) links.emplace_back(uv.second + i * n, uv.first + ((i + 1) % j) * n);
  return with_edges(chain, links);
}

Graph splice_chain(const CatalogEntry& seed, int j, std::optional<Edge> edge) {
  return splice_chain(seed.graph, j, edge);
}

Graph c4free_chain(int delta, int j) {
  const int t = delta + 1;
  if (delta < 3 || t > 64 || !is_prime_power(t))
    throw Error(Errc::UnsupportedDelta, "delta + 1 = " + std::to_string(t) + " must be a prime power <= 64 with delta >= 3");
  if (j < 3) throw Error(Errc::InvalidJ, "c4-free chain needs j >= 3, got " + std::to_string(j));
  Graph brown = brown_graph(t);
  const Vertex x = self_orthogonal_points(t).front();
  const Vertex y = brown.neighbors(x)[0];
  const Vertex z = brown.neighbors(x)[1];

  // Relabel without x, then cut the middle edge of every y-a-b-z path.
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < brown.order(); ++v)
    if (v != x) keep.push_back(v);
  Graph h = induced_subgraph(brown, keep);
  auto relabel = [&](Vertex v) { return v < x ? v : v - 1; };
  const Vertex yy = relabel(y), zz = relabel(z);
  std::vector<Edge> cut;
  for (Vertex a : h.neighbors(yy))
    for (Vertex b : h.neighbors(zz))
      if (a != b && h.has_edge(a, b)) cut.emplace_back(a, b);
  Graph f = without_edges(h, cut);

  const int n = f.order();
  std::vector<Edge> links;
  for (int i = 0; i < j; ++i) links.emplace_back(yy + i * n, zz + ((i + 1) % j) * n);
  return with_edges(disjoint_copies(f, j), links);
}

// Figure positions, left to right: 0 = u (left tip of the triangle 0-1-2),
// 1/2 = upper/lower triangle corners, 3/4 = upper/lower inner-left, 5 =
// upper inner-right, 6 = centre (the one degree-4 vertex), 7 = lower
// inner-right, 8/9 = upper/lower right, 10 = v (right tip).
Graph gadget11() {
  return build_graph({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 6}, {4, 6}, {3, 5},
                      {5, 6}, {6, 7}, {4, 7}, {5, 8}, {7, 9}, {8, 9}, {9, 10}, {8, 10}},
                     11);
}

Graph gadget11_chain(int j) {
  if (j < 3) throw Error(Errc::InvalidJ, "gadget chain needs j >= 3, got " + std::to_string(j));
  std::vector<Edge> links;
  for (int i = 0; i < j; ++i) links.emplace_back(10 + 11 * i, 11 * ((i + 1) % j));
  return with_edges(disjoint_copies(gadget11(), j), links);
}

Graph layered_cycle(int girth, std::span<const int> pattern, int q) {
  if (girth != 3 && girth != 4) throw Error(Errc::InvalidParameters, "layered cycles exist for girth 3 and 4 only");
  if (pattern.empty() || q < 4 || q % static_cast<int>(pattern.size()) != 0)
    throw Error(Errc::InvalidParameters, "pattern length must divide q >= 4");
  if (std::any_of(pattern.begin(), pattern.end(), [](int s) { return s < 1; }))
    throw Error(Errc::InvalidParameters, "part sizes must be positive");
  std::vector<int> start(q + 1, 0);
  for (int i = 0; i < q; ++i) start[i + 1] = start[i] + pattern[i % pattern.size()];
  std::vector<Edge> e;
  for (int i = 0; i < q; ++i) {
    int next = (i + 1) % q;
    for (int a = start[i]; a < start[i + 1]; ++a) {
      if (girth == 3)
        for (int b = a + 1; b < start[i + 1]; ++b) e.emplace_back(a, b);
      for (int b = start[next]; b < start[next + 1]; ++b) e.emplace_back(a, b);
    }
  }
  return build_graph(e, start[q]);
}

Graph multiply_equatorial(const Graph& g, int j) {
  if (j < 2) throw Error(Errc::InvalidJ, "multiplying needs j >= 2, got " + std::to_string(j));
  DistanceMatrix dm(g);
  auto cert = require_equatorial(g, dm);
  const auto& p = *cert.partition;
  const int n = g.order();
  std::vector<Edge> seam;
  for (Vertex u : p.part(p.q - 1))
    for (Vertex v : p.part(0))
      if (g.has_edge(u, v)) seam.emplace_back(u, v);
  Graph h = without_edges(g, seam);
  std::vector<Edge> links;
  for (int i = 0; i < j; ++i)
    for (auto [u, v] : seam) links.emplace_back(u + i * n, v + ((i + 1) % j) * n);
  return with_edges(disjoint_copies(h, j), links);
}

Graph quotient_to_moore(const Graph& g) {
  DistanceMatrix dm(g);
  auto cert = require_equatorial(g, dm);
  const auto& p = *cert.partition;
  const int gth = *cert.girth;
  int first = -1;
  for (int i = 0; i < p.q && first < 0; ++i)
    if (p.part(i).size() == 1) first = i;
  if (first < 0) throw Error(Errc::NoSingletonPart, "every part has at least two vertices");
  if (p.part(first + gth).size() != 1)
    throw Error(Errc::NotEquatorial, "part sizes are not periodic with period g");
  const Vertex u = p.part(first)[0];
  const Vertex v = p.part(first + gth)[0];
  std::vector<Vertex> window;
  for (int s = 0; s < gth; ++s)
    for (Vertex w : p.part(first + s)) window.push_back(w);
  // v is identified with u, which sits at index 0 of the window.
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < window.size(); ++i) index[window[i]] = static_cast<int>(i);
  index[v] = index[u];
  std::vector<Edge> edges;
  for (Vertex a : window)
    for (Vertex b : g.neighbors(a))
      if (index[b] >= 0 && index[a] != index[b]) edges.emplace_back(index[a], index[b]);
  for (Vertex b : g.neighbors(v))
    if (index[b] >= 0 && index[b] != index[u]) edges.emplace_back(index[u], index[b]);
  return build_graph(edges, static_cast<int>(window.size()));
}

}  // namespace equator
