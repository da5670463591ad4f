#include "equator/graph.hpp"

#include <algorithm>
#include <string>

#include "equator/error.hpp"

namespace equator {

namespace {

std::string edge_text(Edge e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(std::span<const Edge> edges, int n) {
  if (n < 0) throw Error(Errc::InvalidParameters, "negative vertex count");
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::VertexOutOfRange, "edge " + edge_text({u, v}) + " with n = " + std::to_string(n));
    if (u == v) throw Error(Errc::SelfLoop, "edge " + edge_text({u, v}));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  int twice = 0;
  for (auto& a : g.adjacency_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    twice += static_cast<int>(a.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  dist_.resize(static_cast<std::size_t>(n_) * n_);
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s) * n_);
  }
}

bool DistanceMatrix::connected() const {
  return n_ > 0 && std::none_of(dist_.begin(), dist_.end(), [](int d) { return d == kUnreachable; });
}

int DistanceMatrix::max_finite() const {
  int best = 0;
  for (int d : dist_)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == DistanceMatrix::kUnreachable; });
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // No shorter cycle through root can be discovered past this depth.
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Eccentricities diameter_and_radius(const DistanceMatrix& dm) {
  if (!dm.connected()) throw Error(Errc::Disconnected, "diameter and radius need a connected graph");
  Eccentricities out{0, std::numeric_limits<int>::max()};
  for (Vertex v = 0; v < dm.order(); ++v) {
    auto row = dm.row(v);
    int ecc = *std::max_element(row.begin(), row.end());
    out.diameter = std::max(out.diameter, ecc);
    out.radius = std::min(out.radius, ecc);
  }
  return out;
}

Eccentricities diameter_and_radius(const Graph& g) { return diameter_and_radius(DistanceMatrix(g)); }

std::vector<Vertex> disk(const DistanceMatrix& dm, Vertex v, int k) {
  if (v < 0 || v >= dm.order()) throw Error(Errc::VertexOutOfRange, "disk centre " + std::to_string(v));
  std::vector<Vertex> out;
  auto row = dm.row(v);
  for (Vertex w = 0; w < dm.order(); ++w)
    if (row[w] <= k) out.push_back(w);
  return out;
}

std::vector<Vertex> disk(const Graph& g, Vertex v, int k) {
  if (v < 0 || v >= g.order()) throw Error(Errc::VertexOutOfRange, "disk centre " + std::to_string(v));
  auto d = bfs_distances(g, v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (d[w] <= k) out.push_back(w);
  return out;
}

std::vector<Vertex> edge_disk(const Graph& g, const DistanceMatrix& dm, Edge e, int k) {
  if (!g.has_edge(e.first, e.second)) throw Error(Errc::NotAnEdge, edge_text(e));
  auto a = disk(dm, e.first, k);
  auto b = disk(dm, e.second, k);
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> edge_disk(const Graph& g, Edge e, int k) {
  if (!g.has_edge(e.first, e.second)) throw Error(Errc::NotAnEdge, edge_text(e));
  auto a = disk(g, e.first, k);
  auto b = disk(g, e.second, k);
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min_degree = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    ++p.histogram[d];
  }
  p.is_regular = p.min_degree == p.max_degree;
  return p;
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> keep;
  for (auto e : g.edges()) {
    bool drop = std::any_of(removed.begin(), removed.end(), [&](Edge r) {
      return (r.first == e.first && r.second == e.second) || (r.first == e.second && r.second == e.first);
    });
    if (!drop) keep.push_back(e);
  }
  return build_graph(keep, g.order());
}

Graph with_edges(const Graph& g, std::span<const Edge> added) {
  auto all = g.edges();
  all.insert(all.end(), added.begin(), added.end());
  return build_graph(all, g.order());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
  return build_graph(edges, static_cast<int>(keep.size()));
}

Graph disjoint_copies(const Graph& g, int j) {
  const int n = g.order();
  std::vector<Edge> edges;
  auto base = g.edges();
  for (int c = 0; c < j; ++c)
    for (auto [u, v] : base) edges.emplace_back(u + c * n, v + c * n);
  return build_graph(edges, n * j);
}

bool is_c4_free(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, -1);
  // For each u, a second path u-x-w with w already reached means two common
  // neighbors of u and w, i.e. a 4-cycle.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x : g.neighbors(u)) {
      for (Vertex w : g.neighbors(x)) {
        if (w == u) continue;
        if (seen[w] == u) return false;
        seen[w] = u;
      }
    }
  }
  return true;
}

}  // namespace equator
