#include "equator/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "equator/cycle.hpp"
#include "equator/error.hpp"

namespace equator {

std::int64_t moore_bound(int delta, int girth) {
  if (delta < 2 || girth < 3)
    throw Error(Errc::InvalidParameters,
                "moore bound needs delta >= 2 and g >= 3, got (" + std::to_string(delta) + ", " +
                    std::to_string(girth) + ")");
  const int k = disk_radius(girth);
  std::int64_t power = 1;  // (delta - 1)^i
  if (girth % 2 == 1) {
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) {
      total += delta * power;
      power *= delta - 1;
    }
    return total;
  }
  std::int64_t total = 2;
  for (int i = 1; i <= k; ++i) {
    power *= delta - 1;
    total += 2 * power;
  }
  return total;
}

namespace {

BoundReport compare(std::int64_t n, int delta, int g, int q, std::int64_t per_disk, bool regime_ok) {
  BoundReport r;
  r.n = n;
  r.delta = delta;
  r.g = g;
  r.k = disk_radius(g);
  r.q = q;
  r.moore = per_disk;
  r.lower_bound_numerator = static_cast<std::int64_t>(q) * per_disk;
  r.satisfied = n * g >= r.lower_bound_numerator;
  r.tight = n * g == r.lower_bound_numerator;
  r.regime_ok = regime_ok;
  return r;
}

}  // namespace

BoundReport equatorial_bound_check(std::int64_t n, int delta, int g, int q) {
  const int k = disk_radius(g);
  return compare(n, delta, g, q, moore_bound(delta, g), q > 6 * k + 3);
}

std::int64_t c4free_disk_bound(int delta) {
  const std::int64_t d = delta;
  return d * d - 2 * (d / 2) + 1;
}

BoundReport c4free_bound_check(std::int64_t n, int delta, int q) {
  return compare(n, delta, 5, q, c4free_disk_bound(delta), q > 15);
}

KDegreeReport k_degree_report(const Graph& graph) {
  auto g = girth(graph);
  if (!g) throw Error(Errc::Acyclic, "k-degree needs a graph with a cycle");
  KDegreeReport r;
  r.g = *g;
  r.k = disk_radius(r.g);
  r.delta = degree_profile(graph).min_degree;
  DistanceMatrix dm(graph);
  r.min_disk = std::numeric_limits<int>::max();
  if (r.g % 2 == 1) {
    for (Vertex v = 0; v < graph.order(); ++v)
      r.min_disk = std::min(r.min_disk, static_cast<int>(disk(dm, v, r.k).size()));
  } else {
    for (auto e : graph.edges())
      r.min_disk = std::min(r.min_disk, static_cast<int>(edge_disk(graph, dm, e, r.k).size()));
  }
  if (r.delta >= 2) {
    r.moore = moore_bound(r.delta, r.g);
    r.holds = r.min_disk >= r.moore;
  }
  return r;
}

bool verify_k_degree(const Graph& g) { return k_degree_report(g).holds; }

}  // namespace equator
