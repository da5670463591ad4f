#include "equator/isometry.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "equator/error.hpp"

namespace equator {

namespace {

enum class Root { Minimum, Fixed };

// Depth-first growth of v_0..v_t under the prefix-isometry constraint
// d(v_i, v_j) = min(j - i, L - (j - i)). A prefix violating it cannot be
// completed, so each extension is tested against the whole prefix.
class PathSearch {
public:
  PathSearch(const Graph& g, const DistanceMatrix& dm, int length, Root mode)
      : g_(g), dm_(dm), length_(length), mode_(mode), target_(length + 1) {
    for (int d = 0; d <= length; ++d) target_[d] = std::min(d, length - d);
    path_.reserve(length);
  }

  // Calls on_cycle(path) for each cycle rooted at `root`; stops as soon as it
  // returns true. Returns whether it was stopped. `abort` is polled between
  // extensions so a parallel caller can cancel a root that can no longer win.
  template <typename OnCycle, typename Abort>
  bool run(Vertex root, OnCycle&& on_cycle, Abort&& abort) {
    path_.assign(1, root);
    return extend(on_cycle, abort);
  }

private:
  template <typename OnCycle, typename Abort>
  bool extend(OnCycle& on_cycle, Abort& abort) {
    if (abort()) return true;
    const int j = static_cast<int>(path_.size());
    const Vertex last = path_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (mode_ == Root::Minimum && w <= path_[0]) continue;
      if (j == length_ - 1 && w <= path_[1]) continue;  // fixes orientation
      auto row = dm_.row(w);
      bool ok = true;
      for (int i = 0; i < j - 1; ++i) {
        if (row[path_[i]] != target_[j - i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      path_.push_back(w);
      bool stop = (j == length_ - 1) ? on_cycle(path_) : extend(on_cycle, abort);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& dm_;
  int length_;
  Root mode_;
  std::vector<int> target_;
  std::vector<Vertex> path_;
};

}  // namespace

bool is_isometric_cycle(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> cycle) {
  const int q = static_cast<int>(cycle.size());
  if (q < 3) throw Error(Errc::NotACycle, "a cycle needs at least 3 vertices");
  std::vector<char> seen(g.order(), 0);
  for (int i = 0; i < q; ++i) {
    Vertex u = cycle[i];
    if (u < 0 || u >= g.order()) throw Error(Errc::NotACycle, "vertex " + std::to_string(u) + " out of range");
    if (seen[u]) throw Error(Errc::NotACycle, "vertex " + std::to_string(u) + " repeats");
    seen[u] = 1;
    Vertex next = cycle[(i + 1) % q];
    if (!g.has_edge(u, next))
      throw Error(Errc::NotACycle, std::to_string(u) + " and " + std::to_string(next) + " are not adjacent");
  }
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (dm(cycle[i], cycle[j]) != std::min(j - i, q - (j - i))) return false;
    }
  }
  return true;
}

std::optional<IsometricCycle> find_isometric_cycle(const Graph& g, const DistanceMatrix& dm, int length,
                                                   int threads) {
  const int n = g.order();
  if (length < 3 || length > n) return std::nullopt;
  const int roots = n - length + 1;  // the root is the minimum vertex of the cycle

  if (threads <= 1) {
    PathSearch search(g, dm, length, Root::Minimum);
    std::optional<IsometricCycle> found;
    auto on_cycle = [&](const std::vector<Vertex>& path) {
      found = IsometricCycle{path};
      return true;
    };
    auto never = [] { return false; };
    for (Vertex r = 0; r < roots; ++r)
      if (search.run(r, on_cycle, never)) break;
    return found;
  }

  // Workers claim roots in ascending order; the winning root is the
  // smallest that succeeds, which is exactly what the sequential loop finds.
  std::atomic<int> next_root{0};
  std::atomic<int> best_root{roots};
  std::vector<std::optional<IsometricCycle>> found(roots);
  auto worker = [&] {
    PathSearch search(g, dm, length, Root::Minimum);
    for (;;) {
      int r = next_root.fetch_add(1);
      if (r >= roots || r >= best_root.load()) return;
      std::uint32_t polls = 0;
      auto abort = [&] { return (++polls & 1023u) == 0 && best_root.load() < r; };
      auto on_cycle = [&](const std::vector<Vertex>& path) {
        found[r] = IsometricCycle{path};
        int cur = best_root.load();
        while (r < cur && !best_root.compare_exchange_weak(cur, r)) {
        }
        return true;
      };
      search.run(r, on_cycle, abort);
    }
  };
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  int best = best_root.load();
  if (best >= roots) return std::nullopt;
  return found[best];
}

EquatorResult compute_equator(const Graph& g, const DistanceMatrix& dm, const EquatorOptions& options) {
  EquatorResult result;
  auto gth = girth(g);
  if (!gth) return result;
  int ceiling = std::min(g.order(), 2 * dm.max_finite() + 1);
  if (options.cap && *options.cap < ceiling) {
    ceiling = *options.cap;
    result.search_capped = true;
  }
  // A shortest cycle is always isometric, so the search never goes below g.
  for (int length = ceiling; length >= *gth; --length) {
    if (auto c = find_isometric_cycle(g, dm, length, options.threads)) {
      result.q = length;
      result.witness = std::move(c);
      return result;
    }
  }
  return result;
}

EquatorResult compute_equator(const Graph& g, std::optional<int> cap) {
  DistanceMatrix dm(g);
  return compute_equator(g, dm, EquatorOptions{cap, 1});
}

std::vector<IsometricCycle> enumerate_isometric_cycles(const Graph& g, const DistanceMatrix& dm, int length,
                                                       const CycleEnumeration& options) {
  std::vector<IsometricCycle> out;
  if (length < 3 || length > g.order()) return out;
  PathSearch search(g, dm, length, options.through ? Root::Fixed : Root::Minimum);
  auto on_cycle = [&](const std::vector<Vertex>& path) {
    out.push_back(IsometricCycle{path});
    return options.limit != 0 && out.size() >= options.limit;
  };
  auto never = [] { return false; };
  if (options.through) {
    search.run(*options.through, on_cycle, never);
  } else {
    for (Vertex r = 0; r + length <= g.order(); ++r)
      if (search.run(r, on_cycle, never)) break;
  }
  return out;
}

std::vector<Vertex> geodesic(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to) {
  if (dm(from, to) == DistanceMatrix::kUnreachable)
    throw Error(Errc::Disconnected, "no path between " + std::to_string(from) + " and " + std::to_string(to));
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dm(w, to) == dm(cur, to) - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

IsometricCycle isometric_cycle_through(const Graph& g, const DistanceMatrix& dm, const IsometricCycle& base,
                                       Vertex v, const EquatorPartition& partition) {
  if (v < 0 || v >= g.order()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  if (base.contains(v)) return base;
  const int k = partition.k();
  const int i = partition.part_of.at(v);
  const Vertex a = base.at(i - k);
  const Vertex b = base.at(i + k);
  if (dm(a, v) != k || dm(v, b) != k)
    throw Error(Errc::NotEquatorial, "vertex " + std::to_string(v) + " is not midway between u_" +
                                         std::to_string(partition.index(i - k)) + " and u_" +
                                         std::to_string(partition.index(i + k)));
  auto left = geodesic(g, dm, a, v);
  auto right = geodesic(g, dm, v, b);
  IsometricCycle out = base;
  for (int s = 1; s < k; ++s) out.vertices[partition.index(i - k + s)] = left[s];
  out.vertices[partition.index(i)] = v;
  for (int s = 1; s < k; ++s) out.vertices[partition.index(i + s)] = right[s];
  bool ok = false;
  try {
    ok = is_isometric_cycle(g, dm, out.vertices);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok)
    throw Error(Errc::NotEquatorial, "swapping a geodesic through " + std::to_string(v) +
                                         " does not give an isometric cycle");
  return out;
}

}  // namespace equator
