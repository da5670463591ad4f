#include "equator/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "equator/bounds.hpp"
#include "equator/error.hpp"
#include "equator/graph_io.hpp"
#include "equator/isometry.hpp"

namespace equator {

namespace {

using Mask = std::uint16_t;
static_assert(sizeof(Mask) * 8 >= kSearchMaxOrder);

// A prefix of the graph being built: vertices 0..m-1, adjacency as masks.
struct Node {
  int m = 0;
  std::array<Mask, kSearchMaxOrder> adj{};
};

Graph to_graph(const Node& node) {
  std::vector<Edge> edges;
  for (int i = 0; i < node.m; ++i)
    for (int j = i + 1; j < node.m; ++j)
      if (node.adj[i] >> j & 1) edges.emplace_back(i, j);
  return build_graph(edges, node.m);
}

// Lexicographic comparison of column codes: position j of a relabeling
// holds vertex perm[j]; column j is (A[perm[i]][perm[j]])_{i<j}.
class CanonicityTest {
public:
  explicit CanonicityTest(const Node& node) : node_(node) {}

  bool run() { return !larger(0); }

private:
  // True when some completion of perm[0..j) yields a larger code.
  bool larger(int j) {
    if (j == node_.m) return false;
    for (int w = 0; w < node_.m; ++w) {
      if (used_ >> w & 1) continue;
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        int mine = node_.adj[perm_[i]] >> w & 1;
        int ref = node_.adj[i] >> j & 1;
        cmp = mine - ref;
      }
      if (cmp > 0) return true;
      if (cmp < 0) continue;
      perm_[j] = w;
      used_ |= Mask(1u << w);
      bool found = larger(j + 1);
      used_ &= Mask(~(1u << w));
      if (found) return true;
    }
    return false;
  }

  const Node& node_;
  std::array<int, kSearchMaxOrder> perm_{};
  Mask used_ = 0;
};

struct Prunes {
  int target_n = 0;
  int delta_min = 0;
  int min_girth = 3;
};

class Generator {
public:
  Generator(const Prunes& prunes, SearchCounters& counters) : prunes_(prunes), counters_(counters) {}

  // Calls visit(child) for every canonical one-vertex extension of `node`
  // that survives the prunes.
  template <typename Visit>
  void children(const Node& node, Visit&& visit) {
    const int m = node.m;
    // Pairwise distances in the prefix, needed for the girth prune: joining
    // a and b through the new vertex closes a cycle of length d(a, b) + 2.
    std::array<std::array<int, kSearchMaxOrder>, kSearchMaxOrder> dist{};
    if (prunes_.min_girth > 3) {
      for (int s = 0; s < m; ++s) {
        dist[s].fill(kFar);
        dist[s][s] = 0;
        Mask seen = Mask(1u << s), frontier = seen;
        for (int d = 1; frontier; ++d) {
          Mask next = 0;
          for (int v = 0; v < m; ++v)
            if (frontier >> v & 1) next |= node.adj[v];
          next &= Mask(~seen);
          for (int v = 0; v < m; ++v)
            if (next >> v & 1) dist[s][v] = d;
          seen |= next;
          frontier = next;
        }
      }
    }
    const int remaining = prunes_.target_n - (m + 1);
    for (std::uint32_t set = 0; set < (1u << m); ++set) {
      Node child = node;
      child.m = m + 1;
      child.adj[m] = Mask(set);
      bool ok = true;
      for (int v = 0; v < m && ok; ++v) {
        if (set >> v & 1) {
          child.adj[v] |= Mask(1u << m);
          if (prunes_.min_girth > 3)
            for (int w = v + 1; w < m && ok; ++w)
              if ((set >> w & 1) && dist[v][w] + 2 < prunes_.min_girth) ok = false;
        }
      }
      for (int v = 0; v <= m && ok; ++v)
        if (std::popcount(child.adj[v]) + remaining < prunes_.delta_min) ok = false;
      if (!ok) continue;
      ++counters_.nodes;
      if (!CanonicityTest(child).run()) continue;
      ++counters_.canonical;
      visit(child);
    }
  }

  template <typename Leaf>
  void descend(const Node& node, Leaf& leaf) {
    if (node.m == prunes_.target_n) {
      leaf(node);
      return;
    }
    children(node, [&](const Node& child) { descend(child, leaf); });
  }

private:
  static constexpr int kFar = 1 << 20;
  const Prunes& prunes_;
  SearchCounters& counters_;
};

// Orders at which the tree is cut into independently searchable branches.
constexpr int kSplitOrder = 6;

std::vector<Node> branches(const Prunes& prunes, SearchCounters& counters) {
  const int level = std::min(prunes.target_n, kSplitOrder);
  std::vector<Node> out;
  Generator gen(prunes, counters);
  std::function<void(const Node&)> walk = [&](const Node& node) {
    if (node.m == level) {
      out.push_back(node);
      return;
    }
    gen.children(node, walk);
  };
  walk(Node{});
  return out;
}

bool meets_spec(const Graph& g, const SearchSpec& spec, SearchCounters& counters) {
  if (!is_connected(g)) return false;
  if (girth(g) != spec.g) return false;
  auto profile = degree_profile(g);
  if (profile.min_degree < spec.delta_min) return false;
  if (spec.require_regular && !profile.is_regular) return false;
  ++counters.candidates;
  return compute_equator(g, DistanceMatrix(g)).q == spec.q;
}

void validate(const SearchSpec& spec) {
  if (spec.n_max > kSearchMaxOrder)
    throw Error(Errc::SpecTooLarge, "n_max = " + std::to_string(spec.n_max) + " exceeds " +
                                        std::to_string(kSearchMaxOrder));
  if (spec.g < 3 || spec.q < spec.g || spec.delta_min < 0 || spec.n_max < 1)
    throw Error(Errc::InvalidParameters, "search needs g >= 3, q >= g, delta >= 0, n_max >= 1");
}

int first_order(const SearchSpec& spec) {
  std::int64_t lo = std::max({spec.q, spec.g, spec.delta_min + 1});
  if (spec.delta_min >= 2) lo = std::max<std::int64_t>(lo, moore_bound(spec.delta_min, spec.g));
  return static_cast<int>(std::min<std::int64_t>(lo, kSearchMaxOrder + 1));
}

}  // namespace

bool is_canonical(const Graph& g) {
  if (g.order() > kSearchMaxOrder) throw Error(Errc::SpecTooLarge, "canonicity test is limited to 12 vertices");
  Node node;
  node.m = g.order();
  for (auto [u, v] : g.edges()) {
    node.adj[u] |= Mask(1u << v);
    node.adj[v] |= Mask(1u << u);
  }
  return CanonicityTest(node).run();
}

std::vector<Graph> generate_graphs(int n, const std::function<bool(const Graph&)>& keep) {
  if (n > kSearchMaxOrder) throw Error(Errc::SpecTooLarge, "generation is limited to 12 vertices");
  std::vector<Graph> out;
  if (n < 0) return out;
  SearchCounters counters;
  Prunes prunes{n, 0, 3};
  Generator gen(prunes, counters);
  auto leaf = [&](const Node& node) {
    Graph g = to_graph(node);
    if (!keep || keep(g)) out.push_back(std::move(g));
  };
  gen.descend(Node{}, leaf);
  return out;
}

SearchResult min_order_search(const SearchSpec& spec, const SearchOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.spec = spec;

  int n = first_order(spec);
  if (options.resume && options.resume->n > n) n = options.resume->n;
  for (; n <= spec.n_max && !result.min_order; ++n) {
    Prunes prunes{n, spec.delta_min, spec.g};
    auto roots = branches(prunes, result.counters);
    const bool resuming = options.resume && options.resume->n == n;
    const std::int64_t first = resuming ? options.resume->branches_done : 0;

    std::vector<std::string> found;
    if (resuming) found = options.resume->witnesses;
    std::mutex mu;
    std::vector<char> done(roots.size(), 0);
    std::int64_t reported = first;

    auto run_branch = [&](std::int64_t b, SearchCounters& local) {
      Generator gen(prunes, local);
      std::vector<std::string> hits;
      auto leaf = [&](const Node& node) {
        Graph g = to_graph(node);
        if (meets_spec(g, spec, local)) hits.push_back(to_graph6(g));
      };
      gen.descend(roots[b], leaf);
      std::lock_guard lock(mu);
      found.insert(found.end(), hits.begin(), hits.end());
      done[b] = 1;
      while (reported < static_cast<std::int64_t>(roots.size()) && done[reported]) ++reported;
      if (options.on_checkpoint) {
        auto snapshot = found;
        std::sort(snapshot.begin(), snapshot.end());
        options.on_checkpoint(SearchFrontier{n, reported, snapshot});
      }
    };
    for (std::int64_t b = 0; b < first && b < static_cast<std::int64_t>(done.size()); ++b) done[b] = 1;

    const int workers = std::max(1, options.threads);
    if (workers == 1) {
      for (std::int64_t b = first; b < static_cast<std::int64_t>(roots.size()); ++b)
        run_branch(b, result.counters);
    } else {
      std::atomic<std::int64_t> next{first};
      std::vector<SearchCounters> local(workers);
      {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            for (std::int64_t b; (b = next.fetch_add(1)) < static_cast<std::int64_t>(roots.size());)
              run_branch(b, local[w]);
          });
        }
      }
      for (const auto& c : local) {
        result.counters.nodes += c.nodes;
        result.counters.canonical += c.canonical;
        result.counters.candidates += c.candidates;
      }
    }

    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      result.min_order = n;
      for (const auto& s : found) result.witnesses.push_back(parse_graph6(s));
    }
  }
  result.exhausted = !result.min_order;
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace equator
