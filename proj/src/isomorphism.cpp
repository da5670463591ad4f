#include "equator/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace equator {

namespace {

using Invariant = std::vector<int>;

// Degree followed by the count of vertices at each distance (unreachable
// vertices counted in the final slot).
std::vector<Invariant> invariants(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  std::vector<Invariant> out(n);
  for (Vertex v = 0; v < n; ++v) {
    Invariant inv(n + 2, 0);
    inv[0] = g.degree(v);
    for (int d : dm.row(v)) ++inv[1 + (d == DistanceMatrix::kUnreachable ? n : d)];
    out[v] = std::move(inv);
  }
  return out;
}

class Matcher {
public:
  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), da_(a), db_(b), map_(a.order(), -1), used_(b.order(), 0) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = a_.order();
    auto ia = invariants(a_, da_);
    auto ib = invariants(b_, db_);
    std::map<Invariant, int> class_of;
    for (const auto& inv : ia) class_of.emplace(inv, static_cast<int>(class_of.size()));
    std::vector<int> count_a(class_of.size(), 0), count_b(class_of.size(), 0);
    class_a_.resize(n);
    class_b_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      class_a_[v] = class_of.at(ia[v]);
      ++count_a[class_a_[v]];
      auto it = class_of.find(ib[v]);
      if (it == class_of.end()) return std::nullopt;
      class_b_[v] = it->second;
      ++count_b[class_b_[v]];
    }
    if (count_a != count_b) return std::nullopt;

    // BFS order over a, each component seeded at its rarest-class vertex, so
    // every later vertex has an already-placed anchor to draw candidates from.
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order_.size()) < n) {
      Vertex seed = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!placed[v] && (seed < 0 || count_a[class_a_[v]] < count_a[class_a_[seed]])) seed = v;
      std::size_t head = order_.size();
      order_.push_back(seed);
      anchor_.push_back(-1);
      placed[seed] = 1;
      for (; head < order_.size(); ++head) {
        Vertex u = order_[head];
        for (Vertex w : a_.neighbors(u)) {
          if (!placed[w]) {
            placed[w] = 1;
            order_.push_back(w);
            anchor_.push_back(u);
          }
        }
      }
    }
    if (!extend(0)) return std::nullopt;
    return map_;
  }

private:
  bool consistent(std::size_t pos, Vertex cand) const {
    Vertex v = order_[pos];
    if (used_[cand] || class_b_[cand] != class_a_[v]) return false;
    for (std::size_t i = 0; i < pos; ++i)
      if (db_(cand, map_[order_[i]]) != da_(v, order_[i])) return false;
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    Vertex v = order_[pos];
    auto try_candidate = [&](Vertex cand) {
      if (!consistent(pos, cand)) return false;
      map_[v] = cand;
      used_[cand] = 1;
      if (extend(pos + 1)) return true;
      used_[cand] = 0;
      map_[v] = -1;
      return false;
    };
    if (anchor_[pos] >= 0) {
      for (Vertex cand : b_.neighbors(map_[anchor_[pos]]))
        if (try_candidate(cand)) return true;
    } else {
      for (Vertex cand = 0; cand < b_.order(); ++cand)
        if (try_candidate(cand)) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  DistanceMatrix da_, db_;
  std::vector<int> class_a_, class_b_;
  std::vector<Vertex> order_, anchor_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (degree_profile(a).histogram != degree_profile(b).histogram) return std::nullopt;
  if (a.order() == 0) return std::vector<Vertex>{};
  return Matcher(a, b).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
  if (a.order() != b.order() || a.size() != b.size() || static_cast<int>(map.size()) != a.order()) return false;
  std::vector<char> hit(b.order(), 0);
  for (Vertex v : map) {
    if (v < 0 || v >= b.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (auto [u, v] : a.edges())
    if (!b.has_edge(map[u], map[v])) return false;
  return true;
}

}  // namespace equator
