#pragma once

#include <vector>

#include "equator/graph.hpp"

namespace equator {

/// Cyclic vertex sequence u_0..u_{q-1}; the isometric ones are produced by
/// the isometry module and always carry a passed certificate.
struct IsometricCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex at(long long i) const {
    const long long q = length();
    return vertices[static_cast<std::size_t>(((i % q) + q) % q)];
  }
  bool contains(Vertex v) const;

  bool operator==(const IsometricCycle&) const = default;
};

/// ceil(g/2) - 1, the disk radius attached to girth g.
constexpr int disk_radius(int girth) { return (girth + 1) / 2 - 1; }

/// Parts L_0..L_{q-1} induced by an isometric q-cycle:
/// L_i = D_k(u_{i-k}) ∩ D_k(u_{i+k}), subscripts mod q.
struct EquatorPartition {
  int q = 0;
  int girth = 0;
  std::vector<std::vector<Vertex>> parts;  // each sorted
  std::vector<int> part_of;                // vertex -> part index
  IsometricCycle base_cycle;

  int k() const { return disk_radius(girth); }
  int index(long long i) const { return static_cast<int>(((i % q) + q) % q); }
  const std::vector<Vertex>& part(long long i) const { return parts[index(i)]; }
  std::vector<int> sizes() const;
};

inline bool IsometricCycle::contains(Vertex v) const {
  for (Vertex u : vertices)
    if (u == v) return true;
  return false;
}

inline std::vector<int> EquatorPartition::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
  return out;
}

}  // namespace equator
