#pragma once

#include <array>
#include <compare>
#include <vector>

#include "equator/graph.hpp"

namespace equator {

/// Element of GF(t), encoded as an integer in [0, t). For t = p^e the
/// base-p digits are the polynomial coefficients, lowest degree first.
using FieldElement = int;

/// GF(t) for prime powers t <= 64, backed by full addition and
/// multiplication tables. Extension fields use a fixed irreducible
/// polynomial per order.
class GaloisField {
public:
  /// Throws NotPrimePower, or Unsupported for t > 64.
  explicit GaloisField(int order);

  int order() const { return order_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * order_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * order_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Multiplicative inverse of a nonzero element.
  FieldElement inv(FieldElement a) const { return inv_[a]; }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Coefficients (lowest degree first, leading 1 included) of the modulus;
  /// {0, 1} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

private:
  int order_, p_, e_;
  std::vector<int> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_;
};

/// Prime power test; writes p and e on success.
bool is_prime_power(int t, int* p = nullptr, int* e = nullptr);

/// Homogeneous coordinates normalized so the first nonzero entry is 1.
struct ProjectivePoint {
  std::array<FieldElement, 3> coords{};
  auto operator<=>(const ProjectivePoint&) const = default;
};

/// All t^2 + t + 1 normalized points, lexicographic by coordinates.
std::vector<ProjectivePoint> projective_points(const GaloisField& f);
std::vector<ProjectivePoint> projective_points(int t);

FieldElement dot(const GaloisField& f, const ProjectivePoint& x, const ProjectivePoint& y);

/// Polarity graph of PG(2, t): points adjacent when orthogonal. Vertex i is
/// projective_points(t)[i]. Self-orthogonal points carry no loop.
Graph brown_graph(int t);

/// Vertices of brown_graph(t) with x · x = 0.
std::vector<Vertex> self_orthogonal_points(int t);

/// Point-line incidence graph of PG(2, t): vertex i < N is point i, vertex
/// N + i is the line with dual coordinates projective_points(t)[i].
Graph pg2_incidence_graph(int t);

/// The defining properties of B(t), checked on an arbitrary graph. t is
/// read off the order; the absolute (self-orthogonal) vertices are taken
/// to be the vertices of degree t.
struct BrownPropertiesReport {
  int t = 0;                            // 0 when n is not t^2 + t + 1
  std::vector<Vertex> absolute;         // degree-t vertices
  bool order_ok = false;                // n = t^2 + t + 1, t a prime power
  bool degrees_ok = false;              // t + 1 of degree t, t^2 of degree t + 1
  bool c4_free = false;
  bool absolute_triangle_free = false;  // no absolute vertex on a triangle
  /// Every pair is joined by exactly one walk of length two once each
  /// absolute vertex carries its loop. Without loops an adjacent pair with
  /// an absolute endpoint has no common neighbor at all.
  bool unique_two_paths = false;

  bool passed() const { return order_ok && degrees_ok && c4_free && absolute_triangle_free && unique_two_paths; }
};

BrownPropertiesReport brown_properties(const Graph& g);

}  // namespace equator
