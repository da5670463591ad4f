#include "equator/finite_field.hpp"

#include <string>

#include "equator/error.hpp"

namespace equator {

namespace {

// Monic irreducible moduli, coefficients lowest degree first.
std::vector<int> builtin_modulus(int t) {
  switch (t) {
    case 4: return {1, 1, 1};              // x^2 + x + 1
    case 8: return {1, 1, 0, 1};           // x^3 + x + 1
    case 9: return {1, 0, 1};              // x^2 + 1
    case 16: return {1, 1, 0, 0, 1};       // x^4 + x + 1
    case 25: return {2, 0, 1};             // x^2 + 2
    case 27: return {1, 2, 0, 1};          // x^3 + 2x + 1
    case 32: return {1, 0, 1, 0, 0, 1};    // x^5 + x^2 + 1
    case 49: return {1, 0, 1};             // x^2 + 1
    case 64: return {1, 1, 0, 0, 0, 0, 1}; // x^6 + x + 1
    default: return {};
  }
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> out(e);
  for (int i = 0; i < e; ++i, a /= p) out[i] = a % p;
  return out;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

bool is_prime_power(int t, int* p_out, int* e_out) {
  if (t < 2) return false;
  int p = 2;
  while (p * p <= t && t % p != 0) ++p;
  if (t % p != 0) p = t;
  int e = 0, rest = t;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

GaloisField::GaloisField(int order) : order_(order), p_(0), e_(0) {
  if (!is_prime_power(order, &p_, &e_))
    throw Error(Errc::NotPrimePower, std::to_string(order) + " is not a prime power");
  if (order > 64) throw Error(Errc::Unsupported, "fields of order " + std::to_string(order) + " exceed 64");
  modulus_ = e_ == 1 ? std::vector<int>{0, 1} : builtin_modulus(order);

  const int t = order_;
  add_.resize(t * t);
  mul_.resize(t * t);
  neg_.resize(t);
  inv_.assign(t, 0);
  for (int a = 0; a < t; ++a) {
    auto da = digits(a, p_, e_);
    for (int b = 0; b < t; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<int> sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * t + b] = undigits(sum, p_);

      // Schoolbook product, then reduce by the monic modulus.
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= e_; ++i) prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(e_);
      mul_[a * t + b] = undigits(prod, p_);
    }
  }
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) {
      if (add_[a * t + b] == 0) neg_[a] = b;
      if (mul_[a * t + b] == 1) inv_[a] = b;
    }
  }
}

std::vector<ProjectivePoint> projective_points(const GaloisField& f) {
  const int t = f.order();
  std::vector<ProjectivePoint> pts;
  pts.reserve(t * t + t + 1);
  pts.push_back({{0, 0, 1}});
  for (int c = 0; c < t; ++c) pts.push_back({{0, 1, c}});
  for (int b = 0; b < t; ++b)
    for (int c = 0; c < t; ++c) pts.push_back({{1, b, c}});
  return pts;
}

std::vector<ProjectivePoint> projective_points(int t) { return projective_points(GaloisField(t)); }

FieldElement dot(const GaloisField& f, const ProjectivePoint& x, const ProjectivePoint& y) {
  FieldElement s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x.coords[i], y.coords[i]));
  return s;
}

Graph brown_graph(int t) {
  GaloisField f(t);
  auto pts = projective_points(f);
  const int n = static_cast<int>(pts.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dot(f, pts[i], pts[j]) == 0) edges.emplace_back(i, j);
  return build_graph(edges, n);
}

std::vector<Vertex> self_orthogonal_points(int t) {
  GaloisField f(t);
  auto pts = projective_points(f);
  std::vector<Vertex> out;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (dot(f, pts[i], pts[i]) == 0) out.push_back(i);
  return out;
}

Graph pg2_incidence_graph(int t) {
  GaloisField f(t);
  auto pts = projective_points(f);
  const int n = static_cast<int>(pts.size());
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l)
      if (dot(f, pts[p], pts[l]) == 0) edges.emplace_back(p, n + l);
  return build_graph(edges, 2 * n);
}

BrownPropertiesReport brown_properties(const Graph& g) {
  BrownPropertiesReport r;
  const int n = g.order();
  for (int t = 1; t * t + t + 1 <= n; ++t)
    if (t * t + t + 1 == n) r.t = t;
  r.order_ok = r.t >= 2 && is_prime_power(r.t);
  const int t = r.t;
  int high = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == t) r.absolute.push_back(v);
    else if (g.degree(v) == t + 1) ++high;
  }
  r.degrees_ok = r.order_ok && static_cast<int>(r.absolute.size()) == t + 1 && high == t * t;
  r.c4_free = is_c4_free(g);

  std::vector<char> is_abs(n, 0);
  for (Vertex v : r.absolute) is_abs[v] = 1;
  r.absolute_triangle_free = true;
  for (Vertex x : r.absolute)
    for (Vertex a : g.neighbors(x))
      for (Vertex b : g.neighbors(x))
        if (a < b && g.has_edge(a, b)) r.absolute_triangle_free = false;

  r.unique_two_paths = true;
  std::vector<int> mark(n, -1);
  for (Vertex u = 0; u < n && r.unique_two_paths; ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = u;
    for (Vertex v = u + 1; v < n; ++v) {
      int walks = 0;
      for (Vertex w : g.neighbors(v))
        if (mark[w] == u) ++walks;
      if (g.has_edge(u, v)) walks += is_abs[u] + is_abs[v];
      if (walks != 1) {
        r.unique_two_paths = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace equator
