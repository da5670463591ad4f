#pragma once

#include <cstdint>

#include "equator/graph.hpp"

namespace equator {

/// M(delta, g) by the summation form, valid for delta = 2 as well.
/// Throws InvalidParameters for delta < 2 or g < 3.
std::int64_t moore_bound(int delta, int girth);

/// Outcome of comparing n against (q / g) · M. Every verdict is decided by
/// the cross-multiplied integers, never by division.
struct BoundReport {
  std::int64_t n = 0;
  int delta = 0;
  int g = 0;
  int k = 0;
  int q = 0;
  std::int64_t moore = 0;                  // per-disk lower bound (M, or the C4-free 2-disk bound)
  std::int64_t lower_bound_numerator = 0;  // q · moore
  bool satisfied = false;                  // n · g >= q · moore
  bool tight = false;                      // n · g == q · moore
  bool regime_ok = false;                  // q > 6k + 3 (q > 15 for the C4-free bound)
};

/// Order bound for minimum degree delta, girth g and equator q; applies
/// when q > 6k + 3. The regime is reported, never enforced.
BoundReport equatorial_bound_check(std::int64_t n, int delta, int g, int q);

/// delta^2 - 2·floor(delta/2) + 1, the least 2-disk in a C4-free graph.
std::int64_t c4free_disk_bound(int delta);

/// C4-free order bound 5n >= q·(delta^2 - 2·floor(delta/2) + 1); applies
/// when q > 15. Reported with g = 5 and k = 2.
BoundReport c4free_bound_check(std::int64_t n, int delta, int q);

struct KDegreeReport {
  bool holds = true;
  int delta = 0;
  int g = 0;
  int k = 0;
  std::int64_t moore = 0;  // 0 when delta < 2 (no meaningful bound)
  int min_disk = 0;        // smallest k-disk over vertices (odd g) or edges (even g)
};

/// Every k-disk (around vertices for odd g, around edges for even g) holds
/// at least M(delta, g) vertices. Throws Acyclic for forests.
KDegreeReport k_degree_report(const Graph& g);
bool verify_k_degree(const Graph& g);

}  // namespace equator
