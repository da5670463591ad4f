#include "equator/structure.hpp"

#include <algorithm>
#include <string>

#include "equator/constructions.hpp"
#include "equator/error.hpp"
#include "equator/isomorphism.hpp"

namespace equator {

EquatorialCertificate certify_equatorial(const Graph& g, const DistanceMatrix& dm, const EquatorOptions& options) {
  EquatorialCertificate cert;
  if (g.order() == 0 || !dm.connected()) {
    cert.reason = "graph is not connected";
    return cert;
  }
  cert.delta = degree_profile(g).min_degree;
  cert.girth = girth(g);
  if (!cert.girth) {
    cert.reason = "graph is acyclic";
    return cert;
  }
  cert.equator = compute_equator(g, dm, options);
  if (cert.delta < 2) {
    cert.reason = "minimum degree below 2";
    return cert;
  }
  cert.bound = equatorial_bound_check(g.order(), cert.delta, *cert.girth, cert.equator.q);
  if (cert.equator.search_capped) {
    cert.reason = "equator search was capped";
    return cert;
  }
  if (!cert.bound->regime_ok) {
    cert.reason = "q = " + std::to_string(cert.equator.q) + " is not above 6k + 3 = " +
                  std::to_string(6 * cert.bound->k + 3);
    return cert;
  }
  if (!cert.bound->tight) {
    cert.reason = "n·g = " + std::to_string(cert.bound->n * cert.bound->g) + " differs from q·M = " +
                  std::to_string(cert.bound->lower_bound_numerator);
    return cert;
  }
  try {
    cert.partition = canonical_partition(induced_partition(g, dm, *cert.equator.witness));
  } catch (const Error& e) {
    cert.reason = e.what();
    return cert;
  }
  cert.equatorial = true;
  return cert;
}

EquatorialCertificate certify_equatorial(const Graph& g, const EquatorOptions& options) {
  return certify_equatorial(g, DistanceMatrix(g), options);
}

EquatorialCertificate require_equatorial(const Graph& g, const DistanceMatrix& dm, const EquatorOptions& options) {
  auto cert = certify_equatorial(g, dm, options);
  if (!cert.equatorial) throw Error(Errc::NotEquatorial, cert.reason);
  return cert;
}

namespace {

// Disk intersections for every index, with no validation: parts may
// overlap or miss vertices. part_of keeps the first part found, -1 if none.
EquatorPartition raw_partition(const Graph& g, const DistanceMatrix& dm, const IsometricCycle& c, int gth) {
  EquatorPartition p;
  p.q = c.length();
  p.girth = gth;
  p.base_cycle = c;
  p.parts.resize(p.q);
  p.part_of.assign(g.order(), -1);
  const int k = p.k();
  for (int i = 0; i < p.q; ++i) {
    auto left = dm.row(c.at(i - k));
    auto right = dm.row(c.at(i + k));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (left[v] <= k && right[v] <= k) {
        p.parts[i].push_back(v);
        if (p.part_of[v] < 0) p.part_of[v] = i;
      }
    }
  }
  return p;
}

// Empty when p is a partition of V with u_i in L_i; otherwise the first
// offending vertex.
std::optional<Vertex> partition_defect(const EquatorPartition& p, int n) {
  std::vector<int> hits(n, 0);
  for (const auto& part : p.parts)
    for (Vertex v : part) ++hits[v];
  for (Vertex v = 0; v < n; ++v)
    if (hits[v] != 1) return v;
  for (int i = 0; i < p.q; ++i)
    if (p.part_of[p.base_cycle.at(i)] != i) return p.base_cycle.at(i);
  return std::nullopt;
}

bool meets_each_part_once(const EquatorPartition& p, const IsometricCycle& c) {
  if (c.length() != p.q) return false;
  std::vector<int> hits(p.q, 0);
  for (Vertex v : c.vertices) {
    int i = p.part_of[v];
    if (i < 0 || ++hits[i] > 1) return false;
  }
  return true;
}

using PartFamily = std::vector<std::vector<Vertex>>;

PartFamily as_family(const EquatorPartition& p) {
  PartFamily f = p.parts;
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

EquatorPartition induced_partition(const Graph& g, const DistanceMatrix& dm, const IsometricCycle& c) {
  auto gth = girth(g);
  if (!gth) throw Error(Errc::Acyclic, "graph is acyclic");
  const int k = disk_radius(*gth);
  if (c.length() <= 6 * k + 3)
    throw Error(Errc::NotAPartition, "q = " + std::to_string(c.length()) + " is not above 6k + 3 = " +
                                         std::to_string(6 * k + 3));
  auto p = raw_partition(g, dm, c, *gth);
  if (auto bad = partition_defect(p, g.order()))
    throw Error(Errc::NotAPartition, "vertex " + std::to_string(*bad) + " is not in exactly one part");
  return p;
}

EquatorPartition induced_partition(const Graph& g, const IsometricCycle& c) {
  return induced_partition(g, DistanceMatrix(g), c);
}

EquatorPartition canonical_partition(const EquatorPartition& p) {
  EquatorPartition best;
  bool have = false;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int r = 0; r < p.q; ++r) {
      EquatorPartition cand = p;
      for (int i = 0; i < p.q; ++i) {
        long long src = reflect ? r - i : r + i;
        cand.parts[i] = p.part(src);
        cand.base_cycle.vertices[i] = p.base_cycle.at(src);
      }
      if (!have || cand.parts < best.parts) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  for (int i = 0; i < best.q; ++i)
    for (Vertex v : best.parts[i]) best.part_of[v] = i;
  return best;
}

bool StructureReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const StructureClause& c) { return c.passed; });
}

const StructureClause* StructureReport::find(std::string_view id) const {
  for (const auto& c : clauses)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

class ClauseRunner {
public:
  ClauseRunner(const Graph& g, const DistanceMatrix& dm, const EquatorPartition& p, const StructureOptions& options,
               StructureReport& report)
      : g_(g), dm_(dm), p_(p), options_(options), report_(report), delta_(degree_profile(g).min_degree) {}

  void run_all(bool partition_ok, std::optional<Vertex> defect) {
    auto& part = add("partition", "the parts are disjoint, cover V and contain u_i in L_i");
    if (!partition_ok) fail(part, defect ? std::vector<Vertex>{*defect} : std::vector<Vertex>{});
    regular();
    neighbors_adjacent_parts();
    closed_neighborhood();
    one_vertex_per_part();
    disk_intersection();
    periodic();
    window_sums();
    all_on_isometric_cycles();
    tight_bound();
  }

private:
  StructureClause& add(std::string id, std::string statement) {
    report_.clauses.push_back(StructureClause{std::move(id), std::move(statement), true, {}});
    return report_.clauses.back();
  }

  static void fail(StructureClause& c, std::vector<Vertex> witness) {
    if (!c.passed) return;
    c.passed = false;
    c.counterexample = std::move(witness);
  }

  void regular() {
    auto& c = add("regular", "every vertex has degree delta");
    for (Vertex v = 0; v < g_.order(); ++v)
      if (g_.degree(v) != delta_) return fail(c, {v});
  }

  void neighbors_adjacent_parts() {
    auto& c = add("neighbors_adjacent_parts", "each u in L_i has neighbors in L_{i-1} and L_{i+1}");
    for (Vertex u = 0; u < g_.order(); ++u) {
      int i = p_.part_of[u];
      if (i < 0) return fail(c, {u});
      bool before = false, after = false;
      for (Vertex w : g_.neighbors(u)) {
        before = before || p_.part_of[w] == p_.index(i - 1);
        after = after || p_.part_of[w] == p_.index(i + 1);
      }
      if (!before || !after) return fail(c, {u});
    }
  }

  void closed_neighborhood() {
    auto& c = add("closed_neighborhood", "N[u] lies in L_{i-1} ∪ L_i ∪ L_{i+1}");
    for (Vertex u = 0; u < g_.order(); ++u) {
      int i = p_.part_of[u];
      if (i < 0) return fail(c, {u});
      for (Vertex w : g_.neighbors(u)) {
        int j = p_.part_of[w];
        if (j != i && j != p_.index(i - 1) && j != p_.index(i + 1)) return fail(c, {u, w});
      }
    }
  }

  void one_vertex_per_part() {
    auto& c = add("one_vertex_per_part", "every isometric q-cycle meets each part exactly once");
    report_.cycle_budget = options_.cycles_per_vertex;
    for (Vertex v : p_.parts[0]) {
      auto cycles = enumerate_isometric_cycles(g_, dm_, p_.q, {v, options_.cycles_per_vertex});
      report_.cycles_checked += cycles.size();
      for (const auto& cyc : cycles)
        if (!meets_each_part_once(p_, cyc)) return fail(c, cyc.vertices);
    }
  }

  void disk_intersection() {
    auto& c = add("disk_intersection", "L_i = D_k(v) ∩ D_k(w) for all v in L_{i-k}, w in L_{i+k}");
    const int k = p_.k();
    for (int i = 0; i < p_.q; ++i) {
      for (Vertex v : p_.part(i - k)) {
        for (Vertex w : p_.part(i + k)) {
          std::vector<Vertex> both;
          for (Vertex x = 0; x < g_.order(); ++x)
            if (dm_(v, x) <= k && dm_(w, x) <= k) both.push_back(x);
          if (both != p_.parts[i]) return fail(c, {v, w});
        }
      }
    }
  }

  void periodic() {
    auto& c = add("periodic", "|L_j| = |L_{j+g}|");
    for (int j = 0; j < p_.q; ++j)
      if (p_.part(j).size() != p_.part(j + p_.girth).size()) return fail(c, {j, p_.index(j + p_.girth)});
  }

  void window_sums() {
    auto& c = add("window_sums", "any g consecutive parts hold M(delta, g) vertices");
    const std::int64_t m = delta_ >= 2 ? moore_bound(delta_, p_.girth) : -1;
    for (int j = 0; j < p_.q; ++j) {
      std::int64_t sum = 0;
      for (int s = 0; s < p_.girth; ++s) sum += static_cast<std::int64_t>(p_.part(j + s).size());
      if (sum != m) return fail(c, {j});
    }
  }

  void all_on_isometric_cycles() {
    auto& c = add("all_on_isometric_cycles", "every vertex lies on an isometric q-cycle");
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (p_.part_of[v] < 0) return fail(c, {v});
      try {
        auto cyc = isometric_cycle_through(g_, dm_, p_.base_cycle, v, p_);
        if (!cyc.contains(v) || !meets_each_part_once(p_, cyc)) return fail(c, {v});
      } catch (const Error&) {
        return fail(c, {v});
      }
    }
  }

  void tight_bound() {
    auto& c = add("tight_bound", "q > 6k + 3 and n·g = q·M(delta, g)");
    if (delta_ < 2) return fail(c, {});
    auto b = equatorial_bound_check(g_.order(), delta_, p_.girth, p_.q);
    if (!b.regime_ok || !b.tight) fail(c, {});
  }

  const Graph& g_;
  const DistanceMatrix& dm_;
  const EquatorPartition& p_;
  const StructureOptions& options_;
  StructureReport& report_;
  int delta_;
};

}  // namespace

StructureReport verify_structure(const Graph& g, const EquatorPartition& p, const StructureOptions& options) {
  DistanceMatrix dm(g);
  StructureReport report;
  auto defect = partition_defect(p, g.order());
  ClauseRunner(g, dm, p, options, report).run_all(!defect, defect);
  return report;
}

StructureReport verify_structure(const Graph& g, const StructureOptions& options) {
  DistanceMatrix dm(g);
  StructureReport report;
  auto gth = girth(g);
  auto eq = compute_equator(g, dm);
  if (!gth || !eq.witness) {
    report.clauses.push_back({"partition", "the graph has an isometric cycle to induce parts", false, {}});
    return report;
  }
  auto p = raw_partition(g, dm, *eq.witness, *gth);
  auto defect = partition_defect(p, g.order());
  bool ok = !defect && p.q > 6 * p.k() + 3;
  if (ok) p = canonical_partition(p);
  ClauseRunner(g, dm, p, options, report).run_all(ok, defect);
  return report;
}

bool partition_uniqueness(const Graph& g, std::span<const IsometricCycle> cycles) {
  if (cycles.empty()) return true;
  DistanceMatrix dm(g);
  std::optional<PartFamily> first;
  for (const auto& c : cycles) {
    PartFamily f;
    try {
      f = as_family(induced_partition(g, dm, c));
    } catch (const Error&) {
      return false;
    }
    if (!first) first = std::move(f);
    else if (f != *first) return false;
  }
  return true;
}

bool retraction_check(const Graph& g, const EquatorPartition& p) {
  if (static_cast<int>(p.part_of.size()) != g.order() || p.base_cycle.length() != p.q) return false;
  for (int i = 0; i < p.q; ++i)
    if (p.part_of[p.base_cycle.at(i)] != i) return false;
  std::vector<char> covered(p.q, 0);  // covered[i]: some edge maps onto i -> i+1
  for (auto [a, b] : g.edges()) {
    int i = p.part_of[a], j = p.part_of[b];
    if (i < 0 || j < 0) return false;
    if (i == j) continue;
    if (j == p.index(i + 1)) covered[i] = 1;
    else if (i == p.index(j + 1)) covered[j] = 1;
    else return false;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::string_view case_name(CharacterizedCase c) {
  switch (c) {
    case CharacterizedCase::Girth3: return "girth-3";
    case CharacterizedCase::Girth4: return "girth-4";
    case CharacterizedCase::Girth5Degree3: return "girth-5-degree-3";
  }
  return "unknown";
}

namespace {

// Parts of size pattern[i mod period], consecutive parts fully joined and
// (for girth 3) each part a clique, nothing else.
void check_layered(const Graph& g, const EquatorPartition& p, bool cliques, CharacterizationVerdict& out) {
  std::int64_t expected = 0;
  for (int i = 0; i < p.q; ++i) {
    const auto& a = p.parts[i];
    const auto& b = p.part(i + 1);
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = x + 1; y < a.size(); ++y) {
        if (g.has_edge(a[x], a[y]) != cliques) {
          out.failures.push_back(std::string("part ") + std::to_string(i) +
                                 (cliques ? " is not a clique" : " is not independent"));
          return;
        }
      }
      for (Vertex w : b) {
        if (!g.has_edge(a[x], w)) {
          out.failures.push_back("parts " + std::to_string(i) + " and " + std::to_string(p.index(i + 1)) +
                                 " are not completely joined");
          return;
        }
      }
    }
    expected += static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
    if (cliques) expected += static_cast<std::int64_t>(a.size()) * (a.size() - 1) / 2;
  }
  if (expected != g.size()) out.failures.push_back("edges outside the layered pattern");
}

// Sizes repeat with `period` when period divides q; otherwise every part
// has `uniform` vertices. `sum_ok` checks the per-period pattern.
template <typename SumOk>
void check_sizes(const EquatorPartition& p, int period, int delta, SumOk sum_ok, int uniform_num, int uniform_den,
                 CharacterizationVerdict& out) {
  auto sizes = p.sizes();
  if (p.q % period == 0) {
    out.pattern.assign(sizes.begin(), sizes.begin() + period);
    for (int i = 0; i < p.q; ++i)
      if (sizes[i] != out.pattern[i % period]) out.failures.push_back("part sizes are not " + std::to_string(period) + "-periodic");
    if (!sum_ok(out.pattern)) out.failures.push_back("period sizes do not match delta = " + std::to_string(delta));
  } else {
    out.pattern.assign(1, sizes[0]);
    if (uniform_num % uniform_den != 0) {
      out.failures.push_back("q is not divisible by " + std::to_string(period) + " and delta does not allow uniform parts");
      return;
    }
    for (int s : sizes)
      if (s != uniform_num / uniform_den) {
        out.failures.push_back("parts are not all of size " + std::to_string(uniform_num / uniform_den));
        return;
      }
  }
}

// F(3, 5, q) for any q = 5j with j >= 2.
Graph petersen_chain(int j) {
  Graph seed = petersen_graph();
  Edge uv = default_splice_edge(seed);
  Graph cut = without_edges(seed, std::span<const Edge>(&uv, 1));
  std::vector<Edge> links;
  for (int i = 0; i < j; ++i) links.emplace_back(uv.second + i * 10, uv.first + ((i + 1) % j) * 10);
  return with_edges(disjoint_copies(cut, j), links);
}

}  // namespace

CharacterizationVerdict characterize(const Graph& g) {
  auto gth = girth(g);
  auto profile = degree_profile(g);
  CharacterizationVerdict out;
  out.delta = profile.min_degree;
  if (gth == 3) out.which = CharacterizedCase::Girth3;
  else if (gth == 4) out.which = CharacterizedCase::Girth4;
  else if (gth == 5 && (profile.min_degree == 3 || profile.max_degree == 3)) out.which = CharacterizedCase::Girth5Degree3;
  else
    throw Error(Errc::OutOfCharacterizedRange,
                "only girth 3, girth 4, and girth 5 with degree 3 are characterized (girth " +
                    (gth ? std::to_string(*gth) : std::string("infinite")) + ", delta " +
                    std::to_string(profile.min_degree) + ")");

  DistanceMatrix dm(g);
  auto cert = certify_equatorial(g, dm);
  out.q = cert.equator.q;
  if (!cert.equatorial) {
    out.failures.push_back("not equatorial: " + cert.reason);
    return out;
  }
  const auto& p = *cert.partition;
  const int delta = cert.delta;
  switch (out.which) {
    case CharacterizedCase::Girth3:
      check_layered(g, p, true, out);
      check_sizes(
          p, 3, delta, [&](const std::vector<int>& n) { return n[0] + n[1] + n[2] == delta + 1; }, delta + 1, 3, out);
      break;
    case CharacterizedCase::Girth4:
      check_layered(g, p, false, out);
      check_sizes(
          p, 4, delta, [&](const std::vector<int>& n) { return n[0] + n[2] == delta && n[1] + n[3] == delta; },
          delta, 2, out);
      break;
    case CharacterizedCase::Girth5Degree3:
      out.pattern = p.sizes();
      out.pattern.resize(std::min(p.q, 5));
      if (delta != 3 || !profile.is_regular) out.failures.push_back("not 3-regular");
      else if (p.q % 5 != 0) out.failures.push_back("q is not a multiple of 5");
      else if (!are_isomorphic(g, petersen_chain(p.q / 5)))
        out.failures.push_back("not isomorphic to F(3, 5, " + std::to_string(p.q) + ")");
      break;
  }
  out.accepted = out.failures.empty();
  return out;
}

}  // namespace equator
