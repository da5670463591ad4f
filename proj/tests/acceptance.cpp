// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every check is exact; the only tolerances are the wall
// time limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "equator/bounds.hpp"
#include "equator/constructions.hpp"
#include "equator/finite_field.hpp"
#include "equator/isometry.hpp"
#include "equator/isomorphism.hpp"
#include "equator/search.hpp"
#include "equator/structure.hpp"
#include "oracles.hpp"

using namespace equator;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::vector<std::string>()> run;  // returns failures
};

#define EXPECT(cond, what)                    \
  do {                                        \
    if (!(cond)) failures.push_back(what);    \
  } while (0)

std::string str(long long x) { return std::to_string(x); }

bool same_cycle_pattern(std::vector<int> got, const std::vector<int>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t r = 0; r < got.size(); ++r) {
    if (got == want) return true;
    std::rotate(got.begin(), got.begin() + 1, got.end());
  }
  std::reverse(got.begin(), got.end());
  for (std::size_t r = 0; r < got.size(); ++r) {
    if (got == want) return true;
    std::rotate(got.begin(), got.begin() + 1, got.end());
  }
  return false;
}

std::vector<std::string> moore_table() {
  std::vector<std::string> failures;
  const std::int64_t moore[] = {10, 17, 26, 37};
  const int cages[] = {10, 19, 30, 40};
  for (int delta = 3; delta <= 6; ++delta) {
    auto m = moore_bound(delta, 5);
    EXPECT(m == moore[delta - 3], "M(" + str(delta) + ",5) = " + str(m));
    auto c = cage_catalog(delta, 5);
    EXPECT(c.graph.order() == cages[delta - 3], "C(" + str(delta) + ",5) = " + str(c.graph.order()));
    EXPECT(girth(c.graph) == 5 && degree_profile(c.graph).is_regular &&
               degree_profile(c.graph).min_degree == delta,
           "cage " + c.name + " is not a (" + str(delta) + ",5)-graph");
  }
  return failures;
}

std::vector<std::string> splice_tightness() {
  std::vector<std::string> failures;
  for (int j = 3; j <= 5; ++j) {
    auto g = splice_chain(petersen_graph(), j);
    auto d = degree_profile(g);
    auto q = compute_equator(g).q;
    auto b = equatorial_bound_check(g.order(), d.min_degree, girth(g).value_or(0), q);
    EXPECT(g.order() == 10 * j, "j=" + str(j) + ": n = " + str(g.order()));
    EXPECT(d.is_regular && d.min_degree == 3, "j=" + str(j) + ": not 3-regular");
    EXPECT(girth(g) == 5, "j=" + str(j) + ": girth differs from 5");
    EXPECT(q == 5 * j, "j=" + str(j) + ": equator " + str(q));
    EXPECT(b.tight, "j=" + str(j) + ": bound not tight");
  }
  return failures;
}

std::vector<std::string> brown_graphs() {
  std::vector<std::string> failures;
  for (int t = 2; t <= 5; ++t) {
    auto g = brown_graph(t);
    auto r = brown_properties(g);
    const std::string tag = "t=" + str(t) + ": ";
    EXPECT(g.order() == t * t + t + 1, tag + "order " + str(g.order()));
    EXPECT(r.degrees_ok, tag + "degree counts");
    EXPECT(r.c4_free, tag + "has a 4-cycle");
    // Polarity graph convention: absolute points carry a loop, which is
    // the length-two walk for adjacent pairs with an absolute endpoint.
    EXPECT(r.unique_two_paths, tag + "length-two paths not unique");
    EXPECT(r.absolute_triangle_free, tag + "absolute vertex on a triangle");
    auto abs = self_orthogonal_points(t);
    EXPECT(abs == r.absolute, tag + "degree-t vertices differ from the self-orthogonal points");
  }
  return failures;
}

std::vector<std::string> c4free_chain_check() {
  std::vector<std::string> failures;
  auto g = c4free_chain(3, 3);
  auto q = compute_equator(g).q;
  EXPECT(g.order() == 60, "n = " + str(g.order()));
  EXPECT(degree_profile(g).min_degree == 3, "min degree " + str(degree_profile(g).min_degree));
  EXPECT(is_c4_free(g), "has a 4-cycle");
  EXPECT(q == 15, "equator " + str(q));
  EXPECT(5 * g.order() == q * (3 * 3 + 3 * 3 + 2), "order formula");
  return failures;
}

std::vector<std::string> gadget_chain() {
  std::vector<std::string> failures;
  auto g = gadget11_chain(3);
  auto q = compute_equator(g).q;
  EXPECT(g.order() == 33, "n = " + str(g.order()));
  EXPECT(q == 18, "equator " + str(q));
  EXPECT(degree_profile(g).min_degree == 3, "min degree");
  EXPECT(is_c4_free(g), "has a 4-cycle");
  auto b = c4free_bound_check(g.order(), 3, q);
  EXPECT(b.satisfied && !b.tight, "5·33 vs 18·8: satisfied " + str(b.satisfied) + ", tight " + str(b.tight));
  EXPECT(b.n * 5 == 165 && b.lower_bound_numerator == 144, "bound sides");
  return failures;
}

std::vector<std::string> structure_f3520() {
  std::vector<std::string> failures;
  auto g = splice_chain(petersen_graph(), 4);
  DistanceMatrix dm(g);
  auto witness = *compute_equator(g, dm).witness;
  auto p = canonical_partition(induced_partition(g, dm, witness));
  auto sizes = p.sizes();
  std::vector<int> want;
  for (int i = 0; i < 4; ++i) want.insert(want.end(), {1, 2, 4, 2, 1});
  EXPECT(sizes == want, "part sizes");
  for (int j = 0; j < p.q; ++j) {
    std::size_t sum = 0;
    for (int s = 0; s < 5; ++s) sum += p.part(j + s).size();
    EXPECT(sum == 10, "window at " + str(j) + " sums to " + str(static_cast<long long>(sum)));
  }
  auto cycles = enumerate_isometric_cycles(g, dm, 20, {std::nullopt, 12});
  EXPECT(cycles.size() >= 10, "only " + str(static_cast<long long>(cycles.size())) + " isometric 20-cycles");
  EXPECT(partition_uniqueness(g, cycles), "cycles induce different partitions");
  EXPECT(retraction_check(g, p), "retraction");
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = isometric_cycle_through(g, dm, p.base_cycle, v, p);
    EXPECT(c.contains(v) && c.length() == 20 && is_isometric_cycle(g, dm, c.vertices),
           "no isometric 20-cycle through " + str(v));
  }
  return failures;
}

std::vector<std::string> round_trip() {
  std::vector<std::string> failures;
  auto f = splice_chain(petersen_graph(), 4);
  auto back = quotient_to_moore(multiply_equatorial(f, 2));
  EXPECT(are_isomorphic(back, petersen_graph()), "girth 5 trip does not give Petersen");
  EXPECT(oracle::isomorphic(back, petersen_graph()), "permutation oracle disagrees for Petersen");
  auto k = splice_chain(complete_bipartite_graph(3, 3), 3);
  auto back4 = quotient_to_moore(multiply_equatorial(k, 2));
  EXPECT(are_isomorphic(back4, complete_bipartite_graph(3, 3)), "girth 4 trip does not give K_{3,3}");
  EXPECT(oracle::isomorphic(back4, complete_bipartite_graph(3, 3)), "permutation oracle disagrees for K_{3,3}");
  return failures;
}

std::vector<std::string> characterizations() {
  std::vector<std::string> failures;
  struct Case {
    std::string name;
    Graph g;
    std::vector<int> pattern;
  };
  std::vector<int> p222{2, 2, 2}, p2222{2, 2, 2, 2};
  std::vector<Case> accepted{
      {"girth 3 (1,3,1)", splice_chain(complete_graph(5), 4), {1, 3, 1}},
      {"girth 3 (2,2,2)", layered_cycle(3, p222, 12), {2, 2, 2}},
      {"girth 4 (1,2,2,1)", splice_chain(complete_bipartite_graph(3, 3), 3), {1, 2, 2, 1}},
      {"girth 4 (2,2,2,2)", layered_cycle(4, p2222, 12), {2, 2, 2, 2}},
  };
  for (auto& c : accepted) {
    auto v = characterize(c.g);
    EXPECT(v.accepted, c.name + " rejected");
    EXPECT(same_cycle_pattern(v.pattern, c.pattern), c.name + " pattern differs");
  }

  // Every equatorial (3,5,q)-graph we can build, including a splice on a
  // different edge and a multiplied chain.
  std::vector<Graph> cubic{splice_chain(petersen_graph(), 4), splice_chain(petersen_graph(), 5),
                           splice_chain(petersen_graph(), 6), splice_chain(petersen_graph(), 4, Edge{5, 7}),
                           multiply_equatorial(splice_chain(petersen_graph(), 4), 2)};
  for (const auto& g : cubic) {
    auto cert = certify_equatorial(g);
    EXPECT(cert.equatorial, "(3,5) build of order " + str(g.order()) + " not equatorial");
    auto v = characterize(g);
    EXPECT(v.accepted && v.which == CharacterizedCase::Girth5Degree3,
           "(3,5,q) graph of order " + str(g.order()) + " not matched to F(3,5,q)");
  }

  for (auto& c : accepted) cubic.push_back(c.g);
  for (const auto& g : cubic) {
    auto e = g.edges()[g.size() / 2];
    auto cut = without_edges(g, std::span<const Edge>(&e, 1));
    EXPECT(!characterize(cut).accepted, "perturbed graph of order " + str(g.order()) + " accepted");
  }
  return failures;
}

std::vector<std::string> small_q() {
  std::vector<std::string> failures;
  auto r = min_order_search({3, 3, 5, 7, false});
  EXPECT(r.min_order == 6, "min order " + (r.min_order ? str(*r.min_order) : std::string("none")));
  bool wheel = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                           [](const Graph& w) { return are_isomorphic(w, wheel_graph(5)); });
  EXPECT(wheel, "wheel C_5 + K_1 not among the witnesses");
  auto b = equatorial_bound_check(6, 3, 3, 5);
  EXPECT(b.n * b.g < b.lower_bound_numerator, "n·g < q·M does not hold for the wheel");
  EXPECT(!b.regime_ok, "wheel reported inside the regime");
  return failures;
}

std::vector<std::string> oracle_equivalence() {
  std::vector<std::string> failures;
  const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    auto graphs = generate_graphs(n, [](const Graph& g) { return is_connected(g); });
    EXPECT(static_cast<int>(graphs.size()) == connected[n],
           "n=" + str(n) + ": " + str(static_cast<long long>(graphs.size())) + " connected graphs");
    for (const auto& g : graphs) {
      EXPECT(oracle::connected(g), "generator emitted a disconnected graph");
      auto want_g = oracle::girth(g);
      auto want_q = oracle::equator(g);
      if (girth(g) != want_g || compute_equator(g).q != want_q) {
        failures.push_back("n=" + str(n) + ": mismatch on a graph with " + str(g.size()) + " edges");
        if (failures.size() > 5) return failures;
      }
    }
  }
  return failures;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Moore bound and girth-5 cage orders", 1, moore_table},
      {2, "splice chains of Petersen are tight", 60, splice_tightness},
      {3, "Brown graphs B(2..5)", 5, brown_graphs},
      {4, "C4-free chain from B(4), j = 3", 600, c4free_chain_check},
      {5, "gadget chain, j = 3", 60, gadget_chain},
      {6, "structure of F(3,5,20)", 120, structure_f3520},
      {7, "multiply then quotient recovers the seed", 60, round_trip},
      {8, "girth 3, girth 4 and (3,5) characterizations", 120, characterizations},
      {9, "smallest girth-3 graph with equator 5", 300, small_q},
      {10, "equator and girth match oracles on all connected graphs n <= 8", 600, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    try {
      failures = c.run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds)
      failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    const bool pass = failures.empty();
    failed += !pass;
    std::printf("%s criterion %2d: %s (%.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds);
    for (const auto& f : failures) std::printf("       %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
