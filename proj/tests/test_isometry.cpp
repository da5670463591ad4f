#include <doctest.h>

#include <random>

#include "equator/constructions.hpp"
#include "equator/error.hpp"
#include "equator/isometry.hpp"
#include "equator/structure.hpp"
#include "oracles.hpp"

using namespace equator;

TEST_CASE("isometric cycle certificate") {
  auto p = petersen_graph();
  DistanceMatrix dm(p);
  std::vector<Vertex> outer{0, 1, 2, 3, 4};
  CHECK(is_isometric_cycle(p, dm, outer));
  // 0-1-6-9-4 is a 5-cycle (spokes 1-6, 4-9, inner 6-9).
  std::vector<Vertex> mixed{0, 1, 6, 9, 4};
  CHECK(is_isometric_cycle(p, dm, mixed));
  auto h = hypercube_graph(3);
  DistanceMatrix dh(h);
  std::vector<Vertex> six{0, 1, 3, 7, 6, 4};
  CHECK(is_isometric_cycle(h, dh, six));
  auto c8 = cycle_graph(8);
  auto chord = with_edges(c8, std::vector<Edge>{{0, 4}});
  DistanceMatrix dc(chord);
  std::vector<Vertex> whole{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK_FALSE(is_isometric_cycle(chord, dc, whole));
}

TEST_CASE("non-cycles are rejected") {
  auto p = petersen_graph();
  DistanceMatrix dm(p);
  std::vector<Vertex> two{0, 1};
  std::vector<Vertex> repeat{0, 1, 0, 1};
  std::vector<Vertex> gap{0, 1, 2, 3, 5};
  CHECK_THROWS_AS(is_isometric_cycle(p, dm, two), Error);
  CHECK_THROWS_AS(is_isometric_cycle(p, dm, repeat), Error);
  CHECK_THROWS_AS(is_isometric_cycle(p, dm, gap), Error);
}

TEST_CASE("equator of small named graphs") {
  CHECK(compute_equator(petersen_graph()).q == 5);
  CHECK(compute_equator(heawood_graph()).q == 6);
  CHECK(compute_equator(hypercube_graph(3)).q == 6);
  CHECK(compute_equator(complete_graph(5)).q == 3);
  CHECK(compute_equator(complete_bipartite_graph(3, 3)).q == 4);
  CHECK(compute_equator(wheel_graph(5)).q == 5);
  CHECK(compute_equator(cycle_graph(11)).q == 11);
  CHECK(compute_equator(build_graph({{0, 1}, {1, 2}}, 3)).q == 0);
}

TEST_CASE("equator witness is an isometric cycle of that length") {
  for (const auto& g : {petersen_graph(), robertson_graph(), hypercube_graph(4), wheel_graph(6)}) {
    DistanceMatrix dm(g);
    auto r = compute_equator(g, dm);
    REQUIRE(r.witness);
    CHECK(r.witness->length() == r.q);
    CHECK(is_isometric_cycle(g, dm, r.witness->vertices));
    CHECK(r.q == oracle::equator(g));
  }
}

TEST_CASE("cap and threads") {
  auto g = splice_chain(petersen_graph(), 4);
  DistanceMatrix dm(g);
  auto capped = compute_equator(g, dm, {12, 1});
  CHECK(capped.search_capped);
  CHECK(capped.q <= 12);
  auto serial = compute_equator(g, dm, {std::nullopt, 1});
  auto parallel = compute_equator(g, dm, {std::nullopt, 3});
  CHECK(serial.q == 20);
  CHECK(parallel.q == 20);
  CHECK(serial.witness == parallel.witness);
}

TEST_CASE("equator of a disconnected graph is the best component") {
  std::vector<Edge> both;
  for (auto e : cycle_graph(7).edges()) both.push_back(e);
  for (auto [u, v] : petersen_graph().edges()) both.emplace_back(u + 7, v + 7);
  auto mixed = build_graph(both, 17);
  CHECK(compute_equator(mixed).q == 7);
  CHECK(compute_equator(mixed).q == oracle::equator(mixed));
}

TEST_CASE("cycle enumeration counts match the oracle") {
  auto p = petersen_graph();
  DistanceMatrix dm(p);
  CHECK(enumerate_isometric_cycles(p, dm, 5).size() == 12);
  auto q3 = hypercube_graph(3);
  DistanceMatrix dq(q3);
  CHECK(static_cast<int>(enumerate_isometric_cycles(q3, dq, 6).size()) == oracle::count_isometric(q3, 6));
  CHECK(static_cast<int>(enumerate_isometric_cycles(q3, dq, 4).size()) == oracle::count_isometric(q3, 4));
  auto through = enumerate_isometric_cycles(p, dm, 5, {3, 0});
  CHECK(through.size() == 6);
  for (const auto& c : through) CHECK(c.vertices[0] == 3);
  CHECK(enumerate_isometric_cycles(p, dm, 5, {std::nullopt, 4}).size() == 4);
}

TEST_CASE("geodesic takes the smallest progressing neighbor") {
  auto c = cycle_graph(6);
  DistanceMatrix dm(c);
  CHECK(geodesic(c, dm, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(geodesic(c, dm, 2, 2) == std::vector<Vertex>{2});
}

TEST_CASE("every vertex of F(3,5,20) lies on an isometric 20-cycle") {
  auto g = splice_chain(petersen_graph(), 4);
  DistanceMatrix dm(g);
  auto p = *certify_equatorial(g, dm).partition;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = isometric_cycle_through(g, dm, p.base_cycle, v, p);
    CHECK(c.contains(v));
    CHECK(c.length() == 20);
    CHECK(is_isometric_cycle(g, dm, c.vertices));
    for (int i = 0; i < 20; ++i) CHECK(p.part_of[c.at(i)] == i);
  }
}

TEST_CASE("random sparse graphs agree with the oracles") {
  std::mt19937 rng(20240607);
  for (int round = 0; round < 300; ++round) {
    const int n = 9 + round % 6;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    const int extra = 1 + round % 5;
    for (int x = 0; x < extra; ++x) {
      int u = pick(rng), v = pick(rng);
      if (u != v) e.emplace_back(u, v);
    }
    auto g = build_graph(e, n);
    CAPTURE(round);
    CHECK(girth(g) == oracle::girth(g));
    CHECK(compute_equator(g).q == oracle::equator(g));
    CHECK(compute_equator(g, DistanceMatrix(g), {std::nullopt, 2}).q == oracle::equator(g));
  }
}
