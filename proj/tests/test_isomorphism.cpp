#include <doctest.h>

#include "equator/constructions.hpp"
#include "equator/isomorphism.hpp"
#include "equator/search.hpp"
#include "oracles.hpp"

using namespace equator;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
  return build_graph(e, g.order());
}

}  // namespace

TEST_CASE("relabeled graphs are isomorphic and the map is checked") {
  auto p = petersen_graph();
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 2, 8, 4, 6, 5};
  auto q = relabel(p, perm);
  auto map = find_isomorphism(p, q);
  REQUIRE(map);
  CHECK(is_isomorphism(p, q, *map));
  CHECK(are_isomorphic(splice_chain(petersen_graph(), 3), splice_chain(petersen_graph(), 3, Edge{5, 7})));
}

TEST_CASE("non-isomorphic graphs with equal degree sequences") {
  // The cube and the Mobius ladder on 8 vertices are both 3-regular.
  auto cube = hypercube_graph(3);
  std::vector<Edge> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
  auto mobius = build_graph(e, 8);
  CHECK_FALSE(are_isomorphic(cube, mobius));
  CHECK_FALSE(are_isomorphic(petersen_graph(), splice_chain(petersen_graph(), 3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_copies(cycle_graph(3), 2)));
}

TEST_CASE("agrees with the permutation oracle on all 6-vertex graphs") {
  auto all = generate_graphs(6);
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 11)
      CHECK(are_isomorphic(all[i], all[j]) == oracle::isomorphic(all[i], all[j]));
}
