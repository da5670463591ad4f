#include <doctest.h>

#include "equator/bounds.hpp"
#include "equator/constructions.hpp"
#include "equator/error.hpp"
#include "equator/isometry.hpp"
#include "equator/isomorphism.hpp"
#include "equator/search.hpp"
#include "oracles.hpp"

using namespace equator;

TEST_CASE("generator counts every isomorphism class once") {
  const int all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(generate_graphs(n).size()) == all[n]);
    CHECK(static_cast<int>(generate_graphs(n, [](const Graph& g) { return is_connected(g); }).size()) ==
          connected[n]);
  }
}

TEST_CASE("generated graphs are canonical and pairwise non-isomorphic") {
  auto five = generate_graphs(5);
  for (const auto& g : five) CHECK(is_canonical(g));
  for (std::size_t i = 0; i < five.size(); ++i)
    for (std::size_t j = i + 1; j < five.size(); ++j) CHECK_FALSE(oracle::isomorphic(five[i], five[j]));
  CHECK_FALSE(is_canonical(build_graph({{1, 2}}, 3)));
  CHECK(is_canonical(build_graph({{0, 1}}, 3)));
}

TEST_CASE("smallest graph with girth 3 and equator 5 is the wheel") {
  auto r = min_order_search({3, 3, 5, 7, false});
  REQUIRE(r.min_order);
  CHECK(*r.min_order == 6);
  bool wheel = false;
  for (const auto& w : r.witnesses) {
    wheel = wheel || are_isomorphic(w, wheel_graph(5));
    CHECK(girth(w) == 3);
    CHECK(degree_profile(w).min_degree >= 3);
    CHECK(oracle::equator(w) == 5);
  }
  CHECK(wheel);
  CHECK_FALSE(r.exhausted);
  // Outside the regime the order bound fails: 6·3 < 5·M(3,3).
  CHECK_FALSE(equatorial_bound_check(6, 3, 3, 5).satisfied);
}

TEST_CASE("other small searches") {
  auto tri = min_order_search({2, 3, 3, 4, false});
  CHECK(tri.min_order == 3);
  auto k33 = min_order_search({3, 4, 4, 6, false});
  REQUIRE(k33.min_order);
  CHECK(*k33.min_order == 6);
  CHECK(are_isomorphic(k33.witnesses.at(0), complete_bipartite_graph(3, 3)));
  auto none = min_order_search({3, 5, 5, 9, false});
  CHECK_FALSE(none.min_order);
  CHECK(none.exhausted);
  auto pet = min_order_search({3, 5, 5, 10, true});
  REQUIRE(pet.min_order);
  CHECK(*pet.min_order == 10);
  CHECK(are_isomorphic(pet.witnesses.at(0), petersen_graph()));
}

TEST_CASE("witnesses are pairwise non-isomorphic") {
  auto r = min_order_search({2, 3, 4, 6, false});
  REQUIRE(r.min_order);
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < r.witnesses.size(); ++j)
      CHECK_FALSE(are_isomorphic(r.witnesses[i], r.witnesses[j]));
}

TEST_CASE("threads and resume give the same answer") {
  SearchSpec spec{3, 3, 5, 7, false};
  auto serial = min_order_search(spec);
  SearchOptions par;
  par.threads = 3;
  auto parallel = min_order_search(spec, par);
  CHECK(parallel.min_order == serial.min_order);
  CHECK(parallel.witnesses == serial.witnesses);

  std::vector<SearchFrontier> marks;
  SearchOptions watch;
  watch.on_checkpoint = [&](const SearchFrontier& f) { marks.push_back(f); };
  min_order_search(spec, watch);
  REQUIRE(marks.size() > 1);
  SearchOptions resume;
  resume.resume = marks[marks.size() / 2];
  auto resumed = min_order_search(spec, resume);
  CHECK(resumed.min_order == serial.min_order);
  CHECK(resumed.witnesses == serial.witnesses);
}

TEST_CASE("search parameter validation") {
  try {
    min_order_search({3, 3, 5, 20, false});
    FAIL("expected SpecTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpecTooLarge);
  }
  CHECK_THROWS_AS(min_order_search({3, 5, 4, 8, false}), Error);
}
