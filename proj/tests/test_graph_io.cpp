#include <doctest.h>

#include <filesystem>

#include "equator/constructions.hpp"
#include "equator/error.hpp"
#include "equator/graph_io.hpp"

using namespace equator;

TEST_CASE("edge list round trip keeps comments out of the graph") {
  auto g = petersen_graph();
  auto text = to_edge_list(g, {"family: test"});
  CHECK(text.rfind("# family: test\n", 0) == 0);
  CHECK(parse_edge_list(text) == g);
  CHECK(parse_graph_text(text) == g);
}

TEST_CASE("graph6 matches known encodings") {
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
  auto big = hoffman_singleton_graph();
  CHECK(parse_graph6(to_graph6(big)) == big);
  auto huge = splice_chain(petersen_graph(), 7);  // 70 vertices, one-byte header still
  CHECK(parse_graph_text(to_graph6(huge)) == huge);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_edge_list("3 2\n0 1\n3 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), Error);
  CHECK_THROWS_AS(parse_graph6("C!"), Error);
}

TEST_CASE("files on disk") {
  auto dir = std::filesystem::temp_directory_path() / "equator_io_test";
  std::filesystem::create_directories(dir);
  auto g = heawood_graph();
  save_edge_list(dir / "h.txt", g, {"heawood"});
  save_graph6(dir / "h.g6", g);
  CHECK(load_graph(dir / "h.txt") == g);
  CHECK(load_graph(dir / "h.g6") == g);
  CHECK_THROWS_AS(load_graph(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
