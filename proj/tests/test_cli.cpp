#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = 0;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(EQUATOR_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path workdir() {
  auto dir = fs::temp_directory_path() / "equator_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("construct then analyze reproduces the family invariants") {
  auto dir = workdir();
  auto base = (dir / "f3520").string();
  auto c = run("construct splice --delta 3 --girth 5 --j 4 --verify -o " + base);
  CHECK(c.status == 0);
  CHECK(c.out.find("verified") != std::string::npos);
  std::ifstream header(base + ".txt");
  std::string first;
  std::getline(header, first);
  CHECK(first.rfind("# equator ", 0) == 0);

  auto a = run("--json analyze --partition " + base + ".txt");
  REQUIRE(a.status == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["n"] == 40);
  CHECK(j["q"] == 20);
  CHECK(j["equatorial"] == true);
  CHECK(j["parts"].size() == 20);
  CHECK(j["parts"][2] == 4);

  auto g6 = run("--json analyze " + base + ".g6");
  CHECK(nlohmann::json::parse(g6.out)["q"] == 20);
}

TEST_CASE("every family round-trips at desk scale") {
  auto dir = workdir();
  const char* cases[] = {
      "brown --t 4",          "brown-chain --delta 3 --j 3",          "gadget11 --j 3",
      "catalog --delta 4 --girth 5", "layered --girth 3 --pattern 1,3,1 --q 12",
      "splice --delta 3 --girth 4 --j 3",
  };
  for (const char* c : cases) {
    CAPTURE(c);
    auto r = run(std::string("construct ") + c + " --verify -o " + (dir / "family").string());
    CHECK(r.status == 0);
  }
  auto base = (dir / "k").string();
  REQUIRE(run("construct splice --delta 3 --girth 4 --j 3 -o " + base).status == 0);
  CHECK(run("construct multiply --j 3 --verify --input " + base + ".txt -o " + base + "3").status == 0);
  CHECK(run("construct quotient --verify --input " + base + "3.txt -o " + base + "q").status == 0);
}

TEST_CASE("analyze the Petersen graph") {
  auto dir = workdir();
  auto base = (dir / "petersen").string();
  REQUIRE(run("construct catalog --kind moore --delta 3 --girth 5 -o " + base).status == 0);
  auto j = nlohmann::json::parse(run("--json analyze " + base + ".g6").out);
  CHECK(j["n"] == 10);
  CHECK(j["g"] == 5);
  CHECK(j["d"] == 2);
  CHECK(j["r"] == 2);
  CHECK(j["q"] == 5);
  CHECK(j["equatorial"] == false);
}

TEST_CASE("errors are reported with their kind") {
  auto dir = workdir();
  auto bad = dir / "bad.txt";
  std::ofstream(bad) << "3 2\n0 1\n3 x\n";
  auto r = run("analyze " + bad.string());
  CHECK(r.status == 2);
  CHECK(r.out.find("ParseError") != std::string::npos);
  CHECK(r.out.find("line 3") != std::string::npos);

  auto j2 = run("construct gadget11 --j 2");
  CHECK(j2.status == 2);
  CHECK(j2.out.find("InvalidJ") != std::string::npos);

  auto big = run("search --delta 3 --girth 3 --equator 5 --max-n 20");
  CHECK(big.status == 2);
  CHECK(big.out.find("SpecTooLarge") != std::string::npos);

  auto unknown = run("verify nonsense " + bad.string());
  CHECK(unknown.status == 2);
}

TEST_CASE("verify exit codes") {
  auto dir = workdir();
  auto f = (dir / "f").string();
  REQUIRE(run("construct splice --delta 3 --girth 5 --j 4 -o " + f).status == 0);
  CHECK(run("verify structure " + f + ".txt").status == 0);
  CHECK(run("verify uniqueness " + f + ".txt").status == 0);
  CHECK(run("verify retraction " + f + ".txt").status == 0);
  CHECK(run("verify characterize " + f + ".txt").status == 0);
  CHECK(run("verify k-degree " + f + ".txt").status == 0);

  auto brown = (dir / "brown4").string();
  REQUIRE(run("construct brown --t 4 -o " + brown).status == 0);
  CHECK(run("verify brown-properties " + brown + ".txt").status == 0);
  CHECK(run("verify brown-properties " + f + ".txt").status == 1);

  auto gadget = (dir / "gadget").string();
  REQUIRE(run("construct gadget11 --j 3 -o " + gadget).status == 0);
  CHECK(run("verify structure " + gadget + ".txt").status == 1);

  auto wheel = dir / "wheel.txt";
  std::ofstream(wheel) << "6 10\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 5\n2 5\n3 5\n4 5\n";
  auto lb = run("--json verify lower-bound " + wheel.string());
  CHECK(lb.status == 0);
  auto j = nlohmann::json::parse(lb.out);
  CHECK(j["report"]["moore"]["regime_ok"] == false);
}

TEST_CASE("search output and checkpoint") {
  auto dir = workdir();
  auto ckpt = dir / "search.json";
  fs::remove(ckpt);
  auto r = run("--json search --delta 3 --girth 3 --equator 5 --max-n 7 --checkpoint " + ckpt.string() +
               " --witness-dir " + (dir / "w").string());
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["min_order"] == 6);
  CHECK(j["exhausted"] == false);
  CHECK(fs::exists(ckpt));
  CHECK(fs::exists(dir / "w" / "witness_0.g6"));

  auto none = nlohmann::json::parse(run("--json search --delta 3 --girth 5 --equator 5 --max-n 9").out);
  CHECK(none["min_order"].is_null());
  CHECK(none["exhausted"] == true);
}
