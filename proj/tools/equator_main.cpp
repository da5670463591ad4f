// Command-line front end: analyze, construct, verify, search.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equator/analysis.hpp"
#include "equator/bounds.hpp"
#include "equator/constructions.hpp"
#include "equator/error.hpp"
#include "equator/finite_field.hpp"
#include "equator/graph_io.hpp"
#include "equator/isometry.hpp"
#include "equator/search.hpp"
#include "equator/structure.hpp"

namespace {

using namespace equator;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success / verdict passed, 1 verdict failed, 2 library error.
constexpr int kFail = 1;
constexpr int kError = 2;

int default_threads() {
  if (const char* env = std::getenv("EQUATOR_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
    }
  }
  return 1;
}

struct Common {
  int threads = default_threads();
  bool json = false;
};

void emit(const Common& common, const json& j, const std::string& text) {
  if (common.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::optional<int> cap;
  bool partition = false;
};

int run_analyze(const AnalyzeArgs& a, const Common& common) {
  Graph g = load_graph(a.input);
  auto report = analyze(g, EquatorOptions{a.cap, common.threads});
  emit(common, to_json(report, a.partition), format_report(report, a.partition));
  return 0;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int delta = 3;
  int girth = 5;
  int j = 3;
  int t = 2;
  int q = 12;
  std::string kind = "cage";
  std::string pattern;
  std::string input;
  std::string edge;
  std::string output;
  bool verify = false;
  std::optional<int> cap;
};

struct Expected {
  std::optional<std::int64_t> n;
  std::optional<int> delta;
  std::optional<int> girth;
  std::optional<int> q;
  bool c4_free = false;
};

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidParameters, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

int run_construct(const ConstructArgs& a, const Common& common) {
  Graph g;
  Expected want;
  json params;
  std::vector<std::string> notes;
  const auto& f = a.family;

  if (f == "splice") {
    auto seed = cage_catalog(a.delta, a.girth);
    std::optional<Edge> edge;
    if (!a.edge.empty()) {
      auto uv = parse_ints(a.edge);
      if (uv.size() != 2) throw Error(Errc::InvalidParameters, "--edge takes u,v");
      edge = Edge{uv[0], uv[1]};
    }
    g = splice_chain(seed, a.j, edge);
    params = {{"delta", a.delta}, {"girth", a.girth}, {"j", a.j}, {"seed", seed.name}};
    want = {static_cast<std::int64_t>(a.j) * seed.graph.order(), a.delta, a.girth, a.j * a.girth, false};
  } else if (f == "brown") {
    g = brown_graph(a.t);
    params = {{"t", a.t}};
    want = {static_cast<std::int64_t>(a.t) * a.t + a.t + 1, a.t, std::nullopt, std::nullopt, true};
  } else if (f == "brown-chain") {
    g = c4free_chain(a.delta, a.j);
    params = {{"delta", a.delta}, {"j", a.j}};
    want = {static_cast<std::int64_t>(a.j) * (a.delta * a.delta + 3 * a.delta + 2), a.delta, std::nullopt, 5 * a.j,
            true};
    notes.push_back("chain edges join y of copy i to z of copy i+1");
  } else if (f == "gadget11") {
    g = gadget11_chain(a.j);
    params = {{"j", a.j}};
    want = {11 * a.j, 3, std::nullopt, 6 * a.j, true};
  } else if (f == "layered") {
    auto pattern = parse_ints(a.pattern);
    g = layered_cycle(a.girth, pattern, a.q);
    params = {{"girth", a.girth}, {"pattern", pattern}, {"q", a.q}};
    std::int64_t per = 0;
    for (int s : pattern) per += s;
    want.n = per * (a.q / static_cast<int>(pattern.size()));
    want.girth = a.girth;
    want.q = a.q;
  } else if (f == "catalog") {
    auto entry = a.kind == "moore" ? moore_catalog(a.delta, a.girth) : cage_catalog(a.delta, a.girth);
    g = entry.graph;
    params = {{"kind", a.kind}, {"delta", a.delta}, {"girth", a.girth}, {"name", entry.name}};
    want = {std::nullopt, a.delta, a.girth, std::nullopt, false};
    if (entry.is_moore) want.n = moore_bound(a.delta, a.girth);
  } else if (f == "multiply" || f == "quotient") {
    if (a.input.empty()) throw Error(Errc::InvalidParameters, f + " needs --input");
    Graph in = load_graph(a.input);
    auto cert = require_equatorial(in, DistanceMatrix(in), EquatorOptions{std::nullopt, common.threads});
    if (f == "multiply") {
      g = multiply_equatorial(in, a.j);
      params = {{"input", a.input}, {"j", a.j}};
      want = {static_cast<std::int64_t>(a.j) * in.order(), cert.delta, *cert.girth, a.j * cert.equator.q, false};
    } else {
      g = quotient_to_moore(in);
      params = {{"input", a.input}};
      want = {moore_bound(cert.delta, *cert.girth), cert.delta, *cert.girth, std::nullopt, false};
    }
  } else {
    throw Error(Errc::InvalidParameters, "unknown family '" + f + "'");
  }

  std::vector<std::string> header{"equator " + std::string(kVersion), "family: " + f, "params: " + params.dump()};
  for (const auto& note : notes) header.push_back("note: " + note);

  json out{{"family", f}, {"params", params}};
  json expected;
  if (want.n) expected["n"] = *want.n;
  if (want.delta) expected["delta"] = *want.delta;
  if (want.girth) expected["g"] = *want.girth;
  if (want.q) expected["q"] = *want.q;
  out["expected"] = expected;

  std::ostringstream text;
  text << "constructed " << f << ": n = " << g.order() << ", m = " << g.size() << "\n";
  text << "expected: " << expected.dump() << "\n";

  bool ok = true;
  if (a.verify) {
    json actual;
    auto profile = degree_profile(g);
    auto gth = girth(g);
    actual["n"] = g.order();
    actual["delta"] = profile.min_degree;
    actual["g"] = gth ? json(*gth) : json(nullptr);
    if (want.q) {
      auto eq = compute_equator(g, DistanceMatrix(g), EquatorOptions{a.cap, common.threads});
      actual["q"] = eq.q;
      actual["search_capped"] = eq.search_capped;
      ok = ok && eq.q == *want.q;
    }
    if (want.c4_free) {
      actual["c4_free"] = is_c4_free(g);
      ok = ok && is_c4_free(g);
    }
    ok = ok && (!want.n || *want.n == g.order()) && (!want.delta || *want.delta == profile.min_degree) &&
         (!want.girth || gth == *want.girth);
    out["actual"] = actual;
    out["verified"] = ok;
    text << "actual:   " << actual.dump() << "\n" << (ok ? "verified" : "MISMATCH") << "\n";
  }

  if (a.output.empty()) {
    if (!common.json) std::cerr << text.str();
    std::cout << to_edge_list(g, header);
    return ok ? 0 : kFail;
  }
  const std::string txt = a.output + ".txt", g6 = a.output + ".g6";
  save_edge_list(txt, g, header);
  save_graph6(g6, g);
  out["files"] = {txt, g6};
  text << "wrote " << txt << " and " << g6 << "\n";
  emit(common, out, text.str());
  return ok ? 0 : kFail;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::vector<std::string> inputs;
  std::size_t cycles = 50;
};

struct Verdict {
  bool passed = false;
  json detail;
  std::string summary;
};

Verdict verify_one(const std::string& theorem, const Graph& g, const VerifyArgs& a, const Common& common) {
  Verdict v;
  const EquatorOptions eq_opts{std::nullopt, common.threads};
  if (theorem == "lower-bound") {
    auto report = analyze(g, eq_opts);
    if (!report.bound) {
      v.passed = true;
      v.summary = "not applicable (" + report.reason + ")";
      v.detail = {{"applicable", false}, {"reason", report.reason}};
      return v;
    }
    const auto& b = *report.bound;
    v.passed = !b.regime_ok || b.satisfied;
    v.detail = {{"moore", to_json(b)}};
    v.summary = "n·g = " + std::to_string(b.n * b.g) + ", q·M = " + std::to_string(b.lower_bound_numerator) +
                ", regime_ok = " + (b.regime_ok ? "true" : "false") + ", satisfied = " + (b.satisfied ? "true" : "false");
    if (is_c4_free(g) && report.delta >= 2) {
      auto c = c4free_bound_check(report.n, report.delta, report.equator.q);
      v.detail["c4_free"] = to_json(c);
      v.passed = v.passed && (!c.regime_ok || c.satisfied);
      v.summary += "; C4-free: 5n = " + std::to_string(5 * c.n) + ", q·D = " + std::to_string(c.lower_bound_numerator) +
                   ", regime_ok = " + (c.regime_ok ? "true" : "false");
    }
  } else if (theorem == "k-degree") {
    auto k = k_degree_report(g);
    v.passed = k.holds;
    v.detail = to_json(k);
    v.summary = "smallest k-disk " + std::to_string(k.min_disk) + " vs M = " + std::to_string(k.moore);
  } else if (theorem == "structure") {
    auto s = verify_structure(g);
    v.passed = s.all_passed();
    v.detail = to_json(s);
    for (const auto& c : s.clauses) v.summary += "\n  " + std::string(c.passed ? "pass " : "FAIL ") + c.id;
  } else if (theorem == "uniqueness") {
    DistanceMatrix dm(g);
    auto eq = compute_equator(g, dm, eq_opts);
    auto cycles = enumerate_isometric_cycles(g, dm, eq.q, {std::nullopt, a.cycles});
    v.passed = eq.q > 0 && partition_uniqueness(g, cycles);
    v.detail = {{"q", eq.q}, {"cycles", cycles.size()}, {"unique", v.passed}};
    v.summary = std::to_string(cycles.size()) + " isometric " + std::to_string(eq.q) + "-cycles, " +
                (v.passed ? "one partition" : "partitions differ or do not exist");
  } else if (theorem == "retraction") {
    auto cert = certify_equatorial(g, eq_opts);
    v.passed = cert.partition && retraction_check(g, *cert.partition);
    v.detail = {{"equatorial", cert.equatorial}, {"retraction", v.passed}};
    if (!cert.equatorial) v.detail["reason"] = cert.reason;
    v.summary = cert.equatorial ? (v.passed ? "retracts onto the base cycle" : "part map is not a retraction")
                                : "not equatorial (" + cert.reason + ")";
  } else if (theorem == "characterize") {
    auto c = characterize(g);
    v.passed = c.accepted;
    v.detail = to_json(c);
    v.summary = std::string(case_name(c.which)) + (c.accepted ? ": accepted" : ": rejected");
    for (const auto& f : c.failures) v.summary += "\n  " + f;
  } else if (theorem == "brown-properties") {
    auto b = brown_properties(g);
    v.passed = b.passed();
    v.detail = {{"t", b.t},
                {"order", b.order_ok},
                {"degrees", b.degrees_ok},
                {"c4_free", b.c4_free},
                {"absolute_triangle_free", b.absolute_triangle_free},
                {"unique_two_paths", b.unique_two_paths}};
    auto flag = [](bool x) { return x ? "pass" : "FAIL"; };
    v.summary = "t = " + std::to_string(b.t) + "\n  " + flag(b.order_ok) + " order\n  " + flag(b.degrees_ok) +
                " degrees\n  " + flag(b.c4_free) + " c4_free\n  " + flag(b.absolute_triangle_free) +
                " absolute_triangle_free\n  " + flag(b.unique_two_paths) + " unique_two_paths";
  } else {
    throw Error(Errc::UnknownTheorem, "'" + theorem +
                                          "' (expected lower-bound, k-degree, structure, uniqueness, retraction, "
                                          "characterize or brown-properties)");
  }
  return v;
}

int run_verify(const VerifyArgs& a, const Common& common) {
  json reports = json::array();
  std::string text;
  bool all = true;
  for (const auto& path : a.inputs) {
    Graph g = load_graph(path);
    auto v = verify_one(a.theorem, g, a, common);
    all = all && v.passed;
    reports.push_back({{"file", path}, {"theorem", a.theorem}, {"passed", v.passed}, {"report", v.detail}});
    text += path + ": " + (v.passed ? "PASS" : "FAIL") + (v.summary.empty() || v.summary[0] == '\n' ? "" : " ") + v.summary + "\n";
  }
  emit(common, a.inputs.size() == 1 ? reports[0] : reports, text);
  return all ? 0 : kFail;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  SearchSpec spec;
  std::string witness_dir;
  std::string checkpoint;
};

int run_search(const SearchArgs& a, const Common& common) {
  SearchOptions options;
  options.threads = common.threads;
  if (!a.checkpoint.empty()) {
    if (std::filesystem::exists(a.checkpoint)) {
      std::ifstream in(a.checkpoint);
      json saved;
      try {
        saved = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(Errc::ParseError, a.checkpoint + ": " + e.what());
      }
      if (saved.value("spec", json()) != to_json(a.spec))
        throw Error(Errc::InvalidParameters, "checkpoint " + a.checkpoint + " belongs to a different search");
      options.resume = frontier_from_json(saved.at("frontier"));
    }
    options.on_checkpoint = [&](const SearchFrontier& f) {
      std::ofstream out(a.checkpoint);
      out << json{{"spec", to_json(a.spec)}, {"frontier", to_json(f)}}.dump() << "\n";
    };
  }
  auto result = min_order_search(a.spec, options);
  json j = to_json(result);
  if (!a.witness_dir.empty() && !result.witnesses.empty()) {
    std::filesystem::create_directories(a.witness_dir);
    json files = json::array();
    for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
      auto path = std::filesystem::path(a.witness_dir) / ("witness_" + std::to_string(i) + ".g6");
      save_graph6(path, result.witnesses[i]);
      files.push_back(path.string());
    }
    j["files"] = files;
  }
  std::ostringstream text;
  if (result.min_order) {
    text << "min order " << *result.min_order << " with " << result.witnesses.size() << " witness(es):\n";
    for (const auto& w : result.witnesses) text << "  " << to_graph6(w) << "\n";
  } else {
    text << "no graph up to n = " << a.spec.n_max << " (exhausted)\n";
  }
  text << "nodes " << result.counters.nodes << ", canonical " << result.counters.canonical << ", candidates "
       << result.counters.candidates << "\n";
  emit(common, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equators, isometric cycles and equatorial graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: $EQUATOR_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", common.json, "Print JSON instead of text");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, equator and bound report for a graph file");
  analyze_cmd->add_option("input", analyze_args.input, "Edge-list or graph6 file")->required();
  analyze_cmd->add_option("--cap", analyze_args.cap, "Longest cycle length the equator search tries");
  analyze_cmd->add_flag("--partition", analyze_args.partition, "List the parts L_i");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Generate a graph family");
  construct_cmd
      ->add_option("family", construct_args.family,
                   "splice, brown, brown-chain, gadget11, layered, catalog, multiply or quotient")
      ->required();
  construct_cmd->add_option("--delta", construct_args.delta, "Degree");
  construct_cmd->add_option("--girth", construct_args.girth, "Girth");
  construct_cmd->add_option("--j", construct_args.j, "Number of copies");
  construct_cmd->add_option("--t", construct_args.t, "Field order for brown");
  construct_cmd->add_option("--q", construct_args.q, "Number of parts for layered");
  construct_cmd->add_option("--pattern", construct_args.pattern, "Part sizes for layered, e.g. 1,3,1");
  construct_cmd->add_option("--kind", construct_args.kind, "catalog: moore or cage")
      ->check(CLI::IsMember({"moore", "cage"}));
  construct_cmd->add_option("--input", construct_args.input, "Equatorial graph for multiply/quotient");
  construct_cmd->add_option("--edge", construct_args.edge, "splice: seed edge u,v to delete");
  construct_cmd->add_option("-o,--output", construct_args.output, "Write <output>.txt and <output>.g6");
  construct_cmd->add_flag("--verify", construct_args.verify, "Compute actual invariants and compare");
  construct_cmd->add_option("--cap", construct_args.cap, "Cap for the --verify equator search");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on graph files (exit 0 = pass)");
  verify_cmd->add_option("theorem", verify_args.theorem, "Theorem id")->required();
  verify_cmd->add_option("inputs", verify_args.inputs, "Graph files")->required();
  verify_cmd->add_option("--cycles", verify_args.cycles, "uniqueness: isometric cycles to compare");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Smallest graph with given min degree, girth and equator");
  search_cmd->add_option("--delta", search_args.spec.delta_min, "Minimum degree")->required();
  search_cmd->add_option("--girth", search_args.spec.g, "Girth")->required();
  search_cmd->add_option("--equator", search_args.spec.q, "Equator")->required();
  search_cmd->add_option("--max-n", search_args.spec.n_max, "Largest order to try (<= 12)")->required();
  search_cmd->add_flag("--regular", search_args.spec.require_regular, "Only regular graphs");
  search_cmd->add_option("--witness-dir", search_args.witness_dir, "Write witnesses as graph6 files here");
  search_cmd->add_option("--checkpoint", search_args.checkpoint, "Frontier file to resume from and update");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(analyze_args, common);
    if (*construct_cmd) return run_construct(construct_args, common);
    if (*verify_cmd) return run_verify(verify_args, common);
    if (*search_cmd) return run_search(search_args, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return 0;
}
