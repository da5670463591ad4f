#include "equator/analysis.hpp"

#include <sstream>

#include "equator/error.hpp"
#include "equator/graph_io.hpp"

namespace equator {

using nlohmann::json;

AnalysisReport analyze(const Graph& g, const EquatorOptions& options) {
  AnalysisReport r;
  r.n = g.order();
  r.m = g.size();
  auto profile = degree_profile(g);
  r.delta = profile.min_degree;
  r.max_degree = profile.max_degree;
  r.is_regular = profile.is_regular;
  DistanceMatrix dm(g);
  r.connected = r.n > 0 && dm.connected();
  if (r.connected) {
    auto e = diameter_and_radius(dm);
    r.diameter = e.diameter;
    r.radius = e.radius;
  }
  auto cert = certify_equatorial(g, dm, options);
  r.girth = girth(g);
  r.equator = cert.girth ? cert.equator : compute_equator(g, dm, options);
  r.bound = cert.bound;
  r.equatorial = cert.equatorial;
  r.reason = cert.reason;
  r.partition = cert.partition;
  return r;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

std::string format_report(const AnalysisReport& r, bool with_parts) {
  std::ostringstream os;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "n = " << r.n << ", m = " << r.m << ", delta = " << r.delta << (r.is_regular ? " (regular)" : "") << "\n";
  os << "girth = " << (r.girth ? std::to_string(*r.girth) : std::string("inf")) << ", diameter = " << opt(r.diameter)
     << ", radius = " << opt(r.radius) << (r.connected ? "" : " (disconnected)") << "\n";
  os << "equator = " << r.equator.q << (r.equator.search_capped ? " (search capped)" : "") << "\n";
  if (r.equator.witness) {
    std::vector<int> w(r.equator.witness->vertices.begin(), r.equator.witness->vertices.end());
    os << "witness = [" << join(w) << "]\n";
  }
  if (r.bound) {
    const auto& b = *r.bound;
    os << "bound: n·g = " << b.n * b.g << ", q·M = " << b.lower_bound_numerator << " (M = " << b.moore
       << "), regime " << (b.regime_ok ? "ok" : "not met") << ", " << (b.tight ? "tight" : "not tight") << "\n";
  }
  os << "equatorial = " << (r.equatorial ? "yes" : "no");
  if (!r.equatorial && !r.reason.empty()) os << " (" << r.reason << ")";
  os << "\n";
  if (r.partition) {
    os << "part sizes = [" << join(r.partition->sizes()) << "]\n";
    if (with_parts) {
      for (int i = 0; i < r.partition->q; ++i) {
        std::vector<int> p(r.partition->parts[i].begin(), r.partition->parts[i].end());
        os << "  L_" << i << " = {" << join(p) << "}\n";
      }
    }
  }
  return os.str();
}

json to_json(const BoundReport& b) {
  return json{{"n", b.n},
              {"delta", b.delta},
              {"g", b.g},
              {"k", b.k},
              {"q", b.q},
              {"moore", b.moore},
              {"lhs", b.n * b.g},
              {"rhs", b.lower_bound_numerator},
              {"satisfied", b.satisfied},
              {"tight", b.tight},
              {"regime_ok", b.regime_ok}};
}

json to_json(const AnalysisReport& r, bool with_parts) {
  json j{{"n", r.n},
         {"m", r.m},
         {"delta", r.delta},
         {"max_degree", r.max_degree},
         {"is_regular", r.is_regular},
         {"connected", r.connected},
         {"g", optional_json(r.girth)},
         {"d", optional_json(r.diameter)},
         {"r", optional_json(r.radius)},
         {"q", r.equator.q},
         {"search_capped", r.equator.search_capped},
         {"witness", r.equator.witness ? json(r.equator.witness->vertices) : json(nullptr)},
         {"bound", r.bound ? to_json(*r.bound) : json(nullptr)},
         {"equatorial", r.equatorial}};
  if (!r.equatorial) j["reason"] = r.reason;
  if (r.partition) {
    j["parts"] = r.partition->sizes();
    if (with_parts) j["partition"] = r.partition->parts;
  }
  return j;
}

json to_json(const KDegreeReport& k) {
  return json{{"holds", k.holds}, {"delta", k.delta}, {"g", k.g},
              {"k", k.k},         {"moore", k.moore}, {"min_disk", k.min_disk}};
}

json to_json(const StructureReport& s) {
  json clauses = json::array();
  for (const auto& c : s.clauses) {
    json e{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}};
    if (!c.passed) e["counterexample"] = c.counterexample;
    clauses.push_back(std::move(e));
  }
  return json{{"passed", s.all_passed()},
              {"clauses", clauses},
              {"cycles_checked", s.cycles_checked},
              {"cycle_budget_per_vertex", s.cycle_budget}};
}

json to_json(const CharacterizationVerdict& v) {
  return json{{"accepted", v.accepted}, {"case", std::string(case_name(v.which))},
              {"q", v.q},               {"delta", v.delta},
              {"pattern", v.pattern},   {"failures", v.failures}};
}

json to_json(const SearchSpec& s) {
  return json{{"delta_min", s.delta_min}, {"g", s.g}, {"q", s.q},
              {"n_max", s.n_max},         {"require_regular", s.require_regular}};
}

json to_json(const SearchResult& r) {
  json witnesses = json::array();
  for (const auto& g : r.witnesses) witnesses.push_back(to_graph6(g));
  return json{{"spec", to_json(r.spec)},
              {"min_order", optional_json(r.min_order)},
              {"witnesses", witnesses},
              {"exhausted", r.exhausted},
              {"nodes", {{"generated", r.counters.nodes},
                         {"canonical", r.counters.canonical},
                         {"candidates", r.counters.candidates}}},
              {"wall_ms", static_cast<std::int64_t>(r.wall_seconds * 1000)}};
}

json to_json(const SearchFrontier& f) {
  return json{{"n", f.n}, {"branches_done", f.branches_done}, {"witnesses", f.witnesses}};
}

SearchFrontier frontier_from_json(const json& j) {
  try {
    return SearchFrontier{j.at("n").get<int>(), j.at("branches_done").get<std::int64_t>(),
                          j.at("witnesses").get<std::vector<std::string>>()};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad search frontier: ") + e.what());
  }
}

}  // namespace equator
