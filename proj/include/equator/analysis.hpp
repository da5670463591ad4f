#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equator/bounds.hpp"
#include "equator/cycle.hpp"
#include "equator/graph.hpp"
#include "equator/isometry.hpp"
#include "equator/search.hpp"
#include "equator/structure.hpp"

namespace equator {

struct AnalysisReport {
  int n = 0;
  int m = 0;
  int delta = 0;
  int max_degree = 0;
  bool is_regular = false;
  bool connected = false;
  std::optional<int> girth;
  std::optional<int> diameter;  // absent when disconnected
  std::optional<int> radius;
  EquatorResult equator;
  std::optional<BoundReport> bound;
  bool equatorial = false;
  std::string reason;
  std::optional<EquatorPartition> partition;
};

AnalysisReport analyze(const Graph& g, const EquatorOptions& options = {});

/// Multi-line human summary.
std::string format_report(const AnalysisReport& r, bool with_parts);

nlohmann::json to_json(const AnalysisReport& r, bool with_parts);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const KDegreeReport& k);
nlohmann::json to_json(const StructureReport& s);
nlohmann::json to_json(const CharacterizationVerdict& v);
nlohmann::json to_json(const SearchSpec& s);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const SearchFrontier& f);
SearchFrontier frontier_from_json(const nlohmann::json& j);

}  // namespace equator
