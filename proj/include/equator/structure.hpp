#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equator/bounds.hpp"
#include "equator/cycle.hpp"
#include "equator/graph.hpp"
#include "equator/isometry.hpp"

namespace equator {

/// Everything needed to decide whether a graph attains the equator order
/// bound: connected, q > 6k + 3 and n·g = q·M(delta, g).
struct EquatorialCertificate {
  bool equatorial = false;
  std::string reason;  // why not, when not
  int delta = 0;
  std::optional<int> girth;
  EquatorResult equator;
  std::optional<BoundReport> bound;
  std::optional<EquatorPartition> partition;
};

EquatorialCertificate certify_equatorial(const Graph& g, const DistanceMatrix& dm,
                                         const EquatorOptions& options = {});
EquatorialCertificate certify_equatorial(const Graph& g, const EquatorOptions& options = {});

/// Same as certify_equatorial but throws NotEquatorial with the reason.
EquatorialCertificate require_equatorial(const Graph& g, const DistanceMatrix& dm,
                                         const EquatorOptions& options = {});

/// Parts L_i = D_k(u_{i-k}) ∩ D_k(u_{i+k}). Refuses (NotAPartition) when
/// q <= 6k + 3 or when some vertex lies in no part or in two.
EquatorPartition induced_partition(const Graph& g, const DistanceMatrix& dm, const IsometricCycle& c);
EquatorPartition induced_partition(const Graph& g, const IsometricCycle& c);

/// Re-indexes by the rotation/reflection giving the lexicographically
/// least sequence of parts; the base cycle follows the same re-indexing.
EquatorPartition canonical_partition(const EquatorPartition& p);

struct StructureClause {
  std::string id;
  std::string statement;
  bool passed = true;
  std::vector<Vertex> counterexample;  // first failure, if any
};

struct StructureReport {
  std::vector<StructureClause> clauses;
  std::size_t cycles_checked = 0;
  std::size_t cycle_budget = 0;  // per starting vertex; 0 = unbounded

  bool all_passed() const;
  const StructureClause* find(std::string_view id) const;
};

struct StructureOptions {
  /// Isometric q-cycles are enumerated through each vertex of L_0, at most
  /// this many per vertex (0 = all).
  std::size_t cycles_per_vertex = 2000;
};

StructureReport verify_structure(const Graph& g, const EquatorPartition& p, const StructureOptions& options = {});

/// Computes the equator and partition first; a failure to partition is
/// reported as a failed "partition" clause instead of an exception.
StructureReport verify_structure(const Graph& g, const StructureOptions& options = {});

/// True iff all cycles induce the same partition, compared as unordered
/// families of vertex sets.
bool partition_uniqueness(const Graph& g, std::span<const IsometricCycle> cycles);

/// v -> (part index of v) is a homomorphism onto the looped q-cycle that
/// is the identity on the base cycle and hits every non-loop edge.
bool retraction_check(const Graph& g, const EquatorPartition& p);

enum class CharacterizedCase { Girth3, Girth4, Girth5Degree3 };

struct CharacterizationVerdict {
  bool accepted = false;
  CharacterizedCase which = CharacterizedCase::Girth3;
  int q = 0;
  int delta = 0;
  std::vector<int> pattern;  // part sizes over one period
  std::vector<std::string> failures;
};

std::string_view case_name(CharacterizedCase c);

/// Checks a graph against the known description of equatorial graphs of
/// girth 3, girth 4, or girth 5 and degree 3. A graph in range that is not
/// equatorial or breaks the description gets accepted = false. Throws
/// OutOfCharacterizedRange for other girths/degrees.
CharacterizationVerdict characterize(const Graph& g);

}  // namespace equator
