#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbrecon/families.h"
#include "nbrecon/graph.h"

namespace nbrecon {

enum class SearchMode {
  // Stop once two realizations are known: enough to tell Unique from
  // Ambiguous.
  kFirst,
  // Collect up to `limit` realizations; flag truncation if more exist.
  kAll,
  // Run the search to completion, counting every realization and keeping up
  // to `limit` of them.
  kCount,
};

struct SearchOptions {
  SearchMode mode = SearchMode::kFirst;
  std::size_t limit = 16;
};

enum class Verdict { kUnique, kAmbiguous, kInfeasible };

const char* verdict_name(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct ReconstructionResult {
  Verdict verdict = Verdict::kInfeasible;
  // Unique: the graph. Ambiguous: pairwise distinct witnesses. Infeasible:
  // empty. Every graph here realizes the input exactly.
  std::vector<Graph> graphs;
  // More realizations exist than are listed in graphs.
  bool truncated = false;
  // Number of realizations, when the search established it exactly.
  std::optional<std::uint64_t> solution_count;
  std::string reason;  // why the input is infeasible
  SearchStats stats;

  bool unique() const { return verdict == Verdict::kUnique; }
};

// Partition of the universe by equality of closed neighborhoods.
struct EquivalenceClasses {
  int universe = 0;
  std::vector<VertexSet> blocks;    // ordered by representative
  std::vector<int> representative;  // minimum id of each block
  std::vector<int> class_of;        // vertex -> block index

  int size() const { return static_cast<int>(blocks.size()); }
};

EquivalenceClasses equivalence_classes(const SetFamily& gen, int universe);

// Maps each member A of gen to {i : block i ⊆ A} over the quotient universe
// {0..m-1}. nullopt when some member splits a block.
std::optional<SetFamily> quotient_family(const SetFamily& gen,
                                         const EquivalenceClasses& classes);

// Blows up quotient vertex i into a clique on classes.blocks[i], producing a
// graph on the original universe.
Graph expand_quotient(const Graph& quotient, const EquivalenceClasses& classes);

ReconstructionResult from_multiset(const NeighborhoodMultiset& m,
                                   const SearchOptions& options = {});

ReconstructionResult from_support(const SetFamily& f,
                                  const SearchOptions& options = {});

ReconstructionResult from_digital_convexity(const SetFamily& d,
                                            const SearchOptions& options = {});

enum class FamilyKind { kSupport, kConvexity };

bool realizes(const Graph& g, const NeighborhoodMultiset& m);
bool realizes(const Graph& g, const SetFamily& f, FamilyKind kind);

}  // namespace nbrecon
