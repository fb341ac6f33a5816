#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nbrecon/graph.h"

namespace nbrecon {

// Exhaustive enumeration runs up to this order by default; one more vertex
// needs an explicit opt-in.
inline constexpr int kEnumerationCeiling = 7;
inline constexpr int kDeepEnumerationCeiling = 8;

// Number of vertex pairs, i.e. bits in an edge mask.
int pair_count(int n);

// Bit k of the mask is the k-th pair in graph6 order: (0,1), (0,2), (1,2),
// (0,3), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

// Visits every labeled simple graph on {0..n-1} once, in edge-mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit,
                            bool allow_deep = false);
std::vector<Graph> enumerate_labeled_graphs(int n, bool allow_deep = false);

enum class CollisionKind { kClosedMultiset, kClosedSupport, kOpenMultiset };

const char* collision_kind_name(CollisionKind kind);
std::optional<CollisionKind> parse_collision_kind(const std::string& name);

struct CollisionGroup {
  // Sorted neighborhood masks packed one byte per vertex (n <= 8), so equal
  // fingerprints mean equal invariants.
  std::uint64_t fingerprint = 0;
  std::vector<Graph> members;  // edge-mask order
};

struct MiningOptions {
  bool allow_deep = false;
  int jobs = 1;
};

// Groups of at least two labeled graphs sharing the chosen invariant,
// ordered by fingerprint.
std::vector<CollisionGroup> find_collisions(int n, CollisionKind kind,
                                            const MiningOptions& options = {});

// The lexicographically least sigma with N_G[v] = N_H[sigma(v)] for all v
// (open neighborhoods when closed is false); nullopt when the neighborhood
// multisets differ.
std::optional<PermutationWitness> witness_permutation(const Graph& g, const Graph& h,
                                                      bool closed = true);

struct PairChecks {
  bool same_edge_count = false;
  bool orbits_are_cliques = false;
  bool edge_transit = false;  // both directions, edge by edge
  bool both_contain_c4 = false;

  bool all() const {
    return same_edge_count && orbits_are_cliques && edge_transit && both_contain_c4;
  }
};

// Checks the structural consequences of N[G] = N[H] for one pair.
PairChecks check_collision_pair(const Graph& g, const Graph& h,
                                const PermutationWitness& sigma);

struct CollisionReport {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t multiset_groups = 0;
  std::uint64_t multiset_pairs = 0;
  std::uint64_t support_groups = 0;
  std::uint64_t support_pairs = 0;
  std::uint64_t edge_count_violations = 0;
  std::uint64_t orbit_clique_violations = 0;
  std::uint64_t edge_transit_violations = 0;
  std::uint64_t c4_violations = 0;
  std::uint64_t witness_failures = 0;
  std::vector<std::string> violations;  // one line per failing pair

  bool ok() const { return violations.empty(); }
  std::string to_json() const;
};

// Runs every pair check over all closed-multiset collisions at order n, and
// the induced-C4 check over all closed-support collisions.
CollisionReport verify_collision_properties(int n, const MiningOptions& options = {});

}  // namespace nbrecon
