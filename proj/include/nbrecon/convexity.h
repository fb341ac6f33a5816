#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbrecon/families.h"
#include "nbrecon/graph.h"

namespace nbrecon {

struct ConvexityCheck {
  bool convex = false;
  // When convex: one (outside vertex, private neighbor) pair per v ∉ S.
  std::vector<std::pair<int, int>> private_neighbors;
  // When not convex: the first outside vertex without a private neighbor.
  std::optional<int> violator;
};

// S is digitally convex when every v ∉ S has some x in N[v] ∖ N[S].
ConvexityCheck check_digitally_convex(const Graph& g, const VertexSet& s);
bool is_digitally_convex(const Graph& g, const VertexSet& s);

inline constexpr int kConvexitySweepCeiling = 20;

// Every digitally convex set of g (a 2^n sweep; n <= 20).
SetFamily digital_convexity(const Graph& g);

// Member-wise complement within the universe.
SetFamily complement_family(const SetFamily& f);

struct AxiomReport {
  bool ok = false;
  std::string violation;  // empty when ok
  std::optional<std::pair<VertexSet, VertexSet>> pair;
};

// {∅, V} ⊆ f and f closed under pairwise intersection.
AxiomReport check_convexity_axioms(const SetFamily& f);

}  // namespace nbrecon
