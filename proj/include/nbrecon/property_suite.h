#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nbrecon/graph.h"
#include "nbrecon/miner.h"

namespace nbrecon {

// G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

// A C4-free graph on n vertices, rejection-sampled. Half the draws are
// G(n, p) with p uniform in [0, 0.5); the rest blow random vertices of a
// smaller sparse graph up into cliques, which yields twin-rich graphs.
Graph random_c4_free_graph(int n, std::mt19937_64& rng);

struct PropertyCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

struct PropertySuiteReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyCheck> checks;
  bool collisions_ran = false;
  CollisionReport collisions;

  bool ok() const;
  std::string to_json() const;
};

struct PropertySuiteOptions {
  std::uint64_t seed = 1;
  // Random cases per sampled check when exhaustive coverage is too large.
  int samples = 200;
  MiningOptions mining;
};

inline constexpr int kPropertySuiteCeiling = 12;

// Reconstruction round-trips, the complement bridge between convex sets and
// neighborhood unions, generator reduction, union-basis uniqueness, and (for
// enumerable n) the collision checks of verify_collision_properties.
PropertySuiteReport run_property_suite(int n, const PropertySuiteOptions& options);

}  // namespace nbrecon
